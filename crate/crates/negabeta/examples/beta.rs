//! Bases from the series equation, with certificates.

use negabeta::numeric::{base_equation_residual, beta_equation, compute_beta, compute_beta_with, gamma_relation};
use negabeta::word::{parse_word, phi_companion, phi_power, phi_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["(10)", "1(0)", "100(11)", "(2)", "(201)"] {
        let d = parse_word(text)?;
        let c = compute_beta(&d)?;
        println!(
            "{text:>8}: β ≈ {:.15}  G = {}  residual ∋ 0: {}",
            c.beta().to_f64(),
            beta_equation(&d),
            base_equation_residual(&d, &c).is_some_and(|r| r.contains_zero())
        );
    }

    let sharp = compute_beta_with(&parse_word("1(0)")?, 200)?;
    println!("golden ratio to 200 bits: {}", sharp.beta());

    for n in 0..6 {
        let c = compute_beta(&phi_witness(n)?)?;
        let l = phi_power(n)?.len().max(phi_companion(n)?.len()) as u32;
        println!("γ_{n} ≈ {:.9}  γ^{l} − γ − 1 ∋ 0: {}", c.beta().to_f64(), gamma_relation(&c, l).contains_zero());
    }

    match compute_beta(&parse_word("(1)")?) {
        Ok(_) => println!("unexpected base for (1)"),
        Err(e) => println!("(1): {e}"),
    }
    Ok(())
}
