//! The counting generating function, entropy limits and the ω polynomials.

use negabeta::numeric::interval::rational;
use negabeta::numeric::{check_generating_identity, check_omega_polynomial, entropy_limit_estimate, omega_polynomials};
use negabeta::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (word, n) in [("(10)", 20), ("(2)", 30), ("1(0)", 40)] {
        let e = entropy_limit_estimate(&parse_word(word)?, n)?;
        println!("H_{n}^(1/{n}) for {word}: {:.6}", e.to_f64());
    }

    let d = parse_word("1(0)")?;
    for terms in [10, 20, 40] {
        let r = check_generating_identity(&d, &rational(1, 4), terms)?;
        println!("residual at z=1/4 with {terms} terms: {:.3e}", r.to_f64());
    }

    for n in 0..4 {
        let (lhs, rhs) = omega_polynomials(n);
        println!("n={n}: {lhs}  ==  {rhs}  {}", check_omega_polynomial(n));
    }
    Ok(())
}
