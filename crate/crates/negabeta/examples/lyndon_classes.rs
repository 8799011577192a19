//! Lyndon classification, d*, the Lyn intervals and admissibility.

use negabeta::lyndon::{admissible, classify_lyndon, dstar, entropy_sign, in_lyn, lyn_bounds, LynMembership};
use negabeta::word::{parse_word, phi_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["(10)", "(01)", "100(11)", "(201)", "(1)"] {
        let d = parse_word(text)?;
        println!("{text:>8}: {:?}", classify_lyndon(&d));
    }

    let d = parse_word("(201)")?;
    println!("d* of {d} = {}", dstar(&d)?);
    let (min, max) = lyn_bounds(&parse_word("(21)")?)?;
    println!("Lyn interval around (21): [{min}, {max}]");
    if let LynMembership::Witness { witness } = in_lyn(&parse_word("(10)")?)? {
        println!("(10) lies in Lyn around {witness}");
    }

    for n in 0..4 {
        let w = phi_witness(n)?;
        println!("entropy of {w}: {:?}", entropy_sign(&w)?);
    }

    for text in ["(2)", "(10)", "(1)", "1(0)", "10(001)"] {
        let r = admissible(&parse_word(text)?)?;
        let beta = r.beta.as_ref().map(|c| format!("{:.8}", c.beta().to_f64())).unwrap_or_else(|| "-".into());
        println!(
            "{text:>8}: admissible={} shifts={} lyn={:?} threshold={} beta≈{beta}",
            r.admissible(),
            r.cond_a.holds,
            r.cond_b.holds,
            r.cond_c
        );
    }
    Ok(())
}
