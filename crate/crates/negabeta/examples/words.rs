//! Parsing, normal forms and the morphism 0 → 1, 1 → 100.

use negabeta::word::{parse_word, phi_companion, phi_length, phi_limit_prefix, phi_power, thue_morse_runlengths, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["(10)", "1(01)", "21(2121)", "12,3,(0)", "ε"] {
        let w = parse_word(text)?;
        println!("{text:>10} -> {w:<8} json {}", serde_json::to_string(&w)?);
    }

    let d: Word = "100(11)".parse()?;
    println!("first 12 letters of {d}: {:?}", d.prefix(12));
    println!("shift by 3: {}", d.shift(3));

    for n in 0..6 {
        println!("u_{n} = {} (length {}), v_{n} = {}", phi_power(n)?, phi_length(n), phi_companion(n)?);
    }
    let limit: String = phi_limit_prefix(30)?.iter().map(|l| l.to_string()).collect();
    println!("φ^∞(1) = {limit}…");
    println!("Thue–Morse run lengths: {:?}", thue_morse_runlengths(12));
    Ok(())
}
