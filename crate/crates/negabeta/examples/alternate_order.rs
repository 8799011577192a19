//! The alternate order: odd positions compare reversed.

use negabeta::order::{alt_compare, alt_compare_vs_phi_limit, prefix_context_flip, relation_name};
use negabeta::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [("(10)", "(01)"), ("1(0)", "(10)"), ("2", "2000"), ("(21)", "2(12)"), ("100(11)", "(100)")];
    for (a, b) in pairs {
        let o = alt_compare(&parse_word(a)?, &parse_word(b)?);
        let at = o.witness.map(|k| format!(" at k={k}")).unwrap_or_default();
        println!("{a:>8} vs {b:<8} {}{at}", relation_name(o.relation));
    }

    // prepending u flips the order when |u| is odd
    for len in 0..4 {
        println!("context flip for |u| = {len}: {}", prefix_context_flip(len));
    }

    for w in ["(10)", "(1)", "(100)", "10011100(10011)"] {
        let o = alt_compare_vs_phi_limit(&parse_word(w)?)?;
        println!("{w} vs φ^∞(1): {}", relation_name(o.relation));
    }
    Ok(())
}
