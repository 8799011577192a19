//! H_n by recurrence, brute-force enumeration and interval counts.

use negabeta::counting::{count_interval, count_recurrence, enumerate_language, extremal_neighbors};
use negabeta::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_word("1(0)")?;
    let table = count_recurrence(&d, 12)?;
    let listed: Vec<String> = table.values.iter().map(|h| h.to_string()).collect();
    println!("H_n for {d}: {}", listed.join(" "));

    let words = enumerate_language(&d, 5, 1 << 20)?;
    println!("{} words of length 5, sorted:", words.len());
    for w in &words {
        print!("{w} ");
    }
    println!();

    let (a, b) = (&words[1], &words[words.len() - 2]);
    println!("Γ over [{a}, {b}] = {}", count_interval(a, b, &d)?);

    let (lo, hi) = extremal_neighbors(1, &parse_word("(21)")?, 6)?;
    println!("extremal neighbours at letter 1 for (21), n=6: {lo} {hi}");
    Ok(())
}
