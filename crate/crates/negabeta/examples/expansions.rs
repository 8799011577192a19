//! f_β, the map T_{−β} and (−β)-expansions.

use negabeta::numeric::interval::rational;
use negabeta::numeric::{compute_beta, expand, f_beta, negabeta_step, BetaCertificate, BetaNumber};
use negabeta::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let two = BetaCertificate::rational(rational(2, 1))?;
    println!("f_2((2)) = {}", f_beta(&parse_word("(2)")?, two.beta())?);
    println!("f_2(0(2)) = {}", f_beta(&parse_word("0(2)")?, two.beta())?);

    let (digit, next) = negabeta_step(&BetaNumber::from_rational(&rational(-2, 3)), &two)?;
    println!("T_(-2)(-2/3): digit {digit}, next {}", next.eval_exact(&rational(2, 1)).unwrap());

    for word in ["(2)", "1(0)", "100(11)", "(21)"] {
        let c = compute_beta(&parse_word(word)?)?;
        let e = expand(&BetaNumber::l_beta(), &c, 16)?;
        let shown = e.period.word().map(|w| w.to_string()).unwrap_or_else(|| "no period".into());
        println!("β from {word:>8}: d(l_β) = {shown}");
    }

    let e = expand(&BetaNumber::from_rational(&rational(7, 3)), &two, 12)?;
    let word = e.period.word().expect("rational base");
    println!("7/3 in base −2: {} integer digits, digits {word}", e.integer_digits);
    Ok(())
}
