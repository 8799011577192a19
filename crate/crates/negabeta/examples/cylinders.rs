//! Cylinder images tile [l_β, r_β].

use std::cmp::Ordering;

use negabeta::counting::enumerate_language;
use negabeta::numeric::{compute_beta, cylinder_image};
use negabeta::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_word("1(0)")?;
    let cert = compute_beta(&d)?;
    let words = enumerate_language(&d, 4, 1 << 16)?;
    let mut previous = None;
    for w in &words {
        let img = cylinder_image(w.preperiod(), &d, &cert)?;
        let lo = cert.enclose(&img.lower)?.to_f64();
        let hi = cert.enclose(&img.upper)?.to_f64();
        let joint = match &previous {
            Some(p) => match cert.sign_of(&(&img.lower - p))? {
                Ordering::Equal => "touches",
                Ordering::Greater => "gap",
                Ordering::Less => "overlap",
            },
            None => "",
        };
        println!("{w}  [{lo:+.6}, {hi:+.6}]  tails {} .. {}  {joint}", img.min_tail, img.max_tail);
        previous = Some(img.upper);
    }
    Ok(())
}
