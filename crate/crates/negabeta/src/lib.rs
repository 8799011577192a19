//! Alternate-order Lyndon words, the Lyndon systems they generate and
//! negative-base expansions.
//!
//! Words are eventually periodic ([`word::Word`]) and compared in the
//! alternate order ([`order`]), where odd positions compare reversed. A
//! Lyndon word `d` defines a shift space whose language is counted exactly in
//! [`counting`]; its entropy `log β` and the digits of `(−β)`-expansions are
//! computed with exact enclosures in [`numeric`]. [`lyndon`] decides which
//! words are the expansion of the left endpoint `l_β = −β/(β+1)`.
//!
//! Each capability has a runnable example:
//!
//! | example | shows |
//! |---|---|
//! | `words` | literals, normal forms, `φ^n(1)` |
//! | `alternate_order` | comparisons and the threshold `φ^∞(1)` |
//! | `lyndon_classes` | classification, `d*`, Lyn intervals, admissibility |
//! | `counting` | `H_n`, enumeration, interval counts |
//! | `beta` | bases with certificates |
//! | `expansions` | `f_β`, `T_{−β}`, periodic expansions |
//! | `cylinders` | cylinder images tiling `[l_β, r_β]` |
//! | `identities` | generating function and ω polynomials |
//!
//! ```
//! use negabeta::lyndon::admissible;
//! use negabeta::numeric::{expand, BetaNumber};
//! use negabeta::word::parse_word;
//!
//! let d = parse_word("1(0)").unwrap();
//! let report = admissible(&d).unwrap();
//! assert!(report.admissible());
//! let e = expand(&BetaNumber::l_beta(), report.beta.as_ref().unwrap(), 10).unwrap();
//! assert_eq!(e.period.word(), Some(&d));
//! ```

pub mod acceptance;
pub mod cli;
pub mod counting;
pub mod error;
pub mod lyndon;
pub mod numeric;
pub mod order;
pub mod word;

pub use error::Error;
pub use word::{parse_word, Letter, Word};
