//! `f_β`, the map `T_{−β}` and `(−β)`-expansions.
//!
//! Orbit points are kept exactly as elements `N(β)/D(β)` of `Q(β)`. Digits are
//! floors decided by [`BetaCertificate::floor_of`], so points sitting exactly
//! on a digit boundary are resolved algebraically rather than by rounding.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::beta::{series_closed_form, BetaCertificate};
use super::field::BetaNumber;
use super::interval::PrecisionReal;
use crate::error::NumericError;
use crate::order::alt_compare;
use crate::word::{Letter, Word};

/// Largest rescaling exponent tried when bringing a point into `[l_β, r_β)`.
const MAX_RESCALE: usize = 4096;

/// `Σ w_n (−β)^{−n}` as an exact element of `Q(β)`.
///
/// Finite words contribute their finitely many terms only.
pub fn f_beta_exact(w: &Word) -> BetaNumber {
    series_closed_form(w).as_beta_number()
}

/// `f_β(w)` over an enclosure of β.
pub fn f_beta(w: &Word, beta: &PrecisionReal) -> Result<PrecisionReal, NumericError> {
    if beta.lo() <= &BigRational::one() {
        return Err(NumericError::BaseTooSmall(beta.to_string()));
    }
    f_beta_exact(w).eval(beta).ok_or(NumericError::DivisionByZero)
}

impl BetaCertificate {
    /// Rewrites `x` in a small equivalent form (a rational when β is rational).
    pub fn simplify(&self, x: &BetaNumber) -> BetaNumber {
        if self.beta().is_exact() {
            match x.eval_exact(self.beta().lo()) {
                Some(q) => BetaNumber::from_rational(&q),
                None => x.clone(),
            }
        } else {
            x.reduce(self.polynomial())
        }
    }

    /// Whether `l_β ≤ x < r_β`.
    pub fn in_domain(&self, x: &BetaNumber) -> Result<bool, NumericError> {
        Ok(self.sign_of(&(x - &BetaNumber::l_beta()))? != Ordering::Less
            && self.sign_of(&(&BetaNumber::r_beta() - x))? == Ordering::Greater)
    }
}

/// One step of `T_{−β}`: returns `⌊−βx − l_β⌋` and `−βx − digit`.
pub fn negabeta_step(x: &BetaNumber, cert: &BetaCertificate) -> Result<(Letter, BetaNumber), NumericError> {
    let v = &x.negabeta_map(&BigInt::from(0)) - &BetaNumber::l_beta();
    let k = cert.floor_of(&v)?;
    let digit = k.to_u16().ok_or_else(|| NumericError::DigitOverflow(k.to_string()))?;
    Ok((digit, cert.simplify(&x.negabeta_map(&k))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PeriodStatus {
    NotDetected,
    /// The orbit provably returned to an earlier point.
    Certified {
        word: Word,
    },
    /// Orbit enclosures coincided but equality could not be proved.
    Unverified {
        word: Word,
    },
}

impl PeriodStatus {
    pub fn word(&self) -> Option<&Word> {
        match self {
            PeriodStatus::NotDetected => None,
            PeriodStatus::Certified { word } | PeriodStatus::Unverified { word } => Some(word),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    /// Digits before the radix point (the rescaling exponent).
    pub integer_digits: usize,
    pub digits: Vec<Letter>,
    pub period: PeriodStatus,
}

/// Smallest `m ≥ 0` with `x/(−β)^m ∈ [l_β, r_β)` and the rescaled point.
pub fn rescale_into_domain(x: &BetaNumber, cert: &BetaCertificate) -> Result<(usize, BetaNumber), NumericError> {
    for m in 0..=MAX_RESCALE {
        let y = cert.simplify(&x.div(&BetaNumber::neg_beta_pow(m)));
        if cert.in_domain(&y)? {
            return Ok((m, y));
        }
    }
    Err(NumericError::OutOfRange(x.to_string()))
}

/// First `n` digits of `d(x, −β)`, with the period when the orbit closes.
pub fn expand(x: &BetaNumber, cert: &BetaCertificate, n: usize) -> Result<Expansion, NumericError> {
    let (integer_digits, start) = rescale_into_domain(x, cert)?;
    let mut digits = Vec::new();
    let mut points = vec![start];
    let mut enclosures = vec![cert.enclose(&points[0])?];
    let mut rational_index: HashMap<BigRational, usize> = HashMap::new();
    let exact_beta = cert.beta().is_exact();
    if exact_beta {
        rational_index.insert(enclosures[0].lo().clone(), 0);
    }
    let mut period = PeriodStatus::NotDetected;
    while digits.len() < n {
        let t = digits.len();
        let (digit, next) = negabeta_step(&points[t], cert)?;
        digits.push(digit);
        let e = cert.enclose(&next)?;
        let repeat = if exact_beta {
            rational_index.get(e.lo()).copied()
        } else {
            let mut hit = None;
            for (i, p) in points.iter().enumerate() {
                if !enclosures[i].intersects(&e) {
                    continue;
                }
                if !cert.is_certified() || cert.sign_of(&(&next - p))? == Ordering::Equal {
                    hit = Some(i);
                    break;
                }
            }
            hit
        };
        if let Some(i) = repeat {
            let word = Word::eventually_periodic(digits[..i].to_vec(), digits[i..].to_vec()).expect("nonempty period");
            digits = word.prefix(n);
            period =
                if cert.is_certified() { PeriodStatus::Certified { word } } else { PeriodStatus::Unverified { word } };
            break;
        }
        if exact_beta {
            rational_index.insert(e.lo().clone(), points.len());
        }
        points.push(next);
        enclosures.push(e);
    }
    Ok(Expansion { integer_digits, digits, period })
}

/// The image `f_β([x])` of the cylinder of a finite word `x` of the language of `d`.
#[derive(Clone, Debug)]
pub struct CylinderImage {
    pub word: Word,
    /// Smallest tail `t` (alternate order) with `x·t` in the system.
    pub min_tail: Word,
    /// Largest tail.
    pub max_tail: Word,
    pub lower: BetaNumber,
    pub upper: BetaNumber,
}

/// Endpoints of `{f_β(x·t)}` over admissible tails `t`.
///
/// A tail must satisfy `t ⪰ d` and `t ⪯ 0d`, and for every suffix of `x`
/// equal to `d_1 ⋯ d_m` also `d_1 ⋯ d_m t ⪰ d`, i.e. `t ⪰ σ^m(d)` for even
/// `m` and `t ⪯ σ^m(d)` for odd `m`. The extreme tails are therefore the
/// largest lower bound and the smallest upper bound.
pub fn cylinder_image(x: &[Letter], d: &Word, cert: &BetaCertificate) -> Result<CylinderImage, NumericError> {
    let d = d.to_infinite();
    let n = x.len();
    let dl = d.prefix(n);
    let mut lows = vec![d.clone()];
    let mut highs = vec![d.prepend(&[0])];
    for m in 1..=n {
        if x[n - m..] == dl[..m] {
            let s = d.shift(m);
            if m % 2 == 0 {
                lows.push(s)
            } else {
                highs.push(s)
            }
        }
    }
    let pick = |v: Vec<Word>, want: Ordering| {
        v.into_iter().reduce(|a, b| if alt_compare(&b, &a).relation == want { b } else { a }).expect("nonempty")
    };
    let min_tail = pick(lows, Ordering::Greater);
    let max_tail = pick(highs, Ordering::Less);
    let head = f_beta_exact(&Word::finite(x.to_vec()));
    let scale = BetaNumber::from_int(1).div(&BetaNumber::neg_beta_pow(n));
    let a = cert.simplify(&(&head + &(&scale * &f_beta_exact(&min_tail))));
    let b = cert.simplify(&(&head + &(&scale * &f_beta_exact(&max_tail))));
    let (lower, upper) = if cert.sign_of(&(&b - &a))? == Ordering::Less { (b, a) } else { (a, b) };
    Ok(CylinderImage { word: Word::finite(x.to_vec()), min_tail, max_tail, lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::beta::compute_beta;
    use crate::numeric::interval::rational;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn two() -> BetaCertificate {
        BetaCertificate::rational(rational(2, 1)).unwrap()
    }

    #[test]
    fn f_beta_values() {
        let b = PrecisionReal::from_int(2);
        assert_eq!(f_beta(&w("(2)"), &b).unwrap(), PrecisionReal::exact(rational(-2, 3)));
        assert_eq!(f_beta(&w("(0)"), &b).unwrap(), PrecisionReal::zero());
        assert_eq!(f_beta(&w("0(2)"), &b).unwrap(), PrecisionReal::exact(rational(1, 3)));
        assert!(f_beta(&w("(1)"), &PrecisionReal::from_int(1)).is_err());
    }

    #[test]
    fn steps() {
        let (k, next) = negabeta_step(&BetaNumber::from_rational(&rational(-2, 3)), &two()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(next, BetaNumber::from_rational(&rational(-2, 3)));
        let golden = compute_beta(&w("1(0)")).unwrap();
        let x = BetaNumber::from_int(-1).div(&BetaNumber::beta());
        let (k, next) = negabeta_step(&x, &golden).unwrap();
        assert_eq!(k, 1);
        assert_eq!(golden.sign_of(&next).unwrap(), Ordering::Equal);
        let (k, next) = negabeta_step(&BetaNumber::zero(), &golden).unwrap();
        assert_eq!((k, next.is_zero()), (0, true));
    }

    #[test]
    fn expansions_of_left_endpoint() {
        let e = expand(&BetaNumber::l_beta(), &two(), 10).unwrap();
        assert_eq!(e.period, PeriodStatus::Certified { word: w("(2)") });
        let golden = compute_beta(&w("1(0)")).unwrap();
        let e = expand(&BetaNumber::l_beta(), &golden, 10).unwrap();
        assert_eq!(e.period.word(), Some(&w("1(0)")));
        let e = expand(&BetaNumber::zero(), &golden, 5).unwrap();
        assert_eq!(e.period.word(), Some(&w("(0)")));
        assert_eq!(e.digits, vec![0; 5]);
    }

    #[test]
    fn rescaling_outside_domain() {
        let e = expand(&BetaNumber::from_int(3), &two(), 6).unwrap();
        assert!(e.integer_digits >= 1);
        // value check: Σ digits · (−2)^{m−i} = 3
        let m = e.integer_digits as i32;
        let word = e.period.word().unwrap().clone();
        let mut v = BigRational::from_integer(0.into());
        for i in 1..200usize {
            let p = m - i as i32;
            let base = BigRational::from_integer((-2).into());
            let t =
                if p >= 0 { num_traits::pow(base, p as usize) } else { num_traits::pow(base.recip(), (-p) as usize) };
            v += t * BigRational::from_integer(word.letter_at(i).into());
        }
        assert!((v - rational(3, 1)).abs() < rational(1, 1 << 30));
    }

    #[test]
    fn cylinders_for_base_two() {
        let d = w("(2)");
        let c = two();
        let img = cylinder_image(&[2], &d, &c).unwrap();
        assert_eq!(img.lower.eval_exact(&rational(2, 1)).unwrap(), rational(-2, 3));
        let img = cylinder_image(&[0], &d, &c).unwrap();
        assert_eq!(img.upper.eval_exact(&rational(2, 1)).unwrap(), rational(1, 3));
    }

    use num_traits::Signed;
}
