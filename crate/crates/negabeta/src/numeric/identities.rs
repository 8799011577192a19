//! Numeric checks of the counting generating function and the ω polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::beta::{compute_beta, series_closed_form};
use super::interval::PrecisionReal;
use super::poly::IntPoly;
use crate::counting::{count_recurrence, nth_root_enclosure};
use crate::error::{Error, NumericError};
use crate::word::{phi_length, Word};

const ROOT_BITS: u32 = 64;

/// `H_n^{1/n}` as an enclosure.
pub fn entropy_limit_estimate(d: &Word, n: usize) -> Result<PrecisionReal, Error> {
    let table = count_recurrence(d, n)?;
    let h = table.get(n);
    let (lo, hi) = nth_root_enclosure(h, n.max(1) as u32, ROOT_BITS);
    let scale = BigInt::one() << ROOT_BITS;
    Ok(PrecisionReal::new(BigRational::new(lo, scale.clone()), BigRational::new(hi, scale)))
}

/// `Σ d_n (−z)^n` for a rational `z` with `|z| < 1`.
fn signed_series(d: &Word, z: &BigRational) -> BigRational {
    if z.is_zero() {
        return BigRational::zero();
    }
    let form = series_closed_form(d);
    let x = z.recip();
    form.numerator.eval(&x) / form.denominator.eval(&x)
}

/// `1/((1 − z)(1 + (1 + z) Σ d_n (−z)^n))`.
pub fn generating_closed_form(d: &Word, z: &BigRational) -> Result<BigRational, NumericError> {
    let one = BigRational::one();
    let den = (&one - z) * (&one + (&one + z) * signed_series(d, z));
    if den.is_zero() {
        return Err(NumericError::DivisionByZero);
    }
    Ok(den.recip())
}

/// `|Σ_{n ≤ N} H_n z^n − closed form|`, computed exactly.
pub fn check_generating_identity(d: &Word, z: &BigRational, big_n: usize) -> Result<PrecisionReal, Error> {
    let beta_hi = match compute_beta(d) {
        Ok(c) => c.beta().hi().clone(),
        Err(NumericError::NoSignChange { .. }) => BigRational::one(),
        Err(e) => return Err(e.into()),
    };
    if z.abs() * &beta_hi >= BigRational::one() {
        return Err(NumericError::OutsideDisk { z: z.to_string(), beta_hi: beta_hi.to_string() }.into());
    }
    let table = count_recurrence(d, big_n)?;
    let mut partial = BigRational::zero();
    let mut zp = BigRational::one();
    for h in &table.values {
        partial += &zp * BigRational::from_integer(h.clone());
        zp *= z;
    }
    let closed = generating_closed_form(d, z)?;
    Ok(PrecisionReal::exact((partial - closed).abs()))
}

/// `ω_n = ψ^n(2)` with `ψ(1) = 2`, `ψ(2) = 211`.
pub fn omega_word(n: usize) -> Vec<u16> {
    let mut w = vec![2u16];
    for _ in 0..n {
        w = w.iter().flat_map(|&a| if a == 1 { vec![2] } else { vec![2, 1, 1] }).collect();
    }
    w
}

/// Both sides of the ω identity: `1 + Σ a_k (−z)^k` and `Π_{k=−1}^{n−1} (1 − z^{|u_k|}) − z^{|u_n|}`.
pub fn omega_polynomials(n: usize) -> (IntPoly, IntPoly) {
    let mut lhs = vec![BigInt::one()];
    for (k, &a) in omega_word(n).iter().enumerate() {
        let c = BigInt::from(a);
        lhs.push(if (k + 1) % 2 == 0 { c } else { -c });
    }
    let len = |k: isize| if k < 0 { 1 } else { phi_length(k as usize) as usize };
    let mut rhs = IntPoly::one();
    for k in -1..n as isize {
        rhs = &rhs * &(&IntPoly::one() - &IntPoly::monomial(1, len(k)));
    }
    rhs = &rhs - &IntPoly::monomial(1, len(n as isize));
    (IntPoly::new(lhs), rhs)
}

pub fn check_omega_polynomial(n: usize) -> bool {
    let (lhs, rhs) = omega_polynomials(n);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::interval::rational;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn within(e: &PrecisionReal, target: f64, tol: f64) -> bool {
        (e.lo().clone() - BigRational::from_float(target).unwrap()).abs() < BigRational::from_float(tol).unwrap()
            && (e.hi().clone() - BigRational::from_float(target).unwrap()).abs() < BigRational::from_float(tol).unwrap()
    }

    #[test]
    fn entropy_limits() {
        assert!(within(&entropy_limit_estimate(&w("(10)"), 20).unwrap(), 2.0, 0.05));
        assert!(within(&entropy_limit_estimate(&w("(2)"), 30).unwrap(), 2.0, 0.15));
        assert!(within(&entropy_limit_estimate(&w("1(0)"), 40).unwrap(), 1.618, 0.05));
    }

    #[test]
    fn generating_identity() {
        let tiny = rational(1, 1_000_000_000);
        let r = check_generating_identity(&w("(10)"), &rational(1, 4), 40).unwrap();
        assert!(r.hi() < &tiny);
        let r = check_generating_identity(&w("(2)"), &rational(1, 5), 40).unwrap();
        assert!(r.hi() < &tiny);
        let r = check_generating_identity(&w("100(11)"), &rational(0, 1), 5).unwrap();
        assert!(r.is_exact() && r.hi().is_zero());
        assert!(check_generating_identity(&w("(10)"), &rational(1, 2), 5).is_err());
    }

    #[test]
    fn generating_residual_shrinks() {
        let d = w("1(0)");
        let z = rational(1, 4);
        let a = check_generating_identity(&d, &z, 10).unwrap();
        let b = check_generating_identity(&d, &z, 20).unwrap();
        assert!(b.hi() < a.hi());
    }

    #[test]
    fn omega_identity() {
        assert_eq!(omega_word(1), vec![2, 1, 1]);
        let (l, r) = omega_polynomials(1);
        assert_eq!(l, IntPoly::from_i64s(&[1, -2, 1, -1]));
        assert_eq!(l, r);
        for n in 0..=8 {
            assert!(check_omega_polynomial(n), "n = {n}");
        }
    }
}
