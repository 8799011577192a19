//! Integer polynomials with exact evaluation, gcds and Sturm chains.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::PrecisionReal;

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `c·x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c.into());
        Self::new(v)
    }

    /// `x + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_i64s(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `x^k`; the caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// `p(x)^n`.
    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divides by the content keeping signs.
    fn positive_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let (p, q) = (x.numer(), x.denom());
        let d = self.deg();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        // acc = Σ c_i p^i q^{d−i}
        BigRational::new(acc, num_traits::pow(q.clone(), d))
    }

    /// Sign at a rational point, computed without building the fraction.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Enclosure of the values over an interval.
    pub fn eval_interval(&self, x: &PrecisionReal) -> PrecisionReal {
        if x.is_exact() {
            return PrecisionReal::exact(self.eval(x.lo()));
        }
        if !x.lo().is_negative() {
            // Split into nonnegative and nonpositive parts, each monotone on [0, ∞).
            let pos = Self::new(
                self.coeffs.iter().map(|c| if c.is_positive() { c.clone() } else { BigInt::zero() }).collect(),
            );
            let neg =
                Self::new(self.coeffs.iter().map(|c| if c.is_negative() { -c } else { BigInt::zero() }).collect());
            let lo = pos.eval(x.lo()) - neg.eval(x.hi());
            let hi = pos.eval(x.hi()) - neg.eval(x.lo());
            return PrecisionReal::new(lo, hi);
        }
        self.coeffs.iter().rev().fold(PrecisionReal::zero(), |acc, c| {
            &(&acc * x) + &PrecisionReal::exact(BigRational::from_integer(c.clone()))
        })
    }

    /// Pseudo-remainder `r` with `m·self = q·divisor + r` for a positive integer `m`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> (IntPoly, BigInt) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let db = divisor.deg();
        let lc = divisor.leading();
        let mut r = self.clone();
        let mut mult = BigInt::one();
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let lr = r.leading();
            if lc.is_one() {
                r = &r - &divisor.shift_up(shift).scale(&lr);
            } else {
                let g = lr.gcd(&lc);
                let (a, b) = (&lc / &g, &lr / &g);
                let (a, b) = if a.is_negative() { (-a, -b) } else { (a, b) };
                r = &r.scale(&a) - &divisor.shift_up(shift).scale(&b);
                mult *= a;
            }
        }
        (r, mult)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.deg();
        let lc = divisor.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.deg().saturating_sub(db) + 1];
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let (c, rem) = r.leading().div_rem(&lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            r = &r - &divisor.shift_up(shift).scale(&c);
            q[shift] = c;
        }
        assert!(r.is_zero(), "inexact polynomial division");
        IntPoly::new(q)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Product of the distinct irreducible factors (primitive).
    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).primitive()
    }

    /// Sturm chain of a squarefree polynomial, scaled by positive factors only.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.positive_primitive(), self.derivative().positive_primitive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].deg() == 0 {
                break;
            }
            let (r, _) = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-&r).positive_primitive());
        }
        chain.retain(|p| !p.is_zero());
        chain
    }

    /// Integer value of `self` at `p/q`, scaled by `q^deg` (same sign as the value).
    pub fn homogeneous_at(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc
    }
}

/// Number of sign changes of a Sturm chain at `x`, zeros skipped.
pub fn sign_variations(chain: &[IntPoly], x: &BigRational) -> usize {
    let signs: Vec<Ordering> = chain.iter().map(|p| p.sign_at(x)).filter(|s| *s != Ordering::Equal).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in `(a, b]`.
pub fn count_roots(chain: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &IntPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPoly::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_and_eval() {
        let p = IntPoly::from_i64s(&[-1, -1, 1]);
        assert_eq!(p.to_string(), "x^2 - x - 1");
        assert_eq!(p.eval(&q(3, 2)), q(-1, 4));
        assert_eq!(p.sign_at(&q(2, 1)), Ordering::Greater);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = IntPoly::from_i64s(&[-2, -1, 1]); // (x−2)(x+1)
        let b = IntPoly::from_i64s(&[-2, 1]);
        let p = &(&a * &b) * &IntPoly::from_i64s(&[3, 0, 1]);
        assert_eq!(p.gcd(&a), a);
        assert_eq!(p.squarefree_part(), &a * &IntPoly::from_i64s(&[3, 0, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (x−1)(x−2)(x−3)
        let p = IntPoly::from_i64s(&[-6, 11, -6, 1]);
        let c = p.sturm_chain();
        assert_eq!(count_roots(&c, &q(0, 1), &q(4, 1)), 3);
        assert_eq!(count_roots(&c, &q(1, 1), &q(2, 1)), 1);
        assert_eq!(count_roots(&c, &q(3, 2), &q(5, 2)), 1);
        assert_eq!(count_roots(&c, &q(7, 2), &q(9, 1)), 0);
        let golden = IntPoly::from_i64s(&[-1, -1, 1]).sturm_chain();
        assert_eq!(count_roots(&golden, &q(-5, 1), &q(5, 1)), 2);
    }

    #[test]
    fn interval_eval_encloses() {
        let p = IntPoly::from_i64s(&[1, -3, 0, 2]);
        let x = PrecisionReal::new(q(1, 3), q(1, 2));
        let e = p.eval_interval(&x);
        for t in [q(1, 3), q(2, 5), q(1, 2)] {
            assert!(e.contains(&p.eval(&t)));
        }
    }

    proptest! {
        #[test]
        fn pseudo_rem_identity(a in prop::collection::vec(-9i64..9, 1..7), b in prop::collection::vec(-9i64..9, 1..4)) {
            let a = IntPoly::from_i64s(&a);
            let b = IntPoly::from_i64s(&b);
            prop_assume!(!b.is_zero());
            let (r, m) = a.pseudo_rem(&b);
            prop_assert!(m.is_positive());
            prop_assert!(r.is_zero() || r.deg() < b.deg());
            // m·a − r must be divisible by b
            let diff = &a.scale(&m) - &r;
            prop_assert_eq!(&diff.div_exact(&b) * &b, diff);
        }
    }
}
