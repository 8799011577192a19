//! Real numbers carried as exact rational enclosures.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A real number known to lie in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionReal {
    lo: BigRational,
    hi: BigRational,
}

/// `p/q` with `q` omitted when it is 1.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `2^-bits`.
pub fn dyadic_width(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

impl PrecisionReal {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty enclosure");
        PrecisionReal { lo, hi }
    }

    pub fn exact(q: BigRational) -> Self {
        PrecisionReal { lo: q.clone(), hi: q }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    /// Sign if decided by the enclosure.
    pub fn sign(&self) -> Option<Ordering> {
        let z = BigRational::zero();
        if self.lo > z {
            Some(Ordering::Greater)
        } else if self.hi < z {
            Some(Ordering::Less)
        } else if self.is_exact() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Order of the enclosed reals if the enclosures decide it.
    pub fn compare(&self, other: &PrecisionReal) -> Option<Ordering> {
        (self - other).sign()
    }

    pub fn intersects(&self, other: &PrecisionReal) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Smallest enclosure of both.
    pub fn hull(&self, other: &PrecisionReal) -> PrecisionReal {
        PrecisionReal::new(self.lo.clone().min(other.lo.clone()), self.hi.clone().max(other.hi.clone()))
    }

    pub fn abs_max(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Reciprocal, or `None` if the enclosure contains zero.
    pub fn recip(&self) -> Option<PrecisionReal> {
        if self.contains_zero() {
            return None;
        }
        Some(PrecisionReal::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn checked_div(&self, other: &PrecisionReal) -> Option<PrecisionReal> {
        other.recip().map(|r| self * &r)
    }

    pub fn powi(&self, n: u32) -> PrecisionReal {
        if n == 0 {
            return PrecisionReal::from_int(1);
        }
        let a = num_traits::pow(self.lo.clone(), n as usize);
        let b = num_traits::pow(self.hi.clone(), n as usize);
        if n % 2 == 1 || !self.lo.is_negative() {
            PrecisionReal::new(a.clone().min(b.clone()), a.max(b))
        } else if !self.hi.is_positive() {
            PrecisionReal::new(b, a)
        } else {
            PrecisionReal::new(BigRational::zero(), a.max(b))
        }
    }

    /// Widens the endpoints to multiples of `2^-bits`, keeping numbers small.
    pub fn round_outward(&self, bits: u32) -> PrecisionReal {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        PrecisionReal { lo, hi }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &PrecisionReal {
    type Output = PrecisionReal;
    fn add(self, rhs: &PrecisionReal) -> PrecisionReal {
        PrecisionReal { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &PrecisionReal {
    type Output = PrecisionReal;
    fn sub(self, rhs: &PrecisionReal) -> PrecisionReal {
        PrecisionReal { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &PrecisionReal {
    type Output = PrecisionReal;
    fn neg(self) -> PrecisionReal {
        PrecisionReal { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Mul for &PrecisionReal {
    type Output = PrecisionReal;
    fn mul(self, rhs: &PrecisionReal) -> PrecisionReal {
        let cands = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = cands.iter().min().cloned().expect("four candidates");
        let hi = cands.iter().max().cloned().expect("four candidates");
        PrecisionReal { lo, hi }
    }
}

impl fmt::Display for PrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", fmt_rational(&self.lo), fmt_rational(&self.hi))
    }
}

impl Serialize for PrecisionReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PrecisionReal", 3)?;
        st.serialize_field("lo", &fmt_rational(&self.lo))?;
        st.serialize_field("hi", &fmt_rational(&self.hi))?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(a: (i64, i64), b: (i64, i64)) -> PrecisionReal {
        let (x, y) = (rational(a.0, a.1), rational(b.0, b.1));
        PrecisionReal::new(x.clone().min(y.clone()), x.max(y))
    }

    #[test]
    fn display_uses_fractions() {
        assert_eq!(PrecisionReal::from_int(2).to_string(), "[2,2]");
        assert_eq!(iv((-2, 3), (1, 3)).to_string(), "[-2/3,1/3]");
    }

    #[test]
    fn reciprocal_refuses_zero() {
        assert!(iv((-1, 2), (1, 2)).recip().is_none());
        assert_eq!(iv((2, 1), (4, 1)).recip().unwrap(), iv((1, 4), (1, 2)));
    }

    #[test]
    fn rounding_widens() {
        let x = PrecisionReal::exact(rational(1, 3));
        let r = x.round_outward(8);
        assert!(r.contains(&rational(1, 3)));
        assert!(r.width() <= dyadic_width(8));
    }

    proptest! {
        #[test]
        fn arithmetic_encloses(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, t in 0i64..=10, u in 0i64..=10) {
            let x = iv((a, 7), (b, 7));
            let y = iv((c, 5), (d, 5));
            let px = x.lo() + (x.width() * rational(t, 10));
            let py = y.lo() + (y.width() * rational(u, 10));
            prop_assert!((&x + &y).contains(&(&px + &py)));
            prop_assert!((&x - &y).contains(&(&px - &py)));
            prop_assert!((&x * &y).contains(&(&px * &py)));
            prop_assert!(x.powi(3).contains(&(&px * &px * &px)));
            prop_assert!(x.powi(2).contains(&(&px * &px)));
        }
    }
}
