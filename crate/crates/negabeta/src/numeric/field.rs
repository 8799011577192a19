//! Exact numbers of the form `N(β)/D(β)` with integer polynomials `N`, `D`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::PrecisionReal;
use super::poly::IntPoly;

/// A rational function of β, evaluated lazily against a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaNumber {
    num: IntPoly,
    den: IntPoly,
}

impl BetaNumber {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        BetaNumber { num, den }.normalized()
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::new(IntPoly::constant(q.numer().clone()), IntPoly::constant(q.denom().clone()))
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(IntPoly::constant(n), IntPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// β itself.
    pub fn beta() -> Self {
        Self::new(IntPoly::monomial(1, 1), IntPoly::one())
    }

    /// `l_β = −β/(β+1)`.
    pub fn l_beta() -> Self {
        Self::new(IntPoly::monomial(-1, 1), IntPoly::linear(1))
    }

    /// `r_β = 1/(β+1)`.
    pub fn r_beta() -> Self {
        Self::new(IntPoly::one(), IntPoly::linear(1))
    }

    /// `(−β)^n`.
    pub fn neg_beta_pow(n: usize) -> Self {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        Self::new(IntPoly::monomial(sign, n), IntPoly::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return self;
        }
        let v = self.num.valuation().min(self.den.valuation());
        if v > 0 {
            self.num = self.num.shift_down(v);
            self.den = self.den.shift_down(v);
        }
        let mut g = self.num.content().gcd(&self.den.content());
        if self.den.leading().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.num = IntPoly::new(self.num.coeffs().iter().map(|c| c / &g).collect());
            self.den = IntPoly::new(self.den.coeffs().iter().map(|c| c / &g).collect());
        }
        self
    }

    /// Quotient; the caller guarantees the divisor is nonzero at β.
    pub fn div(&self, rhs: &BetaNumber) -> BetaNumber {
        BetaNumber::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Same value at any root of `modulus`, with numerator and denominator reduced.
    pub fn reduce(&self, modulus: &IntPoly) -> BetaNumber {
        if modulus.deg() == 0 {
            return self.clone();
        }
        let (n, mn) = self.num.pseudo_rem(modulus);
        let (d, md) = self.den.pseudo_rem(modulus);
        // n = mn·num, d = md·den at the root.
        BetaNumber::new(n.scale(&md), d.scale(&mn))
    }

    /// Enclosure at an enclosure of β, or `None` if the denominator may vanish.
    pub fn eval(&self, beta: &PrecisionReal) -> Option<PrecisionReal> {
        let n = self.num.eval_interval(beta);
        let d = self.den.eval_interval(beta);
        n.checked_div(&d)
    }

    /// Exact value at a rational β.
    pub fn eval_exact(&self, beta: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(beta);
        (!d.is_zero()).then(|| self.num.eval(beta) / d)
    }

    /// `−β·self − k`.
    pub fn negabeta_map(&self, k: &BigInt) -> BetaNumber {
        let minus_x = IntPoly::monomial(-1, 1);
        BetaNumber::new(&(&minus_x * &self.num) - &self.den.scale(k), self.den.clone())
    }
}

impl Add for &BetaNumber {
    type Output = BetaNumber;
    fn add(self, rhs: &BetaNumber) -> BetaNumber {
        if self.den == rhs.den {
            return BetaNumber::new(&self.num + &rhs.num, self.den.clone());
        }
        BetaNumber::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &BetaNumber {
    type Output = BetaNumber;
    fn sub(self, rhs: &BetaNumber) -> BetaNumber {
        self + &(-rhs)
    }
}

impl Neg for &BetaNumber {
    type Output = BetaNumber;
    fn neg(self) -> BetaNumber {
        BetaNumber { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &BetaNumber {
    type Output = BetaNumber;
    fn mul(self, rhs: &BetaNumber) -> BetaNumber {
        BetaNumber::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for BetaNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num.to_string().replace('x', "β"))
        } else {
            write!(f, "({})/({})", self.num.to_string().replace('x', "β"), self.den.to_string().replace('x', "β"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::interval::rational;

    #[test]
    fn endpoints_at_two() {
        let two = rational(2, 1);
        assert_eq!(BetaNumber::l_beta().eval_exact(&two).unwrap(), rational(-2, 3));
        assert_eq!(BetaNumber::r_beta().eval_exact(&two).unwrap(), rational(1, 3));
        let span = &BetaNumber::r_beta() - &BetaNumber::l_beta();
        assert_eq!(span.eval_exact(&two).unwrap(), rational(1, 1));
    }

    #[test]
    fn reduction_keeps_value() {
        // β² = β + 1
        let m = IntPoly::from_i64s(&[-1, -1, 1]);
        let x = BetaNumber::new(IntPoly::from_i64s(&[1, 2, 3, 4]), IntPoly::from_i64s(&[2, 0, 1]));
        let y = x.reduce(&m);
        assert!(y.numerator().deg() < 2 && y.denominator().deg() < 2);
        let golden = PrecisionReal::new(rational(161803, 100000), rational(161804, 100000));
        assert!(x.eval(&golden).unwrap().intersects(&y.eval(&golden).unwrap()));
    }

    #[test]
    fn negabeta_map_is_affine() {
        let two = rational(2, 1);
        let l = BetaNumber::l_beta();
        let t = l.negabeta_map(&BigInt::from(2));
        assert_eq!(t.eval_exact(&two).unwrap(), rational(-2, 3));
    }
}
