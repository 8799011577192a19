//! The base β attached to a Lyndon word, with a root certificate.
//!
//! For `d = pre·per^∞` with `a = |pre|`, `b = |per|`, the series
//! `Σ d_n (−x)^{−n}` equals `P(x)/Q(x)` with `Q = x^a (x^b − (−1)^b)`.
//! β is the largest real root of `G = x·Q + (x+1)·P`, i.e. of
//! `x/(x+1) + P/Q = 0`. `Q > 0` on `(1, ∞)`, so `G` is positive above β and
//! no sign bookkeeping is needed. `G` is monic.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::field::BetaNumber;
use super::interval::{dyadic_width, fmt_rational, PrecisionReal};
use super::poly::{count_roots, IntPoly};
use crate::error::NumericError;
use crate::word::Word;

pub const DEFAULT_PRECISION_BITS: u32 = 64;
/// Refinement budget before a digit boundary is declared ambiguous.
pub const REFINE_BUDGET_BITS: u32 = 4096;
/// Largest certificate degree for which exact algebra (Sturm, gcd) is used.
pub const EXACT_DEGREE_LIMIT: usize = 16;
const MAX_BITS: u32 = 1 << 16;
const GRID_BITS: u32 = 8;
const NEAR_ONE_DEPTH: u32 = 256;

/// `Σ_{n≥1} d_n (−x)^{−n} = numerator / denominator` for `|x| > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesForm {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

impl SeriesForm {
    /// Equality as rational functions.
    pub fn same_function(&self, other: &SeriesForm) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn as_beta_number(&self) -> BetaNumber {
        BetaNumber::new(self.numerator.clone(), self.denominator.clone())
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn series_closed_form(d: &Word) -> SeriesForm {
    let pre = d.preperiod();
    let a = pre.len();
    let finite = d.period().iter().all(|&l| l == 0);
    if finite {
        let num = (1..=a).fold(IntPoly::zero(), |acc, i| &acc + &IntPoly::monomial(sign(i) * pre[i - 1] as i64, a - i));
        return SeriesForm { numerator: num, denominator: IntPoly::monomial(1, a) };
    }
    let per = d.period();
    let b = per.len();
    let mut num = IntPoly::zero();
    for i in 1..=a {
        let c = sign(i) * pre[i - 1] as i64;
        num = &num + &IntPoly::monomial(c, a + b - i);
        num = &num - &IntPoly::monomial(sign(b) * c, a - i);
    }
    for j in 1..=b {
        num = &num + &IntPoly::monomial(sign(a + j) * per[j - 1] as i64, b - j);
    }
    let den = &IntPoly::monomial(1, a) * &(&IntPoly::monomial(1, b) - &IntPoly::constant(sign(b)));
    let v = num.valuation().min(den.valuation());
    SeriesForm { numerator: num.shift_down(v), denominator: den.shift_down(v) }
}

/// `G(x) = x·Q(x) + (x+1)·P(x)` with powers of `x` removed.
pub fn beta_equation(d: &Word) -> IntPoly {
    let s = series_closed_form(d);
    let g = &s.denominator.shift_up(1) + &(&IntPoly::linear(1) * &s.numerator);
    g.shift_down(g.valuation())
}

#[derive(Clone, Debug, Serialize)]
pub struct Bracket {
    pub sign_lo: i8,
    pub sign_hi: i8,
}

#[derive(Clone, Debug)]
struct Isolation {
    squarefree: IntPoly,
    chain: Vec<IntPoly>,
}

/// An enclosure of β together with a polynomial that changes sign across it.
#[derive(Clone, Debug)]
pub struct BetaCertificate {
    beta: PrecisionReal,
    polynomial: IntPoly,
    equation: IntPoly,
    bracket: Bracket,
    isolation: Option<Isolation>,
}

fn ord_sign(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl BetaCertificate {
    /// Certificate for a rational base `q > 1`.
    pub fn rational(q: BigRational) -> Result<Self, NumericError> {
        if q <= BigRational::one() {
            return Err(NumericError::BaseTooSmall(fmt_rational(&q)));
        }
        let poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        Ok(BetaCertificate {
            beta: PrecisionReal::exact(q),
            polynomial: poly.clone(),
            equation: poly.clone(),
            bracket: Bracket { sign_lo: 0, sign_hi: 0 },
            isolation: Some(Isolation { squarefree: poly.clone(), chain: poly.sturm_chain() }),
        })
    }

    pub fn beta(&self) -> &PrecisionReal {
        &self.beta
    }

    /// Polynomial changing sign across the enclosure.
    pub fn polynomial(&self) -> &IntPoly {
        &self.polynomial
    }

    /// The cleared form of the base equation the root was taken from.
    pub fn equation(&self) -> &IntPoly {
        &self.equation
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    /// True when equalities in `Q(β)` can be decided exactly.
    pub fn is_certified(&self) -> bool {
        self.beta.is_exact() || self.isolation.is_some()
    }

    pub fn width_bits(&self) -> Option<u32> {
        if self.beta.is_exact() {
            return None;
        }
        // w = p/q < 2^(bits(p) − bits(q) + 1)
        let w = self.beta.width();
        let (p, q) = (w.numer().bits(), w.denom().bits());
        Some(q.saturating_sub(p + 1).min(MAX_BITS as u64) as u32)
    }

    fn bisect_once(&mut self) {
        let mid = self.beta.midpoint();
        let (lo, hi) = (self.beta.lo().clone(), self.beta.hi().clone());
        match &self.isolation {
            Some(iso) => {
                if iso.squarefree.sign_at(&mid) == Ordering::Equal {
                    self.beta = PrecisionReal::exact(mid);
                } else if count_roots(&iso.chain, &mid, &hi) >= 1 {
                    self.beta = PrecisionReal::new(mid, hi);
                } else {
                    self.beta = PrecisionReal::new(lo, mid);
                }
            }
            None => match ord_sign(self.polynomial.sign_at(&mid)) {
                0 => self.beta = PrecisionReal::exact(mid),
                s if s == self.bracket.sign_hi => self.beta = PrecisionReal::new(lo, mid),
                _ => self.beta = PrecisionReal::new(mid, hi),
            },
        }
        if self.beta.is_exact() {
            self.bracket = Bracket { sign_lo: 0, sign_hi: 0 };
        }
    }

    fn isolated(&self) -> bool {
        match &self.isolation {
            None => true,
            Some(iso) => {
                self.beta.is_exact()
                    || (count_roots(&iso.chain, self.beta.lo(), self.beta.hi()) == 1
                        && iso.squarefree.sign_at(self.beta.lo()) != Ordering::Equal)
            }
        }
    }

    /// Narrows the enclosure to width `2^-bits`.
    pub fn refined(&self, bits: u32) -> Result<BetaCertificate, NumericError> {
        if bits > MAX_BITS {
            return Err(NumericError::PrecisionUnattainable { bits });
        }
        let mut c = self.clone();
        let target = dyadic_width(bits);
        while !c.beta.is_exact() && (c.beta.width() > target || !c.isolated()) {
            c.bisect_once();
        }
        Ok(c)
    }

    /// Whether `p(β) = 0`, when this can be decided exactly.
    pub fn vanishes(&self, p: &IntPoly) -> Option<bool> {
        if p.is_zero() {
            return Some(true);
        }
        if self.beta.is_exact() {
            return Some(p.sign_at(self.beta.lo()) == Ordering::Equal);
        }
        let iso = self.isolation.as_ref()?;
        let g = p.gcd(&iso.squarefree);
        if g.deg() == 0 {
            return Some(false);
        }
        Some(g.sign_at(self.beta.lo()) != g.sign_at(self.beta.hi()))
    }

    /// Enclosure of `x` at β, refining until the denominator is bounded away from 0.
    pub fn enclose(&self, x: &BetaNumber) -> Result<PrecisionReal, NumericError> {
        let mut c = self.clone();
        let mut bits = self.width_bits().unwrap_or(0).max(DEFAULT_PRECISION_BITS);
        loop {
            if let Some(e) = x.eval(&c.beta) {
                return Ok(e);
            }
            bits *= 2;
            if bits > REFINE_BUDGET_BITS {
                return Err(NumericError::DivisionByZero);
            }
            c = c.refined(bits)?;
        }
    }

    /// Exact sign of `x` at β (exact or refined up to the budget).
    pub fn sign_of(&self, x: &BetaNumber) -> Result<Ordering, NumericError> {
        if x.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(true) = self.vanishes(x.numerator()) {
            return Ok(Ordering::Equal);
        }
        let mut c = self.clone();
        let mut bits = self.width_bits().unwrap_or(0).max(DEFAULT_PRECISION_BITS);
        loop {
            if let Some(s) = x.eval(&c.beta).and_then(|e| e.sign()) {
                return Ok(s);
            }
            bits *= 2;
            if bits > REFINE_BUDGET_BITS {
                return Err(NumericError::BoundaryAmbiguity { boundary: x.to_string() });
            }
            c = c.refined(bits)?;
        }
    }

    /// `⌊x⌋` at β.
    pub fn floor_of(&self, x: &BetaNumber) -> Result<BigInt, NumericError> {
        let e = self.enclose(x)?;
        let lo = e.lo().floor().to_integer();
        let hi = e.hi().floor().to_integer();
        let mut k = hi;
        while k > lo {
            let diff = x - &BetaNumber::from_rational(&BigRational::from_integer(k.clone()));
            if self.sign_of(&diff)? != Ordering::Less {
                return Ok(k);
            }
            k -= 1;
        }
        Ok(lo)
    }
}

impl Serialize for BetaCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BetaCertificate", 5)?;
        st.serialize_field("beta", &self.beta)?;
        st.serialize_field("polynomial", &self.polynomial.to_string())?;
        st.serialize_field("equation", &self.equation.to_string())?;
        st.serialize_field("bracket", &self.bracket)?;
        st.serialize_field("certified", &self.is_certified())?;
        st.end()
    }
}

/// β for `d` with the default enclosure width.
pub fn compute_beta(d: &Word) -> Result<BetaCertificate, NumericError> {
    compute_beta_with(d, DEFAULT_PRECISION_BITS)
}

/// β for `d` as an enclosure of width at most `2^-bits`.
///
/// Small equations are handled with Sturm chains, which certify both the
/// largest root and its isolation. Larger ones use a descending sign scan from
/// `d_1 + 1` in steps of `2^-8`, then points `1 + 2^-j` towards 1, then bisection.
pub fn compute_beta_with(d: &Word, bits: u32) -> Result<BetaCertificate, NumericError> {
    let top_int = d.first() as u32 + 1;
    let top = BigRational::from_integer(BigInt::from(top_int));
    let g = beta_equation(d);
    let no_root = NumericError::NoSignChange { top: top_int };
    let one = BigRational::one();

    let mut cert = if g.deg() <= EXACT_DEGREE_LIMIT {
        let m = g.squarefree_part();
        let chain = m.sturm_chain();
        if m.sign_at(&top) == Ordering::Equal {
            BetaCertificate {
                beta: PrecisionReal::exact(top),
                polynomial: m.clone(),
                equation: g,
                bracket: Bracket { sign_lo: 0, sign_hi: 0 },
                isolation: Some(Isolation { squarefree: m, chain }),
            }
        } else {
            if count_roots(&chain, &one, &top) == 0 {
                return Err(no_root);
            }
            let beta = PrecisionReal::new(one, top.clone());
            let sign_hi = ord_sign(m.sign_at(&top));
            BetaCertificate {
                beta,
                polynomial: m.clone(),
                equation: g,
                bracket: Bracket { sign_lo: -sign_hi, sign_hi },
                isolation: Some(Isolation { squarefree: m, chain }),
            }
        }
    } else {
        let (lo, hi) = scan(&g, &top).ok_or(no_root)?;
        let exact = lo == hi;
        BetaCertificate {
            beta: PrecisionReal::new(lo, hi),
            polynomial: g.clone(),
            equation: g,
            bracket: if exact { Bracket { sign_lo: 0, sign_hi: 0 } } else { Bracket { sign_lo: -1, sign_hi: 1 } },
            isolation: None,
        }
    };
    cert = cert.refined(bits)?;
    if cert.isolation.is_some() && !cert.beta.is_exact() {
        cert.bracket = Bracket {
            sign_lo: ord_sign(cert.polynomial.sign_at(cert.beta.lo())),
            sign_hi: ord_sign(cert.polynomial.sign_at(cert.beta.hi())),
        };
    }
    Ok(cert)
}

/// Finds `(lo, hi)` with `g(lo) < 0 < g(hi)`, or `lo = hi` at an exact root.
fn scan(g: &IntPoly, top: &BigRational) -> Option<(BigRational, BigRational)> {
    match g.sign_at(top) {
        Ordering::Equal => return Some((top.clone(), top.clone())),
        Ordering::Less => return None,
        Ordering::Greater => {}
    }
    let step = dyadic_width(GRID_BITS);
    let one = BigRational::one();
    let grid = (1u64..).map(|k| top - &step * BigRational::from_integer(k.into())).take_while(|x| x > &(&one + &step));
    let near_one = (GRID_BITS..=NEAR_ONE_DEPTH).map(|j| &one + dyadic_width(j));
    let mut prev = top.clone();
    for x in grid.chain(near_one) {
        match g.sign_at(&x) {
            Ordering::Equal => return Some((x.clone(), x)),
            Ordering::Less => return Some((x, prev)),
            Ordering::Greater => prev = x,
        }
    }
    None
}

/// `β/(β+1) + Σ d_n (−β)^{−n}` as an enclosure; contains 0 at the true base.
pub fn base_equation_residual(d: &Word, cert: &BetaCertificate) -> Option<PrecisionReal> {
    let s = series_closed_form(d).as_beta_number();
    let frac = BetaNumber::new(IntPoly::monomial(1, 1), IntPoly::linear(1));
    (&frac + &s).eval(cert.beta())
}

/// Evaluates `γ^l − γ − 1` over the enclosure.
pub fn gamma_relation(cert: &BetaCertificate, l: u32) -> PrecisionReal {
    let g = cert.beta();
    &(&g.powi(l) - g) - &PrecisionReal::from_int(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::interval::rational;
    use crate::word::{parse_word, phi_length, phi_witness};
    use num_traits::{Signed, Zero};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn sf(num: &[i64], den: &[i64]) -> SeriesForm {
        SeriesForm { numerator: IntPoly::from_i64s(num), denominator: IntPoly::from_i64s(den) }
    }

    #[test]
    fn closed_forms() {
        assert!(series_closed_form(&w("(2)")).same_function(&sf(&[-2], &[1, 1])));
        assert!(series_closed_form(&w("(10)")).same_function(&sf(&[0, -1], &[-1, 0, 1])));
        assert!(series_closed_form(&w("1(0)")).same_function(&sf(&[-1], &[0, 1])));
        assert!(series_closed_form(&w("1")).same_function(&sf(&[-1], &[0, 1])));
    }

    #[test]
    fn closed_form_matches_partial_sums() {
        let x = rational(5, 2);
        for s in ["(2)", "12(01)", "100(11)", "2(120)", "0(1)", "21"] {
            let d = w(s);
            let f = series_closed_form(&d);
            let exact = f.numerator.eval(&x) / f.denominator.eval(&x);
            let mut partial = BigRational::zero();
            let mut p = BigRational::one();
            for n in 1..200 {
                p = &p / -&x;
                partial += &p * BigRational::from_integer(d.letter_at(n).into());
            }
            let err = (&exact - &partial).abs();
            assert!(err < rational(1, 1_000_000_000), "{s}");
        }
    }

    fn assert_close(c: &BetaCertificate, v: f64) {
        assert!((c.beta().to_f64() - v).abs() < 1e-12, "{} vs {v}", c.beta());
        assert!(c.beta().width() <= dyadic_width(64));
    }

    #[test]
    fn golden_bases() {
        let two = compute_beta(&w("(10)")).unwrap();
        assert!(two.beta().contains(&rational(2, 1)));
        let golden = compute_beta(&w("1(0)")).unwrap();
        assert_close(&golden, (1.0 + 5f64.sqrt()) / 2.0);
        let plastic = compute_beta(&w("100(11)")).unwrap();
        assert_close(&plastic, 1.324_717_957_244_746);
        assert!(compute_beta(&w("(2)")).unwrap().beta().contains(&rational(2, 1)));
    }

    #[test]
    fn zero_entropy_has_no_base() {
        for s in ["(1)", "(100)", "(10011)"] {
            assert!(matches!(compute_beta(&w(s)), Err(NumericError::NoSignChange { .. })), "{s}");
        }
    }

    #[test]
    fn certificate_signs() {
        for s in ["(10)", "1(0)", "100(11)", "(21)", "2(10)"] {
            let c = compute_beta(&w(s)).unwrap();
            let p = c.polynomial();
            let a = ord_sign(p.sign_at(c.beta().lo()));
            let b = ord_sign(p.sign_at(c.beta().hi()));
            assert!(a * b <= 0, "{s}");
            assert!(base_equation_residual(&w(s), &c).unwrap().contains_zero(), "{s}");
        }
    }

    #[test]
    fn large_degree_path() {
        // u_3 · v̄_3 has an equation of degree above the exact limit.
        let d = phi_witness(3).unwrap();
        assert!(beta_equation(&d).deg() > EXACT_DEGREE_LIMIT);
        let c = compute_beta(&d).unwrap();
        assert!(!c.is_certified());
        let l = phi_length(3).max(2 * phi_length(2)) as u32;
        assert!(gamma_relation(&c, l).contains_zero());
    }

    #[test]
    fn exact_sign_decisions() {
        let c = compute_beta(&w("1(0)")).unwrap();
        // β² − β − 1 = 0 exactly
        let x = BetaNumber::new(IntPoly::from_i64s(&[-1, -1, 1]), IntPoly::one());
        assert_eq!(c.sign_of(&x).unwrap(), Ordering::Equal);
        assert_eq!(c.sign_of(&BetaNumber::r_beta()).unwrap(), Ordering::Greater);
        // ⌊β⌋ = 1, ⌊β²⌋ = 2
        assert_eq!(c.floor_of(&BetaNumber::beta()).unwrap(), BigInt::from(1));
        let sq = &BetaNumber::beta() * &BetaNumber::beta();
        assert_eq!(c.floor_of(&sq).unwrap(), BigInt::from(2));
    }
}
