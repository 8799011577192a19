//! Alternate Lyndon words and the admissibility of a word as the
//! `(−β)`-expansion of `l_β = −β/(β+1)`.
//!
//! A word is Lyndon when it is `⪯` all of its shifts; strong when strictly
//! smaller than every proper shift, weak when it equals one of them.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{LyndonError, OrderError};
use crate::numeric::{compute_beta, BetaCertificate};
use crate::order::{alt_compare, alt_compare_vs_phi_limit};
use crate::word::{phi_power, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LyndonClass {
    /// `σ^shift(w) ≺ w`.
    NotLyndon {
        shift: usize,
    },
    Weak {
        period: usize,
    },
    Strong,
}

impl LyndonClass {
    pub fn is_lyndon(&self) -> bool {
        !matches!(self, LyndonClass::NotLyndon { .. })
    }
}

pub fn classify_lyndon(w: &Word) -> LyndonClass {
    let w = w.to_infinite();
    let n = w.preperiod().len() + w.period().len();
    let mut weak = false;
    for k in 1..=n {
        match alt_compare(&w, &w.shift(k)).relation {
            Ordering::Greater => return LyndonClass::NotLyndon { shift: k },
            Ordering::Equal => weak = true,
            Ordering::Less => {}
        }
    }
    if weak {
        LyndonClass::Weak { period: w.period().len() }
    } else {
        LyndonClass::Strong
    }
}

pub fn is_lyndon(w: &Word) -> bool {
    classify_lyndon(w).is_lyndon()
}

/// If `w` starts with `uu` for an odd-length `u`, returns `ū` (shortest `u` first).
pub fn uu_prefix_collapse(w: &Word) -> Option<Word> {
    let w = w.to_infinite();
    let bound = w.preperiod().len() + 2 * w.period().len();
    let letters = w.prefix(2 * bound);
    (1..=bound)
        .step_by(2)
        .find(|&l| letters[..l] == letters[l..2 * l])
        .map(|l| Word::periodic(letters[..l].to_vec()).expect("nonempty"))
}

fn require_lyndon(d: &Word) -> Result<Word, LyndonError> {
    let d = d.to_infinite();
    if is_lyndon(&d) {
        Ok(d)
    } else {
        Err(LyndonError::NotLyndon(d.to_string()))
    }
}

/// The largest Lyndon word attached to the same base as `d`.
///
/// For `d = (d_1 ⋯ d_{2p+1})^∞` with odd minimal period this is
/// `(d_1 ⋯ d_{2p} (d_{2p+1}−1) 0)^∞`; otherwise `d` itself.
pub fn dstar(d: &Word) -> Result<Word, LyndonError> {
    let d = require_lyndon(d)?;
    dstar_unchecked(&d).ok_or_else(|| LyndonError::ZeroLastLetter(d.to_string()))
}

fn dstar_unchecked(d: &Word) -> Option<Word> {
    if !d.is_purely_periodic() || d.period().len() % 2 == 0 {
        return Some(d.clone());
    }
    let per = d.period();
    let last = *per.last().expect("nonempty");
    if last == 0 {
        return None;
    }
    let mut star = per[..per.len() - 1].to_vec();
    star.extend([last - 1, 0]);
    Some(Word::periodic(star).expect("nonempty"))
}

/// `0 · d*`, the strict upper bound for shifts of an expansion.
pub fn rstar(d: &Word) -> Result<Word, LyndonError> {
    Ok(dstar(d)?.prepend(&[0]))
}

/// Upper bound used by the admissibility test. When the odd period ends in 0
/// the largest attached word is `(d_1 ⋯ d_{2p−1} (d_{2p}+1))^∞`.
fn rstar_for_admissibility(d: &Word) -> Word {
    let star = dstar_unchecked(d).unwrap_or_else(|| {
        let per = d.period();
        if per.len() < 3 {
            return d.clone();
        }
        let mut w = per[..per.len() - 2].to_vec();
        w.push(per[per.len() - 2].saturating_add(1));
        Word::periodic(w).expect("nonempty")
    });
    star.prepend(&[0])
}

/// `(min_k, max_k)` around a weak companion `a = (a_1 ⋯ a_k)^∞`.
pub fn lyn_bounds(a: &Word) -> Result<(Word, Word), LyndonError> {
    let bad = || LyndonError::BadCompanion(a.to_string());
    if !a.is_purely_periodic() || !matches!(classify_lyndon(a), LyndonClass::Weak { .. }) {
        return Err(bad());
    }
    let per = a.period();
    let k = per.len();
    let last = per[k - 1];
    if last == 0 {
        return Err(bad());
    }
    let mut b = per[..k - 1].to_vec();
    b.extend([last - 1, 0]);
    let periodic = |v: Vec<Letter>| Word::periodic(v).expect("nonempty");
    if k % 2 == 1 {
        let min = Word::eventually_periodic(per.to_vec(), b.clone()).expect("nonempty");
        Ok((min, periodic(b)))
    } else {
        let min = Word::eventually_periodic(b, per.to_vec()).expect("nonempty");
        Ok((min, a.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LynMembership {
    /// `d` lies in `[min_k, max_k]` around this weak companion.
    Witness {
        witness: Word,
    },
    Absent,
    /// A candidate could not be checked (comparison budget exhausted).
    Unknown {
        candidate: Word,
    },
}

/// Largest companion period searched for `d`.
pub fn lyn_search_bound(d: &Word) -> usize {
    let d = d.to_infinite();
    d.preperiod().len() + 2 * d.period().len() + 8
}

/// Looks for a weak companion `a` with `min_k ⪯ d ⪯ max_k ≺ φ^∞(1)`, `d ≠ a`.
///
/// Such an `a` shares `d_1 ⋯ d_{k−1}` and has `a_k ∈ {d_k, d_k + 1}`, so the
/// search is over `k` only. Witnesses are cross-checked by comparing bases.
pub fn in_lyn(d: &Word) -> Result<LynMembership, LyndonError> {
    let d = d.to_infinite();
    if !is_lyndon(&d) {
        return Ok(LynMembership::Absent);
    }
    let letters = d.prefix(lyn_search_bound(&d));
    let mut unknown = None;
    for k in 1..=letters.len() {
        let dk = letters[k - 1];
        let candidates = [Some(dk), dk.checked_add(1)];
        for ak in candidates.into_iter().flatten() {
            if ak == 0 {
                continue;
            }
            let mut per = letters[..k - 1].to_vec();
            per.push(ak);
            let a = Word::periodic(per).expect("nonempty");
            if a.period().len() != k || !matches!(classify_lyndon(&a), LyndonClass::Weak { .. }) {
                continue;
            }
            let (min, max) = lyn_bounds(&a)?;
            match alt_compare_vs_phi_limit(&max) {
                Ok(o) if o.is_less() => {}
                Ok(_) => continue,
                Err(OrderError::PhiCompareCap { .. }) => {
                    unknown.get_or_insert(a);
                    continue;
                }
                Err(e) => return Err(e.into()),
            }
            let inside = alt_compare(&min, &d).relation != Ordering::Greater
                && alt_compare(&d, &max).relation != Ordering::Greater;
            if inside && d != a {
                cross_check(&d, &a)?;
                return Ok(LynMembership::Witness { witness: a });
            }
        }
    }
    Ok(match unknown {
        Some(candidate) => LynMembership::Unknown { candidate },
        None => LynMembership::Absent,
    })
}

fn cross_check(d: &Word, a: &Word) -> Result<(), LyndonError> {
    let bd = compute_beta(d)?;
    let ba = compute_beta(a)?;
    if bd.beta().intersects(ba.beta()) {
        Ok(())
    } else {
        Err(LyndonError::BetaMismatch { word: d.to_string(), witness: a.to_string() })
    }
}

/// Which zero-entropy word a generator is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ZeroFamily {
    /// `0^∞`.
    AllZeros,
    /// `(φ^n(1))^∞`.
    FixedPointIterate { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "sign", rename_all = "snake_case")]
pub enum EntropySign {
    Positive,
    Zero { member: ZeroFamily },
}

impl EntropySign {
    pub fn is_positive(&self) -> bool {
        matches!(self, EntropySign::Positive)
    }
}

/// Positive iff `d ≺ φ^∞(1)`. Zero verdicts are matched against the
/// zero-entropy words `0^∞` and `(φ^n(1))^∞`.
pub fn entropy_sign(d: &Word) -> Result<EntropySign, LyndonError> {
    let d = require_lyndon(d)?;
    if alt_compare_vs_phi_limit(&d)?.is_less() {
        return Ok(EntropySign::Positive);
    }
    if d == Word::periodic(vec![0]).expect("nonempty") {
        return Ok(EntropySign::Zero { member: ZeroFamily::AllZeros });
    }
    let horizon = d.preperiod().len() + d.period().len();
    for n in 0.. {
        let u = phi_power(n).map_err(OrderError::from)?;
        if u.len() > horizon {
            break;
        }
        if Word::periodic(u.preperiod().to_vec()).expect("nonempty") == d {
            return Ok(EntropySign::Zero { member: ZeroFamily::FixedPointIterate { n } });
        }
    }
    Err(LyndonError::UnclassifiedZero(d.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftCondition {
    pub holds: bool,
    /// `n` such that `σ^{n−1}(d)` violates `d ⪯ σ^{n−1}(d) ≺ r*`.
    pub first_failing_shift: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LynCondition {
    /// `None` when membership could not be decided.
    pub holds: Option<bool>,
    pub membership: LynMembership,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub word: Word,
    pub lyndon: LyndonClass,
    pub cond_a: ShiftCondition,
    pub cond_b: LynCondition,
    pub cond_c: bool,
    pub beta: Option<BetaCertificate>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.cond_a.holds && self.cond_b.holds == Some(true) && self.cond_c
    }
}

/// Decides whether `d` is the `(−β)`-expansion of `l_β` for some `β > 1`.
pub fn admissible(d: &Word) -> Result<AdmissibilityReport, LyndonError> {
    let d = d.to_infinite();
    let lyndon = classify_lyndon(&d);
    let cond_c = alt_compare_vs_phi_limit(&d)?.is_less();

    let upper = rstar_for_admissibility(&d);
    let first_failing_shift = d.distinct_shifts().find_map(|(k, s)| {
        let left = alt_compare(&d, &s).relation != Ordering::Greater;
        let right = alt_compare(&s, &upper).is_less();
        (!(left && right)).then_some(k + 1)
    });
    let cond_a = ShiftCondition { holds: first_failing_shift.is_none(), first_failing_shift };

    let membership = in_lyn(&d)?;
    let holds = match membership {
        LynMembership::Absent => Some(true),
        LynMembership::Witness { .. } => Some(false),
        LynMembership::Unknown { .. } => None,
    };
    let beta = if lyndon.is_lyndon() && cond_c { Some(compute_beta(&d)?) } else { None };
    Ok(AdmissibilityReport { word: d, lyndon, cond_a, cond_b: LynCondition { holds, membership }, cond_c, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, phi_witness};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(classify_lyndon(&w("(10)")), LyndonClass::Weak { period: 2 });
        assert_eq!(classify_lyndon(&w("(01)")), LyndonClass::NotLyndon { shift: 1 });
        assert_eq!(classify_lyndon(&w("100(11)")), LyndonClass::Strong);
        assert_eq!(classify_lyndon(&w("(0)")), LyndonClass::Weak { period: 1 });
    }

    #[test]
    fn square_prefixes() {
        assert_eq!(uu_prefix_collapse(&w("(1)")), Some(w("(1)")));
        assert_eq!(uu_prefix_collapse(&w("(10011)")), Some(w("(10011)")));
        assert_eq!(uu_prefix_collapse(&w("100(11)")), None);
    }

    #[test]
    fn largest_attached_words() {
        assert_eq!(dstar(&w("(2)")).unwrap(), w("(10)"));
        assert_eq!(dstar(&w("(10)")).unwrap(), w("(10)"));
        assert_eq!(dstar(&w("100(11)")).unwrap(), w("100(11)"));
        assert_eq!(rstar(&w("(2)")).unwrap(), w("(01)"));
        assert_eq!(rstar(&w("(10)")).unwrap(), w("0(10)"));
        assert_eq!(rstar(&w("100(11)")).unwrap(), w("0100(11)"));
        assert!(matches!(dstar(&w("(01)")), Err(LyndonError::NotLyndon(_))));
        assert!(matches!(dstar(&w("(10100)")), Err(LyndonError::ZeroLastLetter(_))));
    }

    #[test]
    fn companion_bounds() {
        assert_eq!(lyn_bounds(&w("(2)")).unwrap(), (w("2(10)"), w("(10)")));
        assert!(lyn_bounds(&w("(10)")).is_err());
        assert_eq!(lyn_bounds(&w("(21)")).unwrap(), (w("200(21)"), w("(21)")));
    }

    #[test]
    fn lyn_membership() {
        assert_eq!(in_lyn(&w("(10)")).unwrap(), LynMembership::Witness { witness: w("(2)") });
        assert_eq!(in_lyn(&w("(2)")).unwrap(), LynMembership::Absent);
        assert_eq!(in_lyn(&w("2(10)")).unwrap(), LynMembership::Witness { witness: w("(2)") });
    }

    #[test]
    fn entropy_signs() {
        assert_eq!(entropy_sign(&w("(10)")).unwrap(), EntropySign::Positive);
        assert_eq!(
            entropy_sign(&w("(1)")).unwrap(),
            EntropySign::Zero { member: ZeroFamily::FixedPointIterate { n: 0 } }
        );
        assert_eq!(
            entropy_sign(&w("(10011)")).unwrap(),
            EntropySign::Zero { member: ZeroFamily::FixedPointIterate { n: 2 } }
        );
        assert_eq!(entropy_sign(&w("(0)")).unwrap(), EntropySign::Zero { member: ZeroFamily::AllZeros });
        assert!(entropy_sign(&w("(01)")).is_err());
        for n in 0..=8 {
            let u = phi_power(n).unwrap();
            let zero = Word::periodic(u.preperiod().to_vec()).unwrap();
            assert_eq!(entropy_sign(&zero).unwrap(), EntropySign::Zero { member: ZeroFamily::FixedPointIterate { n } });
            assert_eq!(entropy_sign(&phi_witness(n).unwrap()).unwrap(), EntropySign::Positive);
        }
    }

    #[test]
    fn admissibility_examples() {
        let r = admissible(&w("(2)")).unwrap();
        assert!(r.admissible());
        assert!(r.beta.unwrap().beta().to_string() == "[2,2]");
        let r = admissible(&w("(10)")).unwrap();
        assert!(!r.admissible());
        assert_eq!(r.cond_b.membership, LynMembership::Witness { witness: w("(2)") });
        let r = admissible(&w("(1)")).unwrap();
        assert!(!r.cond_c && !r.admissible());
        assert!(r.beta.is_none());
        let r = admissible(&w("(01)")).unwrap();
        assert_eq!(r.cond_a.first_failing_shift, Some(1));
    }

    fn brute_lyndon(w: &Word) -> bool {
        let w = w.to_infinite();
        let n = 2 * (w.preperiod().len() + w.period().len()) + 4;
        let base = w.prefix(4 * n);
        (1..=n).all(|k| {
            let s = &base[k..k + 2 * n];
            crate::order::alt_compare_letters(&base[..2 * n], s).relation != Ordering::Greater
        })
    }

    proptest! {
        #[test]
        fn classification_matches_brute_force(x in crate::word::tests::arb_word(2, 5)) {
            prop_assert_eq!(classify_lyndon(&x).is_lyndon(), brute_lyndon(&x));
        }

        #[test]
        fn dstar_is_an_upper_lyndon_word(per in prop::collection::vec(0u16..3, 1..6), pre in prop::collection::vec(0u16..3, 0..3)) {
            let d = Word::eventually_periodic(pre, per).unwrap();
            prop_assume!(is_lyndon(&d));
            if let Ok(star) = dstar(&d) {
                prop_assert!(is_lyndon(&star));
                let rel = alt_compare(&d, &star).relation;
                prop_assert_ne!(rel, Ordering::Greater);
                let odd_periodic = d.is_purely_periodic() && d.period().len() % 2 == 1;
                prop_assert_eq!(rel == Ordering::Equal, !odd_periodic);
            }
        }
    }
}
