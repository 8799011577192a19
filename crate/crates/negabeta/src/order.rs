//! The alternate order.
//!
//! Two words are compared at their first differing index `k` (counting from
//! 1): `x ≺ y` iff `(−1)^k (x_k − y_k) < 0`. So odd positions are compared in
//! reverse and even positions normally. Finite words are padded with zeros.
//!
//! Comparison of eventually periodic words terminates: past the longer
//! preperiod both streams repeat with period `lcm(|per_x|, |per_y|)`, so if
//! the first `max(|pre_x|, |pre_y|) + lcm` letters agree then all letters do.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::OrderError;
use crate::word::{phi_limit_prefix, Letter, Word};

/// Default letter budget when streaming against the fixed point of φ.
pub const DEFAULT_PHI_COMPARE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderOutcome {
    #[serde(serialize_with = "ser_ordering")]
    pub relation: Ordering,
    /// First index where the words differ, counting from 1.
    pub witness: Option<usize>,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(relation_name(*o))
}

pub fn relation_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}

impl OrderOutcome {
    pub const EQUAL: OrderOutcome = OrderOutcome { relation: Ordering::Equal, witness: None };

    pub fn is_less(&self) -> bool {
        self.relation == Ordering::Less
    }

    pub fn reverse(self) -> Self {
        OrderOutcome { relation: self.relation.reverse(), ..self }
    }
}

/// Decides the order of two distinct letters met at index `k`.
pub fn letter_order(k: usize, a: Letter, b: Letter) -> Ordering {
    let natural = a.cmp(&b);
    if k % 2 == 1 {
        natural.reverse()
    } else {
        natural
    }
}

fn first_difference(x: impl Iterator<Item = Letter>, y: impl Iterator<Item = Letter>) -> OrderOutcome {
    x.zip(y)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| OrderOutcome { relation: letter_order(i + 1, a, b), witness: Some(i + 1) })
        .unwrap_or(OrderOutcome::EQUAL)
}

/// Alternate order on finite letter sequences, padding the shorter with zeros.
pub fn alt_compare_letters(x: &[Letter], y: &[Letter]) -> OrderOutcome {
    let n = x.len().max(y.len());
    let pad = |s: &[Letter]| s.iter().copied().chain(std::iter::repeat(0)).take(n).collect::<Vec<_>>();
    first_difference(pad(x).into_iter(), pad(y).into_iter())
}

/// Alternate order on words; exact and always terminating.
pub fn alt_compare(x: &Word, y: &Word) -> OrderOutcome {
    let n = x.comparison_horizon(y);
    first_difference(x.letters().take(n), y.letters().take(n))
}

/// Compares `x` with `φ^∞(1)` under the default letter budget.
pub fn alt_compare_vs_phi_limit(x: &Word) -> Result<OrderOutcome, OrderError> {
    alt_compare_vs_phi_limit_capped(x, DEFAULT_PHI_COMPARE_CAP)
}

/// Streams `x` against `φ^∞(1)`. The fixed point is aperiodic, so an eventually
/// periodic `x` always differs somewhere; the cap only guards against bugs.
pub fn alt_compare_vs_phi_limit_capped(x: &Word, cap: usize) -> Result<OrderOutcome, OrderError> {
    let mut len = 64usize.min(cap);
    loop {
        let phi = phi_limit_prefix(len)?;
        let out = first_difference(x.letters().take(len), phi.into_iter());
        if out.witness.is_some() {
            return Ok(out);
        }
        if len >= cap {
            return Err(OrderError::PhiCompareCap { cap });
        }
        len = (len * 4).min(cap);
    }
}

/// `+1` if a common prefix of this length keeps the order of the tails, `−1` if it flips it.
pub fn prefix_context_flip(u_len: usize) -> i8 {
    if u_len % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Convenience: `x ≺ y`.
pub fn alt_less(x: &Word, y: &Word) -> bool {
    alt_compare(x, y).is_less()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn product(alpha: u16, len: usize) -> Vec<Vec<u16>> {
        (0..len).fold(vec![vec![]], |acc, _| {
            acc.into_iter().flat_map(|v| (0..=alpha).map(move |c| [v.clone(), vec![c]].concat())).collect()
        })
    }

    #[test]
    fn examples() {
        let o = alt_compare(&w("10"), &w("11"));
        assert_eq!(o, OrderOutcome { relation: Ordering::Less, witness: Some(2) });
        assert_eq!(alt_compare(&w("1"), &w("10")), OrderOutcome::EQUAL);
        let o = alt_compare(&w("(10)"), &w("(01)"));
        assert_eq!(o, OrderOutcome { relation: Ordering::Less, witness: Some(1) });
    }

    #[test]
    fn against_fixed_point() {
        let o = alt_compare_vs_phi_limit(&w("(1)")).unwrap();
        assert_eq!((o.relation, o.witness), (Ordering::Greater, Some(2)));
        let o = alt_compare_vs_phi_limit(&w("(10)")).unwrap();
        assert_eq!((o.relation, o.witness), (Ordering::Less, Some(3)));
        assert!(alt_compare_vs_phi_limit(&w("100(11)")).unwrap().is_less());
        let o = alt_compare_vs_phi_limit(&crate::word::phi_witness(6).unwrap()).unwrap();
        assert!(o.is_less());
    }

    #[test]
    fn context_flip_values() {
        assert_eq!(prefix_context_flip(0), 1);
        assert_eq!(prefix_context_flip(1), -1);
        assert_eq!(prefix_context_flip(2), 1);
    }

    #[test]
    fn context_rule_exhaustive() {
        let tails: Vec<Vec<u16>> = product(2, 3);
        for ulen in 0..=4 {
            for u in product(2, ulen) {
                for v1 in &tails {
                    for v2 in &tails {
                        let inner = alt_compare_letters(v1, v2).relation;
                        let outer =
                            alt_compare_letters(&[u.clone(), v1.clone()].concat(), &[u.clone(), v2.clone()].concat())
                                .relation;
                        let expect = if prefix_context_flip(ulen) == 1 { inner } else { inner.reverse() };
                        assert_eq!(outer, expect);
                    }
                }
            }
        }
    }

    fn arb(alpha: u16) -> impl Strategy<Value = Word> {
        crate::word::tests::arb_word(alpha, 6)
    }

    proptest! {
        #[test]
        fn antisymmetric(x in arb(2), y in arb(2)) {
            let a = alt_compare(&x, &y);
            let b = alt_compare(&y, &x);
            prop_assert_eq!(a.relation, b.relation.reverse());
            prop_assert_eq!(a.witness, b.witness);
            if let Some(k) = a.witness {
                let (xk, yk) = (x.letter_at(k) as i32, y.letter_at(k) as i32);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(sign * (xk - yk) < 0, a.is_less());
            }
        }

        #[test]
        fn equal_iff_same_stream(x in arb(2), y in arb(2)) {
            let same = x.prefix(60) == y.prefix(60);
            prop_assert_eq!(alt_compare(&x, &y).relation == Ordering::Equal, same);
        }

        #[test]
        fn transitive(x in arb(2), y in arb(2), z in arb(2)) {
            let xy = alt_compare(&x, &y).relation;
            let yz = alt_compare(&y, &z).relation;
            if xy != Ordering::Greater && yz != Ordering::Greater {
                prop_assert_ne!(alt_compare(&x, &z).relation, Ordering::Greater);
            }
        }

        #[test]
        fn padding_is_invisible(x in prop::collection::vec(0u16..3, 0..8), pad in 0usize..4) {
            let a = Word::finite(x.clone());
            let b = Word::finite([x, vec![0; pad]].concat());
            prop_assert_eq!(alt_compare(&a, &b), OrderOutcome::EQUAL);
            prop_assert_eq!(alt_compare(&a, &a.to_infinite()), OrderOutcome::EQUAL);
        }
    }
}
