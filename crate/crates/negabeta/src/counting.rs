//! Counting words of a Lyndon system.
//!
//! The language of the system generated by `d` is the set of finite words
//! `x_1 ⋯ x_n` over `{0, …, d_1}` such that for every `j`
//! `d_1 ⋯ d_{n−j+1} ⪯ x_j ⋯ x_n ⪯ 0 d_1 ⋯ d_{n−j}`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::CountingError;
use crate::lyndon::is_lyndon;
use crate::order::{alt_compare_letters, letter_order};
use crate::word::{Letter, Word};

/// Default bound on `alphabet^n` for the enumerator.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountSource {
    Recurrence,
    Enumeration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub generator: Word,
    #[serde(serialize_with = "ser_bigints")]
    pub values: Vec<BigInt>,
    pub source: CountSource,
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(BigInt::to_string))
}

impl CountTable {
    /// `H_n`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

/// `H_0 ⋯ H_n` from `H_n = Σ_{k=1}^{n} (−1)^k (d_{k−1} − d_k) H_{n−k} + 1`, `d_0 = 0`.
pub fn count_recurrence(d: &Word, n: usize) -> Result<CountTable, CountingError> {
    if !is_lyndon(d) {
        return Err(CountingError::NotLyndon(d.to_string()));
    }
    let letters: Vec<i64> = std::iter::once(0).chain(d.letters().take(n).map(i64::from)).collect();
    let mut h: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::one();
        for k in 1..=m {
            let c = letters[k - 1] - letters[k];
            if c == 0 {
                continue;
            }
            let c = if k % 2 == 0 { c } else { -c };
            acc += &h[m - k] * c;
        }
        h.push(acc);
    }
    Ok(CountTable { generator: d.clone(), values: h, source: CountSource::Recurrence })
}

/// Checks the defining inequalities for every suffix of `x`.
pub fn in_language(x: &[Letter], d: &Word) -> bool {
    let d1 = d.first();
    if x.iter().any(|&c| c > d1) {
        return false;
    }
    let n = x.len();
    let dl = d.prefix(n);
    (0..n).all(|j| {
        let tail = &x[j..];
        let low = &dl[..tail.len()];
        let mut high = vec![0];
        high.extend_from_slice(&dl[..tail.len() - 1]);
        alt_compare_letters(low, tail).relation != Ordering::Greater
            && alt_compare_letters(tail, &high).relation != Ordering::Greater
    })
}

/// `Γ_{A,B}(n) = Σ_{i=1}^{n} (−1)^i (b_i − a_i) H_{n−i} + 1`, the size of `[A, B]`.
pub fn count_interval(a: &Word, b: &Word, d: &Word) -> Result<BigInt, CountingError> {
    let (x, y) = (a.preperiod(), b.preperiod());
    if x.len() != y.len() {
        return Err(CountingError::LengthMismatch(x.len(), y.len()));
    }
    for w in [a, b] {
        if !in_language(w.preperiod(), d) {
            return Err(CountingError::NotInLanguage(w.to_string()));
        }
    }
    if alt_compare_letters(x, y).relation == Ordering::Greater {
        return Err(CountingError::Reversed { a: a.to_string(), b: b.to_string() });
    }
    let n = x.len();
    let h = count_recurrence(d, n)?;
    let mut total = BigInt::one();
    for i in 1..=n {
        let diff = i64::from(y[i - 1]) - i64::from(x[i - 1]);
        let diff = if i % 2 == 0 { diff } else { -diff };
        total += h.get(n - i) * diff;
    }
    Ok(total)
}

/// Suffix constraint still tied with its bound after the letters read so far.
#[derive(Clone, Copy)]
struct Tie {
    start: usize,
    upper: bool,
}

/// All length-`n` words of the language, in increasing alternate order.
pub fn enumerate_language(d: &Word, n: usize, cap: u128) -> Result<Vec<Word>, CountingError> {
    let alpha = d.first() as u128 + 1;
    let states = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(alpha)).unwrap_or(u128::MAX);
    if states > cap {
        return Err(CountingError::CapExceeded { states, cap });
    }
    let dl = d.prefix(n + 1);
    // lower bound for suffix starting at j, position t (1-based): d_t
    // upper bound: 0 d_1 d_2 ⋯, position t: t == 1 ? 0 : d_{t−1}
    let bound = |upper: bool, t: usize| -> Letter {
        if !upper {
            dl[t - 1]
        } else if t == 1 {
            0
        } else {
            dl[t - 2]
        }
    };
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn dfs(
        n: usize,
        d1: Letter,
        prefix: &mut Vec<Letter>,
        ties: &[Tie],
        bound: &dyn Fn(bool, usize) -> Letter,
        out: &mut Vec<Word>,
    ) {
        let pos = prefix.len();
        if pos == n {
            out.push(Word::finite(prefix.clone()));
            return;
        }
        'letters: for c in 0..=d1 {
            let mut next = Vec::with_capacity(ties.len() + 2);
            let fresh = [Tie { start: pos, upper: false }, Tie { start: pos, upper: true }];
            for tie in ties.iter().chain(fresh.iter()) {
                let t = pos - tie.start + 1;
                let b = bound(tie.upper, t);
                if c == b {
                    next.push(*tie);
                    continue;
                }
                let ord = letter_order(t, c, b);
                let ok = if tie.upper { ord == Ordering::Less } else { ord == Ordering::Greater };
                if !ok {
                    continue 'letters;
                }
            }
            prefix.push(c);
            dfs(n, d1, prefix, &next, bound, out);
            prefix.pop();
        }
    }
    dfs(n, d.first(), &mut prefix, &[], &bound, &mut out);
    out.sort_by(|x, y| alt_compare_letters(x.preperiod(), y.preperiod()).relation);
    Ok(out)
}

/// `(a d_1 ⋯ d_{n−1}, (a−1) 0 d_1 ⋯ d_{n−2})`, consecutive in the sorted language.
pub fn extremal_neighbors(a: Letter, d: &Word, n: usize) -> Result<(Word, Word), CountingError> {
    let d1 = d.first();
    if a == 0 || a > d1 {
        return Err(CountingError::BadLetter { a, max: d1 });
    }
    let dl = d.prefix(n);
    let mut left = vec![a];
    left.extend_from_slice(&dl[..n.saturating_sub(1)]);
    let mut right = vec![a - 1];
    if n >= 2 {
        right.push(0);
        right.extend_from_slice(&dl[..n - 2]);
    }
    left.truncate(n.max(1));
    right.truncate(n.max(1));
    Ok((Word::finite(left), Word::finite(right)))
}

/// `H_n^{1/n}` bracketed between dyadic rationals of denominator `2^bits`.
pub fn nth_root_enclosure(h: &BigInt, n: u32, bits: u32) -> (BigInt, BigInt) {
    // find lo = max{k : k^n ≤ h·2^{bits·n}}, result [lo, lo+1] / 2^bits
    let target = h << (bits as usize * n as usize);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one() << ((h.bits() as usize / n as usize) + 1 + bits as usize);
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if num_traits::pow(mid.clone(), n as usize) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}
