//! Finite and eventually periodic words over small integer alphabets.
//!
//! A [`Word`] is either finite (empty period) or infinite of the form
//! `preperiod · period · period · …`. Infinite words are kept in a normal
//! form: the period is primitive and the preperiod cannot be shortened by
//! rotating the period. Finite words keep their letters as written; they are
//! padded with zeros only when a comparison reads past their end.
//!
//! The textual form is `block ( '(' block ')' )?` where a block is either a
//! run of single digits (`10011`) or comma separated letters (`12,3,0`).
//! A single multi-digit letter is written with a trailing comma (`12,`).
//! The empty finite word is written `ε`.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::WordError;

/// A single letter. Letters are capped at `u16::MAX`.
pub type Letter = u16;

/// Largest letter value accepted by the parser unless configured otherwise.
pub const MAX_LETTER: Letter = Letter::MAX;

/// Default cap on the exponent accepted by [`phi_power`].
pub const DEFAULT_PHI_CAP: usize = 40;

/// Materialised morphic words never exceed this many letters.
pub const PHI_LETTER_BUDGET: usize = 1 << 28;

#[derive(Clone, Debug)]
pub struct Word {
    preperiod: Vec<Letter>,
    period: Vec<Letter>,
    alphabet_max: Letter,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.preperiod == other.preperiod && self.period == other.period
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.preperiod.hash(state);
        self.period.hash(state);
    }
}

fn max_letter(a: &[Letter], b: &[Letter]) -> Letter {
    a.iter().chain(b).copied().max().unwrap_or(0)
}

/// Length of the primitive root of `p`.
fn primitive_root_len(p: &[Letter]) -> usize {
    let n = p.len();
    (1..=n).filter(|l| n % l == 0).find(|&l| (l..n).all(|i| p[i] == p[i - l])).unwrap_or(n)
}

impl Word {
    /// The empty finite word.
    pub fn empty() -> Self {
        Self::finite(Vec::new())
    }

    pub fn finite(letters: Vec<Letter>) -> Self {
        let alphabet_max = max_letter(&letters, &[]);
        Word { preperiod: letters, period: Vec::new(), alphabet_max }
    }

    /// Builds `pre · per · per · …` in normal form.
    pub fn eventually_periodic(pre: Vec<Letter>, per: Vec<Letter>) -> Result<Self, WordError> {
        if per.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        let mut pre = pre;
        let mut per = per;
        per.truncate(primitive_root_len(&per));
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        let alphabet_max = max_letter(&pre, &per);
        Ok(Word { preperiod: pre, period: per, alphabet_max })
    }

    /// Purely periodic word `per · per · …`.
    pub fn periodic(per: Vec<Letter>) -> Result<Self, WordError> {
        Self::eventually_periodic(Vec::new(), per)
    }

    pub fn preperiod(&self) -> &[Letter] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn alphabet_max(&self) -> Letter {
        self.alphabet_max
    }

    /// Declares a larger alphabet than the one spanned by the letters.
    pub fn with_alphabet_max(mut self, max: Letter) -> Result<Self, WordError> {
        let used = max_letter(&self.preperiod, &self.period);
        if used > max {
            return Err(WordError::LetterOverflow { letter: used as u64, max });
        }
        self.alphabet_max = max;
        Ok(self)
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn is_purely_periodic(&self) -> bool {
        !self.is_finite() && self.preperiod.is_empty()
    }

    /// Number of letters of a finite word; preperiod length otherwise.
    pub fn len(&self) -> usize {
        self.preperiod.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && self.preperiod.is_empty()
    }

    /// Finite words become `w · 0 0 0 …`; infinite words are returned as is.
    pub fn to_infinite(&self) -> Word {
        if self.is_finite() {
            Word::eventually_periodic(self.preperiod.clone(), vec![0]).expect("nonempty period")
        } else {
            self.clone()
        }
    }

    /// The `i`-th letter, counting from 1. Finite words read as zero past their end.
    pub fn letter_at(&self, i: usize) -> Letter {
        assert!(i >= 1, "letters are indexed from 1");
        let i = i - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else if self.period.is_empty() {
            0
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The infinite letter stream (zero padded for finite words).
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..).map(move |i| self.letter_at(i))
    }

    /// The first `n` letters of the stream.
    pub fn prefix(&self, n: usize) -> Vec<Letter> {
        self.letters().take(n).collect()
    }

    /// First letter of the stream.
    pub fn first(&self) -> Letter {
        self.letter_at(1)
    }

    /// `(x_{i+k})_{i≥1}`.
    pub fn shift(&self, k: usize) -> Word {
        if self.is_finite() {
            let rest = self.preperiod.get(k..).unwrap_or(&[]).to_vec();
            return Word { alphabet_max: self.alphabet_max, ..Word::finite(rest) };
        }
        let pre = self.preperiod.len();
        let w = if k <= pre {
            Word::eventually_periodic(self.preperiod[k..].to_vec(), self.period.clone())
        } else {
            let mut per = self.period.clone();
            let r = (k - pre) % per.len();
            per.rotate_left(r);
            Word::periodic(per)
        };
        let mut w = w.expect("nonempty period");
        w.alphabet_max = self.alphabet_max;
        w
    }

    /// Every shift `σ^k(w)` for `k` in `0..|pre|+|per|`; these exhaust the orbit.
    pub fn distinct_shifts(&self) -> impl Iterator<Item = (usize, Word)> + '_ {
        let n = if self.is_finite() { self.preperiod.len() + 1 } else { self.preperiod.len() + self.period.len() };
        (0..n).map(move |k| (k, self.shift(k)))
    }

    /// `u · w` for a finite prefix `u`.
    pub fn prepend(&self, u: &[Letter]) -> Word {
        let mut pre = u.to_vec();
        pre.extend_from_slice(&self.preperiod);
        if self.is_finite() {
            Word::finite(pre)
        } else {
            Word::eventually_periodic(pre, self.period.clone()).expect("nonempty period")
        }
    }

    /// Enough letters to see every distinct comparison against `other`.
    pub fn comparison_horizon(&self, other: &Word) -> usize {
        let per = |w: &Word| w.period.len().max(1);
        self.preperiod.len().max(other.preperiod.len()) + per(self).lcm(&per(other))
    }
}

/// Parses with the default letter cap.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    parse_word_with_max(text, MAX_LETTER)
}

/// Parses a word literal rejecting letters above `max`.
pub fn parse_word_with_max(text: &str, max: Letter) -> Result<Word, WordError> {
    let text = text.trim();
    if text == "ε" {
        return Ok(Word::empty());
    }
    let (pre_text, per_text, per_offset) = match text.find('(') {
        None => (text, None, 0),
        Some(open) => {
            let rest = &text[open + 1..];
            let close =
                rest.find(')').ok_or(WordError::Syntax { position: text.len(), message: "missing ')'".into() })?;
            if open + 1 + close + 1 != text.len() {
                return Err(WordError::Syntax {
                    position: open + close + 2,
                    message: "unexpected text after ')'".into(),
                });
            }
            (&text[..open], Some(&rest[..close]), open + 1)
        }
    };
    if pre_text.is_empty() && per_text.is_none() {
        return Err(WordError::Syntax { position: 0, message: "empty word literal".into() });
    }
    let pre = parse_block(pre_text, 0, max)?;
    match per_text {
        None => Ok(Word::finite(pre)),
        Some("") => Err(WordError::EmptyPeriod),
        Some(p) => Word::eventually_periodic(pre, parse_block(p, per_offset, max)?),
    }
}

fn parse_block(block: &str, offset: usize, max: Letter) -> Result<Vec<Letter>, WordError> {
    let check = |v: u64, pos: usize| -> Result<Letter, WordError> {
        if v > max as u64 {
            Err(WordError::LetterOverflow { letter: v, max })
        } else {
            let _ = pos;
            Ok(v as Letter)
        }
    };
    if !block.contains(',') {
        return block
            .char_indices()
            .map(|(i, c)| match c.to_digit(10) {
                Some(v) => check(v as u64, offset + i),
                None => Err(WordError::Syntax { position: offset + i, message: format!("unexpected character {c:?}") }),
            })
            .collect();
    }
    let body = block.strip_suffix(',').unwrap_or(block);
    let mut pos = offset;
    let mut out = Vec::new();
    for part in body.split(',') {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(WordError::Syntax { position: pos, message: format!("bad letter {part:?}") });
        }
        let v: u64 = part.parse().map_err(|_| WordError::LetterOverflow { letter: u64::MAX, max })?;
        out.push(check(v, pos)?);
        pos += part.len() + 1;
    }
    Ok(out)
}

fn render_block(letters: &[Letter], comma: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if !comma {
        return letters.iter().try_for_each(|l| write!(f, "{l}"));
    }
    let joined: Vec<String> = letters.iter().map(Letter::to_string).collect();
    write!(f, "{}", joined.join(","))?;
    if letters.len() == 1 {
        write!(f, ",")?;
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        let comma = self.preperiod.iter().chain(&self.period).any(|&l| l > 9);
        render_block(&self.preperiod, comma, f)?;
        if !self.period.is_empty() {
            write!(f, "(")?;
            render_block(&self.period, comma, f)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    preperiod: Vec<Letter>,
    period: Vec<Letter>,
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WordJson { preperiod: self.preperiod.clone(), period: self.period.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = WordJson::deserialize(d)?;
        if raw.period.is_empty() {
            Ok(Word::finite(raw.preperiod))
        } else {
            Word::eventually_periodic(raw.preperiod, raw.period).map_err(serde::de::Error::custom)
        }
    }
}

/// Memoised iterates of the morphism `0 ↦ 1`, `1 ↦ 100`.
///
/// Only the longest computed `u_n` is stored: every `u_m` with `m ≤ n` is one
/// of its prefixes, and so is every prefix of the fixed point `φ^∞(1)`.
#[derive(Debug)]
pub struct MorphicCache {
    state: RwLock<PhiState>,
    budget: usize,
}

#[derive(Debug)]
struct PhiState {
    longest: Vec<Letter>,
    lengths: Vec<usize>,
}

impl Default for MorphicCache {
    fn default() -> Self {
        Self::with_budget(PHI_LETTER_BUDGET)
    }
}

impl MorphicCache {
    pub fn with_budget(budget: usize) -> Self {
        MorphicCache { state: RwLock::new(PhiState { longest: vec![1, 0, 0], lengths: vec![1, 3] }), budget }
    }

    /// Process-wide cache.
    pub fn global() -> &'static MorphicCache {
        static CACHE: OnceLock<MorphicCache> = OnceLock::new();
        CACHE.get_or_init(MorphicCache::default)
    }

    fn ensure(&self, done: impl Fn(&PhiState) -> bool) -> Result<(), WordError> {
        if done(&self.state.read().expect("cache lock")) {
            return Ok(());
        }
        let mut st = self.state.write().expect("cache lock");
        while !done(&st) {
            let n = st.lengths.len();
            let (a, b) = (st.lengths[n - 1], st.lengths[n - 2]);
            let next = a + 2 * b;
            if next > self.budget {
                return Err(WordError::PhiTooLong { n, letters: next, budget: self.budget });
            }
            let tail = st.longest[..b].to_vec();
            st.longest.truncate(a);
            st.longest.extend_from_slice(&tail);
            st.longest.extend_from_slice(&tail);
            st.lengths.push(next);
        }
        Ok(())
    }

    /// `u_n = φ^n(1)` as a finite word.
    pub fn phi_power(&self, n: usize, cap: usize) -> Result<Word, WordError> {
        if n > cap {
            return Err(WordError::PhiCapExceeded { n, cap });
        }
        self.ensure(|st| st.lengths.len() > n)?;
        let st = self.state.read().expect("cache lock");
        Ok(Word::finite(st.longest[..st.lengths[n]].to_vec()))
    }

    /// First `len` letters of `φ^∞(1)`.
    pub fn limit_prefix(&self, len: usize) -> Result<Vec<Letter>, WordError> {
        self.ensure(|st| st.longest.len() >= len)?;
        Ok(self.state.read().expect("cache lock").longest[..len].to_vec())
    }
}

/// `|u_n|`, computed without materialising the word.
pub fn phi_length(n: usize) -> u128 {
    (0..n).fold(1u128, |len, k| {
        let k = k as u32 + 1;
        if k % 2 == 0 {
            2 * len - 1
        } else {
            2 * len + 1
        }
    })
}

/// `u_n = φ^n(1)` with the default cap.
pub fn phi_power(n: usize) -> Result<Word, WordError> {
    MorphicCache::global().phi_power(n, DEFAULT_PHI_CAP)
}

/// `v_0 = 00`, `v_n = u_{n−1} u_{n−1}`.
pub fn phi_companion(n: usize) -> Result<Word, WordError> {
    if n == 0 {
        return Ok(Word::finite(vec![0, 0]));
    }
    let u = phi_power(n - 1)?;
    Ok(Word::finite([u.preperiod(), u.preperiod()].concat()))
}

/// `u_n · v_n v_n v_n …`, the positive-entropy word whose base solves `γ^l = γ + 1`.
pub fn phi_witness(n: usize) -> Result<Word, WordError> {
    let u = phi_power(n)?;
    let v = phi_companion(n)?;
    Word::eventually_periodic(u.preperiod().to_vec(), v.preperiod().to_vec())
}

/// First `len` letters of the fixed point `φ^∞(1) = 1001110010010011100…`.
pub fn phi_limit_prefix(len: usize) -> Result<Vec<Letter>, WordError> {
    MorphicCache::global().limit_prefix(len)
}

/// First `len` run lengths of the Thue–Morse word `0110100110010110…`.
pub fn thue_morse_runlengths(len: usize) -> Vec<Letter> {
    let t = |i: u64| (i.count_ones() % 2) as u8;
    let mut runs = Vec::with_capacity(len);
    let mut i = 0u64;
    while runs.len() < len {
        let start = i;
        while t(i + 1) == t(start) {
            i += 1;
        }
        i += 1;
        runs.push((i - start) as Letter);
    }
    runs
}
