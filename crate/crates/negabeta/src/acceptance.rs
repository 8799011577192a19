//! The acceptance suite, shared by the `verify` subcommand and the test target.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::counting::{count_interval, count_recurrence, enumerate_language, DEFAULT_ENUMERATION_CAP};
use crate::lyndon::{admissible, entropy_sign, is_lyndon, EntropySign, LynMembership};
use crate::numeric::{
    check_generating_identity, check_omega_polynomial, compute_beta, cylinder_image, expand, f_beta_exact,
    gamma_relation, BetaCertificate, BetaNumber, IntPoly, PrecisionReal,
};
use crate::word::{parse_word, phi_length, phi_limit_prefix, phi_power, phi_witness, Letter, Word};

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// The fixed-point prefix as printed in the source text.
pub const PHI_PREFIX_43: &str = "1001110010010011100111001110010010011100100";

#[derive(Clone, Debug)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub enumeration_cap: u128,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig { seed: DEFAULT_SEED, enumeration_cap: DEFAULT_ENUMERATION_CAP }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(serialize_with = "opt_secs")]
    pub limit: Option<Duration>,
}

fn opt_secs<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&d.as_secs_f64()),
        None => s.serialize_none(),
    }
}

impl CriterionOutcome {
    /// The outcome line without timing, stable across runs.
    pub fn summary(&self) -> String {
        format!("{} [{:>2}] {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.title, self.detail)
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// A failed check; any library error converts into one.
#[derive(Debug)]
pub struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Check = Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($msg)+)));
        }
    };
}

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(&AcceptanceConfig) -> Check,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "golden bases", limit: Some(Duration::from_secs(3)), run: golden_bases },
    Criterion { id: 2, title: "gamma cascade", limit: Some(Duration::from_secs(30)), run: gamma_cascade },
    Criterion { id: 3, title: "counting oracle", limit: Some(Duration::from_secs(120)), run: counting_oracle },
    Criterion { id: 4, title: "fixed-point prefix", limit: None, run: fixed_point_prefix },
    Criterion { id: 5, title: "morphic length law", limit: None, run: morphic_lengths },
    Criterion { id: 6, title: "entropy classifier", limit: None, run: entropy_classifier },
    Criterion { id: 7, title: "admissibility loop", limit: Some(Duration::from_secs(60)), run: admissibility_loop },
    Criterion { id: 8, title: "monotonicity and image", limit: None, run: monotonicity_and_image },
    Criterion { id: 9, title: "generating function", limit: None, run: generating_function },
    Criterion { id: 10, title: "omega polynomials", limit: None, run: omega_polynomials },
];

pub fn criterion_ids() -> impl Iterator<Item = u8> {
    CRITERIA.iter().map(|c| c.id)
}

pub fn run_criterion(id: u8, config: &AcceptanceConfig) -> Option<CriterionOutcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = (c.run)(config);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(Failure(d)) => (false, d),
    };
    if let Some(limit) = c.limit {
        if elapsed > limit {
            passed = false;
            detail = format!("exceeded {:.0}s; {detail}", limit.as_secs_f64());
        }
    }
    Some(CriterionOutcome { id: c.id, title: c.title, passed, detail, elapsed, limit: c.limit })
}

pub fn run_all(config: &AcceptanceConfig) -> Vec<CriterionOutcome> {
    criterion_ids().filter_map(|id| run_criterion(id, config)).collect()
}

fn w(s: &str) -> Word {
    parse_word(s).expect("literal word")
}

fn width_ok(c: &BetaCertificate, bits: u32) -> bool {
    c.beta().width() <= BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Whether the enclosure brackets a root of `p`.
fn brackets_root(c: &BetaCertificate, p: &IntPoly) -> bool {
    let (a, b) = (p.sign_at(c.beta().lo()), p.sign_at(c.beta().hi()));
    a == Ordering::Equal || b == Ordering::Equal || a != b
}

fn golden_bases(_: &AcceptanceConfig) -> Check {
    let mut notes = Vec::new();
    for (word, poly) in [("(10)", &[-2, -1, 1][..]), ("1(0)", &[-1, -1, 1]), ("100(11)", &[-1, -1, 0, 1])] {
        let start = Instant::now();
        let c = compute_beta(&w(word))?;
        let t = start.elapsed();
        ensure!(t < Duration::from_secs(1), "{word} took {t:?}");
        ensure!(width_ok(&c, 64), "{word}: width above 2^-64");
        ensure!(brackets_root(&c, &IntPoly::from_i64s(poly)), "{word}: {} misses the root", c.beta());
        ensure!(c.beta().lo() > &BigRational::one(), "{word}: enclosure not above 1");
        notes.push(format!("{word}≈{:.10}", c.beta().to_f64()));
    }
    ensure!(compute_beta(&w("(10)"))?.beta().contains(&BigRational::from_integer(2.into())), "2 not enclosed");
    Ok(notes.join(", "))
}

fn gamma_cascade(_: &AcceptanceConfig) -> Check {
    let mut prev: Option<PrecisionReal> = None;
    for n in 0..=8usize {
        let c = compute_beta(&phi_witness(n)?)?;
        let l = phi_length(n).max(if n == 0 { 2 } else { 2 * phi_length(n - 1) });
        ensure!(gamma_relation(&c, l as u32).contains_zero(), "n={n}: relation with l={l} excludes 0");
        ensure!(c.beta().lo() > &BigRational::one(), "n={n}: not above 1");
        if let Some(p) = &prev {
            ensure!(p.lo() > c.beta().hi(), "n={n}: not strictly below the previous base");
        }
        prev = Some(c.beta().clone());
    }
    let g8 = prev.expect("nonempty");
    ensure!(g8.hi() < &BigRational::new(105.into(), 100.into()), "gamma_8 = {} not below 1.05", g8);
    Ok(format!("gamma_8≈{:.6}", g8.to_f64()))
}

/// A random eventually periodic Lyndon word over `{0, …, max}`.
fn random_generator(rng: &mut ChaCha8Rng, max: Letter) -> Word {
    loop {
        let pre: Vec<Letter> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..=max)).collect();
        let per: Vec<Letter> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..=max)).collect();
        let d = Word::eventually_periodic(pre, per).expect("nonempty period");
        if d.first() > 0 && is_lyndon(&d) {
            return d;
        }
    }
}

fn counting_oracle(cfg: &AcceptanceConfig) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut words = 0usize;
    for _ in 0..50 {
        let d = random_generator(&mut rng, 2);
        let table = count_recurrence(&d, 10)?;
        for n in 1..=10 {
            let list = enumerate_language(&d, n, cfg.enumeration_cap)?;
            words += list.len();
            ensure!(
                *table.get(n) == BigInt::from(list.len()),
                "{d} n={n}: recurrence {} vs enumeration {}",
                table.get(n),
                list.len()
            );
            for _ in 0..4 {
                let i = rng.gen_range(0..list.len());
                let j = rng.gen_range(i..list.len());
                let g = count_interval(&list[i], &list[j], &d)?;
                ensure!(g == BigInt::from(j - i + 1), "{d}: interval [{}, {}] counted {g}", list[i], list[j]);
            }
        }
    }
    Ok(format!("50 generators, {words} enumerated words"))
}

fn fixed_point_prefix(_: &AcceptanceConfig) -> Check {
    let got: String = phi_limit_prefix(43)?.iter().map(|l| l.to_string()).collect();
    ensure!(got == PHI_PREFIX_43, "got {got}");
    Ok(got)
}

fn morphic_lengths(_: &AcceptanceConfig) -> Check {
    for n in 1..=20usize {
        let (a, b) = (phi_length(n) as i128, phi_length(n - 1) as i128);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        ensure!(a == 2 * b - sign, "n={n}: {a} vs 2·{b} − {sign}");
        ensure!(a % 2 == 1, "n={n}: {a} even");
        ensure!(phi_power(n)?.len() as i128 == a, "n={n}: materialized length differs");
    }
    Ok(format!("|u_20| = {}", phi_length(20)))
}

fn entropy_classifier(cfg: &AcceptanceConfig) -> Check {
    let mut failures = Vec::new();
    let mut zero = vec![w("(0)"), w("100(0)")];
    for n in 0..=8 {
        zero.push(Word::periodic(phi_power(n)?.preperiod().to_vec()).expect("nonempty"));
    }
    for d in &zero {
        match entropy_sign(d) {
            Ok(EntropySign::Zero { .. }) => {}
            Ok(s) => failures.push(format!("{d}: expected zero entropy, got {s:?}")),
            Err(e) => failures.push(format!("{d}: {e}")),
        }
    }
    for n in 0..=8 {
        let d = phi_witness(n)?;
        if !entropy_sign(&d)?.is_positive() {
            failures.push(format!("u_{n}·v_{n}: expected positive entropy"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 6);
    let mut sampled = zero.clone();
    sampled.extend((0..60).map(|_| random_generator(&mut rng, 1)));
    for d in &sampled {
        let positive = entropy_sign(d).map(|s| s.is_positive()).unwrap_or(false);
        let has_base = compute_beta(d).is_ok();
        if positive != has_base {
            failures.push(format!("{d}: positive={positive} but base found={has_base}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} zero-entropy words, 9 witnesses, {} iff samples", zero.len(), sampled.len()))
    } else {
        Err(Failure(failures.join("; ")))
    }
}

fn expansion_reproduces(d: &Word, cert: &BetaCertificate) -> Result<bool, Failure> {
    let e = expand(&BetaNumber::l_beta(), cert, 64)?;
    Ok(e.integer_digits == 0 && e.period.word() == Some(d))
}

fn admissibility_loop(_: &AcceptanceConfig) -> Check {
    let mut found: Vec<Word> = Vec::new();
    'search: for max in 1..=2u16 {
        for pre_len in 0..=2usize {
            for per_len in 1..=3usize {
                for code in 0..(max as usize + 1).pow((pre_len + per_len) as u32) {
                    let mut c = code;
                    let mut letters = Vec::new();
                    for _ in 0..pre_len + per_len {
                        letters.push((c % (max as usize + 1)) as Letter);
                        c /= max as usize + 1;
                    }
                    let per = letters.split_off(pre_len);
                    let d = Word::eventually_periodic(letters, per).expect("nonempty");
                    if d == w("(2)") || found.contains(&d) || !is_lyndon(&d) {
                        continue;
                    }
                    if admissible(&d)?.admissible() {
                        found.push(d);
                        if found.len() >= 8 {
                            break 'search;
                        }
                    }
                }
            }
        }
    }
    ensure!(found.len() >= 5, "only {} admissible words found", found.len());
    let mut checked = vec![w("(2)")];
    checked.extend(found);
    for d in &checked {
        let report = admissible(d)?;
        ensure!(report.admissible(), "{d} not admissible");
        let cert = report.beta.ok_or_else(|| Failure(format!("{d}: no base attached")))?;
        ensure!(expansion_reproduces(d, &cert)?, "{d}: expansion of l_beta differs");
    }
    let r = admissible(&w("(10)"))?;
    ensure!(!r.admissible(), "(10) reported admissible");
    ensure!(
        r.cond_b.membership == LynMembership::Witness { witness: w("(2)") },
        "(10): witness {:?}",
        r.cond_b.membership
    );
    let r = admissible(&w("(1)"))?;
    ensure!(!r.admissible() && !r.cond_c, "(1) should fail the threshold condition");
    let names: Vec<String> = checked.iter().map(|d| d.to_string()).collect();
    Ok(format!("closed loop for {}", names.join(" ")))
}

fn monotonicity_and_image(cfg: &AcceptanceConfig) -> Check {
    let n = 8usize;
    let mut notes = Vec::new();
    for word in ["(2)", "(10)", "1(0)"] {
        let d = w(word);
        let cert = compute_beta(&d)?;
        let list = enumerate_language(&d, n, cfg.enumeration_cap)?;
        let values: Vec<BetaNumber> = list.iter().map(|x| cert.simplify(&f_beta_exact(x))).collect();
        for (i, pair) in values.windows(2).enumerate() {
            ensure!(
                cert.sign_of(&(&pair[1] - &pair[0]))? != Ordering::Less,
                "{word}: f decreases between {} and {}",
                list[i],
                list[i + 1]
            );
        }
        let images = list.iter().map(|x| cylinder_image(x.preperiod(), &d, &cert)).collect::<Result<Vec<_>, _>>()?;
        ensure!(
            cert.sign_of(&(&images[0].lower - &BetaNumber::l_beta()))? == Ordering::Equal,
            "{word}: image misses l"
        );
        ensure!(
            cert.sign_of(&(&images[images.len() - 1].upper - &BetaNumber::r_beta()))? == Ordering::Equal,
            "{word}: image misses r"
        );
        let mut touching = 0;
        for (i, pair) in images.windows(2).enumerate() {
            match cert.sign_of(&(&pair[1].lower - &pair[0].upper))? {
                Ordering::Less => {
                    return Err(Failure(format!("{word}: images of {} and {} overlap", list[i], list[i + 1])))
                }
                Ordering::Greater => {}
                Ordering::Equal => {
                    touching += 1;
                    let (x, y) = (list[i].preperiod(), list[i + 1].preperiod());
                    if x[..n - 1] != y[..n - 1] {
                        continue;
                    }
                    let expected = if n % 2 == 0 { x[n - 1] + 1 } else { x[n - 1].wrapping_sub(1) };
                    ensure!(
                        y[n - 1] == expected,
                        "{word}: {} touches {} but is not its successor",
                        list[i],
                        list[i + 1]
                    );
                    // the binding tails swap with the sign of (−β)^{−n}
                    let (dx, dy) = if n % 2 == 1 { (d.clone(), d.prepend(&[0])) } else { (d.prepend(&[0]), d.clone()) };
                    for (v, side) in [(dx.prepend(x), "left"), (dy.prepend(y), "right")] {
                        let v = cert.simplify(&f_beta_exact(&v));
                        ensure!(
                            cert.sign_of(&(&v - &pair[0].upper))? == Ordering::Equal,
                            "{word}: {side} touching formula fails for {} {}",
                            list[i],
                            list[i + 1]
                        );
                    }
                }
            }
        }
        let beta = cert.beta();
        let one = PrecisionReal::from_int(1);
        let bound = PrecisionReal::from_int(d.first() as i64)
            .checked_div(&(&beta.powi(n as u32) * &(beta - &one)))
            .ok_or_else(|| Failure(format!("{word}: base enclosure touches 1")))?;
        let max_gap = cert.enclose(&(&BetaNumber::r_beta() - &values[values.len() - 1]))?;
        let min_gap = cert.enclose(&(&values[0] - &BetaNumber::l_beta()))?;
        for (name, gap) in [("max", max_gap), ("min", min_gap)] {
            ensure!(gap.abs_max() <= *bound.lo(), "{word}: {name} gap {gap} above {bound}");
        }
        notes.push(format!("{word}: {} words, {touching} touching", list.len()));
    }
    Ok(notes.join(", "))
}

fn generating_function(_: &AcceptanceConfig) -> Check {
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
    let mut notes = Vec::new();
    for word in ["(10)", "1(0)", "100(11)"] {
        let d = w(word);
        let c = compute_beta(&d)?;
        let z = (BigRational::from_integer(2.into()) * c.beta().hi()).recip();
        let r = check_generating_identity(&d, &z, 40)?;
        ensure!(r.hi() < &tol, "{word}: residual {r}");
        notes.push(format!("{word}: {:.1e}", r.to_f64()));
    }
    Ok(notes.join(", "))
}

fn omega_polynomials(_: &AcceptanceConfig) -> Check {
    for n in 0..=5 {
        ensure!(check_omega_polynomial(n), "n={n}: coefficients differ");
    }
    Ok("n = 0..5 equal".into())
}
