//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance::{self, AcceptanceConfig};
use crate::counting::{count_interval, count_recurrence, enumerate_language, DEFAULT_ENUMERATION_CAP};
use crate::error::{CountingError, Error, LyndonError, NumericError, OrderError, WordError};
use crate::lyndon::{
    admissible, classify_lyndon, dstar, entropy_sign, in_lyn, lyn_bounds, rstar, LynMembership, LyndonClass,
};
use crate::numeric::{
    check_generating_identity, check_omega_polynomial, compute_beta_with, expand, f_beta, omega_polynomials,
    omega_word, BetaCertificate, BetaNumber, PeriodStatus, DEFAULT_PRECISION_BITS,
};
use crate::order::{alt_compare, relation_name};
use crate::word::{
    parse_word, phi_companion, phi_length, phi_limit_prefix, phi_power, phi_witness, Word, DEFAULT_PHI_CAP,
};

pub const PRECISION_ENV: &str = "NEGABETA_PRECISION_BITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub enumeration_cap: u128,
    pub phi_cap: usize,
    pub output_mode: OutputMode,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: DEFAULT_PRECISION_BITS,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            phi_cap: DEFAULT_PHI_CAP,
            output_mode: OutputMode::Text,
            seed: acceptance::DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "negabeta", version, about = "Alternate-order Lyndon words and negative base expansions")]
struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Enclosure precision in bits (default 64, or $NEGABETA_PRECISION_BITS)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=65536))]
    bits: Option<u32>,
    /// Largest number of states an enumeration may visit
    #[arg(long, global = true, value_parser = positive_u128)]
    enum_cap: Option<u128>,
    /// Largest n for which φ^n(1) is built
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    phi_cap: Option<u64>,
    /// Seed for sampled checks
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two words in the alternate order
    Cmp(PairArgs),
    /// Classify a word as a strong, weak or non Lyndon word
    Lyndon(WordArgs),
    /// Largest Lyndon word attached to the same base, and 0 d*
    Dstar(WordArgs),
    /// Membership in Lyn, or the bounds around a weak word
    Lyn(LynArgs),
    /// Full admissibility report
    Admissible(WordArgs),
    /// Counts H_0 … H_n of the language
    Hn(CountArgs),
    /// Number of words between A and B inclusive
    Gamma(GammaArgs),
    /// List the words of length n in increasing order
    Enum(EnumArgs),
    /// The base β of a Lyndon word
    Beta(WordArgs),
    /// Digits of the (−β)-expansion of x
    Expand(ExpandArgs),
    /// f_β of a word
    Feval(FevalArgs),
    /// φ^n(1) and related words
    Phi(PhiArgs),
    /// Residual of the counting generating function
    Gfcheck(GfArgs),
    /// Coefficient check of the ω polynomials
    Omegacheck(OmegaArgs),
    /// Run the acceptance suite
    Verify(VerifyArgs),
}

fn word_arg(s: &str) -> Result<Word, String> {
    parse_word(s).map_err(|e| e.to_string())
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
enum BaseSpec {
    Rational(#[serde(serialize_with = "ser_rational")] BigRational),
    Word(Word),
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// `p/q` and integers are rationals; anything else is a word literal.
fn base_arg(s: &str) -> Result<BaseSpec, String> {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-') {
        return BigRational::from_str(s).map(BaseSpec::Rational).map_err(|e| e.to_string());
    }
    word_arg(s).map(BaseSpec::Word)
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
enum PointSpec {
    Keyword(String),
    Rational(#[serde(serialize_with = "ser_rational")] BigRational),
}

fn point_arg(s: &str) -> Result<PointSpec, String> {
    match s {
        "l" | "r" => Ok(PointSpec::Keyword(s.into())),
        _ => BigRational::from_str(s).map(PointSpec::Rational).map_err(|e| e.to_string()),
    }
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args, Serialize)]
struct PairArgs {
    #[arg(value_parser = word_arg)]
    a: Word,
    #[arg(value_parser = word_arg)]
    b: Word,
}

#[derive(Debug, Args, Serialize)]
struct WordArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
}

#[derive(Debug, Args, Serialize)]
struct LynArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
    /// Print min_k and max_k for a weak word instead
    #[arg(long)]
    bounds: bool,
}

#[derive(Debug, Args, Serialize)]
struct CountArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
    n: usize,
}

#[derive(Debug, Args, Serialize)]
struct GammaArgs {
    #[arg(value_parser = word_arg)]
    a: Word,
    #[arg(value_parser = word_arg)]
    b: Word,
    /// Generator of the system
    #[arg(long, value_parser = word_arg)]
    system: Word,
}

#[derive(Debug, Args, Serialize)]
struct EnumArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
    n: usize,
    /// Print at most this many words
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
struct ExpandArgs {
    /// A rational p/q, or l / r for the interval endpoints
    #[arg(value_parser = point_arg, allow_hyphen_values = true)]
    x: PointSpec,
    /// A Lyndon word or a rational base
    #[arg(long, value_parser = base_arg)]
    beta: BaseSpec,
    /// Number of digits
    #[arg(short, default_value_t = 20)]
    n: usize,
}

#[derive(Debug, Args, Serialize)]
struct FevalArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
    #[arg(long, value_parser = base_arg)]
    beta: BaseSpec,
}

#[derive(Debug, Args, Serialize)]
struct PhiArgs {
    n: usize,
    /// Which word to print
    #[arg(long, value_enum, default_value_t = PhiKind::Power)]
    kind: PhiKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum PhiKind {
    /// u_n = φ^n(1)
    Power,
    /// v_n = u_{n−1} u_{n−1}
    Companion,
    /// u_n followed by the periodic v_n
    Witness,
    /// The first n letters of φ^∞(1)
    Limit,
}

#[derive(Debug, Args, Serialize)]
struct GfArgs {
    #[arg(value_parser = word_arg)]
    word: Word,
    /// Evaluation point (default 1/(2β))
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    #[serde(serialize_with = "ser_opt_rational")]
    z: Option<BigRational>,
    /// Number of series terms
    #[arg(short = 'N', default_value_t = 40)]
    terms: usize,
}

fn ser_opt_rational<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Args, Serialize)]
struct OmegaArgs {
    n: usize,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    /// Run a single criterion
    #[arg(long)]
    criterion: Option<u8>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("zero-entropy word: no beta > 1 exists")]
    ZeroEntropy,
    #[error("{0}")]
    Failed(String),
}

macro_rules! domain_errors {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.into())
            }
        })*
    };
}

domain_errors!(WordError, OrderError, LyndonError, CountingError, NumericError);

type CmdResult = Result<Output, CliError>;

struct Output {
    text: String,
    result: Value,
    certificates: Vec<Value>,
    success: bool,
}

impl Output {
    fn new(text: String, result: impl Serialize) -> Self {
        Output { text, result: to_value(result), certificates: Vec::new(), success: true }
    }

    fn with_certificate(mut self, c: &BetaCertificate) -> Self {
        self.certificates.push(to_value(c));
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> RunConfig {
        let env_bits = std::env::var(PRECISION_ENV).ok().and_then(|v| v.parse::<u32>().ok()).filter(|&b| b > 0);
        let d = RunConfig::default();
        RunConfig {
            precision_bits: cli.bits.or(env_bits).unwrap_or(d.precision_bits),
            enumeration_cap: cli.enum_cap.unwrap_or(d.enumeration_cap),
            phi_cap: cli.phi_cap.map(|c| c as usize).unwrap_or(d.phi_cap),
            output_mode: if cli.json { OutputMode::Json } else { OutputMode::Text },
            seed: cli.seed.unwrap_or(d.seed),
        }
    }
}

/// Parses `args`, runs the subcommand and returns the exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let config = RunConfig::from_cli(&cli);
    let (name, input) = describe(&cli.command);
    match run(&cli.command, &config) {
        Ok(o) => {
            let _ = match config.output_mode {
                OutputMode::Text => writeln!(out, "{}", o.text),
                OutputMode::Json => {
                    let v = json!({
                        "command": name,
                        "input": input,
                        "result": o.result,
                        "certificates": o.certificates,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))
                }
            };
            if o.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            1
        }
    }
}

fn describe(c: &Command) -> (&'static str, Value) {
    match c {
        Command::Cmp(a) => ("cmp", to_value(a)),
        Command::Lyndon(a) => ("lyndon", to_value(a)),
        Command::Dstar(a) => ("dstar", to_value(a)),
        Command::Lyn(a) => ("lyn", to_value(a)),
        Command::Admissible(a) => ("admissible", to_value(a)),
        Command::Hn(a) => ("hn", to_value(a)),
        Command::Gamma(a) => ("gamma", to_value(a)),
        Command::Enum(a) => ("enum", to_value(a)),
        Command::Beta(a) => ("beta", to_value(a)),
        Command::Expand(a) => ("expand", to_value(a)),
        Command::Feval(a) => ("feval", to_value(a)),
        Command::Phi(a) => ("phi", to_value(a)),
        Command::Gfcheck(a) => ("gfcheck", to_value(a)),
        Command::Omegacheck(a) => ("omegacheck", to_value(a)),
        Command::Verify(a) => ("verify", to_value(a)),
    }
}

fn run(c: &Command, cfg: &RunConfig) -> CmdResult {
    match c {
        Command::Cmp(a) => cmd_cmp(a),
        Command::Lyndon(a) => cmd_lyndon(a),
        Command::Dstar(a) => cmd_dstar(a),
        Command::Lyn(a) => cmd_lyn(a),
        Command::Admissible(a) => cmd_admissible(a),
        Command::Hn(a) => cmd_hn(a),
        Command::Gamma(a) => cmd_gamma(a),
        Command::Enum(a) => cmd_enum(a, cfg),
        Command::Beta(a) => cmd_beta(a, cfg),
        Command::Expand(a) => cmd_expand(a, cfg),
        Command::Feval(a) => cmd_feval(a, cfg),
        Command::Phi(a) => cmd_phi(a, cfg),
        Command::Gfcheck(a) => cmd_gfcheck(a, cfg),
        Command::Omegacheck(a) => cmd_omegacheck(a),
        Command::Verify(a) => cmd_verify(a, cfg),
    }
}

fn cmd_cmp(a: &PairArgs) -> CmdResult {
    let o = alt_compare(&a.a, &a.b);
    let text = match o.witness {
        Some(k) => format!("{} (k={k})", relation_name(o.relation)),
        None => relation_name(o.relation).to_string(),
    };
    Ok(Output::new(text, o))
}

fn class_text(c: &LyndonClass) -> String {
    match c {
        LyndonClass::Strong => "strong alternate Lyndon word".into(),
        LyndonClass::Weak { period } => format!("weak alternate Lyndon word (period {period})"),
        LyndonClass::NotLyndon { shift } => format!("not an alternate Lyndon word (shift {shift} is smaller)"),
    }
}

fn cmd_lyndon(a: &WordArgs) -> CmdResult {
    let c = classify_lyndon(&a.word);
    Ok(Output::new(class_text(&c), c))
}

fn cmd_dstar(a: &WordArgs) -> CmdResult {
    let d = dstar(&a.word)?;
    let r = rstar(&a.word)?;
    Ok(Output::new(format!("d* = {d}\nr* = {r}"), json!({ "dstar": d, "rstar": r })))
}

fn cmd_lyn(a: &LynArgs) -> CmdResult {
    if a.bounds {
        let (min, max) = lyn_bounds(&a.word)?;
        return Ok(Output::new(format!("min = {min}\nmax = {max}"), json!({ "min": min, "max": max })));
    }
    let m = in_lyn(&a.word)?;
    let text = match &m {
        LynMembership::Witness { witness } => format!("in Lyn: witness {witness}"),
        LynMembership::Absent => "not in Lyn".into(),
        LynMembership::Unknown { candidate } => format!("undecided: comparison budget exhausted for {candidate}"),
    };
    Ok(Output::new(text, m))
}

fn cmd_admissible(a: &WordArgs) -> CmdResult {
    let r = admissible(&a.word)?;
    let mut text = if r.admissible() {
        let beta = r.beta.as_ref().map(|c| c.beta().to_string()).unwrap_or_default();
        format!("admissible: yes, beta={beta}")
    } else {
        "admissible: no".to_string()
    };
    if !r.admissible() {
        if let Some(k) = r.cond_a.first_failing_shift {
            text += &format!("\n  shift condition fails at n={k}");
        }
        match &r.cond_b.membership {
            LynMembership::Witness { witness } => text += &format!("\n  in Lyn with witness {witness}"),
            LynMembership::Unknown { candidate } => text += &format!("\n  Lyn membership undecided ({candidate})"),
            LynMembership::Absent => {}
        }
        if !r.cond_c {
            text += "\n  not below the fixed point of the morphism";
        }
    }
    let mut o = Output::new(text, &r);
    if let Some(c) = &r.beta {
        o = o.with_certificate(c);
    }
    Ok(o)
}

fn cmd_hn(a: &CountArgs) -> CmdResult {
    let t = count_recurrence(&a.word, a.n)?;
    let text = t.values.iter().enumerate().map(|(i, h)| format!("H_{i} = {h}")).collect::<Vec<_>>().join("\n");
    Ok(Output::new(text, t))
}

fn cmd_gamma(a: &GammaArgs) -> CmdResult {
    let g = count_interval(&a.a, &a.b, &a.system)?;
    Ok(Output::new(g.to_string(), g.to_string()))
}

fn cmd_enum(a: &EnumArgs, cfg: &RunConfig) -> CmdResult {
    let list = enumerate_language(&a.word, a.n, cfg.enumeration_cap)?;
    let shown: Vec<String> = list.iter().take(a.limit.unwrap_or(usize::MAX)).map(|w| w.to_string()).collect();
    let text = if shown.is_empty() { format!("(no words; H_{} = 0)", a.n) } else { shown.join("\n") };
    Ok(Output::new(text, json!({ "count": list.len().to_string(), "words": shown })))
}

fn certificate_for(word: &Word, bits: u32) -> Result<BetaCertificate, CliError> {
    match compute_beta_with(word, bits) {
        Ok(c) => Ok(c),
        Err(NumericError::NoSignChange { .. }) if matches!(entropy_sign(word), Ok(s) if !s.is_positive()) => {
            Err(CliError::ZeroEntropy)
        }
        Err(e) => Err(e.into()),
    }
}

fn base_certificate(b: &BaseSpec, bits: u32) -> Result<BetaCertificate, CliError> {
    match b {
        BaseSpec::Rational(q) => Ok(BetaCertificate::rational(q.clone())?),
        BaseSpec::Word(w) => certificate_for(w, bits),
    }
}

fn cmd_beta(a: &WordArgs, cfg: &RunConfig) -> CmdResult {
    let c = certificate_for(&a.word, cfg.precision_bits)?;
    let text = format!(
        "beta ∈ {}\n≈ {:.12}\npolynomial: {}\ncertified: {}",
        c.beta(),
        c.beta().to_f64(),
        c.polynomial(),
        c.is_certified()
    );
    Ok(Output::new(text, c.beta()).with_certificate(&c))
}

fn digits_text(d: &[u16]) -> String {
    let wide = d.iter().any(|&l| l > 9);
    d.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(if wide { "," } else { "" })
}

fn cmd_expand(a: &ExpandArgs, cfg: &RunConfig) -> CmdResult {
    let c = base_certificate(&a.beta, cfg.precision_bits)?;
    let x = match &a.x {
        PointSpec::Keyword(k) if k == "l" => BetaNumber::l_beta(),
        PointSpec::Keyword(_) => BetaNumber::r_beta(),
        PointSpec::Rational(q) => BetaNumber::from_rational(q),
    };
    let e = expand(&x, &c, a.n)?;
    let (int, frac) = e.digits.split_at(e.integer_digits.min(e.digits.len()));
    let mut text = format!("{}.{}", digits_text(int), digits_text(frac));
    match &e.period {
        PeriodStatus::Certified { word } => text += &format!("\nperiod: {word} (certified)"),
        PeriodStatus::Unverified { word } => text += &format!("\nperiod: {word} (unverified)"),
        PeriodStatus::NotDetected => text += "\nperiod: not detected",
    }
    Ok(Output::new(text, &e).with_certificate(&c))
}

fn cmd_feval(a: &FevalArgs, cfg: &RunConfig) -> CmdResult {
    let c = base_certificate(&a.beta, cfg.precision_bits)?;
    let v = f_beta(&a.word, c.beta())?;
    Ok(Output::new(format!("{v}\n≈ {:.12}", v.to_f64()), &v).with_certificate(&c))
}

fn cmd_phi(a: &PhiArgs, cfg: &RunConfig) -> CmdResult {
    if a.kind != PhiKind::Limit && a.n > cfg.phi_cap {
        return Err(WordError::PhiCapExceeded { n: a.n, cap: cfg.phi_cap }.into());
    }
    let word = match a.kind {
        PhiKind::Power => phi_power(a.n)?,
        PhiKind::Companion => phi_companion(a.n)?,
        PhiKind::Witness => phi_witness(a.n)?,
        PhiKind::Limit => Word::finite(phi_limit_prefix(a.n)?),
    };
    let length = match a.kind {
        PhiKind::Power => phi_length(a.n).to_string(),
        _ => word.len().to_string(),
    };
    Ok(Output::new(format!("{word}\nlength: {length}"), json!({ "word": word, "length": length })))
}

fn cmd_gfcheck(a: &GfArgs, cfg: &RunConfig) -> CmdResult {
    let z = match &a.z {
        Some(z) => z.clone(),
        None => {
            let hi = match compute_beta_with(&a.word, cfg.precision_bits) {
                Ok(c) => c.beta().hi().clone(),
                Err(NumericError::NoSignChange { .. }) => BigRational::one(),
                Err(e) => return Err(e.into()),
            };
            (BigRational::from_integer(BigInt::from(2)) * hi).recip()
        }
    };
    let r = check_generating_identity(&a.word, &z, a.terms)?;
    Ok(Output::new(
        format!("z = {z}\nresidual ∈ {r}\n≈ {:.3e}", r.to_f64()),
        json!({ "z": z.to_string(), "residual": r }),
    ))
}

fn cmd_omegacheck(a: &OmegaArgs) -> CmdResult {
    let (lhs, rhs) = omega_polynomials(a.n);
    let holds = check_omega_polynomial(a.n);
    let omega = Word::finite(omega_word(a.n));
    let text = format!("omega_{} = {omega}\nlhs: {lhs}\nrhs: {rhs}\nequal: {holds}", a.n);
    let mut o =
        Output::new(text, json!({ "omega": omega, "lhs": lhs.to_string(), "rhs": rhs.to_string(), "equal": holds }));
    o.success = holds;
    Ok(o)
}

fn cmd_verify(a: &VerifyArgs, cfg: &RunConfig) -> CmdResult {
    let ac = AcceptanceConfig { seed: cfg.seed, enumeration_cap: cfg.enumeration_cap };
    let outcomes: Vec<_> = match a.criterion {
        Some(id) => {
            vec![acceptance::run_criterion(id, &ac).ok_or_else(|| CliError::Failed(format!("no criterion {id}")))?]
        }
        None => acceptance::run_all(&ac),
    };
    let text = outcomes.iter().map(|o| o.summary()).collect::<Vec<_>>().join("\n");
    let mut out = Output::new(text, &outcomes);
    out.success = outcomes.iter().all(|o| o.passed);
    Ok(out)
}
