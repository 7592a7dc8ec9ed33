//! Command implementations behind the `heisfree` binary.
//!
//! Each command returns a [`VerdictReport`], a single JSON document with a
//! fixed schema:
//!
//! ```text
//! {
//!   "command":     "check" | "cartan" | "refute" | "sweep" | "heis" | "lu" | "vquat",
//!   "input":       echo of the parsed arguments,
//!   "exactness":   "exact" | "floating",
//!   "verdict":     "certified_free" | "non_free_witness" | "not_covered" | null,
//!   "certificate": criterion tag, witness word, reason, or null,
//!   "diagnostics": { name: {"kind": ..., "value": ..., ["tolerance": ...]} }
//! }
//! ```
//!
//! Exact values are strings in the scalar text format. Floating values only
//! appear under diagnostics of kind `float` or `approx`, and those always
//! carry the tolerance in force. Diagnostics are keyed in sorted order, so
//! output is byte-for-byte reproducible.
//!
//! `sweep` additionally writes one [`SweepRecord`] per line to its output file.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{
    cartan_invariant, circle_residual, decompose_generators, mu_from_nu, BoundaryTriple,
    CartanError,
};
use crate::freeness::{
    check_free_lu, check_free_main, check_free_main_searching, check_free_quat,
    check_free_vertical_quat, embed_2x2, flawed_bound, flawed_condition, generator_pair,
    identity_word_search_with, lyndon_ullman_pair, nu_squared_bound, threshold_from_nu_squared,
    trace_ab, word_evaluate, Criterion, FreenessError, FreenessVerdict, GeneratorPair,
    SearchConfig, SearchError, VerdictKind,
};
use crate::heisenberg::{heis_mul, heis_translation_matrix, is_vertical, HeisPoint};
use crate::hermitian::{is_unitary_within, standard_lift, Matrix2, Matrix3};
use crate::scalars::{
    ExactComplex, ExactScalar, ImaginaryQuat, ParseError, Quaternion, Rational, Scalar, ScalarPath,
    DEFAULT_TOL,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Freeness(#[from] FreenessError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 1 for anything the caller can fix, 2 for a broken invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

impl From<CartanError> for CliError {
    fn from(e: CartanError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    Floating,
}

impl From<ScalarPath> for Exactness {
    fn from(p: ScalarPath) -> Self {
        if p.is_exact() {
            Exactness::Exact
        } else {
            Exactness::Floating
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    /// An exact value in the scalar text format.
    Exact {
        value: String,
    },
    /// A floating number.
    Float {
        value: f64,
        tolerance: f64,
    },
    /// Text built from floating numbers (quaternions, matrices).
    Approx {
        value: String,
        tolerance: f64,
    },
    Flag {
        value: bool,
    },
    Count {
        value: u64,
    },
    Text {
        value: String,
    },
}

impl Diagnostic {
    pub fn exact(v: impl fmt::Display) -> Self {
        Diagnostic::Exact {
            value: v.to_string(),
        }
    }

    /// Exact or approximate text, depending on the scalar path.
    fn scalar<S: Scalar>(v: impl fmt::Display, tol: f64) -> Self {
        if S::PATH.is_exact() {
            Diagnostic::exact(v)
        } else {
            Diagnostic::Approx {
                value: v.to_string(),
                tolerance: tol,
            }
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Exact { value } | Diagnostic::Text { value } => f.write_str(value),
            Diagnostic::Float { value, tolerance } => {
                if *value == 0.0 || (1e-4..1e6).contains(&value.abs()) {
                    write!(f, "{value} (tol {tolerance:e})")
                } else {
                    write!(f, "{value:e} (tol {tolerance:e})")
                }
            }
            Diagnostic::Approx { value, tolerance } => write!(f, "{value} (tol {tolerance:e})"),
            Diagnostic::Flag { value } => write!(f, "{value}"),
            Diagnostic::Count { value } => write!(f, "{value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictReport {
    pub command: String,
    pub input: String,
    pub exactness: Exactness,
    pub verdict: Option<VerdictKind>,
    pub certificate: Option<String>,
    pub diagnostics: BTreeMap<String, Diagnostic>,
}

impl VerdictReport {
    fn new(command: &str, input: String, exactness: Exactness) -> Self {
        Self {
            command: command.to_string(),
            input,
            exactness,
            verdict: None,
            certificate: None,
            diagnostics: BTreeMap::new(),
        }
    }

    fn set_verdict(&mut self, v: &FreenessVerdict) {
        self.verdict = Some(v.kind());
        self.certificate = Some(v.certificate());
    }

    fn put(&mut self, key: &str, d: Diagnostic) {
        self.diagnostics.insert(key.to_string(), d);
    }

    fn flag(&mut self, key: &str, value: bool) {
        self.put(key, Diagnostic::Flag { value });
    }

    fn count(&mut self, key: &str, value: usize) {
        self.put(
            key,
            Diagnostic::Count {
                value: value as u64,
            },
        );
    }

    fn exact(&mut self, key: &str, v: impl fmt::Display) {
        self.put(key, Diagnostic::exact(v));
    }

    fn float(&mut self, key: &str, value: f64, tolerance: f64) {
        self.put(key, Diagnostic::Float { value, tolerance });
    }

    pub fn diagnostic(&self, key: &str) -> Option<&Diagnostic> {
        self.diagnostics.get(key)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => serde_json::to_string(self).expect("report serializes"),
            Format::Pretty => self.to_string(),
        }
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.command, self.input)?;
        if let Some(v) = self.verdict {
            let kind = serde_json::to_value(v).expect("verdict serializes");
            writeln!(f, "verdict: {}", kind.as_str().unwrap_or_default())?;
        }
        if let Some(c) = &self.certificate {
            writeln!(f, "certificate: {c}")?;
        }
        let exactness = match self.exactness {
            Exactness::Exact => "exact",
            Exactness::Floating => "floating",
        };
        writeln!(f, "exactness: {exactness}")?;
        let width = self.diagnostics.keys().map(String::len).max().unwrap_or(0);
        for (k, d) in &self.diagnostics {
            let text = d.to_string();
            if text.contains('\n') {
                writeln!(f, "  {k}:")?;
                for line in text.lines() {
                    writeln!(f, "    {line}")?;
                }
            } else {
                writeln!(f, "  {k:width$}  {text}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Structured,
    Pretty,
}

/// Flags shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct CommonOpts {
    /// Maximum word length for the identity-word search; 0 disables it.
    pub depth: usize,
    pub tol: f64,
    pub workers: usize,
}

impl Default for CommonOpts {
    fn default() -> Self {
        Self {
            depth: 0,
            tol: DEFAULT_TOL,
            workers: 1,
        }
    }
}

impl CommonOpts {
    fn validate(&self) -> Result<(), CliError> {
        if !self.tol.is_finite() || self.tol < 0.0 {
            return Err(CliError::InvalidArgument(format!(
                "tolerance must be finite and nonnegative, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    fn search(&self, max_len: usize) -> SearchConfig {
        SearchConfig::new(max_len)
            .with_workers(self.workers)
            .with_tol(self.tol)
    }
}

/// Matrices print one row per line in reports.
fn matrix_text<S: Scalar + fmt::Display>(m: &Matrix3<S>) -> String {
    m.m.iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn verify_witness<S: Scalar>(
    pair: &GeneratorPair<S>,
    v: &FreenessVerdict,
    tol: f64,
) -> Result<(), CliError> {
    if let FreenessVerdict::NonFreeWitness(w) = v {
        if !word_evaluate(pair, w).is_projective_identity(tol) {
            return Err(CliError::Invariant(format!(
                "witness {w} does not evaluate to the identity"
            )));
        }
    }
    Ok(())
}

/// Circle data for `mu` on the circle: `nu`, the tangent pair of the standard
/// triple and the floating angle.
fn circle_diagnostics(
    report: &mut VerdictReport,
    mu: &ExactComplex,
    tol: f64,
) -> Result<(), CliError> {
    if mu.is_zero() || !circle_residual(mu).is_zero() {
        return Ok(());
    }
    let nu = -mu.im().checked_div(&mu.norm_sqr()).expect("mu is nonzero");
    let inv = cartan_invariant(&BoundaryTriple::standard(&nu))?;
    let (im, re) = inv.tangent_pair();
    report.exact("nu", &nu);
    report.exact("tangent_im", im);
    report.exact("tangent_re", re);
    if let Some(t) = inv.tan() {
        report.exact("tangent", t);
    }
    report.float("angle", inv.angle(), tol);
    report.flag(
        "nu_squared_bound_holds",
        inv.tan_squared_at_most(&nu_squared_bound().into()),
    );
    Ok(())
}

/// Condition checker for `mu`, upgraded by the word search when `depth > 0`.
pub fn cmd_check(mu: &str, path: ScalarPath, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    let input = format!("mu={mu} path={path} depth={}", opts.depth);
    match path {
        ScalarPath::Complex => check_complex(mu.parse()?, input, opts),
        ScalarPath::Quaternion => {
            if opts.depth > 0 {
                return Err(CliError::Unsupported(
                    "the identity-word search is exact and only runs on the complex path; use --depth 0 with \
                     --path quaternion"
                        .into(),
                ));
            }
            check_quaternion(mu.parse()?, input, opts)
        }
    }
}

fn check_complex(
    mu: ExactComplex,
    input: String,
    opts: &CommonOpts,
) -> Result<VerdictReport, CliError> {
    let mut report = VerdictReport::new("check", input, Exactness::Exact);
    let verdict = if opts.depth > 0 {
        let v = check_free_main_searching(&mu, &opts.search(opts.depth))?;
        verify_witness(&generator_pair(mu.clone()), &v, opts.tol)?;
        report.count("search_depth", opts.depth);
        v
    } else {
        check_free_main(&mu)
    };
    if let FreenessVerdict::NonFreeWitness(w) = &verdict {
        report.count("witness_length", w.len());
        report.flag("witness_reevaluates_to_identity", true);
    }
    report.exact("mu", &mu);
    report.exact("mu_norm_sqr", mu.norm_sqr());
    report.exact("circle_residual", circle_residual(&mu));
    report.exact("trace_ab", trace_ab(&mu));
    circle_diagnostics(&mut report, &mu, opts.tol)?;
    report.set_verdict(&verdict);
    Ok(report)
}

fn check_quaternion(
    mu: Quaternion,
    input: String,
    opts: &CommonOpts,
) -> Result<VerdictReport, CliError> {
    let mut report = VerdictReport::new("check", input, Exactness::Floating);
    let check = check_free_quat(mu, opts.tol)?;
    let tol = opts.tol;
    report.put("mu", Diagnostic::scalar::<Quaternion>(mu, tol));
    report.put("tau", Diagnostic::scalar::<Quaternion>(check.tau, tol));
    report.put(
        "conjugator",
        Diagnostic::scalar::<Quaternion>(check.conjugator, tol),
    );
    report.float("circle_residual", check.circle_residual, tol);
    report.float("mu_norm_sqr", mu.norm_sqr(), tol);
    report.float("trace_ab", trace_ab(&mu), tol);
    let slice_residual = (check.conjugator * check.tau * check.conjugator.conj()).distance(mu);
    report.float("slice_residual", slice_residual, tol);
    report.set_verdict(&check.verdict);
    Ok(report)
}

/// How `cartan` receives its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanInput {
    Nu(String),
    /// `nu^2` directly, for boundary values such as `125/3` whose square
    /// root is irrational.
    NuSquared(String),
}

pub fn cmd_cartan(input: &CartanInput, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    match input {
        CartanInput::Nu(text) => cartan_from_nu(text, opts),
        CartanInput::NuSquared(text) => cartan_from_nu_squared(text, opts),
    }
}

fn cartan_from_nu(text: &str, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    let nu: ExactScalar = text.parse()?;
    let mut report = VerdictReport::new("cartan", format!("nu={text}"), Exactness::Exact);
    let mu = mu_from_nu(&nu);
    let d = decompose_generators(&mu)?;
    let pair = generator_pair(mu.clone());
    let a_ok = d.i0().mul(d.i2()) == pair.a;
    let b_ok = d.i2().mul(d.i1()) == pair.b;
    let involutions = d.inversions.iter().all(|m| m.mul(m) == Matrix3::identity());

    let nu_sq = &nu * &nu;
    let bound: ExactScalar = nu_squared_bound().into();
    let nu_bound_holds = nu_sq <= bound;
    let verdict = check_free_main(&mu);
    if nu_bound_holds != verdict.is_certified_free() {
        return Err(CliError::Invariant(format!(
            "nu^2 <= 125/3 is {nu_bound_holds} but the threshold check disagrees at nu = {nu}"
        )));
    }

    report.exact("nu", &nu);
    report.exact("nu_squared", &nu_sq);
    report.exact("nu_squared_bound", &bound);
    report.flag("nu_squared_bound_holds", nu_bound_holds);
    report.exact("mu", &mu);
    report.exact("mu_norm_sqr", mu.norm_sqr());
    report.flag("mu_norm_sqr_threshold_holds", verdict.is_certified_free());
    circle_diagnostics(&mut report, &mu, opts.tol)?;
    report.flag("a_equals_i0_i2", a_ok);
    report.flag("b_equals_i2_i1", b_ok);
    report.flag("inversions_are_involutions", involutions);
    for (k, c) in d.polars.iter().enumerate() {
        report.exact(&format!("polar_c{k}"), c.vector());
    }
    report.set_verdict(&verdict);
    Ok(report)
}

fn cartan_from_nu_squared(text: &str, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    let value: ExactScalar = text.parse()?;
    let nu_sq = value
        .as_rational()
        .cloned()
        .ok_or_else(|| CliError::InvalidArgument(format!("nu^2 must be rational, got {value}")))?;
    if nu_sq < Rational::from_integer(0.into()) {
        return Err(CliError::InvalidArgument(format!(
            "nu^2 must be nonnegative, got {nu_sq}"
        )));
    }
    let mut report = VerdictReport::new("cartan", format!("nu_squared={text}"), Exactness::Exact);
    let t = threshold_from_nu_squared(&nu_sq);
    if t.condition_holds != t.nu_bound_holds {
        return Err(CliError::Invariant(format!(
            "threshold sides disagree at nu^2 = {nu_sq}"
        )));
    }
    report.exact("nu_squared", ExactScalar::from(nu_sq.clone()));
    report.exact("nu_squared_bound", ExactScalar::from(nu_squared_bound()));
    report.flag("nu_squared_bound_holds", t.nu_bound_holds);
    report.flag("nu_squared_bound_equality", nu_sq == nu_squared_bound());
    report.exact("mu_norm_sqr", ExactScalar::from(t.mu_squared.clone()));
    report.flag("mu_norm_sqr_threshold_holds", t.condition_holds);
    let nu_f = ExactScalar::from(nu_sq).to_f64().sqrt();
    report.float("angle_abs", nu_f.atan(), opts.tol);
    let verdict = if t.condition_holds {
        FreenessVerdict::CertifiedFree(Criterion::CircleThreshold)
    } else {
        FreenessVerdict::NotCovered(format!("|mu|^2 = {} < 3/128", t.mu_squared))
    };
    report.set_verdict(&verdict);
    Ok(report)
}

/// Reproduces the counterexample `mu = -3/4` to the older criterion.
pub fn cmd_refute(opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    let mu = ExactComplex::from_ratios((-3, 4), (0, 1));
    let mut report = VerdictReport::new("refute", "mu=-3/4".into(), Exactness::Exact);
    let pair = generator_pair(mu.clone());
    let ab = pair.a.mul(&pair.b);
    let order = (1..=6)
        .map(|k| (k, ab.pow(k)))
        .find(|(_, m)| m.is_projective_identity(0.0))
        .map(|(k, _)| k)
        .ok_or_else(|| CliError::Invariant("AB has no order up to 6".into()))?;
    let cube = ab.pow(3);
    let lambda = cube
        .scalar_multiple_of_identity(0.0)
        .ok_or_else(|| CliError::Invariant("(AB)^3 is not scalar".into()))?;
    let witness = identity_word_search_with(&pair, &opts.search(6))?
        .ok_or_else(|| CliError::Invariant("no identity word up to length 6".into()))?;
    let verdict = FreenessVerdict::NonFreeWitness(witness);
    verify_witness(&pair, &verdict, 0.0)?;

    report.exact("mu", &mu);
    report.exact("circle_residual", circle_residual(&mu));
    report.float("flawed_bound", flawed_bound(), opts.tol);
    report.float("mu_abs", mu.norm_sqr().to_f64().sqrt(), opts.tol);
    report.flag("flawed_condition", flawed_condition(&mu));
    report.put("ab_matrix", Diagnostic::exact(matrix_text(&ab)));
    report.exact("trace_ab", trace_ab(&mu));
    report.put("ab_cubed", Diagnostic::exact(matrix_text(&cube)));
    report.exact("ab_cubed_scalar", lambda);
    report.count("order", order as usize);
    report.flag("witness_reevaluates_to_identity", true);
    report.set_verdict(&verdict);
    Ok(report)
}

/// One line of `sweep` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRecord {
    pub index: usize,
    pub nu: String,
    pub nu_squared: String,
    pub mu: String,
    pub mu_norm_sqr: String,
    pub nu_squared_bound_holds: bool,
    pub verdict: VerdictKind,
    pub certificate: String,
    pub tangent_im: String,
    pub tangent_re: String,
    /// Floating angle in radians.
    pub angle_float: f64,
    pub tolerance: f64,
}

/// `steps` evenly spaced samples of `nu` in `[nu_min, nu_max]`.
pub fn sweep_records(
    nu_min: &ExactScalar,
    nu_max: &ExactScalar,
    steps: usize,
    opts: &CommonOpts,
) -> Result<Vec<SweepRecord>, CliError> {
    opts.validate()?;
    if steps == 0 {
        return Err(CliError::InvalidArgument("steps must be at least 1".into()));
    }
    if nu_min > nu_max {
        return Err(CliError::InvalidArgument(format!(
            "nu_min = {nu_min} exceeds nu_max = {nu_max}"
        )));
    }
    let span = nu_max - nu_min;
    let bound: ExactScalar = nu_squared_bound().into();
    (0..steps)
        .map(|k| {
            let nu = if steps == 1 {
                nu_min.clone()
            } else {
                nu_min + &span.scale(&Rational::new(k.into(), (steps - 1).into()))
            };
            let mu = mu_from_nu(&nu);
            let verdict = if opts.depth > 0 {
                let v = check_free_main_searching(&mu, &opts.search(opts.depth))?;
                verify_witness(&generator_pair(mu.clone()), &v, opts.tol)?;
                v
            } else {
                check_free_main(&mu)
            };
            let inv = cartan_invariant(&BoundaryTriple::standard(&nu))?;
            let (im, re) = inv.tangent_pair();
            let nu_sq = &nu * &nu;
            Ok(SweepRecord {
                index: k,
                nu: nu.to_string(),
                nu_squared_bound_holds: nu_sq <= bound,
                nu_squared: nu_sq.to_string(),
                mu: mu.to_string(),
                mu_norm_sqr: mu.norm_sqr().to_string(),
                verdict: verdict.kind(),
                certificate: verdict.certificate(),
                tangent_im: im.to_string(),
                tangent_re: re.to_string(),
                angle_float: inv.angle(),
                tolerance: opts.tol,
            })
        })
        .collect()
}

/// Writes [`sweep_records`] to `out` as JSON lines and returns a summary.
pub fn cmd_sweep(
    nu_min: &str,
    nu_max: &str,
    steps: usize,
    out: &Path,
    opts: &CommonOpts,
) -> Result<VerdictReport, CliError> {
    let lo: ExactScalar = nu_min.parse()?;
    let hi: ExactScalar = nu_max.parse()?;
    let records = sweep_records(&lo, &hi, steps, opts)?;
    let io_err = |source| CliError::Io {
        path: out.display().to_string(),
        source,
    };
    let file = std::fs::File::create(out).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    for r in &records {
        let line = serde_json::to_string(r).expect("record serializes");
        writeln!(w, "{line}").map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;

    let mut report = VerdictReport::new(
        "sweep",
        format!(
            "nu_min={nu_min} nu_max={nu_max} steps={steps} depth={}",
            opts.depth
        ),
        Exactness::Exact,
    );
    let tally = |kind| records.iter().filter(|r| r.verdict == kind).count();
    report.count("records", records.len());
    report.count("certified_free", tally(VerdictKind::CertifiedFree));
    report.count("non_free_witness", tally(VerdictKind::NonFreeWitness));
    report.count("not_covered", tally(VerdictKind::NotCovered));
    report.put(
        "output",
        Diagnostic::Text {
            value: out.display().to_string(),
        },
    );
    if let Some(r) = records.windows(2).find(|w| w[0].verdict != w[1].verdict) {
        report.exact("last_nu_before_flip", &r[0].nu);
        report.exact("first_nu_after_flip", &r[1].nu);
    }
    Ok(report)
}

/// Heisenberg group-law calculator on either path.
pub fn cmd_heis(
    p: &str,
    q: &str,
    path: ScalarPath,
    opts: &CommonOpts,
) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    let input = format!("p={p} q={q} path={path}");
    match path {
        ScalarPath::Complex => heis_report::<ExactComplex>(p.parse()?, q.parse()?, input, opts.tol),
        ScalarPath::Quaternion => {
            heis_report::<Quaternion>(p.parse()?, q.parse()?, input, opts.tol)
        }
    }
}

fn heis_report<S>(
    p: HeisPoint<S>,
    q: HeisPoint<S>,
    input: String,
    tol: f64,
) -> Result<VerdictReport, CliError>
where
    S: Scalar + fmt::Display,
    HeisPoint<S>: fmt::Display,
{
    let mut report = VerdictReport::new("heis", input, S::PATH.into());
    let pq = heis_mul(&p, &q);
    let qp = heis_mul(&q, &p);
    let tp = heis_translation_matrix(&p);
    let tq = heis_translation_matrix(&q);
    let tpq = heis_translation_matrix(&pq);
    let composed = tp.mul(&tq);

    report.put("product", Diagnostic::scalar::<S>(&pq, tol));
    report.put("reverse_product", Diagnostic::scalar::<S>(&qp, tol));
    report.put("inverse_p", Diagnostic::scalar::<S>(p.inverse(), tol));
    report.put(
        "translation_p",
        Diagnostic::scalar::<S>(matrix_text(&tp), tol),
    );
    report.put(
        "translation_q",
        Diagnostic::scalar::<S>(matrix_text(&tq), tol),
    );
    report.put(
        "translation_product",
        Diagnostic::scalar::<S>(matrix_text(&tpq), tol),
    );
    report.put(
        "lift_of_product",
        Diagnostic::scalar::<S>(standard_lift(&pq), tol),
    );
    report.flag("p_vertical", is_vertical(&p));
    report.flag("q_vertical", is_vertical(&q));
    report.flag(
        "translations_unitary",
        is_unitary_within(&tp, tol) && is_unitary_within(&tq, tol),
    );
    if S::PATH.is_exact() {
        report.flag("homomorphism", composed == tpq);
        report.flag("commute", pq == qp);
    } else {
        report.float(
            "homomorphism_residual",
            composed.sub(&tpq).max_magnitude(),
            tol,
        );
        report.flag("homomorphism", composed.approx_eq(&tpq, tol));
        report.flag("commute", heis_translation_matrix(&qp).approx_eq(&tpq, tol));
    }
    Ok(report)
}

/// Lyndon-Ullman check for the embedded pair `(1, m; 0, 1)`, `(1, 0; n, 1)`.
pub fn cmd_lu(m: &str, n: &str, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    let mv: ExactComplex = m.parse()?;
    let nv: ExactComplex = n.parse()?;
    let mut report = VerdictReport::new("lu", format!("m={m} n={n}"), Exactness::Exact);
    let verdict = check_free_lu(&mv, &nv);
    let (a1, b1) = lyndon_ullman_pair(&mv, &nv);
    let one = ExactComplex::one;
    let m2 = Matrix2::new(one(), mv.clone(), ExactComplex::zero(), one());
    let n2 = Matrix2::new(one(), ExactComplex::zero(), nv.clone(), one());
    let multiplicative = embed_2x2(&m2.mul(&n2)) == a1.mul(&b1);
    if !multiplicative {
        return Err(CliError::Invariant(
            "the 2x2 embedding is not multiplicative".into(),
        ));
    }
    report.exact("m", &mv);
    report.exact("n", &nv);
    report.exact("mn_norm_sqr", mv.norm_sqr() * nv.norm_sqr());
    report.put("a1", Diagnostic::exact(matrix_text(&a1)));
    report.put("b1", Diagnostic::exact(matrix_text(&b1)));
    report.flag("embedding_multiplicative", multiplicative);
    report.flag("a1_unitary", is_unitary_within(&a1, 0.0));
    report.flag("b1_unitary", is_unitary_within(&b1, 0.0));
    report.set_verdict(&verdict);
    Ok(report)
}

/// Vertical quaternionic translations `I + tau E13`, `I + tau E31`.
pub fn cmd_vquat(tau: &str, opts: &CommonOpts) -> Result<VerdictReport, CliError> {
    opts.validate()?;
    let t: ImaginaryQuat = tau.parse()?;
    let tol = opts.tol;
    let mut report = VerdictReport::new("vquat", format!("tau={tau}"), Exactness::Floating);
    let check = check_free_vertical_quat(t, tol)?;
    report.put("tau", Diagnostic::scalar::<Quaternion>(t, tol));
    report.float("tau_norm", t.norm(), tol);
    report.put(
        "conjugator",
        Diagnostic::scalar::<Quaternion>(check.conjugator, tol),
    );
    report.float("conjugator_residual", check.residual, tol);
    report.put(
        "conjugated_a",
        Diagnostic::scalar::<Quaternion>(matrix_text(&check.conjugated.0), tol),
    );
    report.put(
        "conjugated_b",
        Diagnostic::scalar::<Quaternion>(matrix_text(&check.conjugated.1), tol),
    );
    report.flag(
        "pair_unitary",
        is_unitary_within(&check.pair.0, tol) && is_unitary_within(&check.pair.1, tol),
    );
    report.set_verdict(&check.verdict);
    Ok(report)
}
