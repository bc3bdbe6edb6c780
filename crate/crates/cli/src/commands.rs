//! The five commands. Each returns a [`Report`]: a JSON document, a text
//! rendering of the same data, and whether every verification passed.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use shifted_voa::fock::{self, FockState, FockVec};
use shifted_voa::qseries::{series_to_json, theta_coset};
use shifted_voa::scalar::{format_rational, int, rat};
use shifted_voa::voa::{holomorphic_family, same_z_family};
use shifted_voa::{
    Error as CoreError, GradeValue, Lattice, QSeries, Rational, RationalVector, ShiftedVoa, TypeLabel,
};
use thiserror::Error;

use crate::config::{ConfigError, FamilySpec, JobConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: String,
    /// False when some verification did not hold.
    pub passed: bool,
}

const DEFAULT_STEPS: i64 = 5;
const PARTITION_STEPS: i64 = 10;
const TRACE_STEPS: i64 = 3;
const DEFAULT_WEIGHT_BOUND: i64 = 3;
const BRACKET_MODES: std::ops::RangeInclusive<i64> = -2..=2;

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn vector_json(v: &RationalVector) -> Value {
    Value::Array(v.iter().map(|x| Value::String(q(x))).collect())
}

fn lattice_json(l: &Lattice) -> Value {
    json!({
        "name": l.name(),
        "rank": l.rank(),
        "gram": l.gram(),
        "determinant": l.determinant().to_string(),
    })
}

fn lattice_label(l: &Lattice) -> String {
    match l.name() {
        Some(n) => n.to_string(),
        None => format!("gram{:?}", l.gram()),
    }
}

/// Short human label for a shifted theory, e.g. `rank1(4) h=(1/2)`.
pub fn target_label(v: &ShiftedVoa) -> String {
    let mut s = format!("{} h={}", lattice_label(v.lattice()), v.shift_real());
    if !v.is_real() {
        let _ = write!(s, "+i{}", v.shift_imag());
    }
    s
}

fn grade_table(spec: &[(GradeValue, BigUint)]) -> Value {
    Value::Array(spec.iter().map(|(g, d)| json!({ "weight": g.to_json(), "dim": d.to_string() })).collect())
}

fn series_text(s: &QSeries) -> String {
    let mut terms: Vec<String> = s.iter().map(|(e, c)| format!("{} q^{}", q(c), q(e))).collect();
    terms.push(format!("O(q^{})", q(s.order())));
    terms.join(" + ")
}

fn require_voa(cfg: &JobConfig) -> Result<ShiftedVoa, CliError> {
    cfg.voa()?.ok_or_else(|| CliError::Usage("this command needs a \"lattice\" in the config".into()))
}

fn check_order(order: &Rational, lead: &Rational) -> Result<(), CliError> {
    if order <= lead {
        return Err(CliError::Usage(format!(
            "order {} must exceed the leading exponent {}",
            q(order),
            q(lead)
        )));
    }
    Ok(())
}

/// Central charge, grading, spectrum, partition functions, duality and type.
pub fn analyze(cfg: &JobConfig) -> Result<Report, CliError> {
    let v = require_voa(cfg)?;
    let mut passed = true;
    let mut table = String::new();
    let bound = cfg.spectrum_bound.clone().unwrap_or_else(|| v.lowest_weight() + int(DEFAULT_STEPS));
    let spec = v.spectrum(&bound);
    let _ = writeln!(table, "theory            {}", target_label(&v));
    let _ = writeln!(table, "central charge    {}", v.central_charge());
    let _ = writeln!(table, "grading 1/D, D =  {}", v.grading_denominator());
    let _ = writeln!(table, "spectrum (Re <= {}):", q(&bound));
    for (g, d) in &spec {
        let _ = writeln!(table, "  {g:>12}  {d}");
    }

    let partition = if v.is_real() {
        let lead = v.leading_exponent()?;
        let order = cfg.order.clone().unwrap_or_else(|| &lead + int(DEFAULT_STEPS));
        check_order(&order, &lead)?;
        let direct = v.partition_function_direct(&order)?;
        let theta = v.partition_function_theta(&order)?;
        let agree = direct.eq_to_order(&theta, &order)?;
        passed &= agree;
        let _ = writeln!(table, "Z(q) = {}", series_text(&direct));
        let _ = writeln!(table, "lattice count = theta/eta: {}", if agree { "yes" } else { "NO" });
        json!({ "order": q(&order), "direct": series_to_json(&direct), "theta": series_to_json(&theta), "agree": agree })
    } else {
        Value::Null
    };

    let violations = v.truncation_violations();
    if !v.is_real() {
        let list: Vec<String> = violations.iter().map(|(g, d)| format!("{g} (dim {d})")).collect();
        let _ = writeln!(table, "grades with Re < |Im|: {}", list.join(", "));
    }

    let (self_dual, type_record) = if v.is_z_graded() {
        let sd = v.is_self_dual()?;
        let _ = writeln!(table, "self-dual         {}", if sd { "yes" } else { "no" });
        match v.classify(true) {
            Ok(rec) => {
                let _ = writeln!(table, "{:>14} | {:>8} | {:>8} | {}", "codim L(1)V1", "dim V-1", "dim V0", "Type");
                let _ = writeln!(
                    table,
                    "{:>14} | {:>8} | {:>8} | {}",
                    rec.codim_l1v1, rec.dim_vm1, rec.dim_v0, rec.label
                );
                (json!(sd), rec.to_json())
            }
            Err(CoreError::InconsistentClassification(why)) => {
                passed = false;
                let _ = writeln!(table, "classification FAILED: {why}");
                (json!(sd), json!({ "error": why }))
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        let _ = writeln!(table, "not Z-graded: self-duality and type are undefined");
        (Value::Null, Value::Null)
    };

    let json = json!({
        "command": "analyze",
        "lattice": lattice_json(v.lattice()),
        "shift": { "real": vector_json(v.shift_real()), "imag": vector_json(v.shift_imag()) },
        "central_charge": v.central_charge().to_json(),
        "grading_denominator": v.grading_denominator().to_string(),
        "z_graded": v.is_z_graded(),
        "spectrum_bound": q(&bound),
        "spectrum": grade_table(&spec),
        "partition_function": partition,
        "violations": grade_table(&violations),
        "self_dual": self_dual,
        "type": type_record,
        "passed": passed,
    });
    Ok(Report { json, table, passed })
}

/// `θ_{L−h}` below the order.
pub fn theta(cfg: &JobConfig) -> Result<Report, CliError> {
    let v = require_voa(cfg)?;
    if !v.is_real() {
        return Err(CoreError::ComplexShiftUnsupported.into());
    }
    let a = v.shift_real();
    let lead = v.lowest_weight() + v.lattice().norm(a)? / int(2);
    let order = cfg.order.clone().unwrap_or_else(|| &lead + int(DEFAULT_STEPS));
    check_order(&order, &lead)?;
    let t: QSeries = theta_coset(v.lattice(), a, &order)?;
    let table = format!("theta_(L-h)(q) = {}\n", series_text(&t));
    let json = json!({
        "command": "theta",
        "lattice": lattice_json(v.lattice()),
        "shift": { "real": vector_json(a) },
        "theta": series_to_json(&t),
    });
    Ok(Report { json, table, passed: true })
}

/// All grades with real part at most the bound.
pub fn spectrum(cfg: &JobConfig) -> Result<Report, CliError> {
    let v = require_voa(cfg)?;
    let bound = cfg
        .order
        .clone()
        .or_else(|| cfg.spectrum_bound.clone())
        .unwrap_or_else(|| v.lowest_weight() + int(DEFAULT_STEPS));
    let spec = v.spectrum(&bound);
    let mut table = format!("{:>14}  dim\n", "weight");
    for (g, d) in &spec {
        let _ = writeln!(table, "{:>14}  {d}", g.to_string());
    }
    let json = json!({
        "command": "spectrum",
        "lattice": lattice_json(v.lattice()),
        "shift": { "real": vector_json(v.shift_real()), "imag": vector_json(v.shift_imag()) },
        "bound": q(&bound),
        "spectrum": grade_table(&spec),
    });
    Ok(Report { json, table, passed: true })
}

fn leading_json(z: &QSeries) -> Value {
    match z.leading() {
        Some((e, c)) => json!({ "exponent": q(e), "coefficient": q(c) }),
        None => Value::Null,
    }
}

/// Same-partition-function or holomorphic families.
pub fn family(cfg: &JobConfig) -> Result<Report, CliError> {
    let spec = cfg
        .family
        .as_ref()
        .ok_or_else(|| CliError::Usage("the config needs a \"family\" entry".into()))?;
    let mut table = String::new();
    let mut members = Vec::new();
    let passed;
    let json = match spec {
        FamilySpec::SameZ { lambda, count, direction } => {
            let lat = cfg.lattice.as_ref().ok_or_else(|| CliError::Usage("same_Z needs a lattice".into()))?;
            let fam = same_z_family(lat, lambda, *count, direction.as_ref())?;
            let lead = fam[0].leading_exponent()?;
            let order = cfg.order.clone().unwrap_or_else(|| &lead + int(DEFAULT_STEPS));
            check_order(&order, &lead)?;
            let reference = fam[0].partition_function_theta(&order)?;
            let mut all_equal = true;
            let mut charges: Vec<Rational> = Vec::new();
            let _ = writeln!(table, "{:<28} {:>10}  leading term", "shift", "c_h");
            for v in &fam {
                let z = v.partition_function_direct(&order)?;
                all_equal &= z.eq_to_order(&reference, &order)?;
                let c = v.real_central_charge()?.clone();
                let lead_text = z.leading().map_or("0".into(), |(e, c)| format!("{} q^{}", q(c), q(e)));
                let _ = writeln!(table, "{:<28} {:>10}  {lead_text}", v.shift_real().to_string(), q(&c));
                members.push(json!({
                    "shift": vector_json(v.shift_real()),
                    "central_charge": q(&c),
                    "leading": leading_json(&z),
                }));
                charges.push(c);
            }
            let mut sorted = charges.clone();
            sorted.sort();
            sorted.dedup();
            let distinct = sorted.len() == charges.len();
            passed = all_equal && distinct;
            let _ = writeln!(table, "identical partition functions below q^{}: {}", q(&order), yes_no(all_equal));
            let _ = writeln!(table, "pairwise distinct central charges: {}", yes_no(distinct));
            json!({
                "command": "family",
                "kind": "same_Z",
                "lattice": lattice_json(lat),
                "order": q(&order),
                "members": members,
                "identical_partition_functions": all_equal,
                "distinct_central_charges": distinct,
                "passed": passed,
            })
        }
        FamilySpec::Holomorphic { c, r_range } => {
            let mut leads: Vec<Rational> = Vec::new();
            let mut shapes_ok = true;
            let _ = writeln!(table, "{:>4} {:>6} {:>8} {:>8}  leading term", "r", "rank", "(h,h)", "c_h");
            for r in r_range.0..=r_range.1 {
                let v = holomorphic_family(*c, r)?;
                let lead = v.leading_exponent()?;
                let z = v.partition_function_theta(&(&lead + Rational::one()))?;
                let expected = rat(-r, 1) - rat(*c, 24);
                let ok = z.leading().is_some_and(|(e, k)| *e == expected && k.is_one());
                shapes_ok &= ok;
                let hh = v.lattice().norm(v.shift_real())?;
                let ch = v.real_central_charge()?.clone();
                let lead_text = z.leading().map_or("0".into(), |(e, k)| format!("{} q^{}", q(k), q(e)));
                let _ = writeln!(table, "{r:>4} {:>6} {:>8} {:>8}  {lead_text}", v.rank(), q(&hh), q(&ch));
                members.push(json!({
                    "r": r,
                    "lattice": lattice_label(v.lattice()),
                    "rank": v.rank(),
                    "shift_norm": q(&hh),
                    "central_charge": q(&ch),
                    "leading": leading_json(&z),
                }));
                leads.push(lead);
            }
            let mut sorted = leads.clone();
            sorted.sort();
            sorted.dedup();
            let distinct = sorted.len() == leads.len();
            passed = distinct && shapes_ok;
            let _ = writeln!(table, "pairwise distinct leading exponents: {}", yes_no(distinct));
            json!({
                "command": "family",
                "kind": "holomorphic",
                "c": c,
                "members": members,
                "distinct_leading_exponents": distinct,
                "leading_terms_as_expected": shapes_ok,
                "passed": passed,
            })
        }
    };
    Ok(Report { json, table, passed })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

/// Verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Lattice count against `θ/η^l`.
    Partition,
    Virasoro,
    /// `codim L(1)V_1 ∈ {0, 1}`, equal to self-duality.
    Codim,
    /// `dim V_0 > dim V_{−1}`.
    Weights,
    Delta,
    Trace,
    Cgraded,
    Examples,
    All,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 9] = [
        ("partition", Suite::Partition),
        ("virasoro", Suite::Virasoro),
        ("codim", Suite::Codim),
        ("weights", Suite::Weights),
        ("delta", Suite::Delta),
        ("trace", Suite::Trace),
        ("cgraded", Suite::Cgraded),
        ("examples", Suite::Examples),
        ("all", Suite::All),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(_, s)| *s == self).expect("every suite is listed").0
    }

    fn members(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Partition, Virasoro, Codim, Weights, Delta, Trace, Cgraded, Examples],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::NAMES.iter().find(|(n, _)| *n == s).map(|(_, v)| *v).ok_or_else(|| {
            let names: Vec<&str> = Self::NAMES.iter().map(|(n, _)| *n).collect();
            CliError::Usage(format!("unknown suite \"{s}\"; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: Suite,
    pub target: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "target": self.target,
            "check": self.name,
            "status": self.status.as_str(),
            "detail": self.detail,
        })
    }
}

/// `V_{L,h}` on `(α, α) = 2N`, `h = kα/2N`, `k = 0..2N`, `N = 1, 2, 3`, and
/// one complex shift on `rank1(2)`.
pub fn default_targets() -> Vec<ShiftedVoa> {
    let mut out = Vec::new();
    for n in 1..=3i64 {
        let lat = Lattice::rank1(2 * n).expect("even norm");
        for k in 0..=2 * n {
            out.push(ShiftedVoa::real(lat.clone(), RationalVector(vec![rat(k, 2 * n)])).expect("rank one"));
        }
    }
    let half = RationalVector(vec![rat(1, 2)]);
    out.push(ShiftedVoa::new(Lattice::rank1(2).expect("even norm"), half.clone(), half).expect("rank one"));
    out
}

struct Verifier<'a> {
    cfg: &'a JobConfig,
    weight_bound: Rational,
    checks: Vec<Check>,
}

impl Verifier<'_> {
    fn push(&mut self, suite: Suite, v: Option<&ShiftedVoa>, name: impl Into<String>, status: Status, detail: String) {
        self.checks.push(Check {
            suite,
            target: v.map_or_else(|| "built-in".to_string(), target_label),
            name: name.into(),
            status,
            detail,
        });
    }

    fn skip(&mut self, suite: Suite, v: &ShiftedVoa, why: &str) {
        self.push(suite, Some(v), suite.name(), Status::Skip, why.into());
    }

    fn run(&mut self, suite: Suite, v: &ShiftedVoa) -> Result<(), CliError> {
        match suite {
            Suite::Partition => self.partition(v),
            Suite::Virasoro => self.virasoro(v),
            Suite::Codim => self.codim(v),
            Suite::Weights => self.weights(v),
            Suite::Delta => self.delta(v),
            Suite::Trace => self.trace(v),
            Suite::Cgraded => self.cgraded(v),
            Suite::Examples | Suite::All => Ok(()),
        }
    }

    fn partition(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_real() {
            self.skip(Suite::Partition, v, "complex shift");
            return Ok(());
        }
        let lead = v.leading_exponent()?;
        let order = self.cfg.order.clone().unwrap_or_else(|| &lead + int(PARTITION_STEPS + 1));
        check_order(&order, &lead)?;
        let a = v.partition_function_direct(&order)?;
        let b = v.partition_function_theta(&order)?;
        let ok = a.eq_to_order(&b, &order)?;
        self.push(Suite::Partition, Some(v), "direct = theta/eta", Status::from_bool(ok), format!("below q^{}", q(&order)));
        Ok(())
    }

    fn virasoro(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_real() {
            self.skip(Suite::Virasoro, v, "complex shift");
            return Ok(());
        }
        let c = v.real_central_charge()?.clone();
        let mut failures = Vec::new();
        for m in BRACKET_MODES {
            for n in BRACKET_MODES {
                if let Some(s) = fock::bracket_witness(v, m, n, &self.weight_bound)? {
                    failures.push(format!("[L({m}),L({n})] on {s}"));
                }
            }
        }
        let detail = if failures.is_empty() {
            format!("c_h = {}, m,n in -2..2, weight <= {}", q(&c), q(&self.weight_bound))
        } else {
            failures.join("; ")
        };
        self.push(Suite::Virasoro, Some(v), "bracket relations", Status::from_bool(failures.is_empty()), detail);
        Ok(())
    }

    fn codim(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_z_graded() {
            self.skip(Suite::Codim, v, "not Z-graded");
            return Ok(());
        }
        let codim = fock::l1_codimension(v)?;
        let sd = v.is_self_dual()?;
        let ok = codim <= 1 && (codim == 1) == sd;
        self.push(
            Suite::Codim,
            Some(v),
            "codim L(1)V1 = [self-dual]",
            Status::from_bool(ok),
            format!("codim {codim}, self-dual {sd}"),
        );
        Ok(())
    }

    fn weights(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_z_graded() {
            self.skip(Suite::Weights, v, "not Z-graded");
            return Ok(());
        }
        let d0 = v.weight_space_dim(&GradeValue::zero());
        let dm1 = v.weight_space_dim(&GradeValue::real(int(-1)));
        self.push(
            Suite::Weights,
            Some(v),
            "dim V0 > dim V-1",
            Status::from_bool(d0 > dm1),
            format!("dim V0 = {d0}, dim V-1 = {dm1}"),
        );
        Ok(())
    }

    fn delta(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_real() {
            self.skip(Suite::Delta, v, "complex shift");
            return Ok(());
        }
        let lat = v.lattice();
        let h = v.shift_real();
        let omega: FockVec<Rational> = fock::omega(lat);
        let res = fock::delta_apply(lat, &h.neg(), &omega, 2)?;
        let vac = FockVec::basis(FockState::vacuum(lat.rank()));
        let h1: FockVec<Rational> = fock::weight_one_state(lat, h)?;
        let mut want = vec![(int(0), omega)];
        if !h.is_zero() {
            want.insert(0, (int(-1), h1.scale(&int(-1))));
            want.insert(0, (int(-2), vac.scale(&(lat.norm(h)? / int(2)))));
        }
        let got: Vec<(Rational, FockVec<Rational>)> = res.iter().map(|(e, x)| (e.clone(), x.clone())).collect();
        let ok = got == want;
        self.push(
            Suite::Delta,
            Some(v),
            "Delta(-h,z) omega closed form",
            Status::from_bool(ok),
            format!("{} Laurent terms", got.len()),
        );
        let report = fock::check_h_conditions(lat, h, &self.weight_bound)?;
        for c in &report.checks {
            self.push(
                Suite::Delta,
                Some(v),
                c.name,
                Status::from_bool(c.passed),
                c.witness.clone().unwrap_or_else(|| format!("h(1)h = {}", q(&report.h1h))),
            );
        }
        Ok(())
    }

    fn trace(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        if !v.is_real() {
            self.skip(Suite::Trace, v, "complex shift");
            return Ok(());
        }
        let lead = v.leading_exponent()?;
        let order = self.cfg.order.clone().unwrap_or_else(|| &lead + int(TRACE_STEPS + 1));
        check_order(&order, &lead)?;
        let ok = fock::trace_identity_check(v, &order)?;
        self.push(
            Suite::Trace,
            Some(v),
            "zero mode of Delta(-h,z) omega gives Tr q^(L_h(0) - c_h/24)",
            Status::from_bool(ok),
            format!("below q^{}", q(&order)),
        );
        Ok(())
    }

    fn cgraded(&mut self, v: &ShiftedVoa) -> Result<(), CliError> {
        let found = v.truncation_violations();
        let wider = v.truncation_violations_within(&(v.schwarz_radius() * int(2) + int(4)));
        let complete = found == wider;
        let grades: Vec<String> = found.iter().map(|(g, d)| format!("{g}:{d}")).collect();
        let mut ok = complete;
        if v.is_real() {
            let negatives: Vec<(GradeValue, BigUint)> = v
                .spectrum(&Rational::zero())
                .into_iter()
                .filter(|(g, _)| g.re < Rational::zero())
                .collect();
            ok &= negatives == found;
        }
        self.push(
            Suite::Cgraded,
            Some(v),
            "violations finite and complete",
            Status::from_bool(ok),
            format!("[{}]", grades.join(", ")),
        );
        Ok(())
    }

    fn examples(&mut self) -> Result<(), CliError> {
        let expected = [
            (TypeLabel::IIBPlus, "self-dual with no states of negative weight, so B+ rather than B-"),
            (TypeLabel::IBPlus, ""),
            (TypeLabel::IIAPlus, ""),
            (TypeLabel::IAMinus, ""),
            (TypeLabel::IIAMinus, ""),
        ];
        let lat = Lattice::rank1(4)?;
        for (k, (want, note)) in expected.iter().enumerate() {
            let v = ShiftedVoa::real(lat.clone(), RationalVector(vec![rat(k as i64, 4)]))?;
            let rec = v.classify(true)?;
            let mut detail = format!(
                "c_h = {}, dim V-1 = {}, dim V0 = {}, codim = {}, type {}",
                q(v.real_central_charge()?),
                rec.dim_vm1,
                rec.dim_v0,
                rec.codim_l1v1,
                rec.label
            );
            if !note.is_empty() {
                let _ = write!(detail, " (note: {note})");
            }
            self.push(Suite::Examples, Some(&v), format!("(a,a)=4, k={k}: {want}"), Status::from_bool(rec.label == *want), detail);
        }
        for l in 2..=4usize {
            let lat = Lattice::a(l)?;
            let h = RationalVector(lat.dual_basis()[0].clone());
            let v = ShiftedVoa::real(lat, h)?;
            let rec = v.classify(true)?;
            let ok = rec.label == TypeLabel::IAPlus && rec.dim_v0 == BigUint::from(l + 1);
            self.push(
                Suite::Examples,
                Some(&v),
                format!("A{l} fundamental shift: IA+, dim V0 = {}", l + 1),
                Status::from_bool(ok),
                format!("type {}, dim V0 = {}", rec.label, rec.dim_v0),
            );
        }
        Ok(())
    }
}

/// Runs a suite on the configured theory, or on [`default_targets`] when the
/// config names no lattice.
pub fn verify(cfg: &JobConfig, suite: Suite) -> Result<Report, CliError> {
    let targets = match cfg.voa()? {
        Some(v) => vec![v],
        None => default_targets(),
    };
    let weight_bound = cfg.weight_bound.clone().unwrap_or_else(|| int(DEFAULT_WEIGHT_BOUND));
    let mut ver = Verifier { cfg, weight_bound, checks: Vec::new() };
    for s in suite.members() {
        if s == Suite::Examples {
            ver.examples()?;
            continue;
        }
        for v in &targets {
            ver.run(s, v)?;
        }
    }
    let passed = ver.checks.iter().all(|c| c.status != Status::Fail);
    let count = |st: Status| ver.checks.iter().filter(|c| c.status == st).count();
    let mut table = String::new();
    for c in &ver.checks {
        let _ = writeln!(
            table,
            "{} {:<9} {:<22} {}: {}",
            c.status.as_str(),
            c.suite.name(),
            c.target,
            c.name,
            c.detail
        );
    }
    let (np, nf, ns) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    let _ = writeln!(table, "{np} passed, {nf} failed, {ns} skipped");
    let json = json!({
        "command": "verify",
        "suite": suite.name(),
        "checks": ver.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        "summary": { "passed": np, "failed": nf, "skipped": ns },
        "passed": passed,
    });
    Ok(Report { json, table, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> JobConfig {
        JobConfig::from_str(text).unwrap()
    }

    #[test]
    fn analyze_rank1_norm4_half_shift() {
        let r = analyze(&cfg(r#"{"lattice": {"named": {"rank1": 4}}, "shift": {"real": ["1/2"]}}"#)).unwrap();
        assert!(r.passed);
        assert_eq!(r.json["type"]["label"], "IIA+");
        assert_eq!(r.json["central_charge"]["re"], "-11/1");
    }

    #[test]
    fn analyze_root_lattice_fundamental_weight() {
        let r = analyze(&cfg(r#"{"lattice": {"named": {"A": 2}}, "shift": {"real": [1, 0], "basis": "dual"}}"#))
            .unwrap();
        assert_eq!(r.json["type"]["label"], "IA+");
        assert_eq!(r.json["type"]["dim_V0"], "3");
    }

    #[test]
    fn analyze_unshifted_is_theta_over_eta() {
        let r = analyze(&cfg(r#"{"lattice": {"named": {"rank1": 2}}}"#)).unwrap();
        assert_eq!(r.json["central_charge"]["re"], "1/1");
        assert_eq!(r.json["partition_function"]["agree"], true);
    }

    #[test]
    fn order_must_exceed_leading_exponent() {
        let e = analyze(&cfg(r#"{"lattice": {"named": {"rank1": 2}}, "order": "-1"}"#)).unwrap_err();
        assert!(matches!(e, CliError::Usage(_)));
    }

    #[test]
    fn suite_names_roundtrip() {
        for (n, s) in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn weight_bound_below_lowest_weight_is_reported() {
        let e = verify(
            &cfg(r#"{"lattice": {"named": {"rank1": 2}}, "shift": {"real": ["1"]}, "weight_bound": "-2"}"#),
            Suite::Virasoro,
        )
        .unwrap_err();
        assert!(e.to_string().contains("smallest sufficient bound is -1/1"), "{e}");
    }
}
