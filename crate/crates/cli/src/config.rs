//! Job configuration: JSON documents naming a lattice, a shift and options.
//!
//! Every error names the offending field by its JSON path.

use std::path::Path;

use serde_json::Value;
use shifted_voa::scalar::parse_rational;
use shifted_voa::{Lattice, Rational, RationalVector, ShiftedVoa};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Field { field: field.to_string(), message: message.into() }
}

/// Coordinates in which shift vectors are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftBasis {
    Lattice,
    Dual,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    SameZ { lambda: RationalVector, count: usize, direction: Option<RationalVector> },
    Holomorphic { c: i64, r_range: (i64, i64) },
}

#[derive(Clone, Debug, Default)]
pub struct JobConfig {
    pub lattice: Option<Lattice>,
    pub shift_real: Option<RationalVector>,
    pub shift_imag: Option<RationalVector>,
    pub order: Option<Rational>,
    pub spectrum_bound: Option<Rational>,
    /// Largest weight of the Fock basis used by operator checks.
    pub weight_bound: Option<Rational>,
    pub family: Option<FamilySpec>,
    pub suite: Option<String>,
}

impl JobConfig {
    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Read { path: path.display().to_string(), source })?;
        Self::from_str(&text)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(text: &str) -> Result<Self, ConfigError> {
        let doc: Value = serde_json::from_str(text).map_err(|e| ConfigError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_value(&doc)
    }

    pub fn from_value(doc: &Value) -> Result<Self, ConfigError> {
        let obj = doc.as_object().ok_or_else(|| field_error("$", "expected a JSON object"))?;
        const KNOWN: [&str; 9] =
            ["lattice", "shift", "basis", "order", "spectrum_bound", "weight_bound", "family", "suite", "comment"];
        if let Some(k) = obj.keys().find(|k| !KNOWN.contains(&k.as_str())) {
            return Err(field_error(k, "unknown field"));
        }
        let lattice = obj.get("lattice").map(|v| parse_lattice(v, "lattice")).transpose()?;
        let mut cfg = JobConfig { lattice, ..Default::default() };

        let top_basis = obj.get("basis").map(|v| parse_basis(v, "basis")).transpose()?;
        if let Some(shift) = obj.get("shift") {
            let lat = cfg.lattice.as_ref().ok_or_else(|| field_error("shift", "a shift needs a lattice"))?;
            let s = shift.as_object().ok_or_else(|| field_error("shift", "expected an object"))?;
            if let Some(k) = s.keys().find(|k| !["real", "imag", "basis"].contains(&k.as_str())) {
                return Err(field_error(&format!("shift.{k}"), "unknown field"));
            }
            let basis = match s.get("basis") {
                Some(v) => parse_basis(v, "shift.basis")?,
                None => top_basis.unwrap_or(ShiftBasis::Lattice),
            };
            let read = |key: &str| -> Result<Option<RationalVector>, ConfigError> {
                let path = format!("shift.{key}");
                s.get(key)
                    .map(|v| {
                        let raw = parse_vector(v, &path)?;
                        to_lattice_coordinates(lat, raw, basis, &path)
                    })
                    .transpose()
            };
            cfg.shift_real = read("real")?;
            cfg.shift_imag = read("imag")?;
        }
        cfg.order = obj.get("order").map(|v| parse_rational_value(v, "order")).transpose()?;
        cfg.spectrum_bound = obj.get("spectrum_bound").map(|v| parse_rational_value(v, "spectrum_bound")).transpose()?;
        cfg.weight_bound = obj.get("weight_bound").map(|v| parse_rational_value(v, "weight_bound")).transpose()?;
        cfg.suite = obj
            .get("suite")
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| field_error("suite", "expected a string")))
            .transpose()?;
        if let Some(f) = obj.get("family") {
            cfg.family = Some(parse_family(f, cfg.lattice.as_ref(), top_basis.unwrap_or(ShiftBasis::Lattice))?);
        }
        Ok(cfg)
    }

    /// `V_{L,h}` from the lattice and shift; a missing shift is zero.
    pub fn voa(&self) -> Result<Option<ShiftedVoa>, ConfigError> {
        let Some(lat) = &self.lattice else {
            return Ok(None);
        };
        let zero = RationalVector::zeros(lat.rank());
        let a = self.shift_real.clone().unwrap_or_else(|| zero.clone());
        let b = self.shift_imag.clone().unwrap_or(zero);
        ShiftedVoa::new(lat.clone(), a, b).map(Some).map_err(|e| field_error("shift", e.to_string()))
    }
}

fn parse_basis(v: &Value, path: &str) -> Result<ShiftBasis, ConfigError> {
    match v.as_str() {
        Some("L") => Ok(ShiftBasis::Lattice),
        Some("dual") => Ok(ShiftBasis::Dual),
        _ => Err(field_error(path, "expected \"L\" or \"dual\"")),
    }
}

fn to_lattice_coordinates(
    lat: &Lattice,
    raw: RationalVector,
    basis: ShiftBasis,
    path: &str,
) -> Result<RationalVector, ConfigError> {
    if raw.len() != lat.rank() {
        return Err(field_error(path, format!("expected {} coordinates, found {}", lat.rank(), raw.len())));
    }
    match basis {
        ShiftBasis::Lattice => Ok(raw),
        ShiftBasis::Dual => lat.from_dual_coordinates(&raw).map_err(|e| field_error(path, e.to_string())),
    }
}

/// A rational written as `"p/q"`, `"p"` or a JSON integer.
pub fn parse_rational_value(v: &Value, path: &str) -> Result<Rational, ConfigError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| field_error(path, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|k| Rational::from_integer(k.into()))
            .ok_or_else(|| field_error(path, "numbers must be integers; write fractions as \"p/q\"")),
        _ => Err(field_error(path, "expected a rational \"p/q\" or an integer")),
    }
}

fn parse_vector(v: &Value, path: &str) -> Result<RationalVector, ConfigError> {
    let arr = v.as_array().ok_or_else(|| field_error(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| parse_rational_value(x, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(RationalVector)
}

fn parse_int(v: &Value, path: &str) -> Result<i64, ConfigError> {
    v.as_i64().ok_or_else(|| field_error(path, "expected an integer"))
}

/// `{"gram": [[..]]}`, `{"named": "E8" | {"A": l} | {"rank1": 2N}}` or
/// `{"direct_sum": [lattice, ...]}`.
pub fn parse_lattice(v: &Value, path: &str) -> Result<Lattice, ConfigError> {
    let obj = v.as_object().filter(|o| o.len() == 1).ok_or_else(|| {
        field_error(path, "expected exactly one of \"gram\", \"named\", \"direct_sum\"")
    })?;
    let (key, body) = obj.iter().next().expect("one entry");
    let here = format!("{path}.{key}");
    let lift = |e: shifted_voa::Error| field_error(&here, e.to_string());
    match key.as_str() {
        "gram" => {
            let rows = body.as_array().ok_or_else(|| field_error(&here, "expected an array of rows"))?;
            let gram = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let row_path = format!("{here}[{i}]");
                    row.as_array()
                        .ok_or_else(|| field_error(&row_path, "expected an array"))?
                        .iter()
                        .enumerate()
                        .map(|(j, x)| parse_int(x, &format!("{row_path}[{j}]")))
                        .collect::<Result<Vec<i64>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Lattice::validate(gram).map_err(lift)
        }
        "named" => match body {
            Value::String(name) => Lattice::named(name, None).map_err(lift),
            Value::Object(o) if o.len() == 1 => {
                let (name, param) = o.iter().next().expect("one entry");
                let p = parse_int(param, &format!("{here}.{name}"))?;
                Lattice::named(name, Some(p)).map_err(lift)
            }
            _ => Err(field_error(&here, "expected \"E8\", {\"A\": l} or {\"rank1\": 2N}")),
        },
        "direct_sum" => {
            let parts = body.as_array().ok_or_else(|| field_error(&here, "expected an array"))?;
            let lats = parts
                .iter()
                .enumerate()
                .map(|(i, p)| parse_lattice(p, &format!("{here}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let names: Option<Vec<&str>> = lats.iter().map(Lattice::name).collect();
            let sum = Lattice::direct_sum(&lats).map_err(lift)?;
            Ok(match names {
                Some(n) => sum.with_name(n.join("+")),
                None => sum,
            })
        }
        other => Err(field_error(path, format!("unknown lattice form \"{other}\""))),
    }
}

fn parse_family(v: &Value, lattice: Option<&Lattice>, basis: ShiftBasis) -> Result<FamilySpec, ConfigError> {
    let obj = v
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| field_error("family", "expected {\"same_Z\": {...}} or {\"holomorphic\": {...}}"))?;
    let (key, body) = obj.iter().next().expect("one entry");
    let here = format!("family.{key}");
    match key.as_str() {
        "same_Z" => {
            let lat = lattice.ok_or_else(|| field_error(&here, "needs a lattice"))?;
            let lambda = match body.get("lambda") {
                Some(x) => {
                    let raw = parse_vector(x, &format!("{here}.lambda"))?;
                    to_lattice_coordinates(lat, raw, basis, &format!("{here}.lambda"))?
                }
                None => RationalVector::zeros(lat.rank()),
            };
            let count = match body.get("count") {
                Some(x) => usize::try_from(parse_int(x, &format!("{here}.count"))?)
                    .map_err(|_| field_error(&format!("{here}.count"), "must be positive"))?,
                None => 3,
            };
            let direction = body
                .get("direction")
                .map(|x| {
                    let raw = parse_vector(x, &format!("{here}.direction"))?;
                    to_lattice_coordinates(lat, raw, ShiftBasis::Lattice, &format!("{here}.direction"))
                })
                .transpose()?;
            Ok(FamilySpec::SameZ { lambda, count, direction })
        }
        "holomorphic" => {
            let c = parse_int(body.get("c").ok_or_else(|| field_error(&here, "missing \"c\""))?, &format!("{here}.c"))?;
            let range_path = format!("{here}.r_range");
            let r_range = match body.get("r_range") {
                Some(Value::Array(a)) if a.len() == 2 => {
                    (parse_int(&a[0], &range_path)?, parse_int(&a[1], &range_path)?)
                }
                Some(_) => return Err(field_error(&range_path, "expected [r_min, r_max]")),
                None => (1, 2),
            };
            if r_range.0 > r_range.1 {
                return Err(field_error(&range_path, "r_min exceeds r_max"));
            }
            Ok(FamilySpec::Holomorphic { c, r_range })
        }
        other => Err(field_error("family", format!("unknown family \"{other}\""))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use shifted_voa::scalar::rat;

    #[test]
    fn lattice_literals() {
        let l = JobConfig::from_str(r#"{"lattice": {"named": {"rank1": 4}}}"#).unwrap().lattice.unwrap();
        assert_eq!(l.gram(), &vec![vec![4]]);
        let l = JobConfig::from_str(r#"{"lattice": {"direct_sum": [{"named": "E8"}, {"named": {"A": 2}}]}}"#)
            .unwrap()
            .lattice
            .unwrap();
        assert_eq!(l.rank(), 10);
        assert_eq!(l.name(), Some("E8+A2"));
        let l = JobConfig::from_str(r#"{"lattice": {"gram": [[2, -1], [-1, 2]]}}"#).unwrap().lattice.unwrap();
        assert_eq!(l, Lattice::a(2).unwrap());
    }

    #[test]
    fn dual_basis_shift_is_converted() {
        let cfg = JobConfig::from_str(
            r#"{"lattice": {"named": {"A": 2}}, "shift": {"real": [1, 0], "basis": "dual"}}"#,
        )
        .unwrap();
        assert_eq!(cfg.shift_real.unwrap(), RationalVector(vec![rat(2, 3), rat(1, 3)]));
    }

    #[test]
    fn errors_name_the_field() {
        let e = JobConfig::from_str(r#"{"lattice": {"named": {"rank1": 4}}, "shift": {"real": ["1/0"]}}"#).unwrap_err();
        assert!(e.to_string().starts_with("shift.real[0]:"), "{e}");
        let e = JobConfig::from_str(r#"{"lattice": {"gram": [[3]]}}"#).unwrap_err();
        assert!(e.to_string().starts_with("lattice.gram:"), "{e}");
        let e = JobConfig::from_str(r#"{"order": 0.5}"#).unwrap_err();
        assert!(e.to_string().starts_with("order:"), "{e}");
        let e = JobConfig::from_str("{\n  \"order\": ,\n}").unwrap_err();
        assert!(matches!(e, ConfigError::Syntax { line: 2, .. }), "{e}");
        let e = JobConfig::from_str(r#"{"lattce": {}}"#).unwrap_err();
        assert_eq!(e.to_string(), "lattce: unknown field");
    }

    #[test]
    fn families() {
        let cfg = JobConfig::from_str(r#"{"family": {"holomorphic": {"c": 8, "r_range": [1, 2]}}}"#).unwrap();
        assert_eq!(cfg.family, Some(FamilySpec::Holomorphic { c: 8, r_range: (1, 2) }));
        let cfg = JobConfig::from_str(
            r#"{"lattice": {"named": {"rank1": 2}}, "family": {"same_Z": {"lambda": ["0"], "count": 3}}}"#,
        )
        .unwrap();
        assert!(matches!(cfg.family, Some(FamilySpec::SameZ { count: 3, .. })));
    }
}
