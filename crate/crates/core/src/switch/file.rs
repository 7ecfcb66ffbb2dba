//! Switch files: a TOML document naming the coefficient domain, the
//! variables, and the blocks, either as quaternion 4-tuples or as row-major
//! polynomial grids. C and D may be omitted, in which case they are
//! completed from A and B.
//!
//! ```toml
//! name = "budapest"
//! kind = "virtual"
//! coefficients = "gaussian"
//! variables = ["t"]
//! entry-type = "quaternion"
//! A = ["1", "1", "0", "0"]     # components along 1, i, j, k
//! B = ["0", "0", "-t", "0"]
//! ```

use std::path::Path;

use serde::Deserialize;

use super::{Switch, SwitchKind};
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{parse_poly, CoeffDomain, Quaternion, Ring, UnitMode, Var, VarSet};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SwitchFile {
    name: String,
    kind: SwitchKind,
    coefficients: Coefficients,
    variables: Vec<String>,
    #[serde(rename = "entry-type")]
    entry_type: EntryType,
    #[serde(rename = "unit-mode", default)]
    unit_mode: Option<UnitMode>,
    #[serde(rename = "A")]
    a: Entry,
    #[serde(rename = "B")]
    b: Entry,
    #[serde(rename = "C")]
    c: Option<Entry>,
    #[serde(rename = "D")]
    d: Option<Entry>,
}

#[derive(Deserialize, Clone, Copy, PartialEq, Eq)]
enum Coefficients {
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "gaussian")]
    Gaussian,
    #[serde(rename = "gf2")]
    Gf2,
}

#[derive(Deserialize, Clone, Copy, PartialEq, Eq)]
enum EntryType {
    #[serde(rename = "quaternion")]
    Quaternion,
    #[serde(rename = "matrix")]
    Matrix,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Quaternion(Vec<String>),
    Grid(Vec<Vec<String>>),
}

fn parse_vars(names: &[String]) -> Result<VarSet> {
    let mut vars = Vec::new();
    for n in names {
        let mut chars = n.chars();
        let (c, rest) = (chars.next(), chars.next());
        match (c.and_then(Var::from_char), rest) {
            (Some(v), None) => vars.push(v),
            _ => {
                return Err(Error::SwitchFile(format!(
                    "unknown variable `{n}` (expected one of t, q, x, y, a)"
                )))
            }
        }
    }
    Ok(VarSet::of(&vars))
}

fn block_from_entry(entry: &Entry, which: &str, spec: &SwitchFile) -> Result<RingMatrix> {
    let vars = parse_vars(&spec.variables)?;
    match (spec.entry_type, entry) {
        (EntryType::Quaternion, Entry::Quaternion(parts)) => {
            if spec.coefficients != Coefficients::Gaussian {
                return Err(Error::SwitchFile(
                    "quaternion entries require `coefficients = \"gaussian\"` \
                     (the represented ring is Gaussian)"
                        .into(),
                ));
            }
            if parts.len() != 4 {
                return Err(Error::SwitchFile(format!(
                    "block {which}: quaternion entries are 4-tuples, got {}",
                    parts.len()
                )));
            }
            let component_ring = Ring::new(CoeffDomain::Rational, vars);
            let mut comps = Vec::with_capacity(4);
            for s in parts {
                comps.push(parse_poly(s, component_ring).map_err(|e| {
                    Error::SwitchFile(format!("block {which}: {e}"))
                })?);
            }
            let q = Quaternion::new([
                comps[0].clone(),
                comps[1].clone(),
                comps[2].clone(),
                comps[3].clone(),
            ]);
            Ok(q.to_matrix())
        }
        (EntryType::Matrix, Entry::Grid(rows)) => {
            let domain = match spec.coefficients {
                Coefficients::Rational => CoeffDomain::Rational,
                Coefficients::Gaussian => CoeffDomain::Gaussian,
                Coefficients::Gf2 => CoeffDomain::Gf2,
            };
            let ring = Ring::new(domain, vars);
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                let mut r = Vec::with_capacity(row.len());
                for s in row {
                    r.push(parse_poly(s, ring).map_err(|e| {
                        Error::SwitchFile(format!("block {which}: {e}"))
                    })?);
                }
                parsed.push(r);
            }
            RingMatrix::from_rows(ring, parsed)
                .map_err(|e| Error::SwitchFile(format!("block {which}: {e}")))
        }
        (EntryType::Quaternion, Entry::Grid(_)) => Err(Error::SwitchFile(format!(
            "block {which}: expected a quaternion 4-tuple, found a grid"
        ))),
        (EntryType::Matrix, Entry::Quaternion(_)) => Err(Error::SwitchFile(format!(
            "block {which}: expected a row-major grid, found a flat list"
        ))),
    }
}

fn build(spec: &SwitchFile, validate: bool) -> Result<Switch> {
    let a = block_from_entry(&spec.a, "A", spec)?;
    let b = block_from_entry(&spec.b, "B", spec)?;
    let mode = spec.unit_mode.unwrap_or(UnitMode::Field);
    let (c, d) = match (&spec.c, &spec.d) {
        (Some(c), Some(d)) => (
            block_from_entry(c, "C", spec)?,
            block_from_entry(d, "D", spec)?,
        ),
        (None, None) => {
            return if validate {
                super::complete_switch(spec.name.clone(), spec.kind, a, b, mode)
            } else {
                let sw = super::complete_switch(spec.name.clone(), spec.kind, a, b, mode)?;
                Ok(sw)
            }
        }
        _ => {
            return Err(Error::SwitchFile(
                "switch files give either A,B or all of A,B,C,D".into(),
            ))
        }
    };
    if validate {
        Switch::new(spec.name.clone(), spec.kind, a, b, c, d, mode)
    } else {
        Ok(Switch::new_unvalidated(
            spec.name.clone(),
            spec.kind,
            a,
            b,
            c,
            d,
            mode,
        ))
    }
}

/// Parse a switch from TOML text and validate it.
pub fn parse_switch_str(text: &str) -> Result<Switch> {
    let spec: SwitchFile =
        toml::from_str(text).map_err(|e| Error::SwitchFile(e.to_string()))?;
    build(&spec, true)
}

/// Load and validate a switch file.
pub fn load_switch(path: impl AsRef<Path>) -> Result<Switch> {
    let text = std::fs::read_to_string(path)?;
    parse_switch_str(&text)
}

/// Load a switch file without validating the switch axioms. For
/// negative-control runs; requires all four blocks to be present.
pub fn load_switch_unvalidated(path: impl AsRef<Path>) -> Result<Switch> {
    let text = std::fs::read_to_string(path)?;
    let spec: SwitchFile =
        toml::from_str(&text).map_err(|e| Error::SwitchFile(e.to_string()))?;
    build(&spec, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switch::budapest;

    const BUDAPEST_TOML: &str = r#"
name = "budapest"
kind = "virtual"
coefficients = "gaussian"
variables = ["t"]
entry-type = "quaternion"
A = ["1", "1", "0", "0"]
B = ["0", "0", "-t", "0"]
"#;

    #[test]
    fn budapest_round_trips_through_a_file() {
        let sw = parse_switch_str(BUDAPEST_TOML).unwrap();
        let builtin = budapest().unwrap();
        assert_eq!(sw.a(), builtin.a());
        assert_eq!(sw.b(), builtin.b());
        assert_eq!(sw.c(), builtin.c());
        assert_eq!(sw.d(), builtin.d());
    }

    #[test]
    fn missing_block_is_a_schema_error() {
        let text = r#"
name = "broken"
kind = "virtual"
coefficients = "rational"
variables = ["t"]
entry-type = "matrix"
A = [["1", "0"], ["0", "1"]]
"#;
        let err = parse_switch_str(text).unwrap_err();
        assert!(matches!(err, Error::SwitchFile(_)), "got {err}");
    }

    #[test]
    fn singular_one_minus_a_is_rejected_with_named_axiom() {
        let text = r#"
name = "unipotent"
kind = "virtual"
coefficients = "rational"
variables = ["t"]
entry-type = "matrix"
A = [["1", "1"], ["0", "1"]]
B = [["1", "0"], ["0", "1"]]
"#;
        let err = parse_switch_str(text).unwrap_err();
        match err {
            Error::SwitchPrecondition(msg) => assert!(msg.contains("1 - A"), "{msg}"),
            other => panic!("expected precondition error, got {other}"),
        }
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = parse_switch_str("name = \"x\"\nkind =").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "expected line info, got {msg}");
    }
}
