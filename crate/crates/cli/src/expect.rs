//! `--expect key=value` assertions and the check records demos are built from.

use qlat_core::{Classification, TruthVerdict, VerdictKind};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        pass: bool,
    ) -> Self {
        Self {
            name: name.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        }
    }

    /// A check that passes when both sides render identically.
    pub fn equal(name: impl Into<String>, expected: impl ToString, observed: impl ToString) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let pass = e == o;
        Self::new(name, e, o, pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.pass,
        })
    }
}

pub fn split(raw: &str) -> CliResult<(&str, &str)> {
    raw.split_once('=')
        .map(|(k, v)| (k.trim(), v.trim()))
        .filter(|(k, v)| !k.is_empty() && !v.is_empty())
        .ok_or_else(|| CliError::Usage(format!("--expect takes key=value, got `{raw}`")))
}

pub fn parse_bool(key: &str, v: &str) -> CliResult<bool> {
    match v.to_ascii_lowercase().as_str() {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(CliError::Usage(format!(
            "--expect {key}= takes true or false, got `{v}`"
        ))),
    }
}

/// Checks a boolean report field named `key`; other keys are usage errors.
pub fn bool_checks(raw: &[String], key: &str, observed: bool) -> CliResult<Vec<Check>> {
    raw.iter()
        .map(|r| {
            let (k, v) = split(r)?;
            if k != key {
                return Err(CliError::Usage(format!(
                    "unknown --expect key `{k}`; expected `{key}`"
                )));
            }
            let want = parse_bool(k, v)?;
            Ok(Check::new(r.clone(), want, observed, want == observed))
        })
        .collect()
}

pub fn kind_str(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::True => "true",
        VerdictKind::False => "false",
        VerdictKind::Gap => "gap",
        VerdictKind::Degree => "degree",
    }
}

pub fn classification_str(c: Option<Classification>) -> &'static str {
    match c {
        Some(Classification::SuperTrue) => "SuperTrue",
        Some(Classification::SuperFalse) => "SuperFalse",
        None => "none",
    }
}

/// `verdict=true|false|gap|degree|supertrue|superfalse`,
/// `classification=SuperTrue|SuperFalse|none`, `degree=<x>` (within `eps`).
pub fn verdict_checks(raw: &[String], v: &TruthVerdict, eps: f64) -> CliResult<Vec<Check>> {
    raw.iter()
        .map(|r| {
            let (k, want) = split(r)?;
            let lower = want.to_ascii_lowercase();
            match k {
                "verdict" => {
                    let observed = match v.classification() {
                        Some(c) => format!("{} ({})", kind_str(v.kind()), classification_str(Some(c))),
                        None => kind_str(v.kind()).to_string(),
                    };
                    let pass = match lower.as_str() {
                        "true" | "false" | "gap" | "degree" => kind_str(v.kind()) == lower,
                        "supertrue" => *v == TruthVerdict::SuperTrue,
                        "superfalse" => *v == TruthVerdict::SuperFalse,
                        _ => {
                            return Err(CliError::Usage(format!(
                                "--expect verdict= takes true, false, gap, degree, supertrue or superfalse, got `{want}`"
                            )))
                        }
                    };
                    Ok(Check::new(r.clone(), want, observed, pass))
                }
                "classification" => {
                    let observed = classification_str(v.classification());
                    if !matches!(lower.as_str(), "supertrue" | "superfalse" | "none") {
                        return Err(CliError::Usage(format!(
                            "--expect classification= takes SuperTrue, SuperFalse or none, got `{want}`"
                        )));
                    }
                    Ok(Check::new(r.clone(), want, observed, observed.to_ascii_lowercase() == lower))
                }
                "degree" => {
                    let x: f64 = want
                        .parse()
                        .map_err(|_| CliError::Usage(format!("--expect degree= takes a number, got `{want}`")))?;
                    let d = v.degree();
                    let observed = d.map_or_else(|| "none".to_string(), |d| d.to_string());
                    Ok(Check::new(r.clone(), want, observed, d.is_some_and(|d| (d - x).abs() <= eps)))
                }
                _ => Err(CliError::Usage(format!(
                    "unknown --expect key `{k}`; expected verdict, classification or degree"
                ))),
            }
        })
        .collect()
}
