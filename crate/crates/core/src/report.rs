//! JSON reports. Field order is fixed by the struct definitions, floats are
//! written with 17 significant digits and exact values as `"num/den"`
//! strings, so identical runs give byte-identical output.

use serde::de::Deserializer;
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};
use crate::rules::Number;

pub const SCHEMA_VERSION: &str = "finkquad-report/1";

/// JSON Schema describing every report.
pub const SCHEMA_JSON: &str = include_str!("../schema/report.schema.json");

/// `f64` written as `d.dddddddddddddddde±x`; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F17 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(F17(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

/// Exact rational as a string, or a float.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumOut {
    Exact(String),
    Approx(F17),
}

impl From<&Number> for NumOut {
    fn from(n: &Number) -> Self {
        match n {
            Number::Exact(r) => NumOut::Exact(format_rational(r)),
            Number::Approx(v) => NumOut::Approx(F17(*v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyCase {
    pub rule: String,
    pub kernel: String,
    #[serde(rename = "fn")]
    pub func: String,
    pub n: usize,
    pub x: String,
    pub a: String,
    pub b: String,
    pub residual: NumOut,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyData {
    pub tol: F17,
    pub cases: Vec<VerifyCase>,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergenceRow {
    pub panels: usize,
    pub value: NumOut,
    pub error: F17,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergenceOut {
    pub rows: Vec<ConvergenceRow>,
    pub slope: Option<F17>,
    pub excluded: Vec<usize>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadData {
    pub rule: String,
    pub kernel: String,
    #[serde(rename = "fn")]
    pub func: String,
    pub n: usize,
    pub x: String,
    pub a: String,
    pub b: String,
    pub value: NumOut,
    pub remainder: NumOut,
    pub exact: bool,
    pub integral_ref: NumOut,
    pub convergence: Option<ConvergenceOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundReportOut {
    pub bound_name: String,
    pub bound_value: F17,
    pub residual_abs: F17,
    pub holds: bool,
    pub slack: F17,
    pub mode: String,
    pub status: String,
    pub mean_diff: Option<F17>,
    pub notes: Vec<String>,
}

impl From<&BoundReport> for BoundReportOut {
    fn from(r: &BoundReport) -> Self {
        BoundReportOut {
            bound_name: r.bound_name.clone(),
            bound_value: F17(r.bound_value),
            residual_abs: F17(r.residual_abs),
            holds: r.holds,
            slack: F17(r.slack),
            mode: r.mode.as_str().to_string(),
            status: r.status.as_str().to_string(),
            mean_diff: r.mean_diff.map(F17),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundConstant {
    pub name: String,
    pub p: String,
    pub value: F17,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsData {
    pub n: usize,
    pub x: String,
    pub a: String,
    pub b: String,
    pub seq: String,
    pub constants: Vec<BoundConstant>,
    pub reports: Vec<BoundReportOut>,
    pub assert_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditConstants {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditData {
    #[serde(rename = "fn")]
    pub func: String,
    pub n: usize,
    pub x: String,
    pub a: String,
    pub b: String,
    pub seq: String,
    pub constants: AuditConstants,
    pub reports: Vec<BoundReportOut>,
    pub notes: Vec<String>,
    pub assert_failures: usize,
}

/// Top-level report; exactly the payload named by `command` is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verify: Option<VerifyData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub quad: Option<QuadData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<BoundsData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub audit: Option<AuditData>,
}

impl Report {
    fn empty(command: &str, ok: bool) -> Report {
        Report { schema: SCHEMA_VERSION.into(), command: command.into(), ok, verify: None, quad: None, bounds: None, audit: None }
    }

    pub fn verify(data: VerifyData) -> Report {
        Report { verify: Some(data.clone()), ..Report::empty("verify", data.failures == 0) }
    }

    pub fn quad(data: QuadData) -> Report {
        Report { quad: Some(data), ..Report::empty("quad", true) }
    }

    pub fn bounds(data: BoundsData) -> Report {
        let ok = data.assert_failures == 0;
        Report { bounds: Some(data), ..Report::empty("bounds", ok) }
    }

    pub fn audit(data: AuditData) -> Report {
        let ok = data.assert_failures == 0;
        Report { audit: Some(data), ..Report::empty("audit", ok) }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Parse(format!("serializing report: {e}")))
    }
}

fn check_rational(field: &str, s: &str) -> Result<()> {
    parse_rational(s).map(|_| ()).map_err(|_| Error::Parse(format!("{field}: '{s}' is not a rational")))
}

fn check_num(field: &str, n: &NumOut) -> Result<()> {
    match n {
        NumOut::Exact(s) if s.contains('/') => check_rational(field, s),
        NumOut::Exact(s) => Err(Error::Parse(format!("{field}: exact value '{s}' must be num/den"))),
        NumOut::Approx(_) => Ok(()),
    }
}

/// Parses a report, checks the schema version, the payload/command match
/// and every exact field, and requires that re-serializing reproduces the
/// input byte for byte.
pub fn validate(json: &str) -> Result<Report> {
    let report: Report = serde_json::from_str(json).map_err(|e| Error::Parse(format!("report does not parse: {e}")))?;
    if report.schema != SCHEMA_VERSION {
        return Err(Error::Parse(format!("schema '{}' is not '{SCHEMA_VERSION}'", report.schema)));
    }
    let present = [
        ("verify", report.verify.is_some()),
        ("quad", report.quad.is_some()),
        ("bounds", report.bounds.is_some()),
        ("audit", report.audit.is_some()),
    ];
    let names: Vec<&str> = present.iter().filter(|p| p.1).map(|p| p.0).collect();
    if names != [report.command.as_str()] {
        return Err(Error::Parse(format!("command '{}' with payloads {names:?}", report.command)));
    }
    if let Some(v) = &report.verify {
        for c in &v.cases {
            for (f, s) in [("x", &c.x), ("a", &c.a), ("b", &c.b)] {
                check_rational(f, s)?;
            }
            check_num("residual", &c.residual)?;
        }
        if v.failures != v.cases.iter().filter(|c| !c.passed).count() {
            return Err(Error::Parse("failure count does not match cases".into()));
        }
    }
    if let Some(q) = &report.quad {
        for (f, s) in [("x", &q.x), ("a", &q.a), ("b", &q.b)] {
            check_rational(f, s)?;
        }
        check_num("value", &q.value)?;
        check_num("remainder", &q.remainder)?;
        check_num("integral_ref", &q.integral_ref)?;
    }
    if let Some(a) = &report.audit {
        check_rational("A", &a.constants.a)?;
        check_rational("B", &a.constants.b)?;
    }
    if report.to_json()? != json {
        return Err(Error::Parse("report is not in canonical form".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn float_format() {
        assert_eq!(serde_json::to_string(&F17(0.1)).unwrap(), "1.0000000000000001e-1");
        assert_eq!(serde_json::to_string(&F17(-3.0)).unwrap(), "-3.0000000000000000e0");
        assert_eq!(serde_json::to_string(&F17(f64::INFINITY)).unwrap(), "null");
        let back: F17 = serde_json::from_str("1.0000000000000001e-1").unwrap();
        assert_eq!(back.0, 0.1);
    }

    #[test]
    fn numbers() {
        let e = NumOut::from(&Number::Exact(rat(-1, 8)));
        assert_eq!(serde_json::to_string(&e).unwrap(), "\"-1/8\"");
        let back: NumOut = serde_json::from_str("\"-1/8\"").unwrap();
        assert_eq!(back, e);
        let a: NumOut = serde_json::from_str("2.5e0").unwrap();
        assert_eq!(a, NumOut::Approx(F17(2.5)));
    }

    fn sample() -> Report {
        Report::quad(QuadData {
            rule: "G".into(),
            kernel: "canonical".into(),
            func: "poly:0/1,0/1,1/1".into(),
            n: 2,
            x: "0/1".into(),
            a: "0/1".into(),
            b: "1/1".into(),
            value: NumOut::Exact("3/8".into()),
            remainder: NumOut::Exact("-1/24".into()),
            exact: true,
            integral_ref: NumOut::Exact("1/3".into()),
            convergence: None,
        })
    }

    #[test]
    fn round_trip() {
        let json = sample().to_json().unwrap();
        assert_eq!(validate(&json).unwrap(), sample());
    }

    #[test]
    fn validation_rejects_bad_reports() {
        let json = sample().to_json().unwrap();
        assert!(validate(&json.replace(SCHEMA_VERSION, "finkquad-report/0")).is_err());
        assert!(validate(&json.replace("\"3/8\"", "\"3.8\"")).is_err());
        assert!(validate(&json.replace("\"command\": \"quad\"", "\"command\": \"audit\"")).is_err());
        assert!(validate(&json.replace("\n", "")).is_err());
    }

    #[test]
    fn schema_is_json() {
        let schema: serde_json::Value = serde_json::from_str(SCHEMA_JSON).unwrap();
        assert_eq!(schema["properties"]["schema"]["const"], SCHEMA_VERSION);
    }
}
