//! Rendering of results in the three output modes.

use serde::{Serialize, Serializer};
use ternion::structure::split;
use ternion::SplitForm;

use crate::error::CalcError;
use crate::eval::EvalResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputMode {
    /// `(a, b, c)` with 12 significant digits.
    #[default]
    Tuple,
    /// `z = <re> + <im>i, r = <r>`.
    Split,
    /// One JSON object per result.
    Json,
}

impl std::str::FromStr for OutputMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tuple" => Ok(OutputMode::Tuple),
            "split" => Ok(OutputMode::Split),
            "json" => Ok(OutputMode::Json),
            other => Err(format!(
                "unknown mode {other:?} (expected tuple, split or json)"
            )),
        }
    }
}

const SIG_DIGITS: i32 = 12;

/// Format like C's `%.12g`: 12 significant digits, trailing zeros trimmed,
/// scientific notation outside `1e-4 ≤ |v| < 1e12`. Exponents are written
/// without padding (`1.5e-7`), so every output parses back as a number.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", (SIG_DIGITS - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..SIG_DIGITS).contains(&exp) {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (SIG_DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Zero out components below the 12-digit resolution of the largest one, so
/// that round-off residue such as `5.55e-17` next to `1` prints as `0`.
fn snap<const N: usize>(c: [f64; N]) -> [f64; N] {
    let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    c.map(|x| if x.abs() < scale * 1e-12 { 0.0 } else { x })
}

fn format_split(s: SplitForm) -> String {
    let [re, im, r] = snap([s.z_re, s.z_im, s.r]);
    let (sign, im) = if im.is_sign_negative() && im != 0.0 {
        ("-", -im)
    } else {
        ("+", im)
    };
    format!(
        "z = {} {sign} {}i, r = {}",
        format_number(re),
        format_number(im),
        format_number(r)
    )
}

/// Render a result as text (`Tuple`, `Split`) or as `{"kind":..,"value":..}`
/// (`Json`).
pub fn format_result(r: &EvalResult, mode: OutputMode) -> String {
    match (mode, r) {
        (OutputMode::Json, _) => serde_json::to_string(&JsonResult::from(r)).expect("serializable"),
        (_, EvalResult::RealValue(v)) => format_number(*v),
        (OutputMode::Tuple, EvalResult::TernionValue(t)) => {
            let [a, b, c] = snap(t.to_array());
            format!(
                "({}, {}, {})",
                format_number(a),
                format_number(b),
                format_number(c)
            )
        }
        (OutputMode::Split, EvalResult::TernionValue(t)) => format_split(split(*t)),
        (_, EvalResult::SplitValue(s)) => format_split(*s),
    }
}

/// A JSON line `{"expr":..,"kind":..,"value":..}` for a result or an error.
pub fn format_json_line(expr: &str, outcome: &Result<EvalResult, CalcError>) -> String {
    let line = match outcome {
        Ok(r) => {
            let JsonResult { kind, value } = JsonResult::from(r);
            JsonLine { expr, kind, value }
        }
        Err(e) => JsonLine {
            expr,
            kind: "error",
            value: JsonValue::Error {
                message: e.to_string(),
                pos: e.pos(),
            },
        },
    };
    serde_json::to_string(&line).expect("serializable")
}

#[derive(Serialize)]
struct JsonResult {
    kind: &'static str,
    value: JsonValue,
}

#[derive(Serialize)]
struct JsonLine<'a> {
    expr: &'a str,
    kind: &'static str,
    value: JsonValue,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonValue {
    Ternion([Num; 3]),
    Real(Num),
    Split { z_re: Num, z_im: Num, r: Num },
    Error { message: String, pos: usize },
}

impl From<&EvalResult> for JsonResult {
    fn from(r: &EvalResult) -> Self {
        match *r {
            EvalResult::TernionValue(t) => JsonResult {
                kind: "ternion",
                value: JsonValue::Ternion(t.to_array().map(Num)),
            },
            EvalResult::RealValue(v) => JsonResult {
                kind: "real",
                value: JsonValue::Real(Num(v)),
            },
            EvalResult::SplitValue(s) => JsonResult {
                kind: "split",
                value: JsonValue::Split {
                    z_re: Num(s.z_re),
                    z_im: Num(s.z_im),
                    r: Num(s.r),
                },
            },
        }
    }
}

/// A float serialized as an integer when it is one, otherwise with the
/// shortest round-trip representation (at most 17 significant digits).
struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = if self.0 == 0.0 { 0.0 } else { self.0 };
        if v.fract() == 0.0 && v.abs() < 1e15 {
            s.serialize_i64(v as i64)
        } else {
            s.serialize_f64(v)
        }
    }
}
