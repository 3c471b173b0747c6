//! JSON encodings for sequences and verification reports.
//!
//! Rationals are strings in lowest terms (`"3/2"`, `"-4"`); polynomials in
//! `λ` are maps from power to coefficient (`{"1": "1"}` is `λ`).

use std::str::FromStr;

use connpart_core::cumulants::{Flavor, Sequence};
use connpart_core::theorem::Check;
use connpart_core::{LambdaPoly, Rational, Ring};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed rational {0:?}")]
    Rational(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

pub fn parse_rational(text: &str) -> Result<Rational, FormatError> {
    let trimmed = text.trim();
    Rational::from_str(trimmed).map_err(|_| FormatError::Rational(text.to_string()))
}

/// A ring whose elements have a JSON form.
pub trait JsonScalar: Ring {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self, FormatError>;
}

fn rational_from_json(value: &Value) -> Result<Rational, FormatError> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(FormatError::Rational(other.to_string())),
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Result<Self, FormatError> {
        rational_from_json(value)
    }
}

impl JsonScalar for LambdaPoly {
    fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Ring::is_zero(*c))
            .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }

    fn from_json(value: &Value) -> Result<Self, FormatError> {
        let map = match value {
            Value::Object(map) => map,
            // a bare rational is a constant polynomial
            other => return Ok(LambdaPoly::constant(rational_from_json(other)?)),
        };
        let mut coeffs = Vec::new();
        for (power, c) in map {
            let power: usize = power
                .parse()
                .map_err(|_| FormatError::Shape(format!("polynomial power {power:?} is not a natural number")))?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, <Rational as Ring>::zero());
            }
            coeffs[power] += rational_from_json(c)?;
        }
        Ok(LambdaPoly::new(coeffs))
    }
}

/// `[v_1, v_2, ...]`.
pub fn sequence_to_json<R: JsonScalar>(seq: &Sequence<R>) -> Value {
    Value::Array(seq.values().iter().map(JsonScalar::to_json).collect())
}

/// Reads a JSON array whose `k`-th entry is `v_{k+1}`.
pub fn sequence_from_json<R: JsonScalar>(text: &str, flavor: Flavor) -> Result<Sequence<R>, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    let items = value
        .as_array()
        .ok_or_else(|| FormatError::Shape("expected a JSON array of rationals".into()))?;
    let values = items.iter().map(R::from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(Sequence::new(flavor, values))
}

pub fn check_to_json(check: &Check) -> Value {
    json!({
        "identity": check.identity.name(),
        "n": check.n,
        "seed": check.seed,
        "lhs": check.lhs.to_string(),
        "rhs": check.rhs.to_string(),
        "equal": check.equal(),
    })
}

pub fn report_to_json(checks: &[Check], max_n: usize, trials: usize, seed: u64) -> Value {
    json!({
        "max_n": max_n,
        "trials": trials,
        "seed": seed,
        "all_equal": checks.iter().all(Check::equal),
        "checks": checks.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}
