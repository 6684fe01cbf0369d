use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::Value;
use thiserror::Error;

use super::laurent::{Coefficient, Laurent};
use super::monomial::Exponent;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("malformed term `{0}`")]
    Term(String),
    #[error("malformed JSON polynomial: {0}")]
    Json(String),
}

/// Terms are written highest exponent first as `c*m`, joined by ` + `.
impl<K: Exponent, C: Coefficient> fmt::Display for Laurent<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*")?;
            k.fmt_monomial(f)?;
        }
        Ok(())
    }
}

impl<K: Exponent, C: Coefficient> fmt::Debug for Laurent<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Exponent, C: Coefficient + FromStr> FromStr for Laurent<K, C> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let bad = || ParsePolyError::Term(term.to_string());
            let (c, m) = term.split_once('*').ok_or_else(bad)?;
            let c: C = c.parse().map_err(|_| bad())?;
            let k = K::parse_monomial(m).ok_or_else(bad)?;
            out.add_term(k, c);
        }
        Ok(out)
    }
}

fn coeff_to_json<C: Coefficient>(c: &C) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

fn coeff_from_json<C: Coefficient + FromStr>(v: &Value) -> Option<C> {
    match v {
        Value::Number(n) => C::from_i64(n.as_i64()?),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl<K: Exponent, C: Coefficient> Laurent<K, C> {
    /// JSON list of `[exponent components..., coefficient]`, highest exponent first.
    /// Coefficients outside the `i64` range are written as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .rev()
                .map(|(k, c)| {
                    let mut row: Vec<Value> = k.components().into_iter().map(Value::from).collect();
                    row.push(coeff_to_json(c));
                    Value::Array(row)
                })
                .collect(),
        )
    }
}

impl<K: Exponent, C: Coefficient + FromStr> Laurent<K, C> {
    pub fn from_json(v: &Value) -> Result<Self, ParsePolyError> {
        let bad = || ParsePolyError::Json(v.to_string());
        let rows = v.as_array().ok_or_else(bad)?;
        let mut out = Self::zero();
        for row in rows {
            let row = row.as_array().ok_or_else(bad)?;
            let (coeff, exps) = row.split_last().ok_or_else(bad)?;
            let exps: Option<Vec<i64>> = exps.iter().map(Value::as_i64).collect();
            let k = K::from_components(&exps.ok_or_else(bad)?).ok_or_else(bad)?;
            out.add_term(k, coeff_from_json(coeff).ok_or_else(bad)?);
        }
        Ok(out)
    }
}
