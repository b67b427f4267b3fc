use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` reduced. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn vector(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

/// Text form used by the JSON encoding: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`. The fraction must already be canonical
/// (`q > 0`, `gcd(|p|, q) = 1`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("malformed rational {text:?}"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
    let Some(q) = q else {
        return Ok(Rational::from_integer(p));
    };
    let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
    if !q.is_positive() {
        return Err(Error::Invalid(format!("rational {text:?} must have a positive denominator")));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::Invalid(format!("rational {text:?} is not in lowest terms")));
    }
    Ok(Rational::new_raw(p, q))
}

/// JSON value for a rational: a JSON integer when it fits in `i64`, a string
/// otherwise.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return serde_json::Value::from(v);
        }
    }
    serde_json::Value::String(format_rational(r))
}

pub fn rational_from_json(value: &serde_json::Value) -> Result<Rational> {
    match value {
        serde_json::Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(v), _) => Ok(int(v)),
            (None, Some(v)) => Ok(Rational::from_integer(BigInt::from(v))),
            _ => Err(Error::Invalid(format!("rational {n} must be an integer or a \"p/q\" string"))),
        },
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::Invalid(format!("expected a rational, found {other}"))),
    }
}
