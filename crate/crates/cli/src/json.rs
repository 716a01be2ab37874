//! JSON encodings shared by all reports.
//!
//! Integers of any size are written as JSON numbers, rationals as `"p/q"`
//! strings, polynomials in infix form and exponent matrices as
//! `"r1;r2;r3"` rows of comma-separated entries.

use std::str::FromStr;

use cubinv_core::{BigInt, BigRational};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{Number, Value};

pub fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn approx(q: &BigRational) -> Value {
    q.to_f64().and_then(Number::from_f64).map_or(Value::Null, Value::Number)
}

pub fn rationals<const N: usize>(v: &[BigRational; N]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

/// Compact JSON, used for digests and JSON-lines files.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable record")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(bytes))
}
