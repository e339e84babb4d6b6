//! JSON encodings: roots as integer arrays, rationals as `[num, den]`,
//! elements as canonical words, facets as 1-based position lists.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, GroupElement, Root};
use crate::geometry::{Halfspace, Rational};
use crate::subword::Facet;

pub fn rational(x: &Rational) -> Value {
    let part = |v: &num_bigint::BigInt| match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    };
    json!([part(x.numer()), part(x.denom())])
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn vectors(vs: &[Vec<Rational>]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn roots(rs: &[Root]) -> Value {
    json!(rs)
}

pub fn element(sys: &CoxeterSystem, w: &GroupElement) -> Value {
    json!(sys.format_element(w))
}

pub fn elements(sys: &CoxeterSystem, ws: &[GroupElement]) -> Value {
    Value::Array(ws.iter().map(|w| element(sys, w)).collect())
}

pub fn facet(f: &Facet) -> Value {
    json!(f.one_based())
}

pub fn halfspace(h: &Halfspace) -> Value {
    json!({ "normal": vector(&h.normal), "offset": rational(&h.offset) })
}

/// Two-space indented JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
