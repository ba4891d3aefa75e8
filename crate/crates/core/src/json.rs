//! JSON helpers: big integers are written as bare JSON numbers of any length.

use serde::{Serialize, Serializer};
use serde_json::{Number, Value};

use crate::Int;

pub fn int_value(v: &Int) -> Value {
    Value::Number(number(v))
}

fn number(v: &Int) -> Number {
    v.to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers")
}

pub fn ser_int<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
    number(v).serialize(s)
}

pub fn ser_int_pair<S: Serializer>(v: &(Int, Int), s: S) -> Result<S::Ok, S::Error> {
    [number(&v.0), number(&v.1)].serialize(s)
}

/// Reads a JSON integer (number or decimal string) into an [`Int`].
pub fn parse_int(v: &Value) -> Option<Int> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}
