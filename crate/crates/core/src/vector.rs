//! Finite-support coordinate vectors of `Z^inf[lambda]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{Map, Value};

use crate::cartan::{CartanRank2, Weight};
use crate::error::{Error, Result};
use crate::json::{int_value, parse_int};
use crate::Int;

/// `x = (..., x_2, x_1, t_lambda, x_-1, x_-2, ...)` with finitely many nonzero entries.
///
/// Ordering compares the sorted `(index, value)` lists first, which is the canonical
/// node order of crystal graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaVector {
    entries: BTreeMap<i64, Int>,
    cartan: CartanRank2,
    weight: Weight,
}

impl LambdaVector {
    /// The element `u_inf (x) t_lambda (x) u_-inf`.
    pub fn zero(cartan: CartanRank2, weight: Weight) -> Self {
        LambdaVector {
            entries: BTreeMap::new(),
            cartan,
            weight,
        }
    }

    pub fn from_entries<I, V>(cartan: CartanRank2, weight: Weight, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, V)>,
        V: Into<Int>,
    {
        let mut x = Self::zero(cartan, weight);
        for (k, v) in entries {
            if k == 0 {
                return Err(Error::IndexZero);
            }
            x.add(k, &v.into());
        }
        Ok(x)
    }

    pub fn cartan(&self) -> &CartanRank2 {
        &self.cartan
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn get(&self, k: i64) -> Int {
        self.entries.get(&k).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<i64, Int> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    /// `x_k += delta`, dropping the entry if it becomes zero.
    pub fn add(&mut self, k: i64, delta: &Int) {
        assert!(k != 0, "index 0 is not a coordinate");
        let slot = self.entries.entry(k).or_default();
        *slot += delta;
        if slot.is_zero() {
            self.entries.remove(&k);
        }
    }

    pub fn with_added(&self, k: i64, delta: i64) -> Self {
        let mut y = self.clone();
        y.add(k, &Int::from(delta));
        y
    }

    /// Sum of all coordinates; every `f_i` raises it by one.
    pub fn total(&self) -> Int {
        self.entries.values().sum()
    }

    /// Positive-side entries are `>= 0` and negative-side entries `<= 0`.
    pub fn has_half_line_signs(&self) -> bool {
        self.entries
            .iter()
            .all(|(&k, v)| if k > 0 { !v.is_negative() } else { !v.is_positive() })
    }

    /// `{"cartan":[c1,c2],"lambda":[l1,l2],"entries":{...}}`, entries by descending index.
    pub fn to_json(&self) -> Value {
        let mut entries = Map::new();
        for (k, v) in self.entries.iter().rev() {
            entries.insert(k.to_string(), int_value(v));
        }
        let mut out = Map::new();
        out.insert(
            "cartan".into(),
            Value::Array(vec![self.cartan.c1().into(), self.cartan.c2().into()]),
        );
        out.insert(
            "lambda".into(),
            Value::Array(vec![int_value(&self.weight.l1), int_value(&self.weight.l2)]),
        );
        out.insert("entries".into(), Value::Object(entries));
        Value::Object(out)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::PreconditionViolation(format!("vector JSON: {what}"));
        let pair = |key: &str| -> Result<(Int, Int)> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad(&format!("missing pair `{key}`")))?;
            let x = parse_int(&arr[0]).ok_or_else(|| bad(key))?;
            let y = parse_int(&arr[1]).ok_or_else(|| bad(key))?;
            Ok((x, y))
        };
        let (c1, c2) = pair("cartan")?;
        let small = |c: Int| u32::try_from(c).map_err(|_| bad("cartan entries out of range"));
        let cartan = CartanRank2::new(small(c1)?, small(c2)?)?;
        let (l1, l2) = pair("lambda")?;
        let map = v
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing object `entries`"))?;
        let mut entries = Vec::with_capacity(map.len());
        for (key, val) in map {
            let k: i64 = key.parse().map_err(|_| bad(&format!("index `{key}`")))?;
            let x = parse_int(val).ok_or_else(|| bad(&format!("value at `{key}`")))?;
            entries.push((k, x));
        }
        Self::from_entries(cartan, Weight::new(l1, l2), entries)
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (k, v)) in self.entries.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        f.write_str("}")
    }
}
