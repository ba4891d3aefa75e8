//! Affine-linear forms `sum_k c_k x_k + p l1 + q l2` with symbolic weight constant.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::cartan::Weight;
use crate::json::int_value;
use crate::vector::LambdaVector;
use crate::Int;

/// Zero coefficients are never stored, so derived equality is canonical equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: BTreeMap<i64, Int>,
    cst: (Int, Int),
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `sign * x_k`.
    pub fn coord(k: i64, sign: i64) -> Self {
        Self::zero().plus_term(k, Int::from(sign))
    }

    pub fn plus_term(mut self, k: i64, c: Int) -> Self {
        self.add_term(k, &c);
        self
    }

    pub fn plus_const(mut self, p: Int, q: Int) -> Self {
        self.cst.0 += p;
        self.cst.1 += q;
        self
    }

    pub fn add_term(&mut self, k: i64, c: &Int) {
        assert!(k != 0, "index 0 is not a coordinate");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> Int {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, Int> {
        &self.coeffs
    }

    pub fn constant(&self) -> &(Int, Int) {
        &self.cst
    }

    pub fn min_index(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `self + factor * other`.
    pub fn add_scaled(&mut self, other: &LinearForm, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        for (&k, c) in &other.coeffs {
            self.add_term(k, &(c * factor));
        }
        self.cst.0 += &other.cst.0 * factor;
        self.cst.1 += &other.cst.1 * factor;
    }

    pub fn const_value(&self, weight: &Weight) -> Int {
        weight.eval(&self.cst.0, &self.cst.1)
    }

    pub fn eval(&self, x: &LambdaVector) -> Int {
        let mut acc = self.const_value(x.weight());
        for (&k, c) in &self.coeffs {
            if let Some(v) = x.entries().get(&k) {
                acc += c * v;
            }
        }
        acc
    }

    /// Largest `|k|` in the support, 0 for a constant form.
    pub fn reach(&self) -> i64 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    /// `{"coeffs":{"-1":3,...},"const":[p,q]}`, coefficients by descending index.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (k, c) in self.coeffs.iter().rev() {
            coeffs.insert(k.to_string(), int_value(c));
        }
        let mut out = Map::new();
        out.insert("coeffs".into(), Value::Object(coeffs));
        out.insert(
            "const".into(),
            Value::Array(vec![int_value(&self.cst.0), int_value(&self.cst.1)]),
        );
        Value::Object(out)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &Int, name: &str) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    let sign = if c.is_negative() { "-" } else { "+" };
    let mag = c.abs();
    if *first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    if !mag.is_one() {
        write!(f, "{mag}")?;
    }
    f.write_str(name)?;
    *first = false;
    Ok(())
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            write_term(f, &mut first, c, &format!("x{k}"))?;
        }
        write_term(f, &mut first, &self.cst.0, "l1")?;
        write_term(f, &mut first, &self.cst.1, "l2")?;
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
