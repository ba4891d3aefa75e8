//! Kashiwara operators on `Z^inf[lambda]`.
//!
//! `sigma_k` only changes between neighbouring same-color indices through the entries in
//! between, so every `sigma` of color `i` is constant above the support (value 0) and below
//! it (value `-<h_i, wt x>`). Operators therefore only need a window two indices wider than
//! the support on each side.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::iota::{color, indices};
use crate::vector::LambdaVector;
use crate::Int;

/// `sigma_k(x)`, evaluated straight from the definition.
pub fn sigma(x: &LambdaVector, k: i64) -> Result<Int> {
    if k == 0 {
        return Err(Error::IndexZero);
    }
    let c = x.cartan();
    let ik = color(k);
    let mut acc = x.get(k);
    for (&j, v) in x.entries().range(k + 1..) {
        if j != 0 {
            acc += Int::from(c.pairing(ik, color(j))) * v;
        }
    }
    if k < 0 {
        acc -= x.weight().pairing(ik);
    }
    Ok(acc)
}

/// Index range that captures every distinct `sigma` value of `x`.
pub fn window(x: &LambdaVector) -> (i64, i64) {
    let lo = x.min_index().unwrap_or(-1).min(-1) - 2;
    let hi = x.max_index().unwrap_or(1).max(1) + 2;
    (lo, hi)
}

/// `sigma_k(x)` for every nonzero `k` in `lo..=hi`, ascending.
pub fn sigma_run(x: &LambdaVector, lo: i64, hi: i64) -> Vec<(i64, Int)> {
    let c = x.cartan();
    // sums of x_j over j > k, split by color
    let mut above = [Int::zero(), Int::zero()];
    for (&j, v) in x.entries().range(hi + 1..) {
        above[color(j) as usize - 1] += v;
    }
    let mut out = Vec::new();
    for k in indices(lo, hi).rev() {
        let ik = color(k);
        let mut s = x.get(k)
            + Int::from(c.pairing(ik, 1)) * &above[0]
            + Int::from(c.pairing(ik, 2)) * &above[1];
        if k < 0 {
            s -= x.weight().pairing(ik);
        }
        above[ik as usize - 1] += x.get(k);
        out.push((k, s));
    }
    out.reverse();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaProfile {
    pub max_value: Int,
    /// Indices inside the window reaching `max_value`, ascending.
    pub finite_maximizers: Vec<i64>,
    pub neg_tail_attains: bool,
    pub pos_tail_attains: bool,
}

pub fn sigma_profile(x: &LambdaVector, i: u8) -> SigmaProfile {
    let (lo, hi) = window(x);
    let values: Vec<(i64, Int)> = sigma_run(x, lo, hi)
        .into_iter()
        .filter(|&(k, _)| color(k) == i)
        .collect();
    let neg_tail = -pairing_wt(x, i);
    let pos_tail = Int::zero();
    let max_value = values
        .iter()
        .map(|(_, v)| v)
        .chain([&neg_tail, &pos_tail])
        .max()
        .cloned()
        .expect("tails are always present");
    let finite_maximizers = values
        .iter()
        .filter(|(_, v)| *v == max_value)
        .map(|&(k, _)| k)
        .collect();
    SigmaProfile {
        neg_tail_attains: neg_tail == max_value,
        pos_tail_attains: pos_tail == max_value,
        max_value,
        finite_maximizers,
    }
}

/// `wt(x) = lambda - sum_j x_j alpha_{i_j}`, as `(<h_1, wt>, <h_2, wt>)`.
pub fn wt(x: &LambdaVector) -> (Int, Int) {
    let c = x.cartan();
    let mut w = (x.weight().l1.clone(), x.weight().l2.clone());
    for (&j, v) in x.entries() {
        let (r1, r2) = c.simple_root(color(j));
        w.0 -= Int::from(r1) * v;
        w.1 -= Int::from(r2) * v;
    }
    w
}

fn pairing_wt(x: &LambdaVector, i: u8) -> Int {
    let w = wt(x);
    if i == 1 {
        w.0
    } else {
        w.1
    }
}

pub fn epsilon(x: &LambdaVector, i: u8) -> Int {
    sigma_profile(x, i).max_value
}

pub fn phi(x: &LambdaVector, i: u8) -> Int {
    pairing_wt(x, i) + epsilon(x, i)
}

/// Subtracts 1 at the largest maximizer of `sigma`; `None` when `epsilon_i(x) = 0`.
pub fn e_tilde(x: &LambdaVector, i: u8) -> Option<LambdaVector> {
    let p = sigma_profile(x, i);
    if p.pos_tail_attains {
        return None;
    }
    let k = *p.finite_maximizers.last()?;
    Some(x.with_added(k, -1))
}

/// Adds 1 at the smallest maximizer of `sigma`; `None` when `phi_i(x) = 0`.
pub fn f_tilde(x: &LambdaVector, i: u8) -> Option<LambdaVector> {
    let p = sigma_profile(x, i);
    if p.neg_tail_attains {
        return None;
    }
    let k = *p.finite_maximizers.first()?;
    Some(x.with_added(k, 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Raise,
    Lower,
}

impl Mode {
    pub fn apply(self, x: &LambdaVector, i: u8) -> Option<LambdaVector> {
        match self {
            Mode::Raise => e_tilde(x, i),
            Mode::Lower => f_tilde(x, i),
        }
    }
}

/// Applies `e_2`, else `e_1` (or the `f` pair) until both vanish.
pub fn raise_to_extremal(
    x: &LambdaVector,
    mode: Mode,
    max_steps: usize,
) -> Result<(LambdaVector, usize)> {
    let mut cur = x.clone();
    let mut steps = 0;
    loop {
        let next = mode.apply(&cur, 2).or_else(|| mode.apply(&cur, 1));
        match next {
            None => return Ok((cur, steps)),
            Some(_) if steps == max_steps => return Err(Error::StepLimit(max_steps)),
            Some(y) => {
                cur = y;
                steps += 1;
            }
        }
    }
}
