//! The piecewise-linear operators `S_k` on forms, their closures, and membership tests.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::CartanRank2;
use crate::error::{Error, Result};
use crate::form::LinearForm;
use crate::iota::{color, k_minus, k_plus, succ};
use crate::vector::LambdaVector;
use crate::Int;

pub const DEFAULT_FORM_BUDGET: usize = 200_000;

/// `x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}`, with `-<h_{i_k}, lambda>` added
/// when the step from `k` to `k+` crosses the weight slot.
pub fn beta_bar(cartan: &CartanRank2, k: i64) -> Result<LinearForm> {
    if k == 0 {
        return Err(Error::IndexZero);
    }
    let kp = k_plus(k);
    let ik = color(k);
    let mut f = LinearForm::coord(k, 1).plus_term(kp, Int::from(1));
    let mut j = succ(k);
    while j < kp {
        f.add_term(j, &Int::from(cartan.pairing(ik, color(j))));
        j = succ(j);
    }
    if k < 0 && kp > 0 {
        f = if ik == 1 {
            f.plus_const(Int::from(-1), Int::zero())
        } else {
            f.plus_const(Int::zero(), Int::from(-1))
        };
    }
    Ok(f)
}

/// `phi - phi_k beta_k` if `phi_k > 0`, else `phi - phi_k beta_{k-}`.
pub fn s_bar(cartan: &CartanRank2, k: i64, form: &LinearForm) -> Result<LinearForm> {
    if k == 0 {
        return Err(Error::IndexZero);
    }
    let c = form.coeff(k);
    if c.is_zero() {
        return Ok(form.clone());
    }
    let beta = if c.is_positive() {
        beta_bar(cartan, k)?
    } else {
        beta_bar(cartan, k_minus(k))?
    };
    let mut out = form.clone();
    out.add_scaled(&beta, &-c);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    XiClosure,
    XiDisplayed,
    Xi1,
    Xi2,
    Xi3,
    Xi4,
    XiHalfPositive,
    XiHalfNegative,
}

impl FamilyName {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::XiClosure => "XiClosure",
            FamilyName::XiDisplayed => "XiDisplayed",
            FamilyName::Xi1 => "Xi1",
            FamilyName::Xi2 => "Xi2",
            FamilyName::Xi3 => "Xi3",
            FamilyName::Xi4 => "Xi4",
            FamilyName::XiHalfPositive => "XiHalfPositive",
            FamilyName::XiHalfNegative => "XiHalfNegative",
        }
    }
}

/// A set of forms cut out by a closure run or a closed-form table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormFamily {
    pub name: FamilyName,
    pub k: Option<usize>,
    /// Operators `S_k` were applied for `0 < |k| <= window`.
    pub window: i64,
    pub depth: usize,
    /// The closure reached a fixpoint before `depth` ran out.
    pub saturated: bool,
    /// Sorted, duplicate-free.
    pub forms: Vec<LinearForm>,
}

impl FormFamily {
    pub fn contains(&self, form: &LinearForm) -> bool {
        self.forms.binary_search(form).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name.as_str(),
            "k": self.k,
            "window": self.window,
            "depth": self.depth,
            "saturated": self.saturated,
            "forms": self.forms.iter().map(LinearForm::to_json).collect::<Vec<_>>(),
        })
    }

    /// Union of several families, kept sorted.
    pub fn merged(name: FamilyName, k: Option<usize>, parts: &[&FormFamily]) -> FormFamily {
        let forms: BTreeSet<LinearForm> =
            parts.iter().flat_map(|f| f.forms.iter().cloned()).collect();
        FormFamily {
            name,
            k,
            window: parts.iter().map(|f| f.window).min().unwrap_or(0),
            depth: parts.iter().map(|f| f.depth).max().unwrap_or(0),
            saturated: parts.iter().all(|f| f.saturated),
            forms: forms.into_iter().collect(),
        }
    }
}

/// `x_j` and `-x_{-j}` for `1 <= j <= window`.
pub fn coordinate_generators(window: i64) -> Vec<LinearForm> {
    (1..=window)
        .flat_map(|j| [LinearForm::coord(j, 1), LinearForm::coord(-j, -1)])
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    pub window: i64,
    pub max_depth: usize,
    pub budget: usize,
    pub parallel: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            window: 12,
            max_depth: 12,
            budget: DEFAULT_FORM_BUDGET,
            parallel: true,
        }
    }
}

/// Breadth-first closure of `generators` under `step(k, form)` for `0 < |k| <= window`.
fn close_under<F>(generators: &[LinearForm], opts: &ClosureOptions, step: F) -> Result<(Vec<LinearForm>, bool)>
where
    F: Fn(i64, &LinearForm) -> LinearForm + Sync,
{
    let mut seen: BTreeSet<LinearForm> = generators.iter().cloned().collect();
    if seen.len() > opts.budget {
        return Err(Error::FormBudgetExceeded(opts.budget));
    }
    let mut frontier: Vec<LinearForm> = seen.iter().cloned().collect();
    let expand = |f: &LinearForm| -> Vec<LinearForm> {
        f.coeffs()
            .keys()
            .filter(|k| k.abs() <= opts.window)
            .map(|&k| step(k, f))
            .filter(|g| g != f)
            .collect()
    };
    for level in 0..=opts.max_depth {
        let produced: Vec<Vec<LinearForm>> = if opts.parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let fresh: BTreeSet<LinearForm> = produced
            .into_iter()
            .flatten()
            .filter(|g| !seen.contains(g))
            .collect();
        if fresh.is_empty() {
            return Ok((seen.into_iter().collect(), true));
        }
        if level == opts.max_depth {
            break;
        }
        if seen.len() + fresh.len() > opts.budget {
            return Err(Error::FormBudgetExceeded(opts.budget));
        }
        seen.extend(fresh.iter().cloned());
        frontier = fresh.into_iter().collect();
    }
    Ok((seen.into_iter().collect(), false))
}

/// Closure of `generators` under every in-window `S_k`.
pub fn xi_closure(
    cartan: &CartanRank2,
    generators: &[LinearForm],
    opts: &ClosureOptions,
) -> Result<FormFamily> {
    let (forms, saturated) = close_under(generators, opts, |k, f| {
        s_bar(cartan, k, f).expect("closure never steps on index 0")
    })?;
    Ok(FormFamily {
        name: FamilyName::XiClosure,
        k: None,
        window: opts.window,
        depth: opts.max_depth,
        saturated,
        forms,
    })
}

/// The closure started from the coordinate forms of the window.
pub fn xi_closure_default(cartan: &CartanRank2, opts: &ClosureOptions) -> Result<FormFamily> {
    xi_closure(cartan, &coordinate_generators(opts.window), opts)
}

/// First form of `family` that is negative at `x`, with its value.
pub fn first_violation<'a>(
    x: &LambdaVector,
    family: &'a FormFamily,
) -> Result<Option<(&'a LinearForm, Int)>> {
    if let Some(k) = x.entries().keys().find(|k| k.abs() > family.window) {
        return Err(Error::WindowViolation {
            index: *k,
            window: family.window,
        });
    }
    Ok(family.forms.iter().find_map(|f| {
        let v = f.eval(x);
        v.is_negative().then_some((f, v))
    }))
}

pub fn is_member(x: &LambdaVector, family: &FormFamily) -> Result<bool> {
    Ok(first_violation(x, family)?.is_none())
}

/// Half-infinite variant of `S_k`: the boundary `beta` of a half line is zero.
fn s_half(cartan: &CartanRank2, positive: bool, k: i64, form: &LinearForm) -> LinearForm {
    let c = form.coeff(k);
    if c.is_zero() {
        return form.clone();
    }
    let base = if c.is_positive() { k } else { k - 2 };
    let inside = if positive { base >= 1 } else { base + 2 <= -1 };
    if !inside {
        return form.clone();
    }
    let beta = beta_bar(cartan, base).expect("half-line indices are nonzero");
    let mut out = form.clone();
    out.add_scaled(&beta, &-c);
    out
}

/// Closures of the half-infinite families and the sign conditions on the first
/// coordinates of each color: `phi_1, phi_2 >= 0` on the positive side,
/// `phi_-1, phi_-2 <= 0` on the negative side.
pub fn check_pn_assumptions(cartan: &CartanRank2, depth: usize, window: i64) -> Result<bool> {
    let opts = ClosureOptions {
        window,
        max_depth: depth,
        ..ClosureOptions::default()
    };
    let pos = half_closure(cartan, true, &opts)?;
    let neg = half_closure(cartan, false, &opts)?;
    let pos_ok = pos
        .forms
        .iter()
        .all(|f| !f.coeff(1).is_negative() && !f.coeff(2).is_negative());
    let neg_ok = neg
        .forms
        .iter()
        .all(|f| !f.coeff(-1).is_positive() && !f.coeff(-2).is_positive());
    Ok(pos_ok && neg_ok)
}

/// The half-infinite closure on one side of the weight slot.
pub fn half_closure(cartan: &CartanRank2, positive: bool, opts: &ClosureOptions) -> Result<FormFamily> {
    let generators: Vec<LinearForm> = if positive {
        (1..=opts.window).map(|j| LinearForm::coord(j, 1)).collect()
    } else {
        (1..=opts.window).map(|j| LinearForm::coord(-j, -1)).collect()
    };
    let (forms, saturated) = close_under(&generators, opts, |k, f| {
        if (k > 0) == positive {
            s_half(cartan, positive, k, f)
        } else {
            f.clone()
        }
    })?;
    Ok(FormFamily {
        name: if positive {
            FamilyName::XiHalfPositive
        } else {
            FamilyName::XiHalfNegative
        },
        k: None,
        window: opts.window,
        depth: opts.max_depth,
        saturated,
        forms,
    })
}
