//! Exhaustive listing of the lattice points of a form family inside a finite box.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::form::LinearForm;
use crate::graph::Direction;
use crate::iota::indices;
use crate::polyhedral::FormFamily;
use crate::vector::LambdaVector;
use crate::Int;

pub const DEFAULT_BOX_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone)]
pub struct BoxQuery<'a> {
    /// Supplies the Cartan data, the weight and the reference total.
    pub seed: &'a LambdaVector,
    pub families: &'a [&'a FormFamily],
    /// Coordinates `0 < |k| <= window` may be nonzero.
    pub window: i64,
    /// `Lower`: totals up to `total(seed) + sum_bound`. `Raise`: down to `total(seed) - sum_bound`.
    pub direction: Direction,
    pub sum_bound: usize,
    /// Also bound every coordinate by the seed on the search side (`x >= seed` when
    /// lowering, `x <= seed` when raising), the region any chain of `f` (resp. `e`)
    /// steps stays in. Without it the bounds come from the families alone.
    pub anchored: bool,
    /// Cap on search nodes visited.
    pub budget: usize,
}

#[derive(Debug, Clone)]
struct Slot {
    index: i64,
    lo: Option<Int>,
    hi: Option<Int>,
}

fn tighten_lo(slot: &mut Option<Int>, v: Int) {
    if slot.as_ref().is_none_or(|cur| v > *cur) {
        *slot = Some(v);
    }
}

fn tighten_hi(slot: &mut Option<Int>, v: Int) {
    if slot.as_ref().is_none_or(|cur| v < *cur) {
        *slot = Some(v);
    }
}

/// Coordinate bounds from half-line signs and the single-variable forms of the families.
fn slots(query: &BoxQuery<'_>, forms: &[&LinearForm]) -> Vec<Slot> {
    let weight = query.seed.weight();
    let mut out: Vec<Slot> = indices(-query.window, query.window)
        .map(|k| Slot {
            index: k,
            lo: (k > 0).then(Int::zero),
            hi: (k < 0).then(Int::zero),
        })
        .collect();
    if query.anchored {
        let lower = query.direction != Direction::Raise;
        for s in &mut out {
            let v = query.seed.get(s.index);
            if lower {
                tighten_lo(&mut s.lo, v);
            } else {
                tighten_hi(&mut s.hi, v);
            }
        }
    }
    let pos: BTreeMap<i64, usize> = out.iter().enumerate().map(|(n, s)| (s.index, n)).collect();
    for f in forms {
        if f.coeffs().len() != 1 {
            continue;
        }
        let (&k, c) = f.coeffs().iter().next().expect("one term");
        let Some(&n) = pos.get(&k) else { continue };
        let p = f.const_value(weight);
        // c x + p >= 0
        if c.is_positive() {
            tighten_lo(&mut out[n].lo, (-p).div_ceil(c));
        } else {
            tighten_hi(&mut out[n].hi, p.div_floor(&-c));
        }
    }
    out
}

/// All vectors in the window with correct half-line signs, total within the bound and
/// every family form nonnegative; sorted canonically.
pub fn enumerate_box(query: &BoxQuery<'_>) -> Result<Vec<LambdaVector>> {
    let forms: Vec<&LinearForm> = query.families.iter().flat_map(|f| f.forms.iter()).collect();
    let slots = slots(query, &forms);
    let lower = query.direction != Direction::Raise;
    for s in &slots {
        let open = if lower { s.lo.is_none() } else { s.hi.is_none() };
        if open {
            return Err(Error::PreconditionViolation(format!(
                "coordinate {} is unbounded in the search direction",
                s.index
            )));
        }
    }
    // forms are checked once their last in-window coordinate is fixed
    let position: BTreeMap<i64, usize> =
        slots.iter().enumerate().map(|(n, s)| (s.index, n)).collect();
    let mut checks: Vec<Vec<&LinearForm>> = vec![Vec::new(); slots.len()];
    let mut constant_forms = Vec::new();
    for f in &forms {
        match f.coeffs().keys().filter_map(|k| position.get(k)).max() {
            Some(&n) => checks[n].push(*f),
            None => constant_forms.push(*f),
        }
    }
    let weight = query.seed.weight();
    if constant_forms.iter().any(|f| f.const_value(weight).is_negative()) {
        return Ok(Vec::new());
    }
    // slack of the remaining coordinates towards the sum bound
    let far: Vec<Int> = slots
        .iter()
        .map(|s| if lower { s.lo.clone() } else { s.hi.clone() }.expect("checked above"))
        .collect();
    let mut rest = vec![Int::zero(); slots.len() + 1];
    for n in (0..slots.len()).rev() {
        rest[n] = &rest[n + 1] + &far[n];
    }
    let base = query.seed.total();
    let target = if lower {
        base + Int::from(query.sum_bound)
    } else {
        base - Int::from(query.sum_bound)
    };

    let mut search = Search {
        query,
        slots: &slots,
        checks: &checks,
        rest: &rest,
        target,
        lower,
        values: vec![Int::zero(); slots.len()],
        visited: 0,
        found: Vec::new(),
    };
    search.descend(0, Int::zero())?;
    let mut found = search.found;
    found.sort();
    Ok(found)
}

struct Search<'q, 'a> {
    query: &'q BoxQuery<'a>,
    slots: &'q [Slot],
    checks: &'q [Vec<&'q LinearForm>],
    rest: &'q [Int],
    target: Int,
    lower: bool,
    values: Vec<Int>,
    visited: usize,
    found: Vec<LambdaVector>,
}

impl Search<'_, '_> {
    fn eval(&self, f: &LinearForm) -> Int {
        let mut acc = f.const_value(self.query.seed.weight());
        for (&k, c) in f.coeffs() {
            if k.abs() <= self.query.window {
                let n = self.position(k);
                acc += c * &self.values[n];
            }
        }
        acc
    }

    fn position(&self, k: i64) -> usize {
        // slots are the nonzero indices -window..=window in order
        let w = self.query.window;
        if k < 0 {
            (k + w) as usize
        } else {
            (k + w - 1) as usize
        }
    }

    fn descend(&mut self, n: usize, partial: Int) -> Result<()> {
        self.visited += 1;
        if self.visited > self.query.budget {
            return Err(Error::BudgetExceeded(self.query.budget));
        }
        if n == self.slots.len() {
            let seed = self.query.seed;
            let entries = self
                .slots
                .iter()
                .zip(&self.values)
                .filter(|(_, v)| !v.is_zero())
                .map(|(s, v)| (s.index, v.clone()));
            let x = LambdaVector::from_entries(*seed.cartan(), seed.weight().clone(), entries)?;
            self.found.push(x);
            return Ok(());
        }
        let slot = &self.slots[n];
        // the rest of the coordinates contribute at least (lower) or at most (raise) rest[n+1]
        let room = &self.target - &partial - &self.rest[n + 1];
        let (lo, hi) = if self.lower {
            let lo = slot.lo.clone().expect("bounded");
            let hi = match &slot.hi {
                Some(h) => h.clone().min(room),
                None => room,
            };
            (lo, hi)
        } else {
            let hi = slot.hi.clone().expect("bounded");
            let lo = match &slot.lo {
                Some(l) => l.clone().max(room),
                None => room,
            };
            (lo, hi)
        };
        let mut v = lo;
        while v <= hi {
            self.values[n] = v.clone();
            let ok = self.checks[n].iter().all(|f| !self.eval(f).is_negative());
            if ok {
                self.descend(n + 1, &partial + &v)?;
            }
            v += 1;
        }
        self.values[n] = Int::zero();
        Ok(())
    }
}
