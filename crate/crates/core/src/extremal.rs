//! Closed-form highest and lowest vectors of the component of the zero vector.

use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::cartan::{CartanKind, CartanRank2, Weight};
use crate::classify::{classify_weight, WeightClassification};
use crate::crystal::{e_tilde, f_tilde, raise_to_extremal, sigma, wt, Mode};
use crate::error::{Error, Result};
use crate::families::{h_pair, l_pair};
use crate::seq::Sequences;
use crate::vector::LambdaVector;
use crate::Int;

/// `h_-j`.
pub fn h_coeff(cartan: &CartanRank2, weight: &Weight, j: usize) -> Int {
    assert!(j >= 1, "h_-j needs j >= 1");
    let (p, q) = h_pair(&Sequences::new(cartan, j), j);
    weight.eval(&p, &q)
}

/// `l_j`.
pub fn l_coeff(cartan: &CartanRank2, weight: &Weight, j: usize) -> Int {
    assert!(j >= 1, "l_j needs j >= 1");
    let (p, q) = l_pair(&Sequences::new(cartan, j), j);
    weight.eval(&p, &q)
}

/// `H_-n`: entries `x_-m = h_-m` for `1 <= m <= n`.
pub fn h_vector(cartan: &CartanRank2, weight: &Weight, n: usize) -> LambdaVector {
    let seq = Sequences::new(cartan, n + 1);
    let entries = (1..=n).map(|m| {
        let (p, q) = h_pair(&seq, m);
        (-(m as i64), weight.eval(&p, &q))
    });
    LambdaVector::from_entries(*cartan, weight.clone(), entries).expect("indices are nonzero")
}

/// `L_n`: entries `x_m = l_m` for `1 <= m <= n`.
pub fn l_vector(cartan: &CartanRank2, weight: &Weight, n: usize) -> LambdaVector {
    let seq = Sequences::new(cartan, n + 1);
    let entries = (1..=n).map(|m| {
        let (p, q) = l_pair(&seq, m);
        (m as i64, weight.eval(&p, &q))
    });
    LambdaVector::from_entries(*cartan, weight.clone(), entries).expect("indices are nonzero")
}

pub fn highest_vector(cartan: &CartanRank2, weight: &Weight) -> Result<Option<LambdaVector>> {
    let wc = classify_weight(cartan, weight)?;
    Ok(wc.highest_index().map(|n| h_vector(cartan, weight, n)))
}

pub fn lowest_vector(cartan: &CartanRank2, weight: &Weight) -> Result<Option<LambdaVector>> {
    let wc = classify_weight(cartan, weight)?;
    Ok(wc.lowest_index().map(|n| l_vector(cartan, weight, n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Highest,
    Lowest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub classification: WeightClassification,
    pub side: Side,
    pub vector: Option<LambdaVector>,
    pub checks: Vec<Check>,
}

impl ExtremalReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "classification": serde_json::to_value(&self.classification).expect("plain data"),
            "side": match self.side { Side::Highest => "highest", Side::Lowest => "lowest" },
            "vector": self.vector.as_ref().map(LambdaVector::to_json),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ExtremalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.classification)?;
        match &self.vector {
            Some(v) => writeln!(f, "vector {v}")?,
            None => writeln!(f, "vector none")?,
        }
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks the extremal vector on the primary side of the classification: highest
/// whenever one exists, lowest otherwise.
pub fn verify_extremal(cartan: &CartanRank2, weight: &Weight, budget: usize) -> Result<ExtremalReport> {
    let wc = classify_weight(cartan, weight)?;
    let side = if wc.highest_index().is_some() || wc.lowest_index().is_none() {
        Side::Highest
    } else {
        Side::Lowest
    };
    verify_extremal_side(cartan, weight, side, budget)
}

pub fn verify_extremal_side(
    cartan: &CartanRank2,
    weight: &Weight,
    side: Side,
    budget: usize,
) -> Result<ExtremalReport> {
    let classification = classify_weight(cartan, weight)?;
    let n = match side {
        Side::Highest => classification.highest_index(),
        Side::Lowest => classification.lowest_index(),
    };
    let zero = LambdaVector::zero(*cartan, weight.clone());
    let mode = match side {
        Side::Highest => Mode::Raise,
        Side::Lowest => Mode::Lower,
    };
    let Some(n) = n else {
        let reached = raise_to_extremal(&zero, mode, budget);
        let check = Check::new(
            "no_extremal_within_budget",
            reached == Err(Error::StepLimit(budget)),
            format!("{budget} steps from the zero vector: {reached:?}"),
        );
        return Ok(ExtremalReport {
            classification,
            side,
            vector: None,
            checks: vec![check],
        });
    };

    let vector = match side {
        Side::Highest => h_vector(cartan, weight, n),
        Side::Lowest => l_vector(cartan, weight, n),
    };
    let mut checks = Vec::new();

    let dead: Vec<u8> = [1u8, 2]
        .into_iter()
        .filter(|&i| match side {
            Side::Highest => e_tilde(&vector, i).is_none(),
            Side::Lowest => f_tilde(&vector, i).is_none(),
        })
        .collect();
    checks.push(Check::new(
        "annihilated",
        dead.len() == 2,
        format!("operators vanishing on the vector for colors {dead:?}"),
    ));

    checks.push(profile_check(&vector, side, n));

    let w = wt(&vector);
    let sign_ok = match side {
        Side::Highest => !w.0.is_negative() && !w.1.is_negative(),
        Side::Lowest => !w.0.is_positive() && !w.1.is_positive(),
    };
    checks.push(Check::new(
        "weight_sign",
        sign_ok,
        format!("wt = ({}, {})", w.0, w.1),
    ));

    let expected_steps: Int = vector.entries().values().map(|v| v.abs()).sum();
    match raise_to_extremal(&zero, mode, budget) {
        Ok((reached, steps)) => {
            checks.push(Check::new(
                "reached_from_zero",
                reached == vector,
                format!("terminus {reached}"),
            ));
            checks.push(Check::new(
                "step_count",
                Int::from(steps) == expected_steps,
                format!("{steps} steps, expected {expected_steps}"),
            ));
        }
        Err(e) => {
            checks.push(Check::new("reached_from_zero", false, e.to_string()));
            checks.push(Check::new("step_count", false, e.to_string()));
        }
    }

    Ok(ExtremalReport {
        classification,
        side,
        vector: Some(vector),
        checks,
    })
}

/// The sigma profile at the edge of the vector: highest vectors have `sigma_-m = 0` for
/// `m <= n` and `sigma_-(n+1) = -h_-(n+1)`; lowest vectors have
/// `sigma_m + <h_{i_m}, wt> = 0` for `m <= n` and `l_{n+1}` at `m = n + 1`.
fn profile_check(vector: &LambdaVector, side: Side, n: usize) -> Check {
    let cartan = vector.cartan();
    let weight = vector.weight();
    let w = wt(vector);
    let shifted = |m: i64| -> Int {
        let s = sigma(vector, m).expect("nonzero index");
        match side {
            Side::Highest => s,
            Side::Lowest => s + if crate::iota::color(m) == 1 { &w.0 } else { &w.1 },
        }
    };
    let index = |m: usize| -> i64 {
        match side {
            Side::Highest => -(m as i64),
            Side::Lowest => m as i64,
        }
    };
    let bad: Vec<usize> = (1..=n).filter(|&m| !shifted(index(m)).is_zero()).collect();
    let next = shifted(index(n + 1));
    let want = match side {
        Side::Highest => -h_coeff(cartan, weight, n + 1),
        Side::Lowest => l_coeff(cartan, weight, n + 1),
    };
    Check::new(
        "sigma_profile",
        bad.is_empty() && next == want,
        format!("nonzero inside at {bad:?}; next value {next}, expected {want}"),
    )
}

/// Highest and lowest index for classical Cartan data, e.g. `(Some(1), Some(2))` for
/// `(H_-1, L_2)`.
pub fn classical_table(cartan: &CartanRank2, weight: &Weight) -> Result<(Option<usize>, Option<usize>)> {
    if cartan.kind() != CartanKind::Finite {
        return Err(Error::UnsupportedCartan {
            c1: cartan.c1(),
            c2: cartan.c2(),
        });
    }
    if !(weight.l1.is_positive() && weight.l2.is_negative()) {
        return Err(Error::PreconditionViolation(format!(
            "classical table rows need l1 > 0 > l2, got {weight}"
        )));
    }
    let wc = classify_weight(cartan, weight)?;
    Ok((wc.highest_index(), wc.lowest_index()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(c1: u32, c2: u32) -> CartanRank2 {
        CartanRank2::new(c1, c2).unwrap()
    }

    #[test]
    fn coefficients() {
        let w = Weight::new(3, -2);
        assert_eq!(h_coeff(&c(2, 2), &w, 1), Int::from(-2));
        assert_eq!(h_coeff(&c(2, 2), &w, 2), Int::from(-1));
        assert_eq!(h_coeff(&c(2, 3), &Weight::new(7, 0), 1), Int::from(0));
        assert_eq!(l_coeff(&c(2, 2), &Weight::new(1, -2), 1), Int::from(1));
    }

    #[test]
    fn vectors() {
        let cart = c(2, 2);
        let h = highest_vector(&cart, &Weight::new(3, -2)).unwrap().unwrap();
        assert_eq!(h.to_string(), "{-1: -2, -2: -1}");
        assert!(highest_vector(&cart, &Weight::new(2, 1)).unwrap().unwrap().is_zero());
        assert_eq!(highest_vector(&cart, &Weight::new(1, -1)).unwrap(), None);
        let l = lowest_vector(&cart, &Weight::new(1, -2)).unwrap().unwrap();
        assert_eq!(l.to_string(), "{1: 1}");
        assert!(lowest_vector(&cart, &Weight::new(-1, -1)).unwrap().unwrap().is_zero());
        assert_eq!(lowest_vector(&c(2, 3), &Weight::new(1, -1)).unwrap(), None);
    }

    #[test]
    fn reports() {
        let r = verify_extremal(&c(2, 2), &Weight::new(3, -2), 100).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.detail.starts_with("3 steps")));
        let r = verify_extremal(&c(2, 3), &Weight::new(2, 1), 10).unwrap();
        assert!(r.all_passed(), "{r}");
        let r = verify_extremal(&c(1, 5), &Weight::new(13, -8), 10_000).unwrap();
        assert!(r.vector.is_some());
        assert!(r.all_passed(), "{r}");
        let r = verify_extremal(&c(2, 2), &Weight::new(1, -2), 100).unwrap();
        assert_eq!(r.side, Side::Lowest);
        assert!(r.all_passed(), "{r}");
        let r = verify_extremal(&c(2, 2), &Weight::new(1, -1), 500).unwrap();
        assert!(r.vector.is_none() && r.all_passed(), "{r}");
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_table(&c(2, 1), &Weight::new(2, -1)).unwrap(), (Some(1), Some(2)));
        assert_eq!(classical_table(&c(1, 3), &Weight::new(1, -2)).unwrap(), (Some(3), Some(2)));
        assert_eq!(classical_table(&c(1, 1), &Weight::new(5, -1)).unwrap(), (Some(1), Some(2)));
        assert!(matches!(
            classical_table(&c(2, 2), &Weight::new(2, -1)),
            Err(Error::UnsupportedCartan { .. })
        ));
    }
}
