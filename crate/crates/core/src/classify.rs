//! Where a weight sits relative to the ratio ladders and the thresholds `alpha`, `beta`.
//!
//! Everything is decided on integers: ladder fractions by cross-multiplication, the
//! irrational thresholds by the sign of a quadratic form in `(l1, l2)`.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::cartan::{CartanKind, CartanRank2, Weight};
use crate::error::{Error, Result};
use crate::Int;

/// Default cap on ladder terms inspected by [`classify_weight`].
pub const DEFAULT_SCAN_LIMIT: usize = 10_000_000;

/// A nonnegative fraction; `den == 0` stands for `+inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub num: Int,
    pub den: Int,
}

impl Ratio {
    pub fn new(num: Int, den: Int) -> Self {
        Ratio { num, den }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// Exact comparison, no reduction; infinity equals itself.
    pub fn cmp_exact(&self, other: &Ratio) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ThresholdPosition {
    AboveAlpha,
    EqualAlphaBeta,
    Between,
    BelowBeta,
    EqualBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "regime", content = "k")]
pub enum Regime {
    TrivialDominant,
    TrivialAntidominant,
    HighestOdd(usize),
    HighestEven(usize),
    LowestOdd(usize),
    LowestEven(usize),
    AffineLevelZero,
    HyperbolicGapNeither,
}

impl Regime {
    pub fn k(&self) -> Option<usize> {
        match *self {
            Regime::HighestOdd(k)
            | Regime::HighestEven(k)
            | Regime::LowestOdd(k)
            | Regime::LowestEven(k) => Some(k),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Regime::TrivialDominant => "TrivialDominant",
            Regime::TrivialAntidominant => "TrivialAntidominant",
            Regime::HighestOdd(_) => "HighestOdd",
            Regime::HighestEven(_) => "HighestEven",
            Regime::LowestOdd(_) => "LowestOdd",
            Regime::LowestEven(_) => "LowestEven",
            Regime::AffineLevelZero => "AffineLevelZero",
            Regime::HyperbolicGapNeither => "HyperbolicGapNeither",
        }
    }

    /// Length `n` of the highest vector `H_{-n}`; 0 for the zero vector.
    pub fn highest_index(&self) -> Option<usize> {
        match *self {
            Regime::TrivialDominant => Some(0),
            Regime::HighestOdd(k) => Some(2 * k - 1),
            Regime::HighestEven(k) => Some(2 * k),
            _ => None,
        }
    }

    /// Length `n` of the lowest vector `L_n`; 0 for the zero vector.
    pub fn lowest_index(&self) -> Option<usize> {
        match *self {
            Regime::TrivialAntidominant => Some(0),
            Regime::LowestOdd(k) => Some(2 * k - 1),
            Regime::LowestEven(k) => Some(2 * k),
            _ => None,
        }
    }

    pub fn is_highest(&self) -> bool {
        matches!(self, Regime::HighestOdd(_) | Regime::HighestEven(_))
    }

    pub fn is_lowest(&self) -> bool {
        matches!(self, Regime::LowestOdd(_) | Regime::LowestEven(_))
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{} k={}", self.name(), k),
            None => f.write_str(self.name()),
        }
    }
}

/// The ladder interval that contains `r = l1 / (-l2)`.
///
/// Highest regimes read `upper > ratio >= lower`, lowest regimes `lower < ratio <= upper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub lower: Ratio,
    pub ratio: Ratio,
    pub upper: Ratio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Placement {
    #[serde(flatten)]
    pub regime: Regime,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Bracket>,
}

impl Placement {
    fn bare(regime: Regime) -> Self {
        Placement {
            regime,
            bracket: None,
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.regime)?;
        if let Some(b) = &self.bracket {
            if self.regime.is_highest() {
                write!(f, "; {} > {} ≥ {}", b.upper, b.ratio, b.lower)?;
            } else {
                write!(f, "; {} < {} ≤ {}", b.lower, b.ratio, b.upper)?;
            }
        }
        Ok(())
    }
}

/// For finite Cartan data both a highest and a lowest vector exist; the lowest one is
/// carried in `companion`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightClassification {
    #[serde(flatten)]
    pub primary: Placement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub companion: Option<Placement>,
}

impl WeightClassification {
    pub fn regime(&self) -> Regime {
        self.primary.regime
    }

    pub fn highest_index(&self) -> Option<usize> {
        self.primary.regime.highest_index()
    }

    pub fn lowest_index(&self) -> Option<usize> {
        self.primary
            .regime
            .lowest_index()
            .or_else(|| self.companion.as_ref().and_then(|c| c.regime.lowest_index()))
    }

    /// The regime describing the lowest vector, wherever it is stored.
    pub fn lowest_regime(&self) -> Option<Regime> {
        if self.primary.regime.lowest_index().is_some() {
            Some(self.primary.regime)
        } else {
            self.companion.as_ref().map(|c| c.regime)
        }
    }
}

impl fmt::Display for WeightClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.primary)?;
        if let Some(c) = &self.companion {
            write!(f, "\n{c}")?;
        }
        Ok(())
    }
}

/// Sign test of `r` against the roots of `c2 t^2 - c1 c2 t + c1`.
pub fn compare_with_alpha_beta(cartan: &CartanRank2, weight: &Weight) -> Result<ThresholdPosition> {
    if cartan.product() < 4 {
        return Err(Error::PreconditionViolation(format!(
            "threshold comparison needs c1*c2 >= 4, got {cartan}"
        )));
    }
    if !(weight.l1.is_positive() && weight.l2.is_negative()) {
        return Err(Error::PreconditionViolation(format!(
            "threshold comparison needs l1 > 0 > l2, got {weight}"
        )));
    }
    let (c1, c2) = (Int::from(cartan.c1()), Int::from(cartan.c2()));
    let (l1, l2) = (&weight.l1, &weight.l2);
    let d = &c2 * l1 * l1 + &c1 * &c2 * l1 * l2 + &c1 * l2 * l2;
    Ok(match d.sign() {
        num_bigint::Sign::Minus => ThresholdPosition::Between,
        num_bigint::Sign::NoSign => {
            if cartan.kind() == CartanKind::Affine {
                ThresholdPosition::EqualAlphaBeta
            } else {
                ThresholdPosition::EqualBoundary
            }
        }
        num_bigint::Sign::Plus => {
            // r > c1/2  <=>  2 l1 > -c1 l2
            if Int::from(2) * l1 > -(&c1 * l2) {
                ThresholdPosition::AboveAlpha
            } else {
                ThresholdPosition::BelowBeta
            }
        }
    })
}

/// `<c, lambda>` for the canonical central element of affine data, `None` otherwise.
pub fn affine_level(cartan: &CartanRank2, weight: &Weight) -> Option<Int> {
    if cartan.kind() != CartanKind::Affine {
        return None;
    }
    // c = a1 h1 + a2 h2 with c2 a2 = 2 a1, a1 = c2 / g, a2 = 2 / g, g = gcd(c2, 2)
    let c2 = Int::from(cartan.c2());
    let two = Int::from(2);
    let g = c2.gcd(&two);
    Some((&c2 / &g) * &weight.l1 + (&two / &g) * &weight.l2)
}

/// Running window on both sequences: holds `(s_n, s_{n+1})` for `s = a` and `s = a'`.
struct SeqWalk {
    c1: Int,
    c2: Int,
    n: usize,
    a: (Int, Int),
    ap: (Int, Int),
}

impl SeqWalk {
    fn new(cartan: &CartanRank2) -> Self {
        SeqWalk {
            c1: Int::from(cartan.c1()),
            c2: Int::from(cartan.c2()),
            n: 0,
            a: (Int::zero(), Int::one()),
            ap: (Int::zero(), Int::one()),
        }
    }

    fn step(&mut self) {
        let m = self.n + 2;
        let (ca, cap) = if m.is_multiple_of(2) {
            (&self.c1, &self.c2)
        } else {
            (&self.c2, &self.c1)
        };
        let na = ca * &self.a.1 - &self.a.0;
        let nap = cap * &self.ap.1 - &self.ap.0;
        self.a.0 = std::mem::replace(&mut self.a.1, na);
        self.ap.0 = std::mem::replace(&mut self.ap.1, nap);
        self.n += 1;
    }

    fn pair(&self, primed: bool) -> &(Int, Int) {
        if primed {
            &self.ap
        } else {
            &self.a
        }
    }

    /// Term `n` of the decreasing ladder `a_2/a_1 > a'_3/a'_2 > a_4/a_3 > ...`; term 0 is `a'_1/a'_0`.
    fn highest_term(&self) -> Ratio {
        let (lo, hi) = self.pair(self.n.is_multiple_of(2));
        Ratio::new(hi.clone(), lo.clone())
    }

    /// Term `n` of the increasing ladder `a'_1/a'_2 < a_2/a_3 < ...`; term 0 is `a_0/a_1`.
    fn lowest_term(&self) -> Ratio {
        let (lo, hi) = self.pair(self.n % 2 == 1);
        Ratio::new(lo.clone(), hi.clone())
    }
}

fn highest_regime(n: usize) -> Regime {
    if n % 2 == 1 {
        Regime::HighestOdd(n.div_ceil(2))
    } else {
        Regime::HighestEven(n / 2)
    }
}

fn lowest_regime(n: usize) -> Regime {
    if n % 2 == 1 {
        Regime::LowestOdd(n.div_ceil(2))
    } else {
        Regime::LowestEven(n / 2)
    }
}

/// First `n >= 1` with `r >= t_n` on the decreasing ladder.
fn scan_highest(cartan: &CartanRank2, r: &Ratio, limit: usize) -> Result<Placement> {
    let mut walk = SeqWalk::new(cartan);
    let mut upper = walk.highest_term();
    loop {
        walk.step();
        if walk.n > limit {
            return Err(Error::ScanOverflow(limit));
        }
        let term = walk.highest_term();
        if r.cmp_exact(&term) != Ordering::Less {
            return Ok(Placement {
                regime: highest_regime(walk.n),
                bracket: Some(Bracket {
                    lower: term,
                    ratio: r.clone(),
                    upper,
                }),
            });
        }
        upper = term;
    }
}

/// First `n >= 1` with `r <= u_n` on the increasing ladder.
fn scan_lowest(cartan: &CartanRank2, r: &Ratio, limit: usize) -> Result<Placement> {
    let mut walk = SeqWalk::new(cartan);
    let mut lower = walk.lowest_term();
    loop {
        walk.step();
        if walk.n > limit {
            return Err(Error::ScanOverflow(limit));
        }
        let term = walk.lowest_term();
        if r.cmp_exact(&term) != Ordering::Greater {
            return Ok(Placement {
                regime: lowest_regime(walk.n),
                bracket: Some(Bracket {
                    lower,
                    ratio: r.clone(),
                    upper: term,
                }),
            });
        }
        lower = term;
    }
}

pub fn classify_weight(cartan: &CartanRank2, weight: &Weight) -> Result<WeightClassification> {
    classify_weight_with_limit(cartan, weight, DEFAULT_SCAN_LIMIT)
}

pub fn classify_weight_with_limit(
    cartan: &CartanRank2,
    weight: &Weight,
    limit: usize,
) -> Result<WeightClassification> {
    let only = |regime| WeightClassification {
        primary: Placement::bare(regime),
        companion: None,
    };
    if weight.is_dominant() {
        return Ok(only(Regime::TrivialDominant));
    }
    if weight.is_antidominant() {
        return Ok(only(Regime::TrivialAntidominant));
    }
    if weight.l1.is_negative() {
        return Err(Error::PreconditionViolation(format!(
            "mirrored sign pattern l1 < 0 < l2 is not covered, got {weight}"
        )));
    }
    let r = Ratio::new(weight.l1.clone(), -weight.l2.clone());
    if cartan.kind() == CartanKind::Finite {
        let primary = scan_highest(cartan, &r, limit)?;
        let companion = scan_lowest(cartan, &r, limit)?;
        return Ok(WeightClassification {
            primary,
            companion: Some(companion),
        });
    }
    let primary = match compare_with_alpha_beta(cartan, weight)? {
        ThresholdPosition::AboveAlpha => scan_highest(cartan, &r, limit)?,
        ThresholdPosition::BelowBeta => scan_lowest(cartan, &r, limit)?,
        ThresholdPosition::EqualAlphaBeta => Placement::bare(Regime::AffineLevelZero),
        ThresholdPosition::Between | ThresholdPosition::EqualBoundary => {
            Placement::bare(Regime::HyperbolicGapNeither)
        }
    };
    Ok(WeightClassification {
        primary,
        companion: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::Sequences;

    fn c(c1: u32, c2: u32) -> CartanRank2 {
        CartanRank2::new(c1, c2).unwrap()
    }

    fn w(l1: i64, l2: i64) -> Weight {
        Weight::new(l1, l2)
    }

    // sign of r - p/q for r = l1/m2, with q == 0 read as +inf
    fn cmp_r(l1: i64, m2: i64, p: &Int, q: &Int) -> Ordering {
        if q.is_zero() {
            return Ordering::Less;
        }
        (Int::from(l1) * q).cmp(&(Int::from(m2) * p))
    }

    // every interval of the four regime definitions that contains r
    fn oracle(cartan: &CartanRank2, l1: i64, l2: i64) -> Vec<Regime> {
        use Ordering::*;
        let s = Sequences::new(cartan, 200);
        let m2 = -l2;
        let mut hits = Vec::new();
        for k in 1..90usize {
            let r = |p: &Int, q: &Int| cmp_r(l1, m2, p, q);
            if r(s.a_prime(2 * k - 1), s.a_prime(2 * k - 2)) == Less
                && r(s.a(2 * k), s.a(2 * k - 1)) != Less
            {
                hits.push(Regime::HighestOdd(k));
            }
            if r(s.a(2 * k), s.a(2 * k - 1)) == Less
                && r(s.a_prime(2 * k + 1), s.a_prime(2 * k)) != Less
            {
                hits.push(Regime::HighestEven(k));
            }
            if r(s.a(2 * k - 2), s.a(2 * k - 1)) == Greater
                && r(s.a_prime(2 * k - 1), s.a_prime(2 * k)) != Greater
            {
                hits.push(Regime::LowestOdd(k));
            }
            if r(s.a_prime(2 * k - 1), s.a_prime(2 * k)) == Greater
                && r(s.a(2 * k), s.a(2 * k + 1)) != Greater
            {
                hits.push(Regime::LowestEven(k));
            }
        }
        hits
    }

    #[test]
    fn scan_agrees_with_interval_definitions() {
        for (c1, c2) in [(2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (3, 3), (1, 5), (5, 1)] {
            let cartan = c(c1, c2);
            for l1 in 1..=30 {
                for m2 in 1..=30 {
                    let got = classify_weight(&cartan, &w(l1, -m2)).unwrap().regime();
                    let hits = oracle(&cartan, l1, -m2);
                    if got.k().is_some() {
                        assert_eq!(hits, vec![got], "{cartan} ({l1}, {})", -m2);
                    } else {
                        assert!(hits.is_empty(), "{cartan} ({l1}, {}) {hits:?}", -m2);
                    }
                }
            }
        }
    }

    #[test]
    fn literal_first_lowest_branch_is_empty() {
        // a_2k/a_{2k-1} < r <= a'_{2k-1}/a'_{2k} needs a_2k a'_2k < a_{2k-1} a'_{2k-1}
        for (c1, c2) in [(2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (3, 3), (1, 5)] {
            let s = Sequences::new(&c(c1, c2), 80);
            for k in 1..40 {
                assert!(s.a(2 * k) * s.a_prime(2 * k) >= s.a(2 * k - 1) * s.a_prime(2 * k - 1));
            }
        }
    }

    #[test]
    fn position_matches_float_thresholds() {
        for (c1, c2) in [(2, 3), (1, 5), (3, 3), (1, 7)] {
            let (f1, f2) = (c1 as f64, c2 as f64);
            let disc = (f1 * f1 * f2 * f2 - 4.0 * f1 * f2).sqrt();
            let alpha = (f1 * f2 + disc) / (2.0 * f2);
            let beta = (f1 * f2 - disc) / (2.0 * f2);
            for l1 in 1..40i64 {
                for m2 in 1..40i64 {
                    let r = l1 as f64 / m2 as f64;
                    if (r - alpha).abs() < 1e-9 || (r - beta).abs() < 1e-9 {
                        continue;
                    }
                    let want = if r > alpha {
                        ThresholdPosition::AboveAlpha
                    } else if r < beta {
                        ThresholdPosition::BelowBeta
                    } else {
                        ThresholdPosition::Between
                    };
                    assert_eq!(compare_with_alpha_beta(&c(c1, c2), &w(l1, -m2)).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn affine_levels() {
        assert_eq!(affine_level(&c(2, 2), &w(3, -2)), Some(Int::from(1)));
        assert_eq!(affine_level(&c(1, 4), &w(1, -2)), Some(Int::from(0)));
        assert_eq!(affine_level(&c(4, 1), &w(2, -1)), Some(Int::from(0)));
        assert_eq!(affine_level(&c(2, 3), &w(2, -1)), None);
    }

    #[test]
    fn finite_type_has_both_sides() {
        let a2 = classify_weight(&c(1, 1), &w(1, -1)).unwrap();
        assert_eq!(a2.highest_index(), Some(1));
        assert_eq!(a2.lowest_index(), Some(1));
        let b2 = classify_weight(&c(2, 1), &w(3, -1)).unwrap();
        assert_eq!((b2.highest_index(), b2.lowest_index()), (Some(1), Some(3)));
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            compare_with_alpha_beta(&c(2, 2), &w(3, -2)).unwrap(),
            ThresholdPosition::AboveAlpha
        );
        assert_eq!(
            compare_with_alpha_beta(&c(2, 2), &w(1, -1)).unwrap(),
            ThresholdPosition::EqualAlphaBeta
        );
        assert_eq!(
            compare_with_alpha_beta(&c(2, 3), &w(1, -1)).unwrap(),
            ThresholdPosition::Between
        );
        assert!(compare_with_alpha_beta(&c(1, 1), &w(1, -1)).is_err());
        assert!(compare_with_alpha_beta(&c(2, 2), &w(-1, 1)).is_err());

        let hw = classify_weight(&c(2, 2), &w(3, -2)).unwrap();
        assert_eq!(hw.regime(), Regime::HighestEven(1));
        assert_eq!(hw.to_string(), "HighestEven k=1; 2/1 > 3/2 ≥ 3/2");
        let lw = classify_weight(&c(2, 2), &w(1, -2)).unwrap();
        assert_eq!(lw.regime(), Regime::LowestOdd(1));
        assert_eq!(lw.to_string(), "LowestOdd k=1; 0/1 < 1/2 ≤ 1/2");
        assert_eq!(
            classify_weight(&c(2, 2), &w(1, -1)).unwrap().regime(),
            Regime::AffineLevelZero
        );
        assert_eq!(
            classify_weight(&c(2, 3), &w(1, -1)).unwrap().regime(),
            Regime::HyperbolicGapNeither
        );
        assert_eq!(classify_weight(&c(2, 3), &w(2, 1)).unwrap().regime(), Regime::TrivialDominant);
        assert_eq!(classify_weight(&c(2, 3), &w(0, 0)).unwrap().regime(), Regime::TrivialDominant);
        assert_eq!(
            classify_weight(&c(2, 3), &w(-1, 0)).unwrap().regime(),
            Regime::TrivialAntidominant
        );
        assert!(matches!(
            classify_weight(&c(2, 3), &w(-1, 2)),
            Err(Error::PreconditionViolation(_))
        ));
    }
}
