//! Desk-scale property suites shared by the `verify` command and the acceptance tests.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cartan::{CartanKind, CartanRank2, Weight};
use crate::classify::{affine_level, classify_weight, Regime, ThresholdPosition};
use crate::crystal::{e_tilde, epsilon, f_tilde, phi, wt};
use crate::enumerate::{enumerate_box, BoxQuery, DEFAULT_BOX_BUDGET};
use crate::error::Result;
use crate::extremal::{classical_table, h_coeff, l_coeff, verify_extremal_side, Side};
use crate::families::{
    component_family, phi_chain_closed, phi_chain_iterated, regime_generators, table_rows, xi_family,
    RegimeKind,
};
use crate::graph::{bfs_component_with, BfsOptions, Direction};
use crate::polyhedral::{check_pn_assumptions, xi_closure, ClosureOptions};
use crate::seq::{chebyshev_run, Sequences};
use crate::vector::LambdaVector;
use crate::Int;

/// Cartan data of the sequence checks.
pub const SEQUENCE_GRID: [(u32, u32); 7] = [(2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (3, 3), (1, 5)];
/// Affine and hyperbolic data of the extremal checks.
pub const EXTREMAL_GRID: [(u32, u32); 5] = [(2, 2), (1, 4), (2, 3), (1, 5), (3, 3)];
pub const SEQUENCE_LEN: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Sequences,
    Crystal,
    Polyhedral,
    Extremal,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Sequences,
        Suite::Crystal,
        Suite::Polyhedral,
        Suite::Extremal,
        Suite::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sequences => "sequences",
            Suite::Crystal => "crystal",
            Suite::Polyhedral => "polyhedral",
            Suite::Extremal => "extremal",
            Suite::Appendix => "appendix",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(suite: Suite, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}/{}: {}", self.suite.name(), self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random vectors for the crystal axioms.
    pub random_vectors: usize,
    /// Random `(c1, c2, lambda)` points for the threshold agreement.
    pub grid_points: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 20_240_601,
            random_vectors: 10_000,
            grid_points: 200,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<Outcome> {
    match suite {
        Suite::Sequences => sequences_suite(opts),
        Suite::Crystal => crystal_suite(opts),
        Suite::Polyhedral => polyhedral_suite(),
        Suite::Extremal => extremal_suite(),
        Suite::Appendix => appendix_suite(),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<Outcome> {
    Suite::ALL.into_iter().flat_map(|s| run_suite(s, opts)).collect()
}

pub fn summary_json(outcomes: &[Outcome]) -> Value {
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    json!({
        "passed": failed == 0,
        "total": outcomes.len(),
        "failed": failed,
        "checks": outcomes.iter().map(Outcome::to_json).collect::<Vec<_>>(),
    })
}

fn cartan(c: (u32, u32)) -> CartanRank2 {
    CartanRank2::new(c.0, c.1).expect("grid entries are positive")
}

fn first_failure<I: IntoIterator<Item = (String, bool)>>(checks: I) -> (bool, String) {
    let mut count = 0usize;
    for (what, ok) in checks {
        count += 1;
        if !ok {
            return (false, format!("fails at {what}"));
        }
    }
    (true, format!("{count} cases"))
}

// ---------------------------------------------------------------- sequences

/// Both sequences straight from their alternating three-term recursions.
pub fn recursion_oracle(c: &CartanRank2, len: usize) -> (Vec<Int>, Vec<Int>) {
    let (c1, c2) = (Int::from(c.c1()), Int::from(c.c2()));
    let mut a = vec![Int::zero(), Int::one()];
    let mut ap = vec![Int::zero(), Int::one()];
    for m in 2..=len {
        let (x, y) = if m % 2 == 0 { (&c1, &c2) } else { (&c2, &c1) };
        a.push(x * &a[m - 1] - &a[m - 2]);
        ap.push(y * &ap[m - 1] - &ap[m - 2]);
    }
    (a, ap)
}

/// `p/q > r/s` for positive denominators.
fn frac_gt(p: &Int, q: &Int, r: &Int, s: &Int) -> bool {
    p * s > r * q
}

fn sequences_suite(opts: &VerifyOptions) -> Vec<Outcome> {
    let suite = Suite::Sequences;
    let mut out = Vec::new();
    let n = SEQUENCE_LEN;
    for cc in SEQUENCE_GRID {
        let c = cartan(cc);
        let tag = format!("({},{})", cc.0, cc.1);
        let seq = Sequences::new(&c, n + 2);
        let a = |l: usize| seq.a(l).clone();
        let ap = |l: usize| seq.a_prime(l).clone();
        let (c1, c2) = (Int::from(cc.0), Int::from(cc.1));

        let (ra, rap) = recursion_oracle(&c, n + 2);
        let (ok, detail) = first_failure((0..=n + 2).map(|l| (format!("l={l}"), a(l) == ra[l] && ap(l) == rap[l])));
        out.push(Outcome::new(suite, format!("definition_matches_recursion {tag}"), ok, detail));

        let (ok, detail) = first_failure((1..=(n - 2) / 2).map(|k| {
            let ok = a(2 * k + 2) == &c1 * a(2 * k + 1) - a(2 * k)
                && a(2 * k + 1) == &c2 * a(2 * k) - a(2 * k - 1)
                && ap(2 * k + 2) == &c2 * a(2 * k + 1) - ap(2 * k)
                && a(2 * k + 1) == &c1 * ap(2 * k) - a(2 * k - 1);
            (format!("k={k}"), ok)
        }));
        out.push(Outcome::new(suite, format!("four_recursions {tag}"), ok, detail));

        let (ok, detail) = first_failure((0..=n - 2).map(|l| {
            let lhs = a(l + 1) * ap(l + 1);
            let ok = &lhs - a(l + 2) * ap(l) == Int::one() && lhs - ap(l + 2) * a(l) == Int::one();
            (format!("l={l}"), ok)
        }));
        out.push(Outcome::new(suite, format!("determinant_identities {tag}"), ok, detail));

        if c.kind() != CartanKind::Finite {
            // falling ladder a2/a1 > a'3/a'2 > a4/a3 > ..., rising a'1/a'2 < a2/a3 < ...
            let falling: Vec<(Int, Int)> = (1..n)
                .map(|l| if l % 2 == 1 { (a(l + 1), a(l)) } else { (ap(l + 1), ap(l)) })
                .collect();
            let rising: Vec<(Int, Int)> = (1..n)
                .map(|l| if l % 2 == 1 { (ap(l), ap(l + 1)) } else { (a(l), a(l + 1)) })
                .collect();
            let monotone = falling.windows(2).all(|w| frac_gt(&w[0].0, &w[0].1, &w[1].0, &w[1].1))
                && rising.windows(2).all(|w| frac_gt(&w[1].0, &w[1].1, &w[0].0, &w[0].1));
            // every falling term lies above alpha, every rising term below beta
            let quad = |p: &Int, q: &Int| &c2 * p * p - &c1 * &c2 * p * q + &c1 * q * q;
            let bracketed = falling
                .iter()
                .all(|(p, q)| quad(p, q).is_positive() && Int::from(2) * p > &c1 * q)
                && rising
                    .iter()
                    .all(|(p, q)| quad(p, q).is_positive() && Int::from(2) * p < &c1 * q);
            out.push(Outcome::new(
                suite,
                format!("ladder_monotone {tag}"),
                monotone && bracketed,
                format!("{} terms per ladder, monotone {monotone}, outside [beta, alpha] {bracketed}", n - 1),
            ));
        }

        let x = c.chebyshev_arg();
        let p = chebyshev_run(n + 1, &x);
        let pk = |k: usize| &p[k + 1];
        let pm = |k: usize| if k == 0 { Int::zero() } else { pk(k - 1).clone() };
        let xp2 = &x + Int::from(2);
        let (ok, detail) = first_failure((0..=n).map(|k| {
            let id1 = &xp2 * pk(k) * pk(k) - (pk(k + 1) + pk(k)) * (pk(k) + pm(k));
            let s = pk(k) + pm(k);
            let id2 = &s * &s - &xp2 * pk(k) * pm(k);
            (format!("k={k}"), id1.is_one() && id2.is_one())
        }));
        out.push(Outcome::new(suite, format!("chebyshev_identities {tag}"), ok, detail));

        // (sum P_k z^k) (1 - X z + z^2) = 1 up to degree 30
        let deg = 30;
        let (ok, detail) = first_failure((0..=deg).map(|d| {
            let mut coeff = pk(d).clone();
            if d >= 1 {
                coeff -= &x * pk(d - 1);
            }
            if d >= 2 {
                coeff += pk(d - 2);
            }
            let want = if d == 0 { Int::one() } else { Int::zero() };
            (format!("degree {d}"), coeff == want)
        }));
        out.push(Outcome::new(suite, format!("generating_function {tag}"), ok, detail));

        let pr = Int::from(cc.0) * Int::from(cc.1);
        let known = [
            (3, &pr - 1u32),
            (5, (&pr - 1u32) * (&pr - 2u32) - 1u32),
            // the product form of the seventh term is one too large
            (7, &pr * (&pr - 2u32) * (&pr - 3u32) - 1u32),
        ];
        let ok = known.iter().all(|(l, v)| a(*l) == *v && ap(*l) == *v)
            && a(4) == &c1 * (&pr - 2u32)
            && ap(4) == &c2 * (&pr - 2u32)
            && a(6) == &c1 * (&pr - 1u32) * (&pr - 3u32)
            && ap(6) == &c2 * (&pr - 1u32) * (&pr - 3u32);
        out.push(Outcome::new(
            suite,
            format!("known_values {tag}"),
            ok,
            format!("a3={} a5={} a7={}", a(3), a(5), a(7)),
        ));
    }
    out.push(threshold_grid(opts));
    out
}

/// Random `(c1, c2, lambda)` with `c1 c2 >= 4`: the regime agrees with the sign of the
/// threshold quadratic, and on affine data the boundary is exactly level zero.
fn threshold_grid(opts: &VerifyOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = Vec::new();
    let mut count = 0;
    while count < opts.grid_points {
        let c1: u32 = rng.gen_range(1..=6);
        let c2: u32 = rng.gen_range(1..=6);
        if c1 * c2 < 4 {
            continue;
        }
        count += 1;
        let c = cartan((c1, c2));
        let l1: i64 = rng.gen_range(1..=60);
        let l2: i64 = -rng.gen_range(1..=60);
        let w = Weight::new(l1, l2);
        let (fc1, fc2) = (i128::from(c1), i128::from(c2));
        let (x, y) = (i128::from(l1), i128::from(l2));
        let d = fc2 * x * x + fc1 * fc2 * x * y + fc1 * y * y;
        let above = 2 * x > -fc1 * y;
        let wc = match classify_weight(&c, &w) {
            Ok(wc) => wc,
            Err(e) => {
                failures.push(format!("({c1},{c2},{l1},{l2}): {e}"));
                continue;
            }
        };
        let r = wc.regime();
        let agrees = if d > 0 && above {
            r.is_highest()
        } else if d > 0 {
            r.is_lowest()
        } else {
            !r.is_highest() && !r.is_lowest()
        };
        let level_ok = match affine_level(&c, &w) {
            Some(level) => {
                let pos = crate::classify::compare_with_alpha_beta(&c, &w);
                (level.is_zero()) == (pos == Ok(ThresholdPosition::EqualAlphaBeta))
                    && (level.is_zero()) == (r == Regime::AffineLevelZero)
            }
            None => true,
        };
        if !(agrees && level_ok) {
            failures.push(format!("({c1},{c2},{l1},{l2}) -> {r}"));
        }
    }
    Outcome::new(
        Suite::Sequences,
        "threshold_agreement",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} random points")
        } else {
            format!("{} mismatches, first {}", failures.len(), failures[0])
        },
    )
}

// ---------------------------------------------------------------- crystal

/// A random vector with support at most 8 inside `|k| <= 8`, entries in `[-5, 5]` and
/// correct half-line signs.
pub fn random_vector(rng: &mut ChaCha8Rng) -> LambdaVector {
    let (c1, c2) = EXTREMAL_GRID
        .iter()
        .chain(&[(1, 1), (2, 1), (1, 3)])
        .copied()
        .nth(rng.gen_range(0..8))
        .expect("index in range");
    let c = cartan((c1, c2));
    let w = Weight::new(rng.gen_range(-5i64..=5), rng.gen_range(-5i64..=5));
    let support = rng.gen_range(0..=8);
    let entries: Vec<(i64, i64)> = (0..support)
        .map(|_| {
            let mut k = rng.gen_range(-8i64..=7);
            if k >= 0 {
                k += 1;
            }
            let v = rng.gen_range(0i64..=5);
            (k, if k > 0 { v } else { -v })
        })
        .collect();
    let mut x = LambdaVector::zero(c, w);
    for (k, v) in entries {
        let cur = x.get(k);
        x.add(k, &(Int::from(v) - cur));
    }
    x
}

/// Number of times `op` applies before it vanishes, capped.
fn string_length(x: &LambdaVector, i: u8, op: fn(&LambdaVector, u8) -> Option<LambdaVector>, cap: usize) -> Option<usize> {
    let mut cur = x.clone();
    for n in 0..=cap {
        match op(&cur, i) {
            Some(y) => cur = y,
            None => return Some(n),
        }
    }
    None
}

/// The axioms checked on one vector; `Err` names the first one that fails.
pub fn crystal_axioms(x: &LambdaVector) -> std::result::Result<(), String> {
    let w = wt(x);
    let c = x.cartan();
    for i in [1u8, 2] {
        let pairing = if i == 1 { &w.0 } else { &w.1 };
        let eps = epsilon(x, i);
        let ph = phi(x, i);
        if ph != &eps + pairing {
            return Err(format!("phi_{i} != eps_{i} + <h_{i}, wt> at {x}"));
        }
        if eps.is_negative() || ph.is_negative() {
            return Err(format!("negative string length for color {i} at {x}"));
        }
        let up = e_tilde(x, i);
        let down = f_tilde(x, i);
        if up.is_none() != eps.is_zero() {
            return Err(format!("e_{i} nullity disagrees with eps_{i} = {eps} at {x}"));
        }
        if down.is_none() != ph.is_zero() {
            return Err(format!("f_{i} nullity disagrees with phi_{i} = {ph} at {x}"));
        }
        let (r1, r2) = c.simple_root(i);
        if let Some(y) = &up {
            if f_tilde(y, i).as_ref() != Some(x) {
                return Err(format!("f_{i} e_{i} x != x at {x}"));
            }
            let wy = wt(y);
            if wy.0 != &w.0 + r1 || wy.1 != &w.1 + r2 {
                return Err(format!("e_{i} does not add alpha_{i} at {x}"));
            }
            if epsilon(y, i) != &eps - 1u32 || phi(y, i) != &ph + 1u32 {
                return Err(format!("e_{i} does not shift the strings at {x}"));
            }
        }
        if let Some(y) = &down {
            if e_tilde(y, i).as_ref() != Some(x) {
                return Err(format!("e_{i} f_{i} x != x at {x}"));
            }
            let wy = wt(y);
            if wy.0 != &w.0 - r1 || wy.1 != &w.1 - r2 {
                return Err(format!("f_{i} does not subtract alpha_{i} at {x}"));
            }
        }
        // the crystal is normal: string lengths are operator counts
        let cap = 200;
        let es = string_length(x, i, e_tilde, cap);
        let fs = string_length(x, i, f_tilde, cap);
        if es.map(Int::from) != Some(eps.clone()) || fs.map(Int::from) != Some(ph.clone()) {
            return Err(format!("string lengths ({es:?}, {fs:?}) != ({eps}, {ph}) at {x}"));
        }
    }
    Ok(())
}

fn crystal_suite(opts: &VerifyOptions) -> Vec<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37_79b9);
    let vectors: Vec<LambdaVector> = (0..opts.random_vectors).map(|_| random_vector(&mut rng)).collect();
    use rayon::prelude::*;
    let failures: Vec<String> = vectors
        .par_iter()
        .filter_map(|x| crystal_axioms(x).err())
        .collect();
    vec![Outcome::new(
        Suite::Crystal,
        "axioms_on_random_vectors",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} vectors", vectors.len())
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    )]
}

// ---------------------------------------------------------------- polyhedral

/// The three instances whose truncated components are compared against the box.
pub const BOX_INSTANCES: [(u32, u32, i64, i64); 3] = [(2, 2, 3, -2), (2, 2, 1, -2), (2, 3, 5, -2)];

/// BFS from the extremal vector to `depth` against the lattice points of the component
/// family with the matching sum bound. Returns `(bfs nodes, box points)`.
pub fn bfs_vs_box(
    c: &CartanRank2,
    w: &Weight,
    depth: usize,
    window: i64,
    closure_depth: usize,
) -> Result<(Vec<LambdaVector>, Vec<LambdaVector>)> {
    let wc = classify_weight(c, w)?;
    let (seed, direction, regime) = match wc.highest_index() {
        Some(n) if n > 0 => (crate::extremal::h_vector(c, w, n), Direction::Lower, wc.regime()),
        _ => {
            let n = wc.lowest_index().ok_or_else(|| {
                crate::error::Error::PreconditionViolation(format!("{w} has no nontrivial extremal vector on {c}"))
            })?;
            let regime = wc.lowest_regime().expect("lowest index implies a lowest regime");
            (crate::extremal::l_vector(c, w, n), Direction::Raise, regime)
        }
    };
    let (kind, k) = RegimeKind::of(regime).ok_or_else(|| {
        crate::error::Error::PreconditionViolation(format!("{regime} has no regime family"))
    })?;
    let opts = ClosureOptions {
        window,
        max_depth: closure_depth,
        ..ClosureOptions::default()
    };
    let family = component_family(c, w, kind, k, &opts)?;
    let graph = bfs_component_with(
        &seed,
        &BfsOptions {
            depth,
            direction,
            ..BfsOptions::default()
        },
    )?;
    let fams = [&family];
    let points = enumerate_box(&BoxQuery {
        seed: &seed,
        families: &fams,
        window,
        direction,
        sum_bound: depth,
        anchored: false,
        budget: DEFAULT_BOX_BUDGET,
    })?;
    Ok((graph.nodes, points))
}

/// A weight realizing `regime` (companion regimes count for the lowest kinds), searched
/// by increasing `l1 - l2`.
pub fn find_weight(c: &CartanRank2, regime: Regime) -> Option<Weight> {
    for s in 2i64..=120 {
        for l1 in 1..s {
            let w = Weight::new(l1, l1 - s);
            let Ok(wc) = classify_weight(c, &w) else { continue };
            let hit = if regime.is_lowest() {
                wc.lowest_regime() == Some(regime)
            } else {
                wc.regime() == regime
            };
            if hit {
                return Some(w);
            }
        }
    }
    None
}

fn polyhedral_suite() -> Vec<Outcome> {
    let suite = Suite::Polyhedral;
    let mut out = Vec::new();
    let kinds = [
        RegimeKind::HighestOdd,
        RegimeKind::HighestEven,
        RegimeKind::LowestOdd,
        RegimeKind::LowestEven,
    ];

    for cc in [(2, 2), (2, 3), (1, 5)] {
        let c = cartan(cc);
        for kind in kinds {
            let (ok, detail) = tables_in_closure(&c, kind, 4, 8);
            out.push(Outcome::new(
                suite,
                format!("table_rows_in_closure {:?} ({},{})", kind, cc.0, cc.1),
                ok,
                detail,
            ));
        }
    }

    for cc in [(2, 2), (2, 3), (1, 5), (3, 3)] {
        let c = cartan(cc);
        let (ok, detail) = first_failure((1..=9).flat_map(|k| (0..=12).map(move |l| (k, l))).map(|(k, l)| {
            (format!("k={k} l={l}"), phi_chain_closed(&c, l, k) == phi_chain_iterated(&c, l, k))
        }));
        out.push(Outcome::new(suite, format!("chain_closed_form ({},{})", cc.0, cc.1), ok, detail));
    }

    for cc in EXTREMAL_GRID {
        let c = cartan(cc);
        let mut bad = Vec::new();
        let mut forms = 0;
        for kind in kinds {
            for k in 1..=2 {
                let Some(w) = find_weight(&c, kind.regime(k)) else {
                    bad.push(format!("no weight for {}", kind.regime(k)));
                    continue;
                };
                let opts = ClosureOptions {
                    window: 10,
                    max_depth: 10,
                    ..ClosureOptions::default()
                };
                match xi_family(&c, &w, kind, k, &opts) {
                    Ok(fam) => {
                        forms += fam.forms.len();
                        if let Some(f) = fam.forms.iter().find(|f| f.const_value(&w).is_negative()) {
                            bad.push(format!("{} at {w}: {f}", kind.regime(k)));
                        }
                    }
                    Err(e) => bad.push(e.to_string()),
                }
            }
        }
        out.push(Outcome::new(
            suite,
            format!("nonnegative_constants ({},{})", cc.0, cc.1),
            bad.is_empty(),
            bad.first().cloned().unwrap_or_else(|| format!("{forms} forms")),
        ));
    }

    for (c1, c2, l1, l2) in BOX_INSTANCES {
        let c = cartan((c1, c2));
        let w = Weight::new(l1, l2);
        let name = format!("bfs_equals_box ({c1},{c2},{l1},{l2})");
        match bfs_vs_box(&c, &w, 6, 12, 12) {
            Ok((bfs, boxed)) => {
                let ok = bfs == boxed;
                out.push(Outcome::new(
                    suite,
                    name,
                    ok,
                    format!("bfs {} nodes, box {} points", bfs.len(), boxed.len()),
                ));
            }
            Err(e) => out.push(Outcome::new(suite, name, false, e.to_string())),
        }
    }

    for cc in SEQUENCE_GRID {
        let c = cartan(cc);
        let res = check_pn_assumptions(&c, 10, 10);
        out.push(Outcome::new(
            suite,
            format!("half_line_signs ({},{})", cc.0, cc.1),
            res == Ok(true),
            format!("{res:?}"),
        ));
    }
    out
}

/// Every table row with `j <= j_max`, `i <= i_max` lies in the closure of the generators
/// for each `k` that gives rows.
pub fn tables_in_closure(c: &CartanRank2, kind: RegimeKind, j_max: usize, i_max: usize) -> (bool, String) {
    let window = (2 * j_max + i_max + 6) as i64;
    let opts = ClosureOptions {
        window,
        max_depth: 2 * j_max + i_max + 6,
        ..ClosureOptions::default()
    };
    let mut rows = 0;
    for k in 1..=j_max {
        let gens = regime_generators(c, kind, k, window);
        let fam = match xi_closure(c, &gens.all(), &opts) {
            Ok(f) => f,
            Err(e) => return (false, format!("k={k}: {e}")),
        };
        for r in table_rows(c, kind, k, j_max, i_max) {
            rows += 1;
            if !fam.contains(&r.form) {
                return (false, format!("k={k} row {} j={} i={}: {} missing", r.row, r.j, r.i, r.form));
            }
        }
    }
    (true, format!("{rows} rows"))
}

// ---------------------------------------------------------------- extremal

/// Five regimes on each affine or hyperbolic Cartan, with a weight and the side to check.
pub fn extremal_instances() -> Vec<(CartanRank2, Weight, Regime, Side)> {
    let regimes = [
        (Regime::HighestOdd(1), Side::Highest),
        (Regime::HighestEven(1), Side::Highest),
        (Regime::LowestOdd(1), Side::Lowest),
        (Regime::LowestEven(1), Side::Lowest),
        (Regime::HighestOdd(2), Side::Highest),
    ];
    let mut out = Vec::new();
    for cc in EXTREMAL_GRID {
        let c = cartan(cc);
        for (r, side) in regimes {
            if let Some(w) = find_weight(&c, r) {
                out.push((c, w, r, side));
            }
        }
    }
    out
}

fn extremal_suite() -> Vec<Outcome> {
    let suite = Suite::Extremal;
    let instances = extremal_instances();
    let mut out = vec![Outcome::new(
        suite,
        "instance_count",
        instances.len() == 25,
        format!("{} instances", instances.len()),
    )];
    for (c, w, r, side) in instances {
        let name = format!("{r} {c} {w}");
        match verify_extremal_side(&c, &w, side, 100_000) {
            Ok(rep) => {
                let failed: Vec<&str> = rep.checks.iter().filter(|x| !x.passed).map(|x| x.name.as_str()).collect();
                let signs = sign_pattern(&c, &w, r);
                let ok = failed.is_empty() && rep.vector.is_some() && signs;
                let detail = match &rep.vector {
                    Some(v) if ok => format!("{v}"),
                    _ => format!("failed {failed:?}, sign pattern {signs}"),
                };
                out.push(Outcome::new(suite, name, ok, detail));
            }
            Err(e) => out.push(Outcome::new(suite, name, false, e.to_string())),
        }
    }
    out
}

/// Inside coefficients negative (highest) or positive (lowest), the next one of the other
/// sign or zero.
fn sign_pattern(c: &CartanRank2, w: &Weight, r: Regime) -> bool {
    if let Some(n) = r.highest_index() {
        (1..=n).all(|j| h_coeff(c, w, j).is_negative()) && !h_coeff(c, w, n + 1).is_negative()
    } else if let Some(n) = r.lowest_index() {
        (1..=n).all(|j| l_coeff(c, w, j).is_positive()) && !l_coeff(c, w, n + 1).is_positive()
    } else {
        false
    }
}

// ---------------------------------------------------------------- appendix

/// `(c1, c2, l1, l2, highest index, lowest index)` for one representative weight per row
/// of the classical tables.
pub const CLASSICAL_ROWS: [(u32, u32, i64, i64, usize, usize); 17] = [
    // A2
    (1, 1, 2, -1, 1, 2),
    (1, 1, 1, -1, 1, 1),
    (1, 1, 1, -2, 2, 1),
    // B2
    (2, 1, 3, -1, 1, 3),
    (2, 1, 2, -1, 1, 2),
    (2, 1, 3, -2, 2, 2),
    (2, 1, 1, -1, 2, 1),
    (2, 1, 1, -2, 3, 1),
    // G2
    (1, 3, 2, -1, 1, 5),
    (1, 3, 1, -1, 1, 4),
    (1, 3, 5, -6, 2, 4),
    (1, 3, 2, -3, 2, 3),
    (1, 3, 3, -5, 3, 3),
    (1, 3, 1, -2, 3, 2),
    (1, 3, 2, -5, 4, 2),
    (1, 3, 1, -3, 4, 1),
    (1, 3, 1, -4, 5, 1),
];

fn appendix_suite() -> Vec<Outcome> {
    CLASSICAL_ROWS
        .iter()
        .map(|&(c1, c2, l1, l2, h, l)| {
            let c = cartan((c1, c2));
            let w = Weight::new(l1, l2);
            let got = classical_table(&c, &w);
            let ok = got == Ok((Some(h), Some(l)));
            Outcome::new(
                Suite::Appendix,
                format!("{c} lambda=({l1},{l2})"),
                ok,
                match got {
                    Ok((gh, gl)) => format!("H_-{} L_{}, expected H_-{h} L_{l}", fmt_index(gh), fmt_index(gl)),
                    Err(e) => e.to_string(),
                },
            )
        })
        .collect()
}

fn fmt_index(n: Option<usize>) -> String {
    n.map_or_else(|| "none".to_string(), |n| n.to_string())
}
