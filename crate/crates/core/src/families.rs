//! Regime-specific inequality families and their closed forms.
//!
//! Each extremal regime adds generators pinned to the extremal vector: `x_-m - h_-m` for the
//! highest regimes, `-x_m + l_m` for the lowest ones, followed by plain coordinate forms
//! further out. Closing them under the `S_k` operators yields chains whose members have the
//! closed forms listed by [`table_rows`].

use crate::cartan::{CartanRank2, Weight};
use crate::classify::{classify_weight, Regime};
use crate::error::{Error, Result};
use crate::form::LinearForm;
use crate::polyhedral::{
    coordinate_generators, s_bar, xi_closure, ClosureOptions, FamilyName, FormFamily,
};
use crate::seq::Sequences;
use crate::Int;

/// Which of the four regime families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    HighestOdd,
    HighestEven,
    LowestOdd,
    LowestEven,
}

impl RegimeKind {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(RegimeKind::HighestOdd),
            2 => Some(RegimeKind::HighestEven),
            3 => Some(RegimeKind::LowestOdd),
            4 => Some(RegimeKind::LowestEven),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            RegimeKind::HighestOdd => 1,
            RegimeKind::HighestEven => 2,
            RegimeKind::LowestOdd => 3,
            RegimeKind::LowestEven => 4,
        }
    }

    pub fn regime(self, k: usize) -> Regime {
        match self {
            RegimeKind::HighestOdd => Regime::HighestOdd(k),
            RegimeKind::HighestEven => Regime::HighestEven(k),
            RegimeKind::LowestOdd => Regime::LowestOdd(k),
            RegimeKind::LowestEven => Regime::LowestEven(k),
        }
    }

    pub fn of(regime: Regime) -> Option<(Self, usize)> {
        match regime {
            Regime::HighestOdd(k) => Some((RegimeKind::HighestOdd, k)),
            Regime::HighestEven(k) => Some((RegimeKind::HighestEven, k)),
            Regime::LowestOdd(k) => Some((RegimeKind::LowestOdd, k)),
            Regime::LowestEven(k) => Some((RegimeKind::LowestEven, k)),
            _ => None,
        }
    }

    pub fn family_name(self) -> FamilyName {
        match self {
            RegimeKind::HighestOdd => FamilyName::Xi1,
            RegimeKind::HighestEven => FamilyName::Xi2,
            RegimeKind::LowestOdd => FamilyName::Xi3,
            RegimeKind::LowestEven => FamilyName::Xi4,
        }
    }

    /// Length of the extremal vector, `2k - 1` or `2k`.
    pub fn extent(self, k: usize) -> usize {
        match self {
            RegimeKind::HighestOdd | RegimeKind::LowestOdd => 2 * k - 1,
            RegimeKind::HighestEven | RegimeKind::LowestEven => 2 * k,
        }
    }

    fn is_highest(self) -> bool {
        matches!(self, RegimeKind::HighestOdd | RegimeKind::HighestEven)
    }
}

/// `(p, q)` with `h_-j = p l1 + q l2`.
pub fn h_pair(seq: &Sequences, j: usize) -> (Int, Int) {
    if j % 2 == 1 {
        (seq.a_prime(j - 1).clone(), seq.a_prime(j).clone())
    } else {
        (seq.a(j - 1).clone(), seq.a(j).clone())
    }
}

/// `(p, q)` with `l_j = p l1 + q l2`.
pub fn l_pair(seq: &Sequences, j: usize) -> (Int, Int) {
    if j % 2 == 1 {
        (seq.a(j).clone(), seq.a(j - 1).clone())
    } else {
        (seq.a_prime(j).clone(), seq.a_prime(j - 1).clone())
    }
}

/// Generators of a regime family, split into the pinned part with the first free
/// coordinate form, and the remaining coordinate forms out to `window`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegimeGenerators {
    pub kind: RegimeKind,
    pub k: usize,
    pub pinned: Vec<LinearForm>,
    pub tail: Vec<LinearForm>,
}

impl RegimeGenerators {
    pub fn all(&self) -> Vec<LinearForm> {
        self.pinned.iter().chain(&self.tail).cloned().collect()
    }
}

pub fn regime_generators(cartan: &CartanRank2, kind: RegimeKind, k: usize, window: i64) -> RegimeGenerators {
    assert!(k >= 1, "regime index starts at 1");
    let n = kind.extent(k);
    let seq = Sequences::new(cartan, n + 2);
    let mut pinned = Vec::with_capacity(n + 1);
    for m in 1..=n {
        let mi = m as i64;
        pinned.push(if kind.is_highest() {
            let (p, q) = h_pair(&seq, m);
            LinearForm::coord(-mi, 1).plus_const(-p, -q)
        } else {
            let (p, q) = l_pair(&seq, m);
            LinearForm::coord(mi, -1).plus_const(p, q)
        });
    }
    let sign_index = |m: i64| if kind.is_highest() { (-m, 1) } else { (m, -1) };
    let free = (n + 1) as i64;
    let (idx, sign) = sign_index(free);
    pinned.push(LinearForm::coord(idx, sign));
    let tail = (free + 1..=window)
        .map(|m| {
            let (idx, sign) = sign_index(m);
            LinearForm::coord(idx, sign)
        })
        .collect();
    RegimeGenerators {
        kind,
        k,
        pinned,
        tail,
    }
}

/// One instantiated row of a closed-form table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// Row number 1..=8 within the table.
    pub row: u8,
    pub j: usize,
    pub i: usize,
    pub form: LinearForm,
}

/// Closed forms of the chains of a regime family for `j <= j_max`, `i <= i_max`.
///
/// Rows 1-4 come from the pinned generators (`j <= k`), rows 5-8 from plain coordinate
/// forms further out. For the highest-even family the outer rows start at `j = k + 2`;
/// at `j = k + 1` their generators coincide with pinned ones.
pub fn table_rows(
    cartan: &CartanRank2,
    kind: RegimeKind,
    k: usize,
    j_max: usize,
    i_max: usize,
) -> Vec<TableRow> {
    let outer_start = if kind == RegimeKind::HighestEven { k + 2 } else { k + 1 };
    rows_from(cartan, kind, k, j_max, i_max, outer_start)
}

fn rows_from(
    cartan: &CartanRank2,
    kind: RegimeKind,
    k: usize,
    j_max: usize,
    i_max: usize,
    outer_start: usize,
) -> Vec<TableRow> {
    let seq = Sequences::new(cartan, 2 * j_max + i_max + 8);
    let a = |l: usize| seq.a(l).clone();
    let ap = |l: usize| seq.a_prime(l).clone();
    let x = |idx: i64, c: Int| LinearForm::zero().plus_term(idx, c);
    let two = |i1: i64, c1: Int, i2: i64, c2: Int| x(i1, c1).plus_term(i2, c2);
    let z = Int::from(0);

    let mut rows = Vec::new();
    let mut push = |row: u8, j: usize, i: usize, form: LinearForm| {
        rows.push(TableRow { row, j, i, form });
    };
    for j in 1..=j_max {
        let inner = j <= k;
        if !inner && j < outer_start {
            continue;
        }
        let jj = j as i64;
        for i in 0..=i_max {
            let ii = i as i64;
            // the index ranges below encode the row conditions on i
            match (kind, inner) {
                (RegimeKind::HighestOdd, true) => {
                    if i + 3 <= 2 * j {
                        push(1, j, i, two(-2 * jj + ii + 1, ap(i + 1), -2 * jj + ii + 2, -ap(i))
                            .plus_const(-ap(2 * j - 2), -ap(2 * j - 1)));
                    }
                    if i + 2 == 2 * j {
                        push(2, j, i, two(-1, ap(2 * j - 1), 1, -ap(2 * j - 2))
                            .plus_const(z.clone(), -ap(2 * j - 1)));
                    }
                    if i + 1 >= 2 * j {
                        push(3, j, i, two(-2 * jj + ii + 2, ap(i + 1), -2 * jj + ii + 3, -ap(i)));
                    }
                    if i + 4 <= 2 * j {
                        push(4, j, i, two(-2 * jj + ii + 2, a(i + 1), -2 * jj + ii + 3, -a(i))
                            .plus_const(-a(2 * j - 3), -a(2 * j - 2)));
                    }
                }
                (RegimeKind::HighestOdd, false) => {
                    if i + 1 >= 2 * j {
                        push(5, j, i, two(-2 * jj + ii + 2, ap(i + 1), -2 * jj + ii + 3, -ap(i))
                            .plus_const(ap(2 * j - 2), ap(2 * j - 1)));
                    }
                    if i + 4 <= 2 * j {
                        push(6, j, i, two(-2 * jj + ii + 2, a(i + 1), -2 * jj + ii + 3, -a(i)));
                    }
                    if i + 3 == 2 * j {
                        push(7, j, i, two(-1, a(2 * j - 2), 1, -a(2 * j - 3))
                            .plus_const(a(2 * j - 3), z.clone()));
                    }
                    if i + 2 >= 2 * j {
                        push(8, j, i, two(-2 * jj + ii + 3, a(i + 1), -2 * jj + ii + 4, -a(i))
                            .plus_const(a(2 * j - 3), a(2 * j - 2)));
                    }
                }
                (RegimeKind::HighestEven, true) => {
                    if i + 2 <= 2 * j {
                        push(1, j, i, two(-2 * jj + ii, a(i + 1), -2 * jj + ii + 1, -a(i))
                            .plus_const(-a(2 * j - 1), -a(2 * j)));
                    }
                    if i + 1 == 2 * j {
                        push(2, j, i, two(-1, a(2 * j), 1, -a(2 * j - 1))
                            .plus_const(z.clone(), -a(2 * j)));
                    }
                    if i >= 2 * j {
                        push(3, j, i, two(-2 * jj + ii + 1, a(i + 1), -2 * jj + ii + 2, -a(i)));
                    }
                    if i + 3 <= 2 * j {
                        push(4, j, i, two(-2 * jj + ii + 1, ap(i + 1), -2 * jj + ii + 2, -ap(i))
                            .plus_const(-ap(2 * j - 2), -ap(2 * j - 1)));
                    }
                }
                (RegimeKind::HighestEven, false) => {
                    if i + 2 >= 2 * j {
                        push(5, j, i, two(-2 * jj + ii + 3, a(i + 1), -2 * jj + ii + 4, -a(i))
                            .plus_const(a(2 * j - 3), a(2 * j - 2)));
                    }
                    if i + 5 <= 2 * j {
                        push(6, j, i, two(-2 * jj + ii + 3, ap(i + 1), -2 * jj + ii + 4, -ap(i)));
                    }
                    if i + 4 == 2 * j {
                        push(7, j, i, two(-1, ap(2 * j - 3), 1, -ap(2 * j - 4))
                            .plus_const(ap(2 * j - 4), z.clone()));
                    }
                    if i + 3 >= 2 * j {
                        push(8, j, i, two(-2 * jj + ii + 4, ap(i + 1), -2 * jj + ii + 5, -ap(i))
                            .plus_const(ap(2 * j - 4), ap(2 * j - 3)));
                    }
                }
                (RegimeKind::LowestOdd, true) => {
                    if i + 3 <= 2 * j {
                        push(1, j, i, two(2 * jj - ii - 1, -a(i + 1), 2 * jj - ii - 2, a(i))
                            .plus_const(a(2 * j - 1), a(2 * j - 2)));
                    }
                    if i + 2 == 2 * j {
                        push(2, j, i, two(1, -a(2 * j - 1), -1, a(2 * j - 2))
                            .plus_const(a(2 * j - 1), z.clone()));
                    }
                    if i + 1 >= 2 * j {
                        push(3, j, i, two(2 * jj - ii - 2, -a(i + 1), 2 * jj - ii - 3, a(i)));
                    }
                    if i + 4 <= 2 * j {
                        push(4, j, i, two(2 * jj - ii - 2, -ap(i + 1), 2 * jj - ii - 3, ap(i))
                            .plus_const(ap(2 * j - 2), ap(2 * j - 3)));
                    }
                }
                (RegimeKind::LowestOdd, false) => {
                    if i + 1 >= 2 * j {
                        push(5, j, i, two(2 * jj - ii - 2, -a(i + 1), 2 * jj - ii - 3, a(i))
                            .plus_const(-a(2 * j - 1), -a(2 * j - 2)));
                    }
                    if i + 4 <= 2 * j {
                        push(6, j, i, two(2 * jj - ii - 2, -ap(i + 1), 2 * jj - ii - 3, ap(i)));
                    }
                    if i + 3 == 2 * j {
                        push(7, j, i, two(1, -ap(2 * j - 2), -1, ap(2 * j - 3))
                            .plus_const(z.clone(), -ap(2 * j - 3)));
                    }
                    if i + 2 >= 2 * j {
                        push(8, j, i, two(2 * jj - ii - 3, -ap(i + 1), 2 * jj - ii - 4, ap(i))
                            .plus_const(-ap(2 * j - 2), -ap(2 * j - 3)));
                    }
                }
                (RegimeKind::LowestEven, true) => {
                    if i + 2 <= 2 * j {
                        push(1, j, i, two(2 * jj - ii, -ap(i + 1), 2 * jj - ii - 1, ap(i))
                            .plus_const(ap(2 * j), ap(2 * j - 1)));
                    }
                    if i + 1 == 2 * j {
                        push(2, j, i, two(1, -ap(2 * j), -1, ap(2 * j - 1))
                            .plus_const(ap(2 * j), z.clone()));
                    }
                    if i >= 2 * j {
                        push(3, j, i, two(2 * jj - ii - 1, -ap(i + 1), 2 * jj - ii - 2, ap(i)));
                    }
                    if i + 3 <= 2 * j {
                        push(4, j, i, two(2 * jj - ii - 1, -a(i + 1), 2 * jj - ii - 2, a(i))
                            .plus_const(a(2 * j - 1), a(2 * j - 2)));
                    }
                }
                (RegimeKind::LowestEven, false) => {
                    if i >= 2 * j {
                        push(5, j, i, two(2 * jj - ii - 1, -ap(i + 1), 2 * jj - ii - 2, ap(i))
                            .plus_const(-ap(2 * j), -ap(2 * j - 1)));
                    }
                    if i + 3 <= 2 * j {
                        push(6, j, i, two(2 * jj - ii - 1, -a(i + 1), 2 * jj - ii - 2, a(i)));
                    }
                    if i + 2 == 2 * j {
                        push(7, j, i, two(1, -a(2 * j - 1), -1, a(2 * j - 2))
                            .plus_const(z.clone(), -a(2 * j - 2)));
                    }
                    if i + 1 >= 2 * j {
                        push(8, j, i, two(2 * jj - ii - 2, -a(i + 1), 2 * jj - ii - 3, a(i))
                            .plus_const(-a(2 * j - 1), -a(2 * j - 2)));
                    }
                }
            }
        }
    }
    rows
}

/// The outer rows of the highest-even family read at `j = k + 1`, where their generators
/// would be the pinned forms `x_-2k - h_-2k` and `x_-(2k-1) - h_-(2k-1)`.
pub fn highest_even_rows_at_first_outer_j(cartan: &CartanRank2, k: usize, i_max: usize) -> Vec<TableRow> {
    rows_from(cartan, RegimeKind::HighestEven, k, k + 1, i_max, k + 1)
        .into_iter()
        .filter(|r| r.j == k + 1)
        .collect()
}

/// The two chains singled out for the unpinned closure:
/// `a_m x_m - a_{m-1} x_{m+1}` and `-a'_m x_-m + a'_{m-1} x_-(m+1)` for `1 <= m <= m_max`.
pub fn displayed_family(cartan: &CartanRank2, m_max: usize) -> FormFamily {
    let seq = Sequences::new(cartan, m_max + 1);
    let mut forms = Vec::with_capacity(2 * m_max);
    for m in 1..=m_max {
        let mi = m as i64;
        forms.push(
            LinearForm::zero()
                .plus_term(mi, seq.a(m).clone())
                .plus_term(mi + 1, -seq.a(m - 1).clone()),
        );
        forms.push(
            LinearForm::zero()
                .plus_term(-mi, -seq.a_prime(m).clone())
                .plus_term(-mi - 1, seq.a_prime(m - 1).clone()),
        );
    }
    forms.sort();
    forms.dedup();
    FormFamily {
        name: FamilyName::XiDisplayed,
        k: None,
        window: m_max as i64 + 1,
        depth: 0,
        saturated: true,
        forms,
    }
}

fn theta(v: i64) -> i64 {
    i64::from(v >= 0)
}

/// Closed form of the chain started at `x_-k` after `l` operator steps
/// `S_{-k}, S_{-k+1}, ..., S_-1, S_1, S_2, ...`.
pub fn phi_chain_closed(cartan: &CartanRank2, l: usize, k: usize) -> LinearForm {
    assert!(k >= 1, "chain start index must be >= 1");
    let seq = Sequences::new(cartan, l.max(k) + 2);
    let primed = k % 2 == 1;
    let s = |n: usize| seq.get(primed, n).clone();
    let d = l as i64 - k as i64;
    let mut f = LinearForm::zero()
        .plus_term(d + theta(d), s(l + 1))
        .plus_term(d + 1 + theta(d + 1), -s(l));
    if l >= k {
        f = f.plus_const(s(k - 1), s(k));
    } else if l + 1 == k {
        f = f.plus_const(s(k - 1), Int::from(0));
    }
    f
}

/// The same chain computed by applying `s_bar` step by step.
pub fn phi_chain_iterated(cartan: &CartanRank2, l: usize, k: usize) -> LinearForm {
    let mut f = LinearForm::coord(-(k as i64), 1);
    let mut idx = -(k as i64);
    for _ in 0..l {
        f = s_bar(cartan, idx, &f).expect("chain indices are nonzero");
        idx = crate::iota::succ(idx);
    }
    f
}

/// Checks that `weight` sits in the regime the family describes.
pub fn require_regime(cartan: &CartanRank2, weight: &Weight, kind: RegimeKind, k: usize) -> Result<()> {
    let wc = classify_weight(cartan, weight)?;
    let want = kind.regime(k);
    let found = if kind.is_highest() {
        Some(wc.regime())
    } else {
        wc.lowest_regime()
    };
    if found == Some(want) {
        Ok(())
    } else {
        Err(Error::RegimeMismatch {
            family: kind.family_name().as_str().to_string(),
            expected: want.to_string(),
            found: found.map_or_else(|| wc.regime().to_string(), |r| r.to_string()),
        })
    }
}

/// Closure of the regime generators, after checking `weight` is in that regime.
pub fn xi_family(
    cartan: &CartanRank2,
    weight: &Weight,
    kind: RegimeKind,
    k: usize,
    opts: &ClosureOptions,
) -> Result<FormFamily> {
    require_regime(cartan, weight, kind, k)?;
    let gens = regime_generators(cartan, kind, k, opts.window);
    let mut fam = xi_closure(cartan, &gens.all(), opts)?;
    fam.name = kind.family_name();
    fam.k = Some(k);
    Ok(fam)
}

/// All forms cutting out the component of the zero vector in the given regime: the
/// unpinned closure together with the regime closure.
pub fn component_family(
    cartan: &CartanRank2,
    weight: &Weight,
    kind: RegimeKind,
    k: usize,
    opts: &ClosureOptions,
) -> Result<FormFamily> {
    let base = xi_closure(cartan, &coordinate_generators(opts.window), opts)?;
    let regime = xi_family(cartan, weight, kind, k, opts)?;
    Ok(FormFamily::merged(kind.family_name(), Some(k), &[&base, &regime]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Weight;

    fn c(c1: u32, c2: u32) -> CartanRank2 {
        CartanRank2::new(c1, c2).unwrap()
    }

    #[test]
    fn first_row_examples() {
        let cart = c(2, 3);
        let rows = table_rows(&cart, RegimeKind::HighestOdd, 1, 1, 0);
        let row2: Vec<_> = rows.iter().filter(|r| r.row == 2).collect();
        assert_eq!(row2.len(), 1);
        let want = LinearForm::coord(-1, 1).plus_const(Int::from(0), Int::from(-1));
        assert_eq!(row2[0].form, want);
        let gens = regime_generators(&cart, RegimeKind::HighestOdd, 1, 4);
        assert_eq!(gens.pinned[0], want);
    }

    #[test]
    fn highest_even_generators() {
        let cart = c(2, 2);
        let gens = regime_generators(&cart, RegimeKind::HighestEven, 1, 5);
        let h2 = LinearForm::coord(-2, 1).plus_const(Int::from(-1), Int::from(-2));
        assert_eq!(
            gens.pinned,
            vec![
                LinearForm::coord(-1, 1).plus_const(Int::from(0), Int::from(-1)),
                h2,
                LinearForm::coord(-3, 1),
            ]
        );
        assert_eq!(gens.tail, vec![LinearForm::coord(-4, 1), LinearForm::coord(-5, 1)]);
    }

    #[test]
    fn chain_small_cases() {
        let cart = c(2, 3);
        // k = 3: c2 x_-2 - x_-1, then a'_3 x_-1 - a'_2 x_1 + a'_2 l1
        let one = LinearForm::zero()
            .plus_term(-2, Int::from(3))
            .plus_term(-1, Int::from(-1));
        assert_eq!(phi_chain_closed(&cart, 1, 3), one);
        let two = LinearForm::zero()
            .plus_term(-1, Int::from(5))
            .plus_term(1, Int::from(-3))
            .plus_const(Int::from(3), Int::from(0));
        assert_eq!(phi_chain_closed(&cart, 2, 3), two);
        let three = LinearForm::zero()
            .plus_term(1, Int::from(12))
            .plus_term(2, Int::from(-5))
            .plus_const(Int::from(3), Int::from(5));
        assert_eq!(phi_chain_closed(&cart, 3, 3), three);
        for l in 0..=8 {
            for k in 1..=6 {
                assert_eq!(phi_chain_closed(&cart, l, k), phi_chain_iterated(&cart, l, k), "l={l} k={k}");
            }
        }
    }

    #[test]
    fn regime_mismatch() {
        let cart = c(2, 2);
        let w = Weight::new(3, -2);
        assert!(require_regime(&cart, &w, RegimeKind::HighestEven, 1).is_ok());
        assert!(matches!(
            require_regime(&cart, &w, RegimeKind::HighestOdd, 1),
            Err(Error::RegimeMismatch { .. })
        ));
        let a2 = c(1, 1);
        assert!(require_regime(&a2, &Weight::new(1, -1), RegimeKind::LowestOdd, 1).is_ok());
    }

    #[test]
    fn tables_sit_in_closures() {
        let opts = ClosureOptions {
            window: 14,
            max_depth: 30,
            ..ClosureOptions::default()
        };
        for (c1, c2) in [(2, 2), (2, 3), (1, 5)] {
            let cart = c(c1, c2);
            for kind in [1, 2, 3, 4].map(|n| RegimeKind::from_number(n).unwrap()) {
                for k in 1..=2 {
                    let gens = regime_generators(&cart, kind, k, opts.window);
                    let fam = xi_closure(&cart, &gens.all(), &opts).unwrap();
                    for r in table_rows(&cart, kind, k, 4, 8) {
                        assert!(
                            fam.contains(&r.form),
                            "{:?} k={k} row {} j={} i={} {} missing for ({c1},{c2})",
                            kind, r.row, r.j, r.i, r.form
                        );
                    }
                }
            }
        }
    }
}
