//! Chebyshev polynomials of the second kind and the braid sequences `a_l`, `a'_l`.

use num_traits::{One, Zero};

use crate::cartan::CartanRank2;
use crate::Int;

/// `P_k(x)` with `P_{-1} = 0`, `P_0 = 1`, `P_k = x P_{k-1} - P_{k-2}`.
pub fn chebyshev(k: i64, x: &Int) -> Int {
    assert!(k >= -1, "chebyshev index must be >= -1, got {k}");
    let (mut prev, mut cur) = (Int::zero(), Int::one());
    if k == -1 {
        return prev;
    }
    for _ in 0..k {
        let next = x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P_{-1}, P_0, ..., P_n`.
pub fn chebyshev_run(n: usize, x: &Int) -> Vec<Int> {
    let mut out = Vec::with_capacity(n + 2);
    out.push(Int::zero());
    out.push(Int::one());
    while out.len() < n + 2 {
        let m = out.len();
        let next = x * &out[m - 1] - &out[m - 2];
        out.push(next);
    }
    out
}

pub fn a_seq(cartan: &CartanRank2, l: usize) -> Int {
    Sequences::new(cartan, l).a(l).clone()
}

pub fn a_prime_seq(cartan: &CartanRank2, l: usize) -> Int {
    Sequences::new(cartan, l).a_prime(l).clone()
}

/// Both sequences tabulated for `0 <= l <= len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequences {
    cartan: CartanRank2,
    a: Vec<Int>,
    a_prime: Vec<Int>,
}

impl Sequences {
    pub fn new(cartan: &CartanRank2, len: usize) -> Self {
        let x = cartan.chebyshev_arg();
        // entry t of `p` is P_{t-1}
        let p = chebyshev_run(len / 2 + 1, &x);
        let pk = |k: i64| &p[(k + 1) as usize];
        let (c1, c2) = (Int::from(cartan.c1()), Int::from(cartan.c2()));
        let mut a = Vec::with_capacity(len + 1);
        let mut a_prime = Vec::with_capacity(len + 1);
        for l in 0..=len {
            let k = (l / 2) as i64;
            if l == 0 {
                a.push(Int::zero());
                a_prime.push(Int::zero());
            } else if l % 2 == 0 {
                a.push(&c1 * pk(k - 1));
                a_prime.push(&c2 * pk(k - 1));
            } else {
                let v = pk(k) + pk(k - 1);
                a.push(v.clone());
                a_prime.push(v);
            }
        }
        Sequences {
            cartan: *cartan,
            a,
            a_prime,
        }
    }

    pub fn cartan(&self) -> &CartanRank2 {
        &self.cartan
    }

    pub fn len(&self) -> usize {
        self.a.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self, l: usize) -> &Int {
        &self.a[l]
    }

    pub fn a_prime(&self, l: usize) -> &Int {
        &self.a_prime[l]
    }

    /// `a_l` for `primed == false`, `a'_l` otherwise.
    pub fn get(&self, primed: bool, l: usize) -> &Int {
        if primed {
            self.a_prime(l)
        } else {
            self.a(l)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cartan(c1: u32, c2: u32) -> CartanRank2 {
        CartanRank2::new(c1, c2).unwrap()
    }

    // the four two-step recursions, used as an independent generator
    fn by_recursion(c: &CartanRank2, len: usize) -> (Vec<Int>, Vec<Int>) {
        let (c1, c2) = (Int::from(c.c1()), Int::from(c.c2()));
        let mut a = vec![Int::zero(), Int::one()];
        let mut ap = vec![Int::zero(), Int::one()];
        while a.len() <= len {
            let l = a.len();
            if l % 2 == 0 {
                a.push(&c1 * &a[l - 1] - &a[l - 2]);
                ap.push(&c2 * &ap[l - 1] - &ap[l - 2]);
            } else {
                a.push(&c2 * &a[l - 1] - &a[l - 2]);
                ap.push(&c1 * &ap[l - 1] - &ap[l - 2]);
            }
        }
        (a, ap)
    }

    #[test]
    fn chebyshev_small() {
        let x = Int::from(2);
        assert_eq!(chebyshev(-1, &x), Int::zero());
        assert_eq!(chebyshev(0, &x), Int::one());
        assert_eq!(chebyshev(1, &Int::from(7)), Int::from(7));
        assert_eq!(chebyshev(2, &x), Int::from(3));
    }

    #[test]
    fn known_values() {
        assert_eq!(a_seq(&cartan(2, 2), 5), Int::from(5));
        assert_eq!(a_seq(&cartan(1, 4), 6), Int::from(3));
        for (c1, c2) in [(2, 3), (1, 5), (3, 3)] {
            let c = cartan(c1, c2);
            let n = Int::from(c.product());
            assert_eq!(a_seq(&c, 3), &n - 1);
            assert_eq!(a_prime_seq(&c, 3), &n - 1);
        }
    }

    #[test]
    fn affine_two_two_is_identity() {
        let s = Sequences::new(&cartan(2, 2), 30);
        for l in 0..=30 {
            assert_eq!(s.a(l), &Int::from(l));
            assert_eq!(s.a_prime(l), &Int::from(l));
        }
    }

    #[test]
    fn definition_agrees_with_recursion() {
        for (c1, c2) in [(1, 1), (2, 1), (1, 3), (2, 2), (1, 4), (2, 3), (3, 3), (1, 5), (7, 2)] {
            let c = cartan(c1, c2);
            let s = Sequences::new(&c, 40);
            let (a, ap) = by_recursion(&c, 40);
            for l in 0..=40 {
                assert_eq!(s.a(l), &a[l], "a_{l} for {c}");
                assert_eq!(s.a_prime(l), &ap[l], "a'_{l} for {c}");
            }
        }
    }

    #[test]
    fn appendix_finite_sequences() {
        let s = Sequences::new(&cartan(2, 1), 4);
        assert_eq!(s.a.iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["0", "1", "2", "1", "0"]);
        assert_eq!(s.a_prime.iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["0", "1", "1", "1", "0"]);
        let s = Sequences::new(&cartan(1, 3), 6);
        assert_eq!(s.a.iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["0", "1", "1", "2", "1", "1", "0"]);
        assert_eq!(s.a_prime.iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["0", "1", "3", "2", "3", "1", "0"]);
    }
}
