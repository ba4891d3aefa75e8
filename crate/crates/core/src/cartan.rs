//! Rank-2 generalized Cartan data and integral weights.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanKind {
    Finite,
    Affine,
    Hyperbolic,
}

/// The matrix `[[2, -c1], [-c2, 2]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanRank2 {
    c1: u32,
    c2: u32,
}

impl CartanRank2 {
    pub fn new(c1: u32, c2: u32) -> Result<Self> {
        if c1 == 0 || c2 == 0 {
            return Err(Error::PreconditionViolation(format!(
                "off-diagonal entries must be positive, got ({c1}, {c2})"
            )));
        }
        Ok(CartanRank2 { c1, c2 })
    }

    pub fn c1(&self) -> u32 {
        self.c1
    }

    pub fn c2(&self) -> u32 {
        self.c2
    }

    pub fn product(&self) -> u64 {
        self.c1 as u64 * self.c2 as u64
    }

    /// `c1 * c2 - 2`, the argument fed to the Chebyshev recursion.
    pub fn chebyshev_arg(&self) -> Int {
        BigInt::from(self.product()) - 2
    }

    pub fn kind(&self) -> CartanKind {
        match self.product() {
            0..=3 => CartanKind::Finite,
            4 => CartanKind::Affine,
            _ => CartanKind::Hyperbolic,
        }
    }

    /// `<h_i, alpha_j>` for colors `i, j` in `{1, 2}`.
    pub fn pairing(&self, i: u8, j: u8) -> i64 {
        match (i, j) {
            (1, 1) | (2, 2) => 2,
            (1, 2) => -(self.c1 as i64),
            (2, 1) => -(self.c2 as i64),
            _ => panic!("color must be 1 or 2, got ({i}, {j})"),
        }
    }

    /// Simple root `alpha_j` written in the fundamental-weight basis.
    pub fn simple_root(&self, j: u8) -> (i64, i64) {
        (self.pairing(1, j), self.pairing(2, j))
    }
}

impl fmt::Display for CartanRank2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// `lambda = l1 * Lambda_1 + l2 * Lambda_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub l1: Int,
    pub l2: Int,
}

impl Weight {
    pub fn new(l1: impl Into<Int>, l2: impl Into<Int>) -> Self {
        Weight {
            l1: l1.into(),
            l2: l2.into(),
        }
    }

    /// `<h_i, lambda>`.
    pub fn pairing(&self, i: u8) -> &Int {
        match i {
            1 => &self.l1,
            2 => &self.l2,
            _ => panic!("color must be 1 or 2, got {i}"),
        }
    }

    pub fn is_dominant(&self) -> bool {
        !self.l1.is_negative() && !self.l2.is_negative()
    }

    pub fn is_antidominant(&self) -> bool {
        !self.l1.is_positive() && !self.l2.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.l1.is_zero() && self.l2.is_zero()
    }

    /// `p * l1 + q * l2`.
    pub fn eval(&self, p: &Int, q: &Int) -> Int {
        p * &self.l1 + q * &self.l2
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l1, self.l2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        let k = |a, b| CartanRank2::new(a, b).unwrap().kind();
        assert_eq!(k(1, 1), CartanKind::Finite);
        assert_eq!(k(1, 3), CartanKind::Finite);
        assert_eq!(k(2, 2), CartanKind::Affine);
        assert_eq!(k(4, 1), CartanKind::Affine);
        assert_eq!(k(2, 3), CartanKind::Hyperbolic);
        assert!(CartanRank2::new(0, 3).is_err());
    }

    #[test]
    fn pairing_matches_matrix() {
        let c = CartanRank2::new(2, 3).unwrap();
        assert_eq!(c.pairing(1, 1), 2);
        assert_eq!(c.pairing(2, 2), 2);
        assert_eq!(c.pairing(1, 2), -2);
        assert_eq!(c.pairing(2, 1), -3);
        assert_eq!(c.simple_root(1), (2, -3));
        assert_eq!(c.simple_root(2), (-2, 2));
    }
}
