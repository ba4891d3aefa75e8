//! Exact computations on crystal bases of rank-2 modified quantum algebras.
//!
//! Coordinates live on `Z^inf` indexed by nonzero integers; the fixed reduced word reads
//! `..., 1, 2, 1, t_lambda, 2, 1, 2, ...` so index `k > 0` has color 1 when odd and 2 when
//! even, and index `-k` has the opposite color.

pub mod cartan;
pub mod classify;
pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod form;
pub mod graph;
pub mod iota;
pub mod json;
pub mod polyhedral;
pub mod seq;
pub mod vector;
pub mod verify;

pub use cartan::{CartanKind, CartanRank2, Weight};
pub use classify::{
    affine_level, classify_weight, compare_with_alpha_beta, Regime, ThresholdPosition,
    WeightClassification,
};
pub use crystal::{e_tilde, epsilon, f_tilde, phi, raise_to_extremal, sigma, sigma_profile, wt, Mode};
pub use error::{Error, Result};
pub use extremal::{highest_vector, lowest_vector, verify_extremal, ExtremalReport};
pub use graph::{bfs_component, bfs_component_with, BfsOptions, CrystalGraph, Direction};
pub use seq::{a_prime_seq, a_seq, chebyshev, Sequences};
pub use vector::LambdaVector;

/// Arbitrary-precision integer used for every coordinate, coefficient and weight.
pub type Int = num_bigint::BigInt;
