//! Exact-arithmetic engine for probabilistic zeta functions of finite groups.
//!
//! The crate computes `P_G(s)`, the finite Dirichlet series whose value at a
//! positive integer `s` is the probability that `s` uniformly random elements
//! generate the finite group `G`. Everything is exact: permutation groups come
//! with stabilizer-chain certificates, subgroup lattices carry Möbius values,
//! Dirichlet polynomials have arbitrary-precision integer coefficients, and
//! irreducibility verdicts are backed by re-checkable certificates.

pub mod dirichlet;
pub mod elements;
pub mod group;
pub mod jsonio;
pub mod lattice;
pub mod multipoly;
pub mod numtheory;
pub mod perm;
pub mod registry;
pub mod verify;
pub mod zeta;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed permutation: {0}")]
    MalformedPerm(String),
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the {what} bound {bound}")]
    SizeRefusal {
        order: u128,
        bound: u128,
        what: &'static str,
    },
    #[error("Dirichlet index arithmetic overflowed u64")]
    IndexOverflow,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Bound configuration for lattice-level computations.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Largest group order for which the full subgroup lattice is enumerated.
    pub full_lattice: u128,
    /// Largest group order for which elements are enumerated and interned.
    pub enumeration: u128,
    /// Largest group order for brute-force automorphism search.
    pub automorphisms: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            full_lattice: 2500,
            enumeration: 20_000,
            automorphisms: 1000,
        }
    }
}
