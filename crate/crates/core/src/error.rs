use alloc::string::String;
use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operand shapes do not line up (non-square input, length mismatch, ...).
    #[error("dimension error: {0}")]
    Dimension(String),
    /// A system failed a construction invariant other than the rank check.
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    /// The coefficient matrix does not have full row rank.
    #[error("rank {rank} is below the {expected} rows; full row rank is required")]
    RankDeficient { rank: usize, expected: usize },
    /// The system has no integer solution at all (sign constraints aside).
    #[error("the system has no integer solution")]
    Infeasible,
    /// The vector does not lie in the integer solution coset of the system.
    #[error("vector is not an integer solution of the system")]
    NotInCoset,
    /// The minor bound exceeds the configured search cap.
    #[error("minor bound {bound} exceeds the search cap {cap}")]
    BoundTooLarge { bound: BigInt, cap: u64 },
    /// An exhaustive enumeration would visit more points than allowed.
    #[error("enumeration of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: BigInt, budget: u64 },
    /// The solution set is too large for the exact convex-hull test.
    #[error("solution set has {count} points, above the exact-hull cap of {cap}")]
    TooManySolutions { count: usize, cap: usize },
    /// An operation that requires gcd-1 maximal minors got something else.
    #[error("gcd of maximal minors is {gcd}, expected 1")]
    GcdNotOne { gcd: BigInt },
    /// A matrix expected to be unimodular has |det| != 1.
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    /// The nonnegative solution set has a recession direction.
    #[error("solution set is unbounded")]
    Unbounded,
    /// The instance generator kept drawing rank-deficient (or filtered-out)
    /// matrices and gave up.
    #[error("instance generator gave up after {tries} draws")]
    GeneratorExhausted { tries: u32 },
    /// Generation or campaign parameters violate their invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = core::result::Result<T, Error>;
