//! Exact combinatorics of the symmetric group: descent statistics of
//! permutations and standard Young tableaux, sparse multivariate generating
//! functions with arbitrary-precision integer coefficients, Kronecker
//! coefficients computed by a character-free descent-set recursion (with a
//! character-theoretic oracle for cross-checking), and enumeration-based
//! verifiers for the identities tying all of these together.
//!
//! Everything is exact integer arithmetic; there is no floating point in
//! this crate.

pub mod budget;
pub mod distributions;
pub mod kronecker;
pub mod permstat;
pub mod polyring;
pub mod report;
pub mod symmetry;
pub mod tableaux;

pub use budget::{Budget, BudgetError};
pub use kronecker::{CharacterTable, KroneckerKey, KroneckerTable};
pub use permstat::{DescentSet, MahonianStat, Permutation, PermutationTuple};
pub use polyring::{ExponentMatrix, MultivarPolynomial, Window};
pub use report::{Check, VerifyReport};
pub use symmetry::StatKind;
pub use tableaux::{Multipartition, Partition, StandardTableau};
