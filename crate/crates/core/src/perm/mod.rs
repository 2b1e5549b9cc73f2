//! Permutation groups: stabilizer chains, subgroup constructions,
//! quotients and homomorphisms.
//!
//! Groups realized from coset tables act regularly, and every subgroup or
//! quotient derived from them acts semiregularly. Those groups carry a
//! one-level chain and their elements correspond to the points of one
//! orbit, which lets intersections, centers, kernels and quotients work
//! on point sets instead of element lists. Other groups use Schreier–Sims
//! and fall back to element enumeration below [`ELEMENT_THRESHOLD`].

mod chain;
mod group;
mod hom;
mod permutation;

pub use group::{PermGroup, Quotient};
pub use hom::Homomorphism;
pub use permutation::Permutation;

use thiserror::Error;

/// Largest group handled by element-enumeration strategies.
pub const ELEMENT_THRESHOLD: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation on {found} points used with a group on {expected} points")]
    DomainMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{size} elements exceed the enumeration threshold of {threshold}")]
    ThresholdExceeded { size: u128, threshold: usize },
    #[error("group order overflows 128 bits")]
    OrderOverflow,
    #[error("expected {expected} generator images, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("relator {index} ({relator}) does not map to the identity")]
    RelatorNotRespected { index: usize, relator: String },
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
}
