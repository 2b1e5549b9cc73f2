//! Weak commutativity groups χ(H) and ν(H) over finite presentations.
//!
//! The crate is layered bottom-up:
//!
//! * [`words`]: free words, presentations and their text format.
//! * [`enumerate`]: Todd–Coxeter coset enumeration.
//! * [`perm`]: permutation groups with stabilizer chains.
//! * [`zlin`]: Smith normal form and abelian invariants.
//! * [`model`]: finite group models built from presentations.
//! * [`groupring`]: the augmentation ideal modulo squares.
//! * [`weak`]: the χ(H) and ν(H) constructions and their checks.

pub mod checks;
pub mod enumerate;
pub mod groupring;
pub mod model;
pub mod perm;
pub mod weak;
pub mod words;
pub mod zlin;

mod error;

pub use error::Error;
pub use model::FiniteGroupModel;
pub use perm::{PermGroup, Permutation};
pub use words::{Presentation, Word};
pub use zlin::InvariantFactors;
