//! Super tensor algebras twisted by Hecke algebras, the creation and
//! annihilation operators acting on them, and exact verification of the
//! resulting double centralizer properties over `Q(q)`.

pub mod centralizer;
pub mod checks;
pub mod error;
pub mod extension;
pub mod glmn;
pub mod hecke;
pub mod identities;
pub mod mode;
pub mod operators;
pub mod permutations;
pub mod qfield;
pub mod report;
pub mod superspace;

pub use error::{Error, Result};
pub use mode::Mode;
