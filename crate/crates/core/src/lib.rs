//! Finite commutative ring models with exhaustive ideal arithmetic and
//! absorbing-prime classification.
//!
//! Rings are dense operation tables over indices 0..order with 0 as the
//! additive identity. The crate provides constructors (modular rings,
//! products, quotients, idealizations), a small construction language,
//! complete ideal-lattice enumeration, ideal arithmetic (product, power,
//! radical, colon, annihilator), and classification of ideals against ten
//! primality-flavored predicates with violating tuples as witnesses.

pub mod classify;
pub mod construct;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod ring;
pub mod spec;

pub use classify::{classify, ClassificationProfile, FLAGS};
pub use construct::{
    idealization, mixed_radix_decode, mixed_radix_encode, product, quotient, zmod, ModuleKind,
    ModuleSpec, QuotientMap,
};
pub use error::CoreError;
pub use ideal::{annihilator, Ideal};
pub use lattice::{enumerate_ideals, IdealLattice, LatticeEntry};
pub use ring::{AxiomViolation, Elem, FiniteRing, ValidationReport};
pub use spec::{ActionKind, RingSpec};
