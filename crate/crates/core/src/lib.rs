//! A finite-model workbench for implication algebras and implication
//! semigroups.
//!
//! The crate covers axiom-class checking over Cayley tables, implicative
//! filters and prime-filter extension, the Stone-style set representation
//! of finite implication algebras, concrete relation algebras with
//! representation verification and transformations, and a bounded
//! backtracking search for representations as binary relations.

pub mod algebra;
pub mod axioms;
pub mod corpus;
pub mod derived;
pub mod error;
pub mod filter;
pub mod fixtures;
pub mod oracle;
pub mod relmodel;
pub mod search;
pub mod stone;
pub mod text;

pub use algebra::{ClassId, FiniteAlgebra, Table};
pub use axioms::{check_class, ClassReport, Violation};
pub use derived::{derived_one, derived_order, reduct, DerivedOrder};
pub use error::{Error, Result};
pub use filter::{
    enumerate_filters, generated_filter, is_filter, prime_discriminate, prime_extend, Filter,
    FilterKind, FilterViolation,
};
pub use oracle::oracle_enumerate;
pub use relmodel::transform::{empty_zero, quotient_by_identity, DiscriminatorPair};
pub use relmodel::weakening::{weakening_arrow, weakening_check, Poset};
pub use relmodel::{
    rel_arrow, rel_compose, verify_representation, Mode, PairSet, Profile, RelContext,
    Representation, RepViolation, Verdict,
};
pub use search::{search_representation, SearchConfig, SearchOutcome};
pub use stone::{relationalize, stone_base, stone_represent, StoneRepresentation};
