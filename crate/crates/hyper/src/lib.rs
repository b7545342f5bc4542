//! Multivalued operations and the structures built on them: explicit
//! operation tables, exhaustive canonical-hypergroup and hyperring axiom
//! checking, Krasner's factor construction A_T, the bounded fraction
//! hyperfield, and isomorphism search between small tables.

pub mod axioms;
pub mod error;
pub mod factor;
pub mod fraction;
pub mod isomorphism;
pub mod table;

pub use axioms::{check_canonical_hypergroup, check_hyperring, AxiomCheck, HypergroupReport, HyperringReport};
pub use error::{HyperError, Result};
pub use factor::{
    additively_closed_with_zero, all_subgroups, build_factor_hyperfield, subfield_criterion,
    subgroup_generated, validate_subgroup, FactorTable,
};
pub use fraction::{build_fraction_hyperfield, BoundedFraction, FractionTable, PolyCosetRing};
pub use isomorphism::{find_isomorphism, verify_isomorphism};
pub use table::{IndexSet, MultiOpTable};
