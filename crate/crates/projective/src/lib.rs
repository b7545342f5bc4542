//! Finite projective spaces P^n over F_q: points and lines in canonical
//! coordinates, exhaustive geometry axiom and Desargues checks, the
//! incidence hypergroup of a space, semilinear maps and their induced
//! collineations, full collineation enumeration at desk scale, and
//! incidence abelian group structures through extension-field towers.

pub mod axioms;
pub mod collineations;
pub mod error;
pub mod hypergroup;
pub mod incidence_group;
pub mod semilinear;
pub mod space;

pub use axioms::{check_desargues, check_projective_axioms, DesarguesReport, ProjectiveAxiomReport};
pub use collineations::{enumerate_collineations, CollineationGroup, MAX_POINTS};
pub use error::{ProjectiveError, Result};
pub use hypergroup::{geometry_from_kvector_table, incidence_hypergroup};
pub use incidence_group::{
    build_incidence_group, verify_incidence_group, IncidenceGroup, IncidenceGroupReport,
};
pub use semilinear::SemilinearMap;
pub use space::{Line, ProjPoint, ProjSpace, SpaceIndex};
