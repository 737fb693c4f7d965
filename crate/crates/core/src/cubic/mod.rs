//! The pure cubic field ℚ(∛n): integers, units and class group.

pub mod field;

pub use field::{CubicField, CubicFieldElem, IntegralBasis};
pub mod lattice;
pub mod voronoi;

pub use voronoi::{fundamental_unit, FundamentalUnit, UnitCertificate};
pub mod ideal;
pub mod classgroup;

pub use classgroup::{class_group, class_number, ClassGroupReport};
pub mod identity;

pub use identity::{verify_unit_identity, UnitIdentityReport};
