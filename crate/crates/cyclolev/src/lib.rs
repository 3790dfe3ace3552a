//! Exact-arithmetic library for cyclotomic level maps on nilpotent orbits
//! and Weyl group conjugacy classes, Kac diagrams of the dominant weights
//! attached to integer levels, and the induced predictions for associated
//! varieties of simple affine vertex algebras.
//!
//! Everything here is exact: partitions and Cartan data are integers,
//! characteristic polynomials are factored by exact division against
//! cyclotomic polynomials, and every closed-form value is cross-checked
//! against an enumerative oracle in the test suites.

pub mod affine;
pub mod cyclo;
pub mod error;
pub mod lie_type;
pub mod orbit;
pub mod partition;
pub mod poly;
pub mod predictor;
pub mod report;
pub mod richardson;
pub mod rootdata;
pub mod rootval;
pub mod weyl;

pub use error::Error;
pub use lie_type::{Family, LieType};
pub use partition::Partition;
