//! Special functions on symmetric cones.
//!
//! This crate evaluates the special functions attached to a simple Euclidean
//! Jordan algebra and its symmetric cone — spherical polynomials, generalized
//! Laguerre polynomials and functions, multivariate Bessel series, Whittaker
//! vectors in the four standard models of the scalar holomorphic discrete
//! series — and certifies the identities tying them together (generating
//! functions, K-type expansions, transform eigenrelations, recurrence
//! relations) by independent numerical cross-checks.
//!
//! Supported cones: the half-line, positive definite real symmetric and
//! complex Hermitian matrices, and the Lorentz cone.

pub mod error;
pub mod gamma;
pub mod partition;
pub mod cone;
pub mod symfunc;
pub mod jordan;
pub mod spherical;
pub mod laguerre;
pub mod bessel;
pub mod models;
pub mod transforms;
pub mod harness;

pub use bessel::SeriesTruncation;
pub use cone::{ConeParams, Family, WallachPoint};
pub use error::{Error, Result};
pub use harness::{CheckReport, VerifyConfig};
pub use jordan::{JordanElement, JordanElementC, KLRotation};
pub use models::Model;
pub use partition::Partition;
