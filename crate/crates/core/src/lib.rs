//! Exact-arithmetic toolkit for relative invariants and equivariants of
//! finite matrix groups graded by an epimorphism onto Z_m.
//!
//! Everything is computed over cyclotomic fields Q(zeta_N), so series
//! coefficients, projector identities and generator lists are exact and every
//! check in the test suite is an equality test. The main entry points are:
//!
//! * [`group::close_group`] — build the finite graded group from generators;
//! * [`molien`] — Hilbert–Poincaré series by three independent routes;
//! * [`reynolds`] — averaging and relative Reynolds projectors;
//! * [`generators`] — generating sets for the modules of relative invariant
//!   polynomials and relative equivariant polynomial maps.

pub mod error;
pub mod exact;
mod exec;
pub mod generators;
pub mod group;
pub mod linalg;
pub mod matrix;
pub mod molien;
pub mod poly;
pub mod presets;
pub mod reynolds;
pub mod checks;
pub mod series;

pub use error::{Error, Result};
