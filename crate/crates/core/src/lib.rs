//! Exact computations around the Jacobian dual matrix of a linearly presented
//! `m`-primary ideal over a prime field: Groebner bases, ideal calculus,
//! minimal free resolutions, and instance-level checks of the determinantal
//! description of the image of the associated map of projective spaces.

pub mod error;
pub mod gbasis;
pub mod homology;
pub mod jacdual;
pub mod oracle;
pub mod regpowers;
pub mod polycore;

pub use error::{Error, Result};
