//! Groebner bases and the ideal calculus built on them.

pub mod groebner;
pub mod ideal;
pub mod ops;
pub mod syzygy;

pub use groebner::{compute_groebner, is_reduced, normal_form, s_polynomial, satisfies_buchberger_criterion, Budget, GroebnerBasis};
pub use ideal::Ideal;
pub use ops::{
    eliminate, homogeneous_linear_basis, ideal_equal, ideal_power, ideal_quotient, intersect, minimal_generators,
    radical_membership, ring_map_kernel, saturation, truncation,
};
pub use syzygy::{syzygies, syzygy_degrees, VectorPolynomial};
