//! Minimal free resolutions, Betti tables, regularity and Hilbert data.

pub mod hilbert;
pub mod resolution;

pub use hilbert::{
    ambient_dimension, clear_pole, hilbert_data, hilbert_function, hilbert_function_quotient, monomial_numerator,
    series_coefficients, standard_monomial_count, HilbertData,
};
pub use resolution::{
    free_resolution, has_linear_resolution, ideal_regularity, is_linearly_presented, quotient_regularity, regularity,
    Convention, GradedBettiTable,
};
