//! Exact arithmetic: prime fields, monomials and orders, polynomials,
//! polynomial matrices, and dense linear algebra over `F_p`.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use field::{FieldElem, PrimeField, DEFAULT_CHARACTERISTIC};
pub use matrix::{adjugate_pattern, delta, deltas, lemma_adj_check, EntryMismatch, PolyMatrix};
pub use monomial::{binomial, monomial_count, monomials_of_degree, Monomial, MonomialOrder, OrderKind};
pub use poly::{Polynomial, Term};
pub use ring::{same_ring, Ring, RingRef};
