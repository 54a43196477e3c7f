//! Polynomials and square matrices over a ring, companion matrices,
//! Kronecker constructions, and the polynomial operations derived from
//! them.

mod matrix;
mod poly;
mod semiring;

pub use matrix::{sylvester, Matrix};
pub use poly::{Poly, PolyRing};
pub use semiring::{poly_boxtimes, poly_otimes, poly_star, resultant, resultant_shift};
