//! Exact arithmetic on linear recurrent sequences over a commutative ring.
//!
//! Sequences are closed under the termwise sum and under the Hadamard,
//! Cauchy, Hurwitz (binomial convolution) and Newton (multinomial
//! convolution) products. For every result this crate returns an explicit
//! characteristic polynomial and initial conditions. It also computes
//! Newton-product inverses and binomial transforms, and it ships
//! brute-force checkers in [`verify`].
//!
//! The algebra is generic over [`Ring`]; the concrete rings are ℤ and ℚ
//! (backed by `num-bigint` / `num-rational` through [`Scalar`]) and ℤ/m for
//! any `m ≥ 2` ([`ModRing`]).
//!
//! ```
//! use recseq::{linrec, LinRec, Integers};
//!
//! let z = Integers::default();
//! let fib = LinRec::from_i64s(z, &[-1, -1, 1], &[0, 1]).unwrap();
//! let c = linrec::hurwitz(&fib, &fib).unwrap();
//! assert_eq!(c.order(), 4);
//! assert_eq!(c.term(4), 22.into());
//! ```

pub mod acceptance;
pub mod cli;
mod error;
pub mod linrec;
pub mod polymat;
pub mod ring;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use linrec::{LinRec, ProductKind, TermStream};
pub use polymat::{Matrix, Poly, PolyRing};
pub use ring::{binom, BaseRing, Exact, ModRing, Ring, RingSpec, Scalar};

/// ℤ with arbitrary-precision integers.
pub type Integers = Exact<BigInt>;
/// ℚ with reduced arbitrary-precision fractions.
pub type Rationals = Exact<BigRational>;
/// ℤ/mℤ.
pub type IntegersMod = ModRing;

pub type ZPoly = Poly<Integers>;
pub type QPoly = Poly<Rationals>;
pub type ModPoly = Poly<ModRing>;

pub type ZLinRec = LinRec<Integers>;
pub type QLinRec = LinRec<Rationals>;
pub type ModLinRec = LinRec<ModRing>;
