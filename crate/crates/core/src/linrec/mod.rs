//! Linear recurrent sequences and their algebra.
//!
//! A [`LinRec`] is a monic characteristic polynomial
//! `p(t) = t^N - h_1 t^{N-1} - … - h_N` together with the initial terms
//! `a_0, …, a_{N-1}`; every later term is `a_n = Σ_{i=1}^{N} h_i a_{n-i}`.
//!
//! The products build their results in closed form: the characteristic
//! polynomial comes from [`crate::polymat`] and the initial terms from the
//! defining convolution formulas. The polynomials are not reduced to the
//! minimal recurrence.

mod convolve;
mod newton;
mod products;
mod stream;

use std::fmt;

use crate::error::{Error, Result};
use crate::polymat::Poly;
use crate::ring::Ring;

pub use newton::{
    binomial_transform, inverse_binomial_transform, is_newton_invertible, newton_inverse,
    newton_via_decomposition, psi, psi_inverse, NewtonInvertibility,
};
pub use products::{cauchy, hadamard, hurwitz, newton, seq_sum, ProductKind};
pub use stream::TermStream;

/// Default length of the prefixes on which sequences are compared.
pub const DEFAULT_PREFIX: usize = 30;

/// A linear recurrent sequence in closed form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinRec<R: Ring> {
    charpoly: Poly<R>,
    initial: Vec<R::Elem>,
}

impl<R: Ring> LinRec<R> {
    /// `charpoly` must be monic of degree `N ≥ 1` and `initial` must hold
    /// exactly `N` terms.
    pub fn new(charpoly: Poly<R>, initial: Vec<R::Elem>) -> Result<Self> {
        let n = charpoly.ensure_characteristic()?;
        if initial.len() != n {
            return Err(Error::InitLength { expected: n, found: initial.len() });
        }
        Ok(LinRec { charpoly, initial })
    }

    pub fn from_i64s(ring: R, charpoly: &[i64], initial: &[i64]) -> Result<Self> {
        let initial = initial.iter().map(|&x| ring.from_i64(x)).collect();
        Self::new(Poly::from_i64s(ring, charpoly), initial)
    }

    /// The all-ones sequence `(1, 1, 1, …)`, recurring with `t - 1`.
    pub fn const_one(ring: R) -> Self {
        let init = vec![ring.one()];
        let p = Poly::linear(ring.clone(), &ring.one());
        LinRec { charpoly: p, initial: init }
    }

    /// `((-1)^n)`, recurring with `t + 1`.
    pub fn alternating_e(ring: R) -> Self {
        let init = vec![ring.one()];
        let p = Poly::linear(ring.clone(), &ring.neg(&ring.one()));
        LinRec { charpoly: p, initial: init }
    }

    /// `(1, 0, 0, …)`, recurring with `t`. Identity for the Cauchy,
    /// Hurwitz and Newton products.
    pub fn delta(ring: R) -> Self {
        let init = vec![ring.one()];
        LinRec { charpoly: Poly::t(ring), initial: init }
    }

    /// The zero sequence, written with `t` and initial term `0`.
    pub fn zero(ring: R) -> Self {
        let init = vec![ring.zero()];
        LinRec { charpoly: Poly::t(ring), initial: init }
    }

    /// Geometric sequence `(r^n)`, recurring with `t - r`.
    pub fn geometric(ring: R, ratio: &R::Elem) -> Self {
        let init = vec![ring.one()];
        LinRec { charpoly: Poly::linear(ring, ratio), initial: init }
    }

    pub fn ring(&self) -> &R {
        self.charpoly.ring()
    }

    pub fn charpoly(&self) -> &Poly<R> {
        &self.charpoly
    }

    pub fn initial(&self) -> &[R::Elem] {
        &self.initial
    }

    /// Order `N` of the recurrence, the degree of the characteristic
    /// polynomial.
    pub fn order(&self) -> usize {
        self.initial.len()
    }

    /// `h_1, …, h_N` with `a_n = Σ h_i a_{n-i}`.
    pub fn recurrence_coeffs(&self) -> Vec<R::Elem> {
        let n = self.order();
        let ring = self.ring();
        (1..=n).map(|i| ring.neg(&self.charpoly.coeffs()[n - i])).collect()
    }

    /// First `k` terms.
    pub fn terms(&self, k: usize) -> Vec<R::Elem> {
        let mut out: Vec<R::Elem> = self.initial.iter().take(k).cloned().collect();
        let h = self.recurrence_coeffs();
        let ring = self.ring();
        while out.len() < k {
            let n = out.len();
            let next = h
                .iter()
                .enumerate()
                .fold(ring.zero(), |acc, (i, hi)| ring.add(&acc, &ring.mul(hi, &out[n - 1 - i])));
            out.push(next);
        }
        out
    }

    pub fn term(&self, n: usize) -> R::Elem {
        self.terms(n + 1).pop().expect("at least one term")
    }

    pub fn stream(&self) -> TermStream<R> {
        TermStream::from_linrec(self.clone())
    }

    /// Whether the first `len` terms coincide.
    pub fn agrees_with(&self, other: &Self, len: usize) -> bool {
        self.ring() == other.ring() && self.terms(len) == other.terms(len)
    }
}

/// Command-line syntax, `ring=<spec>;p=[c0,…,cN];init=[a0,…,a{N-1}]`.
impl<R: Ring> fmt::Display for LinRec<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring={};p={};init=[", self.ring(), self.charpoly)?;
        for (i, x) in self.initial.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, ModRing, Rationals};
    use num_bigint::BigInt;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn generated_terms() {
        let z = Integers::default();
        let fib = LinRec::from_i64s(z, &[-1, -1, 1], &[0, 1]).unwrap();
        assert_eq!(fib.terms(7), ints(&[0, 1, 1, 2, 3, 5, 8]));
        assert_eq!(fib.terms(1), ints(&[0]));
        assert_eq!(fib.terms(0), ints(&[]));
        assert_eq!(fib.term(10), BigInt::from(55));
        let pow2 = LinRec::from_i64s(z, &[-2, 1], &[1]).unwrap();
        assert_eq!(pow2.terms(5), ints(&[1, 2, 4, 8, 16]));
        assert_eq!(LinRec::const_one(z).terms(3), ints(&[1, 1, 1]));
    }

    #[test]
    fn basic_sequences() {
        let z = Integers::default();
        assert_eq!(LinRec::const_one(z).terms(4), ints(&[1, 1, 1, 1]));
        assert_eq!(LinRec::alternating_e(z).terms(4), ints(&[1, -1, 1, -1]));
        assert_eq!(LinRec::delta(z).terms(4), ints(&[1, 0, 0, 0]));
        assert_eq!(LinRec::zero(z).terms(3), ints(&[0, 0, 0]));
        let r = ModRing::new(5).unwrap();
        assert_eq!(LinRec::alternating_e(r).terms(3), ints(&[1, 4, 1]));
    }

    #[test]
    fn construction_errors() {
        let z = Integers::default();
        assert_eq!(
            LinRec::from_i64s(z, &[-1, -1, 1], &[0]),
            Err(Error::InitLength { expected: 2, found: 1 })
        );
        assert!(matches!(LinRec::from_i64s(z, &[-1, -1, 2], &[0, 1]), Err(Error::NotMonic(_))));
        assert_eq!(LinRec::from_i64s(z, &[1], &[]), Err(Error::DegreeZero));
    }

    #[test]
    fn display() {
        let fib = LinRec::from_i64s(Rationals::default(), &[-1, -1, 1], &[0, 1]).unwrap();
        assert_eq!(fib.to_string(), "ring=Q;p=[-1,-1,1];init=[0,1]");
        let fib = LinRec::from_i64s(ModRing::new(7).unwrap(), &[-1, -1, 1], &[0, 1]).unwrap();
        assert_eq!(fib.to_string(), "ring=Zmod:7;p=[6,6,1];init=[0,1]");
    }
}
