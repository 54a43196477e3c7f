use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linrec::{convolve, LinRec};
use crate::polymat::{poly_boxtimes, poly_otimes, poly_star, Poly};
use crate::ring::Ring;

/// The five binary operations under which linear recurrent sequences are
/// closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Sum,
    Hadamard,
    Cauchy,
    Hurwitz,
    Newton,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Sum,
        ProductKind::Hadamard,
        ProductKind::Cauchy,
        ProductKind::Hurwitz,
        ProductKind::Newton,
    ];

    pub fn apply<R: Ring>(self, a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
        match self {
            ProductKind::Sum => seq_sum(a, b),
            ProductKind::Hadamard => hadamard(a, b),
            ProductKind::Cauchy => cauchy(a, b),
            ProductKind::Hurwitz => hurwitz(a, b),
            ProductKind::Newton => newton(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Sum => "sum",
            ProductKind::Hadamard => "hadamard",
            ProductKind::Cauchy => "cauchy",
            ProductKind::Hurwitz => "hurwitz",
            ProductKind::Newton => "newton",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown product `{s}`")))
    }
}

type TermRule<R> = fn(&R, &[<R as Ring>::Elem], &[<R as Ring>::Elem]) -> Vec<<R as Ring>::Elem>;

fn close<R: Ring>(a: &LinRec<R>, b: &LinRec<R>, charpoly: Poly<R>, rule: TermRule<R>) -> Result<LinRec<R>> {
    let n = charpoly.ensure_characteristic()?;
    let ring = a.ring();
    let initial = rule(ring, &a.terms(n), &b.terms(n));
    LinRec::new(charpoly, initial)
}

/// Termwise sum; recurs with `p_a · p_b`.
pub fn seq_sum<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
    let p = a.charpoly().mul(b.charpoly())?;
    close(a, b, p, convolve::termwise_sum::<R>)
}

/// Convolution `c_n = Σ a_i b_{n-i}`; recurs with `p_a · p_b`.
pub fn cauchy<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
    let p = a.charpoly().mul(b.charpoly())?;
    close(a, b, p, convolve::cauchy::<R>)
}

/// Termwise product; recurs with `p_a ⊗ p_b`.
pub fn hadamard<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
    let p = poly_otimes(a.charpoly(), b.charpoly())?;
    close(a, b, p, convolve::termwise_product::<R>)
}

/// Binomial convolution `c_n = Σ C(n,i) a_i b_{n-i}`; recurs with
/// `p_a ⋆ p_b`, whose roots are the sums `α_i + β_j`.
pub fn hurwitz<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
    let p = poly_star(a.charpoly(), b.charpoly())?;
    close(a, b, p, convolve::hurwitz::<R>)
}

/// Multinomial convolution `c_n = Σ_i Σ_{j≤i} C(n,i) C(i,j) a_i b_{n-j}`;
/// recurs with `p_a ⊠ p_b`, whose roots are `α_i + β_j + α_i β_j`.
pub fn newton<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<LinRec<R>> {
    let p = poly_boxtimes(a.charpoly(), b.charpoly())?;
    close(a, b, p, convolve::newton::<R>)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, ModRing, Rationals};
    use num_bigint::BigInt;

    fn z() -> Integers {
        Integers::default()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn fib() -> LinRec<Integers> {
        LinRec::from_i64s(z(), &[-1, -1, 1], &[0, 1]).unwrap()
    }

    fn geo(r: i64) -> LinRec<Integers> {
        LinRec::geometric(z(), &r.into())
    }

    #[test]
    fn sum_examples() {
        let s = seq_sum(&fib(), &geo(2)).unwrap();
        assert_eq!(s.charpoly(), &Poly::from_i64s(z(), &[2, 1, -3, 1]));
        assert_eq!(s.terms(6), ints(&[1, 3, 5, 10, 19, 37]));
        let s = seq_sum(&fib(), &LinRec::zero(z())).unwrap();
        assert_eq!(s.terms(12), fib().terms(12));
        assert_eq!(s.charpoly(), &fib().charpoly().mul(&Poly::t(z())).unwrap());
        let s = seq_sum(&LinRec::const_one(z()), &LinRec::alternating_e(z())).unwrap();
        assert_eq!(s.terms(5), ints(&[2, 0, 2, 0, 2]));
    }

    #[test]
    fn cauchy_examples() {
        let one = LinRec::const_one(z());
        let c = cauchy(&one, &one).unwrap();
        assert_eq!(c.terms(5), ints(&[1, 2, 3, 4, 5]));
        assert_eq!(c.charpoly(), &Poly::from_i64s(z(), &[1, -2, 1]));
        assert_eq!(cauchy(&LinRec::delta(z()), &fib()).unwrap().terms(15), fib().terms(15));
        assert_eq!(cauchy(&fib(), &one).unwrap().terms(6), ints(&[0, 1, 2, 4, 7, 12]));
    }

    #[test]
    fn hadamard_examples() {
        let h = hadamard(&geo(2), &geo(3)).unwrap();
        assert_eq!(h.charpoly(), &Poly::from_i64s(z(), &[-6, 1]));
        assert_eq!(h.terms(4), ints(&[1, 6, 36, 216]));
        let h = hadamard(&fib(), &LinRec::const_one(z())).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.terms(10), fib().terms(10));
        let h = hadamard(&fib(), &fib()).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.terms(8), ints(&[0, 1, 1, 4, 9, 25, 64, 169]));
    }

    #[test]
    fn hurwitz_examples() {
        let h = hurwitz(&LinRec::const_one(z()), &geo(2)).unwrap();
        assert_eq!(h.charpoly(), &Poly::from_i64s(z(), &[-3, 1]));
        assert_eq!(h.terms(5), ints(&[1, 3, 9, 27, 81]));
        assert_eq!(hurwitz(&LinRec::delta(z()), &fib()).unwrap().terms(12), fib().terms(12));
        let h = hurwitz(&fib(), &fib()).unwrap();
        // c_n = (2^n L_n - 2) / 5 with L the Lucas numbers
        assert_eq!(h.terms(6), ints(&[0, 0, 2, 6, 22, 70]));
        let expected = Poly::from_i64s(z(), &[1, -2, 1]).mul(&Poly::from_i64s(z(), &[-4, -2, 1])).unwrap();
        assert_eq!(h.charpoly(), &expected);
    }

    #[test]
    fn newton_examples() {
        let one = LinRec::const_one(z());
        let n = newton(&one, &one).unwrap();
        assert_eq!(n.charpoly(), &Poly::from_i64s(z(), &[-3, 1]));
        assert_eq!(n.terms(4), ints(&[1, 3, 9, 27]));
        assert_eq!(newton(&LinRec::delta(z()), &fib()).unwrap().terms(12), fib().terms(12));
        assert_eq!(newton(&fib(), &LinRec::delta(z())).unwrap().terms(12), fib().terms(12));
        let n = newton(&geo(2), &geo(3)).unwrap();
        assert_eq!(n.charpoly(), &Poly::from_i64s(z(), &[-11, 1]));
        assert_eq!(n.terms(3), ints(&[1, 11, 121]));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = LinRec::const_one(ModRing::new(7).unwrap());
        let b = LinRec::const_one(ModRing::new(11).unwrap());
        for kind in ProductKind::ALL {
            assert!(matches!(kind.apply(&a, &b), Err(Error::RingMismatch { .. })), "{kind}");
        }
    }

    #[test]
    fn kind_names() {
        for kind in ProductKind::ALL {
            assert_eq!(kind.name().parse::<ProductKind>().unwrap(), kind);
        }
        assert!("star".parse::<ProductKind>().is_err());
    }

    #[test]
    fn rational_split_roots() {
        let q = Rationals::default();
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let a = LinRec::geometric(q, &half);
        let b = LinRec::geometric(q, &half);
        let n = newton(&a, &b).unwrap();
        let expected = num_rational::BigRational::new(5.into(), 4.into());
        assert_eq!(n.charpoly(), &Poly::linear(q, &expected));
        assert_eq!(n.term(2), &expected * &expected);
    }
}
