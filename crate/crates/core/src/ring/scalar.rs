use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use super::{BaseRing, Ring, RingSpec};

/// An arbitrary-precision number type whose own arithmetic is a ring.
///
/// Anything satisfying the `num-traits` numeric bounds plus an exact
/// embedding of ℤ and a unit test can back an [`Exact`] ring.
pub trait Scalar:
    Num + Signed + Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Ring name in command-line syntax.
    const SPEC: RingSpec;

    fn from_bigint(n: &BigInt) -> Self;

    fn unit_inverse(&self) -> Option<Self>;

    fn parse_literal(text: &str) -> Option<Self>;
}

impl Scalar for BigInt {
    const SPEC: RingSpec = RingSpec::Integers;

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        // only ±1 are units of ℤ
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn parse_literal(text: &str) -> Option<Self> {
        text.parse().ok()
    }
}

impl Scalar for BigRational {
    const SPEC: RingSpec = RingSpec::Rationals;

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_literal(text: &str) -> Option<Self> {
        match text.split_once('/') {
            None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    None
                } else {
                    // Ratio::new reduces and normalises the sign of the denominator
                    Some(BigRational::new(n, d))
                }
            }
        }
    }
}

/// The ring formed by a [`Scalar`] type under its own arithmetic.
#[derive(Default, PartialEq, Eq, Hash)]
pub struct Exact<T>(PhantomData<T>);

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Exact<T> {}

impl<T> Exact<T> {
    pub const fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T: Scalar> fmt::Debug for Exact<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Exact({})", T::SPEC)
    }
}

impl<T: Scalar> fmt::Display for Exact<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", T::SPEC)
    }
}

impl<T: Scalar> Ring for Exact<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, x: &T, y: &T) -> T {
        x.clone() + y.clone()
    }

    fn neg(&self, x: &T) -> T {
        -x.clone()
    }

    fn sub(&self, x: &T, y: &T) -> T {
        x.clone() - y.clone()
    }

    fn mul(&self, x: &T, y: &T) -> T {
        x.clone() * y.clone()
    }

    fn from_int(&self, n: &BigInt) -> T {
        T::from_bigint(n)
    }

    fn inv(&self, x: &T) -> Option<T> {
        x.unit_inverse()
    }

    fn is_zero(&self, x: &T) -> bool {
        x.is_zero()
    }
}

impl<T: Scalar> BaseRing for Exact<T> {
    fn spec(&self) -> RingSpec {
        T::SPEC
    }

    fn parse_elem(&self, text: &str) -> Result<T, String> {
        T::parse_literal(text.trim()).ok_or_else(|| format!("invalid {} element `{}`", T::SPEC, text.trim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, Rationals};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_arithmetic() {
        let r = Rationals::default();
        assert_eq!(r.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(r.inv(&q(2, 3)), Some(q(3, 2)));
        assert_eq!(r.inv(&q(0, 1)), None);
        assert_eq!(r.int_scale(&binom_4_2(), &q(1, 6)), q(1, 1));
        let x = q(-4, 6);
        assert_eq!(x, q(2, -3));
        assert_eq!(x.denom(), &BigInt::from(3));
    }

    fn binom_4_2() -> BigInt {
        crate::ring::binom(4, 2)
    }

    #[test]
    fn integer_arithmetic() {
        let z = Integers::default();
        let x = BigInt::from(3);
        let y = BigInt::from(-4);
        assert_eq!(z.mul(&x, &y), BigInt::from(-12));
        assert_eq!(z.mul(&x, &z.one()), x);
        assert_eq!(z.neg(&z.neg(&y)), y);
        assert_eq!(z.add(&x, &z.zero()), x);
        assert_eq!(z.inv(&BigInt::from(2)), None);
        assert!(matches!(z.try_inv(&BigInt::from(2)), Err(crate::Error::NotAUnit(_))));
        assert_eq!(z.inv(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(z.int_scale(&BigInt::zero(), &x), BigInt::zero());
    }

    #[test]
    fn literals() {
        let r = Rationals::default();
        assert_eq!(r.parse_elem("3/4").unwrap(), q(3, 4));
        assert_eq!(r.parse_elem("-12").unwrap(), q(-12, 1));
        assert_eq!(r.parse_elem("6/-4").unwrap(), q(-3, 2));
        assert!(r.parse_elem("1/0").is_err());
        let z = Integers::default();
        assert!(z.parse_elem("3/4").is_err());
        assert_eq!(z.parse_elem(" -12 ").unwrap(), BigInt::from(-12));
        assert_eq!(q(3, 4).to_string(), "3/4");
        assert_eq!(q(4, 2).to_string(), "2");
    }
}
