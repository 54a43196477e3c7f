//! Exact commutative rings with identity.
//!
//! Rings are context objects: a value implementing [`Ring`] knows how to
//! combine its elements, and elements carry no ring information of their
//! own. Containers ([`crate::Poly`], [`crate::Matrix`], [`crate::LinRec`])
//! hold their ring next to the elements and refuse to mix rings.

mod binomial;
mod modular;
mod scalar;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use binomial::{binom, binomial_table, BinomialTable};
pub use modular::ModRing;
pub use scalar::{Exact, Scalar};

/// A commutative ring with identity and exact arithmetic.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Image of an integer under the canonical map ℤ → R.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// Multiplicative inverse, or `None` when `x` is not a unit.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// `n·x`, computed as the image of `n` times `x`.
    fn int_scale(&self, n: &BigInt, x: &Self::Elem) -> Self::Elem {
        if n.is_zero() {
            return self.zero();
        }
        if n.is_one() {
            return x.clone();
        }
        self.mul(&self.from_int(n), x)
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.inv(x).is_some()
    }

    /// Checked inverse.
    fn try_inv(&self, x: &Self::Elem) -> Result<Self::Elem> {
        self.inv(x).ok_or_else(|| Error::NotAUnit(format!("{x} in {self}")))
    }

    /// Fails with [`Error::RingMismatch`] unless both rings are identical.
    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

/// A ring that sequences can be written over: one of ℤ, ℚ, ℤ/m.
///
/// Adds the textual element syntax used by the command line.
pub trait BaseRing: Ring {
    fn spec(&self) -> RingSpec;

    /// Parses an element literal. Integers are accepted by every ring,
    /// fractions `p/q` only by rings where `q` is a unit.
    fn parse_elem(&self, text: &str) -> std::result::Result<Self::Elem, String>;
}

/// Descriptor of a concrete base ring, as written on the command line:
/// `Z`, `Q`, `Zmod:<m>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersMod(BigInt),
}

impl RingSpec {
    pub fn integers_mod(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::parse(0, format!("modulus must be at least 2, got {m}")));
        }
        Ok(RingSpec::IntegersMod(m))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("Z"),
            RingSpec::Rationals => f.write_str("Q"),
            RingSpec::IntegersMod(m) => write!(f, "Zmod:{m}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        match t {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            _ => {
                let Some(m) = t.strip_prefix("Zmod:") else {
                    return Err(Error::parse(lead, format!("unknown ring `{t}`")));
                };
                let pos = lead + 5;
                let m: BigInt = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("invalid modulus `{m}`")))?;
                if m.is_negative() || m < BigInt::from(2) {
                    return Err(Error::parse(pos, format!("modulus must be at least 2, got {m}")));
                }
                Ok(RingSpec::IntegersMod(m))
            }
        }
    }
}
