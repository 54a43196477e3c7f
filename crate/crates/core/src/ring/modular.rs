use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BaseRing, Ring, RingSpec};
use crate::error::{Error, Result};

/// ℤ/mℤ for an arbitrary modulus `m ≥ 2`, prime or not.
///
/// Residues are kept in `[0, m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModRing {
    modulus: BigInt,
}

impl ModRing {
    pub fn new(modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::parse(0, format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(ModRing { modulus })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn reduce(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.modulus)
    }
}

impl fmt::Debug for ModRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModRing({})", self.modulus)
    }
}

impl fmt::Display for ModRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zmod:{}", self.modulus)
    }
}

impl Ring for ModRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let s = x + y;
        if s >= self.modulus {
            s - &self.modulus
        } else {
            s
        }
    }

    fn neg(&self, x: &BigInt) -> BigInt {
        if x.is_zero() {
            BigInt::zero()
        } else {
            &self.modulus - x
        }
    }

    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let d = x - y;
        if d < BigInt::zero() {
            d + &self.modulus
        } else {
            d
        }
    }

    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        (x * y) % &self.modulus
    }

    fn from_int(&self, n: &BigInt) -> BigInt {
        self.reduce(n)
    }

    fn inv(&self, x: &BigInt) -> Option<BigInt> {
        let e = x.extended_gcd(&self.modulus);
        if e.gcd.is_one() {
            Some(self.reduce(&e.x))
        } else {
            None
        }
    }
}

impl BaseRing for ModRing {
    fn spec(&self) -> RingSpec {
        RingSpec::IntegersMod(self.modulus.clone())
    }

    fn parse_elem(&self, text: &str) -> std::result::Result<BigInt, String> {
        let t = text.trim();
        let bad = || format!("invalid {self} element `{t}`");
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(|n| self.reduce(&n)).map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                let d_inv = self
                    .inv(&self.reduce(&d))
                    .ok_or_else(|| format!("denominator {d} is not a unit in {self}"))?;
                Ok(self.mul(&self.reduce(&n), &d_inv))
            }
        }
    }
}
