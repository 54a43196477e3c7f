use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense univariate polynomial over `R`, coefficients stored low to high.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = Poly { ring, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, coeffs)
    }

    pub fn zero(ring: R) -> Self {
        Poly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `t`
    pub fn t(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        Self::new(ring, coeffs)
    }

    /// `t - root`
    pub fn linear(ring: R, root: &R::Elem) -> Self {
        let coeffs = vec![ring.neg(root), ring.one()];
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.ring.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ring.is_one(c))
    }

    /// Checks the shape required of a characteristic polynomial: monic of
    /// degree at least one.
    pub fn ensure_characteristic(&self) -> Result<usize> {
        if !self.is_monic() {
            return Err(Error::NotMonic(self.to_string()));
        }
        match self.degree() {
            Some(0) | None => Err(Error::DegreeZero),
            Some(d) => Ok(d),
        }
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&self.ring.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Self::new(self.ring.clone(), add_coeffs(&self.ring, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Poly { ring: self.ring.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Self::new(self.ring.clone(), mul_coeffs(&self.ring, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, x: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.mul(x, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn int_scale(&self, n: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.int_scale(n, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Reflected polynomial `t^deg · p(1/t)`: the coefficient list reversed.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    /// Product truncated to terms of degree `< len`.
    pub fn mul_truncated(&self, other: &Self, len: usize) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = vec![self.ring.zero(); len.min(self.coeffs.len() + other.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = self.ring.add(&out[i + j], &self.ring.mul(a, b));
            }
        }
        Ok(Self::new(self.ring.clone(), out))
    }

    /// Human-readable form, e.g. `t^2 - t - 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{body}*{mono}"));
            }
        }
        out
    }
}

/// Bracketed coefficient list, low to high: `[-1,-1,1]` is `t^2 - t - 1`.
impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn add_coeffs<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = ring.add(o, s);
    }
    out
}

pub(crate) fn mul_coeffs<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    out
}

/// The polynomial ring `R[t]`, used to run determinant algorithms over
/// polynomial entries.
///
/// [`Ring::inv`] only recognises constant units.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing<R: Ring> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }
}

impl<R: Ring> fmt::Display for PolyRing<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[t]", self.base)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R>;

    fn zero(&self) -> Poly<R> {
        Poly::zero(self.base.clone())
    }

    fn one(&self) -> Poly<R> {
        Poly::one(self.base.clone())
    }

    fn add(&self, x: &Poly<R>, y: &Poly<R>) -> Poly<R> {
        debug_assert!(x.ring == self.base && y.ring == self.base);
        Poly::new(self.base.clone(), add_coeffs(&self.base, &x.coeffs, &y.coeffs))
    }

    fn neg(&self, x: &Poly<R>) -> Poly<R> {
        x.neg()
    }

    fn mul(&self, x: &Poly<R>, y: &Poly<R>) -> Poly<R> {
        debug_assert!(x.ring == self.base && y.ring == self.base);
        Poly::new(self.base.clone(), mul_coeffs(&self.base, &x.coeffs, &y.coeffs))
    }

    fn from_int(&self, n: &BigInt) -> Poly<R> {
        Poly::constant(self.base.clone(), self.base.from_int(n))
    }

    fn inv(&self, x: &Poly<R>) -> Option<Poly<R>> {
        match x.degree() {
            Some(0) => self.base.inv(&x.coeffs[0]).map(|c| Poly::constant(self.base.clone(), c)),
            _ => None,
        }
    }

    fn is_zero(&self, x: &Poly<R>) -> bool {
        x.is_zero()
    }
}
