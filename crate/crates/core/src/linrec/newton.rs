//! Binomial transforms, the decomposition of the Newton product through
//! them, Newton inverses, and the map carrying the Hadamard algebra onto
//! the Newton algebra.

use crate::error::{Error, Result};
use crate::linrec::{convolve, hadamard, hurwitz, LinRec, TermStream};
use crate::ring::{binom, Ring};

/// `a ⋆ 1`, i.e. `t ↦ Σ_s C(t, s) a_s`.
pub fn binomial_transform<R: Ring>(a: &LinRec<R>) -> LinRec<R> {
    hurwitz(a, &LinRec::const_one(a.ring().clone())).expect("same ring")
}

/// `a ⋆ e`, undoing [`binomial_transform`] since `e ⋆ 1 = δ`.
pub fn inverse_binomial_transform<R: Ring>(a: &LinRec<R>) -> LinRec<R> {
    hurwitz(a, &LinRec::alternating_e(a.ring().clone())).expect("same ring")
}

/// `ψ(a) = a ⋆ e`, an isomorphism from `(+, ⊙)` onto `(+, ⊠)`.
pub fn psi<R: Ring>(a: &LinRec<R>) -> LinRec<R> {
    inverse_binomial_transform(a)
}

/// `ψ⁻¹(a) = a ⋆ 1`.
pub fn psi_inverse<R: Ring>(a: &LinRec<R>) -> LinRec<R> {
    binomial_transform(a)
}

/// The Newton product assembled as `[(a ⋆ 1) ⊙ (b ⋆ 1)] ⋆ e`.
///
/// Every step is a closed-form product, so the returned stream is backed
/// by a recurrence and extends indefinitely.
pub fn newton_via_decomposition<R: Ring>(a: &LinRec<R>, b: &LinRec<R>) -> Result<TermStream<R>> {
    a.ring().ensure_same(b.ring())?;
    let inner = hadamard(&binomial_transform(a), &binomial_transform(b))?;
    Ok(inverse_binomial_transform(&inner).stream())
}

/// Outcome of the Newton invertibility test on a prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonInvertibility {
    pub depth: usize,
    /// First `t` where `Σ_s C(t, s) a_s` is not a unit. This is the
    /// condition the inverse formula needs.
    pub first_failure: Option<usize>,
    /// First `t` where `a_t` itself is not a unit.
    pub first_non_unit_term: Option<usize>,
}

impl NewtonInvertibility {
    pub fn is_invertible(&self) -> bool {
        self.first_failure.is_none()
    }

    /// Whether "every term is a unit" would have given a different verdict
    /// on this prefix.
    pub fn termwise_condition_agrees(&self) -> bool {
        self.first_failure.is_some() == self.first_non_unit_term.is_some()
    }

    /// First prefix length at which the two conditions give different
    /// verdicts, as an index.
    pub fn first_disagreement(&self) -> Option<usize> {
        match (self.first_failure, self.first_non_unit_term) {
            (Some(x), Some(y)) if x == y => None,
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        }
    }
}

fn transform_values<R: Ring>(a: &LinRec<R>, depth: usize) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let ring = a.ring();
    let terms = a.terms(depth);
    let ones = vec![ring.one(); depth];
    (convolve::hurwitz(ring, &terms, &ones), terms)
}

/// Checks whether each `Σ_s C(t, s) a_s` with `t < depth` is a unit.
///
/// # Panics
/// If `depth` is zero.
pub fn is_newton_invertible<R: Ring>(a: &LinRec<R>, depth: usize) -> NewtonInvertibility {
    assert!(depth >= 1, "depth must be positive");
    let ring = a.ring();
    let (values, terms) = transform_values(a, depth);
    NewtonInvertibility {
        depth,
        first_failure: values.iter().position(|v| !ring.is_unit(v)),
        first_non_unit_term: terms.iter().position(|v| !ring.is_unit(v)),
    }
}

/// First `k` terms of the inverse of `a` for the Newton product,
/// `b_n = (-1)^n Σ_t C(n, t) (-1)^t / Σ_s C(t, s) a_s`.
pub fn newton_inverse<R: Ring>(a: &LinRec<R>, k: usize) -> Result<TermStream<R>> {
    let ring = a.ring();
    let (values, _) = transform_values(a, k);
    let mut recips = Vec::with_capacity(k);
    for (t, v) in values.iter().enumerate() {
        recips.push(ring.inv(v).ok_or(Error::NotInvertible { index: t })?);
    }
    let terms = (0..k)
        .map(|n| {
            let mut acc = ring.zero();
            for (t, d) in recips.iter().enumerate().take(n + 1) {
                let term = ring.int_scale(&binom(n, t), d);
                // (-1)^n (-1)^t = (-1)^(n - t)
                if (n - t) % 2 == 0 {
                    acc = ring.add(&acc, &term);
                } else {
                    acc = ring.sub(&acc, &term);
                }
            }
            acc
        })
        .collect();
    Ok(TermStream::from_terms(ring.clone(), terms))
}
