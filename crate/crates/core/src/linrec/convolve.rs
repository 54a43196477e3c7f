//! Term-level product formulas on equal-length prefixes.
//!
//! Each output term `c_n` depends only on `a_0..=a_n` and `b_0..=b_n`, so
//! the output prefix has the same length as the inputs.

use crate::ring::{binom, Ring};

pub(crate) fn termwise_sum<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

pub(crate) fn termwise_product<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().zip(b).map(|(x, y)| ring.mul(x, y)).collect()
}

pub(crate) fn cauchy<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| (0..=n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&a[i], &b[n - i]))))
        .collect()
}

/// `c_n = Σ_i C(n, i) a_i b_{n-i}`
pub(crate) fn hurwitz<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| {
            (0..=n).fold(ring.zero(), |acc, i| {
                let prod = ring.mul(&a[i], &b[n - i]);
                ring.add(&acc, &ring.int_scale(&binom(n, i), &prod))
            })
        })
        .collect()
}

/// `c_n = Σ_i C(n, i) a_i Σ_{j ≤ i} C(i, j) b_{n-j}`
pub(crate) fn newton<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| {
            (0..=n).fold(ring.zero(), |acc, i| {
                let inner = (0..=i).fold(ring.zero(), |s, j| ring.add(&s, &ring.int_scale(&binom(i, j), &b[n - j])));
                let term = ring.int_scale(&binom(n, i), &ring.mul(&a[i], &inner));
                ring.add(&acc, &term)
            })
        })
        .collect()
}
