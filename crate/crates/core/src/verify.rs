//! Brute-force checkers.
//!
//! Everything here works from the defining formulas on finite term
//! prefixes and deliberately avoids the closed-form machinery of
//! [`crate::linrec`]: the only shared pieces are ring arithmetic, the
//! binomial table and [`LinRec::terms`]. Results are reported as
//! [`CheckReport`]s.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linrec::{self, LinRec, ProductKind};
use crate::polymat::{Matrix, Poly, PolyRing};
use crate::ring::{binom, Ring};

/// Where a check first failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub context: String,
}

/// Result of one check. `passed` holds exactly when `first_failure` is
/// `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub first_failure: Option<Failure>,
    pub checked_prefix: usize,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, checked_prefix: usize) -> Self {
        CheckReport { name: name.into(), passed: true, first_failure: None, checked_prefix }
    }

    pub fn fail(name: impl Into<String>, checked_prefix: usize, failure: Failure) -> Self {
        CheckReport { name: name.into(), passed: false, first_failure: Some(failure), checked_prefix }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} (prefix {})", self.name, self.checked_prefix)?;
        if let Some(fail) = &self.first_failure {
            write!(f, ": index {} expected {} got {}", fail.index, fail.expected, fail.actual)?;
            if !fail.context.is_empty() {
                write!(f, " [{}]", fail.context)?;
            }
        }
        Ok(())
    }
}

fn first_mismatch<R: Ring>(expected: &[R::Elem], actual: &[R::Elem], context: &str) -> Option<Failure> {
    expected.iter().zip(actual).position(|(e, a)| e != a).map(|i| Failure {
        index: i,
        expected: expected[i].to_string(),
        actual: actual[i].to_string(),
        context: context.to_string(),
    })
}

/// Checks `a_n = Σ h_i a_{n-i}` for every `n` from `deg p` to the end of
/// the prefix, where `p = t^N - h_1 t^{N-1} - … - h_N`.
///
/// # Panics
/// If `p` is zero or the prefix is shorter than `deg p`.
pub fn satisfies_recurrence<R: Ring>(ring: &R, terms: &[R::Elem], p: &Poly<R>) -> CheckReport {
    let name = format!("recurrence {p}");
    let n = p.degree().expect("nonzero polynomial");
    assert!(terms.len() >= n, "prefix shorter than the recurrence order");
    let c = p.coeffs();
    let lead = &c[n];
    for idx in n..terms.len() {
        // lead·a_idx = -Σ_{k<n} c_k a_{idx-n+k}
        let mut rhs = ring.zero();
        for (k, ck) in c.iter().enumerate().take(n) {
            rhs = ring.sub(&rhs, &ring.mul(ck, &terms[idx - n + k]));
        }
        let lhs = ring.mul(lead, &terms[idx]);
        if lhs != rhs {
            return CheckReport::fail(
                name,
                terms.len(),
                Failure { index: idx, expected: rhs.to_string(), actual: lhs.to_string(), context: String::new() },
            );
        }
    }
    CheckReport::pass(name, terms.len())
}

/// Output prefix of one of the five products, straight from its
/// definition.
///
/// # Panics
/// If the prefixes differ in length.
pub fn direct_product_oracle<R: Ring>(op: ProductKind, ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.len(), b.len(), "oracle inputs must have equal length");
    let len = a.len();
    let mut out = Vec::with_capacity(len);
    for n in 0..len {
        let c = match op {
            ProductKind::Sum => ring.add(&a[n], &b[n]),
            ProductKind::Hadamard => ring.mul(&a[n], &b[n]),
            ProductKind::Cauchy => {
                let mut s = ring.zero();
                for i in 0..=n {
                    s = ring.add(&s, &ring.mul(&a[i], &b[n - i]));
                }
                s
            }
            ProductKind::Hurwitz => {
                let mut s = ring.zero();
                for i in 0..=n {
                    let term = ring.mul(&a[i], &b[n - i]);
                    s = ring.add(&s, &ring.int_scale(&binom(n, i), &term));
                }
                s
            }
            ProductKind::Newton => {
                let mut s = ring.zero();
                for i in 0..=n {
                    for j in 0..=i {
                        let coeff = binom(n, i) * binom(i, j);
                        let term = ring.mul(&a[i], &b[n - j]);
                        s = ring.add(&s, &ring.int_scale(&coeff, &term));
                    }
                }
                s
            }
        };
        out.push(c);
    }
    out
}

/// `(1, 1, 1, …)`
fn ones<R: Ring>(ring: &R, len: usize) -> Vec<R::Elem> {
    vec![ring.one(); len]
}

/// `((-1)^n)`
fn alternating<R: Ring>(ring: &R, len: usize) -> Vec<R::Elem> {
    (0..len).map(|n| if n % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) }).collect()
}

/// Checks that `p*(t)·A(t)` has no terms in degrees `deg p ..= deg p + extra`,
/// where `A` is the ordinary generating function of the prefix and `p*`
/// the reflected polynomial. This holds exactly when the sequence obeys the
/// recurrence of `p`.
pub fn ogf_poly_check_terms<R: Ring>(ring: &R, terms: &[R::Elem], p: &Poly<R>, extra: usize) -> CheckReport {
    let name = format!("ogf {p}");
    let n = p.degree().expect("nonzero polynomial");
    let top = n + extra;
    let len = terms.len().min(top + 1);
    let series = Poly::new(ring.clone(), terms[..len].to_vec());
    let reflected = p.reciprocal().expect("nonzero polynomial");
    // plain truncated convolution, coefficient by coefficient
    for d in n..=top.min(len.saturating_sub(1)) {
        let mut c = ring.zero();
        for k in 0..=d.min(n) {
            c = ring.add(&c, &ring.mul(&reflected.coeff(k), &series.coeff(d - k)));
        }
        if !ring.is_zero(&c) {
            return CheckReport::fail(
                name,
                len,
                Failure { index: d, expected: ring.zero().to_string(), actual: c.to_string(), context: "coefficient of t^index".into() },
            );
        }
    }
    CheckReport::pass(name, len)
}

/// [`ogf_poly_check_terms`] on a sequence's own characteristic polynomial,
/// using `deg + extra + 1` terms.
///
/// # Panics
/// If `extra` is zero.
pub fn ogf_poly_check<R: Ring>(a: &LinRec<R>, extra: usize) -> CheckReport {
    assert!(extra >= 1, "extra must be positive");
    let n = a.order();
    ogf_poly_check_terms(a.ring(), &a.terms(n + extra + 1), a.charpoly(), extra)
}

/// Which way a candidate morphism is supposed to carry products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `f(a ⊙ b) = f(a) ⊠ f(b)`
    HadamardToNewton,
    /// `f(a ⊠ b) = f(a) ⊙ f(b)`
    NewtonToHadamard,
}

/// The two named maps between the Hadamard and Newton algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismMap {
    /// `a ↦ a ⋆ e`
    Psi,
    /// `a ↦ a ⋆ 1`
    PsiInverse,
}

impl MorphismMap {
    pub fn name(self) -> &'static str {
        match self {
            MorphismMap::Psi => "psi",
            MorphismMap::PsiInverse => "psi-inverse",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            MorphismMap::Psi => Direction::HadamardToNewton,
            MorphismMap::PsiInverse => Direction::NewtonToHadamard,
        }
    }

    pub fn apply<R: Ring>(self, ring: &R, terms: &[R::Elem]) -> Vec<R::Elem> {
        let kernel = match self {
            MorphismMap::Psi => alternating(ring, terms.len()),
            MorphismMap::PsiInverse => ones(ring, terms.len()),
        };
        direct_product_oracle(ProductKind::Hurwitz, ring, terms, &kernel)
    }

    fn inverse(self) -> Self {
        match self {
            MorphismMap::Psi => MorphismMap::PsiInverse,
            MorphismMap::PsiInverse => MorphismMap::Psi,
        }
    }
}

/// Checks additivity, multiplicativity in the map's direction, and both
/// round trips with the inverse map, on `prefix`-term prefixes.
pub fn morphism_check<R: Ring>(map: MorphismMap, pairs: &[(LinRec<R>, LinRec<R>)], prefix: usize) -> CheckReport {
    let report = morphism_check_with(map.name(), |r: &R, t: &[R::Elem]| map.apply(r, t), map.direction(), pairs, prefix);
    if !report.passed {
        return report;
    }
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let ring = a.ring();
        for (which, seq) in [("a", a), ("b", b)] {
            let terms = seq.terms(prefix);
            let there = map.apply(ring, &terms);
            let back = map.inverse().apply(ring, &there);
            if let Some(f) = first_mismatch::<R>(&terms, &back, &format!("pair {idx}, round trip of {which}")) {
                return CheckReport::fail(map.name(), prefix, f);
            }
            let back = map.apply(ring, &map.inverse().apply(ring, &terms));
            if let Some(f) = first_mismatch::<R>(&terms, &back, &format!("pair {idx}, reverse round trip of {which}")) {
                return CheckReport::fail(map.name(), prefix, f);
            }
        }
    }
    report
}

/// Checks that an arbitrary term-level map is additive and multiplicative
/// in the given direction.
pub fn morphism_check_with<R, F>(
    name: &str,
    map: F,
    direction: Direction,
    pairs: &[(LinRec<R>, LinRec<R>)],
    prefix: usize,
) -> CheckReport
where
    R: Ring,
    F: Fn(&R, &[R::Elem]) -> Vec<R::Elem>,
{
    assert!(prefix >= 1, "prefix must be positive");
    let (source, target) = match direction {
        Direction::HadamardToNewton => (ProductKind::Hadamard, ProductKind::Newton),
        Direction::NewtonToHadamard => (ProductKind::Newton, ProductKind::Hadamard),
    };
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let ring = a.ring();
        if ring != b.ring() {
            let failure = Failure {
                index: 0,
                expected: ring.to_string(),
                actual: b.ring().to_string(),
                context: format!("pair {idx}, ring mismatch"),
            };
            return CheckReport::fail(name, prefix, failure);
        }
        let (ta, tb) = (a.terms(prefix), b.terms(prefix));
        let (fa, fb) = (map(ring, &ta), map(ring, &tb));

        let lhs = map(ring, &direct_product_oracle(ProductKind::Sum, ring, &ta, &tb));
        let rhs = direct_product_oracle(ProductKind::Sum, ring, &fa, &fb);
        if let Some(f) = first_mismatch::<R>(&rhs, &lhs, &format!("pair {idx}, additivity")) {
            return CheckReport::fail(name, prefix, f);
        }

        let lhs = map(ring, &direct_product_oracle(source, ring, &ta, &tb));
        let rhs = direct_product_oracle(target, ring, &fa, &fb);
        if let Some(f) = first_mismatch::<R>(&rhs, &lhs, &format!("pair {idx}, {source} to {target}")) {
            return CheckReport::fail(name, prefix, f);
        }
    }
    CheckReport::pass(name, prefix)
}

/// Newton inverse by solving `a ⊠ b = δ` one term at a time.
///
/// The coefficient of `b_n` in `(a ⊠ b)_n` is `Σ_i C(n, i) a_i`, so each step
/// divides by that value.
pub fn newton_back_substitution<R: Ring>(ring: &R, a: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let mut b: Vec<R::Elem> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut pivot = ring.zero();
        for (i, ai) in a.iter().enumerate().take(n + 1) {
            pivot = ring.add(&pivot, &ring.int_scale(&binom(n, i), ai));
        }
        let mut rest = ring.zero();
        for i in 0..=n {
            for j in 1..=i {
                let coeff = binom(n, i) * binom(i, j);
                rest = ring.add(&rest, &ring.int_scale(&coeff, &ring.mul(&a[i], &b[n - j])));
            }
        }
        let target = if n == 0 { ring.one() } else { ring.zero() };
        let pivot_inv = ring.inv(&pivot).ok_or(Error::NotInvertible { index: n })?;
        b.push(ring.mul(&pivot_inv, &ring.sub(&target, &rest)));
    }
    Ok(b)
}

/// Compares the closed-form Newton inverse with back-substitution and
/// checks `a ⊠ b = δ` on `k` terms.
pub fn inverse_check<R: Ring>(a: &LinRec<R>, k: usize) -> Result<CheckReport> {
    let name = "newton inverse";
    let ring = a.ring();
    let closed = linrec::newton_inverse(a, k)?.into_terms();
    let terms = a.terms(k);
    let solved = newton_back_substitution(ring, &terms)?;
    if let Some(f) = first_mismatch::<R>(&solved, &closed, "closed form vs back-substitution") {
        return Ok(CheckReport::fail(name, k, f));
    }
    let product = direct_product_oracle(ProductKind::Newton, ring, &terms, &closed);
    let delta: Vec<_> = (0..k).map(|n| if n == 0 { ring.one() } else { ring.zero() }).collect();
    if let Some(f) = first_mismatch::<R>(&delta, &product, "a ⊠ b against δ") {
        return Ok(CheckReport::fail(name, k, f));
    }
    Ok(CheckReport::pass(name, k))
}

/// Compares the direct Newton product with its assembly from binomial
/// transforms.
pub fn decomposition_check<R: Ring>(a: &LinRec<R>, b: &LinRec<R>, prefix: usize) -> Result<CheckReport> {
    let ring = a.ring();
    let direct = direct_product_oracle(ProductKind::Newton, ring, &a.terms(prefix), &b.terms(prefix));
    let mut via = linrec::newton_via_decomposition(a, b)?;
    let via = via.prefix(prefix)?;
    Ok(match first_mismatch::<R>(&direct, via, "direct vs decomposition") {
        Some(f) => CheckReport::fail("newton decomposition", prefix, f),
        None => CheckReport::pass("newton decomposition", prefix),
    })
}

/// Checks that the terms of a closed-form product agree with the direct
/// formula and obey the returned characteristic polynomial for `extra`
/// further terms.
pub fn closure_check<R: Ring>(op: ProductKind, a: &LinRec<R>, b: &LinRec<R>, extra: usize) -> Result<CheckReport> {
    let c = op.apply(a, b)?;
    let len = c.order() + extra;
    let ring = a.ring();
    let direct = direct_product_oracle(op, ring, &a.terms(len), &b.terms(len));
    let name = format!("{op} closure");
    if let Some(f) = first_mismatch::<R>(&direct, &c.terms(len), "direct vs closed form") {
        return Ok(CheckReport::fail(name, len, f));
    }
    let mut report = satisfies_recurrence(ring, &direct, c.charpoly());
    report.name = name;
    Ok(report)
}

/// `det(tI - M)` by Laplace expansion over `R[t]`. Exponential in the
/// dimension; meant for matrices up to about 6×6.
pub fn cofactor_charpoly<R: Ring>(m: &Matrix<R>) -> Poly<R> {
    let base = m.ring().clone();
    let prt = PolyRing::new(base.clone());
    let n = m.dim();
    let entries: Vec<Vec<Poly<R>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut c = vec![base.neg(m.get(i, j))];
                    if i == j {
                        c.push(base.one());
                    }
                    Poly::new(base.clone(), c)
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    laplace(&prt, &entries, 0, &cols)
}

fn laplace<S: Ring>(ring: &S, rows: &[Vec<S::Elem>], row: usize, cols: &[usize]) -> S::Elem {
    if cols.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &rows[row][c];
        if ring.is_zero(entry) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = ring.mul(entry, &laplace(ring, rows, row + 1, &rest));
        acc = if k % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}
