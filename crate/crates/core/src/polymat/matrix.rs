use std::fmt;

use crate::error::{Error, Result};
use crate::polymat::Poly;
use crate::ring::Ring;

/// Dense square matrix over `R`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    n: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(ring: R, n: usize) -> Self {
        let entries = vec![ring.zero(); n * n];
        Matrix { ring, n, entries }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn diagonal(ring: R, diag: Vec<R::Elem>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(ring, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    /// Builds a matrix from rows; panics unless the rows form a square.
    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { ring, n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64s(ring: R, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R::Elem) {
        self.entries[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<R::Elem>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Companion matrix of a monic `p` of degree `d ≥ 1`: ones on the
    /// subdiagonal, `-c_0, …, -c_{d-1}` down the last column.
    pub fn companion(p: &Poly<R>) -> Result<Self> {
        let d = p.ensure_characteristic()?;
        let ring = p.ring().clone();
        let mut m = Self::zero(ring, d);
        for i in 1..d {
            m.set(i, i - 1, m.ring.one());
        }
        for i in 0..d {
            let c = m.ring.neg(&p.coeffs()[i]);
            m.set(i, d - 1, c);
        }
        Ok(m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        assert_eq!(self.n, other.n, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(self.ring.clone(), n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if self.ring.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.entries[idx] = self.ring.add(&out.entries[idx], &self.ring.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] · other`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        let (m, n) = (self.n, other.n);
        let size = m * n;
        let mut out = Self::zero(self.ring.clone(), size);
        for i in 0..m {
            for j in 0..m {
                let a = self.get(i, j);
                if self.ring.is_zero(a) {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        out.entries[(i * n + k) * size + j * n + l] = self.ring.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A ⊗ I_n + I_m ⊗ B`; eigenvalues are the pairwise sums.
    pub fn kron_sum(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        let left = self.kron(&Self::identity(self.ring.clone(), other.n))?;
        let right = Self::identity(self.ring.clone(), self.n).kron(other)?;
        left.add(&right)
    }

    /// `A ⊗ I_n + I_m ⊗ B + A ⊗ B`; eigenvalues are `α + β + αβ`.
    pub fn kron_newton(&self, other: &Self) -> Result<Self> {
        self.kron_sum(other)?.add(&self.kron(other)?)
    }

    /// `det(tI - M)`, by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> Poly<R> {
        let ring = &self.ring;
        let n = self.n;
        if n == 0 {
            return Poly::one(ring.clone());
        }
        // coefficients high to low of the charpoly of the trailing submatrix
        let mut v = vec![ring.one(), ring.neg(self.get(n - 1, n - 1))];
        for k in (0..n - 1).rev() {
            let s = n - k - 1;
            let a = self.get(k, k);
            let row: Vec<_> = (k + 1..n).map(|j| self.get(k, j).clone()).collect();
            let mut col: Vec<_> = (k + 1..n).map(|i| self.get(i, k).clone()).collect();

            let mut diags = Vec::with_capacity(s + 2);
            diags.push(ring.one());
            diags.push(ring.neg(a));
            for step in 0..s {
                if step > 0 {
                    col = (0..s)
                        .map(|i| {
                            let mut acc = ring.zero();
                            for (j, c) in col.iter().enumerate() {
                                acc = ring.add(&acc, &ring.mul(self.get(k + 1 + i, k + 1 + j), c));
                            }
                            acc
                        })
                        .collect();
                }
                let dot = row.iter().zip(&col).fold(ring.zero(), |acc, (r, c)| ring.add(&acc, &ring.mul(r, c)));
                diags.push(ring.neg(&dot));
            }

            // lower-triangular Toeplitz (s+2)×(s+1) times v
            let next: Vec<_> = (0..s + 2)
                .map(|i| {
                    let mut acc = ring.zero();
                    for (j, vj) in v.iter().enumerate().take(i + 1) {
                        acc = ring.add(&acc, &ring.mul(&diags[i - j], vj));
                    }
                    acc
                })
                .collect();
            v = next;
        }
        v.reverse();
        Poly::new(ring.clone(), v)
    }

    /// Determinant, read off the constant term of the characteristic
    /// polynomial.
    pub fn det(&self) -> R::Elem {
        let c0 = self.charpoly().coeff(0);
        if self.n % 2 == 0 {
            c0
        } else {
            self.ring.neg(&c0)
        }
    }

    pub fn map_ring<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix { ring, n: self.n, entries: self.entries.iter().map(f).collect() }
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`): `n` shifted
/// rows of `f` followed by `m` shifted rows of `g`, coefficients high to low.
pub fn sylvester<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Result<Matrix<R>> {
    if f.len() < 2 || g.len() < 2 {
        return Err(Error::DegreeZero);
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut out = Matrix::zero(ring.clone(), size);
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            out.set(r, r + k, c.clone());
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            out.set(n + r, r + k, c.clone());
        }
    }
    Ok(out)
}
