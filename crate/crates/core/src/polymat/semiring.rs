//! Operations on monic polynomials induced by the sequence products.
//!
//! Each operation is the characteristic polynomial of a Kronecker-type
//! construction on companion matrices. When `p` and `q` split with roots
//! `α_i`, `β_j`, the results have roots `α_i β_j` ([`poly_otimes`]),
//! `α_i + β_j` ([`poly_star`]) and `α_i + β_j + α_i β_j`
//! ([`poly_boxtimes`]). Together with ordinary multiplication each gives a
//! semiring on monic polynomials, with identities `t - 1`, `t` and `t`.

use crate::error::{Error, Result};
use crate::polymat::{sylvester, Matrix, Poly, PolyRing};
use crate::ring::{binom, Ring};

fn companions<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<(Matrix<R>, Matrix<R>)> {
    p.ring().ensure_same(q.ring())?;
    Ok((Matrix::companion(p)?, Matrix::companion(q)?))
}

/// Characteristic polynomial of the Kronecker product of the companions.
pub fn poly_otimes<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>> {
    let (a, b) = companions(p, q)?;
    Ok(a.kron(&b)?.charpoly())
}

/// Characteristic polynomial of the Kronecker sum of the companions.
pub fn poly_star<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>> {
    let (a, b) = companions(p, q)?;
    Ok(a.kron_sum(&b)?.charpoly())
}

/// Characteristic polynomial of `A ⊗ I + I ⊗ B + A ⊗ B` on the companions.
pub fn poly_boxtimes<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>> {
    let (a, b) = companions(p, q)?;
    Ok(a.kron_newton(&b)?.charpoly())
}

/// Resultant of two monic polynomials of positive degree, as the
/// determinant of their Sylvester matrix.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<R::Elem> {
    f.ring().ensure_same(g.ring())?;
    f.ensure_characteristic()?;
    g.ensure_characteristic()?;
    Ok(sylvester(f.ring(), f.coeffs(), g.coeffs())?.det())
}

/// `res_x(p_a(x), p_b(t - x))` as a polynomial in `t`, normalised to be
/// monic of degree `deg p_a · deg p_b`.
///
/// The determinant is evaluated over `R[t]` without leaving the ring, so
/// this works when `R` has zero divisors.
pub fn resultant_shift<R: Ring>(pa: &Poly<R>, pb: &Poly<R>) -> Result<Poly<R>> {
    pa.ring().ensure_same(pb.ring())?;
    let m = pa.ensure_characteristic()?;
    let n = pb.ensure_characteristic()?;
    let base = pa.ring().clone();
    let prt = PolyRing::new(base.clone());

    let f: Vec<Poly<R>> = pa
        .coeffs()
        .iter()
        .map(|c| Poly::constant(base.clone(), c.clone()))
        .collect();

    // p_b(t - x) = Σ_k c_k Σ_j C(k, j) t^{k-j} (-x)^j; collect by powers of x
    let mut g: Vec<Vec<R::Elem>> = vec![vec![base.zero(); n + 1]; n + 1];
    for (k, c) in pb.coeffs().iter().enumerate() {
        for j in 0..=k {
            let mut term = base.int_scale(&binom(k, j), c);
            if j % 2 == 1 {
                term = base.neg(&term);
            }
            g[j][k - j] = base.add(&g[j][k - j], &term);
        }
    }
    let g: Vec<Poly<R>> = g.into_iter().map(|cs| Poly::new(base.clone(), cs)).collect();

    let res = sylvester(&prt, &f, &g)?.det();
    debug_assert_eq!(res.degree(), Some(m * n));
    match res.leading() {
        Some(lead) if base.is_one(lead) => Ok(res),
        Some(lead) if base.is_one(&base.neg(lead)) => Ok(res.neg()),
        // leading coefficient is ±1 by construction
        _ => match res.leading().and_then(|lead| base.inv(lead)) {
            Some(u) => Ok(res.scale(&u)),
            None => Err(Error::NotMonic(res.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, ModRing, Rationals};

    fn zp(c: &[i64]) -> Poly<Integers> {
        Poly::from_i64s(Integers::default(), c)
    }

    const FIB: &[i64] = &[-1, -1, 1];

    #[test]
    fn otimes_examples() {
        assert_eq!(poly_otimes(&zp(&[-2, 1]), &zp(&[-3, 1])).unwrap(), zp(&[-6, 1]));
        let p = zp(&[5, -2, 0, 1]);
        assert_eq!(poly_otimes(&p, &zp(&[-1, 1])).unwrap(), p);
        let sq = poly_otimes(&zp(FIB), &zp(FIB)).unwrap();
        // roots φ², ψ², -1, -1: (t² - 3t + 1)(t + 1)²
        assert_eq!(sq, zp(&[1, -3, 1]).mul(&zp(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn star_examples() {
        assert_eq!(poly_star(&zp(&[-1, 1]), &zp(&[-2, 1])).unwrap(), zp(&[-3, 1]));
        let p = zp(&[5, -2, 0, 1]);
        assert_eq!(poly_star(&p, &zp(&[0, 1])).unwrap(), p);
        let expected = zp(&[1, -2, 1]).mul(&zp(&[-4, -2, 1])).unwrap();
        assert_eq!(poly_star(&zp(FIB), &zp(FIB)).unwrap(), expected);
    }

    #[test]
    fn boxtimes_examples() {
        assert_eq!(poly_boxtimes(&zp(&[-1, 1]), &zp(&[-1, 1])).unwrap(), zp(&[-3, 1]));
        assert_eq!(poly_boxtimes(&zp(&[-2, 1]), &zp(&[-3, 1])).unwrap(), zp(&[-11, 1]));
        let p = zp(&[5, -2, 0, 1]);
        assert_eq!(poly_boxtimes(&p, &zp(&[0, 1])).unwrap(), p);
    }

    #[test]
    fn non_monic_rejected() {
        assert!(matches!(poly_star(&zp(&[1, 2]), &zp(&[0, 1])), Err(Error::NotMonic(_))));
        assert!(matches!(resultant(&zp(&[1, 2]), &zp(&[0, 1])), Err(Error::NotMonic(_))));
        assert!(matches!(resultant_shift(&zp(&[0, 1]), &zp(&[3])), Err(Error::NotMonic(_)) | Err(Error::DegreeZero)));
    }

    #[test]
    fn resultant_examples() {
        let z = Integers::default();
        let (a, b) = (7, -3);
        assert_eq!(resultant(&Poly::linear(z, &a.into()), &Poly::linear(z, &b.into())).unwrap(), 10.into());
        assert_eq!(resultant(&zp(&[-1, 0, 1]), &zp(&[-2, 1])).unwrap(), 3.into());
        let f = zp(&[2, -3, 1]);
        assert_eq!(resultant(&f, &f).unwrap(), 0.into());
    }

    #[test]
    fn resultant_shift_examples() {
        assert_eq!(resultant_shift(&zp(&[-1, 1]), &zp(&[-2, 1])).unwrap(), zp(&[-3, 1]));
        assert_eq!(resultant_shift(&zp(FIB), &zp(&[-1, 1])).unwrap(), zp(&[1, -3, 1]));
        assert_eq!(resultant_shift(&zp(FIB), &zp(FIB)).unwrap(), poly_star(&zp(FIB), &zp(FIB)).unwrap());
        // odd and even degree combinations exercise the sign normalisation
        let cubic = zp(&[1, 4, -2, 1]);
        assert_eq!(resultant_shift(&cubic, &zp(FIB)).unwrap(), poly_star(&cubic, &zp(FIB)).unwrap());
        assert_eq!(resultant_shift(&zp(FIB), &cubic).unwrap(), poly_star(&zp(FIB), &cubic).unwrap());
    }

    #[test]
    fn other_rings() {
        let r = ModRing::new(12).unwrap();
        let p = Poly::from_i64s(r.clone(), &[3, 5, 1]);
        let q = Poly::from_i64s(r.clone(), &[-4, 2, 0, 1]);
        assert_eq!(resultant_shift(&p, &q).unwrap(), poly_star(&p, &q).unwrap());
        let qr = Rationals::default();
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let p = Poly::linear(qr, &half);
        let q = Poly::linear(qr, &half);
        let expected = num_rational::BigRational::new(5.into(), 4.into());
        assert_eq!(poly_boxtimes(&p, &q).unwrap(), Poly::linear(qr, &expected));
    }
}
