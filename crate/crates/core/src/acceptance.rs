//! The acceptance suite: ten exact, seeded, randomized criteria covering
//! closure, the resultant identity, the Newton decomposition and inverse,
//! the generating-function criterion, the Hadamard/Newton isomorphism, the
//! polynomial semirings and the characteristic-polynomial routines.
//!
//! Shared by the `acceptance` test target and `recseq selftest`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linrec::{self, is_newton_invertible, newton_via_decomposition, LinRec, ProductKind};
use crate::polymat::{poly_boxtimes, poly_otimes, poly_star, resultant_shift, Matrix, Poly};
use crate::ring::Ring;
use crate::verify::{self, Direction, MorphismMap};
use crate::{Integers, ModRing, Rationals};

/// Modulus used for the randomized ℤ/m runs.
pub const MODULUS: u64 = 10007;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2}. {}: {}", self.id, self.title, self.detail)
    }
}

type Outcome = Result<String, String>;

fn finish(id: u8, title: &'static str, outcome: Outcome) -> CriterionResult {
    match outcome {
        Ok(detail) => CriterionResult { id, title, passed: true, detail },
        Err(detail) => CriterionResult { id, title, passed: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(r: verify::CheckReport, what: impl fmt::Display) -> Result<(), String> {
    ensure(r.passed, || format!("{what}: {r}"))
}

fn zmod() -> ModRing {
    ModRing::new(MODULUS).expect("modulus ≥ 2")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_mod_linrec(rng: &mut ChaCha8Rng, ring: &ModRing, degree: usize) -> LinRec<ModRing> {
    let mut p: Vec<BigInt> = (0..degree).map(|_| BigInt::from(rng.gen_range(0..MODULUS))).collect();
    p.push(BigInt::from(1));
    let init = (0..degree).map(|_| BigInt::from(rng.gen_range(0..MODULUS))).collect();
    LinRec::new(Poly::new(ring.clone(), p), init).expect("monic of positive degree")
}

fn small_fraction(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into())
}

fn random_q_linrec(rng: &mut ChaCha8Rng, degree: usize) -> LinRec<Rationals> {
    let q = Rationals::default();
    let mut p: Vec<BigRational> = (0..degree).map(|_| small_fraction(rng)).collect();
    p.push(q.one());
    let init = (0..degree).map(|_| small_fraction(rng)).collect();
    LinRec::new(Poly::new(q, p), init).expect("monic of positive degree")
}

fn random_monic<R: Ring>(rng: &mut ChaCha8Rng, ring: &R, degree: usize, coeff: impl Fn(&mut ChaCha8Rng) -> R::Elem) -> Poly<R> {
    let mut c: Vec<R::Elem> = (0..degree).map(|_| coeff(rng)).collect();
    c.push(ring.one());
    Poly::new(ring.clone(), c)
}

fn random_z_monic(rng: &mut ChaCha8Rng, degree: usize) -> Poly<Integers> {
    let z = Integers::default();
    random_monic(rng, &z, degree, |r| BigInt::from(r.gen_range(-5i64..=5)))
}

/// Random pairs over ℤ/10007 with degrees in {1, 2, 3}.
fn mod_pairs(seed: u64, count: usize) -> Vec<(LinRec<ModRing>, LinRec<ModRing>)> {
    let ring = zmod();
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            (random_mod_linrec(&mut rng, &ring, m), random_mod_linrec(&mut rng, &ring, n))
        })
        .collect()
}

fn q_pairs(seed: u64, count: usize) -> Vec<(LinRec<Rationals>, LinRec<Rationals>)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            (random_q_linrec(&mut rng, m), random_q_linrec(&mut rng, n))
        })
        .collect()
}

const SEED_HURWITZ: u64 = 1;
const SEED_RESULTANT: u64 = 2;
const SEED_NEWTON: u64 = 3;
const SEED_DECOMP: u64 = 4;
const SEED_INVERSE: u64 = 5;
const SEED_SUM: u64 = 61;
const SEED_HADAMARD: u64 = 62;
const SEED_CAUCHY: u64 = 63;
const SEED_PSI: u64 = 8;
const SEED_SEMIRING: u64 = 9;
const SEED_COMPANION: u64 = 10;

/// Closure harness: the direct-formula prefix of length `deg p_c + 20`
/// must match the closed form and satisfy `p_c`.
fn closure_run(op: ProductKind, seed: u64) -> Result<usize, String> {
    let pairs = mod_pairs(seed, 100);
    let ring = zmod();
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let p = match op {
            ProductKind::Sum | ProductKind::Cauchy => a.charpoly().mul(b.charpoly()),
            ProductKind::Hadamard => poly_otimes(a.charpoly(), b.charpoly()),
            ProductKind::Hurwitz => poly_star(a.charpoly(), b.charpoly()),
            ProductKind::Newton => poly_boxtimes(a.charpoly(), b.charpoly()),
        }
        .map_err(|e| format!("{op} pair {idx}: {e}"))?;
        let deg = p.degree().expect("nonzero");
        let len = deg + 20;
        let direct = verify::direct_product_oracle(op, &ring, &a.terms(len), &b.terms(len));
        report(verify::satisfies_recurrence(&ring, &direct, &p), format!("{op} pair {idx}"))?;
        let c = op.apply(a, b).map_err(|e| format!("{op} pair {idx}: {e}"))?;
        ensure(c.charpoly() == &p, || format!("{op} pair {idx}: closed-form charpoly differs"))?;
        ensure(c.terms(len) == direct, || format!("{op} pair {idx}: closed-form terms differ"))?;
    }
    Ok(pairs.len())
}

pub fn criterion_1_hurwitz_closure() -> CriterionResult {
    let outcome = closure_run(ProductKind::Hurwitz, SEED_HURWITZ)
        .map(|n| format!("{n} pairs over Zmod:{MODULUS}, prefix deg+20 obeys p_a ⋆ p_b"));
    finish(1, "Hurwitz closure", outcome)
}

pub fn criterion_2_resultant_identity() -> CriterionResult {
    let outcome = (|| {
        let mut rng = rng(SEED_RESULTANT);
        for idx in 0..50 {
            let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let (p, q) = (random_z_monic(&mut rng, m), random_z_monic(&mut rng, n));
            let lhs = resultant_shift(&p, &q).map_err(|e| e.to_string())?;
            let rhs = poly_star(&p, &q).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("pair {idx}: res {lhs} vs star {rhs} for p={p}, q={q}"))?;
        }
        Ok("50 monic pairs over Z, coefficients in [-5,5], degrees ≤ 3".to_string())
    })();
    finish(2, "Resultant identity", outcome)
}

pub fn criterion_3_newton_closure() -> CriterionResult {
    let outcome = (|| {
        let n = closure_run(ProductKind::Newton, SEED_NEWTON)?;
        let ring = zmod();
        let mut rng = rng(SEED_NEWTON + 100);
        for idx in 0..50 {
            let u = BigInt::from(rng.gen_range(1..MODULUS));
            let v = BigInt::from(rng.gen_range(1..MODULUS));
            let got = poly_boxtimes(&Poly::linear(ring.clone(), &u), &Poly::linear(ring.clone(), &v)).map_err(|e| e.to_string())?;
            let root = ring.add(&ring.add(&u, &v), &ring.mul(&u, &v));
            let want = Poly::linear(ring.clone(), &root);
            ensure(got == want, || format!("unit pair {idx}: ({u},{v}) gave {got}, want {want}"))?;
        }
        Ok(format!("{n} pairs obey p_a ⊠ p_b; 50 unit pairs give t-(u+v+uv)"))
    })();
    finish(3, "Newton closure and root law", outcome)
}

pub fn criterion_4_newton_decomposition() -> CriterionResult {
    fn run<R: Ring>(pairs: &[(LinRec<R>, LinRec<R>)], label: &str) -> Result<(), String> {
        for (idx, (a, b)) in pairs.iter().enumerate() {
            let direct = linrec::newton(a, b).map_err(|e| e.to_string())?.terms(30);
            let mut via = newton_via_decomposition(a, b).map_err(|e| e.to_string())?;
            let via = via.prefix(30).map_err(|e| e.to_string())?;
            ensure(direct == via, || format!("{label} pair {idx}: newton vs decomposition differ"))?;
            let oracle = verify::direct_product_oracle(ProductKind::Newton, a.ring(), &a.terms(30), &b.terms(30));
            ensure(oracle == direct, || format!("{label} pair {idx}: newton vs double-sum oracle differ"))?;
        }
        Ok(())
    }
    let outcome = (|| {
        run(&mod_pairs(SEED_DECOMP, 100), "Zmod")?;
        run(&q_pairs(SEED_DECOMP + 100, 20), "Q")?;
        Ok(format!("100 pairs over Zmod:{MODULUS} and 20 over Q, prefix 30"))
    })();
    finish(4, "Newton decomposition", outcome)
}

pub fn criterion_5_newton_inverse() -> CriterionResult {
    let outcome = (|| {
        let ring = zmod();
        let mut rng = rng(SEED_INVERSE);
        let mut accepted = 0;
        let mut rejected = 0;
        while accepted < 50 {
            let deg = rng.gen_range(1..=3);
            let a = random_mod_linrec(&mut rng, &ring, deg);
            if !is_newton_invertible(&a, 20).is_invertible() {
                rejected += 1;
                continue;
            }
            let r = verify::inverse_check(&a, 20).map_err(|e| e.to_string())?;
            report(r, format!("sequence {a}"))?;
            accepted += 1;
        }
        let q = Rationals::default();
        let one = LinRec::const_one(q);
        report(verify::inverse_check(&one, 20).map_err(|e| e.to_string())?, "1 over Q")?;
        let b = linrec::newton_inverse(&one, 20).map_err(|e| e.to_string())?.into_terms();
        let minus_half = BigRational::new((-1).into(), 2.into());
        for (n, bn) in b.iter().enumerate() {
            let want = q.pow(&minus_half, n as u64);
            ensure(*bn == want, || format!("1 over Q: b_{n} = {bn}, want {want}"))?;
        }
        Ok(format!("50 invertible sequences over Zmod:{MODULUS} ({rejected} skipped); 1 over Q gives (-1/2)^n"))
    })();
    finish(5, "Newton inverse", outcome)
}

pub fn criterion_6_classical_closure() -> CriterionResult {
    let outcome = (|| {
        closure_run(ProductKind::Sum, SEED_SUM)?;
        closure_run(ProductKind::Hadamard, SEED_HADAMARD)?;
        closure_run(ProductKind::Cauchy, SEED_CAUCHY)?;
        Ok("100 pairs each for sum, hadamard, cauchy".to_string())
    })();
    finish(6, "Hadamard/Cauchy/sum closure", outcome)
}

pub fn criterion_7_ogf_criterion() -> CriterionResult {
    let outcome = (|| {
        let runs = [
            (ProductKind::Hurwitz, SEED_HURWITZ),
            (ProductKind::Newton, SEED_NEWTON),
            (ProductKind::Sum, SEED_SUM),
            (ProductKind::Hadamard, SEED_HADAMARD),
            (ProductKind::Cauchy, SEED_CAUCHY),
        ];
        let ring = zmod();
        let mut checked = 0;
        for (op, seed) in runs {
            for (idx, (a, b)) in mod_pairs(seed, 100).iter().enumerate() {
                let c = op.apply(a, b).map_err(|e| e.to_string())?;
                report(verify::ogf_poly_check(&c, 50), format!("{op} pair {idx}"))?;
                // the same criterion on the independently computed terms
                let len = c.order() + 51;
                let direct = verify::direct_product_oracle(op, &ring, &a.terms(len), &b.terms(len));
                report(verify::ogf_poly_check_terms(&ring, &direct, c.charpoly(), 50), format!("{op} pair {idx} (direct)"))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} constructed sequences, extra = 50"))
    })();
    finish(7, "Generating-function criterion", outcome)
}

pub fn criterion_8_psi_isomorphism() -> CriterionResult {
    fn run<R: Ring>(pairs: &[(LinRec<R>, LinRec<R>)], label: &str) -> Result<(), String> {
        report(verify::morphism_check(MorphismMap::Psi, pairs, 30), format!("psi over {label}"))?;
        report(verify::morphism_check(MorphismMap::PsiInverse, pairs, 30), format!("psi-inverse over {label}"))?;
        for (idx, (a, _)) in pairs.iter().enumerate() {
            let there = linrec::psi(a);
            ensure(linrec::psi_inverse(&there).agrees_with(a, 30), || format!("{label} pair {idx}: closed-form round trip"))?;
        }
        let control = verify::morphism_check_with(
            "binomial transform as psi",
            |r: &R, t: &[R::Elem]| MorphismMap::PsiInverse.apply(r, t),
            Direction::HadamardToNewton,
            pairs,
            30,
        );
        ensure(!control.passed, || format!("negative control unexpectedly passed over {label}"))
    }
    let outcome = (|| {
        run(&q_pairs(SEED_PSI, 50), "Q")?;
        run(&mod_pairs(SEED_PSI + 100, 50), "Zmod")?;
        Ok("50 pairs over Q and Zmod each, prefix 30; negative control fails".to_string())
    })();
    finish(8, "Isomorphism psi", outcome)
}

pub fn criterion_9_semirings() -> CriterionResult {
    let outcome = (|| {
        let z = Integers::default();
        let mut rng = rng(SEED_SEMIRING);
        let one_root = Poly::linear(z, &BigInt::from(1));
        let t = Poly::t(z);
        type Op = fn(&Poly<Integers>, &Poly<Integers>) -> crate::Result<Poly<Integers>>;
        let ops: [(&str, Op); 3] = [("otimes", poly_otimes), ("star", poly_star), ("boxtimes", poly_boxtimes)];
        let err = |e: crate::Error| e.to_string();
        for idx in 0..30 {
            let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let (p, q) = (random_z_monic(&mut rng, m), random_z_monic(&mut rng, n));
            ensure(poly_otimes(&p, &one_root).map_err(err)? == p, || format!("{p} ⊗ (t-1)"))?;
            ensure(poly_star(&p, &t).map_err(err)? == p, || format!("{p} ⋆ t"))?;
            ensure(poly_boxtimes(&p, &t).map_err(err)? == p, || format!("{p} ⊠ t"))?;
            for (name, op) in ops {
                ensure(op(&p, &q).map_err(err)? == op(&q, &p).map_err(err)?, || format!("{name} not commutative at {idx}: {p}, {q}"))?;
            }
        }
        for idx in 0..20 {
            let degs: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=2)).collect();
            let (p, q, r) = (random_z_monic(&mut rng, degs[0]), random_z_monic(&mut rng, degs[1]), random_z_monic(&mut rng, degs[2]));
            for (name, op) in ops {
                let left = op(&op(&p, &q).map_err(err)?, &r).map_err(err)?;
                let right = op(&p, &op(&q, &r).map_err(err)?).map_err(err)?;
                ensure(left == right, || format!("{name} not associative at {idx}: {p}, {q}, {r}"))?;
                let lhs = op(&p.mul(&q).map_err(err)?, &r).map_err(err)?;
                let rhs = op(&p, &r).map_err(err)?.mul(&op(&q, &r).map_err(err)?).map_err(err)?;
                ensure(lhs == rhs, || format!("{name} not distributive at {idx}: {p}, {q}, {r}"))?;
            }
        }
        Ok("identities and commutativity on 30 pairs; associativity and distributivity on 20 triples".to_string())
    })();
    finish(9, "Semiring structure", outcome)
}

fn companion_round_trips<R: Ring>(ring: &R, seed: u64, coeff: impl Fn(&mut ChaCha8Rng) -> R::Elem) -> Result<Vec<Matrix<R>>, String> {
    let mut rng = rng(seed);
    let mut small = Vec::new();
    for idx in 0..100 {
        let deg = rng.gen_range(1..=5);
        let p = random_monic(&mut rng, ring, deg, &coeff);
        let c = Matrix::companion(&p).map_err(|e| e.to_string())?;
        ensure(c.charpoly() == p, || format!("{ring} polynomial {idx}: charpoly(companion({p})) = {}", c.charpoly()))?;
        if deg <= 4 {
            small.push(c);
        }
    }
    Ok(small)
}

/// Kronecker-type matrices of dimension ≤ 4 built from the operand pairs of
/// the closure criteria.
fn suite_kronecker_matrices() -> Result<Vec<Matrix<ModRing>>, String> {
    let mut out = Vec::new();
    for seed in [SEED_HURWITZ, SEED_NEWTON, SEED_HADAMARD, SEED_DECOMP] {
        for (a, b) in mod_pairs(seed, 100) {
            if a.order() * b.order() > 4 {
                continue;
            }
            let ca = Matrix::companion(a.charpoly()).map_err(|e| e.to_string())?;
            let cb = Matrix::companion(b.charpoly()).map_err(|e| e.to_string())?;
            out.push(ca.kron(&cb).map_err(|e| e.to_string())?);
            out.push(ca.kron_sum(&cb).map_err(|e| e.to_string())?);
            out.push(ca.kron_newton(&cb).map_err(|e| e.to_string())?);
            out.push(ca);
            out.push(cb);
        }
    }
    Ok(out)
}

fn berkowitz_vs_cofactor<R: Ring>(mats: &[Matrix<R>], label: &str) -> Result<(), String> {
    for (idx, m) in mats.iter().enumerate() {
        let fast = m.charpoly();
        let slow = verify::cofactor_charpoly(m);
        ensure(fast == slow, || format!("{label} matrix {idx} {m}: berkowitz {fast} vs cofactor {slow}"))?;
    }
    Ok(())
}

pub fn criterion_10_charpoly() -> CriterionResult {
    let outcome = (|| {
        let z = Integers::default();
        let zs = companion_round_trips(&z, SEED_COMPANION, |r| BigInt::from(r.gen_range(-20i64..=20)))?;
        let q = Rationals::default();
        let qs = companion_round_trips(&q, SEED_COMPANION + 1, small_fraction)?;
        let zm = zmod();
        let ms = companion_round_trips(&zm, SEED_COMPANION + 2, |r| BigInt::from(r.gen_range(0..MODULUS)))?;
        let z12 = ModRing::new(12).expect("modulus ≥ 2");
        let cs = companion_round_trips(&z12, SEED_COMPANION + 3, |r| BigInt::from(r.gen_range(0..12)))?;
        berkowitz_vs_cofactor(&zs, "Z")?;
        berkowitz_vs_cofactor(&qs, "Q")?;
        berkowitz_vs_cofactor(&ms, "Zmod")?;
        berkowitz_vs_cofactor(&cs, "Zmod:12")?;
        let kron = suite_kronecker_matrices()?;
        berkowitz_vs_cofactor(&kron, "Kronecker")?;
        let compared = zs.len() + qs.len() + ms.len() + cs.len() + kron.len();
        Ok(format!("400 round trips over Z, Q, Zmod:{MODULUS}, Zmod:12; {compared} matrices of dim ≤ 4 match cofactor expansion"))
    })();
    finish(10, "Companion round trip and Berkowitz oracle", outcome)
}

/// Every criterion, in order.
pub const CRITERIA: [fn() -> CriterionResult; 10] = [
    criterion_1_hurwitz_closure,
    criterion_2_resultant_identity,
    criterion_3_newton_closure,
    criterion_4_newton_decomposition,
    criterion_5_newton_inverse,
    criterion_6_classical_closure,
    criterion_7_ogf_criterion,
    criterion_8_psi_isomorphism,
    criterion_9_semirings,
    criterion_10_charpoly,
];

/// Runs all criteria, one thread each, and returns the results in order.
pub fn run_all() -> Vec<CriterionResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA.iter().map(|c| s.spawn(c)).collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    })
}
