use num_bigint::BigInt;
use proptest::prelude::*;
use recseq::linrec::{self, ProductKind};
use recseq::polymat::{poly_boxtimes, poly_otimes, poly_star, resultant_shift};
use recseq::verify::direct_product_oracle;
use recseq::{Integers, LinRec, Matrix, ModLinRec, ModRing, Poly, Ring};

const P: i64 = 10007;
const PREFIX: usize = 30;

fn zp() -> ModRing {
    ModRing::new(P).unwrap()
}

fn seq() -> impl Strategy<Value = ModLinRec> {
    (1usize..=3).prop_flat_map(|d| {
        (proptest::collection::vec(0..P, d), proptest::collection::vec(0..P, d)).prop_map(|(mut p, init)| {
            p.push(1);
            LinRec::from_i64s(zp(), &p, &init).unwrap()
        })
    })
}

fn zpoly(max_deg: usize) -> impl Strategy<Value = Poly<Integers>> {
    (1..=max_deg).prop_flat_map(|d| {
        proptest::collection::vec(-5i64..=5, d).prop_map(|mut c| {
            c.push(1);
            Poly::from_i64s(Integers::default(), &c)
        })
    })
}

fn prefix(s: &ModLinRec) -> Vec<BigInt> {
    s.terms(PREFIX)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bilinearity(a in seq(), b in seq(), c in seq()) {
        let bc = linrec::seq_sum(&b, &c).unwrap();
        for op in [ProductKind::Hurwitz, ProductKind::Newton] {
            let lhs = op.apply(&a, &bc).unwrap();
            let rhs = linrec::seq_sum(&op.apply(&a, &b).unwrap(), &op.apply(&a, &c).unwrap()).unwrap();
            prop_assert_eq!(prefix(&lhs), prefix(&rhs), "{}", op);
        }
    }

    #[test]
    fn commutative_and_associative(a in seq(), b in seq(), c in seq()) {
        let r = zp();
        let (ta, tb, tc) = (prefix(&a), prefix(&b), prefix(&c));
        for op in [ProductKind::Hurwitz, ProductKind::Newton] {
            prop_assert_eq!(direct_product_oracle(op, &r, &ta, &tb), direct_product_oracle(op, &r, &tb, &ta));
            let left = direct_product_oracle(op, &r, &direct_product_oracle(op, &r, &ta, &tb), &tc);
            let right = direct_product_oracle(op, &r, &ta, &direct_product_oracle(op, &r, &tb, &tc));
            prop_assert_eq!(left, right, "{}", op);
        }
    }

    #[test]
    fn closed_forms_match_oracles(a in seq(), b in seq()) {
        let r = zp();
        for op in ProductKind::ALL {
            let c = op.apply(&a, &b).unwrap();
            prop_assert_eq!(c.terms(PREFIX), direct_product_oracle(op, &r, &prefix(&a), &prefix(&b)), "{}", op);
        }
    }

    #[test]
    fn psi_round_trips(a in seq()) {
        prop_assert!(linrec::psi_inverse(&linrec::psi(&a)).agrees_with(&a, PREFIX));
        prop_assert!(linrec::psi(&linrec::psi_inverse(&a)).agrees_with(&a, PREFIX));
    }

    #[test]
    fn split_roots(u in 1..P, v in 1..P) {
        let r = zp();
        let (u, v) = (BigInt::from(u), BigInt::from(v));
        let a = LinRec::geometric(r.clone(), &u);
        let b = LinRec::geometric(r.clone(), &v);
        let sum = r.add(&u, &v);
        let cases = [
            (ProductKind::Hadamard, r.mul(&u, &v)),
            (ProductKind::Hurwitz, sum.clone()),
            (ProductKind::Newton, r.add(&sum, &r.mul(&u, &v))),
        ];
        for (op, root) in cases {
            let c = op.apply(&a, &b).unwrap();
            prop_assert_eq!(c.charpoly(), &Poly::linear(r.clone(), &root), "{}", op);
            prop_assert_eq!(c.terms(6), LinRec::geometric(r.clone(), &root).terms(6));
        }
    }

    #[test]
    fn degree_law(p in zpoly(3), q in zpoly(3)) {
        let want = p.degree().unwrap() * q.degree().unwrap();
        prop_assert_eq!(poly_otimes(&p, &q).unwrap().degree(), Some(want));
        prop_assert_eq!(poly_star(&p, &q).unwrap().degree(), Some(want));
        prop_assert_eq!(poly_boxtimes(&p, &q).unwrap().degree(), Some(want));
        prop_assert_eq!(resultant_shift(&p, &q).unwrap(), poly_star(&p, &q).unwrap());
    }

    #[test]
    fn kronecker_constructions_are_similarity_stable(p in zpoly(3), q in zpoly(3)) {
        let (a, b) = (Matrix::companion(&p).unwrap(), Matrix::companion(&q).unwrap());
        prop_assert_eq!(a.kron(&b).unwrap().charpoly(), b.kron(&a).unwrap().charpoly());
        prop_assert_eq!(a.kron_sum(&b).unwrap().charpoly(), b.kron_sum(&a).unwrap().charpoly());
        prop_assert_eq!(a.kron_newton(&b).unwrap().charpoly(), b.kron_newton(&a).unwrap().charpoly());
    }
}

#[test]
fn similarity_stable_mod_p() {
    let r = zp();
    let p = Poly::from_i64s(r.clone(), &[3, 9000, 1]);
    let q = Poly::from_i64s(r.clone(), &[17, 0, 2, 1]);
    let (a, b) = (Matrix::companion(&p).unwrap(), Matrix::companion(&q).unwrap());
    assert_eq!(a.kron(&b).unwrap().charpoly(), b.kron(&a).unwrap().charpoly());
    assert_eq!(a.kron_newton(&b).unwrap().charpoly(), b.kron_newton(&a).unwrap().charpoly());
}

#[test]
fn psi_of_delta_is_alternating() {
    let r = zp();
    let e = linrec::psi(&LinRec::delta(r.clone()));
    assert!(e.agrees_with(&LinRec::alternating_e(r), PREFIX));
}

#[test]
fn zero_divisors_do_not_break_closure() {
    let r = ModRing::new(12).unwrap();
    let a = LinRec::from_i64s(r.clone(), &[4, 6, 1], &[3, 8]).unwrap();
    let b = LinRec::from_i64s(r.clone(), &[9, 1], &[2]).unwrap();
    for op in ProductKind::ALL {
        let c = op.apply(&a, &b).unwrap();
        let direct = direct_product_oracle(op, &r, &a.terms(40), &b.terms(40));
        assert_eq!(c.terms(40), direct, "{op}");
    }
}
