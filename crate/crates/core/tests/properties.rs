//! Property tests of the algebraic invariants.

use proptest::prelude::*;
use spin7_torsion::clifford::{clifford_apply, Spinor, SPIN_DIM};
use spin7_torsion::exterior::{blades, named, MultiVector, DIM};
use spin7_torsion::liealg::{act_on_form, act_on_spinor, bracket, in_spin7, in_spin7_clifford, rho, spin7_basis};
use spin7_torsion::scalars::{q, Scalar};
use spin7_torsion::spin7::{lee_form, project_8_48, scal_pair};

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| {
        a + b * Scalar::sqrt3() + c * Scalar::sqrt5() + d * Scalar::sqrt15()
    })
}

fn form(k: usize) -> impl Strategy<Value = MultiVector> {
    let n = blades(k).len();
    prop::collection::vec((0..n, rational()), 1..6).prop_map(move |terms| {
        let b = blades(k);
        let mut out = MultiVector::zero();
        for (i, c) in terms {
            out.add_term(b[i], c);
        }
        out
    })
}

fn spinor() -> impl Strategy<Value = Spinor> {
    prop::collection::vec(rational(), SPIN_DIM).prop_map(Spinor::from_coords)
}

fn spin7_element() -> impl Strategy<Value = MultiVector> {
    prop::collection::vec(rational(), 21).prop_map(|c| {
        spin7_basis()
            .elements
            .iter()
            .zip(c)
            .map(|(b, x)| b.scale(&x))
            .sum()
    })
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn scalar_order_is_compatible(a in scalar(), b in scalar()) {
        let d = &a - &b;
        prop_assert_eq!(a.cmp(&b), d.signum().cmp(&0));
        prop_assert!((a.to_f64() - b.to_f64() - d.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn wedge_graded_commutative(k in 1usize..4, l in 1usize..4, seed in any::<u64>()) {
        let mut s = spin7_torsion::sample::Sampler::new(seed);
        let (a, b) = (s.form(k), s.form(l));
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign(k * l)));
        let c = s.form(1);
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn contraction_is_an_antiderivation(v in form(1), a in form(2), b in form(3)) {
        let lhs = a.wedge(&b).contract_by(&v);
        let rhs = a.contract_by(&v).wedge(&b) + a.wedge(&b.contract_by(&v)).scale(&sign(2));
        prop_assert_eq!(lhs, rhs);
        let lhs = b.wedge(&a).contract_by(&v);
        let rhs = b.contract_by(&v).wedge(&a) + b.wedge(&a.contract_by(&v)).scale(&sign(3));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_is_an_isometry(k in 0usize..=8, seed in any::<u64>()) {
        let mut s = spin7_torsion::sample::Sampler::new(seed);
        let (a, b) = (s.form(k), s.form(k));
        prop_assert_eq!(a.hodge().norm2(), a.norm2());
        prop_assert_eq!(a.hodge().hodge(), a.scale(&sign(k * (DIM - k))));
        prop_assert_eq!(a.wedge(&b.hodge()), MultiVector::vol().scale(&a.inner(&b)));
    }

    #[test]
    fn clifford_square_of_a_vector(v in form(1), psi in spinor()) {
        let vv = clifford_apply(&v, &clifford_apply(&v, &psi));
        prop_assert_eq!(vv, psi.scale(&-v.norm2()));
    }

    #[test]
    fn clifford_action_is_linear(a in form(3), b in form(3), c in rational(), psi in spinor()) {
        let lhs = clifford_apply(&(a.clone() + b.scale(&c)), &psi);
        let rhs = clifford_apply(&a, &psi).add(&clifford_apply(&b, &psi).scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_times_form_expansion(i in 1usize..=8, k in 0usize..=5, seed in any::<u64>(), psi in spinor()) {
        let a = spin7_torsion::sample::Sampler::new(seed).form(k);
        let e = MultiVector::e(i);
        // With e_i² = −1 the contraction enters with a minus sign.
        let lhs = clifford_apply(&e.wedge(&a), &psi).sub(&clifford_apply(&a.contract_by(&e), &psi));
        prop_assert_eq!(lhs, clifford_apply(&e, &clifford_apply(&a, &psi)));
    }

    #[test]
    fn spin7_intertwines_vectors(x in spin7_element(), v in form(1), psi in spinor()) {
        let lhs = act_on_spinor(&x, &clifford_apply(&v, &psi))
            .sub(&clifford_apply(&v, &act_on_spinor(&x, &psi)));
        prop_assert_eq!(lhs, clifford_apply(&rho(&x, &v), &psi));
    }

    #[test]
    fn two_forms_intertwine_vectors(x in form(2), v in form(1), psi in spinor()) {
        let lhs = clifford_apply(&x, &clifford_apply(&v, &psi))
            .sub(&clifford_apply(&v, &clifford_apply(&x, &psi)));
        prop_assert_eq!(lhs, clifford_apply(&rho(&x, &v), &psi));
    }

    #[test]
    fn form_action_is_a_derivation(x in form(2), a in form(1), b in form(3)) {
        let lhs = act_on_form(&x, &a.wedge(&b));
        let rhs = act_on_form(&x, &a).wedge(&b) + a.wedge(&act_on_form(&x, &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_characterizations_agree(x in form(2), y in spin7_element()) {
        prop_assert_eq!(in_spin7(&x), in_spin7_clifford(&x));
        prop_assert!(in_spin7(&y) && in_spin7_clifford(&y));
    }

    #[test]
    fn spin7_preserves_phi(y in spin7_element()) {
        prop_assert!(act_on_form(&y, &named().big_phi).is_zero());
    }

    #[test]
    fn bracket_is_a_lie_bracket(x in spin7_element(), y in spin7_element(), z in form(2)) {
        prop_assert!(in_spin7(&bracket(&x, &y)));
        prop_assert_eq!(bracket(&x, &y), -bracket(&y, &x));
        let jacobi = bracket(&x, &bracket(&y, &z))
            + bracket(&y, &bracket(&z, &x))
            + bracket(&z, &bracket(&x, &y));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn scalar_curvature_and_lee_identities(t in form(3)) {
        let (t8, t48) = project_8_48(&t).unwrap();
        prop_assert!(t8.inner(&t48).is_zero());
        let (sg, sc) = scal_pair(&t).unwrap();
        prop_assert_eq!(sc, &sg - &(q(3, 2) * t.norm2()));
        prop_assert_eq!(lee_form(&t).unwrap().norm2(), q(36, 7) * t8.norm2());
        let pt = named().big_phi.wedge(&t);
        let sum: MultiVector = (1..=DIM)
            .map(|i| {
                let e = MultiVector::e(i);
                t.contract_by(&e).wedge(&pt.contract_by(&e))
            })
            .sum();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn forms_round_trip_through_text(k in 0usize..=4, seed in any::<u64>()) {
        let a = spin7_torsion::sample::Sampler::new(seed).form(k);
        prop_assert_eq!(a.to_string().parse::<MultiVector>().unwrap(), a);
    }
}
