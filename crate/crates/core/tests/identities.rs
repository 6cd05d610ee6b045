//! Structural identities of the individual modules that are not random
//! properties: eigenspaces, orthogonal decompositions, isotropy dimensions.

use spin7_torsion::clifford::{psi0, rep, SPIN_DIM};
use spin7_torsion::exterior::{blades, named, MultiVector};
use spin7_torsion::liealg::{act_on_form, catalog, invariant_forms, iso_algebra, iso_dim};
use spin7_torsion::golden::family_samples;
use spin7_torsion::linalg::{nullspace, rank, sparse};
use spin7_torsion::sample::Sampler;
use spin7_torsion::scalars::{int, Scalar};
use spin7_torsion::spin7::{family, lambda8_generators, project_8_48, FAMILY_IDS};

fn eigenspace(m: &[Vec<Scalar>], lambda: i64) -> Vec<Vec<Scalar>> {
    let rows = (0..SPIN_DIM).map(|i| {
        let mut r = m[i].clone();
        r[i] -= int(lambda);
        sparse(&r)
    });
    nullspace(rows, SPIN_DIM)
}

#[test]
fn phi_eigenspaces_on_spinors() {
    let m = rep().matrix(&named().big_phi);
    let minus = eigenspace(&m, -14);
    assert_eq!(minus.len(), 1);
    assert_eq!(rank(&[minus[0].clone(), psi0().coords.clone()]), 1);
    // Φ acts on Δ₊ with eigenvalues −14 (once) and 2, and annihilates Δ₋.
    assert_eq!(eigenspace(&m, 2).len(), 7);
    assert_eq!(eigenspace(&m, 0).len(), 8);
}

#[test]
fn square_roots_multiply_exactly() {
    assert_eq!(Scalar::sqrt3().square(), int(3));
    assert_eq!(Scalar::sqrt5().square(), int(5));
    assert_eq!(Scalar::sqrt3() * Scalar::sqrt5(), Scalar::sqrt15());
}

#[test]
fn lambda8_is_orthogonal_to_lambda48() {
    let phi = &named().big_phi;
    // γ ∈ Λ³₄₈ ⇔ γ ∧ Φ = 0: project random forms onto that kernel.
    let mut s = Sampler::new(11);
    let mut found = 0;
    while found < 20 {
        let (_, gamma) = project_8_48(&s.form(3)).unwrap();
        assert!(gamma.wedge(phi).is_zero());
        for i in 1..=8 {
            let beta = MultiVector::e(i).wedge(phi).hodge();
            assert!(beta.inner(&gamma).is_zero());
        }
        found += 1;
    }
    // The generators ∗(eᵢ ∧ Φ) span Λ³₈ itself.
    for (i, g) in lambda8_generators().iter().enumerate() {
        let direct = MultiVector::e(i + 1).wedge(phi).hodge();
        assert_eq!(rank(&[g.coords(3), direct.coords(3)]), 1);
    }
}

#[test]
fn projections_are_idempotent() {
    let mut s = Sampler::new(12);
    for _ in 0..20 {
        let t = s.form(3);
        let (t8, t48) = project_8_48(&t).unwrap();
        assert_eq!(project_8_48(&t8).unwrap(), (t8.clone(), MultiVector::zero()));
        assert_eq!(project_8_48(&t48).unwrap(), (MultiVector::zero(), t48.clone()));
        assert!(t8.inner(&t48).is_zero());
    }
}

/// Dimension of the stabilizer of `t` in all of so(8).
fn so8_stabilizer_dim(t: &MultiVector) -> usize {
    let images: Vec<Vec<Scalar>> = blades(2)
        .into_iter()
        .map(|m| act_on_form(&MultiVector::blade(m, int(1)), t).coords(3))
        .collect();
    28 - rank(&images)
}

/// Random su_c(2)-invariant 3-forms have isotropy of dimension at least four;
/// su(2)-invariant ones generically have isotropy exactly su(2).
#[test]
fn isotropy_of_invariant_forms() {
    let mut s = Sampler::new(13);
    let su2c = invariant_forms(&catalog("su2c").unwrap(), 3);
    for _ in 0..200 {
        let t: MultiVector = su2c.iter().map(|b| b.scale(&s.rational())).sum();
        if !t.is_zero() {
            assert!(iso_dim(&t) >= 4, "su2c: {t}");
        }
    }
    let su2 = catalog("su2").unwrap();
    let basis = invariant_forms(&su2, 3);
    assert_eq!(basis.len(), 16);
    let mut small = 0;
    for _ in 0..200 {
        let t: MultiVector = basis.iter().map(|b| b.scale(&s.rational())).sum();
        if t.is_zero() {
            continue;
        }
        let d = iso_dim(&t);
        assert!(d >= 3 && su2.is_subalgebra_of(&iso_algebra(&t).unwrap()));
        small += (d == 3) as usize;
    }
    assert!(small > 100, "{small}");
    // An explicit form: the su(2)-fixed 2-forms wedged with three distinct
    // fixed vectors, plus a fixed 3-form; its full so(8) stabilizer is su(2).
    let e = MultiVector::e;
    let t = (MultiVector::basis(&[1, 2]) + MultiVector::basis(&[3, 4])).wedge(&e(5))
        + (MultiVector::basis(&[1, 3]) - MultiVector::basis(&[2, 4])).wedge(&e(6)).scale(&int(2))
        + (MultiVector::basis(&[1, 4]) + MultiVector::basis(&[2, 3])).wedge(&e(7)).scale(&int(3))
        + MultiVector::basis(&[5, 6, 8]);
    assert!(su2.basis.iter().all(|x| act_on_form(x, &t).is_zero()));
    assert_eq!(so8_stabilizer_dim(&t), 3);
    assert_eq!(iso_dim(&t), 3);
}

#[test]
fn families_have_the_assigned_isotropy() {
    for id in FAMILY_IDS {
        let f = family(id).unwrap();
        let g = catalog(&f.iso).unwrap();
        assert_eq!(g.rank(), f.iso_dim);
        for p in family_samples(id).into_iter().filter(|p| f.admissible_params(p)) {
            let t = f.evaluate(&p);
            assert!(g.is_subalgebra_of(&iso_algebra(&t).unwrap()));
            // The 5.1 family contains the g2 torsion at b1 = b2 = 0.
            let g2_point = id == "5.1" && p[1].is_zero() && p[2].is_zero();
            let want = if g2_point { 14 } else { f.iso_dim };
            assert_eq!(iso_dim(&t), want, "{id} at {p:?}");
            assert!(so8_stabilizer_dim(&t) >= want);
        }
    }
}

#[test]
fn excluded_loci_enlarge_the_isotropy() {
    for id in FAMILY_IDS {
        let f = family(id).unwrap();
        let g = catalog(&f.iso).unwrap();
        let n = f.param_names.len();
        for locus in &f.exclusions {
            let rows = locus.equations.iter().map(|e| sparse(e));
            for point in nullspace(rows, n) {
                let t = f.evaluate(&point);
                let iso = iso_algebra(&t).unwrap();
                assert!(g.is_subalgebra_of(&iso), "{id} on {}", locus.text);
                assert!(iso.rank() > f.iso_dim, "{id} on {}: dim {}", locus.text, iso.rank());
            }
        }
    }
}
