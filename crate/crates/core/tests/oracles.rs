//! Independent oracles: every value here is computed in test code, without
//! the engine's own formula tables, and compared with the engine.

#![allow(clippy::needless_range_loop)]

use spin7_torsion::classify::re_f;
use spin7_torsion::curvature::build_rc;
use spin7_torsion::exterior::{mask_indices, named, sigma_t, MultiVector};
use spin7_torsion::liealg::{catalog, killing_form, p, skew};
use spin7_torsion::scalars::{int, q, Scalar};
use spin7_torsion::spin7::{family, ricci_g_relation, ricci_solver, RicciOutcome, RicciTensor};

/// Sign of the permutation sorting `v` (distinct entries), by counting inversions.
fn perm_sign(v: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn terms(a: &MultiVector) -> Vec<(Vec<usize>, Scalar)> {
    a.terms().map(|(m, c)| (mask_indices(m), c.clone())).collect()
}

#[test]
fn phi_wedge_phi_by_term_expansion() {
    let phi = terms(&named().big_phi);
    assert_eq!(phi.len(), 14);
    let mut total = Scalar::zero();
    for (a, x) in &phi {
        for (b, y) in &phi {
            if a.iter().any(|i| b.contains(i)) {
                continue;
            }
            let merged: Vec<usize> = a.iter().chain(b).copied().collect();
            total += x * y * int(perm_sign(&merged));
        }
    }
    assert_eq!(total, int(14));
    assert_eq!(spin7_torsion::golden::phi_wedge_phi_constant(), int(14));
}

#[test]
fn re_f_by_complex_expansion() {
    // Expand (e1 + i e2)(e3 + i e4)(e5 + i e6)(e7 + i e8) with Gaussian integer
    // coefficients; indices are already increasing in every product.
    let mut acc: Vec<(Vec<usize>, (i64, i64))> = vec![(vec![], (1, 0))];
    for k in 0..4 {
        let mut next = Vec::new();
        for (idx, (re, im)) in &acc {
            let mut a = idx.clone();
            a.push(2 * k + 1);
            next.push((a, (*re, *im)));
            let mut b = idx.clone();
            b.push(2 * k + 2);
            next.push((b, (-im, *re)));
        }
        acc = next;
    }
    let mut want = MultiVector::zero();
    for (idx, (re, _)) in acc {
        if re != 0 {
            want = want + MultiVector::basis(&idx).scale(&int(re));
        }
    }
    assert_eq!(re_f(), want);
    assert_eq!(want.len(), 8);
    assert!(want.terms().all(|(_, c)| *c == int(1) || *c == int(-1)));
}

/// `tr(ad x ∘ ad y)` on su(2) = span(P5, P6, P7) via plain matrix commutators.
#[test]
fn su2_killing_form_negative_definite() {
    let basis = [p(5), p(6), p(7)];
    let mats: Vec<Vec<Vec<Scalar>>> = basis.iter().map(skew).collect();
    let comm = |a: &Vec<Vec<Scalar>>, b: &Vec<Vec<Scalar>>| {
        let n = a.len();
        let mut c = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j] += &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j];
                }
            }
        }
        c
    };
    // Coordinates of a matrix in the basis, by least entries: solve with
    // the Frobenius inner product (the basis is orthogonal).
    let ip = |a: &Vec<Vec<Scalar>>, b: &Vec<Vec<Scalar>>| -> Scalar {
        a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| x * y).sum()
    };
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            if i != j {
                assert!(ip(a, b).is_zero());
            }
        }
    }
    let coords = |m: &Vec<Vec<Scalar>>| -> Vec<Scalar> {
        mats.iter().map(|b| ip(m, b).checked_div(&ip(b, b)).unwrap()).collect()
    };
    let ad = |x: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = mats.iter().map(|b| coords(&comm(x, b))).collect();
        (0..3).map(|r| (0..3).map(|c| cols[c][r].clone()).collect()).collect()
    };
    let mut kf = vec![vec![Scalar::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (ai, aj) = (ad(&mats[i]), ad(&mats[j]));
            kf[i][j] = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).map(|(r, c)| &ai[r][c] * &aj[c][r]).sum();
        }
    }
    let engine = killing_form(&catalog("su2").unwrap()).unwrap();
    assert_eq!(engine.inertia, (0, 3, 0));
    for i in 0..3 {
        assert!(kf[i][i].is_negative());
        for j in 0..3 {
            if i != j {
                assert!(kf[i][j].is_zero());
            }
        }
    }
    // The engine's matrix agrees up to the overall scale of its basis.
    let ratio = engine.matrix[0][0].checked_div(&kf[0][0]).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(engine.matrix[i][j], &kf[i][j] * &ratio);
        }
    }
}

#[test]
fn sigma_examples() {
    assert!(sigma_t(&MultiVector::basis(&[5, 6, 7])).unwrap().is_zero());
    let n = named();
    let t = n.z.wedge(&MultiVector::e(7)) + n.d.clone();
    assert!(!sigma_t(&t).unwrap().is_zero());
    // Seven orthonormal terms with coefficients ±1.
    assert_eq!(t.len(), 7);
    assert_eq!(t.norm2(), int(7));
}

/// `S_ij = Σ_{a,b} T(e_i, e_a, e_b) T(e_j, e_a, e_b)` from the coefficients.
fn torsion_square(t: &MultiVector) -> Vec<Vec<Scalar>> {
    let mut s = vec![vec![Scalar::zero(); 8]; 8];
    let entries = terms(t);
    for (idx_a, x) in &entries {
        for (idx_b, y) in &entries {
            // Each term contributes for every choice of the free slot.
            for &i in idx_a {
                for &j in idx_b {
                    let ra: Vec<usize> = idx_a.iter().copied().filter(|&k| k != i).collect();
                    let rb: Vec<usize> = idx_b.iter().copied().filter(|&k| k != j).collect();
                    if ra != rb {
                        continue;
                    }
                    let pa = idx_a.iter().position(|&k| k == i).unwrap() as i64;
                    let pb = idx_b.iter().position(|&k| k == j).unwrap() as i64;
                    let sign = if (pa + pb) % 2 == 0 { 2 } else { -2 };
                    s[i - 1][j - 1] += x * y * int(sign);
                }
            }
        }
    }
    s
}

#[test]
fn riemannian_ricci_of_the_examples() {
    let t = MultiVector::basis(&[5, 6, 7]);
    let s = torsion_square(&t);
    assert_eq!(s[4][4], int(2));
    let ric_g = ricci_g_relation(&t, &RicciTensor::zero()).unwrap();
    let mut want = vec![Scalar::zero(); 8];
    for k in 4..7 {
        want[k] = q(1, 2);
    }
    assert_eq!(ric_g, RicciTensor::from_diag(&want));
    let alpha = spin7_torsion::classify::alpha(1);
    let s = torsion_square(&alpha);
    let ric_g = ricci_g_relation(&alpha, &RicciTensor::zero()).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(ric_g.matrix[i][j], &s[i][j] * &q(1, 4));
        }
    }
}

fn diag(v: &[Scalar]) -> RicciTensor {
    RicciTensor::from_diag(v)
}

fn solve(id: &str, p: &[Scalar]) -> RicciTensor {
    let f = family(id).unwrap();
    match ricci_solver(&f.evaluate(p), &catalog(&f.iso).unwrap()).unwrap() {
        RicciOutcome::Consistent { ric, .. } => ric,
        RicciOutcome::Inconsistent => panic!("{id} {p:?} inconsistent"),
    }
}

#[test]
fn printed_ricci_formulas() {
    let z = Scalar::zero;
    for (a1, b1, b2) in [(int(1), int(0), int(0)), (int(2), int(-1), q(1, 2)), (q(1, 2), int(3), int(-2))] {
        let lam = int(3) * (&a1 + &b1) * (int(4) * &a1 - int(3) * &b1) - b2.square();
        let kap = int(4) * (&a1 + &b1) * (int(3) * &a1 - int(4) * &b1);
        let l = lam.clone();
        let k = kap.clone();
        assert_eq!(
            solve("5.1", &[a1.clone(), b1.clone(), b2.clone()]),
            diag(&[l.clone(), l.clone(), l.clone(), l, k.clone(), k.clone(), k, z()])
        );
        // r₁ = (3/8)κ − λ has the printed factorization.
        let r1 = q(3, 8) * &kap - &lam;
        assert_eq!(r1, q(-3, 2) * (&a1 + &b1) * (int(5) * &a1 - int(2) * &b1) + b2.square());
    }
    for a1 in [int(1), int(2), q(1, 2)] {
        let l = int(2) * a1.square();
        assert_eq!(solve("5.2-I", &[a1]), diag(&[l.clone(), l.clone(), l.clone(), l.clone(), l.clone(), l, z(), z()]));
    }
    for (a1, a2, b1) in [(int(1), int(-1), int(2)), (int(2), q(1, 2), int(1)), (int(-2), int(3), q(1, 2))] {
        let l = int(4) * a1.square() + int(4) * (int(2) * &a2 + &b1) * (int(5) * &a2 - &b1);
        assert_eq!(
            solve("5.2-II", &[a1.clone(), a2.clone(), b1.clone()]),
            diag(&[l.clone(), l.clone(), l.clone(), l.clone(), l.clone(), l, z(), z()])
        );
        let s = a1.square() + a2.square();
        let li = int(6) * a1.square() + (&a2 + &b1) * (int(6) * &a2 - &b1);
        let ki = int(10) * a1.square() + int(2) * (&a2 + &b1) * (int(5) * &a2 - int(2) * &b1);
        let lii = q(45, 4) * &s - int(2) * &a2 * &b1 - b1.square();
        let kii = q(33, 4) * &s - int(8) * &a2 * &b1 - int(4) * b1.square();
        let p = [a1.clone(), a2.clone(), b1.clone()];
        assert_eq!(solve("5.3-I", &p), diag(&[li.clone(), li.clone(), li.clone(), li, ki.clone(), ki, z(), z()]));
        assert_eq!(solve("5.3-II", &p), diag(&[lii.clone(), lii.clone(), lii.clone(), lii, kii.clone(), kii, z(), z()]));
    }
    for b1 in [int(1), int(2), q(1, 2)] {
        let k = int(-4) * b1.square();
        assert_eq!(solve("5.4", &[b1]), diag(&[z(), z(), z(), z(), k.clone(), k, z(), z()]));
    }
}

#[test]
fn g2_curvature_parameters() {
    // λ = κ = 12 at a₁ = 1.
    let c = build_rc("5.1.1", None, &[int(1), int(0), int(0)]).unwrap();
    let (lam, kap) = (int(12), int(12));
    assert_eq!(c.r, Some((q(3, 8) * &kap - &lam, q(-1, 8) * &kap)));
    assert_eq!(c.r, Some((q(-15, 2), q(-3, 2))));
}

#[test]
fn d_couples_the_halves() {
    let d = named().d.clone();
    let e = MultiVector::e;
    let plus = vec![e(1), e(2), e(3), e(4)];
    let minus = vec![e(5), e(6), e(7), e(8)];
    // D(e1, e5, ·) ≠ 0 already violates the splitting condition.
    assert!(!d.contract_by(&e(1)).contract_by(&e(5)).is_zero());
    let r = spin7_torsion::classify::splitting_check(&d, &plus, &minus).unwrap();
    assert!(!r.holds);
    let all: Vec<MultiVector> = (1..=8).map(e).collect();
    assert!(spin7_torsion::classify::splitting_check(&d, &all, &[]).unwrap().holds);
}
