//! The `verify-all` suite: every identity and golden comparison of the
//! engine, grouped into named suites with a deterministic report.

use crate::classify::{
    admissibility_table, no_go_531, parallel_object_checks, phi_from_hermitian,
    reconstruct_example, splitting_check, su3_match, transversality, row_specs,
    u2_type1_splitting, TableRow,
};
use crate::clifford::{clifford_apply, psi0, rep};
use crate::curvature::{bianchi_dim, build_rc, constraint_text, range_constraints, ricci_of};
use crate::error::Result;
use crate::exterior::{named, MultiVector, DIM};
use crate::golden;
use crate::liealg::{catalog, in_spin7, in_spin7_clifford, invariant_forms, invariant_spinors, NONABELIAN};
use crate::sample::Sampler;
use crate::scalars::{int, q, Scalar};
use crate::spin7::{
    family, lee_form, project_8_48, ricci_solver, scal_pair, sigma_identity_check, RicciOutcome,
    FAMILY_IDS,
};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Measured quantities that are reported but not asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub measurements: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<Suite>,
}

#[derive(Default)]
struct Builder {
    checks: Vec<Check>,
    measurements: Vec<Check>,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: None,
        });
    }

    fn check_with(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: Some(detail.into()),
        });
    }

    fn measure(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.measurements.push(Check {
            name: name.into(),
            passed: holds,
            detail: Some(detail.into()),
        });
    }

    fn finish(self, name: &str) -> Suite {
        Suite {
            name: name.to_string(),
            passed: self.checks.iter().all(|c| c.passed),
            checks: self.checks,
            measurements: self.measurements,
        }
    }
}

/// Derived dimensions of the invariant 3-forms of the non-Abelian catalog.
pub const INVARIANT_FORM_DIMS: [(&str, usize); 8] = [
    ("g2", 1),
    ("so3ir", 1),
    ("su2+su2c", 2),
    ("R+su2c", 3),
    ("su3", 4),
    ("so3", 6),
    ("u2", 6),
    ("R+su2", 2),
];

fn clifford_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let r = rep();
    let mut ok = true;
    for i in 1..=DIM {
        for j in 1..=DIM {
            for k in 1..=16 {
                let psi = crate::clifford::Spinor::basis(k);
                let lhs = r.gamma(i).apply(&r.gamma(j).apply(&psi)).add(&r.gamma(j).apply(&r.gamma(i).apply(&psi)));
                let want = if i == j { psi.scale(&int(-2)) } else { crate::clifford::Spinor::zero() };
                ok &= lhs == want;
            }
        }
    }
    b.check("e_i e_j + e_j e_i = -2 delta_ij (64 pairs)", ok);
    let n = named();
    b.check("Phi . Psi0 = -14 Psi0", clifford_apply(&n.big_phi, &psi0()) == psi0().scale(&int(-14)));
    b.check("*Phi = Phi", n.big_phi.hodge() == n.big_phi);
    let c = golden::phi_wedge_phi_constant();
    let expected = golden::load("constants.json")
        .ok()
        .and_then(|v| v["phi_wedge_phi_over_vol"].as_str().map(str::to_string));
    b.check_with(
        "Phi ^ Phi = c vol with the committed c",
        n.big_phi.wedge(&n.big_phi) == MultiVector::vol().scale(&c)
            && !c.is_zero()
            && expected.as_deref() == Some(c.to_string().as_str()),
        format!("c = {c}"),
    );
    Ok(b.finish("clifford"))
}

fn membership_suite(seed: u64) -> Result<Suite> {
    let mut b = Builder::default();
    let mut s = Sampler::new(seed);
    let basis = &crate::liealg::spin7_basis().elements;
    b.check_with("dim spin(7) = 21", basis.len() == 21, basis.len().to_string());
    let mut agree = 0;
    let mut inside = 0;
    const N: usize = 1000;
    for k in 0..N {
        // Alternate arbitrary 2-forms with elements of spin(7) so both
        // outcomes are exercised.
        let x = if k % 2 == 0 { s.form(2) } else { s.spin7_element() };
        let a = in_spin7(&x);
        inside += a as usize;
        agree += (a == in_spin7_clifford(&x)) as usize;
    }
    b.check_with(
        "seven equations agree with the Clifford kernel on random 2-forms",
        agree == N,
        format!("{agree}/{N} agree, {inside} inside spin(7)"),
    );
    Ok(b.finish("spin7_membership"))
}

/// Containments printed with the catalog.
pub const CONTAINMENTS: [(&str, &str); 10] = [
    ("g2", "spin7"),
    ("su3", "g2"),
    ("su2+su2c", "g2"),
    ("u2", "su3"),
    ("R+su2c", "su2+su2c"),
    ("so3", "su3"),
    ("su2", "u2"),
    ("su2c", "R+su2c"),
    ("so3ir", "g2"),
    ("R+su2", "spin7"),
];

fn catalog_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let dims = [14, 8, 6, 4, 4, 3, 3, 3, 3, 4];
    let order = ["g2", "su3", "su2+su2c", "u2", "R+su2c", "so3", "su2", "su2c", "so3ir", "R+su2"];
    for (name, d) in order.iter().zip(dims) {
        let g = catalog(name)?;
        b.check_with(
            format!("{name}: closed, inside spin(7), dim {d}"),
            g.is_closed() && g.inside_spin7() && g.rank() == d,
            format!("dim {}", g.rank()),
        );
    }
    for (sub, sup) in CONTAINMENTS {
        b.check(format!("{sub} < {sup}"), catalog(sub)?.is_subalgebra_of(&catalog(sup)?));
    }
    Ok(b.finish("catalog"))
}

fn invariants_suite() -> Result<Suite> {
    let mut b = Builder::default();
    for (name, d) in INVARIANT_FORM_DIMS {
        let got = invariant_forms(&catalog(name)?, 3).len();
        b.check_with(format!("dim (Lambda^3)_{name} = {d}"), got == d, got.to_string());
    }
    let z = invariant_spinors(&catalog("zero")?).len();
    b.check_with("dim (Delta_8)_0 = 16", z == 16, z.to_string());
    let su3 = invariant_spinors(&catalog("su3")?).len();
    b.check_with("dim (Delta_8)_su3 >= 4", su3 >= 4, su3.to_string());
    for c in parallel_object_checks()? {
        b.check(format!("{} parallel for {}", c.object, c.hol), c.parallel);
    }
    for name in NONABELIAN {
        let g = catalog(name)?;
        let spinors = invariant_spinors(&g);
        let ok = spinors
            .iter()
            .all(|psi| g.basis.iter().all(|x| crate::liealg::act_on_spinor(x, psi).is_zero()));
        b.check(format!("invariant spinors of {name} are annihilated"), ok);
    }
    Ok(b.finish("invariants"))
}

fn ricci_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let golden = golden::load("families.json")?;
    for entry in golden.as_array().into_iter().flatten() {
        let id = entry["family"].as_str().unwrap_or_default();
        let f = family(id)?;
        let h = catalog(entry["hol"].as_str().unwrap_or_default())?;
        for sample in entry["samples"].as_array().into_iter().flatten() {
            let params: Vec<Scalar> = serde_json::from_value(sample["params"].clone())
                .map_err(|e| crate::Error::Io(e.to_string()))?;
            let want: Vec<Scalar> = serde_json::from_value(sample["ricci_diag"].clone())
                .map_err(|e| crate::Error::Io(e.to_string()))?;
            let got = ricci_solver(&f.evaluate(&params), &h)?;
            let ok = matches!(&got, RicciOutcome::Consistent { ric, .. } if ric.is_diagonal() && ric.diag() == want);
            let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
            b.check(format!("{id} at ({}) reproduces the printed Ric^c", p.join(", ")), ok);
        }
    }
    let g2fam = family("5.1")?;
    let outcome = |h: &str| -> Result<Vec<bool>> {
        let h = catalog(h)?;
        (1..=3)
            .map(|a| Ok(ricci_solver(&g2fam.evaluate(&[int(a), int(0), int(0)]), &h)?.is_consistent()))
            .collect()
    };
    for h in ["su2", "u2", "su3"] {
        b.check(format!("g2 torsion is inconsistent for hol = {h}"), outcome(h)?.iter().all(|c| !c));
    }
    for h in ["g2", "su2+su2c", "so3ir", "R+su2c"] {
        b.check(format!("g2 torsion is consistent for hol = {h}"), outcome(h)?.iter().all(|c| *c));
    }
    Ok(b.finish("ricci"))
}

fn scalar_suite(seed: u64) -> Result<Suite> {
    let mut b = Builder::default();
    let mut s = Sampler::new(seed.wrapping_add(1));
    let n = named();
    let (mut diamond, mut lee, mut lemma) = (true, true, true);
    for _ in 0..100 {
        let t = s.form(3);
        let (t8, t48) = project_8_48(&t)?;
        let (sg, sc) = scal_pair(&t)?;
        diamond &= sc == &sg - &(q(3, 2) * t.norm2());
        diamond &= sg == q(27, 2) * t8.norm2() - q(1, 2) * t48.norm2();
        lee &= lee_form(&t)?.norm2() == q(36, 7) * t8.norm2();
        let pt = n.big_phi.wedge(&t);
        let sum: MultiVector = (1..=DIM)
            .map(|i| {
                let e = MultiVector::e(i);
                t.contract_by(&e).wedge(&pt.contract_by(&e))
            })
            .sum();
        lemma &= sum.is_zero();
    }
    b.check("Scal^c = Scal^g - 3/2 |T|^2 on 100 random T", diamond);
    b.check("|theta|^2 = 36/7 |T_8|^2 on 100 random T", lee);
    b.check("sum_i (e_i _| T) ^ (e_i _| (Phi ^ T)) = 0 on 100 random T", lemma);
    // Scal^c is the trace of Ric^c on every family sample.
    let mut traced = true;
    for id in FAMILY_IDS {
        let f = family(id)?;
        for p in golden::family_samples(id).into_iter().filter(|p| f.admissible_params(p)) {
            let tr: Scalar = f.ricci_formula(&p).into_iter().sum();
            traced &= tr == scal_pair(&f.evaluate(&p))?.1;
        }
    }
    b.check("Scal^c = tr Ric^c on all family samples", traced);
    Ok(b.finish("scalar_identities"))
}

fn sigma_suite(seed: u64) -> Result<Suite> {
    let mut b = Builder::default();
    let mut s = Sampler::new(seed.wrapping_add(2));
    let mut commutator = true;
    let mut at_psi0 = 0;
    const N: usize = 10;
    for _ in 0..N {
        let r = sigma_identity_check(&s.form(3))?;
        commutator &= r.commutator_identity;
        at_psi0 += r.holds_at_psi0 as usize;
    }
    b.check("-4 (X _| sigma^T) = T^2 X - X T^2 on all spinors, random T", commutator);
    let mut families = true;
    for id in FAMILY_IDS {
        let f = family(id)?;
        for p in golden::family_samples(id).into_iter().filter(|p| f.admissible_params(p)) {
            families &= sigma_identity_check(&f.evaluate(&p))?.holds_at_psi0;
        }
    }
    b.check("sigma identity at Psi0 for every family torsion", families);
    b.measure(
        "sigma identity at Psi0 for random T",
        at_psi0 == N,
        format!("holds for {at_psi0}/{N} random T"),
    );
    Ok(b.finish("sigma_identity"))
}

fn curvature_suite() -> Result<Suite> {
    let mut b = Builder::default();
    for h in ["g2", "su3", "su2+su2c", "u2", "su2", "R+su2"] {
        let d = bianchi_dim(&catalog(h)?, true);
        b.check_with(format!("dim K({h}) > 0"), d > 0, d.to_string());
    }
    for h in ["R+su2c", "su2c", "so3", "so3ir", "t2", "t1(1,0)", "t1(0,1)", "t1(2,3)", "zero"] {
        let d = bianchi_dim(&catalog(h)?, true);
        b.check_with(format!("dim K({h}) = 0"), d == 0, d.to_string());
    }
    for (case, fam, p) in golden::curvature_samples() {
        let c = build_rc(case, fam, &p)?;
        let v = c.validate()?;
        let label = format!("{case}[{}]", c.params.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        b.check(format!("{label}: symmetric, Bianchi, range, invariant"), v.symmetric && v.bianchi_with_torsion && v.range_in_hol && v.invariant);
        let solver = ricci_solver(&c.torsion, &catalog(&family(&c.family)?.iso)?)?;
        b.check(
            format!("{label}: ricci_of = ricci_solver"),
            solver.ricci() == Some(&ricci_of(&c.tensor)),
        );
    }
    for (case, h, want) in CONSTRAINT_TABLES {
        let got = constraint_text(&range_constraints(case, &catalog(h)?)?);
        b.check_with(format!("{case}, hol = {h}: {want}"), got == want, got);
    }
    let ng = no_go_531()?;
    b.check_with("u(2) with r1 = r2 = 0 forces an excluded torsion", ng.holds, ng.components.join("; "));
    Ok(b.finish("curvature"))
}

/// The printed `(r₁, r₂)` conditions per holonomy algebra.
pub const CONSTRAINT_TABLES: [(&str, &str, &str); 11] = [
    ("5.1.1", "su2c", "r1 = 0"),
    ("5.1.1", "t2", "r2 = 0"),
    ("5.1.1", "t1(1,0)", "r2 = 0"),
    ("5.1.1", "so3diag", "r1 = r2 = 0"),
    ("5.1.1", "t1(0,1)", "r1 = r2 = 0"),
    ("5.1.1", "t1(2,3)", "r1 = r2 = 0"),
    ("5.1.1", "zero", "r1 = r2 = 0"),
    ("5.3.1", "t1(0,1)", "r1 = 0"),
    ("5.3.1", "t1(1,0)", "r2 = 0"),
    ("5.3.1", "t1(2,3)", "r1 = r2 = 0"),
    ("5.3.1", "zero", "r1 = r2 = 0"),
];

fn admissibility_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let table = admissibility_table()?;
    let golden: Vec<TableRow> = serde_json::from_value(golden::load("admissibility_table.json")?)
        .map_err(|e| crate::Error::Io(e.to_string()))?;
    for g in &golden {
        let got = table.rows.iter().find(|r| r.iso == g.iso);
        b.check_with(
            format!("row {}", g.iso),
            got == Some(g),
            got.map(|r| format!("{:?} | {:?}", r.k_nonzero, r.k_zero)).unwrap_or_else(|| "missing".into()),
        );
    }
    b.check("no extra rows", table.rows.len() == golden.len());
    for spec in row_specs()? {
        for t in transversality(&spec)? {
            b.check_with(
                format!("{} family {} transversal to the normalizer orbit", t.iso, t.family),
                t.transversal,
                format!("family {} orbit {}", t.family_dim, t.orbit_dim),
            );
        }
    }
    Ok(b.finish("admissibility"))
}

fn reconstruction_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let e1 = reconstruct_example("1")?;
    let inside = |x: usize| (4..7).contains(&x);
    let support = (0..8).all(|i| {
        (0..8).all(|j| (0..8).all(|k| e1.structure[i][j][k].is_zero() || (inside(i) && inside(j) && inside(k))))
    });
    b.check("example 1: Jacobi, bracket supported on e5, e6, e7", e1.jacobi_holds && support && !e1.structure[4][5][6].is_zero());
    for (ex, sign) in [("2", 1), ("2-", -1)] {
        let a = reconstruct_example(ex)?;
        let m = su3_match(sign)?;
        let same = m.killing.matrix == a.killing.matrix;
        b.check_with(
            format!("example {ex}: Jacobi, nondegenerate Killing form, su(3) basis match"),
            a.jacobi_holds && a.killing.nondegenerate && m.reproduces_alpha && same,
            format!("inertia {:?}", a.killing.inertia),
        );
    }
    let t2 = reconstruct_example("t2")?;
    b.check_with(
        "t2 example: dim 9, Jacobi, nondegenerate Killing form",
        t2.dim == 9 && t2.jacobi_holds && t2.killing.nondegenerate,
        format!("inertia {:?}", t2.killing.inertia),
    );
    let zero = catalog("zero")?;
    for (ex, t) in [("1", MultiVector::basis(&[5, 6, 7])), ("2", crate::classify::alpha(1))] {
        let ric = ricci_solver(&t, &zero)?;
        b.check(
            format!("example {ex}: Ric^c = 0"),
            ric.ricci().is_some_and(|r| r.diag().iter().all(|x| x.is_zero()) && r.is_diagonal()),
        );
    }
    Ok(b.finish("reconstructions"))
}

fn hermitian_suite() -> Result<Suite> {
    let mut b = Builder::default();
    let n = named();
    b.check("1/2 omega^omega + Re F = Phi", phi_from_hermitian() == n.big_phi);
    let fam = family("5.3-I")?;
    for p in [
        vec![int(0), int(2), int(5)],
        vec![Scalar::sqrt3() * int(2), int(-1), int(5)],
        vec![Scalar::sqrt3() * int(2), int(-2), int(5)],
    ] {
        let (plus, minus) = u2_type1_splitting(&p[0], &p[1], &p[2]);
        let t = fam.evaluate(&p);
        let r = splitting_check(&t, &plus, &minus)?;
        let e = MultiVector::e;
        let want_p = n.z1.wedge(&(e(7).scale(&(&p[1] + &p[2])) + e(8).scale(&p[0])));
        let want_m = n.z2.scale(&int(5)).wedge(&(e(7).scale(&(&p[1] - &(q(2, 5) * &p[2]))) + e(8).scale(&p[0])));
        let label: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        b.check(
            format!("type-I splitting at ({}) with the printed T+ and T-", label.join(", ")),
            r.holds && r.t_plus.as_ref() == Some(&want_p) && r.t_minus.as_ref() == Some(&want_m),
        );
    }
    let f51 = family("5.1")?;
    let ok = golden::family_samples("5.1").iter().all(|p| {
        f51.evaluate(p).contract_by(&MultiVector::e(8)) == n.z3.scale(&p[2])
    });
    b.check("e8 _| T = b2 Z3 on the 5.1 family", ok);
    Ok(b.finish("hermitian_and_splitting"))
}

fn golden_suite() -> Result<Suite> {
    let mut b = Builder::default();
    for (name, diffs) in golden::check_all()? {
        let detail = if diffs.is_empty() { "identical".to_string() } else { diffs.join("; ") };
        b.check_with(format!("{name} matches"), diffs.is_empty(), detail);
    }
    Ok(b.finish("golden"))
}

/// Names of the suites, in report order.
pub const SUITES: [&str; 11] = [
    "admissibility",
    "catalog",
    "clifford",
    "curvature",
    "golden",
    "hermitian_and_splitting",
    "invariants",
    "reconstructions",
    "ricci",
    "scalar_identities",
    "sigma_identity",
];

fn run_suite(name: &str, seed: u64) -> Result<Suite> {
    match name {
        "admissibility" => admissibility_suite(),
        "catalog" => catalog_suite(),
        "clifford" => clifford_suite(),
        "curvature" => curvature_suite(),
        "golden" => golden_suite(),
        "hermitian_and_splitting" => hermitian_suite(),
        "invariants" => invariants_suite(),
        "reconstructions" => reconstruction_suite(),
        "ricci" => ricci_suite(),
        "scalar_identities" => scalar_suite(seed),
        "sigma_identity" => sigma_suite(seed),
        "spin7_membership" => membership_suite(seed),
        _ => Err(crate::Error::UnknownCase(format!("suite {name}"))),
    }
}

/// Runs every suite; independent suites run in parallel and are reported
/// in a fixed order.
pub fn verify_all(seed: u64) -> Result<Report> {
    let mut names: Vec<&str> = SUITES.to_vec();
    names.push("spin7_membership");
    names.sort();
    let results: Vec<Result<Suite>> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| scope.spawn(move || run_suite(n, seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });
    let suites = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Report {
        seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

impl Report {
    pub fn to_markdown(&self) -> String {
        let mut s = format!("# verify-all (seed {})\n\n", self.seed);
        for suite in &self.suites {
            s.push_str(&format!(
                "## {} — {}\n\n",
                suite.name,
                if suite.passed { "PASS" } else { "FAIL" }
            ));
            for c in &suite.checks {
                s.push_str(&format!("- [{}] {}", if c.passed { "x" } else { " " }, c.name));
                if let Some(d) = &c.detail {
                    s.push_str(&format!(" ({d})"));
                }
                s.push('\n');
            }
            for m in &suite.measurements {
                s.push_str(&format!("- measured: {} ({})\n", m.name, m.detail.as_deref().unwrap_or("")));
            }
            s.push('\n');
        }
        s.push_str(if self.passed { "all suites passed\n" } else { "some checks failed\n" });
        s
    }
}
