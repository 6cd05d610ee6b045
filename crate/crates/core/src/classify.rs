//! The classification recipe: for an isotropy algebra `g` and a candidate
//! holonomy algebra `h ≤ g`, collect every algebraic condition that parallel
//! torsion and curvature impose on the torsion parameters, and decide whether
//! a non-trivial torsion of the right isotropy type survives.
//!
//! All conditions are linear in the unknowns (the Ricci tensor and, when
//! 𝒦(h) = 0, the coefficients of an invariant curvature operator) with
//! right-hand sides quadratic in the torsion parameters. Eliminating the
//! unknowns exactly leaves a system of homogeneous quadrics in at most three
//! parameters, whose real solutions are decided by [`crate::quadric`].

use crate::clifford::Spinor;
use crate::curvature::{
    bianchi_dim, constraint_text, range_constraints, ricci_of, sigma_values, sym_inv_basis,
    CurvatureTensor, L2,
};
use crate::error::{Error, Result};
use crate::exterior::{blade_index, named, MultiVector, DIM};
use crate::liealg::{
    act_on_form, act_on_spinor, bracket, catalog, invariant_spinors, iso_dim, joint_iso_dim,
    normalizer, p, pretty_name, KillingForm, Subalgebra,
};
use crate::linalg::{self, Echelon, SparseVec};
use crate::quadric::{monomials, sample_points, Component, QuadricSystem};
use crate::scalars::{int, q, Scalar};
use crate::spin7::{
    family, feasibility_residual, ricci_rows, ricci_solver, sym_pairs, RicciOutcome,
    RicciTensor, TorsionFamily,
};
use serde::Serialize;

/// A torsion family restricted to one row of the classification: the row's
/// parameters `s` map linearly to the family parameters `A·s`.
#[derive(Clone, Debug)]
pub struct RowFamily {
    pub family: TorsionFamily,
    pub map: Vec<Vec<Scalar>>,
    pub param_names: Vec<String>,
    /// Restriction imposed on the family, in the family's parameters.
    pub restriction: String,
}

impl RowFamily {
    fn full(id: &str) -> Result<Self> {
        let family = family(id)?;
        let n = family.param_names.len();
        let map = (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        Ok(RowFamily {
            param_names: family.param_names.clone(),
            family,
            map,
            restriction: "none".into(),
        })
    }

    fn restricted(id: &str, map: Vec<Vec<Scalar>>, names: &[&str], restriction: &str) -> Result<Self> {
        Ok(RowFamily {
            family: family(id)?,
            map,
            param_names: names.iter().map(|s| s.to_string()).collect(),
            restriction: restriction.into(),
        })
    }

    pub fn nparams(&self) -> usize {
        self.param_names.len()
    }

    pub fn family_params(&self, s: &[Scalar]) -> Vec<Scalar> {
        self.map
            .iter()
            .map(|row| row.iter().zip(s).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn torsion(&self, s: &[Scalar]) -> MultiVector {
        self.family.evaluate(&self.family_params(s))
    }

    pub fn generators(&self) -> Vec<MultiVector> {
        (0..self.nparams())
            .map(|k| {
                let mut e = vec![Scalar::zero(); self.nparams()];
                e[k] = Scalar::one();
                self.torsion(&e)
            })
            .collect()
    }

    /// Whether `s` is a valid point up to an overall sign: non-zero torsion,
    /// a non-zero sign-constrained parameter, and outside the exclusions.
    pub fn valid_up_to_sign(&self, s: &[Scalar]) -> bool {
        let p = self.family_params(s);
        if p.iter().all(|x| x.is_zero()) || self.torsion(s).is_zero() {
            return false;
        }
        if let Some(i) = self.family.positive {
            if p[i].is_zero() {
                return false;
            }
        }
        !self.family.exclusions.iter().any(|l| l.contains(&p))
    }

    /// Flips the sign of `s` so that the sign-constrained parameter is positive.
    pub fn normalize_sign(&self, s: Vec<Scalar>) -> Vec<Scalar> {
        if let Some(i) = self.family.positive {
            if self.family_params(&s)[i].is_negative() {
                return s.into_iter().map(|x| -x).collect();
            }
        }
        s
    }
}

/// One row of the classification: an isotropy algebra and its torsion families.
#[derive(Clone, Debug)]
pub struct RowSpec {
    pub iso: String,
    /// Dimension of `iso(T)` required of a valid torsion.
    pub iso_dim: usize,
    pub families: Vec<RowFamily>,
}

fn col(v: &[Scalar]) -> Vec<Vec<Scalar>> {
    v.iter().map(|x| vec![x.clone()]).collect()
}

/// The rows of the classification in table order.
pub fn row_specs() -> Result<Vec<RowSpec>> {
    let g2_only = || {
        RowFamily::restricted(
            "5.1",
            col(&[int(1), int(0), int(0)]),
            &["a1"],
            "b1 = b2 = 0",
        )
    };
    Ok(vec![
        RowSpec {
            iso: "g2".into(),
            iso_dim: 14,
            families: vec![g2_only()?],
        },
        RowSpec {
            iso: "su3".into(),
            iso_dim: 8,
            families: vec![
                RowFamily::full("5.2-I")?,
                RowFamily::restricted(
                    "5.2-II",
                    col(&[int(0), int(1), q(3, 2)]),
                    &["a2"],
                    "a1 = 0, b1 = 3/2*a2",
                )?,
            ],
        },
        RowSpec {
            iso: "su2+su2c".into(),
            iso_dim: 6,
            families: vec![RowFamily::restricted(
                "5.1",
                vec![
                    vec![int(1), int(0)],
                    vec![int(0), int(1)],
                    vec![int(0), int(0)],
                ],
                &["a1", "b1"],
                "b2 = 0",
            )?],
        },
        RowSpec {
            iso: "u2".into(),
            iso_dim: 4,
            families: vec![RowFamily::full("5.3-I")?, RowFamily::full("5.3-II")?],
        },
        RowSpec {
            iso: "R+su2c".into(),
            iso_dim: 4,
            families: vec![RowFamily::full("5.1")?],
        },
        RowSpec {
            iso: "so3".into(),
            iso_dim: 3,
            families: vec![RowFamily::full("5.2-II")?],
        },
        // The so_ir(3)-invariant 3-forms are exactly the g₂-invariant ones, so
        // the torsion of this row is the g₂ family.
        RowSpec {
            iso: "so3ir".into(),
            iso_dim: 14,
            families: vec![g2_only()?],
        },
        RowSpec {
            iso: "R+su2".into(),
            iso_dim: 4,
            families: vec![RowFamily::full("5.4")?],
        },
    ])
}

/// Candidate holonomy algebras examined below each isotropy algebra.
pub fn candidate_names() -> Vec<String> {
    let mut v: Vec<String> = [
        "g2", "su3", "su2+su2c", "u2", "su2", "R+su2c", "su2c", "so3", "so3diag", "so3ir",
        "R+su2", "t2", "t2tilde", "t1(1,0)", "t1(0,1)", "t1(1,1)", "t1(2,3)", "t1(-1,3)",
        "t1tilde(2,3)", "zero",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    v.dedup();
    v
}

/// Name of a holonomy algebra as it appears in the admissibility table.
pub fn table_name(h: &str) -> String {
    if h == "so3diag" {
        "so3".into()
    } else if h.starts_with("t1tilde") || h.starts_with("t1(") {
        "t1".into()
    } else {
        h.to_string()
    }
}

/// Values of `f` on `Σ sₖ Gₖ` decomposed over the quadratic monomials
/// `sᵢsⱼ (i ≤ j)`, for a map `f` that is a homogeneous quadratic in `T`.
fn polarize<F>(gens: &[MultiVector], f: F) -> Result<Vec<Vec<Scalar>>>
where
    F: Fn(&MultiVector) -> Result<Vec<Scalar>>,
{
    let n = gens.len();
    let diag: Vec<Vec<Scalar>> = gens.iter().map(&f).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (i, j) in monomials(n) {
        if i == j {
            out.push(diag[i].clone());
        } else {
            let both = f(&(&gens[i] + &gens[j]))?;
            out.push(
                both.iter()
                    .zip(&diag[i])
                    .zip(&diag[j])
                    .map(|((b, x), y)| b - x - y)
                    .collect(),
            );
        }
    }
    Ok(out)
}

/// The quadric conditions on the row parameters for holonomy `h`, together
/// with the number of unknowns that were eliminated.
pub fn recipe_constraints(fam: &RowFamily, h: &Subalgebra, k_zero: bool) -> Result<QuadricSystem> {
    let gens = fam.generators();
    let nm = monomials(gens.len()).len();
    let spinors = invariant_spinors(h);
    let curv = if k_zero { sym_inv_basis(h) } else { Vec::new() };
    let nu = 36 + curv.len();
    let mut ech = Echelon::new(nu + nm);
    let push = |ech: &mut Echelon, mut row: SparseVec, rhs: &[Vec<Scalar>], k: usize, sign: i64| {
        for (mu, r) in rhs.iter().enumerate() {
            if !r[k].is_zero() {
                row.insert(nu + mu, &r[k] * &int(sign));
            }
        }
        if !row.is_empty() {
            ech.insert(row);
        }
    };

    // Spinor feasibility: (T² − 7‖T₈‖²)ψ = 0.
    let feas = polarize(&gens, |t| {
        Ok(spinors
            .iter()
            .map(|psi| feasibility_residual(t, psi))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flat_map(|s| s.coords)
            .collect())
    })?;
    for k in 0..feas.first().map_or(0, |v| v.len()) {
        push(&mut ech, SparseVec::new(), &feas, k, 1);
    }

    // The Ricci equation: L·Ric = r(T).
    let lhs: Vec<SparseVec> = match gens.first() {
        Some(g) => ricci_rows(g, &spinors)?.into_iter().map(|(r, _)| r).collect(),
        None => Vec::new(),
    };
    let rhs = polarize(&gens, |t| Ok(ricci_rows(t, &spinors)?.into_iter().map(|(_, b)| b).collect()))?;
    for (k, l) in lhs.into_iter().enumerate() {
        push(&mut ech, l, &rhs, k, -1);
    }

    if k_zero {
        // R = Σ c_m M_m over the invariant symmetric operators; Bianchi with
        // torsion and Ric(R) = Ric.
        let tensors: Vec<CurvatureTensor> = curv
            .into_iter()
            .map(|m| CurvatureTensor::new(&h.name, m))
            .collect();
        let residuals: Vec<Vec<Scalar>> = tensors
            .iter()
            .map(|t| t.bianchi_residual(None))
            .collect::<Result<_>>()?;
        let sig = polarize(&gens, sigma_values)?;
        for k in 0..sig.first().map_or(0, |v| v.len()) {
            let mut row = SparseVec::new();
            for (m, r) in residuals.iter().enumerate() {
                if !r[k].is_zero() {
                    row.insert(36 + m, r[k].clone());
                }
            }
            push(&mut ech, row, &sig, k, -1);
        }
        let rics: Vec<_> = tensors.iter().map(ricci_of).collect();
        for (pi, (a, b)) in sym_pairs().into_iter().enumerate() {
            let mut row = SparseVec::new();
            row.insert(pi, int(-1));
            for (m, r) in rics.iter().enumerate() {
                if !r.matrix[a][b].is_zero() {
                    row.insert(36 + m, r.matrix[a][b].clone());
                }
            }
            ech.insert(row);
        }
    }

    let rows = ech
        .rref()
        .into_iter()
        .filter(|(p, _)| *p >= nu)
        .map(|(_, r)| {
            let mut v = vec![Scalar::zero(); nm];
            for (c, x) in r {
                v[c - nu] = x;
            }
            v
        })
        .collect();
    Ok(QuadricSystem::new(gens.len(), rows))
}

/// Outcome of the recipe for one torsion family of a row.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyOutcome {
    pub family: String,
    pub restriction: String,
    pub params: Vec<String>,
    /// The quadric conditions left after eliminating Ricci and curvature.
    pub constraints: Vec<String>,
    pub admissible: bool,
    /// A valid parameter point satisfying all conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Scalar>>,
    /// `Ric^c` at the witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ricci: Option<RicciTensor>,
    /// Conditions on `(r₁, r₂)` from the range of the printed curvature.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curvature_constraints: Option<String>,
    /// Why no valid point exists, when inadmissible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// One `(iso, hol)` pair of the classification.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRow {
    pub iso: String,
    pub hol: String,
    pub k_dim: usize,
    pub k_nontrivial: bool,
    pub families: Vec<FamilyOutcome>,
    pub admissible: bool,
}

fn is_good(fam: &RowFamily, s: &[Scalar], target: usize) -> bool {
    fam.valid_up_to_sign(s) && iso_dim(&fam.torsion(s)) == target
}

/// Why no point of a linear component is valid, if this can be certified.
fn certify_subspace(fam: &RowFamily, basis: &[Vec<Scalar>], target: usize) -> Option<String> {
    let ts: Vec<MultiVector> = basis.iter().map(|b| fam.torsion(b)).collect();
    if ts.iter().all(|t| t.is_zero()) {
        return Some("torsion vanishes".into());
    }
    if let Some(i) = fam.family.positive {
        if basis.iter().all(|b| fam.family_params(b)[i].is_zero()) {
            return Some(format!("{} = 0", fam.family.param_names[i]));
        }
    }
    for l in &fam.family.exclusions {
        if basis.iter().all(|b| l.contains(&fam.family_params(b))) {
            return Some(format!("excluded locus {}", l.text));
        }
    }
    let j = joint_iso_dim(&ts);
    if j > target {
        return Some(format!("isotropy of dimension at least {j}"));
    }
    None
}

fn format_point(names: &[String], s: &[Scalar]) -> String {
    names
        .iter()
        .zip(s)
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Decides whether a valid point satisfies the system: returns a witness or
/// the certified reasons that every real solution is invalid.
pub fn decide(fam: &RowFamily, sys: &QuadricSystem, target: usize) -> Result<std::result::Result<Vec<Scalar>, String>> {
    let comps = sys.real_components()?;
    if comps.is_empty() {
        return Ok(Err("only the zero torsion".into()));
    }
    let mut reasons = Vec::new();
    for c in &comps {
        if let Some(w) = sample_points(c).into_iter().find(|s| is_good(fam, s, target)) {
            return Ok(Ok(fam.normalize_sign(w)));
        }
        match c {
            Component::Subspace(b) => match certify_subspace(fam, b, target) {
                Some(r) => {
                    let pts: Vec<String> = b.iter().map(|v| format!("({})", format_point(&fam.param_names, v))).collect();
                    reasons.push(format!("span{{{}}}: {r}", pts.join(", ")));
                }
                None => {
                    return Err(Error::Undecided(format!(
                        "family {}: no valid point found on a solution subspace",
                        fam.family.id
                    )))
                }
            },
            Component::Conic { .. } => {
                return Err(Error::Undecided(format!(
                    "family {}: no valid point found on a solution conic",
                    fam.family.id
                )))
            }
        }
    }
    Ok(Err(reasons.join("; ")))
}

fn row_spec(iso: &str) -> Result<RowSpec> {
    row_specs()?
        .into_iter()
        .find(|r| r.iso == iso)
        .ok_or_else(|| Error::UnknownAlgebra(format!("{iso} (not an isotropy algebra of the classification)")))
}

fn curvature_case_constraints(fam: &RowFamily, h: &Subalgebra) -> Result<Option<String>> {
    let case = match fam.family.id.as_str() {
        "5.1" if h.is_subalgebra_of(&catalog("R+su2c")?) => "5.1.1",
        "5.3-I" if h.is_subalgebra_of(&catalog("t2")?) => "5.3.1",
        _ => return Ok(None),
    };
    Ok(Some(constraint_text(&range_constraints(case, h)?)))
}

/// Runs the recipe for isotropy algebra `g` and holonomy candidate `h`.
pub fn run_recipe(g: &str, h: &str) -> Result<ClassificationRow> {
    let spec = row_spec(g)?;
    let galg = catalog(g)?;
    let halg = catalog(h)?;
    if !halg.is_subalgebra_of(&galg) {
        return Err(Error::NotContained {
            sub: h.to_string(),
            sup: g.to_string(),
        });
    }
    let k_dim = bianchi_dim(&halg, false);
    let mut families = Vec::new();
    for fam in &spec.families {
        let sys = recipe_constraints(fam, &halg, k_dim == 0)?;
        let constraints = sys.equations(&fam.param_names);
        let decision = decide(fam, &sys, spec.iso_dim)?;
        let curvature_constraints = if k_dim == 0 {
            curvature_case_constraints(fam, &halg)?
        } else {
            None
        };
        let outcome = match decision {
            Ok(w) => {
                let ricci = match ricci_solver(&fam.torsion(&w), &halg)? {
                    RicciOutcome::Consistent { ric, .. } => Some(ric),
                    RicciOutcome::Inconsistent => None,
                };
                FamilyOutcome {
                    family: fam.family.id.clone(),
                    restriction: fam.restriction.clone(),
                    params: fam.param_names.clone(),
                    constraints,
                    admissible: true,
                    witness: Some(w),
                    ricci,
                    curvature_constraints,
                    reason: None,
                }
            }
            Err(reason) => FamilyOutcome {
                family: fam.family.id.clone(),
                restriction: fam.restriction.clone(),
                params: fam.param_names.clone(),
                constraints,
                admissible: false,
                witness: None,
                ricci: None,
                curvature_constraints,
                reason: Some(reason),
            },
        };
        families.push(outcome);
    }
    Ok(ClassificationRow {
        iso: g.to_string(),
        hol: h.to_string(),
        k_dim,
        k_nontrivial: k_dim > 0,
        admissible: families.iter().any(|f| f.admissible),
        families,
    })
}

/// Order of holonomy algebras within a table cell.
const TABLE_ORDER: [&str; 14] = [
    "g2", "su3", "su2+su2c", "u2", "su2", "R+su2c", "su2c", "so3", "so3ir", "R+su2", "t2",
    "t2tilde", "t1", "zero",
];

/// One line of the admissibility table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct TableRow {
    pub iso: String,
    /// Admissible holonomy algebras with 𝒦(hol) ≠ 0.
    pub k_nonzero: Vec<String>,
    /// Admissible holonomy algebras with 𝒦(hol) = 0.
    pub k_zero: Vec<String>,
}

/// The admissibility table with the recipe rows behind it.
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityTable {
    pub rows: Vec<TableRow>,
    pub details: Vec<ClassificationRow>,
}

fn sort_cell(v: &mut Vec<String>) {
    v.sort_by_key(|n| TABLE_ORDER.iter().position(|o| o == n).unwrap_or(usize::MAX));
    v.dedup();
}

/// Runs the recipe over every row and every candidate holonomy algebra.
pub fn admissibility_table() -> Result<AdmissibilityTable> {
    let specs = row_specs()?;
    let per_row: Vec<Result<Vec<ClassificationRow>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = specs
            .iter()
            .map(|spec| {
                scope.spawn(move || -> Result<Vec<ClassificationRow>> {
                    let g = catalog(&spec.iso)?;
                    let mut out = Vec::new();
                    for h in candidate_names() {
                        if catalog(&h)?.is_subalgebra_of(&g) {
                            out.push(run_recipe(&spec.iso, &h)?);
                        }
                    }
                    Ok(out)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("recipe worker panicked"))
            .collect()
    });
    let mut rows = Vec::new();
    let mut details = Vec::new();
    for (spec, res) in specs.iter().zip(per_row) {
        let res = res?;
        let mut k_nonzero = Vec::new();
        let mut k_zero = Vec::new();
        for r in res.iter().filter(|r| r.admissible) {
            let name = table_name(&r.hol);
            if r.k_nontrivial {
                k_nonzero.push(name);
            } else {
                k_zero.push(name);
            }
        }
        sort_cell(&mut k_nonzero);
        sort_cell(&mut k_zero);
        rows.push(TableRow {
            iso: spec.iso.clone(),
            k_nonzero,
            k_zero,
        });
        details.extend(res);
    }
    Ok(AdmissibilityTable { rows, details })
}

impl AdmissibilityTable {
    /// Markdown rendering in the layout of the printed table.
    pub fn to_markdown(&self) -> String {
        render_markdown(&self.rows)
    }
}

pub fn render_markdown(rows: &[TableRow]) -> String {
    let cell = |v: &[String]| {
        if v.is_empty() {
            "—".to_string()
        } else {
            v.iter().map(|n| pretty_name(n)).collect::<Vec<_>>().join(", ")
        }
    };
    let mut s = String::from("| iso(T^c) | hol(∇^c) with 𝒦(hol) ≠ 0 | hol(∇^c) with 𝒦(hol) = 0 |\n|---|---|---|\n");
    for r in rows {
        s.push_str(&format!(
            "| {} | {} | {} |\n",
            pretty_name(&r.iso),
            cell(&r.k_nonzero),
            cell(&r.k_zero)
        ));
    }
    s
}

/// The exact elimination behind the u(2) no-go: `r₁ = r₂ = 0` on the type-I
/// family, decomposed into real components.
#[derive(Clone, Debug, Serialize)]
pub struct NoGo {
    pub family: String,
    pub equations: Vec<String>,
    /// Each real solution component, with the excluded locus containing it.
    pub components: Vec<String>,
    /// Every real solution lies in an excluded locus of the family.
    pub holds: bool,
}

/// Solves `r₁ = r₂ = 0` for case 5.3.1 exactly over the type-I parameters.
pub fn no_go_531() -> Result<NoGo> {
    let fam = family("5.3-I")?;
    let n = fam.param_names.len();
    let r_at = |s: &[Scalar]| -> Result<[Scalar; 2]> {
        let c = crate::curvature::build_rc("5.3.1", None, s)?;
        let (r1, r2) = c.r.expect("5.3.1 carries (r1, r2)");
        Ok([r1, r2])
    };
    let unit = |i: usize| -> Vec<Scalar> { (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect() };
    let mut rows = vec![Vec::new(), Vec::new()];
    for (i, j) in monomials(n) {
        let v = if i == j {
            r_at(&unit(i))?
        } else {
            let both: Vec<Scalar> = unit(i).iter().zip(unit(j)).map(|(a, b)| a + &b).collect();
            let (x, y, z) = (r_at(&both)?, r_at(&unit(i))?, r_at(&unit(j))?);
            [&(&x[0] - &y[0]) - &z[0], &(&x[1] - &y[1]) - &z[1]]
        };
        rows[0].push(v[0].clone());
        rows[1].push(v[1].clone());
    }
    let sys = QuadricSystem::new(n, rows);
    let mut holds = true;
    let mut components = Vec::new();
    for c in sys.real_components()? {
        match &c {
            Component::Subspace(b) => {
                let hit = fam.exclusions.iter().find(|l| b.iter().all(|v| l.contains(v)));
                let pts: Vec<String> = b.iter().map(|v| format!("({})", format_point(&fam.param_names, v))).collect();
                match hit {
                    Some(l) => components.push(format!("span{{{}}} ⊂ {}", pts.join(", "), l.text)),
                    None => {
                        holds = false;
                        components.push(format!("span{{{}}} not excluded", pts.join(", ")));
                    }
                }
            }
            Component::Conic { .. } => {
                holds = false;
                components.push("conic".into());
            }
        }
    }
    Ok(NoGo {
        family: fam.id.clone(),
        equations: sys.equations(&fam.param_names),
        components,
        holds,
    })
}

/// Transversality of a row family to the infinitesimal normalizer action
/// at a generic member.
#[derive(Clone, Debug, Serialize)]
pub struct Transversality {
    pub iso: String,
    pub family: String,
    pub invariant_dim: usize,
    pub family_dim: usize,
    pub orbit_dim: usize,
    pub transversal: bool,
}

pub fn transversality(spec: &RowSpec) -> Result<Vec<Transversality>> {
    let g = catalog(&spec.iso)?;
    let inv = crate::liealg::invariant_forms(&g, 3).len();
    let n = normalizer(&g);
    let mut out = Vec::new();
    for fam in &spec.families {
        let generic: Vec<Scalar> = [3, 2, 7].iter().take(fam.nparams()).map(|&k| int(k)).collect();
        let t = fam.torsion(&generic);
        let mut orbit = Echelon::new(56);
        for x in &n.basis {
            orbit.insert_dense(&act_on_form(x, &t).coords(3));
        }
        let mut fam_e = Echelon::new(56);
        for gen in fam.generators() {
            fam_e.insert_dense(&gen.coords(3));
        }
        let mut joint = orbit.clone();
        for gen in fam.generators() {
            joint.insert_dense(&gen.coords(3));
        }
        out.push(Transversality {
            iso: spec.iso.clone(),
            family: fam.family.id.clone(),
            invariant_dim: inv,
            family_dim: fam_e.rank(),
            orbit_dim: orbit.rank(),
            transversal: joint.rank() == orbit.rank() + fam_e.rank(),
        });
    }
    Ok(out)
}

/// A Lie algebra on `h ⊕ ℝⁿ` built from torsion and curvature.
#[derive(Clone, Debug, Serialize)]
pub struct ReconstructedAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    /// `c[i][j][k]` with `[bᵢ, bⱼ] = Σₖ c[i][j][k] bₖ`.
    pub structure: Vec<Vec<Vec<Scalar>>>,
    /// Number of vector directions; their metric is the identity.
    pub vector_dim: usize,
    pub jacobi_holds: bool,
    /// Triples `(i, j, k)` violating the Jacobi identity.
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    pub killing: KillingForm,
}

fn vector_coords(v: &MultiVector, dirs: &[usize]) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut rest = v.clone();
    for &d in dirs {
        let c = v.coeff(1 << (d - 1));
        rest = rest - MultiVector::e(d).scale(&c);
        out.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::NotClosed("vector part of the bracket".into()));
    }
    Ok(out)
}

/// Builds `h ⊕ span(e_d : d ∈ dirs)` with
/// `[A, B] = −[A, B]_{so(8)}`, `[A, X] = X⌟A` and `[X, Y] = −T(X, Y, ·) − R(X ∧ Y)`,
/// and checks the Jacobi identity exactly.
pub fn reconstruct_lie_algebra(
    t: &MultiVector,
    r: &CurvatureTensor,
    h: &Subalgebra,
    dirs: &[usize],
) -> Result<ReconstructedAlgebra> {
    t.require_grade(3)?;
    let m = h.dim();
    let nv = dirs.len();
    let n = m + nv;
    let hcols: Vec<Vec<Scalar>> = h.basis.iter().map(|b| b.coords(2)).collect();
    let h_coords = |x: &MultiVector| -> Result<Vec<Scalar>> {
        if m == 0 {
            return if x.is_zero() {
                Ok(vec![])
            } else {
                Err(Error::NotClosed(h.name.clone()))
            };
        }
        linalg::coordinates(&hcols, &x.coords(2)).ok_or_else(|| Error::NotClosed(h.name.clone()))
    };
    let idx2 = blade_index(2);
    let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
    let set = |c: &mut Vec<Vec<Vec<Scalar>>>, i: usize, j: usize, v: Vec<Scalar>| {
        for (k, x) in v.into_iter().enumerate() {
            c[j][i][k] = -&x;
            c[i][j][k] = x;
        }
    };
    for a in 0..m {
        for b in a + 1..m {
            let br = bracket(&h.basis[a], &h.basis[b]);
            let mut v = h_coords(&(-br))?;
            v.resize(n, Scalar::zero());
            set(&mut c, a, b, v);
        }
        for (xi, &d) in dirs.iter().enumerate() {
            let img = h.basis[a].contract_by(&MultiVector::e(d));
            let mut v = vec![Scalar::zero(); m];
            v.extend(vector_coords(&img, dirs)?);
            set(&mut c, a, m + xi, v);
        }
    }
    for (xi, &dx) in dirs.iter().enumerate() {
        for (yi, &dy) in dirs.iter().enumerate().skip(xi + 1) {
            let txy = t.contract_by(&MultiVector::e(dx)).contract_by(&MultiVector::e(dy));
            let mask = (1u8 << (dx - 1)) | (1u8 << (dy - 1));
            let col = idx2[&mask];
            let sign = if dx < dy { int(1) } else { int(-1) };
            let rxy: MultiVector = MultiVector::from_coords(
                2,
                &(0..L2).map(|i| &r.matrix[i][col] * &sign).collect::<Vec<_>>(),
            );
            let mut v: Vec<Scalar> = h_coords(&(-rxy))?;
            v.extend(vector_coords(&(-txy), dirs)?);
            set(&mut c, m + xi, m + yi, v);
        }
    }
    let mut failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                // Σ_cyc [[bᵢ, bⱼ], bₖ]
                let ok = (0..n).all(|l| {
                    let mut s = Scalar::zero();
                    for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for mid in 0..n {
                            let x = &c[a][b][mid];
                            if !x.is_zero() {
                                s += x * &c[mid][cc][l];
                            }
                        }
                    }
                    s.is_zero()
                });
                if !ok {
                    failures.push((i, j, k));
                }
            }
        }
    }
    let mut labels: Vec<String> = (0..m).map(|a| format!("{}[{}]", h.name, a + 1)).collect();
    labels.extend(dirs.iter().map(|d| format!("e{d}")));
    Ok(ReconstructedAlgebra {
        dim: n,
        labels,
        killing: KillingForm::from_structure(&c),
        structure: c,
        vector_dim: nv,
        jacobi_holds: failures.is_empty(),
        jacobi_failures: failures,
    })
}

/// The 3-forms `α± = (Z₁ − 2Z₂)∧e₇ + D ± √3·Z₃∧e₈`.
pub fn alpha(sign: i64) -> MultiVector {
    let n = named();
    (&n.z1 - &n.z2.scale(&int(2))).wedge(&MultiVector::e(7))
        + n.d.clone()
        + n.z3.wedge(&MultiVector::e(8)).scale(&(Scalar::sqrt3() * int(sign)))
}

/// The printed su(3) basis matched with `e₁ … e₈` for `α±`.
pub fn su3_basis_for_alpha(sign: i64) -> Vec<MultiVector> {
    let t = &p(7) + &p(8).scale(&int(2));
    vec![
        p(4),
        p(3),
        p(1),
        p(2),
        -p(5),
        -p(6),
        p(7),
        t.scale(&(Scalar::sqrt3() * q(sign, 3))),
    ]
}

/// Available reconstruction examples.
pub const EXAMPLES: [&str; 3] = ["1", "2", "t2"];

/// Runs a named reconstruction example.
pub fn reconstruct_example(name: &str) -> Result<ReconstructedAlgebra> {
    let all: Vec<usize> = (1..=DIM).collect();
    match name {
        "1" => reconstruct_lie_algebra(
            &MultiVector::basis(&[5, 6, 7]),
            &CurvatureTensor::zero("zero"),
            &catalog("zero")?,
            &all,
        ),
        "2" | "2+" => reconstruct_lie_algebra(&alpha(1), &CurvatureTensor::zero("zero"), &catalog("zero")?, &all),
        "2-" => reconstruct_lie_algebra(&alpha(-1), &CurvatureTensor::zero("zero"), &catalog("zero")?, &all),
        "t2" => {
            let case = crate::curvature::build_rc("5.2.2", None, &[int(1)])?;
            reconstruct_lie_algebra(&case.torsion, &case.tensor, &catalog("t2")?, &(1..=7).collect::<Vec<_>>())
        }
        _ => Err(Error::UnknownCase(format!("example {name}"))),
    }
}

/// Comparison of the Example 2 bracket with the printed su(3) basis.
#[derive(Clone, Debug, Serialize)]
pub struct Su3Match {
    /// The bracket `[eᵢ, eⱼ]` transported from su(3) reproduces `α` via
    /// `α(X, Y, Z) = −g([X, Y], Z)`.
    pub reproduces_alpha: bool,
    /// The Killing form of the printed basis.
    pub killing: KillingForm,
}

pub fn su3_match(sign: i64) -> Result<Su3Match> {
    let basis = su3_basis_for_alpha(sign);
    let sub = Subalgebra::new("su3", basis.clone());
    let c = sub.structure_constants()?;
    let a = alpha(sign);
    let mut ok = true;
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let want = a
                    .contract_by(&MultiVector::e(i + 1))
                    .contract_by(&MultiVector::e(j + 1))
                    .coeff(1 << k);
                if -&c[i][j][k] != want {
                    ok = false;
                }
            }
        }
    }
    Ok(Su3Match {
        reproduces_alpha: ok,
        killing: KillingForm::from_structure(&c),
    })
}

/// Result of checking the splitting conditions (∗).
#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_plus: Option<MultiVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_minus: Option<MultiVector>,
}

fn span_echelon(vs: &[MultiVector]) -> Echelon {
    let mut e = Echelon::new(DIM);
    for v in vs {
        e.insert_dense(&v.coords(1));
    }
    e
}

fn triples(vs: &[MultiVector]) -> Vec<MultiVector> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                out.push(vs[i].wedge(&vs[j]).wedge(&vs[k]));
            }
        }
    }
    out
}

/// Checks `T(X₊, X₋, ·) = 0`, `T(X₊, Y₊, ·) ∈ V₊`, `T(X₋, Y₋, ·) ∈ V₋` for
/// an orthogonal splitting `ℝ⁸ = V₊ ⊕ V₋`, and returns `T = T₊ + T₋`.
pub fn splitting_check(t: &MultiVector, plus: &[MultiVector], minus: &[MultiVector]) -> Result<SplittingReport> {
    t.require_grade(3)?;
    for v in plus.iter().chain(minus) {
        v.require_grade(1)?;
    }
    let all: Vec<MultiVector> = plus.iter().chain(minus).cloned().collect();
    if span_echelon(&all).rank() != DIM {
        return Err(Error::NotSpanning(format!("{} vectors of rank {}", all.len(), span_echelon(&all).rank())));
    }
    if plus.iter().any(|x| minus.iter().any(|y| !x.inner(y).is_zero())) {
        return Err(Error::InvalidParameters("the plus and minus parts are not orthogonal".into()));
    }
    let tt = |x: &MultiVector, y: &MultiVector| t.contract_by(x).contract_by(y);
    let ep = span_echelon(plus);
    let em = span_echelon(minus);
    let mut holds = plus.iter().all(|x| minus.iter().all(|y| tt(x, y).is_zero()));
    holds &= plus.iter().all(|x| plus.iter().all(|y| ep.contains(&linalg::sparse(&tt(x, y).coords(1)))));
    holds &= minus.iter().all(|x| minus.iter().all(|y| em.contains(&linalg::sparse(&tt(x, y).coords(1)))));
    if !holds {
        return Ok(SplittingReport {
            holds,
            t_plus: None,
            t_minus: None,
        });
    }
    let tp = triples(plus);
    let tm = triples(minus);
    let cols: Vec<Vec<Scalar>> = tp.iter().chain(&tm).map(|x| x.coords(3)).collect();
    let coords = linalg::coordinates(&cols, &t.coords(3));
    let Some(coords) = coords else {
        return Ok(SplittingReport {
            holds: false,
            t_plus: None,
            t_minus: None,
        });
    };
    let comb = |forms: &[MultiVector], cs: &[Scalar]| -> MultiVector {
        forms.iter().zip(cs).map(|(f, c)| f.scale(c)).sum()
    };
    Ok(SplittingReport {
        holds,
        t_plus: Some(comb(&tp, &coords[..tp.len()])),
        t_minus: Some(comb(&tm, &coords[tp.len()..])),
    })
}

/// The type-I splitting of the u(2) family: `(V₊, V₋)` for parameters `(a₁, a₂, b₁)`.
pub fn u2_type1_splitting(a1: &Scalar, a2: &Scalar, b1: &Scalar) -> (Vec<MultiVector>, Vec<MultiVector>) {
    let e = MultiVector::e;
    let plus = vec![e(1), e(2), e(3), e(4), e(7).scale(&(a2 + b1)) + e(8).scale(a1)];
    let mut last = e(7).scale(&(a2 - &(q(2, 5) * b1))) + e(8).scale(a1);
    if last.is_zero() {
        // On a₁ = 0, a₂ = 2b₁/5 the last direction degenerates; e₈ completes
        // the orthogonal splitting.
        last = e(8);
    }
    let minus = vec![e(5), e(6), last];
    (plus, minus)
}

/// `Re F` for `F = (e₁ + i e₂)∧(e₃ + i e₄)∧(e₅ + i e₆)∧(e₇ + i e₈)`.
pub fn re_f() -> MultiVector {
    let mut out = MultiVector::zero();
    for choice in 0u8..16 {
        let imag = choice.count_ones();
        if imag % 2 == 1 {
            continue;
        }
        let idx: Vec<usize> = (0..4)
            .map(|k| if choice & (1 << k) != 0 { 2 * k + 2 } else { 2 * k + 1 })
            .collect();
        let sign = if imag % 4 == 0 { 1 } else { -1 };
        out = out + MultiVector::basis(&idx).scale(&int(sign));
    }
    out
}

/// `ω = Z + e₇∧e₈`.
pub fn omega() -> MultiVector {
    named().z.clone() + MultiVector::basis(&[7, 8])
}

/// `½ ω∧ω + Re F`.
pub fn phi_from_hermitian() -> MultiVector {
    let w = omega();
    w.wedge(&w).scale(&q(1, 2)) + re_f()
}

/// An object expected to be parallel for a holonomy algebra.
#[derive(Clone, Debug, Serialize)]
pub struct ParallelCheck {
    pub hol: String,
    pub object: String,
    pub parallel: bool,
}

enum Obj {
    Form(&'static str, MultiVector),
    Spin(&'static str, Spinor),
}

/// Checks the printed parallel forms, vectors and spinors of each case.
pub fn parallel_object_checks() -> Result<Vec<ParallelCheck>> {
    let n = named();
    let e = MultiVector::e;
    let psi = Spinor::basis;
    let ze7d = n.z.wedge(&e(7)) + n.d.clone();
    let cases: Vec<(&str, Vec<Obj>)> = vec![
        (
            "so3ir",
            vec![
                Obj::Form("Z∧e7+D", ze7d.clone()),
                Obj::Form("e8", e(8)),
                Obj::Spin("Psi1-Psi2", psi(1).sub(&psi(2))),
                Obj::Spin("Psi9-Psi10", psi(9).sub(&psi(10))),
            ],
        ),
        (
            "su3",
            vec![
                Obj::Form("e7", e(7)),
                Obj::Form("e8", e(8)),
                Obj::Form("Z", n.z.clone()),
                Obj::Form("D", n.d.clone()),
                Obj::Spin("Psi1", psi(1)),
                Obj::Spin("Psi2", psi(2)),
                Obj::Spin("Psi9", psi(9)),
                Obj::Spin("Psi10", psi(10)),
            ],
        ),
        (
            "g2",
            vec![
                Obj::Form("Z∧e7+D", ze7d),
                Obj::Form("e8", e(8)),
                Obj::Spin("Psi1-Psi2", psi(1).sub(&psi(2))),
                Obj::Spin("Psi9-Psi10", psi(9).sub(&psi(10))),
            ],
        ),
        (
            "R+su2",
            vec![
                Obj::Form("Z1", n.z1.clone()),
                Obj::Form("Z2", n.z2.clone()),
                Obj::Spin("Psi9", psi(9)),
                Obj::Spin("Psi10", psi(10)),
            ],
        ),
        (
            "u2",
            vec![
                Obj::Form("Z1", n.z1.clone()),
                Obj::Form("Z2", n.z2.clone()),
                Obj::Form("D", n.d.clone()),
                Obj::Form("e7", e(7)),
                Obj::Form("e8", e(8)),
                Obj::Spin("Psi1", psi(1)),
                Obj::Spin("Psi2", psi(2)),
                Obj::Spin("Psi9", psi(9)),
                Obj::Spin("Psi10", psi(10)),
            ],
        ),
    ];
    let mut out = Vec::new();
    for (hol, objs) in cases {
        let h = catalog(hol)?;
        for o in objs {
            let (name, parallel) = match o {
                Obj::Form(nm, f) => (nm, h.basis.iter().all(|x| act_on_form(x, &f).is_zero())),
                Obj::Spin(nm, s) => (nm, h.basis.iter().all(|x| act_on_spinor(x, &s).is_zero())),
            };
            out.push(ParallelCheck {
                hol: hol.to_string(),
                object: name.to_string(),
                parallel,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipe_examples() {
        assert!(!run_recipe("g2", "su2").unwrap().admissible);
        assert!(!run_recipe("u2", "t1(2,3)").unwrap().admissible);
        let r = run_recipe("R+su2", "R+su2").unwrap();
        assert!(r.admissible);
        assert_eq!(r.families[0].family, "5.4");
        assert!(matches!(
            run_recipe("su3", "g2"),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn u2_no_go() {
        let ng = no_go_531().unwrap();
        assert!(ng.holds, "{ng:?}");
        assert_eq!(ng.components.len(), 1, "{ng:?}");
    }

    #[test]
    fn example_one() {
        let a = reconstruct_example("1").unwrap();
        assert!(a.jacobi_holds);
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let inside = |x: usize| (4..7).contains(&x);
                    if !(inside(i) && inside(j) && inside(k)) {
                        assert!(a.structure[i][j][k].is_zero());
                    }
                }
            }
        }
        assert!(!a.structure[4][5][6].is_zero());
    }

    #[test]
    fn hermitian_reconstruction() {
        assert_eq!(phi_from_hermitian(), named().big_phi);
        let rf = re_f();
        assert_eq!(rf.len(), 8);
        assert!(rf.terms().all(|(_, c)| c.is_one() || (-c).is_one()));
        let w = omega();
        assert_eq!(&named().big_phi - &w.wedge(&w).scale(&q(1, 2)), rf);
    }

    #[test]
    fn parallel_objects() {
        for c in parallel_object_checks().unwrap() {
            assert!(c.parallel, "{c:?}");
        }
    }
}
