//! Algebra of Spin(7)-structures: the splitting Λ³ = Λ³₈ ⊕ Λ³₄₈, the Lee
//! form, Fernández classes, scalar curvatures, the Ricci tensor from the
//! spinorial field equation, and the torsion families of the classification.

use crate::clifford::{clifford_apply, psi0, t_squared, Spinor, SPIN_DIM};
use crate::error::{Error, Result};
use crate::exterior::{named, sigma_t, MultiVector, DIM};
use crate::liealg::{invariant_spinors, iso_dim, Subalgebra};
use crate::linalg::{self, Solution, SparseVec};
use crate::scalars::{int, q, Scalar};
use serde::Serialize;
use std::sync::OnceLock;

/// The generators `∗(eᵢ ∧ Φ)` of Λ³₈; each has squared norm 7.
pub fn lambda8_generators() -> &'static [MultiVector; 8] {
    static G: OnceLock<[MultiVector; 8]> = OnceLock::new();
    G.get_or_init(|| {
        std::array::from_fn(|i| MultiVector::e(i + 1).wedge(&named().big_phi).hodge())
    })
}

/// Orthogonal splitting `T = T₈ + T₄₈` of a 3-form.
pub fn project_8_48(t: &MultiVector) -> Result<(MultiVector, MultiVector)> {
    t.require_grade(3)?;
    let seventh = q(1, 7);
    let t8: MultiVector = lambda8_generators()
        .iter()
        .map(|g| g.scale(&(t.inner(g) * &seventh)))
        .sum();
    let t48 = t - &t8;
    Ok((t8, t48))
}

/// The Lee form `θ = (6/7) ∗(Φ ∧ T)`.
pub fn lee_form(t: &MultiVector) -> Result<MultiVector> {
    t.require_grade(3)?;
    Ok(named().big_phi.wedge(t).hodge().scale(&q(6, 7)))
}

/// Fernández class of a Spin(7)-structure, read off its torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WClass {
    W0,
    W1,
    W2,
    W,
}

impl std::fmt::Display for WClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WClass::W0 => "W0",
            WClass::W1 => "W1",
            WClass::W2 => "W2",
            WClass::W => "W",
        };
        f.write_str(s)
    }
}

pub fn w_class(t: &MultiVector) -> Result<WClass> {
    let (t8, t48) = project_8_48(t)?;
    Ok(match (t8.is_zero(), t48.is_zero()) {
        (true, true) => WClass::W0,
        (true, false) => WClass::W1,
        (false, true) => WClass::W2,
        (false, false) => WClass::W,
    })
}

/// `(Scal^g, Scal^c)` in terms of the torsion components.
pub fn scal_pair(t: &MultiVector) -> Result<(Scalar, Scalar)> {
    let (t8, t48) = project_8_48(t)?;
    let n8 = t8.norm2();
    let n48 = t48.norm2();
    let scal_g = q(27, 2) * &n8 - q(1, 2) * &n48;
    let scal_c = int(12) * &n8 - int(2) * &n48;
    debug_assert_eq!(scal_c, &scal_g - &(q(3, 2) * t.norm2()));
    Ok((scal_g, scal_c))
}

/// A symmetric 8×8 Ricci tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RicciTensor {
    pub matrix: Vec<Vec<Scalar>>,
}

impl RicciTensor {
    pub fn zero() -> Self {
        RicciTensor {
            matrix: vec![vec![Scalar::zero(); DIM]; DIM],
        }
    }

    pub fn from_diag(d: &[Scalar]) -> Self {
        let mut r = Self::zero();
        for (i, x) in d.iter().enumerate() {
            r.matrix[i][i] = x.clone();
        }
        r
    }

    pub fn diag(&self) -> Vec<Scalar> {
        (0..DIM).map(|i| self.matrix[i][i].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| i == j || self.matrix[i][j].is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// Diagonal if diagonal, full matrix otherwise — the JSON shape used in reports.
    pub fn to_json(&self) -> serde_json::Value {
        if self.is_diagonal() {
            serde_json::json!({ "diag": self.diag() })
        } else {
            serde_json::json!({ "matrix": self.matrix })
        }
    }
}

impl std::fmt::Display for RicciTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_diagonal() {
            let d: Vec<String> = self.diag().iter().map(|x| x.to_string()).collect();
            write!(f, "diag({})", d.join(", "))
        } else {
            let rows: Vec<String> = self
                .matrix
                .iter()
                .map(|r| {
                    let c: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                    format!("[{}]", c.join(", "))
                })
                .collect();
            write!(f, "[{}]", rows.join(", "))
        }
    }
}

/// Result of solving the spinorial Ricci equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RicciOutcome {
    /// A solution; `unique` tells whether the system pins Ric down completely.
    Consistent { ric: RicciTensor, unique: bool },
    Inconsistent,
}

impl RicciOutcome {
    pub fn ricci(&self) -> Option<&RicciTensor> {
        match self {
            RicciOutcome::Consistent { ric, .. } => Some(ric),
            RicciOutcome::Inconsistent => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, RicciOutcome::Consistent { .. })
    }
}

/// Index pairs `(a, b)` with `a ≤ b`, the 36 unknowns of a symmetric 8×8 matrix.
pub fn sym_pairs() -> Vec<(usize, usize)> {
    (0..DIM)
        .flat_map(|a| (a..DIM).map(move |b| (a, b)))
        .collect()
}

/// Rows of the linear system `−4 Σ_j Ric_ij e_j·ψ = (T² − 7‖T₈‖²) eᵢ·ψ` in the
/// 36 symmetric unknowns, together with the right-hand sides.
pub fn ricci_rows(t: &MultiVector, spinors: &[Spinor]) -> Result<Vec<(SparseVec, Scalar)>> {
    let (t8, _) = project_8_48(t)?;
    let c = int(7) * t8.norm2();
    let pairs = sym_pairs();
    let mut rows = Vec::new();
    let e: Vec<MultiVector> = (1..=DIM).map(MultiVector::e).collect();
    for psi in spinors {
        let e_psi: Vec<Spinor> = e.iter().map(|v| clifford_apply(v, psi)).collect();
        for i in 0..DIM {
            let x = &e_psi[i];
            let rhs = t_squared(t, x)?.sub(&x.scale(&c));
            for r in 0..SPIN_DIM {
                let mut row = SparseVec::new();
                for (pi, &(a, b)) in pairs.iter().enumerate() {
                    let mut v = Scalar::zero();
                    if a == i {
                        v += &e_psi[b].coords[r];
                    }
                    if b == i && a != b {
                        v += &e_psi[a].coords[r];
                    }
                    if !v.is_zero() {
                        row.insert(pi, v * int(-4));
                    }
                }
                rows.push((row, rhs.coords[r].clone()));
            }
        }
    }
    Ok(rows)
}

/// Residual `T²ψ − 7‖T₈‖²ψ`; it must vanish for the Ricci system to make sense.
pub fn feasibility_residual(t: &MultiVector, psi: &Spinor) -> Result<Spinor> {
    let (t8, _) = project_8_48(t)?;
    Ok(t_squared(t, psi)?.sub(&psi.scale(&(int(7) * t8.norm2()))))
}

fn ricci_from_unknowns(x: &[Scalar]) -> RicciTensor {
    let mut r = RicciTensor::zero();
    for (pi, (a, b)) in sym_pairs().into_iter().enumerate() {
        r.matrix[a][b] = x[pi].clone();
        r.matrix[b][a] = x[pi].clone();
    }
    r
}

/// Solves the Ricci equation for the given parallel spinors.
pub fn ricci_for_spinors(t: &MultiVector, spinors: &[Spinor]) -> Result<RicciOutcome> {
    for psi in spinors {
        if !feasibility_residual(t, psi)?.is_zero() {
            return Ok(RicciOutcome::Inconsistent);
        }
    }
    let rows = ricci_rows(t, spinors)?;
    Ok(match linalg::solve(&rows, 36) {
        Solution::Inconsistent => RicciOutcome::Inconsistent,
        Solution::Solved { particular, kernel } => RicciOutcome::Consistent {
            ric: ricci_from_unknowns(&particular),
            unique: kernel.is_empty(),
        },
    })
}

/// Solves the Ricci equation for all `h`-invariant spinors.
pub fn ricci_solver(t: &MultiVector, h: &Subalgebra) -> Result<RicciOutcome> {
    t.require_grade(3)?;
    ricci_for_spinors(t, &invariant_spinors(h))
}

/// `Ric^g = Ric^c + ¼ Σ_{m,n} T_imn T_jmn`.
pub fn ricci_g_relation(t: &MultiVector, ric_c: &RicciTensor) -> Result<RicciTensor> {
    t.require_grade(3)?;
    let c: Vec<MultiVector> = (1..=DIM)
        .map(|i| t.contract_by(&MultiVector::e(i)))
        .collect();
    let mut out = ric_c.clone();
    for i in 0..DIM {
        for j in 0..DIM {
            // Σ over ordered (m, n) counts each unordered pair twice.
            let v = c[i].inner(&c[j]) * q(1, 2);
            out.matrix[i][j] += v;
        }
    }
    Ok(out)
}

/// Outcome of testing `−4(X⌟σ^T)·Ψ = (T² − 7‖T₈‖²)·X·Ψ`.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    /// The identity holds at `Ψ₀` for every basis vector `X`.
    pub holds_at_psi0: bool,
    /// Indices `k` such that the identity holds at `Ψ_k` for all `X`.
    pub holds_for_basis: Vec<usize>,
    /// `−4(X⌟σ^T) = T²X − XT²` as operators on all spinors, for every `X`.
    pub commutator_identity: bool,
    /// Largest absolute coordinate of the defect at `Ψ₀` (floating point, for reporting).
    pub max_defect_psi0: f64,
}

fn sigma_defect(
    t: &MultiVector,
    sigma: &MultiVector,
    c: &Scalar,
    psi: &Spinor,
) -> Result<Vec<Spinor>> {
    (1..=DIM)
        .map(|i| {
            let x = MultiVector::e(i);
            let lhs = clifford_apply(&sigma.contract_by(&x), psi).scale(&int(-4));
            let xpsi = clifford_apply(&x, psi);
            let rhs = t_squared(t, &xpsi)?.sub(&xpsi.scale(c));
            Ok(lhs.sub(&rhs))
        })
        .collect()
}

pub fn sigma_identity_check(t: &MultiVector) -> Result<SigmaReport> {
    let sigma = sigma_t(t)?;
    let (t8, _) = project_8_48(t)?;
    let c = int(7) * t8.norm2();
    let d0 = sigma_defect(t, &sigma, &c, &psi0())?;
    let holds_at_psi0 = d0.iter().all(|s| s.is_zero());
    let max_defect_psi0 = d0
        .iter()
        .flat_map(|s| s.coords.iter().map(|x| x.to_f64().abs()))
        .fold(0.0, f64::max);
    let mut holds_for_basis = Vec::new();
    for k in 1..=SPIN_DIM {
        if sigma_defect(t, &sigma, &c, &Spinor::basis(k))?
            .iter()
            .all(|s| s.is_zero())
        {
            holds_for_basis.push(k);
        }
    }
    let mut commutator_identity = true;
    'outer: for k in 1..=SPIN_DIM {
        let psi = Spinor::basis(k);
        for i in 1..=DIM {
            let x = MultiVector::e(i);
            let lhs = clifford_apply(&sigma.contract_by(&x), &psi).scale(&int(-4));
            let rhs = t_squared(t, &clifford_apply(&x, &psi))?
                .sub(&clifford_apply(&x, &t_squared(t, &psi)?));
            if lhs != rhs {
                commutator_identity = false;
                break 'outer;
            }
        }
    }
    Ok(SigmaReport {
        holds_at_psi0,
        holds_for_basis,
        commutator_identity,
        max_defect_psi0,
    })
}

/// A linear locus in parameter space: all listed linear forms vanish.
#[derive(Clone, Debug, Serialize)]
pub struct Locus {
    pub equations: Vec<Vec<Scalar>>,
    pub text: String,
}

impl Locus {
    pub fn contains(&self, params: &[Scalar]) -> bool {
        self.equations.iter().all(|eq| {
            eq.iter()
                .zip(params)
                .map(|(a, b)| a * b)
                .sum::<Scalar>()
                .is_zero()
        })
    }
}

/// A torsion family: `T = Σ pᵢ Gᵢ` over the listed generators.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionFamily {
    pub id: String,
    pub generators: Vec<MultiVector>,
    pub param_names: Vec<String>,
    /// Index of the parameter required to be positive, if any.
    pub positive: Option<usize>,
    pub exclusions: Vec<Locus>,
    /// Catalog name of the isotropy algebra of a generic member.
    pub iso: String,
    /// Dimension of that isotropy algebra.
    pub iso_dim: usize,
}

/// Identifiers of the torsion families.
pub const FAMILY_IDS: [&str; 6] = ["5.1", "5.2-I", "5.2-II", "5.3-I", "5.3-II", "5.4"];

fn e(i: usize) -> MultiVector {
    MultiVector::e(i)
}

fn locus(n: usize, eqs: &[&[(usize, Scalar)]], text: &str) -> Locus {
    Locus {
        equations: eqs
            .iter()
            .map(|terms| {
                let mut v = vec![Scalar::zero(); n];
                for (i, c) in terms.iter() {
                    v[*i] = c.clone();
                }
                v
            })
            .collect(),
        text: text.to_string(),
    }
}

pub fn family(id: &str) -> Result<TorsionFamily> {
    let n = named();
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let z_e7_d = n.z.wedge(&e(7)) + n.d.clone();
    let fam = match id {
        "5.1" => TorsionFamily {
            id: id.into(),
            generators: vec![
                z_e7_d.clone(),
                (&n.z1 - &n.z2.scale(&int(6))).wedge(&e(7)) + n.d.clone(),
                n.z3.wedge(&e(8)),
            ],
            param_names: names(&["a1", "b1", "b2"]),
            positive: None,
            exclusions: vec![],
            iso: "R+su2c".into(),
            iso_dim: 4,
        },
        "5.2-I" => TorsionFamily {
            id: id.into(),
            generators: vec![n.z.wedge(&e(7))],
            param_names: names(&["a1"]),
            positive: Some(0),
            exclusions: vec![],
            iso: "su3".into(),
            iso_dim: 8,
        },
        "5.2-II" => TorsionFamily {
            id: id.into(),
            generators: vec![
                n.dbar.clone(),
                n.d1.scale(&int(2)) + n.d2.scale(&int(5)) + n.d5.scale(&int(3)),
                &n.d1 - &n.d2 - n.d5.scale(&int(2)),
            ],
            param_names: names(&["a1", "a2", "b1"]),
            positive: Some(2),
            exclusions: vec![],
            iso: "so3".into(),
            iso_dim: 3,
        },
        "5.3-I" => {
            let y = &n.z1 + &n.z2.scale(&int(5));
            TorsionFamily {
                id: id.into(),
                generators: vec![y.wedge(&e(8)), y.wedge(&e(7)), n.w.wedge(&e(7))],
                param_names: names(&["a1", "a2", "b1"]),
                positive: Some(2),
                exclusions: vec![
                    locus(3, &[&[(0, int(1))], &[(1, int(1)), (2, int(1))]], "a1 = 0, b1 = -a2"),
                    locus(
                        3,
                        &[&[(0, int(1))], &[(1, int(4)), (2, int(-3))]],
                        "a1 = 0, b1 = 4/3*a2",
                    ),
                ],
                iso: "u2".into(),
                iso_dim: 4,
            }
        }
        "5.3-II" => TorsionFamily {
            id: id.into(),
            generators: vec![
                n.w.wedge(&e(8)) + n.dbar.scale(&q(7, 4)),
                n.w.wedge(&e(7)) + n.d.scale(&q(7, 4)),
                n.w.wedge(&e(7)),
            ],
            param_names: names(&["a1", "a2", "b1"]),
            positive: Some(2),
            exclusions: vec![
                locus(
                    3,
                    &[&[(0, int(1))], &[(1, int(3)), (2, int(-4))]],
                    "a1 = 0, b1 = 3/4*a2",
                ),
                locus(3, &[&[(0, int(1))], &[(1, int(1)), (2, int(1))]], "a1 = 0, b1 = -a2"),
            ],
            iso: "u2".into(),
            iso_dim: 4,
        },
        "5.4" => TorsionFamily {
            id: id.into(),
            generators: vec![&n.d3 - &n.d4],
            param_names: names(&["b1"]),
            positive: Some(0),
            exclusions: vec![],
            iso: "R+su2".into(),
            iso_dim: 4,
        },
        _ => return Err(Error::UnknownFamily(id.to_string())),
    };
    Ok(fam)
}

impl TorsionFamily {
    pub fn evaluate(&self, params: &[Scalar]) -> MultiVector {
        self.generators
            .iter()
            .zip(params)
            .map(|(g, p)| g.scale(p))
            .sum()
    }

    /// Parameters from `name=value` pairs; unspecified parameters are 0.
    pub fn params_from(&self, pairs: &[(String, Scalar)]) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.param_names.len()];
        for (k, v) in pairs {
            let i = self
                .param_names
                .iter()
                .position(|n| n == k)
                .ok_or_else(|| Error::UnknownParameter(k.clone()))?;
            out[i] = v.clone();
        }
        Ok(out)
    }

    /// Whether the parameters satisfy the sign condition and avoid the exclusions.
    pub fn admissible_params(&self, params: &[Scalar]) -> bool {
        if let Some(i) = self.positive {
            if !params[i].is_positive() {
                return false;
            }
        }
        !self.exclusions.iter().any(|l| l.contains(params))
    }

    /// Whether the isotropy algebra of `T(params)` has exactly the declared dimension.
    pub fn generic_at(&self, params: &[Scalar]) -> bool {
        iso_dim(&self.evaluate(params)) == self.iso_dim
    }

    /// The closed-form Ricci diagonal of the family.
    pub fn ricci_formula(&self, params: &[Scalar]) -> Vec<Scalar> {
        let z = Scalar::zero;
        let p = |i: usize| params[i].clone();
        match self.id.as_str() {
            "5.1" => {
                let (a1, b1, b2) = (p(0), p(1), p(2));
                let lam = int(3) * (&a1 + &b1) * (int(4) * &a1 - int(3) * &b1) - b2.square();
                let kap = int(4) * (&a1 + &b1) * (int(3) * &a1 - int(4) * &b1);
                let mut d = vec![lam; 4];
                d.extend(vec![kap; 3]);
                d.push(z());
                d
            }
            "5.2-I" => {
                let lam = int(2) * p(0).square();
                let mut d = vec![lam; 6];
                d.extend([z(), z()]);
                d
            }
            "5.2-II" => {
                let (a1, a2, b1) = (p(0), p(1), p(2));
                let lam = int(4) * a1.square()
                    + int(4) * (int(2) * &a2 + &b1) * (int(5) * &a2 - &b1);
                let mut d = vec![lam; 6];
                d.extend([z(), z()]);
                d
            }
            "5.3-I" => {
                let (a1, a2, b1) = (p(0), p(1), p(2));
                let lam = int(6) * a1.square() + (&a2 + &b1) * (int(6) * &a2 - &b1);
                let kap = int(10) * a1.square() + int(2) * (&a2 + &b1) * (int(5) * &a2 - int(2) * &b1);
                let mut d = vec![lam; 4];
                d.extend([kap.clone(), kap, z(), z()]);
                d
            }
            "5.3-II" => {
                let (a1, a2, b1) = (p(0), p(1), p(2));
                let s = a1.square() + a2.square();
                let lam = q(45, 4) * &s - int(2) * &a2 * &b1 - b1.square();
                let kap = q(33, 4) * &s - int(8) * &a2 * &b1 - int(4) * b1.square();
                let mut d = vec![lam; 4];
                d.extend([kap.clone(), kap, z(), z()]);
                d
            }
            "5.4" => {
                let v = int(-4) * p(0).square();
                vec![z(), z(), z(), z(), v.clone(), v, z(), z()]
            }
            _ => unreachable!("family ids are validated on construction"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn lambda8_generators_orthogonal() {
        let g = lambda8_generators();
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { int(7) } else { int(0) };
                assert_eq!(g[i].inner(&g[j]), want);
            }
        }
    }

    #[test]
    fn projections_of_named_forms() {
        let n = named();
        let t = &n.d3 - &n.d4;
        let (t8, t48) = project_8_48(&t).unwrap();
        assert!(t8.is_zero());
        assert_eq!(t48, t);
        let g = n.z.wedge(&e(7)) + n.d.clone();
        let (a, b) = project_8_48(&g).unwrap();
        assert_eq!(a.norm2() + b.norm2(), int(7));
        assert!(a.inner(&b).is_zero());
        let f = lambda8_generators()[7].clone();
        assert_eq!(project_8_48(&f).unwrap(), (f, MultiVector::zero()));
    }

    #[test]
    fn classes() {
        let n = named();
        assert_eq!(w_class(&MultiVector::zero()).unwrap(), WClass::W0);
        let g = n.z.wedge(&e(7)) + n.d.clone();
        assert_eq!(w_class(&g).unwrap(), WClass::W2);
        let f = family("5.2-II").unwrap();
        let t = f.evaluate(&[int(0), int(0), int(1)]);
        assert_eq!(w_class(&t).unwrap(), WClass::W1);
    }

    #[test]
    fn scal_of_balanced_norm_four() {
        let n = named();
        let d = &n.d3 - &n.d4;
        assert_eq!(d.norm2(), int(4));
        assert_eq!(scal_pair(&d).unwrap(), (int(-2), int(-8)));
        assert_eq!(scal_pair(&MultiVector::zero()).unwrap(), (int(0), int(0)));
    }

    #[test]
    fn ricci_g2_example() {
        let f = family("5.1").unwrap();
        let t = f.evaluate(&[int(1), int(0), int(0)]);
        let r = ricci_solver(&t, &catalog("R+su2c").unwrap()).unwrap();
        let mut want = vec![int(12); 7];
        want.push(int(0));
        assert_eq!(r.ricci().unwrap(), &RicciTensor::from_diag(&want));
        let r = ricci_solver(&t, &catalog("su2").unwrap()).unwrap();
        assert_eq!(r, RicciOutcome::Inconsistent);
    }

    #[test]
    fn ricci_balanced_example() {
        let f = family("5.4").unwrap();
        let t = f.evaluate(&[int(1)]);
        let r = ricci_solver(&t, &catalog("R+su2").unwrap()).unwrap();
        let want = [0, 0, 0, 0, -4, -4, 0, 0].map(int);
        assert_eq!(r.ricci().unwrap(), &RicciTensor::from_diag(&want));
    }
}
