//! spin(7) ⊂ so(8) realized on 2-forms: brackets, actions on forms and
//! spinors, the catalog of subalgebras, invariant subspaces, isotropy
//! algebras, normalizers and Killing forms.
//!
//! A 2-form `ω = Σ ω_ij e_ij` is identified with the skew matrix
//! `Σ ω_ij E_ij`, where `E_ij` has `+1` at `(i, j)` and `−1` at `(j, i)`.
//! On vectors it acts by `ρ(ω)v = 2·(v ⌟ ω)`, the normalization under which
//! `ω·(v·ψ) − v·(ω·ψ) = (ρ(ω)v)·ψ` holds for the Clifford action.

use crate::clifford::{clifford_apply, psi0, Spinor, SPIN_DIM};
use crate::error::{Error, Result};
use crate::exterior::{blades, mask_indices, wedge_sign, MultiVector, DIM};
use crate::linalg::{self, Echelon, SparseVec};
use crate::scalars::{int, q, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// An element of so(8) ≅ Λ²(ℝ⁸).
pub type LieElement = MultiVector;

/// Skew 8×8 matrix of a 2-form.
pub fn skew(x: &LieElement) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); DIM]; DIM];
    for (mask, c) in x.terms() {
        let idx = mask_indices(mask);
        debug_assert_eq!(idx.len(), 2);
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        m[i][j] += c;
        m[j][i] -= c;
    }
    m
}

/// Inverse of [`skew`] on skew-symmetric matrices.
pub fn from_skew(m: &[Vec<Scalar>]) -> LieElement {
    let mut x = MultiVector::zero();
    for i in 0..DIM {
        for j in i + 1..DIM {
            x.add_term((1 << i) | (1 << j), m[i][j].clone());
        }
    }
    x
}

/// The Lie bracket, computed as a matrix commutator.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    let a = skew(x);
    let b = skew(y);
    let ab = linalg::mat_mul(&a, &b);
    let ba = linalg::mat_mul(&b, &a);
    let c: Vec<Vec<Scalar>> = ab
        .iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(u, v)| u - v).collect())
        .collect();
    from_skew(&c)
}

/// The vector action `ρ(x)v = 2·(v ⌟ x)` as an 8×8 matrix acting on columns.
pub fn rho_matrix(x: &LieElement) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); DIM]; DIM];
    for i in 1..=DIM {
        let img = x.contract_by(&MultiVector::e(i));
        for (mask, c) in img.terms() {
            let j = mask.trailing_zeros() as usize;
            m[j][i - 1] = c * &int(2);
        }
    }
    m
}

/// `ρ(x)v` for a 1-form `v`.
pub fn rho(x: &LieElement, v: &MultiVector) -> MultiVector {
    x.contract_by(v).scale(&int(2))
}

/// Derivation action of `x` on forms, given its vector-action matrix.
fn act_with_matrix(rho: &[Vec<Scalar>], a: &MultiVector) -> MultiVector {
    let mut out = MultiVector::zero();
    for (mask, c) in a.terms() {
        for i in 0..DIM {
            if mask & (1 << i) == 0 {
                continue;
            }
            let rest = mask ^ (1 << i);
            // e_K = s · e_i ∧ e_rest
            let s = if (mask & ((1u8 << i) - 1)).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            };
            for (j, row) in rho.iter().enumerate() {
                let r = &row[i];
                if r.is_zero() || rest & (1 << j) != 0 {
                    continue;
                }
                let sign = s * wedge_sign(1 << j, rest);
                let t = c * r;
                out.add_term(rest | (1 << j), if sign > 0 { t } else { -t });
            }
        }
    }
    out
}

/// The natural action of `x ∈ so(8)` on forms (derivation extension of ρ).
pub fn act_on_form(x: &LieElement, a: &MultiVector) -> MultiVector {
    act_with_matrix(&rho_matrix(x), a)
}

/// The spin action of `x` on spinors: the Clifford product `x · ψ`.
pub fn act_on_spinor(x: &LieElement, psi: &Spinor) -> Spinor {
    clifford_apply(x, psi)
}

/// The seven linear equations cutting spin(7) out of so(8).
pub fn spin7_equations(x: &LieElement) -> [Scalar; 7] {
    let w = |i: usize, j: usize| x.coeff_of(&[i, j]);
    [
        w(1, 8) + w(2, 7) - w(3, 6) - w(4, 5),
        w(2, 8) - w(1, 7) - w(3, 5) + w(4, 6),
        w(3, 8) + w(1, 6) + w(2, 5) + w(4, 7),
        w(4, 8) + w(1, 5) - w(2, 6) - w(3, 7),
        w(5, 8) - w(1, 4) - w(2, 3) + w(6, 7),
        w(6, 8) - w(1, 3) + w(2, 4) - w(5, 7),
        w(7, 8) + w(1, 2) + w(3, 4) + w(5, 6),
    ]
}

/// Membership in spin(7) via the seven equations.
pub fn in_spin7(x: &LieElement) -> bool {
    x.is_homogeneous(2) && spin7_equations(x).iter().all(|c| c.is_zero())
}

/// Membership in spin(7) via `x · Ψ₀ = 0`.
pub fn in_spin7_clifford(x: &LieElement) -> bool {
    x.is_homogeneous(2) && act_on_spinor(x, &psi0()).is_zero()
}

fn f(s: &str) -> MultiVector {
    s.parse().expect("basis literal")
}

/// The fixed basis `P₁…P₈, Q₁…Q₆, S₁…S₇` of spin(7) and their labels.
pub struct Spin7Basis {
    pub elements: Vec<LieElement>,
    pub labels: Vec<String>,
}

pub fn spin7_basis() -> &'static Spin7Basis {
    static B: OnceLock<Spin7Basis> = OnceLock::new();
    B.get_or_init(|| {
        let p = [
            "e_35 + e_46",
            "e_36 - e_45",
            "e_15 + e_26",
            "e_16 - e_25",
            "e_13 + e_24",
            "e_14 - e_23",
            "e_12 - e_34",
            "e_34 - e_56",
        ];
        let qs = [
            "2*e_17 - e_35 + e_46",
            "2*e_27 + e_36 + e_45",
            "2*e_37 + e_15 - e_26",
            "2*e_47 - e_16 - e_25",
            "2*e_57 - e_13 + e_24",
            "2*e_67 + e_14 + e_23",
        ];
        let s = [
            "e_18 - e_27",
            "e_28 + e_17",
            "e_38 - e_47",
            "e_48 + e_37",
            "e_58 - e_67",
            "e_68 + e_57",
            "e_78 - e_56",
        ];
        let mut elements = Vec::new();
        let mut labels = Vec::new();
        for (name, list) in [("P", &p[..]), ("Q", &qs[..]), ("S", &s[..])] {
            for (i, t) in list.iter().enumerate() {
                elements.push(f(t));
                labels.push(format!("{name}{}", i + 1));
            }
        }
        Spin7Basis { elements, labels }
    })
}

/// `P_i` (1-based).
pub fn p(i: usize) -> LieElement {
    spin7_basis().elements[i - 1].clone()
}

/// `Q_i` (1-based).
pub fn qq(i: usize) -> LieElement {
    spin7_basis().elements[7 + i].clone()
}

/// `S_i` (1-based).
pub fn s(i: usize) -> LieElement {
    spin7_basis().elements[13 + i].clone()
}

/// A named subalgebra of spin(7), given by a spanning basis of 2-forms.
#[derive(Clone, Debug, Serialize)]
pub struct Subalgebra {
    pub name: String,
    pub basis: Vec<LieElement>,
    /// Torus parameters `(k, l)` for the one-dimensional tori.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<(Scalar, Scalar)>,
    /// Normalization weights of the basis vectors (all 1 unless stated).
    #[serde(skip)]
    pub weights: Vec<Scalar>,
}

impl Subalgebra {
    pub fn new(name: impl Into<String>, basis: Vec<LieElement>) -> Self {
        let weights = vec![Scalar::one(); basis.len()];
        Subalgebra {
            name: name.into(),
            basis,
            params: None,
            weights,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(28);
        for b in &self.basis {
            e.insert_dense(&b.coords(2));
        }
        e
    }

    /// Whether `x` lies in the span of the basis.
    pub fn contains_element(&self, x: &LieElement) -> bool {
        self.echelon().contains(&linalg::sparse(&x.coords(2)))
    }

    /// Subspace inclusion `self ⊆ other`.
    pub fn is_subalgebra_of(&self, other: &Subalgebra) -> bool {
        let e = other.echelon();
        self.basis
            .iter()
            .all(|b| e.contains(&linalg::sparse(&b.coords(2))))
    }

    /// Equality of spans.
    pub fn same_span(&self, other: &Subalgebra) -> bool {
        self.rank() == other.rank() && self.is_subalgebra_of(other)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Bracket closure: every `[b_i, b_j]` lies in the span.
    pub fn is_closed(&self) -> bool {
        let e = self.echelon();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let c = bracket(&self.basis[i], &self.basis[j]);
                if !e.contains(&linalg::sparse(&c.coords(2))) {
                    return false;
                }
            }
        }
        true
    }

    /// Structure constants `c[i][j][k]` with `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.coords(2)).collect();
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let br = bracket(&self.basis[i], &self.basis[j]).coords(2);
                let co = linalg::coordinates(&cols, &br)
                    .ok_or_else(|| Error::NotClosed(self.name.clone()))?;
                for k in 0..n {
                    c[j][i][k] = -&co[k];
                    c[i][j][k] = co[k].clone();
                }
            }
        }
        Ok(c)
    }

    /// All elements of spin(7) satisfy the membership test.
    pub fn inside_spin7(&self) -> bool {
        self.basis.iter().all(in_spin7)
    }

    /// Display name in mathematical notation.
    pub fn pretty(&self) -> String {
        pretty_name(&self.name)
    }
}

/// Mathematical notation for a catalog name.
pub fn pretty_name(name: &str) -> String {
    let fixed = [
        ("g2", "g₂"),
        ("su3", "su(3)"),
        ("su2+su2c", "su(2)⊕su_c(2)"),
        ("u2", "u(2)"),
        ("R+su2c", "ℝ⊕su_c(2)"),
        ("so3", "so(3)"),
        ("su2", "su(2)"),
        ("su2c", "su_c(2)"),
        ("so3ir", "so_ir(3)"),
        ("R+su2", "ℝ⊕su(2)"),
        ("t2", "t²"),
        ("t2tilde", "t̃²"),
        ("t1", "t¹"),
        ("zero", "0"),
        ("spin7", "spin(7)"),
        ("so3diag", "so(3)_diag"),
    ];
    for (k, v) in fixed {
        if k == name {
            return v.to_string();
        }
    }
    if let Some(rest) = name.strip_prefix("t1tilde") {
        return format!("t̃¹{rest}");
    }
    if let Some(rest) = name.strip_prefix("t1") {
        return format!("t¹{rest}");
    }
    name.to_string()
}

/// Names accepted by [`catalog`] (tori take parameters: `t1(k,l)`, `t1tilde(k,l)`).
pub const CATALOG_NAMES: [&str; 17] = [
    "g2", "su3", "su2+su2c", "u2", "R+su2c", "so3", "su2", "su2c", "so3ir", "R+su2", "t2",
    "t2tilde", "t1(k,l)", "t1tilde(k,l)", "zero", "spin7", "so3diag",
];

/// The ten non-abelian algebras of the classification, in catalog order.
pub const NONABELIAN: [&str; 10] = [
    "g2", "su3", "su2+su2c", "u2", "R+su2c", "so3", "su2", "su2c", "so3ir", "R+su2",
];

fn parse_torus_params(name: &str, rest: &str) -> Result<(Scalar, Scalar)> {
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::UnknownAlgebra(name.to_string()));
    }
    let k: Scalar = parts[0].trim().parse()?;
    let l: Scalar = parts[1].trim().parse()?;
    if k.is_zero() && l.is_zero() {
        return Err(Error::UnknownAlgebra(name.to_string()));
    }
    Ok((k, l))
}

/// Looks up a subalgebra of spin(7) by name.
pub fn catalog(name: &str) -> Result<Subalgebra> {
    let t2b = || &p(7) + &p(8).scale(&int(2));
    let t2t = || t2b() - s(7).scale(&int(4));
    let c = Scalar::sqrt15() * q(1, 5);
    let basis: Vec<LieElement> = match name {
        "g2" => (1..=8).map(p).chain((1..=6).map(qq)).collect(),
        "su3" => (1..=8).map(p).collect(),
        "su2+su2c" => vec![p(5), p(6), p(7), t2b(), qq(5), qq(6)],
        "u2" => vec![t2b(), p(5), p(6), p(7)],
        "R+su2c" => vec![p(7), t2b(), qq(5), qq(6)],
        "so3" => vec![&p(1) + &p(5), &p(2) + &p(6), &p(7) + &p(8)],
        "su2" => vec![p(5), p(6), p(7)],
        "su2c" => vec![t2b(), qq(5), qq(6)],
        "so3ir" => vec![
            &p(5) - &qq(2).scale(&c),
            &p(6) + &qq(1).scale(&c),
            &p(7) + &p(8).scale(&int(3)),
        ],
        "R+su2" => vec![t2t(), p(5), p(6), p(7)],
        "t2" => vec![p(7), t2b()],
        "t2tilde" => vec![p(7), t2t()],
        "zero" => vec![],
        "spin7" => spin7_basis().elements.clone(),
        "so3diag" => vec![&p(5) + &qq(5), &p(6) + &qq(6), &p(7) + &p(8)],
        _ => {
            if let Some(rest) = name.strip_prefix("t1tilde") {
                let (k, l) = parse_torus_params(name, rest)?;
                let mut a = Subalgebra::new(
                    format!("t1tilde({k},{l})"),
                    vec![p(7).scale(&k) + t2t().scale(&l)],
                );
                a.params = Some((k, l));
                return Ok(a);
            }
            if let Some(rest) = name.strip_prefix("t1") {
                let (k, l) = parse_torus_params(name, rest)?;
                let mut a = Subalgebra::new(
                    format!("t1({k},{l})"),
                    vec![p(7).scale(&k) + t2b().scale(&l)],
                );
                a.params = Some((k, l));
                return Ok(a);
            }
            return Err(Error::UnknownAlgebra(name.to_string()));
        }
    };
    Ok(Subalgebra::new(name, basis))
}

/// Which space an invariant subspace is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Forms(usize),
    Spinors,
}

/// Kernel of a linear map given by the images of the basis vectors.
fn kernel_from_columns(columns: &[SparseVec], n: usize) -> Vec<Vec<Scalar>> {
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (&r, x) in col {
            rows.entry(r).or_default().insert(j, x.clone());
        }
    }
    linalg::nullspace(rows.into_values(), n)
}

/// Basis of the `g`-invariant `k`-forms.
pub fn invariant_forms(g: &Subalgebra, k: usize) -> Vec<MultiVector> {
    let bl = blades(k);
    let n = bl.len();
    let index: BTreeMap<u8, usize> = bl.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mats: Vec<Vec<Vec<Scalar>>> = g.basis.iter().map(rho_matrix).collect();
    let columns: Vec<SparseVec> = bl
        .iter()
        .map(|&m| {
            let e = MultiVector::blade(m, Scalar::one());
            let mut col = SparseVec::new();
            for (a, mat) in mats.iter().enumerate() {
                for (mm, c) in act_with_matrix(mat, &e).terms() {
                    col.insert(a * n + index[&mm], c.clone());
                }
            }
            col
        })
        .collect();
    kernel_from_columns(&columns, n)
        .into_iter()
        .map(|v| MultiVector::from_coords(k, &v))
        .collect()
}

/// Basis of the `g`-invariant spinors.
pub fn invariant_spinors(g: &Subalgebra) -> Vec<Spinor> {
    let columns: Vec<SparseVec> = (1..=SPIN_DIM)
        .map(|k| {
            let e = Spinor::basis(k);
            let mut col = SparseVec::new();
            for (a, x) in g.basis.iter().enumerate() {
                let img = act_on_spinor(x, &e);
                for (r, c) in img.coords.iter().enumerate() {
                    if !c.is_zero() {
                        col.insert(a * SPIN_DIM + r, c.clone());
                    }
                }
            }
            col
        })
        .collect();
    kernel_from_columns(&columns, SPIN_DIM)
        .into_iter()
        .map(Spinor::from_coords)
        .collect()
}

/// Invariant subspace of `g` in forms of a given degree or in spinors,
/// returned as coordinate vectors (over blades, or over `Ψ₁…Ψ₁₆`).
pub fn invariant_subspace(g: &Subalgebra, space: Space) -> Vec<Vec<Scalar>> {
    match space {
        Space::Forms(k) => invariant_forms(g, k)
            .iter()
            .map(|f| f.coords(k))
            .collect(),
        Space::Spinors => invariant_spinors(g)
            .into_iter()
            .map(|s| s.coords)
            .collect(),
    }
}

/// Kernel of `Σ c_a act(B_a, ·)` over the spin(7) basis `B` applied to `vs`,
/// with values reduced modulo `modulo` (an echelon over grade-`k` coordinates).
fn spin7_kernel(vs: &[MultiVector], k: usize, modulo: Option<&Echelon>) -> Vec<LieElement> {
    let basis = &spin7_basis().elements;
    let idx: BTreeMap<u8, usize> = blades(k).iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let n = idx.len();
    let columns: Vec<SparseVec> = basis
        .iter()
        .map(|x| {
            let mat = rho_matrix(x);
            let mut col = SparseVec::new();
            for (vi, v) in vs.iter().enumerate() {
                let img = act_with_matrix(&mat, v);
                let mut sv: SparseVec = img.terms().map(|(m, c)| (idx[&m], c.clone())).collect();
                if let Some(e) = modulo {
                    sv = e.reduce(sv);
                }
                for (r, c) in sv {
                    col.insert(vi * n + r, c);
                }
            }
            col
        })
        .collect();
    kernel_from_columns(&columns, basis.len())
        .into_iter()
        .map(|c| {
            c.iter()
                .zip(basis)
                .map(|(a, b)| b.scale(a))
                .sum::<MultiVector>()
        })
        .collect()
}

/// The isotropy algebra `{x ∈ spin(7) : x·T = 0}` of a form.
pub fn iso_algebra(t: &MultiVector) -> Result<Subalgebra> {
    let k = t.grade().unwrap_or(3);
    t.require_grade(k)?;
    let basis = spin7_kernel(std::slice::from_ref(t), k, None);
    let mut g = Subalgebra::new("unnamed", basis);
    g.name = identify(&g);
    Ok(g)
}

/// Dimension of the isotropy algebra of a form.
pub fn iso_dim(t: &MultiVector) -> usize {
    let k = t.grade().unwrap_or(3);
    spin7_kernel(std::slice::from_ref(t), k, None).len()
}

/// Dimension of the joint isotropy algebra `⋂ iso(Tᵢ)` of several 3-forms.
pub fn joint_iso_dim(ts: &[MultiVector]) -> usize {
    spin7_kernel(ts, 3, None).len()
}

/// `{x ∈ spin(7) : x·v ∈ (Λ³)_g for every g-invariant 3-form v}`.
pub fn normalizer(g: &Subalgebra) -> Subalgebra {
    let inv = invariant_forms(g, 3);
    let mut e = Echelon::new(56);
    for v in &inv {
        e.insert_dense(&v.coords(3));
    }
    let basis = spin7_kernel(&inv, 3, Some(&e));
    Subalgebra::new(format!("n({})", g.name), basis)
}

/// Killing form `K(x, y) = tr(ad x ∘ ad y)` from structure constants.
pub fn killing_from_structure(c: &[Vec<Vec<Scalar>>]) -> Vec<Vec<Scalar>> {
    let n = c.len();
    let mut k = vec![vec![Scalar::zero(); n]; n];
    for x in 0..n {
        for y in x..n {
            let mut acc = Scalar::zero();
            for a in 0..n {
                for b in 0..n {
                    let u = &c[x][b][a];
                    let v = &c[y][a][b];
                    if !u.is_zero() && !v.is_zero() {
                        acc += u * v;
                    }
                }
            }
            k[y][x] = acc.clone();
            k[x][y] = acc;
        }
    }
    k
}

/// Killing form of a subalgebra and whether it is non-degenerate.
#[derive(Clone, Debug, Serialize)]
pub struct KillingForm {
    pub matrix: Vec<Vec<Scalar>>,
    pub nondegenerate: bool,
    /// `(positive, negative, zero)` eigenvalue counts.
    pub inertia: (usize, usize, usize),
}

impl KillingForm {
    pub fn from_structure(c: &[Vec<Vec<Scalar>>]) -> Self {
        let matrix = killing_from_structure(c);
        let inertia = linalg::inertia(&matrix);
        KillingForm {
            nondegenerate: inertia.2 == 0,
            matrix,
            inertia,
        }
    }
}

pub fn killing_form(g: &Subalgebra) -> Result<KillingForm> {
    Ok(KillingForm::from_structure(&g.structure_constants()?))
}

/// Conjugation-invariant data used to recognise catalog algebras.
fn fingerprint(g: &Subalgebra) -> Fingerprint {
    let kf = killing_form(g)
        .map(|k| k.inertia)
        .unwrap_or((usize::MAX, 0, 0));
    (
        g.rank(),
        invariant_forms(g, 3).len(),
        invariant_spinors(g).len(),
        kf,
    )
}

/// Invariants of a subalgebra: dimension, numbers of invariant 3-forms and
/// spinors, Killing-form inertia.
type Fingerprint = (usize, usize, usize, (usize, usize, usize));

fn catalog_fingerprints() -> &'static Vec<(String, Fingerprint)> {
    static FP: OnceLock<Vec<(String, Fingerprint)>> = OnceLock::new();
    FP.get_or_init(|| {
        NONABELIAN
            .iter()
            .chain(["t2", "t2tilde", "zero", "spin7"].iter())
            .map(|n| {
                let g = catalog(n).expect("catalog entry");
                (n.to_string(), fingerprint(&g))
            })
            .collect()
    })
}

/// Names a subalgebra: a catalog name if the span coincides with a catalog
/// entry, otherwise the unique catalog entry with the same invariants
/// (dimension, invariant 3-forms and spinors, Killing inertia), else
/// `"t1"` for a line and `"unnamed"` in general.
pub fn identify(g: &Subalgebra) -> String {
    for n in NONABELIAN
        .iter()
        .chain(["t2", "t2tilde", "zero", "spin7"].iter())
    {
        let c = catalog(n).expect("catalog entry");
        if c.same_span(g) {
            return n.to_string();
        }
    }
    let fp = fingerprint(g);
    let hits: Vec<&String> = catalog_fingerprints()
        .iter()
        .filter(|(_, f)| *f == fp)
        .map(|(n, _)| n)
        .collect();
    if hits.len() == 1 {
        return hits[0].clone();
    }
    if g.rank() == 1 {
        return "t1".into();
    }
    "unnamed".into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::named;

    #[test]
    fn spin7_has_dimension_21() {
        let rows: Vec<SparseVec> = (0..7)
            .map(|r| {
                let cols: Vec<Scalar> = blades(2)
                    .iter()
                    .map(|&m| spin7_equations(&MultiVector::blade(m, Scalar::one()))[r].clone())
                    .collect();
                linalg::sparse(&cols)
            })
            .collect();
        assert_eq!(linalg::nullspace(rows, 28).len(), 21);
        assert!(spin7_basis().elements.iter().all(in_spin7));
        assert!(spin7_basis().elements.iter().all(in_spin7_clifford));
        assert_eq!(catalog("spin7").unwrap().rank(), 21);
    }

    #[test]
    fn membership_examples() {
        assert!(in_spin7(&p(7)));
        assert!(!in_spin7(&f("e_12")));
        assert!(in_spin7(&MultiVector::zero()));
        assert!(!act_on_spinor(&f("e_12"), &psi0()).is_zero());
    }

    #[test]
    fn brackets() {
        assert!(bracket(&p(5), &p(5)).is_zero());
        assert!(bracket(&p(7), &(&p(7) + &p(8).scale(&int(2)))).is_zero());
        assert_eq!(bracket(&p(5), &p(6)), p(7).scale(&int(2)));
    }

    #[test]
    fn phi_is_invariant() {
        let phi = &named().big_phi;
        for x in &spin7_basis().elements {
            assert!(act_on_form(x, phi).is_zero());
        }
        assert!(act_on_form(&p(7), &MultiVector::vol()).is_zero());
        let n = named();
        let t = n.z.wedge(&MultiVector::e(7)) + n.d.clone();
        assert!(act_on_form(&p(5), &t).is_zero());
    }

    #[test]
    fn catalog_dimensions_and_closure() {
        let dims = [14, 8, 6, 4, 4, 3, 3, 3, 3, 4];
        for (n, d) in NONABELIAN.iter().zip(dims) {
            let g = catalog(n).unwrap();
            assert_eq!(g.rank(), d, "{n}");
            assert!(g.is_closed(), "{n}");
            assert!(g.inside_spin7(), "{n}");
        }
        assert!(catalog("zero").unwrap().basis.is_empty());
        assert!(catalog("nope").is_err());
        assert!(catalog("t1(2,3)").unwrap().is_closed());
    }

    #[test]
    fn isotropy_dimensions() {
        let n = named();
        let t = n.z.wedge(&MultiVector::e(7)) + n.d.clone();
        assert_eq!(iso_dim(&t), 14);
        assert_eq!(iso_dim(&n.d), 8);
        assert_eq!(iso_dim(&(&n.d3 - &n.d4)), 4);
        assert_eq!(iso_algebra(&t).unwrap().name, "g2");
    }

    #[test]
    fn killing_of_su2_is_negative_definite() {
        let k = killing_form(&catalog("su2").unwrap()).unwrap();
        assert_eq!(k.inertia, (0, 3, 0));
        let t = killing_form(&catalog("t2").unwrap()).unwrap();
        assert!(!t.nondegenerate);
    }
}
