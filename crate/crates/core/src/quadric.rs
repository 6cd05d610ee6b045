//! Systems of homogeneous real quadrics in at most three variables.
//!
//! The real zero set of such a system is a finite union of linear subspaces
//! and, for a single non-degenerate indefinite ternary form, a conic cone.
//! Components are computed exactly: degenerate forms split into planes via a
//! square root in the coefficient field, and a system of several ternary
//! forms is reduced through a degenerate member of a pencil, found by the
//! rational root theorem applied to `det(q₁ + t·q₂)`.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::{int, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

/// Quadratic monomials `xᵢxⱼ` (`i ≤ j`) in lexicographic order.
pub fn monomials(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// A system `q₁ = … = q_r = 0` of homogeneous quadrics, each given by its
/// coefficients over [`monomials`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricSystem {
    pub nvars: usize,
    pub rows: Vec<Vec<Scalar>>,
}

/// A component of the real zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// A linear subspace, by a basis.
    Subspace(Vec<Vec<Scalar>>),
    /// The cone over a non-degenerate real conic `xᵀMx = 0`, with one known point.
    Conic {
        matrix: Vec<Vec<Scalar>>,
        point: Vec<Scalar>,
    },
}

fn undecided(what: &str) -> Error {
    Error::Undecided(format!("{what} has no roots in the coefficient field"))
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add_scaled(a: &[Scalar], c: &Scalar, b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + &(c * y)).collect()
}

fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Symmetric bilinear form `B(x, y)` of a quadric given by its matrix.
fn bilinear(m: &[Vec<Scalar>], x: &[Scalar], y: &[Scalar]) -> Scalar {
    dot(x, &mat_vec(m, y))
}

impl QuadricSystem {
    pub fn new(nvars: usize, rows: Vec<Vec<Scalar>>) -> Self {
        QuadricSystem { nvars, rows }
    }

    pub fn eval_row(row: &[Scalar], x: &[Scalar]) -> Scalar {
        monomials(x.len())
            .into_iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| c * &x[i] * &x[j])
            .sum()
    }

    pub fn vanishes_at(&self, x: &[Scalar]) -> bool {
        self.rows.iter().all(|r| Self::eval_row(r, x).is_zero())
    }

    /// The symmetric matrix of a row: `q(x) = xᵀMx`.
    pub fn matrix(&self, row: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.nvars;
        let half = crate::scalars::q(1, 2);
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for ((i, j), c) in monomials(n).into_iter().zip(row) {
            if i == j {
                m[i][i] = c.clone();
            } else {
                m[i][j] = c * &half;
                m[j][i] = c * &half;
            }
        }
        m
    }

    /// Exact decomposition of the real zero set into components. The origin
    /// alone yields no component.
    pub fn real_components(&self) -> Result<Vec<Component>> {
        let n = self.nvars;
        let rows: Vec<&Vec<Scalar>> = self.rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect();
        if rows.is_empty() {
            return Ok(if n == 0 { vec![] } else { vec![Component::Subspace(identity(n))] });
        }
        let mats: Vec<Vec<Vec<Scalar>>> = rows.iter().map(|r| self.matrix(r)).collect();
        match n {
            1 => Ok(vec![]),
            2 => Ok(subspaces(binary_system(&mats, &identity(2))?)),
            3 => {
                if mats.len() == 1 {
                    return ternary_components(&mats[0]);
                }
                let d = degenerate_member(&mats)?;
                let mut out = Vec::new();
                for piece in ternary_components(&d)? {
                    match piece {
                        Component::Subspace(b) if b.len() == 2 => {
                            out.extend(subspaces(binary_system(&mats, &b)?));
                        }
                        Component::Subspace(b) => {
                            if mats.iter().all(|m| bilinear(m, &b[0], &b[0]).is_zero()) {
                                out.push(Component::Subspace(b));
                            }
                        }
                        Component::Conic { .. } => unreachable!("degenerate member"),
                    }
                }
                Ok(dedup(out))
            }
            _ => Err(Error::Undecided(format!("{n} variables"))),
        }
    }

    /// Renders the equations with the given variable names.
    pub fn equations(&self, names: &[String]) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| {
                let mut s = String::new();
                for ((i, j), c) in monomials(self.nvars).into_iter().zip(row) {
                    if c.is_zero() {
                        continue;
                    }
                    let mono = if i == j {
                        format!("{}^2", names[i])
                    } else {
                        format!("{}*{}", names[i], names[j])
                    };
                    let cs = c.to_string();
                    let term = if c.is_one() {
                        mono
                    } else if cs == "-1" {
                        format!("-{mono}")
                    } else if cs.trim_start_matches('-').contains(' ') {
                        format!("({cs})*{mono}")
                    } else {
                        format!("{cs}*{mono}")
                    };
                    if s.is_empty() {
                        s = term;
                    } else if let Some(rest) = term.strip_prefix('-') {
                        s = format!("{s} - {rest}");
                    } else {
                        s = format!("{s} + {term}");
                    }
                }
                format!("{s} = 0")
            })
            .collect()
    }
}

impl fmt::Display for QuadricSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", self.equations(&names).join(", "))
    }
}

fn identity(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect())
        .collect()
}

fn subspaces(v: Vec<Vec<Vec<Scalar>>>) -> Vec<Component> {
    v.into_iter().map(Component::Subspace).collect()
}

fn dedup(v: Vec<Component>) -> Vec<Component> {
    let mut out: Vec<Component> = Vec::new();
    for c in v {
        let dup = out.iter().any(|o| match (o, &c) {
            (Component::Subspace(a), Component::Subspace(b)) => {
                a.len() == b.len() && linalg::rank(&[a.clone(), b.clone()].concat()) == a.len()
            }
            _ => false,
        });
        if !dup {
            out.push(c);
        }
    }
    out
}

/// Projective roots `(x : y)` of `a·x² + b·xy + c·y²`; `None` if the form vanishes.
fn binary_roots(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Option<Vec<[Scalar; 2]>>> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Ok(None);
    }
    if a.is_zero() {
        let mut r = vec![[int(1), int(0)]];
        if !b.is_zero() {
            r.push([c.clone(), -b]);
        }
        return Ok(Some(r));
    }
    let disc = b.square() - int(4) * a * c;
    if disc.is_negative() {
        return Ok(Some(vec![]));
    }
    if disc.is_zero() {
        return Ok(Some(vec![[-b, a * &int(2)]]));
    }
    let s = disc.sqrt().ok_or_else(|| undecided("a binary quadric"))?;
    Ok(Some(vec![[&s - b, a * &int(2)], [-(b + &s), a * &int(2)]]))
}

/// Common zeros of ternary (or binary) forms restricted to `span(u, v)`, as
/// subspaces of the ambient space.
fn binary_system(mats: &[Vec<Vec<Scalar>>], plane: &[Vec<Scalar>]) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let (u, v) = (&plane[0], &plane[1]);
    let forms: Vec<[Scalar; 3]> = mats
        .iter()
        .map(|m| {
            [
                bilinear(m, u, u),
                bilinear(m, u, v) * int(2),
                bilinear(m, v, v),
            ]
        })
        .collect();
    let first = forms.iter().find(|f| f.iter().any(|c| !c.is_zero()));
    let Some(f) = first else {
        return Ok(vec![plane.to_vec()]);
    };
    let roots = binary_roots(&f[0], &f[1], &f[2])?.unwrap_or_default();
    Ok(roots
        .into_iter()
        .filter(|[x, y]| {
            forms
                .iter()
                .all(|g| (&g[0] * x * x + &g[1] * x * y + &g[2] * y * y).is_zero())
        })
        .map(|[x, y]| vec![add_scaled(&u.iter().map(|c| c * &x).collect::<Vec<_>>(), &y, v)])
        .collect())
}

/// Components of a single ternary form.
fn ternary_components(m: &[Vec<Scalar>]) -> Result<Vec<Component>> {
    let (pos, neg, _) = linalg::inertia(m);
    let rows: Vec<linalg::SparseVec> = m.iter().map(|r| linalg::sparse(r)).collect();
    let kernel = linalg::nullspace(rows, 3);
    match pos + neg {
        0 => Ok(vec![Component::Subspace(identity(3))]),
        1 => Ok(vec![Component::Subspace(kernel)]),
        2 => {
            let k = kernel[0].clone();
            if pos == 2 || neg == 2 {
                return Ok(vec![Component::Subspace(vec![k])]);
            }
            let i = k.iter().position(|c| !c.is_zero()).expect("kernel vector");
            let others: Vec<Vec<Scalar>> = (0..3).filter(|&j| j != i).map(|j| identity(3)[j].clone()).collect();
            let (u, v) = (&others[0], &others[1]);
            let roots = binary_roots(
                &bilinear(m, u, u),
                &(bilinear(m, u, v) * int(2)),
                &bilinear(m, v, v),
            )?
            .unwrap_or_default();
            Ok(roots
                .into_iter()
                .map(|[x, y]| {
                    let w = add_scaled(&u.iter().map(|c| c * &x).collect::<Vec<_>>(), &y, v);
                    Component::Subspace(vec![k.clone(), w])
                })
                .collect())
        }
        _ => {
            if pos == 3 || neg == 3 {
                return Ok(vec![]);
            }
            let point = conic_point(m).ok_or_else(|| undecided("a conic"))?;
            Ok(vec![Component::Conic {
                matrix: m.to_vec(),
                point,
            }])
        }
    }
}

/// A point of an indefinite conic with coordinates in the coefficient field,
/// found by fixing two small integer coordinates and solving for the third.
fn conic_point(m: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    for z_axis in (0..3).rev() {
        let (a_i, b_i) = match z_axis {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                let mut base = vec![int(0); 3];
                base[a_i] = int(x);
                base[b_i] = int(y);
                let mut e = vec![int(0); 3];
                e[z_axis] = int(1);
                // q(base + t e) = q(e) t² + 2B(base, e) t + q(base)
                let a = bilinear(m, &e, &e);
                let b = bilinear(m, &base, &e) * int(2);
                let c = bilinear(m, &base, &base);
                let Ok(Some(roots)) = binary_roots(&a, &b, &c) else {
                    continue;
                };
                for [t, w] in roots {
                    if w.is_zero() {
                        continue;
                    }
                    let p: Vec<Scalar> = add_scaled(&base.iter().map(|c| c * &w).collect::<Vec<_>>(), &t, &e);
                    if p.iter().any(|c| !c.is_zero()) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

fn det3_pencil(a: &[Vec<Scalar>], b: &[Vec<Scalar>], t: &Scalar) -> Scalar {
    let m: Vec<Vec<Scalar>> = a.iter().zip(b).map(|(x, y)| add_scaled(x, t, y)).collect();
    linalg::det(m)
}

fn as_rational(s: &Scalar) -> Option<BigRational> {
    s.is_rational().then(|| s.coords()[0].clone())
}

/// Rational roots of `Σ cₖ tᵏ` with rational coefficients.
fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<BigRational>> {
    let rs: Vec<BigRational> = coeffs.iter().map(as_rational).collect::<Option<_>>()?;
    let lcm = rs.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rs.iter().map(|r| (r * BigRational::from(lcm.clone())).to_integer()).collect();
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let mut lowest = 0;
    while ints.get(lowest).is_some_and(|c| c.is_zero()) {
        lowest += 1;
    }
    if lowest > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[lowest..];
    if ints.len() <= 1 {
        return Some(roots);
    }
    let divisors = |n: &BigInt| -> Option<Vec<BigInt>> {
        let n = n.abs().to_u64().filter(|&n| n <= 1_000_000_000)?;
        let mut d = Vec::new();
        let mut i = 1u64;
        while i * i <= n {
            if n % i == 0 {
                d.push(BigInt::from(i));
                d.push(BigInt::from(n / i));
            }
            i += 1;
        }
        Some(d)
    };
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().expect("nonempty"))?;
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let t = BigRational::new(p * sign, q.clone());
                let v = ints
                    .iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * &t + BigRational::from(c.clone()));
                if v.is_zero() && !roots.contains(&t) {
                    roots.push(t);
                }
            }
        }
    }
    Some(roots)
}

/// A singular form in the span of the given ternary forms.
fn degenerate_member(mats: &[Vec<Vec<Scalar>>]) -> Result<Vec<Vec<Scalar>>> {
    if let Some(m) = mats.iter().find(|m| linalg::det(m.to_vec()).is_zero()) {
        return Ok(m.clone());
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let (a, b) = (&mats[i], &mats[j]);
            let f = |t: i64| det3_pencil(a, b, &int(t));
            let (f0, f1, fm, f2) = (f(0), f(1), f(-1), f(2));
            let half = crate::scalars::q(1, 2);
            let c0 = f0.clone();
            let c2 = (&f1 + &fm) * &half - &c0;
            let s = (&f1 - &fm) * &half;
            let c3 = ((&f2 - &c0 - &c2 * &int(4)) * &half - &s) * &crate::scalars::q(1, 3);
            let c1 = &s - &c3;
            if let Some(roots) = rational_roots(&[c0, c1, c2, c3]) {
                if let Some(t) = roots.into_iter().next() {
                    let t = Scalar::from_rational(t);
                    return Ok(a.iter().zip(b).map(|(x, y)| add_scaled(x, &t, y)).collect());
                }
            }
        }
    }
    Err(undecided("the pencil determinant"))
}

/// Sample points of a component, most generic first.
pub fn sample_points(c: &Component) -> Vec<Vec<Scalar>> {
    const COMBOS: [[i64; 3]; 8] = [
        [1, 2, 3],
        [2, -1, 5],
        [3, 1, -2],
        [1, -3, 4],
        [5, 2, 1],
        [1, 1, 1],
        [1, 0, 0],
        [0, 1, 0],
    ];
    match c {
        Component::Subspace(basis) => COMBOS
            .iter()
            .map(|co| {
                let n = basis[0].len();
                let mut p = vec![int(0); n];
                for (b, k) in basis.iter().zip(co) {
                    p = add_scaled(&p, &int(*k), b);
                }
                p
            })
            .filter(|p| p.iter().any(|x| !x.is_zero()))
            .collect(),
        Component::Conic { matrix, point } => {
            let mut out = vec![point.clone()];
            for co in COMBOS {
                let d: Vec<Scalar> = co.iter().map(|&k| int(k)).collect();
                let qd = bilinear(matrix, &d, &d);
                let b = bilinear(matrix, point, &d) * int(-2);
                // Second intersection of the line through `point` in direction `d`.
                let p = add_scaled(&point.iter().map(|c| c * &qd).collect::<Vec<_>>(), &b, &d);
                if p.iter().any(|x| !x.is_zero()) {
                    out.push(p);
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    fn sys(n: usize, rows: Vec<Vec<i64>>) -> QuadricSystem {
        QuadricSystem::new(n, rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    #[test]
    fn binary_lines() {
        // a² − b² = 0, ab + b² = 0  →  a = −b.
        let s = sys(2, vec![vec![1, 0, -1], vec![0, 1, 1]]);
        let c = s.real_components().unwrap();
        assert_eq!(c.len(), 1);
        let Component::Subspace(b) = &c[0] else { panic!() };
        assert!(s.vanishes_at(&b[0]));
        assert_eq!(&b[0][0] + &b[0][1], int(0));
    }

    #[test]
    fn definite_has_only_origin() {
        assert!(sys(3, vec![vec![1, 0, 0, 1, 0, 1]]).real_components().unwrap().is_empty());
        assert!(sys(1, vec![vec![1]]).real_components().unwrap().is_empty());
    }

    #[test]
    fn conic_points_lie_on_conic() {
        // 5a1² + 5a2² + 3a2b1 − 2b1² = 0
        let s = sys(3, vec![vec![5, 0, 0, 5, 3, -2]]);
        let c = s.real_components().unwrap();
        assert!(matches!(c[0], Component::Conic { .. }));
        let pts = sample_points(&c[0]);
        assert!(pts.len() > 3);
        assert!(pts.iter().all(|p| s.vanishes_at(p)));
        assert!(s.vanishes_at(&[int(0), int(2), int(5)]));
    }

    #[test]
    fn pencil_with_irrational_lines() {
        // a1² − b1² − b2²/21 = 0, a1b1 + b1² − b2²/7 = 0  →  (4, 3, ±7√3).
        let s = QuadricSystem::new(
            3,
            vec![
                vec![int(1), int(0), int(0), int(-1), int(0), q(-1, 21)],
                vec![int(0), int(1), int(0), int(1), int(0), q(-1, 7)],
            ],
        );
        let comps = s.real_components().unwrap();
        let pts: Vec<Vec<Scalar>> = comps.iter().flat_map(sample_points).collect();
        assert!(pts.iter().all(|p| s.vanishes_at(p)));
        assert!(pts.iter().any(|p| !p[2].is_zero() && !p[2].is_rational()));
    }

    #[test]
    fn empty_system_is_everything() {
        let s = QuadricSystem::new(2, vec![]);
        assert_eq!(s.real_components().unwrap(), vec![Component::Subspace(identity(2))]);
    }

    #[test]
    fn rational_root_theorem() {
        // (t − 1/2)(t + 3) t = t³ + 5/2 t² − 3/2 t
        let r = rational_roots(&[int(0), q(-3, 2), q(5, 2), int(1)]).unwrap();
        assert_eq!(r.len(), 3);
    }
}
