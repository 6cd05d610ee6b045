//! Exact linear algebra over [`Scalar`]: sparse incremental echelon forms,
//! kernels, linear solves, determinants and inertia of symmetric matrices.
//!
//! Rows are sparse maps from column index to nonzero coefficient. Pivoting
//! always takes the first nonzero column, and kernel bases are read off the
//! reduced row echelon form, so every returned basis is canonical for the
//! row space it came from.

use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// A sparse vector: column index → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Converts a dense vector to sparse form, dropping zeros.
pub fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Expands a sparse vector to a dense one of length `n`.
pub fn dense(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

/// `v += c * w` in place, removing cancelled entries.
pub fn axpy(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in w {
        let t = c * x;
        match v.get_mut(&k) {
            Some(y) => {
                *y += &t;
                if y.is_zero() {
                    v.remove(&k);
                }
            }
            None => {
                v.insert(k, t);
            }
        }
    }
}

/// Incrementally maintained row echelon form.
///
/// Every stored row has leading coefficient 1 at its pivot column and no
/// entries to the left of it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.pivot_row[c].is_some())
            .collect()
    }

    /// Reduces `v` against the stored pivots; the result has no entries in
    /// pivot columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(c, _)| self.pivot_row[**c].is_some())
                .map(|(c, x)| (*c, x.clone()));
            match next {
                None => return v,
                Some((c, coef)) => {
                    let row = &self.rows[self.pivot_row[c].expect("pivot")];
                    axpy(&mut v, &(-coef), row);
                    cursor = c + 1;
                }
            }
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&lead, coef)) = r.iter().next() else {
            return false;
        };
        if !coef.is_one() {
            let inv = coef.inv().expect("nonzero lead");
            for x in r.values_mut() {
                *x = &*x * &inv;
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(sparse(v))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Rows of the reduced row echelon form, sorted by pivot column.
    pub fn rref(&self) -> Vec<(usize, SparseVec)> {
        let piv = self.pivots();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &p in piv.iter().rev() {
            let mut row = self.rows[self.pivot_row[p].expect("pivot")].clone();
            let later: Vec<usize> = row
                .keys()
                .copied()
                .filter(|c| *c != p && done.contains_key(c))
                .collect();
            for c in later {
                if let Some(coef) = row.get(&c).cloned() {
                    axpy(&mut row, &(-coef), &done[&c]);
                }
            }
            done.insert(p, row);
        }
        done.into_iter().collect()
    }

    /// Basis of `{x : row·x = 0 for all rows}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.ncols)
            .filter(|&c| self.pivot_row[c].is_none())
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[f] = Scalar::one();
                for (p, row) in &rref {
                    if let Some(v) = row.get(&f) {
                        x[*p] = -v;
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel of the matrix whose rows are `rows`, as dense vectors of length `ncols`.
pub fn nullspace<I: IntoIterator<Item = SparseVec>>(rows: I, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.nullspace()
}

/// Rank of a family of dense vectors.
pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let n = vectors.first().map_or(0, |v| v.len());
    let mut e = Echelon::new(n);
    for v in vectors {
        e.insert_dense(v);
    }
    e.rank()
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// A particular solution and a basis of the homogeneous solution space.
    Solved {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        matches!(self, Solution::Solved { kernel, .. } if kernel.is_empty())
    }
}

/// Solves `Σ_j a_ij x_j = b_i` exactly for `x` of length `ncols`.
pub fn solve(rows: &[(SparseVec, Scalar)], ncols: usize) -> Solution {
    let mut e = Echelon::new(ncols + 1);
    for (a, b) in rows {
        let mut r = a.clone();
        if !b.is_zero() {
            r.insert(ncols, b.clone());
        }
        e.insert(r);
    }
    if e.pivot_row[ncols].is_some() {
        return Solution::Inconsistent;
    }
    let rref = e.rref();
    let mut particular = vec![Scalar::zero(); ncols];
    for (p, row) in &rref {
        if let Some(v) = row.get(&ncols) {
            particular[*p] = v.clone();
        }
    }
    let kernel = e
        .nullspace()
        .into_iter()
        .filter(|v| v[ncols].is_zero())
        .map(|mut v| {
            v.truncate(ncols);
            v
        })
        .collect();
    Solution::Solved { particular, kernel }
}

/// Coordinates of `v` in the (linearly independent) family `basis`, if `v`
/// lies in its span.
pub fn coordinates(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let m = basis.len();
    let rows: Vec<(SparseVec, Scalar)> = (0..v.len())
        .map(|k| {
            let a: SparseVec = (0..m)
                .filter(|&i| !basis[i][k].is_zero())
                .map(|i| (i, basis[i][k].clone()))
                .collect();
            (a, v[k].clone())
        })
        .collect();
    match solve(&rows, m) {
        Solution::Inconsistent => None,
        Solution::Solved { particular, .. } => Some(particular),
    }
}

/// Dense square matrix product.
pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    let t = &a[i][l] * &b[l][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

/// Determinant by Gaussian elimination over the field.
pub fn det(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d = &d * &piv;
        let inv = piv.inv().expect("nonzero pivot");
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

/// Signature `(positive, negative, zero)` of a symmetric matrix, computed
/// by exact congruence diagonalization.
pub fn inertia(m: &[Vec<Scalar>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Prefer a nonzero diagonal pivot.
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Find an off-diagonal entry; add row/column j to i.
                let pair = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !a[i][j].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = pair else {
                    break;
                };
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.inv().expect("nonzero pivot");
        let others: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
        for &r in &others {
            if a[r][p].is_zero() {
                continue;
            }
            let f = &a[r][p] * &inv;
            for &k in &others {
                let t = &f * &a[p][k];
                a[r][k] -= t;
            }
            a[r][p] = Scalar::zero();
            a[p][r] = Scalar::zero();
        }
        active.retain(|&i| i != p);
    }
    (pos, neg, n - pos - neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn row(v: &[i64]) -> SparseVec {
        sparse(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = nullspace([row(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((int(1) * &v[0] + int(2) * &v[1] + int(3) * &v[2]).is_zero());
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let rows = vec![(row(&[1, 1]), int(3)), (row(&[1, -1]), int(1))];
        let s = solve(&rows, 2);
        assert!(s.is_unique());
        match s {
            Solution::Solved { particular, .. } => assert_eq!(particular, vec![int(2), int(1)]),
            Solution::Inconsistent => panic!(),
        }
        let bad = vec![(row(&[1, 1]), int(3)), (row(&[2, 2]), int(1))];
        assert_eq!(solve(&bad, 2), Solution::Inconsistent);
    }

    #[test]
    fn determinant_and_inertia() {
        let m = vec![
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(-3)],
        ];
        assert_eq!(det(m.clone()), int(3));
        assert_eq!(inertia(&m), (1, 2, 0));
        let z = vec![vec![int(0); 2]; 2];
        assert_eq!(inertia(&z), (0, 0, 2));
    }

    #[test]
    fn coordinates_in_basis() {
        let b = vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]];
        assert_eq!(
            coordinates(&b, &[int(2), int(5), int(3)]),
            Some(vec![int(2), int(3)])
        );
        assert_eq!(coordinates(&b, &[int(1), int(0), int(0)]), None);
    }
}
