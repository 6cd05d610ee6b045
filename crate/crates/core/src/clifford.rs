//! The real 16-dimensional spinor representation Δ₈ of Cl(ℝ⁸) and the
//! Clifford action of forms on spinors.
//!
//! Each generator acts by a signed permutation matrix built from the 8×8
//! matrices `M₁ … M₇`. A basis blade `e_{i₁…i_k}` (increasing indices) acts
//! by the ordered product `γ_{i₁} ⋯ γ_{i_k}`, which is again a signed
//! permutation; all 256 of them are tabulated once.

use crate::error::Result;
use crate::exterior::MultiVector;
use crate::scalars::Scalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

/// Real spinor dimension.
pub const SPIN_DIM: usize = 16;

/// A spinor: coordinates over `Ψ₁ … Ψ₁₆`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spinor {
    pub coords: Vec<Scalar>,
}

impl Spinor {
    pub fn zero() -> Self {
        Spinor {
            coords: vec![Scalar::zero(); SPIN_DIM],
        }
    }

    /// The basis spinor `Ψ_k`, `1 ≤ k ≤ 16`.
    pub fn basis(k: usize) -> Self {
        let mut s = Self::zero();
        s.coords[k - 1] = Scalar::one();
        s
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), SPIN_DIM);
        Spinor { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Spinor {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Spinor {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Spinor {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "Psi{}", i + 1)?;
            } else {
                write!(f, "({c})*Psi{}", i + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The distinguished spinor `Ψ₀ = Ψ₉ − Ψ₁₀`.
pub fn psi0() -> Spinor {
    Spinor::basis(9).sub(&Spinor::basis(10))
}

/// A signed permutation: row `r` has the single entry `sign[r]` in column `col[r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub col: [u8; SPIN_DIM],
    pub sign: [i8; SPIN_DIM],
}

impl SignedPerm {
    pub fn identity() -> Self {
        let mut col = [0u8; SPIN_DIM];
        for (i, c) in col.iter_mut().enumerate() {
            *c = i as u8;
        }
        SignedPerm {
            col,
            sign: [1; SPIN_DIM],
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::identity();
        for r in 0..SPIN_DIM {
            let mid = self.col[r] as usize;
            out.col[r] = other.col[mid];
            out.sign[r] = self.sign[r] * other.sign[mid];
        }
        out
    }

    pub fn apply(&self, psi: &Spinor) -> Spinor {
        Spinor {
            coords: (0..SPIN_DIM)
                .map(|r| {
                    let x = &psi.coords[self.col[r] as usize];
                    if self.sign[r] > 0 {
                        x.clone()
                    } else {
                        -x
                    }
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Vec<Vec<Scalar>> {
        (0..SPIN_DIM)
            .map(|r| {
                let mut row = vec![Scalar::zero(); SPIN_DIM];
                row[self.col[r] as usize] = Scalar::from_int(self.sign[r] as i64);
                row
            })
            .collect()
    }
}

/// Sign convention for the `E_ij` blocks of `M₁ … M₇` inside the gammas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockConvention {
    /// `γ_i = [[0, −M_i], [−M_i, 0]]` for `i ≤ 7`; the convention in use,
    /// for which `Φ·Ψ₀ = −14·Ψ₀`.
    Flipped,
    /// `γ_i = [[0, M_i], [M_i, 0]]` for `i ≤ 7`; kept for comparison only.
    Literal,
}

/// `M_i` as a list of `(coefficient, a, b)` meaning `coefficient · E_ab`,
/// where `E_ab` has `+1` at `(a, b)` and `−1` at `(b, a)`.
const M_TERMS: [[(i8, usize, usize); 4]; 7] = [
    [(1, 1, 8), (1, 2, 7), (-1, 3, 6), (-1, 4, 5)],
    [(-1, 1, 7), (1, 2, 8), (1, 3, 5), (-1, 4, 6)],
    [(-1, 1, 6), (1, 2, 5), (-1, 3, 8), (1, 4, 7)],
    [(-1, 1, 5), (-1, 2, 6), (-1, 3, 7), (-1, 4, 8)],
    [(-1, 1, 3), (-1, 2, 4), (1, 5, 7), (1, 6, 8)],
    [(1, 1, 4), (-1, 2, 3), (-1, 5, 8), (1, 6, 7)],
    [(1, 1, 2), (-1, 3, 4), (-1, 5, 6), (1, 7, 8)],
];

/// The 8×8 matrix `M_i` (1-based `i ≤ 7`) as integer entries.
pub fn m_matrix(i: usize) -> [[i8; 8]; 8] {
    let mut m = [[0i8; 8]; 8];
    for &(c, a, b) in &M_TERMS[i - 1] {
        m[a - 1][b - 1] += c;
        m[b - 1][a - 1] -= c;
    }
    m
}

fn perm_from_dense(m: &[[i8; SPIN_DIM]; SPIN_DIM]) -> SignedPerm {
    let mut p = SignedPerm::identity();
    for r in 0..SPIN_DIM {
        let nz: Vec<usize> = (0..SPIN_DIM).filter(|&c| m[r][c] != 0).collect();
        assert_eq!(nz.len(), 1, "gamma rows are signed unit vectors");
        p.col[r] = nz[0] as u8;
        p.sign[r] = m[r][nz[0]];
    }
    p
}

/// The generator `γ_i` (1-based) under the given block convention.
pub fn gamma(i: usize, convention: BlockConvention) -> SignedPerm {
    let mut g = [[0i8; SPIN_DIM]; SPIN_DIM];
    if i == 8 {
        for k in 0..8 {
            g[k][k + 8] = 1;
            g[k + 8][k] = -1;
        }
    } else {
        let m = m_matrix(i);
        let s: i8 = match convention {
            BlockConvention::Flipped => -1,
            BlockConvention::Literal => 1,
        };
        for a in 0..8 {
            for b in 0..8 {
                g[a][b + 8] = s * m[a][b];
                g[a + 8][b] = s * m[a][b];
            }
        }
    }
    perm_from_dense(&g)
}

/// Tabulated action of every basis blade.
pub struct CliffordRep {
    convention: BlockConvention,
    blades: Vec<SignedPerm>,
}

impl CliffordRep {
    pub fn new(convention: BlockConvention) -> Self {
        let gammas: Vec<SignedPerm> = (1..=8).map(|i| gamma(i, convention)).collect();
        let blades = (0..256usize)
            .map(|mask| {
                (0..8)
                    .filter(|i| mask & (1 << i) != 0)
                    .fold(SignedPerm::identity(), |acc, i| acc.compose(&gammas[i]))
            })
            .collect();
        CliffordRep { convention, blades }
    }

    pub fn convention(&self) -> BlockConvention {
        self.convention
    }

    pub fn gamma(&self, i: usize) -> &SignedPerm {
        &self.blades[1 << (i - 1)]
    }

    pub fn blade(&self, mask: u8) -> &SignedPerm {
        &self.blades[mask as usize]
    }

    /// Clifford product `a · ψ`.
    pub fn apply(&self, a: &MultiVector, psi: &Spinor) -> Spinor {
        let mut out = vec![Scalar::zero(); SPIN_DIM];
        for (mask, c) in a.terms() {
            let p = &self.blades[mask as usize];
            for (r, o) in out.iter_mut().enumerate() {
                let x = &psi.coords[p.col[r] as usize];
                if x.is_zero() {
                    continue;
                }
                let t = c * x;
                if p.sign[r] > 0 {
                    *o += t;
                } else {
                    *o -= t;
                }
            }
        }
        Spinor { coords: out }
    }

    /// The 16×16 matrix of `a` acting on spinors.
    pub fn matrix(&self, a: &MultiVector) -> Vec<Vec<Scalar>> {
        let cols: Vec<Spinor> = (1..=SPIN_DIM)
            .map(|k| self.apply(a, &Spinor::basis(k)))
            .collect();
        (0..SPIN_DIM)
            .map(|r| cols.iter().map(|c| c.coords[r].clone()).collect())
            .collect()
    }
}

/// The representation in use (flipped block convention).
pub fn rep() -> &'static CliffordRep {
    static REP: OnceLock<CliffordRep> = OnceLock::new();
    REP.get_or_init(|| CliffordRep::new(BlockConvention::Flipped))
}

/// Clifford product `a · ψ` in the representation in use.
pub fn clifford_apply(a: &MultiVector, psi: &Spinor) -> Spinor {
    rep().apply(a, psi)
}

/// `T² · ψ := T · (T · ψ)` for a 3-form `T`.
pub fn t_squared(t: &MultiVector, psi: &Spinor) -> Result<Spinor> {
    t.require_grade(3)?;
    Ok(clifford_apply(t, &clifford_apply(t, psi)))
}
