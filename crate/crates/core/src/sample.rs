//! Seeded random sampling of exact scalars, forms and spin(7) elements for
//! identity checks. The same seed always yields the same samples.

use crate::exterior::{blades, MultiVector};
use crate::liealg::{spin7_basis, LieElement};
use crate::scalars::{q, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed for identity sampling.
pub const DEFAULT_SEED: u64 = 7;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A rational `n/d` with `|n| ≤ 5` and `1 ≤ d ≤ 3`.
    pub fn rational(&mut self) -> Scalar {
        q(self.rng.gen_range(-5..=5), self.rng.gen_range(1..=3))
    }

    /// An element of ℚ(√3,√5) with small rational coordinates.
    pub fn scalar(&mut self) -> Scalar {
        let mut s = self.rational();
        for unit in [Scalar::sqrt3(), Scalar::sqrt5(), Scalar::sqrt15()] {
            if self.rng.gen_bool(0.5) {
                s += self.rational() * unit;
            }
        }
        s
    }

    /// A homogeneous `k`-form with small rational coefficients on a random
    /// half of the basis blades (never zero).
    pub fn form(&mut self, k: usize) -> MultiVector {
        loop {
            let mut out = MultiVector::zero();
            for m in blades(k) {
                if self.rng.gen_bool(0.5) {
                    out.add_term(m, self.rational());
                }
            }
            if !out.is_zero() {
                return out;
            }
        }
    }

    /// A random rational combination of the spin(7) basis.
    pub fn spin7_element(&mut self) -> LieElement {
        spin7_basis()
            .elements
            .iter()
            .map(|b| b.scale(&self.rational()))
            .sum()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::in_spin7;

    #[test]
    fn deterministic_and_homogeneous() {
        let mut a = Sampler::new(3);
        let mut b = Sampler::new(3);
        for _ in 0..20 {
            let t = a.form(3);
            assert_eq!(t, b.form(3));
            assert!(t.is_homogeneous(3));
        }
        assert!(in_spin7(&a.spin7_element()));
    }
}
