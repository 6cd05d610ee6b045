//! The exterior algebra Λ*(ℝ⁸) with its Euclidean inner product, Hodge star
//! and interior product, together with the named forms used throughout the
//! classification (the Spin(7) 4-form Φ, its G₂ and SU(3) pieces, …).
//!
//! A basis blade `e_{i₁…i_k}` with `i₁ < … < i_k` is stored as the bitmask
//! with bit `i−1` set for each index. Coefficients live in [`Scalar`].

use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarParser};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

/// Dimension of the underlying vector space.
pub const DIM: usize = 8;

/// Bitmask of the volume blade `e_{12345678}`.
pub const VOL_MASK: u8 = 0xff;

/// Sign of `e_A ∧ e_B` relative to `e_{A∪B}` for disjoint blades.
pub fn wedge_sign(a: u8, b: u8) -> i32 {
    let mut inversions = 0u32;
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        inversions += (b & ((1u8 << i) - 1)).count_ones();
        bits &= bits - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Indices (1-based, increasing) of a blade mask.
pub fn mask_indices(mask: u8) -> Vec<usize> {
    (0..DIM).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

/// Blade mask of a list of distinct 1-based indices.
pub fn indices_mask(idx: &[usize]) -> u8 {
    idx.iter().fold(0u8, |m, &i| m | (1 << (i - 1)))
}

/// All blade masks of grade `k`, in lexicographic order of index tuples.
pub fn blades(k: usize) -> Vec<u8> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    fn rec(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=DIM {
            cur.push(i);
            rec(i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(1, k, &mut Vec::new(), &mut out);
    out.iter().map(|v| indices_mask(v)).collect()
}

/// Position of each blade of grade `k` within [`blades`]`(k)`.
pub fn blade_index(k: usize) -> BTreeMap<u8, usize> {
    blades(k).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// An element of Λ*(ℝ⁸) with exact coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiVector {
    terms: BTreeMap<u8, Scalar>,
}

impl MultiVector {
    pub fn zero() -> Self {
        MultiVector::default()
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::blade(0, s)
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    /// `c · e_mask`.
    pub fn blade(mask: u8, c: Scalar) -> Self {
        let mut m = Self::zero();
        m.add_term(mask, c);
        m
    }

    /// The basis vector `e_i`, `1 ≤ i ≤ 8`.
    pub fn e(i: usize) -> Self {
        assert!((1..=DIM).contains(&i), "index out of range");
        Self::blade(1 << (i - 1), Scalar::one())
    }

    /// `e_{i₁} ∧ … ∧ e_{i_k}` for arbitrary (possibly unsorted) distinct indices.
    pub fn basis(idx: &[usize]) -> Self {
        idx.iter()
            .fold(Self::one(), |acc, &i| acc.wedge(&Self::e(i)))
    }

    /// The volume form `e_{12345678}`.
    pub fn vol() -> Self {
        Self::blade(VOL_MASK, Scalar::one())
    }

    /// Builds a 1-form from its 8 coordinates.
    pub fn vector(c: &[Scalar]) -> Self {
        let mut m = Self::zero();
        for (i, x) in c.iter().enumerate() {
            m.add_term(1 << i, x.clone());
        }
        m
    }

    /// Builds a homogeneous form of grade `k` from coordinates over [`blades`]`(k)`.
    pub fn from_coords(k: usize, c: &[Scalar]) -> Self {
        let mut m = Self::zero();
        for (mask, x) in blades(k).into_iter().zip(c) {
            m.add_term(mask, x.clone());
        }
        m
    }

    /// Coordinates of the grade-`k` part over [`blades`]`(k)`.
    pub fn coords(&self, k: usize) -> Vec<Scalar> {
        blades(k).into_iter().map(|m| self.coeff(m)).collect()
    }

    pub fn add_term(&mut self, mask: u8, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn coeff(&self, mask: u8) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of `e_{i₁…i_k}` for increasing indices.
    pub fn coeff_of(&self, idx: &[usize]) -> Scalar {
        self.coeff(indices_mask(idx))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The grade if all terms share one; `None` for zero or mixed input.
    pub fn grade(&self) -> Option<usize> {
        let mut g = None;
        for m in self.terms.keys() {
            let k = m.count_ones() as usize;
            match g {
                None => g = Some(k),
                Some(h) if h != k => return None,
                _ => {}
            }
        }
        g
    }

    /// True when every term has grade `k` (the zero form is homogeneous of every grade).
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.count_ones() as usize == k)
    }

    /// Checks homogeneity of grade `k`.
    pub fn require_grade(&self, k: usize) -> Result<()> {
        if self.is_homogeneous(k) {
            Ok(())
        } else {
            let grades: Vec<String> = self
                .terms
                .keys()
                .map(|m| m.count_ones().to_string())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            Err(Error::Grade {
                expected: k,
                found: grades.join(","),
            })
        }
    }

    /// The grade-`k` component.
    pub fn part(&self, k: usize) -> Self {
        MultiVector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiVector {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = x * y;
                out.add_term(a | b, if wedge_sign(a, b) > 0 { c } else { -c });
            }
        }
        out
    }

    /// Interior product `x ⌟ self`, with `e_i ⌟ e_{ij} = e_j`. `x` must be a 1-form.
    pub fn contract_by(&self, x: &Self) -> Self {
        let mut out = Self::zero();
        for (&v, cv) in &x.terms {
            debug_assert_eq!(v.count_ones(), 1, "contraction needs a 1-form");
            for (&k, ck) in &self.terms {
                if k & v == 0 {
                    continue;
                }
                let below = (k & (v - 1)).count_ones();
                let c = cv * ck;
                out.add_term(k ^ v, if below % 2 == 0 { c } else { -c });
            }
        }
        out
    }

    /// Hodge star with `a ∧ ∗b = ⟨a, b⟩ vol`.
    pub fn hodge(&self) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.terms {
            let comp = !k;
            let s = wedge_sign(k, comp);
            out.add_term(comp, if s > 0 { c.clone() } else { -c });
        }
        out
    }

    /// Euclidean inner product; the blades form an orthonormal basis.
    pub fn inner(&self, other: &Self) -> Scalar {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(m, x)| large.terms.get(m).map(|y| x * y))
            .sum()
    }

    pub fn norm2(&self) -> Scalar {
        self.inner(self)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            out.add_term(m, f(c));
        }
        out
    }

    fn parse_at(src: &str) -> Result<Self> {
        FormParser::new(src).parse()
    }
}

/// Interior product `x ⌟ a` for a 1-form `x`.
pub fn contract(x: &MultiVector, a: &MultiVector) -> Result<MultiVector> {
    x.require_grade(1)?;
    Ok(a.contract_by(x))
}

pub fn wedge(a: &MultiVector, b: &MultiVector) -> MultiVector {
    a.wedge(b)
}

pub fn hodge(a: &MultiVector) -> MultiVector {
    a.hodge()
}

pub fn inner(a: &MultiVector, b: &MultiVector) -> Scalar {
    a.inner(b)
}

/// `σ^T = ½ Σᵢ (eᵢ⌟T) ∧ (eᵢ⌟T)` for a 3-form `T`.
pub fn sigma_t(t: &MultiVector) -> Result<MultiVector> {
    t.require_grade(3)?;
    let mut out = MultiVector::zero();
    for i in 1..=DIM {
        let c = t.contract_by(&MultiVector::e(i));
        out = out + c.wedge(&c);
    }
    Ok(out.scale(&Scalar::from_ratio(1, 2)))
}

impl Add for MultiVector {
    type Output = MultiVector;
    fn add(mut self, rhs: MultiVector) -> MultiVector {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: &MultiVector) -> MultiVector {
        self.clone() + rhs.clone()
    }
}

impl Sub for MultiVector {
    type Output = MultiVector;
    fn sub(mut self, rhs: MultiVector) -> MultiVector {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: &MultiVector) -> MultiVector {
        self.clone() - rhs.clone()
    }
}

impl Neg for MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        MultiVector {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        -(self.clone())
    }
}

impl Mul<&MultiVector> for &Scalar {
    type Output = MultiVector;
    fn mul(self, rhs: &MultiVector) -> MultiVector {
        rhs.scale(self)
    }
}

impl Mul<MultiVector> for Scalar {
    type Output = MultiVector;
    fn mul(self, rhs: MultiVector) -> MultiVector {
        rhs.scale(&self)
    }
}

impl std::iter::Sum for MultiVector {
    fn sum<I: Iterator<Item = MultiVector>>(iter: I) -> MultiVector {
        iter.fold(MultiVector::zero(), |a, b| a + b)
    }
}

fn blade_label(mask: u8) -> String {
    let idx: String = mask_indices(mask).iter().map(|i| i.to_string()).collect();
    format!("e_{idx}")
}

/// Label of a blade like `e_127`; the empty blade is `1`.
pub fn label(mask: u8) -> String {
    if mask == 0 {
        "1".into()
    } else {
        blade_label(mask)
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<u8> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| (m.count_ones(), mask_indices(*m)));
        let mut out = String::new();
        for m in keys {
            let c = &self.terms[&m];
            let simple = c.coords().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() == 1;
            let (neg, mag) = if simple && c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coef = if simple {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let body = if m == 0 {
                coef
            } else if mag.is_one() {
                blade_label(m)
            } else {
                format!("{coef}*{}", blade_label(m))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

struct FormParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> FormParser<'a> {
    fn new(src: &'a str) -> Self {
        FormParser { src, pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn bytes(&self) -> &[u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes().get(self.pos).copied()
    }

    fn blade(&mut self) -> Result<(u8, i32)> {
        // at "e_"
        self.pos += 2;
        let start = self.pos;
        let mut idx = Vec::new();
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            let i = (c - b'0') as usize;
            if !(1..=DIM).contains(&i) {
                return Err(self.err(format!("index {i} out of range 1..8")));
            }
            if idx.contains(&i) {
                return Err(self.err(format!("repeated index {i}")));
            }
            idx.push(i);
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected blade indices after e_"));
        }
        let b = MultiVector::basis(&idx);
        let (&mask, c) = b.terms.iter().next().expect("nonzero blade");
        Ok((mask, c.signum()))
    }

    fn coefficient(&mut self) -> Result<Option<Scalar>> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let mut sp = ScalarParser::new(self.src, 0);
            sp.seek(self.pos);
            let s = sp.scalar()?;
            self.pos = sp.position();
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
            return Ok(Some(s));
        }
        let rest = &self.src[self.pos..];
        if rest.starts_with("e_") {
            return Ok(None);
        }
        let mut sp = ScalarParser::new(self.src, 0);
        sp.seek(self.pos);
        let s = sp.term()?;
        self.pos = sp.position();
        Ok(Some(s))
    }

    fn term(&mut self) -> Result<MultiVector> {
        self.skip_ws();
        let coef = self.coefficient()?;
        self.skip_ws();
        let has_star = self.peek() == Some(b'*');
        let save = self.pos;
        if has_star {
            self.pos += 1;
            self.skip_ws();
        }
        if self.src[self.pos..].starts_with("e_") {
            if coef.is_some() && !has_star {
                return Err(self.err("expected `*` between coefficient and blade"));
            }
            let (mask, sign) = self.blade()?;
            let c = coef.unwrap_or_else(Scalar::one);
            return Ok(MultiVector::blade(mask, if sign > 0 { c } else { -c }));
        }
        if has_star {
            return Err(self.err("expected a blade `e_…` after `*`"));
        }
        self.pos = save;
        match coef {
            Some(c) => Ok(MultiVector::scalar(c)),
            None => Err(self.err("expected a term")),
        }
    }

    fn parse(mut self) -> Result<MultiVector> {
        self.skip_ws();
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
        }
    }
}

impl FromStr for MultiVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MultiVector::parse_at(s)
    }
}

impl Serialize for MultiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MultiVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The named forms of the classification.
#[derive(Clone, Debug)]
pub struct NamedForms {
    pub z: MultiVector,
    pub z1: MultiVector,
    pub z2: MultiVector,
    pub z3: MultiVector,
    pub d: MultiVector,
    pub d1: MultiVector,
    pub d2: MultiVector,
    pub d3: MultiVector,
    pub d4: MultiVector,
    pub d5: MultiVector,
    pub dbar: MultiVector,
    /// `Z₁ − 2Z₂`, the 2-form appearing in the u(2) families.
    pub w: MultiVector,
    /// The 4-form `φ = (Z∧e₇ + D)∧e₈`.
    pub phi: MultiVector,
    /// The fundamental 4-form `Φ = φ + ∗φ`.
    pub big_phi: MultiVector,
    pub vol: MultiVector,
}

fn f(s: &str) -> MultiVector {
    s.parse().expect("named form literal")
}

/// The constant table of named forms.
pub fn named() -> &'static NamedForms {
    static NAMED: OnceLock<NamedForms> = OnceLock::new();
    NAMED.get_or_init(|| {
        let z1 = f("e_12 + e_34");
        let z2 = f("e_56");
        let z3 = f("e_12 - e_34");
        let d1 = f("e_246 - e_145");
        let d2 = f("-e_235 - e_136");
        let d3 = f("-e_135 + e_245");
        let d4 = f("e_146 + e_236");
        let d5 = f("e_123 - e_356");
        let z = &z1 + &z2;
        let d = &d1 + &d2;
        let dbar = &d3 + &d4;
        let w = &z1 - &z2.scale(&Scalar::from_int(2));
        let phi = (z.wedge(&MultiVector::e(7)) + d.clone()).wedge(&MultiVector::e(8));
        let big_phi = &phi + &phi.hodge();
        NamedForms {
            z,
            z1,
            z2,
            z3,
            d,
            d1,
            d2,
            d3,
            d4,
            d5,
            dbar,
            w,
            phi,
            big_phi,
            vol: MultiVector::vol(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn basic_wedge_and_contraction() {
        assert_eq!(MultiVector::e(1).wedge(&MultiVector::e(2)), f("e_12"));
        assert_eq!(MultiVector::e(2).wedge(&MultiVector::e(1)), f("-e_12"));
        assert_eq!(f("e_12").contract_by(&MultiVector::e(1)), f("e_2"));
        assert_eq!(f("e_12").contract_by(&MultiVector::e(2)), f("-e_1"));
        assert_eq!(named().d.contract_by(&MultiVector::e(7)), MultiVector::zero());
    }

    #[test]
    fn named_form_relations() {
        let n = named();
        assert_eq!(n.z, &n.z1 + &n.z2);
        assert_eq!(n.d, &n.d1 + &n.d2);
        assert_eq!(n.dbar, &n.d3 + &n.d4);
        assert_eq!(n.big_phi.hodge(), n.big_phi);
        assert_eq!(n.big_phi.len(), 14);
        let t = n.z.wedge(&MultiVector::e(7)) + n.d.clone();
        assert_eq!(t.norm2(), int(7));
    }

    #[test]
    fn phi_wedge_phi_is_fourteen_vol() {
        let n = named();
        assert_eq!(n.big_phi.wedge(&n.big_phi), n.vol.scale(&int(14)));
    }

    #[test]
    fn hodge_of_units() {
        assert_eq!(MultiVector::one().hodge(), MultiVector::vol());
        assert_eq!(MultiVector::vol().hodge(), MultiVector::one());
    }

    #[test]
    fn balanced_torsion_wedges_to_zero() {
        let n = named();
        let g = &n.d3 - &n.d4;
        assert!(g.wedge(&n.big_phi).is_zero());
    }

    #[test]
    fn sigma_of_decomposable() {
        assert!(sigma_t(&f("e_567")).unwrap().is_zero());
        assert!(sigma_t(&MultiVector::zero()).unwrap().is_zero());
        let n = named();
        let t = n.z.wedge(&MultiVector::e(7)) + n.d.clone();
        assert!(!sigma_t(&t).unwrap().is_zero());
        assert!(sigma_t(&f("e_12")).is_err());
    }

    #[test]
    fn e8_contracts_family_to_z3() {
        let n = named();
        let (a1, b2) = (int(3), int(-2));
        let t = (n.z.wedge(&MultiVector::e(7)) + n.d.clone()).scale(&a1)
            + n.z3.wedge(&MultiVector::e(8)).scale(&b2);
        assert_eq!(t.contract_by(&MultiVector::e(8)), n.z3.scale(&b2));
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in [
            "0",
            "1",
            "e_1",
            "-e_12 + 3/2*e_34",
            "2 + sqrt3*e_127 - (1 + sqrt5)*e_2468",
            "-1/3*sqrt15*e_12345678",
        ] {
            let m: MultiVector = s.parse().unwrap();
            let back: MultiVector = m.to_string().parse().unwrap();
            assert_eq!(m, back, "{s}");
        }
        assert_eq!(f("e_21"), f("-e_12"));
        assert_eq!(f("2*e_12 + 3 e_12".replace(" e", "*e").as_str()), f("5*e_12"));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match "e_12 + e_19".parse::<MultiVector>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 10),
            other => panic!("{other:?}"),
        }
        assert!("e_11".parse::<MultiVector>().is_err());
        assert!("e_12 +".parse::<MultiVector>().is_err());
        assert!("2 e_12".parse::<MultiVector>().is_err());
    }
}
