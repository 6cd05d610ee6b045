//! Exact arithmetic in the biquadratic field ℚ(√3, √5).
//!
//! An element is stored by its four rational coordinates over the basis
//! `{1, √3, √5, √15}`. Every operation is exact; the ordering is the one
//! inherited from the real embedding with positive square roots, and it is
//! decided exactly by reducing sign questions down the tower
//! ℚ ⊂ ℚ(√3) ⊂ ℚ(√3, √5).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

const SURDS: [&str; 4] = ["", "sqrt3", "sqrt5", "sqrt15"];

/// An element of ℚ(√3, √5).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    c: [BigRational; 4],
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Elements of ℚ(√3) as pairs `a + b√3`; used for the tower reductions.
type Q3 = (BigRational, BigRational);

fn q3_mul(x: &Q3, y: &Q3) -> Q3 {
    (
        &x.0 * &y.0 + rat(3, 1) * &x.1 * &y.1,
        &x.0 * &y.1 + &x.1 * &y.0,
    )
}

fn q3_sign(x: &Q3) -> i32 {
    let sa = rat_sign(&x.0);
    let sb = rat_sign(&x.1);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    // Opposite signs: compare a² with 3b².
    let d = &x.0 * &x.0 - rat(3, 1) * &x.1 * &x.1;
    sa * rat_sign(&d)
}

fn rat_sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Square root of a non-negative rational, if it is rational.
fn rat_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Square root inside ℚ(√3), if one exists (any sign).
fn q3_sqrt(x: &Q3) -> Option<Q3> {
    if x.1.is_zero() {
        if let Some(s) = rat_sqrt(&x.0) {
            return Some((s, BigRational::zero()));
        }
        return rat_sqrt(&(&x.0 / rat(3, 1))).map(|s| (BigRational::zero(), s));
    }
    // (c + d√3)² = c² + 3d² + 2cd√3
    let norm = &x.0 * &x.0 - rat(3, 1) * &x.1 * &x.1;
    let n = rat_sqrt(&norm)?;
    for cand in [&x.0 + &n, &x.0 - &n] {
        let half = cand / rat(2, 1);
        if let Some(c) = rat_sqrt(&half) {
            if c.is_zero() {
                continue;
            }
            let d = &x.1 / (rat(2, 1) * &c);
            let s = (c, d);
            if q3_mul(&s, &s) == *x {
                return Some(s);
            }
        }
    }
    None
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            c: [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    /// The rational `n/d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut s = Self::zero();
        s.c[0] = r;
        s
    }

    /// Builds `a + b√3 + c√5 + d√15` from rational coordinates.
    pub fn from_coords(c: [BigRational; 4]) -> Self {
        Scalar { c }
    }

    pub fn sqrt3() -> Self {
        let mut s = Self::zero();
        s.c[1] = BigRational::one();
        s
    }

    pub fn sqrt5() -> Self {
        let mut s = Self::zero();
        s.c[2] = BigRational::one();
        s
    }

    pub fn sqrt15() -> Self {
        let mut s = Self::zero();
        s.c[3] = BigRational::one();
        s
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.c[0].is_one()
    }

    /// True when all irrational coordinates vanish.
    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.c[0]
    }

    fn split(&self) -> (Q3, Q3) {
        (
            (self.c[0].clone(), self.c[1].clone()),
            (self.c[2].clone(), self.c[3].clone()),
        )
    }

    fn join(p: Q3, q: Q3) -> Self {
        Scalar {
            c: [p.0, p.1, q.0, q.1],
        }
    }

    /// Exact sign under the real embedding with positive square roots.
    pub fn signum(&self) -> i32 {
        if self.is_rational() {
            return rat_sign(&self.c[0]);
        }
        let (p, q) = self.split();
        let sp = q3_sign(&p);
        let sq = q3_sign(&q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return if sp == 0 { sq } else { sp };
        }
        // Opposite signs: compare p² with 5q² inside ℚ(√3).
        let p2 = q3_mul(&p, &p);
        let q2 = q3_mul(&q, &q);
        let d = (&p2.0 - rat(5, 1) * &q2.0, &p2.1 - rat(5, 1) * &q2.1);
        sp * q3_sign(&d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.c[0].recip()));
        }
        let (p, q) = self.split();
        // x (p - q√5) = p² - 5q² = N ∈ ℚ(√3);  N (n0 - n1√3) = n0² - 3n1² ∈ ℚ
        let p2 = q3_mul(&p, &p);
        let q2 = q3_mul(&q, &q);
        let n = (&p2.0 - rat(5, 1) * &q2.0, &p2.1 - rat(5, 1) * &q2.1);
        let nbar = (n.0.clone(), -n.1.clone());
        let r = &n.0 * &n.0 - rat(3, 1) * &n.1 * &n.1;
        let conj = Self::join(p, (-q.0, -q.1));
        let nbar = Self::join(nbar, (BigRational::zero(), BigRational::zero()));
        let num = conj * nbar;
        Ok(num.scale(&r.recip()))
    }

    /// Multiplies by a rational number.
    pub fn scale(&self, r: &BigRational) -> Self {
        Scalar {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// The non-negative square root, when it lies in ℚ(√3, √5).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (p, q) = self.split();
        let zero3 = (BigRational::zero(), BigRational::zero());
        let mut candidates: Vec<Scalar> = Vec::new();
        if q.0.is_zero() && q.1.is_zero() {
            if let Some(s) = q3_sqrt(&p) {
                candidates.push(Self::join(s, zero3.clone()));
            }
            let p5 = (&p.0 / rat(5, 1), &p.1 / rat(5, 1));
            if let Some(s) = q3_sqrt(&p5) {
                candidates.push(Self::join(zero3.clone(), s));
            }
        } else {
            // (u + v√5)² = u² + 5v² + 2uv√5 with u, v ∈ ℚ(√3)
            let p2 = q3_mul(&p, &p);
            let q2 = q3_mul(&q, &q);
            let norm = (&p2.0 - rat(5, 1) * &q2.0, &p2.1 - rat(5, 1) * &q2.1);
            if let Some(n) = q3_sqrt(&norm) {
                for sgn in [1i64, -1] {
                    let half = (
                        (&p.0 + rat(sgn, 1) * &n.0) / rat(2, 1),
                        (&p.1 + rat(sgn, 1) * &n.1) / rat(2, 1),
                    );
                    if let Some(u) = q3_sqrt(&half) {
                        let us = Self::join(u, zero3.clone());
                        if us.is_zero() {
                            continue;
                        }
                        let qs = Self::join(q.clone(), zero3.clone());
                        let two_u = &us * &Scalar::from_int(2);
                        let v = qs.checked_div(&two_u).ok();
                        if let Some(v) = v {
                            candidates.push(us + v * Scalar::sqrt5());
                        }
                    }
                }
            }
        }
        candidates
            .into_iter()
            .find(|s| &s.square() == self)
            .map(|s| s.abs())
    }

    /// Floating-point approximation, for display and numeric guidance only.
    pub fn to_f64(&self) -> f64 {
        let r = [1.0, 3f64.sqrt(), 5f64.sqrt(), 15f64.sqrt()];
        self.c
            .iter()
            .zip(r.iter())
            .map(|(c, r)| c.to_f64().unwrap_or(f64::NAN) * r)
            .sum()
    }

    fn fmt_rational(r: &BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_rational() {
        return b.scale(&a.c[0]);
    }
    if b.is_rational() {
        return a.scale(&b.c[0]);
    }
    let [a0, a1, a2, a3] = &a.c;
    let [b0, b1, b2, b3] = &b.c;
    let three = rat(3, 1);
    let five = rat(5, 1);
    let fifteen = rat(15, 1);
    Scalar {
        c: [
            a0 * b0 + &three * a1 * b1 + &five * a2 * b2 + &fifteen * a3 * b3,
            a0 * b1 + a1 * b0 + &five * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + &three * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ],
    }
}

fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    Scalar {
        c: [
            &a.c[0] + &b.c[0],
            &a.c[1] + &b.c[1],
            &a.c[2] + &b.c[2],
            &a.c[3] + &b.c[3],
        ],
    }
}

fn sub_ref(a: &Scalar, b: &Scalar) -> Scalar {
    Scalar {
        c: [
            &a.c[0] - &b.c[0],
            &a.c[1] - &b.c[1],
            &a.c[2] - &b.c[2],
            &a.c[3] - &b.c[3],
        ],
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $f:ident) => {
        impl $Trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $Trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(self, &rhs)
            }
        }
        impl $Trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

fn div_ref(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_div(b).expect("division by zero in Scalar")
}
forward_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let [a, b, c, d] = self.c;
        Scalar {
            c: [-a, -b, -c, -d],
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for i in 0..4 {
            if !rhs.c[i].is_zero() {
                self.c[i] += &rhs.c[i];
            }
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for i in 0..4 {
            if !rhs.c[i].is_zero() {
                self.c[i] -= &rhs.c[i];
            }
        }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_ref(self, rhs);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if i == 0 {
                Self::fmt_rational(&mag)
            } else if mag.is_one() {
                SURDS[i].to_string()
            } else {
                format!("{}*{}", Self::fmt_rational(&mag), SURDS[i])
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
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Parser for the textual scalar syntax `p/q + r/s*sqrt3 + t/u*sqrt5 + v/w*sqrt15`.
pub(crate) struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> ScalarParser<'a> {
    pub(crate) fn new(src: &'a str, base: usize) -> Self {
        ScalarParser {
            src: src.as_bytes(),
            pos: 0,
            base,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.base + self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let n = self.integer()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let d = self.integer()?;
            if d.is_zero() {
                self.pos = at;
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    fn surd(&mut self) -> Option<usize> {
        for (i, name) in SURDS.iter().enumerate().skip(1).rev() {
            let b = name.as_bytes();
            if self.src[self.pos..].starts_with(b) {
                self.pos += b.len();
                return Some(i);
            }
        }
        None
    }

    /// One unsigned term of a scalar: a rational, a surd, or `rational*surd`.
    pub(crate) fn term(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut slot = 0usize;
        if let Some(i) = self.surd() {
            slot = i;
        } else if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.rational()?;
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                match self.surd() {
                    Some(i) => slot = i,
                    None => self.pos = save,
                }
            } else {
                self.pos = save;
            }
        } else {
            return Err(self.err("expected a number or sqrt3/sqrt5/sqrt15"));
        }
        let mut s = Scalar::zero();
        s.c[slot] = coeff;
        Ok(s)
    }

    /// Parses a full scalar expression, stopping at the first character that
    /// cannot continue it.
    pub(crate) fn scalar(&mut self) -> Result<Scalar> {
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
            let save = self.pos;
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => {
                    self.pos = save;
                    break;
                }
            };
            self.pos += 1;
            self.skip_ws();
            let starts_term = self.peek().is_some_and(|c| c.is_ascii_digit())
                || self.src[self.pos..].starts_with(b"sqrt");
            if !starts_term {
                self.pos = save;
                break;
            }
            let t = self.term()?;
            if sign > 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        Ok(acc)
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    pub(crate) fn seek(&mut self, pos: usize) {
        self.pos = pos;
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = ScalarParser::new(s, 0);
        let v = p.scalar()?;
        if !p.at_end() {
            return Err(Error::Parse {
                offset: p.position(),
                message: "trailing input".into(),
            });
        }
        Ok(v)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for a rational scalar `n/d`.
pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_products() {
        assert_eq!(Scalar::sqrt3() * Scalar::sqrt5(), Scalar::sqrt15());
        assert_eq!(Scalar::sqrt3().square(), int(3));
        assert_eq!(Scalar::sqrt5().square(), int(5));
        assert_eq!(Scalar::sqrt15().square(), int(15));
    }

    #[test]
    fn norm_identity() {
        let a = int(1) + Scalar::sqrt3();
        let b = int(1) - Scalar::sqrt3();
        assert_eq!(a * b, int(-2));
    }

    #[test]
    fn so_ir3_coefficient_squared() {
        let c = Scalar::sqrt15() * q(1, 5);
        assert_eq!(c.square(), q(3, 5));
    }

    #[test]
    fn inverse_roundtrip() {
        let x: Scalar = "2 - 1/3*sqrt3 + 5/7*sqrt5 - sqrt15".parse().unwrap();
        assert_eq!(&x * &x.inv().unwrap(), int(1));
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!((Scalar::sqrt3() - int(2)).signum(), -1);
        assert_eq!((int(4) - Scalar::sqrt15()).signum(), 1);
        // 2√3 + √5 - √15 - 1 ≈ 3.464 + 2.236 - 3.873 - 1 > 0
        let x = int(2) * Scalar::sqrt3() + Scalar::sqrt5() - Scalar::sqrt15() - int(1);
        assert_eq!(x.signum(), 1);
        // √15 - √3·√5 = 0
        assert_eq!((Scalar::sqrt15() - Scalar::sqrt3() * Scalar::sqrt5()).signum(), 0);
        let y = Scalar::sqrt5() - Scalar::sqrt3() - q(1, 2);
        assert_eq!(y.signum(), if y.to_f64() > 0.0 { 1 } else { -1 });
    }

    #[test]
    fn square_roots() {
        assert_eq!(int(3).sqrt(), Some(Scalar::sqrt3()));
        assert_eq!(q(3, 5).sqrt(), Some(Scalar::sqrt15() * q(1, 5)));
        assert_eq!(int(2).sqrt(), None);
        assert_eq!(int(-4).sqrt(), None);
        let s = int(1) + Scalar::sqrt3() + Scalar::sqrt5();
        assert_eq!(s.square().sqrt(), Some(s.clone()));
        let t = Scalar::sqrt3() - Scalar::sqrt5();
        assert_eq!(t.square().sqrt(), Some(t.abs()));
        let u = int(3) * Scalar::sqrt5() + Scalar::sqrt15();
        assert_eq!(u.square().sqrt(), Some(u));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Scalar::zero().to_string(), "0");
        let x = q(-1, 2) + Scalar::sqrt3() * q(3, 4) - Scalar::sqrt15();
        assert_eq!(x.to_string(), "-1/2 + 3/4*sqrt3 - sqrt15");
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        let y: Scalar = "p".parse::<Scalar>().unwrap_or_else(|_| int(7));
        assert_eq!(y, int(7));
        assert!("1/0".parse::<Scalar>().is_err());
        assert_eq!("2 + -3*sqrt5".parse::<Scalar>().ok(), None);
    }
}
