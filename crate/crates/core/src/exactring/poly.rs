//! Dense univariate polynomials over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of Z[x], stored as ascending coefficients without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn x_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// If `self == c * x^k` returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(BigInt, usize)> {
        let d = self.degree()?;
        if self.coeffs[..d].iter().all(Zero::is_zero) {
            Some((self.coeffs[d].clone(), d))
        } else {
            None
        }
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Divides every coefficient by `s`; panics if a division is inexact.
    pub fn div_scalar_exact(&self, s: &BigInt) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(s);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d` in Z[x], or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        let dd = d.degree().unwrap();
        let lc = d.lc();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.lc();
            let shift = rd - dd;
            // rem = lc * rem - top * x^shift * d
            let mut coeffs: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lc).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &top * dc;
            }
            rem = IntPoly::from_coeffs(coeffs);
        }
        rem
    }

    /// Greatest common divisor in Z[x], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return IntPoly::constant(c);
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // Cheap exits for the common case where one divides the other.
        if a.div_exact(&b).is_some() {
            return b.scale(&c);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&c)
    }

    /// Decimal strings, ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, crate::Error> {
        let coeffs = items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|_| crate::Error::Parse(format!("bad integer {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 if show_coeff => write!(f, "*x")?,
                1 => write!(f, "x")?,
                _ if show_coeff => write!(f, "*x^{k}")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Degree first, then coefficients from the top down. Only used to give sets a
/// deterministic order.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o += r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o -= r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPoly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&a + &b, p(&[0, 1, 1]));
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 4]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn gcd_handles_content() {
        let a = p(&[-2, 0, 2]); // 2(x-1)(x+1)
        let b = p(&[4, 4]); // 4(x+1)
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 6])), p(&[3]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn display_and_serialization() {
        assert_eq!(p(&[1, 0, -3, 0, 1]).to_string(), "x^4 - 3*x^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        let json = serde_json::to_string(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(json, r#"["-1","0","1"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[-1, 0, 1]));
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[1, 0, -3, 0, 1]).eval(&BigInt::from(2)), BigInt::from(5));
    }
}
