//! Rational functions in Q(x), kept as reduced quotients of integer polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;

/// `num / den` with `gcd(num, den) = 1` in Z[x] and `lc(den) > 0`.
///
/// Z[x] is a UFD with units {1, -1}, so this form is unique and equality is
/// structural. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, crate::Error> {
        if den.is_zero() {
            return Err(crate::Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    /// Panics on a zero denominator.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if let Some(q) = num.div_exact(&den) {
            (q, IntPoly::one())
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        if den.lc().is_negative() {
            RatFunc { num: -num, den: -den }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial value when the denominator is 1.
    pub fn as_poly(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, crate::Error> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let (n, d) = (self.num.pow(e.unsigned_abs() as u32), self.den.pow(e.unsigned_abs() as u32));
        // Powers of a reduced fraction stay reduced; only the sign may need fixing.
        let (n, d) = if e >= 0 { (n, d) } else { (d, n) };
        assert!(!d.is_zero(), "negative power of zero");
        if d.lc().is_negative() {
            RatFunc { num: -n, den: -d }
        } else {
            RatFunc { num: n, den: d }
        }
    }

    /// Cross-multiplication test, independent of the canonical form.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from(IntPoly::constant(c))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        // Cancel crosswise first so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if den.lc().is_negative() {
            RatFunc { num: -num, den: -den }
        } else {
            RatFunc { num, den }
        }
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: IntPoly,
    den: IntPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        RatFunc::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

/// `c` as a constant rational function.
pub fn ratfunc_const(c: impl Into<BigInt>) -> RatFunc {
    RatFunc::from(IntPoly::constant(c))
}

impl RatFunc {
    pub fn is_integral_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn x() -> Self {
        RatFunc::from(IntPoly::x())
    }

    pub fn scalar(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        self * &ratfunc_const(c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn normalization_cancels_common_factors() {
        let a = RatFunc::from_parts(p(&[-1, 0, 1]), p(&[1, 1]));
        assert_eq!(a, RatFunc::from(p(&[-1, 1])));
        let b = RatFunc::from_parts(p(&[2]), p(&[0, -4]));
        assert_eq!(b.num(), &p(&[-1]));
        assert_eq!(b.den(), &p(&[0, 2]));
        assert!(RatFunc::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let x = RatFunc::x();
        let inv_x = x.inv().unwrap();
        assert_eq!(&x * &inv_x, RatFunc::one());
        // x - 1/x = (x^2 - 1)/x
        let d = &x - &inv_x;
        assert_eq!(d, RatFunc::from_parts(p(&[-1, 0, 1]), p(&[0, 1])));
        assert_eq!(&d / &d, RatFunc::one());
        assert_eq!(inv_x.pow(-2), RatFunc::from(p(&[0, 0, 1])));
    }

    #[test]
    fn json_form() {
        let r = RatFunc::from_parts(p(&[1]), p(&[0, 1]));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":["1"],"den":["0","1"]}"#);
        assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), r);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn common_factor_cancels(a in small_poly(6), b in small_poly(6), c in small_poly(6)) {
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let lhs = RatFunc::from_parts(&a * &c, &b * &c);
            let rhs = RatFunc::from_parts(a.clone(), b.clone());
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.cross_eq(&rhs));
        }

        #[test]
        fn arithmetic_agrees_with_cross_multiplication(
            a in small_poly(3), b in small_poly(3), c in small_poly(3), d in small_poly(3)
        ) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let u = RatFunc::from_parts(a.clone(), b.clone());
            let v = RatFunc::from_parts(c.clone(), d.clone());
            let sum = &u + &v;
            prop_assert!(sum.cross_eq(&RatFunc::from_parts(&(&a * &d) + &(&c * &b), &b * &d)));
            let prod = &u * &v;
            prop_assert!(prod.cross_eq(&RatFunc::from_parts(&a * &c, &b * &d)));
        }
    }
}
