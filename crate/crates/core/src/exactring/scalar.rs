use std::fmt;

use super::{IntPoly, RatFunc};

/// Coefficient rings for diagram combinations and cell-module vectors:
/// `Z[x]` and `Q(x)`.
pub trait Scalar:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + From<IntPoly> + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn x_pow(k: usize) -> Self {
        Self::from(IntPoly::x_pow(k))
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }
}

impl Scalar for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
