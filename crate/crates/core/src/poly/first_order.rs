use super::{BiPoly, UniPoly};
use crate::rational::Rational;

/// The operator `p ↦ mul·p + der·∂_t p`, acting on the `t` variable only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrder {
    pub mul: UniPoly,
    pub der: UniPoly,
}

impl FirstOrder {
    pub fn new(mul: UniPoly, der: UniPoly) -> Self {
        FirstOrder { mul, der }
    }

    pub fn multiplication(mul: UniPoly) -> Self {
        FirstOrder {
            mul,
            der: UniPoly::zero(),
        }
    }

    pub fn apply(&self, p: &UniPoly) -> UniPoly {
        if self.der.is_zero() {
            return &self.mul * p;
        }
        &self.mul * p + &self.der * &p.derivative()
    }

    pub fn apply_bi(&self, p: &BiPoly) -> BiPoly {
        let out = p.mul_uni(&self.mul);
        if self.der.is_zero() {
            return out;
        }
        out + p.diff_t().mul_uni(&self.der)
    }

    /// `self + c` (adds the constant `c` to the multiplier).
    pub fn plus_constant(&self, c: &Rational) -> Self {
        FirstOrder {
            mul: &self.mul + &UniPoly::constant(c.clone()),
            der: self.der.clone(),
        }
    }

    /// `t ∘ self`.
    pub fn times_t(&self) -> Self {
        FirstOrder {
            mul: self.mul.shift_up(1),
            der: self.der.shift_up(1),
        }
    }
}
