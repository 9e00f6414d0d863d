//! Exact scalar fields.
//!
//! Three scalar kinds are supported and form the tower
//! `Q ⊂ Q(θ) ⊂ Q(θ)(t₁, …, t_k)`:
//!
//! * [`Rational`]: arbitrary precision rationals,
//! * [`NumberFieldElement`]: elements of a simple algebraic extension with a
//!   designated complex embedding,
//! * [`RatFunc`]: multivariate rational functions with number field
//!   coefficients.
//!
//! All of them implement [`Scalar`], which is what the linear algebra in
//! [`crate::linalg`] is generic over.

mod interval;
mod mpoly;
mod number_field;
mod ratfunc;
mod rational;
mod upoly;

use std::fmt;

pub use interval::{ComplexInterval, RealInterval};
pub use mpoly::{Monomial, MPoly};
pub use number_field::{IsolatingBox, DEFAULT_SIGN_BUDGET, NumberField, NumberFieldElement, NumberFieldError};
pub use ratfunc::{FunctionField, RatFunc};
pub use rational::{parse_rational, rat, Rational};
pub use upoly::UPoly;

/// An element of an exact field.
///
/// Elements carry enough information to recover their parent field (the
/// [`Scalar::Ctx`]), so generic code can manufacture zeros and ones without a
/// separate ring object.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn context(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &Rational) -> Self;

    fn is_zero_el(&self) -> bool;
    fn is_one_el(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// Rough measure of representation size, used for pivot selection.
    fn size(&self) -> usize;
}

impl Scalar for Rational {
    type Ctx = ();

    fn context(&self) -> Self::Ctx {}

    fn zero_in(_: &()) -> Self {
        num_traits::Zero::zero()
    }

    fn one_in(_: &()) -> Self {
        num_traits::One::one()
    }

    fn from_rational(_: &(), q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero_el(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn is_one_el(&self) -> bool {
        num_traits::One::is_one(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Self {
        assert!(!Scalar::is_zero_el(self), "inverse of zero");
        self.recip()
    }

    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn size(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}
