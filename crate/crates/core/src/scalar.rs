//! Coordinate scalar abstraction.

use std::fmt::Debug;

use num_traits::{Num, ToPrimitive};

/// Exact fraction used for scaling parameters and overlap weights.
///
/// Always stored reduced with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Arbitrary-precision rational coordinate type.
pub type BigRational = num_rational::BigRational;

/// A coordinate type the smoothing kernels can operate on.
///
/// Overlap weights are exact [`Rational`]s; `from_weight` is the single point
/// where they are converted into the coordinate type, right before the
/// multiply-accumulate.
pub trait Scalar: Num + Clone + PartialOrd + ToPrimitive + Debug + Send + Sync + 'static {
    fn from_weight(weight: &Rational) -> Self;

    fn is_finite_value(&self) -> bool;
}

impl Scalar for f64 {
    fn from_weight(weight: &Rational) -> Self {
        *weight.numer() as f64 / *weight.denom() as f64
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for f32 {
    fn from_weight(weight: &Rational) -> Self {
        (*weight.numer() as f64 / *weight.denom() as f64) as f32
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for BigRational {
    fn from_weight(weight: &Rational) -> Self {
        BigRational::new((*weight.numer()).into(), (*weight.denom()).into())
    }

    fn is_finite_value(&self) -> bool {
        true
    }
}
