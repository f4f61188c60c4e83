//! Arithmetic kernels shared by every other module.

pub mod cyclo;
pub mod exppoly;
pub mod gamma;
pub mod linalg;
pub mod nilpoly;
pub mod prec;
pub mod rational;
pub mod zlaurent;

pub use cyclo::{CycField, CycNum};
pub use exppoly::ExpPoly;
pub use gamma::gamma_taylor;
pub use nilpoly::NilPoly;
pub use prec::PrecComplex;
pub use rational::Rational;
pub use zlaurent::ZLaurent;

/// Coefficient ring interface used by the generic containers.
///
/// Every value can manufacture its own zero and one, so containers never need
/// ambient context (cyclotomic order, working precision) beyond a prototype.
pub trait Scalar: Clone + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse, `None` for zero (or non-units).
    fn recip(&self) -> Option<Self>;
    /// Image of a rational number in the same ring as `self`.
    fn embed(&self, q: &Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.times(&self.embed(q))
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::from_integer(0.into())
    }
    fn one_like(&self) -> Self {
        Rational::from_integer(1.into())
    }
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self))
        }
    }
    fn embed(&self, q: &Rational) -> Self {
        q.clone()
    }
}
