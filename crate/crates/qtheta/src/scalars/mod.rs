//! Exact scalars: rationals, Laurent polynomials and rational functions in `q`,
//! q-numbers and the quantum Cartan matrix.
//!
//! - [`Coeff`]: the field interface every algebra element is generic over
//! - [`LaurentQ`], [`RatFuncQ`]
//! - [`q_bracket`], [`q_round`], factorials and binomials
//! - [`QCartan`], [`quantum_cartan_inverse`]

mod laurent;
pub(crate) mod poly;
mod qcartan;
mod qnum;
mod ratfunc;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::LaurentQ;
pub use qcartan::{cartan_matrix_a, quantum_cartan, quantum_cartan_inverse, QCartan};
pub use qnum::{
    exp_q_coefficient, inv_q_minus_qinv, q_binomial, q_bracket, q_bracket_factorial, q_falling,
    q_minus_qinv, q_round, q_round_factorial,
};
pub use ratfunc::RatFuncQ;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
}

/// A commutative coefficient field.
///
/// `bar` is the involution `q -> q^{-1}` (the identity on `q`-free fields).
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: &Rational) -> Self;
    /// Embeds a rational function; `None` if the field cannot hold it.
    fn from_ratfunc(x: &RatFuncQ) -> Option<Self>;
    fn inverse(&self) -> Option<Self>;
    fn bar(&self) -> Self;

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self + other` without consuming either operand.
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat_int(n))
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_ratfunc(x: &RatFuncQ) -> Option<Self> {
        x.as_rational()
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn bar(&self) -> Self {
        self.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        small_parts(self)
            .zip(small_parts(other))
            .map(|((a, b), (c, d))| from_i128(a * c, b * d))
            .unwrap_or_else(|| self * other)
    }
    fn add_ref(&self, other: &Self) -> Self {
        small_parts(self)
            .zip(small_parts(other))
            .map(|((a, b), (c, d))| from_i128(a * d + c * b, b * d))
            .unwrap_or_else(|| self + other)
    }
}

/// Numerator and denominator when both fit in `i64`, widened so that one
/// product or cross sum cannot overflow.
fn small_parts(x: &Rational) -> Option<(i128, i128)> {
    use num_traits::ToPrimitive;
    Some((x.numer().to_i64()? as i128, x.denom().to_i64()? as i128))
}

/// `n / d` in lowest terms, `d > 0`.
fn from_i128(n: i128, d: i128) -> Rational {
    use num_integer::Integer;
    let g = n.gcd(&d);
    Rational::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

impl Coeff for RatFuncQ {
    fn from_rational(r: &Rational) -> Self {
        RatFuncQ::from_rational(r.clone())
    }
    fn from_ratfunc(x: &RatFuncQ) -> Option<Self> {
        Some(x.clone())
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn bar(&self) -> Self {
        RatFuncQ::bar(self)
    }
}

/// True if `x` is the multiplicative identity.
pub fn is_unit<S: Coeff>(x: &S) -> bool {
    *x == S::one()
}
