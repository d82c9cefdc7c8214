use std::fmt;

use num_bigint::BigInt;

use super::poly::{Accumulator, CommPoly};
use crate::scalars::{rat, rat_int, Coeff, Rational};

/// Expansion variable of a [`SeriesZ`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    /// Powers `z^{-k}`.
    ZInv,
    /// Powers `z^k`.
    Z,
}

/// Power series in `z` or `z^{-1}` truncated at `order`, with commuting
/// polynomial coefficients. `coeff(k)` is the coefficient of `var^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesZ<S> {
    var: Var,
    coeffs: Vec<CommPoly<S>>,
}

/// `binom(-k, j) = (-1)^j binom(k + j - 1, j)` for `k >= 1`.
pub fn binom_neg(k: usize, j: usize) -> Rational {
    let mut b = BigInt::from(1);
    for t in 0..j {
        b = b * BigInt::from(k + t) / BigInt::from(t + 1);
    }
    let r = Rational::from_integer(b);
    if j % 2 == 1 {
        -r
    } else {
        r
    }
}

impl<S: Coeff> SeriesZ<S> {
    pub fn zero(var: Var, order: usize) -> Self {
        SeriesZ { var, coeffs: vec![CommPoly::zero(); order + 1] }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = CommPoly::one();
        s
    }

    pub fn from_coeffs(var: Var, order: usize, coeffs: Vec<CommPoly<S>>) -> Self {
        let mut s = Self::zero(var, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &CommPoly<S> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[CommPoly<S>] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, c: CommPoly<S>) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CommPoly::is_zero)
    }

    /// Number of nonzero monomials over all coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(CommPoly::len).sum()
    }

    fn check(&self, other: &Self) -> usize {
        assert_eq!(self.var, other.var, "mixing series in z and z^-1");
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.check(other);
        Self::from_coeffs(self.var, m, (0..=m).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.check(other);
        Self::from_coeffs(self.var, m, (0..=m).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.check(other);
        let mut out = Self::zero(self.var, m);
        for (k, slot) in out.coeffs.iter_mut().enumerate() {
            let mut acc = Accumulator::new();
            for a in 0..=k {
                acc.add_product(&self.coeffs[a], &other.coeffs[k - a], &S::one());
            }
            *slot = acc.finish();
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.var, self.order(), self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// `exp(x)` for `x` with zero constant term, via `k E_k = sum_j j x_j E_{k-j}`.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let m = self.order();
        let mut out = Self::one(self.var, m);
        for k in 1..=m {
            let mut acc = Accumulator::new();
            for j in 1..=k {
                let c = S::from_rational(&rat(j as i64, k as i64));
                acc.add_product(&self.coeffs[j], &out.coeffs[k - j], &c);
            }
            out.coeffs[k] = acc.finish();
        }
        out
    }

    /// `log(x)` for `x` with constant term 1, via
    /// `k L_k = k x_k - sum_{j<k} j L_j x_{k-j}`.
    pub fn log(&self) -> Self {
        assert!(self.coeffs[0] == CommPoly::one(), "log needs constant term 1");
        let m = self.order();
        let mut out = Self::zero(self.var, m);
        for k in 1..=m {
            let mut acc = Accumulator::new();
            acc.add_scaled(&self.coeffs[k], &S::one());
            for j in 1..k {
                let c = S::from_rational(&rat(-(j as i64), k as i64));
                acc.add_product(&out.coeffs[j], &self.coeffs[k - j], &c);
            }
            out.coeffs[k] = acc.finish();
        }
        out
    }
}

/// Substitutes `z -> z + c` in a series in `z^{-1}`, re-expanding
/// `(z + c)^{-k} = sum_j binom(-k, j) c^j z^{-k-j}` up to the order.
pub fn shift_series<S: Coeff>(s: &SeriesZ<S>, c: &Rational) -> SeriesZ<S> {
    assert_eq!(s.var(), Var::ZInv, "shift acts on series in z^-1");
    let m = s.order();
    let mut out = SeriesZ::zero(Var::ZInv, m);
    out.set(0, s.coeff(0).clone());
    for k in 1..=m {
        if s.coeff(k).is_zero() {
            continue;
        }
        let mut cj = rat_int(1);
        for j in 0..=m - k {
            let f = S::from_rational(&(binom_neg(k, j) * cj.clone()));
            out.coeffs[k + j].add_scaled(s.coeff(k), &f);
            cj = cj * c.clone();
        }
    }
    out
}

impl<S: Coeff> fmt::Display for SeriesZ<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::ZInv => "z^-",
            Var::Z => "z^",
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{v}{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({v}{})", self.order() + 1)
    }
}

impl<S: Coeff> fmt::Debug for SeriesZ<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesZ({self})")
    }
}
