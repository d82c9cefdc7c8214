use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_int, Rational};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Zero coefficients are never stored, so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentQ {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentQ {
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(rat_int(1), e)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat_int(c))
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut out = LaurentQ::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentQ::zero();
        }
        LaurentQ {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `q -> q^s` (s may be negative).
    pub fn subs_q_pow(&self, s: i64) -> Self {
        assert!(s != 0, "q -> q^0 is not invertible");
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (e * s, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        self.subs_q_pow(-1)
    }

    /// Formal evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentQ::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Dense coefficient vector of `q^{-min_exp} * self`, lowest degree first.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i64, v: &[Rational]) -> Self {
        LaurentQ::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    /// Exact division; `None` when `other` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, other: &LaurentQ) -> Option<LaurentQ> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentQ::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = other.to_dense();
        let (quot, rem) = super::poly::divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentQ::from_dense(sa - sb, &quot))
    }
}

impl Zero for LaurentQ {
    fn zero() -> Self {
        LaurentQ::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentQ {
    fn one() -> Self {
        LaurentQ::from_int(1)
    }
}

impl<'a> Add<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: LaurentQ) -> LaurentQ {
        &self + &rhs
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: LaurentQ) -> LaurentQ {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        &self * &rhs
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -self.clone()
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQ({self})")
    }
}
