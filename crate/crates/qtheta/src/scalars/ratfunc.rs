use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentQ;
use super::{poly, Rational, ScalarError};

/// Rational function in `q` over Q, kept in canonical form.
///
/// Canonical form: `den` is a polynomial in `q` with constant term 1, coprime to
/// the numerator; all powers of `q` live in `num`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFuncQ {
    num: LaurentQ,
    den: LaurentQ,
}

impl RatFuncQ {
    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return RatFuncQ::zero();
        }
        let (dshift, d) = den.to_dense();
        let (nshift, n) = num.to_dense();
        let g = poly::gcd(&n, &d);
        let (n, d) = if poly::is_one(&g) {
            (n, d)
        } else {
            let (qn, _) = poly::divrem(&n, &g);
            let (qd, _) = poly::divrem(&d, &g);
            (qn, qd)
        };
        // d has nonzero constant term since its q-power was split off.
        let c0 = d[0].clone();
        let n: Vec<Rational> = n.iter().map(|x| x / &c0).collect();
        let d: Vec<Rational> = d.iter().map(|x| x / &c0).collect();
        RatFuncQ {
            num: LaurentQ::from_dense(nshift - dshift, &n),
            den: LaurentQ::from_dense(0, &d),
        }
    }

    pub fn from_laurent(x: LaurentQ) -> Self {
        RatFuncQ { num: x, den: LaurentQ::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_laurent(LaurentQ::constant(r))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentQ::from_int(c))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    pub fn num(&self) -> &LaurentQ {
        &self.num
    }

    pub fn den(&self) -> &LaurentQ {
        &self.den
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        self.den.is_one().then_some(&self.num)
    }

    /// The rational constant this equals, if it is `q`-free.
    pub fn as_rational(&self) -> Option<Rational> {
        let l = self.as_laurent()?;
        if l.is_zero() {
            return Some(Rational::zero());
        }
        (l.is_monomial() && l.min_exp() == Some(0)).then(|| l.coeff(0))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical(self.den.clone(), self.num.clone()))
    }

    /// Substitutes `q -> q^s`.
    pub fn subs_q_pow(&self, s: i64) -> Self {
        Self::canonical(self.num.subs_q_pow(s), self.den.subs_q_pow(s))
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        self.subs_q_pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("zero to a negative power") } else { self.clone() };
        let mut out = RatFuncQ::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Formal evaluation at `q = 1`; `None` on a pole.
    pub fn eval_at_one(&self) -> Option<Rational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_at_one() / d)
    }

    /// Re-runs canonicalization; a no-op on any value produced by this type.
    pub fn normalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }
}

impl Zero for RatFuncQ {
    fn zero() -> Self {
        RatFuncQ { num: LaurentQ::zero(), den: LaurentQ::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFuncQ {
    fn one() -> Self {
        RatFuncQ::from_int(1)
    }
}

impl<'a> Add<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFuncQ::from_laurent(&self.num + &rhs.num);
            }
            return RatFuncQ::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFuncQ::canonical(num, &self.den * &rhs.den)
    }
}

impl Add for RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: RatFuncQ) -> RatFuncQ {
        &self + &rhs
    }
}

impl<'a> Sub<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        self + &(-rhs)
    }
}

impl Sub for RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: RatFuncQ) -> RatFuncQ {
        &self - &rhs
    }
}

impl<'a> Mul<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFuncQ::from_laurent(&self.num * &rhs.num);
        }
        // Monomial numerators and a shared trivial side need no gcd.
        if rhs.den.is_one() && rhs.num.is_monomial() {
            return RatFuncQ { num: &self.num * &rhs.num, den: self.den.clone() };
        }
        if self.den.is_one() && self.num.is_monomial() {
            return RatFuncQ { num: &self.num * &rhs.num, den: rhs.den.clone() };
        }
        RatFuncQ::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: RatFuncQ) -> RatFuncQ {
        &self * &rhs
    }
}

impl<'a> Div<&'a RatFuncQ> for &'a RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Div for RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: RatFuncQ) -> RatFuncQ {
        &self / &rhs
    }
}

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ { num: -self.num, den: self.den }
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        -self.clone()
    }
}

impl From<LaurentQ> for RatFuncQ {
    fn from(x: LaurentQ) -> Self {
        RatFuncQ::from_laurent(x)
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncQ({self})")
    }
}
