use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::element::{fmt_term, NCElement};
use super::gen::{word_to_string, word_weight, Gen, Weight, Word};
use super::AlgebraError;
use crate::scalars::Coeff;

/// Truncation applied to every product of tensors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cap {
    None,
    /// Keep terms whose right weight has height at most the bound.
    Height(i32),
    /// Keep terms of `z`-degree at most the bound.
    ZDegree(i32),
}

impl Cap {
    fn merge(self, other: Cap) -> Cap {
        match (self, other) {
            (Cap::None, c) | (c, Cap::None) => c,
            (Cap::Height(a), Cap::Height(b)) => Cap::Height(a.min(b)),
            (Cap::ZDegree(a), Cap::ZDegree(b)) => Cap::ZDegree(a.min(b)),
            (a, b) => panic!("incompatible tensor truncations {a:?} and {b:?}"),
        }
    }

    fn admits(self, right: &[Gen], z: i32) -> bool {
        match self {
            Cap::None => true,
            Cap::Height(h) => word_weight(right).height() <= h,
            Cap::ZDegree(d) => z <= d,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorKey {
    pub left: Word,
    pub right: Word,
    /// Power of the spectral parameter `z` (negative for `z^{-1}` powers).
    pub z: i32,
}

impl TensorKey {
    pub fn weights(&self) -> (Weight, Weight) {
        (word_weight(&self.left), word_weight(&self.right))
    }
}

/// Linear combination of `left (x) right * z^d` with a truncation [`Cap`].
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement<S> {
    terms: BTreeMap<TensorKey, S>,
    cap: Cap,
}

/// Flavor of exponential series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpFlavor {
    /// `sum x^k / k!`
    Classical,
    /// `sum x^k / (k)_q!`
    QDeformed,
}

/// Coefficient of `x^k` in the exponential of the given flavor.
pub fn exp_coefficient<S: Coeff>(flavor: ExpFlavor, k: u32) -> Result<S, AlgebraError> {
    match flavor {
        ExpFlavor::Classical => {
            let mut f = crate::scalars::rat_int(1);
            for s in 1..=k as i64 {
                f *= crate::scalars::rat_int(s);
            }
            Ok(S::from_rational(&f.recip()))
        }
        ExpFlavor::QDeformed => {
            let f = crate::scalars::RatFuncQ::from(crate::scalars::q_round_factorial(k));
            S::from_ratfunc(&f.inv().unwrap()).ok_or(AlgebraError::ScalarUnsupported)
        }
    }
}

impl<S: Coeff> TensorElement<S> {
    pub fn zero(cap: Cap) -> Self {
        TensorElement { terms: BTreeMap::new(), cap }
    }

    pub fn one(cap: Cap) -> Self {
        Self::pure(&NCElement::one(), &NCElement::one(), 0, cap)
    }

    /// `a (x) b * z^d`.
    pub fn pure(a: &NCElement<S>, b: &NCElement<S>, z: i32, cap: Cap) -> Self {
        let mut out = Self::zero(cap);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_term(wa.clone(), wb.clone(), z, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    pub fn with_cap(&self, cap: Cap) -> Self {
        let mut out = Self::zero(cap);
        for (k, c) in &self.terms {
            out.add_term(k.left.clone(), k.right.clone(), k.z, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, left: Word, right: Word, z: i32, c: S) {
        if c.is_zero() || !self.cap.admits(&right, z) {
            return;
        }
        let key = TensorKey { left, right, z };
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, x) in &self.terms {
            out.add_term(k.left.clone(), k.right.clone(), k.z, x.clone() * c.clone());
        }
        out
    }

    /// Multiplies every term by `z^d`.
    pub fn shift_z(&self, d: i32) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, x) in &self.terms {
            out.add_term(k.left.clone(), k.right.clone(), k.z + d, x.clone());
        }
        out
    }

    /// Substitutes `z -> -z`.
    pub fn negate_z(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, x) in &self.terms {
            let c = if k.z % 2 == 0 { x.clone() } else { -x.clone() };
            out.add_term(k.left.clone(), k.right.clone(), k.z, c);
        }
        out
    }

    /// Applies `f` to each left factor and `g` to each right factor.
    pub fn map_factors<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<NCElement<S>, E>,
        mut g: impl FnMut(&Word) -> Result<NCElement<S>, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero(self.cap);
        for (k, c) in &self.terms {
            let l = f(&k.left)?;
            let r = g(&k.right)?;
            for (wl, cl) in l.terms() {
                for (wr, cr) in r.terms() {
                    out.add_term(wl.clone(), wr.clone(), k.z, c.clone() * cl.clone() * cr.clone());
                }
            }
        }
        Ok(out)
    }

    /// Groups terms by (left weight, right weight, z-degree).
    pub fn components(&self) -> BTreeMap<(Weight, Weight, i32), TensorElement<S>> {
        let mut out: BTreeMap<(Weight, Weight, i32), TensorElement<S>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let (wl, wr) = k.weights();
            out.entry((wl, wr, k.z))
                .or_insert_with(|| TensorElement::zero(self.cap))
                .add_term(k.left.clone(), k.right.clone(), k.z, c.clone());
        }
        out
    }

    /// Component whose right factor has weight `beta`.
    pub fn right_weight_component(&self, beta: Weight) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, c) in &self.terms {
            if word_weight(&k.right) == beta {
                out.add_term(k.left.clone(), k.right.clone(), k.z, c.clone());
            }
        }
        out
    }

    /// Largest right-weight height among the terms.
    pub fn max_height(&self) -> i32 {
        self.terms.keys().map(|k| word_weight(&k.right).height()).max().unwrap_or(0)
    }

    pub fn max_z(&self) -> i32 {
        self.terms.keys().map(|k| k.z).max().unwrap_or(0)
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.cap), |acc, _| &acc * self)
    }

    /// `sum_{k <= depth} c_k x^k` for the given flavor. Every term of `x` must be
    /// strictly positive for the active cap unless `explicit_depth` is set.
    pub fn exponential(&self, flavor: ExpFlavor, depth: u32, explicit_depth: bool) -> Result<Self, AlgebraError> {
        if !explicit_depth {
            let positive = self.terms.keys().all(|k| match self.cap {
                Cap::ZDegree(_) => k.z > 0,
                _ => word_weight(&k.right).height() > 0,
            });
            if !positive {
                return Err(AlgebraError::ZeroHeightTerm);
            }
        }
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=depth {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&exp_coefficient::<S>(flavor, k)?);
        }
        Ok(out)
    }
}

impl<'a, S: Coeff> Add<&'a TensorElement<S>> for &'a TensorElement<S> {
    type Output = TensorElement<S>;
    fn add(self, rhs: &TensorElement<S>) -> TensorElement<S> {
        let mut out = self.with_cap(self.cap.merge(rhs.cap));
        for (k, c) in &rhs.terms {
            out.add_term(k.left.clone(), k.right.clone(), k.z, c.clone());
        }
        out
    }
}

impl<'a, S: Coeff> Sub<&'a TensorElement<S>> for &'a TensorElement<S> {
    type Output = TensorElement<S>;
    fn sub(self, rhs: &TensorElement<S>) -> TensorElement<S> {
        let mut out = self.with_cap(self.cap.merge(rhs.cap));
        for (k, c) in &rhs.terms {
            out.add_term(k.left.clone(), k.right.clone(), k.z, -c.clone());
        }
        out
    }
}

impl<'a, S: Coeff> Mul<&'a TensorElement<S>> for &'a TensorElement<S> {
    type Output = TensorElement<S>;
    fn mul(self, rhs: &TensorElement<S>) -> TensorElement<S> {
        let mut out = TensorElement::zero(self.cap.merge(rhs.cap));
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let mut right = k1.right.clone();
                right.extend_from_slice(&k2.right);
                if !out.cap.admits(&right, k1.z + k2.z) {
                    continue;
                }
                let mut left = k1.left.clone();
                left.extend_from_slice(&k2.left);
                out.add_term(left, right, k1.z + k2.z, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Coeff> Neg for &TensorElement<S> {
    type Output = TensorElement<S>;
    fn neg(self) -> TensorElement<S> {
        self.scale(&-S::one())
    }
}

impl<S: Coeff> fmt::Display for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let z = match k.z {
                0 => String::new(),
                1 => " z".to_string(),
                d => format!(" z^{d}"),
            };
            let body = format!("{} (x) {}{}", word_to_string(&k.left), word_to_string(&k.right), z);
            fmt_term(f, c, &format!("[{body}]"), i == 0)?;
        }
        Ok(())
    }
}

impl<S: Coeff> fmt::Debug for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

