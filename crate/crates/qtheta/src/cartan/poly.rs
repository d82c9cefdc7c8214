use std::collections::btree_map::Entry;
use std::collections::hash_map::Entry as HEntry;
use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ncalg::Gen;
use crate::scalars::Coeff;

/// Monomial in commuting symbols: sorted `(symbol, exponent)` pairs with
/// nonzero exponents. Negative exponents are allowed for invertible symbols
/// such as `phi^-_{i,0}`.
pub type Monomial = Vec<(Gen, i32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Polynomial in commuting symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommPoly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Coeff> Default for CommPoly<S> {
    fn default() -> Self {
        CommPoly { terms: BTreeMap::new() }
    }
}

impl<S: Coeff> CommPoly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn var(g: Gen) -> Self {
        Self::term(vec![(g, 1)], S::one())
    }

    /// `g^e`, `e` may be negative.
    pub fn var_pow(g: Gen, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self::term(vec![(g, e)], S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let x = e.get().add_ref(&c);
                if x.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = x;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&Vec::new())
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
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), f(x));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes each symbol with a polynomial via `f`; symbols with a
    /// negative exponent must be mapped to a monomial.
    pub fn substitute(&self, f: &impl Fn(Gen) -> Option<CommPoly<S>>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &(g, e) in m {
                let base = f(g).unwrap_or_else(|| Self::var(g));
                let p = if e >= 0 {
                    base.pow(e as u32)
                } else {
                    let (bm, bc) = base.terms.iter().next().expect("nonzero image");
                    assert_eq!(base.len(), 1, "inverting a non-monomial image of {g}");
                    let inv_m: Monomial = bm.iter().map(|&(h, x)| (h, -x)).collect();
                    Self::term(inv_m, bc.inverse().expect("invertible coefficient")).pow((-e) as u32)
                };
                acc = &acc * &p;
            }
            out = &out + &acc;
        }
        out
    }
}

impl<'a, S: Coeff> Add<&'a CommPoly<S>> for &'a CommPoly<S> {
    type Output = CommPoly<S>;
    fn add(self, rhs: &CommPoly<S>) -> CommPoly<S> {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<S: Coeff> CommPoly<S> {
    /// `self += c * other` in place.
    pub fn add_scaled(&mut self, other: &CommPoly<S>, c: &S) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.mul_ref(c));
        }
    }

    pub fn add_assign(&mut self, other: &CommPoly<S>) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone());
        }
    }
}

impl<'a, S: Coeff> Sub<&'a CommPoly<S>> for &'a CommPoly<S> {
    type Output = CommPoly<S>;
    fn sub(self, rhs: &CommPoly<S>) -> CommPoly<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Coeff> Mul<&'a CommPoly<S>> for &'a CommPoly<S> {
    type Output = CommPoly<S>;
    fn mul(self, rhs: &CommPoly<S>) -> CommPoly<S> {
        let mut acc = Accumulator::new();
        acc.add_product(self, rhs, &S::one());
        acc.finish()
    }
}

/// Unordered sum of polynomial products, canonicalized once by [`Accumulator::finish`].
pub struct Accumulator<S> {
    terms: FxHashMap<Monomial, S>,
}

impl<S: Coeff> Default for Accumulator<S> {
    fn default() -> Self {
        Accumulator { terms: FxHashMap::default() }
    }
}

impl<S: Coeff> Accumulator<S> {
    pub fn new() -> Self {
        Self::default()
    }

    fn add(&mut self, m: Monomial, c: S) {
        match self.terms.entry(m) {
            HEntry::Occupied(mut e) => {
                let x = e.get().add_ref(&c);
                *e.get_mut() = x;
            }
            HEntry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += c * p`.
    pub fn add_scaled(&mut self, p: &CommPoly<S>, c: &S) {
        for (m, x) in &p.terms {
            self.add(m.clone(), x.mul_ref(c));
        }
    }

    /// `self += c * a * b`.
    pub fn add_product(&mut self, a: &CommPoly<S>, b: &CommPoly<S>, c: &S) {
        let one = c.is_one();
        for (m1, c1) in &a.terms {
            let c1 = if one { c1.clone() } else { c1.mul_ref(c) };
            for (m2, c2) in &b.terms {
                self.add(mono_mul(m1, m2), c1.mul_ref(c2));
            }
        }
    }

    pub fn finish(self) -> CommPoly<S> {
        CommPoly { terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl<S: Coeff> Neg for &CommPoly<S> {
    type Output = CommPoly<S>;
    fn neg(self) -> CommPoly<S> {
        self.scale(&-S::one())
    }
}

fn mono_to_string(m: &Monomial) -> String {
    m.iter()
        .map(|&(g, e)| if e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl<S: Coeff> fmt::Display for CommPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.is_empty() { "1".to_string() } else { mono_to_string(m) };
            if m.is_empty() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                let cs = c.to_string();
                if cs.contains(' ') {
                    write!(f, "({cs})")?;
                } else {
                    write!(f, "{cs}")?;
                }
            } else {
                crate::ncalg::fmt_term(f, c, &body, i == 0)?;
            }
        }
        Ok(())
    }
}

impl<S: Coeff> fmt::Debug for CommPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommPoly({self})")
    }
}
