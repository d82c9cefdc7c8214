use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gen::{word_to_string, word_weight, Gen, Weight, Word};
use crate::scalars::Coeff;

/// Finite linear combination of words in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCElement<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Coeff> Default for NCElement<S> {
    fn default() -> Self {
        NCElement { terms: BTreeMap::new() }
    }
}

impl<S: Coeff> NCElement<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(vec![g], S::one())
    }

    pub fn word(w: &[Gen]) -> Self {
        Self::term(w.to_vec(), S::one())
    }

    pub fn term(w: Word, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, S)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in it {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.clone() * c.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, S)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
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

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), f(x))))
    }

    /// Splits into weight-homogeneous components.
    pub fn components(&self) -> BTreeMap<Weight, NCElement<S>> {
        let mut out: BTreeMap<Weight, NCElement<S>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(word_weight(w)).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn weight(&self) -> Option<Weight> {
        let comps = self.components();
        (comps.len() == 1).then(|| *comps.keys().next().unwrap())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.components().len() <= 1
    }

    /// Letters occurring in any word.
    pub fn letters(&self) -> Vec<Gen> {
        let mut v: Vec<Gen> = self.terms.keys().flatten().copied().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `[a, b]_p = ab - p ba`.
    pub fn q_commutator(a: &Self, b: &Self, p: &S) -> Self {
        &(a * b) - &(b * a).scale(p)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Product keeping only words whose weight height is at most `h`.
    pub fn mul_truncated(&self, other: &Self, h: i32) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            let h1 = word_weight(w1).height();
            for (w2, c2) in &other.terms {
                if h1 + word_weight(w2).height() > h {
                    continue;
                }
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<'a, S: Coeff> Add<&'a NCElement<S>> for &'a NCElement<S> {
    type Output = NCElement<S>;
    fn add(self, rhs: &NCElement<S>) -> NCElement<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Coeff> Sub<&'a NCElement<S>> for &'a NCElement<S> {
    type Output = NCElement<S>;
    fn sub(self, rhs: &NCElement<S>) -> NCElement<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Coeff> Mul<&'a NCElement<S>> for &'a NCElement<S> {
    type Output = NCElement<S>;
    fn mul(self, rhs: &NCElement<S>) -> NCElement<S> {
        let mut out = NCElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Coeff> Add for NCElement<S> {
    type Output = NCElement<S>;
    fn add(self, rhs: NCElement<S>) -> NCElement<S> {
        &self + &rhs
    }
}

impl<S: Coeff> Sub for NCElement<S> {
    type Output = NCElement<S>;
    fn sub(self, rhs: NCElement<S>) -> NCElement<S> {
        &self - &rhs
    }
}

impl<S: Coeff> Mul for NCElement<S> {
    type Output = NCElement<S>;
    fn mul(self, rhs: NCElement<S>) -> NCElement<S> {
        &self * &rhs
    }
}

impl<S: Coeff> Neg for NCElement<S> {
    type Output = NCElement<S>;
    fn neg(self) -> NCElement<S> {
        NCElement { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<S: Coeff> Neg for &NCElement<S> {
    type Output = NCElement<S>;
    fn neg(self) -> NCElement<S> {
        -self.clone()
    }
}

/// Writes `c*word`, omitting unit coefficients and parenthesizing compound ones.
pub(crate) fn fmt_term<S: Coeff>(f: &mut fmt::Formatter<'_>, c: &S, body: &str, first: bool) -> fmt::Result {
    let cs = c.to_string();
    let neg_unit = *c == -S::one();
    if !first {
        write!(f, " + ")?;
    }
    if c.is_one() {
        write!(f, "{body}")
    } else if neg_unit {
        write!(f, "-{body}")
    } else if cs.contains([' ', '/', '*']) {
        write!(f, "({cs})*{body}")
    } else {
        write!(f, "{cs}*{body}")
    }
}

impl<S: Coeff> fmt::Display for NCElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            fmt_term(f, c, &word_to_string(w), i == 0)?;
        }
        Ok(())
    }
}

impl<S: Coeff> fmt::Debug for NCElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCElement({self})")
    }
}
