use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::element::NCElement;
use super::gen::{Gen, Word};
use super::tensor::TensorElement;
use super::AlgebraError;
use crate::linalg::{Echelon, SparseVec};
use crate::scalars::Coeff;

/// Default bound on rewrite steps per reduction.
pub const DEFAULT_STEP_CAP: usize = 5_000_000;

/// Oriented rewrite rules plus unoriented ideal generators.
///
/// A word is normal when no adjacent pair has a swap rule and no letter has a
/// letter rule. Pairs that are out of order for `order` must carry a rule.
#[derive(Clone)]
pub struct RelationSet<S> {
    pub name: String,
    pub swap_rules: HashMap<(Gen, Gen), NCElement<S>>,
    pub letter_rules: HashMap<Gen, NCElement<S>>,
    pub ideal_generators: Vec<NCElement<S>>,
    pub order: fn(&Gen) -> i32,
    pub step_cap: usize,
    /// Degree of a letter for the ideal-closure bound; group-like letters
    /// such as `K_i` may count 0.
    pub letter_degree: fn(&Gen) -> usize,
}

impl<S: Coeff> RelationSet<S> {
    pub fn new(name: &str, order: fn(&Gen) -> i32) -> Self {
        RelationSet {
            name: name.to_string(),
            swap_rules: HashMap::new(),
            letter_rules: HashMap::new(),
            ideal_generators: Vec::new(),
            order,
            step_cap: DEFAULT_STEP_CAP,
            letter_degree: |_| 1,
        }
    }

    pub fn add_swap(&mut self, g: Gen, h: Gen, target: NCElement<S>) {
        self.swap_rules.insert((g, h), target);
    }

    /// Rule `gh -> c hg + extra`.
    pub fn add_commutation(&mut self, g: Gen, h: Gen, c: S, extra: NCElement<S>) {
        let mut t = NCElement::term(vec![h, g], c);
        t = &t + &extra;
        self.add_swap(g, h, t);
    }

    /// Lists rules or ideal generators that are not weight-homogeneous.
    pub fn check_invariants(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for ((g, h), t) in &self.swap_rules {
            let w = g.weight() + h.weight();
            if t.components().keys().any(|x| *x != w) {
                bad.push(format!("swap rule {g}{h} is not weight-preserving"));
            }
        }
        for (g, t) in &self.letter_rules {
            if t.components().keys().any(|x| *x != g.weight()) {
                bad.push(format!("letter rule {g} is not weight-preserving"));
            }
        }
        for r in &self.ideal_generators {
            if !r.is_homogeneous() {
                bad.push(format!("ideal generator {r} is not homogeneous"));
            }
        }
        bad
    }

    /// The element `gh - target` for each swap rule.
    /// Sum of letter degrees.
    pub fn word_degree(&self, w: &[Gen]) -> usize {
        w.iter().map(self.letter_degree).sum()
    }

    /// Largest word degree among the terms of `x`.
    pub fn max_degree(&self, x: &NCElement<S>) -> usize {
        x.terms().map(|(w, _)| self.word_degree(w)).max().unwrap_or(0)
    }

    pub fn swap_differences(&self) -> Vec<NCElement<S>> {
        let mut v: Vec<_> = self
            .swap_rules
            .iter()
            .map(|((g, h), t)| &NCElement::word(&[*g, *h]) - t)
            .collect();
        v.sort();
        v
    }
}

/// Rewrites to normal form, memoizing per word.
pub struct Reducer<'a, S> {
    rules: &'a RelationSet<S>,
    cache: HashMap<Word, NCElement<S>>,
    steps: usize,
}

impl<'a, S: Coeff> Reducer<'a, S> {
    pub fn new(rules: &'a RelationSet<S>) -> Self {
        Reducer { rules, cache: HashMap::new(), steps: 0 }
    }

    pub fn rules(&self) -> &RelationSet<S> {
        self.rules
    }

    /// First rewritable position: `(position, width, target)`.
    fn redex(&self, w: &[Gen]) -> Result<Option<(usize, usize, NCElement<S>)>, AlgebraError> {
        for (p, g) in w.iter().enumerate() {
            if let Some(t) = self.rules.letter_rules.get(g) {
                return Ok(Some((p, 1, t.clone())));
            }
        }
        for p in 0..w.len().saturating_sub(1) {
            if let Some(t) = self.rules.swap_rules.get(&(w[p], w[p + 1])) {
                return Ok(Some((p, 2, t.clone())));
            }
        }
        let ord = self.rules.order;
        for p in 0..w.len().saturating_sub(1) {
            if ord(&w[p]) > ord(&w[p + 1]) {
                return Err(AlgebraError::IncompleteRules {
                    rules: self.rules.name.clone(),
                    pair: format!("{}{}", w[p], w[p + 1]),
                });
            }
        }
        Ok(None)
    }

    pub fn reduce_word(&mut self, w: &[Gen]) -> Result<NCElement<S>, AlgebraError> {
        if let Some(x) = self.cache.get(w) {
            return Ok(x.clone());
        }
        let out = match self.redex(w)? {
            None => NCElement::word(w),
            Some((p, width, target)) => {
                self.steps += 1;
                if self.steps > self.rules.step_cap {
                    return Err(AlgebraError::StepCapExceeded(self.rules.step_cap));
                }
                let mut acc = NCElement::zero();
                for (t, c) in target.terms() {
                    let mut nw = w[..p].to_vec();
                    nw.extend_from_slice(t);
                    nw.extend_from_slice(&w[p + width..]);
                    let r = self.reduce_word(&nw)?;
                    acc.add_scaled(&r, c);
                }
                acc
            }
        };
        self.cache.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn reduce(&mut self, x: &NCElement<S>) -> Result<NCElement<S>, AlgebraError> {
        let mut acc = NCElement::zero();
        for (w, c) in x.terms() {
            let r = self.reduce_word(w)?;
            acc.add_scaled(&r, c);
        }
        Ok(acc)
    }

    pub fn reduce_tensor(&mut self, t: &TensorElement<S>) -> Result<TensorElement<S>, AlgebraError> {
        let mut cache: HashMap<Word, NCElement<S>> = HashMap::new();
        let mut nf = |w: &Word, me: &mut Self| -> Result<NCElement<S>, AlgebraError> {
            if let Some(x) = cache.get(w) {
                return Ok(x.clone());
            }
            let r = me.reduce_word(w)?;
            cache.insert(w.clone(), r.clone());
            Ok(r)
        };
        let mut out = TensorElement::zero(t.cap());
        for (k, c) in t.terms() {
            let l = nf(&k.left, self)?;
            let r = nf(&k.right, self)?;
            for (wl, cl) in l.terms() {
                for (wr, cr) in r.terms() {
                    out.add_term(wl.clone(), wr.clone(), k.z, c.clone() * cl.clone() * cr.clone());
                }
            }
        }
        Ok(out)
    }
}

/// Normal form of `x` under the swap and letter rules.
pub fn reduce_pbw<S: Coeff>(x: &NCElement<S>, rules: &RelationSet<S>) -> Result<NCElement<S>, AlgebraError> {
    Reducer::new(rules).reduce(x)
}

/// Canonical representatives modulo the full two-sided ideal of a [`RelationSet`].
///
/// After rewriting, the ideal generators are spread over the connected part of
/// the word space reachable from the input: every word is split as
/// `u * m * v` with `m` a word of some generator `r`, and `reduce(u r v)` joins
/// the span. The remainder modulo an echelon basis of that span, with words
/// compared in their natural order, is the normal form. Words of degree above
/// the bound (see [`RelationSet::letter_degree`]) are never generated.
pub struct Normalizer<'a, S> {
    reducer: Reducer<'a, S>,
    bound: usize,
    by_word: HashMap<Word, Vec<usize>>,
    lengths: BTreeSet<usize>,
    word_cache: HashMap<Word, NCElement<S>>,
}

impl<'a, S: Coeff> Normalizer<'a, S> {
    pub fn new(rules: &'a RelationSet<S>, bound: usize) -> Self {
        let mut by_word: HashMap<Word, Vec<usize>> = HashMap::new();
        let mut lengths = BTreeSet::new();
        for (i, r) in rules.ideal_generators.iter().enumerate() {
            for (w, _) in r.terms() {
                by_word.entry(w.clone()).or_default().push(i);
                lengths.insert(w.len());
            }
        }
        Normalizer { reducer: Reducer::new(rules), bound, by_word, lengths, word_cache: HashMap::new() }
    }

    pub fn reduce(&mut self, x: &NCElement<S>) -> Result<NCElement<S>, AlgebraError> {
        self.reducer.reduce(x)
    }

    pub fn normal_form(&mut self, x: &NCElement<S>) -> Result<NCElement<S>, AlgebraError> {
        let mut acc = NCElement::zero();
        for (w, c) in x.terms() {
            let r = self.normal_form_word(w)?;
            acc.add_scaled(&r, c);
        }
        Ok(acc)
    }

    pub fn is_zero(&mut self, x: &NCElement<S>) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(x)?.is_zero())
    }

    fn normal_form_word(&mut self, w: &[Gen]) -> Result<NCElement<S>, AlgebraError> {
        if let Some(x) = self.word_cache.get(w) {
            return Ok(x.clone());
        }
        let y = self.reducer.reduce_word(w)?;
        let out = self.remainder(&y)?;
        self.word_cache.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// Remainder of an already-rewritten element modulo the ideal closure.
    pub fn remainder(&mut self, y: &NCElement<S>) -> Result<NCElement<S>, AlgebraError> {
        if y.is_zero() {
            return Ok(y.clone());
        }
        let rules = self.reducer.rules;
        let longest = rules.max_degree(y);
        if longest > self.bound {
            return Err(AlgebraError::DegreeBoundTooSmall { bound: self.bound, found: longest });
        }
        let mut seen: BTreeSet<Word> = y.terms().map(|(w, _)| w.clone()).collect();
        let mut queue: Vec<Word> = seen.iter().cloned().collect();
        let mut done: HashSet<(Word, usize, Word)> = HashSet::new();
        let mut gens: Vec<NCElement<S>> = Vec::new();
        while let Some(w) = queue.pop() {
            for &len in &self.lengths {
                if len > w.len() {
                    break;
                }
                for p in 0..=w.len() - len {
                    let Some(ids) = self.by_word.get(&w[p..p + len]) else { continue };
                    for &id in ids {
                        let r = &rules.ideal_generators[id];
                        let outer = rules.word_degree(&w[..p]) + rules.word_degree(&w[p + len..]);
                        if rules.max_degree(r) + outer > self.bound {
                            continue;
                        }
                        let key = (w[..p].to_vec(), id, w[p + len..].to_vec());
                        if !done.insert(key.clone()) {
                            continue;
                        }
                        let u = NCElement::word(&key.0);
                        let v = NCElement::word(&key.2);
                        let g = self.reducer.reduce(&(&(&u * r) * &v))?;
                        if g.is_zero() || rules.max_degree(&g) > self.bound {
                            continue;
                        }
                        for (gw, _) in g.terms() {
                            if seen.insert(gw.clone()) {
                                queue.push(gw.clone());
                            }
                        }
                        gens.push(g);
                    }
                }
            }
        }
        if gens.is_empty() {
            return Ok(y.clone());
        }
        let index: BTreeMap<Word, usize> = seen.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        let words: Vec<&Word> = index.keys().collect();
        let to_vec = |x: &NCElement<S>| -> SparseVec<S> {
            x.terms().map(|(w, c)| (index[w], c.clone())).collect()
        };
        let mut ech = Echelon::new();
        for g in &gens {
            ech.insert(to_vec(g));
        }
        let rem = ech.reduce(to_vec(y));
        Ok(NCElement::from_terms(rem.into_iter().map(|(i, c)| (words[i].clone(), c))))
    }

    /// Applies the normal form to both tensor factors.
    pub fn normal_form_tensor(&mut self, t: &TensorElement<S>) -> Result<TensorElement<S>, AlgebraError> {
        // Plain rewriting first; the closure is only explored for what survives it.
        let t = self.reducer.reduce_tensor(t)?;
        if t.is_zero() {
            return Ok(t);
        }
        // Left factors first, collected, then right factors.
        let mut left_done = TensorElement::zero(t.cap());
        for (k, c) in t.terms() {
            let l = self.normal_form_word(&k.left)?;
            for (wl, cl) in l.terms() {
                left_done.add_term(wl.clone(), k.right.clone(), k.z, c.clone() * cl.clone());
            }
        }
        let mut out = TensorElement::zero(t.cap());
        for (k, c) in left_done.terms() {
            let r = self.normal_form_word(&k.right)?;
            for (wr, cr) in r.terms() {
                out.add_term(k.left.clone(), wr.clone(), k.z, c.clone() * cr.clone());
            }
        }
        Ok(out)
    }
}

/// Normal form of `x` modulo the ideal of `rules`, exploring words of length at
/// most `degree_bound`.
pub fn normal_form<S: Coeff>(
    x: &NCElement<S>,
    rules: &RelationSet<S>,
    degree_bound: usize,
) -> Result<NCElement<S>, AlgebraError> {
    Normalizer::new(rules, degree_bound).normal_form(x)
}

/// Whether `x` lies in the two-sided ideal of `rules`, certified within words
/// of length at most `degree_bound`.
pub fn ideal_member<S: Coeff>(
    x: &NCElement<S>,
    rules: &RelationSet<S>,
    degree_bound: usize,
) -> Result<bool, AlgebraError> {
    let longest = rules.max_degree(x);
    if longest > degree_bound {
        return Err(AlgebraError::DegreeBoundTooSmall { bound: degree_bound, found: longest });
    }
    let mut nz = Normalizer::new(rules, degree_bound);
    let y = nz.reduce(x)?;
    Ok(nz.remainder(&y)?.is_zero())
}
