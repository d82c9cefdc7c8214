//! Kernel invariants: scalar field laws, idempotent rewriting, additive
//! grading, local confluence of the rewriting systems and involutive
//! automorphisms.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::ncalg::{AlgebraError, Gen, NCElement, Reducer, RelationSet, Word};
use crate::qaffine::{dj_letters, dj_relations, drinfeld_relations, omega_map, phi_map, psi_map};
use crate::report::{Check, Report};
use crate::scalars::{q_bracket, q_minus_qinv, rat, Coeff, LaurentQ, RatFuncQ};
use crate::yangian::sl_commutator_rules;

/// Scalars exercised by the field-law checks.
pub fn sample_scalars() -> Vec<RatFuncQ> {
    vec![
        RatFuncQ::from_int(0),
        RatFuncQ::from_int(1),
        RatFuncQ::from_rational(rat(-3, 2)),
        RatFuncQ::q_pow(3),
        RatFuncQ::q_pow(-2),
        RatFuncQ::from(q_bracket(3)),
        RatFuncQ::from(q_minus_qinv()),
        RatFuncQ::from(q_bracket(2)) * RatFuncQ::from(q_minus_qinv()).inv().expect("nonzero"),
        RatFuncQ::from_laurent(LaurentQ::from_terms([(0, rat(1, 1)), (1, rat(1, 1))])).inv().expect("nonzero"),
    ]
}

/// Number of violated field laws over all pairs and triples of samples.
pub fn scalar_law_violations(xs: &[RatFuncQ]) -> usize {
    let mut bad = 0;
    for a in xs {
        bad += usize::from(a.normalize() != *a);
        bad += usize::from(a.bar().bar() != *a);
        if !a.is_zero() {
            bad += usize::from(a.clone() * a.inv().expect("nonzero") != RatFuncQ::from_int(1));
        }
        for b in xs {
            bad += usize::from(a.clone() * b.clone() != b.clone() * a.clone());
            bad += usize::from(a.clone() + b.clone() != b.clone() + a.clone());
            bad += usize::from((a.clone() * b.clone()).bar() != a.bar() * b.bar());
            for c in xs {
                bad += usize::from((a.clone() * b.clone()) * c.clone() != a.clone() * (b.clone() * c.clone()));
                bad += usize::from(a.clone() * (b.clone() + c.clone()) != a.clone() * b.clone() + a.clone() * c.clone());
            }
        }
    }
    bad
}

/// Letters occurring in the rules of `rs`.
pub fn rule_letters<S: Coeff>(rs: &RelationSet<S>) -> Vec<Gen> {
    let mut set = BTreeSet::new();
    for (g, h) in rs.swap_rules.keys() {
        set.insert(*g);
        set.insert(*h);
    }
    set.extend(rs.letter_rules.keys().copied());
    set.into_iter().collect()
}

/// All words of length `1..=len` over `letters`.
pub fn words_up_to(letters: &[Gen], len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |g| {
                let mut v = w.clone();
                v.push(*g);
                v
            }))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Words whose reduction is not a fixed point of the reducer.
pub fn idempotence_failures<S: Coeff>(rs: &RelationSet<S>, words: &[Word]) -> Result<usize, AlgebraError> {
    let mut red = Reducer::new(rs);
    let mut bad = 0;
    for w in words {
        let once = red.reduce_word(w)?;
        bad += usize::from(red.reduce(&once)? != once);
    }
    Ok(bad)
}

/// Words whose reduction leaves their weight component.
pub fn grading_failures<S: Coeff>(rs: &RelationSet<S>, words: &[Word]) -> Result<usize, AlgebraError> {
    let mut red = Reducer::new(rs);
    let mut bad = 0;
    for w in words {
        let x = NCElement::<S>::word(w);
        let total = w.iter().map(Gen::weight).fold(crate::ncalg::Weight::default(), |a, b| a + b);
        bad += usize::from(x.weight() != Some(total));
        let r = red.reduce_word(w)?;
        bad += usize::from(r.components().keys().any(|k| *k != total));
    }
    Ok(bad)
}

/// Unresolved overlaps `ghk` of two swap rules, and of a letter rule with a
/// swap rule; each entry is the overlap word and the difference of the two
/// rewrites after full reduction.
pub fn critical_pairs<S: Coeff>(rs: &RelationSet<S>) -> Result<Vec<(Word, NCElement<S>)>, AlgebraError> {
    let mut red = Reducer::new(rs);
    let mut bad = Vec::new();
    let mut keys: Vec<(Gen, Gen)> = rs.swap_rules.keys().copied().collect();
    keys.sort();
    for &(g, h) in &keys {
        for &(h2, k) in &keys {
            if h2 != h {
                continue;
            }
            let left = &rs.swap_rules[&(g, h)] * &NCElement::gen(k);
            let right = &NCElement::gen(g) * &rs.swap_rules[&(h, k)];
            let d = red.reduce(&(&left - &right))?;
            if !d.is_zero() {
                bad.push((vec![g, h, k], d));
            }
        }
        for (x, pos) in [(g, 0usize), (h, 1)] {
            if let Some(t) = rs.letter_rules.get(&x) {
                let other = NCElement::gen(if pos == 0 { h } else { g });
                let via_letter = if pos == 0 { t * &other } else { &other * t };
                let d = red.reduce(&(&via_letter - &rs.swap_rules[&(g, h)]))?;
                if !d.is_zero() {
                    bad.push((vec![g, h], d));
                }
            }
        }
    }
    Ok(bad)
}

/// Runs every kernel check for `sl_{n+1}`, `n <= n_max`, and the quantum
/// affine rewriting systems.
pub fn verify_kernel(n_max: usize) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("kernel").param("n_max", n_max);
    let xs = sample_scalars();
    rep.push(Check::from_residual("field laws, bar involution and canonical form on sample scalars", scalar_law_violations(&xs), format!("{} samples", xs.len())));
    let b = |n| RatFuncQ::from(q_bracket(n));
    let bad = (1..8).filter(|&n| b(2) * b(n) != b(n + 1) + b(n - 1) || b(n).bar() != b(n)).count();
    rep.push(Check::from_residual("[2][n] = [n+1] + [n-1] and bar[n] = [n], n < 8", bad, String::new()));

    for n in 1..=n_max {
        let sl = sl_commutator_rules(n);
        let words = words_up_to(&rule_letters(&sl), 3);
        rep.push(Check::from_residual(format!("sl_{}: rules are weight-homogeneous", n + 1), sl.check_invariants().len(), String::new()));
        rep.push(Check::from_residual(format!("sl_{}: reduction is idempotent on words of length <= 3", n + 1), idempotence_failures(&sl, &words)?, format!("{} words", words.len())));
        rep.push(Check::from_residual(format!("sl_{}: reduction preserves the grading", n + 1), grading_failures(&sl, &words)?, String::new()));
        let cp = critical_pairs(&sl)?;
        rep.push(Check::from_residual(format!("sl_{}: all critical pairs resolve", n + 1), cp.len(), cp.first().map(|(w, d)| format!("{} -> {d}", crate::ncalg::word_to_string(w))).unwrap_or_default()));
    }

    let dj = dj_relations();
    let dw = words_up_to(&dj_letters(), 2);
    rep.push(Check::from_residual("Drinfeld-Jimbo rules are weight-homogeneous", dj.check_invariants().len(), String::new()));
    rep.push(Check::from_residual("Drinfeld-Jimbo reduction is idempotent and graded on words of length <= 2", idempotence_failures(&dj, &dw)? + grading_failures(&dj, &dw)?, format!("{} words", dw.len())));
    let dr = drinfeld_relations(1);
    let letters = rule_letters(&dr);
    let rw = words_up_to(&letters, 2);
    rep.push(Check::from_residual("Drinfeld current rules are weight-homogeneous", dr.check_invariants().len(), String::new()));
    rep.push(Check::from_residual("Drinfeld current reduction is idempotent and graded on words of length <= 2", idempotence_failures(&dr, &rw)? + grading_failures(&dr, &rw)?, format!("{} words", rw.len())));
    let cp = critical_pairs(&dr)?;
    rep.push(Check::from_residual("Drinfeld current K-rules: all critical pairs resolve", cp.len(), String::new()));

    let mut red = Reducer::new(&dj);
    for (name, m) in [("Phi", phi_map()), ("Omega", omega_map()), ("psi", psi_map())] {
        let mut bad = 0;
        for g in dj_letters() {
            let x = NCElement::gen(g);
            let twice = m.apply(&m.apply(&x)?)?;
            bad += usize::from(!red.reduce(&(&twice - &x))?.is_zero());
        }
        rep.push(Check::from_residual(format!("{name} is an involution on the Drinfeld-Jimbo letters"), bad, String::new()));
    }
    Ok(rep)
}
