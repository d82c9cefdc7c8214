use std::collections::{BTreeMap, BTreeSet};

use super::rules::{elem, sl_extended_rules, sl_order, x_plus, x_plus0};
use super::theta::{intertwining_source, ThetaSeries};
use crate::linalg::{solve_unique, SparseVec};
use crate::ncalg::{word_weight, AlgebraError, Cap, Gen, NCElement, Reducer, TensorElement, Weight, Word};
use crate::scalars::Rational;
use crate::{YElement, YTensor};

/// Positive roots `alpha_j + ... + alpha_{k-1}` as `(j, k)`.
fn positive_roots(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n + 1 {
            v.push((j, k));
        }
    }
    v
}

fn root_weight(j: usize, k: usize) -> Weight {
    Gen::Elem(j as u8, k as u8).weight()
}

/// PBW monomials in the raising (`lowering = false`) or lowering elementary
/// matrices whose weight is `+beta` or `-beta` respectively.
pub fn pbw_monomials(n: usize, beta: Weight, lowering: bool) -> Vec<Word> {
    fn go(roots: &[(usize, usize)], start: usize, rest: Weight, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_zero() {
            out.push(acc.clone());
            return;
        }
        for (idx, &(j, k)) in roots.iter().enumerate().skip(start) {
            let r = rest - root_weight(j, k);
            if r.is_nonnegative() {
                acc.push((j, k));
                go(roots, idx, r, acc, out);
                acc.pop();
            }
        }
    }
    if !beta.is_nonnegative() {
        return Vec::new();
    }
    let roots = positive_roots(n);
    let mut combos = Vec::new();
    go(&roots, 0, beta, &mut Vec::new(), &mut combos);
    let mut words: Vec<Word> = combos
        .into_iter()
        .map(|c| {
            let mut w: Word = c
                .into_iter()
                .map(|(j, k)| if lowering { Gen::Elem(k as u8, j as u8) } else { Gen::Elem(j as u8, k as u8) })
                .collect();
            w.sort_by_key(sl_order);
            w
        })
        .collect();
    words.sort();
    words
}

/// Nonzero weights in `Q_+` of the given height supported on nodes `1..=n`.
pub fn weights_of_height(n: usize, h: i32) -> Vec<Weight> {
    fn go(n: usize, node: usize, rest: i32, cur: &mut Weight, out: &mut Vec<Weight>) {
        if node > n {
            if rest == 0 {
                out.push(*cur);
            }
            return;
        }
        for c in 0..=rest {
            cur.0[node] = c;
            go(n, node + 1, rest - c, cur, out);
        }
        cur.0[node] = 0;
    }
    let mut out = Vec::new();
    go(n, 1, h, &mut Weight::zero(), &mut out);
    out
}

fn escape(e: AlgebraError) -> AlgebraError {
    match e {
        AlgebraError::IncompleteRules { pair, .. } => {
            AlgebraError::AnsatzEscape(format!("right-hand side needs the uncovered commutator {pair}"))
        }
        other => other,
    }
}

/// Solves the projected intertwining equations height by height, starting
/// from `Theta_{i,0} = 1 (x) 1`.
///
/// For each `beta`, the unknown `Theta_{i,beta}` is a combination of
/// `u (x) v z^d` with `u` a lowering PBW monomial of weight `-beta`, `v` a
/// raising one of weight `beta` and `0 <= d <= h`. The equations
/// `[x^+_{j,0} (x) 1, Theta_beta] = known_j` decouple over `(v, d)`; each block
/// must have a unique solution.
pub fn solve_theta_recursive(n: usize, i: usize, h: i32) -> Result<ThetaSeries, AlgebraError> {
    assert!((1..=n).contains(&i), "node out of range");
    let rules = sl_extended_rules(n, i);
    let mut red = Reducer::new(&rules);
    let cap = Cap::Height(h);
    let one = NCElement::<Rational>::one();
    let pure = |a: &YElement, b: &YElement| TensorElement::pure(a, b, 0, cap);
    let mut solved: BTreeMap<Weight, YTensor> = BTreeMap::new();
    solved.insert(Weight::zero(), TensorElement::one(cap));
    let source = intertwining_source(n, i, cap);
    // Split the source into terms by right weight.
    let mut source_parts: BTreeMap<Weight, YTensor> = BTreeMap::new();
    for ((_, wr, _), t) in source.components() {
        let e = source_parts.entry(wr).or_insert_with(|| TensorElement::zero(cap));
        *e = &*e + &t;
    }
    let get = |m: &BTreeMap<Weight, YTensor>, w: Weight| -> Option<YTensor> {
        if w.is_nonnegative() {
            m.get(&w).cloned()
        } else {
            None
        }
    };

    for height in 1..=h {
        for beta in weights_of_height(n, height) {
            let lowering = pbw_monomials(n, beta, true);
            let raising = pbw_monomials(n, beta, false);
            let mut knowns: Vec<YTensor> = Vec::new();
            for j in 1..=n {
                let aj = Weight::simple(j);
                let mut known = TensorElement::zero(cap);
                if let Some(prev) = get(&solved, beta - aj) {
                    if j == i {
                        let x1 = pure(&one, &x_plus(i, 1));
                        let x0z = TensorElement::pure(&one, &x_plus0(i), 1, cap);
                        known = &known - &TensorElement::commutator(&x1, &prev);
                        known = &known + &TensorElement::commutator(&x0z, &prev);
                    } else {
                        let x0 = pure(&one, &x_plus0(j));
                        known = &known - &TensorElement::commutator(&x0, &prev);
                    }
                }
                if j == i {
                    for (wr, part) in &source_parts {
                        if let Some(prev) = get(&solved, beta - *wr) {
                            known = &known + &(&prev * part);
                        }
                    }
                }
                knowns.push(red.reduce_tensor(&known).map_err(escape)?);
            }
            let raising_set: BTreeSet<&Word> = raising.iter().collect();
            let mut blocks: BTreeSet<(Word, i32)> = BTreeSet::new();
            for known in &knowns {
                for (k, _) in known.terms() {
                    if !raising_set.contains(&k.right) || k.z < 0 || k.z > h {
                        return Err(AlgebraError::AnsatzEscape(format!(
                            "known term with right factor {} z^{} outside the ansatz at weight {beta}",
                            crate::ncalg::word_to_string(&k.right),
                            k.z
                        )));
                    }
                    blocks.insert((k.right.clone(), k.z));
                }
            }
            // Images [x+_{j,0}, u] of the left basis.
            let mut images: Vec<Vec<YElement>> = Vec::new();
            for j in 1..=n {
                let e = elem(j, j + 1);
                let mut row = Vec::new();
                for u in &lowering {
                    let uu = NCElement::word(u);
                    row.push(red.reduce(&NCElement::commutator(&e, &uu))?);
                }
                images.push(row);
            }
            let mut left_index: BTreeMap<(usize, Word), usize> = BTreeMap::new();
            for (j, row) in images.iter().enumerate() {
                for img in row {
                    for (w, _) in img.terms() {
                        let next = left_index.len();
                        left_index.entry((j, w.clone())).or_insert(next);
                    }
                }
            }
            let matrix_rows = |rhs: &BTreeMap<(usize, Word), Rational>| -> Vec<(SparseVec<Rational>, Rational)> {
                let mut rows: BTreeMap<(usize, Word), SparseVec<Rational>> = BTreeMap::new();
                for (j, row) in images.iter().enumerate() {
                    for (col, img) in row.iter().enumerate() {
                        for (w, c) in img.terms() {
                            rows.entry((j, w.clone())).or_default().insert(col, c.clone());
                        }
                    }
                }
                let mut keys: BTreeSet<(usize, Word)> = rows.keys().cloned().collect();
                keys.extend(rhs.keys().cloned());
                keys.into_iter()
                    .map(|k| {
                        let lhs = rows.get(&k).cloned().unwrap_or_default();
                        let b = rhs.get(&k).cloned().unwrap_or_else(|| Rational::from_integer(0.into()));
                        (lhs, b)
                    })
                    .collect()
            };
            // Uniqueness of the homogeneous system.
            solve_unique(matrix_rows(&BTreeMap::new()), lowering.len())?;
            let mut theta_beta = TensorElement::zero(cap);
            for (v, d) in &blocks {
                let mut rhs: BTreeMap<(usize, Word), Rational> = BTreeMap::new();
                for (j, known) in knowns.iter().enumerate() {
                    for (k, c) in known.terms() {
                        if &k.right == v && k.z == *d {
                            rhs.insert((j, k.left.clone()), c.clone());
                        }
                    }
                }
                let sol = solve_unique(matrix_rows(&rhs), lowering.len())?;
                for (u, c) in lowering.iter().zip(sol) {
                    theta_beta.add_term(u.clone(), v.clone(), *d, c);
                }
            }
            if !theta_beta.is_zero() {
                debug_assert!(theta_beta.terms().all(|(k, _)| word_weight(&k.right) == beta));
                solved.insert(beta, theta_beta);
            }
        }
    }
    let mut body = TensorElement::zero(cap);
    for t in solved.values() {
        body = &body + t;
    }
    Ok(ThetaSeries { node: i, height: h, body })
}
