use std::collections::BTreeMap;

use super::rules::{elem, sl_extended_rules, x_plus, x_plus0, xi};
use crate::ncalg::{AlgebraError, Cap, ExpFlavor, Gen, NCElement, Reducer, TensorElement, Weight};
use crate::report::{tensor_residual, Check, Report};
use crate::scalars::{rat_int, Rational};
use crate::{YElement, YTensor};

/// Truncated Theta series of a node: components `(-beta, beta)` with
/// `h(beta) <= height`.
#[derive(Clone, Debug)]
pub struct ThetaSeries {
    pub node: usize,
    pub height: i32,
    pub body: YTensor,
}

impl ThetaSeries {
    /// The component whose right factor has weight `beta`.
    pub fn component(&self, beta: Weight) -> YTensor {
        self.body.right_weight_component(beta)
    }

    /// All components keyed by right weight.
    pub fn components(&self) -> BTreeMap<Weight, YTensor> {
        let mut out: BTreeMap<Weight, YTensor> = BTreeMap::new();
        for ((_, wr, _), t) in self.body.components() {
            let e = out.entry(wr).or_insert_with(|| TensorElement::zero(self.body.cap()));
            *e = &*e + &t;
        }
        out
    }

    /// `Omega_{i,beta} = Theta_{i,beta} (-z)^{-beta_i}`.
    pub fn omega_component(&self, beta: Weight) -> YTensor {
        let bi = beta.0[self.node];
        let sign = if bi % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        self.component(beta).shift_z(-bi).scale(&sign)
    }

    pub fn is_z_independent(&self) -> bool {
        self.body.terms().all(|(k, _)| k.z == 0)
    }
}

fn pure(a: &YElement, b: &YElement, cap: Cap) -> YTensor {
    TensorElement::pure(a, b, 0, cap)
}

/// `y = sum_{j <= i < k} E_{kj} (x) E_{jk}`.
pub fn theta_exponent(n: usize, i: usize, cap: Cap) -> YTensor {
    let mut y = TensorElement::zero(cap);
    for j in 1..=i {
        for k in i + 1..=n + 1 {
            y = &y + &pure(&elem(k, j), &elem(j, k), cap);
        }
    }
    y
}

/// `exp(y)` truncated at right height `h`, in PBW normal form.
pub fn theta_closed_form(n: usize, i: usize, h: i32) -> ThetaSeries {
    assert!((1..=n).contains(&i), "node out of range");
    let cap = Cap::Height(h);
    let y = theta_exponent(n, i, cap);
    let e = y
        .exponential(ExpFlavor::Classical, h.max(0) as u32, false)
        .expect("exponent has positive height");
    let rules = sl_extended_rules(n, i);
    let body = Reducer::new(&rules).reduce_tensor(&e).expect("sl rules are complete");
    ThetaSeries { node: i, height: h, body }
}

/// `[x^+_{i,0} (x) 1, y]` as displayed, with the diagonal pair combined into
/// `xi_{i,0} (x) E_{i,i+1}`:
/// `sum_{j<i} E_{ij} (x) E_{j,i+1} - sum_{k>=i+2} E_{k,i+1} (x) E_{ik} + xi_{i,0} (x) E_{i,i+1}`.
pub fn intertwining_source(n: usize, i: usize, cap: Cap) -> YTensor {
    let mut r = pure(&xi(i, 0), &x_plus0(i), cap);
    for j in 1..i {
        r = &r + &pure(&elem(i, j), &elem(j, i + 1), cap);
    }
    for k in i + 2..=n + 1 {
        r = &r - &pure(&elem(k, i + 1), &elem(i, k), cap);
    }
    r
}

/// `sum_{j <= i < k} E_{kj} (x) E_{j,i+1} E_{ik}`.
pub fn quadratic_correction(n: usize, i: usize, cap: Cap) -> YTensor {
    let mut r = TensorElement::zero(cap);
    for j in 1..=i {
        for k in i + 1..=n + 1 {
            r = &r + &pure(&elem(k, j), &(&elem(j, i + 1) * &elem(i, k)), cap);
        }
    }
    r
}

/// The J-generator image `phi(J(x^+_{i,0}))`, with the diagonal blocks
/// `j = i`, `k = i+1` combined into `-1/4 {x^+_{i,0}, xi_{i,0}}`.
pub fn j_to_current(i: usize, n: usize) -> YElement {
    assert!((1..=n).contains(&i));
    let anti = |a: &YElement, b: &YElement| &(a * b) + &(b * a);
    let quarter = crate::scalars::rat(1, 4);
    let mut q = NCElement::zero();
    for k in i + 2..=n + 1 {
        q = &q + &anti(&elem(i, k), &elem(k, i + 1));
    }
    for j in 1..i {
        q = &q - &anti(&elem(j, i + 1), &elem(i, j));
    }
    q = &q - &anti(&x_plus0(i), &xi(i, 0));
    &x_plus(i, 1) + &q.scale(&quarter)
}

fn one() -> YElement {
    NCElement::one()
}

fn reduce_t(r: &mut Reducer<'_, Rational>, t: &YTensor) -> Result<YTensor, AlgebraError> {
    r.reduce_tensor(t)
}

/// Checks the four commutator relations for `exp(y)` and the bracket
/// computations behind them, up to right height `h`.
pub fn verify_lemma_commutators(n: usize, i: usize, h: i32) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("yangian-lemma").param("n", n).param("node", i).param("height", h);
    let rules = sl_extended_rules(n, i);
    let mut red = Reducer::new(&rules);
    let cap = Cap::Height(h);
    let theta = theta_closed_form(n, i, h).body;
    let x = pure(&x_plus0(i), &one(), cap);
    let x_right = pure(&one(), &x_plus0(i), cap);
    let x1 = pure(&one(), &x_plus(i, 1), cap);

    let r1 = reduce_t(&mut red, &TensorElement::commutator(&x_right, &theta))?;
    rep.push(tensor_residual("[1 (x) x+_{i,0}, exp y] = 0", &r1));

    let source = intertwining_source(n, i, cap);
    let quad = quadratic_correction(n, i, cap);
    let lhs = TensorElement::commutator(&x, &theta);
    let rhs = &theta * &(&source - &quad);
    rep.push(tensor_residual("[x+_{i,0} (x) 1, exp y]", &reduce_t(&mut red, &(&lhs - &rhs))?));

    // Third relation: an axiom of the rule set. Check weights and the
    // J-presentation consistency [phi(J(x+_{i,0})), E_jk] = 0.
    let j_img = j_to_current(i, n);
    let mut bad_weight = 0;
    let mut j_residual = NCElement::zero();
    for j in 1..=i {
        for k in i + 1..=n + 1 {
            let lhs_w = Gen::XPlus(i as u8, 1).weight() + Gen::Elem(j as u8, k as u8).weight();
            let rhs_w = (&elem(i, k) * &elem(j, i + 1)).weight();
            if rhs_w != Some(lhs_w) {
                bad_weight += 1;
            }
            let c = NCElement::commutator(&j_img, &elem(j, k));
            j_residual = &j_residual + &red.reduce(&c)?;
        }
    }
    rep.push(Check::from_residual(
        "[x+_{i,1}, E_jk] = E_ik E_{j,i+1}: weights agree",
        bad_weight,
        format!("{} pairs checked", i * (n + 1 - i)),
    ));
    rep.push(crate::report::element_residual("[phi(J(x+_{i,0})), E_jk] = 0", &j_residual));

    let r4 = &TensorElement::commutator(&x1, &theta) - &(&theta * &quad);
    rep.push(tensor_residual("[1 (x) x+_{i,1}, exp y]", &reduce_t(&mut red, &r4)?));

    // Bracket nesting: [x,y], [[x,y],y], ad^3 = 0, [1 (x) x+_{i,1}, y], its square.
    let uncapped = Cap::None;
    let y0 = theta_exponent(n, i, uncapped);
    let x0 = pure(&x_plus0(i), &one(), uncapped);
    let xy = reduce_t(&mut red, &TensorElement::commutator(&x0, &y0))?;
    let src0 = reduce_t(&mut red, &intertwining_source(n, i, uncapped))?;
    rep.push(tensor_residual("[x,y] = source", &(&xy - &src0)));
    let xyy = reduce_t(&mut red, &TensorElement::commutator(&xy, &y0))?;
    let quad0 = reduce_t(&mut red, &quadratic_correction(n, i, uncapped))?;
    rep.push(tensor_residual("[[x,y],y] = -2 sum E_kj (x) E_{j,i+1}E_ik", &(&xyy + &quad0.scale(&rat_int(2)))));
    let xyyy = reduce_t(&mut red, &TensorElement::commutator(&xyy, &y0))?;
    rep.push(tensor_residual("ad_{-y}^3 (x+_{i,0} (x) 1) = 0", &xyyy));
    let x10 = pure(&one(), &x_plus(i, 1), uncapped);
    let x1y = reduce_t(&mut red, &TensorElement::commutator(&x10, &y0))?;
    rep.push(tensor_residual("[1 (x) x+_{i,1}, y] = sum E_kj (x) E_ik E_{j,i+1}", &(&x1y - &quad0)));
    let x1yy = reduce_t(&mut red, &TensorElement::commutator(&x1y, &y0))?;
    rep.push(tensor_residual("[[1 (x) x+_{i,1}, y], y] = 0", &x1yy));

    // The exponent terms commute pairwise.
    let mut comm = TensorElement::zero(uncapped);
    let terms: Vec<YTensor> = (1..=i)
        .flat_map(|j| (i + 1..=n + 1).map(move |k| (j, k)))
        .map(|(j, k)| pure(&elem(k, j), &elem(j, k), uncapped))
        .collect();
    for a in &terms {
        for b in &terms {
            comm = &comm + &reduce_t(&mut red, &TensorElement::commutator(a, b))?;
        }
    }
    rep.push(tensor_residual("exponent terms commute", &comm));
    Ok(rep)
}

/// Residuals of the intertwining system for `theta`, one entry per equation
/// index `j`.
pub fn intertwining_residuals(n: usize, theta: &ThetaSeries) -> Result<Vec<(usize, YTensor)>, AlgebraError> {
    let i = theta.node;
    let rules = sl_extended_rules(n, i);
    let mut red = Reducer::new(&rules);
    let cap = theta.body.cap();
    let th = &theta.body;
    let mut out = Vec::new();
    for j in 1..=n {
        let mut op = &pure(&x_plus0(j), &one(), cap) + &pure(&one(), &x_plus0(j), cap);
        let mut rhs = TensorElement::zero(cap);
        if j == i {
            op = &pure(&x_plus0(i), &one(), cap) + &pure(&one(), &x_plus(i, 1), cap);
            op = &op - &TensorElement::pure(&one(), &x_plus0(i), 1, cap);
            rhs = th * &intertwining_source(n, i, cap);
        }
        let res = &TensorElement::commutator(&op, th) - &rhs;
        out.push((j, red.reduce_tensor(&res)?));
    }
    Ok(out)
}

/// Substitutes the closed form into the `n` intertwining equations.
pub fn verify_intertwining(n: usize, i: usize, h: i32) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("yangian-intertwining").param("n", n).param("node", i).param("height", h);
    let theta = theta_closed_form(n, i, h);
    for (j, r) in intertwining_residuals(n, &theta)? {
        let name = if j == i {
            format!("equation j={j}: [x+_{{i,0}}(x)1 + 1(x)x+_{{i,1}} - z(1(x)x+_{{i,0}}), Theta] = Theta*source")
        } else {
            format!("equation j={j}: [x+_{{j,0}}(x)1 + 1(x)x+_{{j,0}}, Theta] = 0")
        };
        rep.push(tensor_residual(name, &r));
    }
    Ok(rep)
}
