//! The positive prefundamental module `L_1` of the Borel subalgebra of
//! `U_q(sl_3^)`, truncated to the basis `v_{a,b}` with `a + b <= D`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::ncalg::{AlgebraError, Gen};
use crate::qaffine::cartan;
use crate::report::{Check, Report};
use crate::scalars::{inv_q_minus_qinv, q_bracket, q_round, RatFuncQ};
use crate::QElement;

/// Basis index `(a, b)` of `v_{a,b}`.
pub type Index = (u32, u32);

/// Sparse vector in `L_1`.
pub type Vector = BTreeMap<Index, RatFuncQ>;

/// Largest mode installed for the currents.
pub const MODE_WINDOW: i8 = 3;

/// An operator of the model: a Borel letter or the root vector `E_{alpha_1 + alpha_2}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum L1Op {
    Letter(Gen),
    EAlpha12,
}

impl fmt::Display for L1Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            L1Op::Letter(g) => write!(f, "{g}"),
            L1Op::EAlpha12 => write!(f, "E_{{a1+a2}}"),
        }
    }
}

/// Linear combination of operator words; words act right to left.
pub type OpExpr = Vec<(Vec<L1Op>, RatFuncQ)>;

fn qp(e: i64) -> RatFuncQ {
    RatFuncQ::q_pow(e)
}

fn round(m: u32) -> RatFuncQ {
    RatFuncQ::from(q_round(m as i64))
}

/// The displayed action of `op` on `v_{a,b}`, before truncation.
/// `Ok(None)` means the operator kills `v_{a,b}`.
pub fn formula(op: L1Op, (a, b): Index) -> Result<Option<(Index, RatFuncQ)>, AlgebraError> {
    let (ai, bi) = (a as i64, b as i64);
    let diag = |e: i64| Ok(Some(((a, b), qp(e))));
    let lower_a = |c: RatFuncQ, to: Index| Ok(if a == 0 { None } else { Some((to, c)) });
    match op {
        L1Op::EAlpha12 => Ok(Some(((a, b + 1), qp(ai)))),
        L1Op::Letter(g) => match g {
            Gen::E(1) | Gen::DPlus(1, 0) => Ok(Some(((a + 1, b), RatFuncQ::from_int(1)))),
            // q^{1-a}: the solution of lambda_a = q^-1 lambda_{a-1} - q^{a-1}, lambda_0 = 0,
            // which E2 E1 = q^-1 E1 E2 - E_{a1+a2} forces.
            Gen::E(2) | Gen::DPlus(2, 0) => {
                lower_a(-(qp(1 - ai) * round(a)), (a.wrapping_sub(1), b + 1))
            }
            Gen::E(0) => {
                if b == 0 {
                    Ok(None)
                } else {
                    let c = qp(-ai - 2 * (bi - 1)) * round(b) * inv_q_minus_qinv();
                    Ok(Some(((a, b - 1), -c)))
                }
            }
            Gen::DMinus(1, 1) => lower_a(qp(bi) * round(a) * inv_q_minus_qinv(), (a.wrapping_sub(1), b)),
            Gen::DPlus(1 | 2, m) if m > 0 => Ok(None),
            Gen::DMinus(1 | 2, r) if r >= 1 => Ok(None),
            Gen::K(i, inv) => {
                let e = match i {
                    1 => 2 * ai + bi,
                    2 => bi - ai,
                    _ => -2 * bi - ai,
                };
                diag(if inv { -e } else { e })
            }
            Gen::PhiPlus(i, 0) => formula(L1Op::Letter(Gen::K(i, false)), (a, b)),
            Gen::PhiPlus(1, 1) => Ok(formula(L1Op::Letter(Gen::K(1, false)), (a, b))?.map(|(t, c)| (t, -c))),
            Gen::PhiPlus(1 | 2, m) if m >= 1 => Ok(None),
            _ => Err(AlgebraError::MissingImage(g.to_string())),
        },
    }
}

/// Sparse matrix of one operator on the truncated basis.
#[derive(Clone, Debug, Default)]
pub struct OperatorAction {
    pub entries: BTreeMap<Index, Vec<(Index, RatFuncQ)>>,
}

/// `L_1` truncated at total degree `depth`.
#[derive(Clone, Debug)]
pub struct L1Model {
    pub depth: u32,
    pub actions: BTreeMap<L1Op, OperatorAction>,
}

/// Operators installed by [`build_l1`].
pub fn installed_ops() -> Vec<L1Op> {
    let mut gens = vec![Gen::E(0), Gen::E(1), Gen::E(2)];
    for i in 0..=2u8 {
        gens.extend([Gen::K(i, false), Gen::K(i, true)]);
    }
    for i in 1..=2u8 {
        for m in 0..=MODE_WINDOW {
            gens.extend([Gen::DPlus(i, m), Gen::PhiPlus(i, m)]);
            if m >= 1 {
                gens.push(Gen::DMinus(i, m));
            }
        }
    }
    let mut ops: Vec<L1Op> = gens.into_iter().map(L1Op::Letter).collect();
    ops.push(L1Op::EAlpha12);
    ops
}

pub fn basis(depth: u32) -> Vec<Index> {
    (0..=depth).flat_map(|s| (0..=s).map(move |b| (s - b, b))).collect()
}

/// Installs the displayed actions on `v_{a,b}`, `a + b <= depth`.
pub fn build_l1(depth: u32) -> L1Model {
    assert!(depth >= 3, "depth must be at least 3");
    let mut actions = BTreeMap::new();
    for op in installed_ops() {
        let mut act = OperatorAction::default();
        for idx in basis(depth) {
            let mut col = Vec::new();
            if let Some((t, c)) = formula(op, idx).expect("installed operators have formulas") {
                if t.0 + t.1 <= depth && !c.is_zero() {
                    col.push((t, c));
                }
            }
            act.entries.insert(idx, col);
        }
        actions.insert(op, act);
    }
    L1Model { depth, actions }
}

pub fn basis_vector(idx: Index) -> Vector {
    BTreeMap::from([(idx, RatFuncQ::from_int(1))])
}

fn add_to(v: &mut Vector, idx: Index, c: RatFuncQ) {
    let e = v.entry(idx).or_insert_with(|| RatFuncQ::from_int(0));
    *e = e.clone() + c;
    if e.is_zero() {
        v.remove(&idx);
    }
}

impl L1Model {
    pub fn act(&self, op: L1Op, v: &Vector) -> Result<Vector, AlgebraError> {
        let act = self.actions.get(&op).ok_or_else(|| AlgebraError::MissingImage(op.to_string()))?;
        let mut out = Vector::new();
        for (idx, c) in v {
            for (t, x) in act.entries.get(idx).into_iter().flatten() {
                add_to(&mut out, *t, c.clone() * x.clone());
            }
        }
        Ok(out)
    }

    /// Applies a word, rightmost letter first.
    pub fn act_word(&self, w: &[L1Op], v: &Vector) -> Result<Vector, AlgebraError> {
        let mut cur = v.clone();
        for op in w.iter().rev() {
            if cur.is_empty() {
                break;
            }
            cur = self.act(*op, &cur)?;
        }
        Ok(cur)
    }

    pub fn apply(&self, x: &OpExpr, v: &Vector) -> Result<Vector, AlgebraError> {
        let mut out = Vector::new();
        for (w, c) in x {
            for (idx, y) in self.act_word(w, v)? {
                add_to(&mut out, idx, c.clone() * y);
            }
        }
        Ok(out)
    }

    /// Applies an algebra element written in Borel letters.
    pub fn apply_element(&self, x: &QElement, v: &Vector) -> Result<Vector, AlgebraError> {
        self.apply(&from_element(x), v)
    }

    /// Basis indices on which identities of word length `margin` are exact.
    pub fn interior(&self, margin: u32) -> Vec<Index> {
        basis(self.depth.saturating_sub(margin))
    }
}

pub fn from_element(x: &QElement) -> OpExpr {
    x.terms().map(|(w, c)| (w.iter().map(|g| L1Op::Letter(*g)).collect(), c.clone())).collect()
}

fn word(ops: &[L1Op]) -> OpExpr {
    vec![(ops.to_vec(), RatFuncQ::from_int(1))]
}

fn lin(parts: &[(&OpExpr, RatFuncQ)]) -> OpExpr {
    let mut out = Vec::new();
    for (x, c) in parts {
        for (w, y) in x.iter() {
            out.push((w.clone(), y.clone() * c.clone()));
        }
    }
    out
}

fn l(g: Gen) -> L1Op {
    L1Op::Letter(g)
}

/// Checks `lhs = rhs` on every interior basis vector.
fn operator_check(model: &L1Model, name: &str, lhs: &OpExpr, rhs: &OpExpr, margin: u32) -> Result<Check, AlgebraError> {
    let diff = lin(&[(lhs, RatFuncQ::from_int(1)), (rhs, RatFuncQ::from_int(-1))]);
    let mut bad = 0;
    let mut witness = String::new();
    let interior = model.interior(margin);
    for idx in &interior {
        let r = model.apply(&diff, &basis_vector(*idx))?;
        if !r.is_empty() {
            if bad == 0 {
                witness = format!("fails on v_{{{},{}}}", idx.0, idx.1);
            }
            bad += 1;
        }
    }
    let detail = if bad == 0 { format!("{} basis vectors", interior.len()) } else { witness };
    Ok(Check::from_residual(name, bad, detail))
}

/// The displayed relations of `U_q(b)` as operator identities on `a + b <= D - margin`.
pub fn verify_l1_relations(model: &L1Model, margin: u32) -> Result<Report, AlgebraError> {
    assert!(margin >= 3, "margin must cover the Serre relations");
    let mut rep = Report::new("prefund-relations").param("depth", model.depth).param("margin", margin);
    let one = RatFuncQ::from_int(1);
    let inv = inv_q_minus_qinv();
    let e = |i: u8| l(Gen::E(i));
    let k = |i: u8, inv: bool| l(Gen::K(i, inv));
    let ch = |rep: &mut Report, name: &str, a: OpExpr, b: OpExpr| -> Result<(), AlgebraError> {
        rep.push(operator_check(model, name, &a, &b, margin)?);
        Ok(())
    };

    for i in 0..=2u8 {
        ch(&mut rep, &format!("K{i} K{i}^-1 = 1"), word(&[k(i, false), k(i, true)]), word(&[]))?;
        for j in 0..=2u8 {
            let c = cartan(i, j);
            ch(
                &mut rep,
                &format!("K{i} E{j} K{i}^-1 = q^{c} E{j}"),
                word(&[k(i, false), e(j), k(i, true)]),
                lin(&[(&word(&[e(j)]), qp(c))]),
            )?;
        }
    }
    ch(&mut rep, "K0 K1 K2 = 1", word(&[k(0, false), k(1, false), k(2, false)]), word(&[]))?;

    let xm11 = l(Gen::DMinus(1, 1));
    let xm21 = l(Gen::DMinus(2, 1));
    let phi11 = l(Gen::PhiPlus(1, 1));
    let comm = lin(&[(&word(&[e(1), xm11]), one.clone()), (&word(&[xm11, e(1)]), -one.clone())]);
    ch(&mut rep, "[x+_{1,0}, x-_{1,1}] = phi+_{1,1}/(q-q^-1)", comm, lin(&[(&word(&[phi11]), inv.clone())]))?;
    ch(
        &mut rep,
        "x-_{1,1} E1 = E1 x-_{1,1} - phi+_{1,1}/(q-q^-1)",
        word(&[xm11, e(1)]),
        lin(&[(&word(&[e(1), xm11]), one.clone()), (&word(&[phi11]), -inv.clone())]),
    )?;

    let e12 = L1Op::EAlpha12;
    ch(
        &mut rep,
        "E_{a1+a2} = q^-1 E1E2 - E2E1 on L_1",
        word(&[e12]),
        lin(&[(&word(&[e(1), e(2)]), qp(-1)), (&word(&[e(2), e(1)]), -one.clone())]),
    )?;
    ch(&mut rep, "E_{a1+a2} E1 = q E1 E_{a1+a2}", word(&[e12, e(1)]), lin(&[(&word(&[e(1), e12]), qp(1))]))?;
    ch(&mut rep, "E2 E_{a1+a2} = q E_{a1+a2} E2", word(&[e(2), e12]), lin(&[(&word(&[e12, e(2)]), qp(1))]))?;
    ch(
        &mut rep,
        "E0 E1 = q^-1 E1 E0 - K2^-1 x-_{2,1}",
        word(&[e(0), e(1)]),
        lin(&[(&word(&[e(1), e(0)]), qp(-1)), (&word(&[k(2, true), xm21]), -one.clone())]),
    )?;
    ch(
        &mut rep,
        "E0 E2 = q^-1 E2 E0 + K1^-1 x-_{1,1}",
        word(&[e(0), e(2)]),
        lin(&[(&word(&[e(2), e(0)]), qp(-1)), (&word(&[k(1, true), xm11]), one.clone())]),
    )?;
    // The currents agree with their Drinfeld-Jimbo expressions.
    ch(
        &mut rep,
        "x-_{1,1} = K1 [E0, E2]_{q^-1} on L_1",
        word(&[xm11]),
        lin(&[(&word(&[k(1, false), e(0), e(2)]), one.clone()), (&word(&[k(1, false), e(2), e(0)]), -qp(-1))]),
    )?;
    ch(
        &mut rep,
        "x-_{2,1} = -K2 [E0, E1]_{q^-1} on L_1",
        word(&[xm21]),
        lin(&[(&word(&[k(2, false), e(0), e(1)]), -one.clone()), (&word(&[k(2, false), e(1), e(0)]), qp(-1))]),
    )?;
    ch(&mut rep, "x+_{2,0} = E2", word(&[l(Gen::DPlus(2, 0))]), word(&[e(2)]))?;

    let two = RatFuncQ::from(q_bracket(2));
    for i in 0..=2u8 {
        for j in 0..=2u8 {
            if i == j {
                continue;
            }
            let s = lin(&[
                (&word(&[e(i), e(i), e(j)]), one.clone()),
                (&word(&[e(i), e(j), e(i)]), -two.clone()),
                (&word(&[e(j), e(i), e(i)]), one.clone()),
            ]);
            ch(&mut rep, &format!("Serre(E{i}, E{j}) = 0"), s, Vec::new())?;
        }
    }

    // One-dimensional weight spaces: (a, b) -> (2a+b, b-a) is injective.
    let mut seen = BTreeMap::new();
    let mut clashes = 0;
    for (a, b) in basis(model.depth) {
        let key = (2 * a as i64 + b as i64, b as i64 - a as i64);
        if seen.insert(key, (a, b)).is_some() {
            clashes += 1;
        }
    }
    rep.push(Check::from_residual("weights of the v_{a,b} are pairwise distinct", clashes, String::new()));
    let mut bad = 0;
    for (a, b) in model.interior(margin) {
        let v = model.act_word(&[xm11, e(1)], &basis_vector((a, b)))?;
        let want = qp(b as i64) * round(a + 1) * inv.clone();
        if v != basis_vector((a, b)).into_iter().map(|(i, _)| (i, want.clone())).collect::<Vector>() {
            bad += 1;
        }
    }
    rep.push(Check::from_residual("x-_{1,1} x+_{1,0} v_{a,b} = q^b (a+1)_q/(q-q^-1) v_{a,b}", bad, String::new()));
    Ok(rep)
}

/// `v_{0,0}` is a lowest l-weight vector with l-weight `(1 - z, 1)`.
pub fn verify_lowest_weight(model: &L1Model) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("prefund-lowest-weight").param("depth", model.depth);
    let v = basis_vector((0, 0));
    let scalar = |c: i64| -> Vector {
        if c == 0 {
            Vector::new()
        } else {
            BTreeMap::from([((0, 0), RatFuncQ::from_int(c))])
        }
    };
    for m in 0..=MODE_WINDOW {
        let want1 = match m {
            0 => 1,
            1 => -1,
            _ => 0,
        };
        let got1 = model.act(l(Gen::PhiPlus(1, m)), &v)?;
        rep.push(Check::from_bool(format!("phi+_{{1,{m}}} v_00 = {want1} v_00"), got1 == scalar(want1), String::new()));
        let want2 = i64::from(m == 0);
        let got2 = model.act(l(Gen::PhiPlus(2, m)), &v)?;
        rep.push(Check::from_bool(format!("phi+_{{2,{m}}} v_00 = {want2} v_00"), got2 == scalar(want2), String::new()));
    }
    for i in 1..=2u8 {
        for r in 1..=MODE_WINDOW {
            let got = model.act(l(Gen::DMinus(i, r)), &v)?;
            rep.push(Check::from_bool(format!("x-_{{{i},{r}}} v_00 = 0"), got.is_empty(), String::new()));
        }
    }
    for i in [0u8, 2] {
        let got = model.act(l(Gen::E(i)), &v)?;
        rep.push(Check::from_bool(format!("E{i} v_00 = 0"), got.is_empty(), String::new()));
    }
    // v_{a,b} = E1^a E_{a1+a2}^b v_00.
    let mut bad = 0;
    for (a, b) in basis(model.depth) {
        let mut w = vec![l(Gen::E(1)); a as usize];
        w.extend(std::iter::repeat(L1Op::EAlpha12).take(b as usize));
        if model.act_word(&w, &v)? != basis_vector((a, b)) {
            bad += 1;
        }
    }
    rep.push(Check::from_residual("v_{a,b} = E1^a E_{a1+a2}^b v_00", bad, String::new()));
    Ok(rep)
}
