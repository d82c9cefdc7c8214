use super::braid::{braid_word_apply, permutation_map, psi_map, tau, BraidOp};
use super::relations::{dj_relations, e, f, k, qcomm};
use crate::ncalg::{AlgebraError, Gen, GeneratorMap, NCElement, Reducer};
use crate::scalars::{q_minus_qinv, RatFuncQ};
use crate::{QElement, QTensor};

/// Drinfeld generators in the window `|m| <= 1` written in the Drinfeld-Jimbo
/// alphabet. Node-2 entries use Beck's sign `o(2) = -1`, so that
/// `psi(x^-_{1,1}) = -x^-_{2,1}` and `psi(x^+_{1,-1}) = -x^+_{2,-1}`.
#[derive(Clone)]
pub struct BeckDictionary {
    map: GeneratorMap<RatFuncQ>,
}

/// `x^-_{1,1} = K_1 [E_0, E_2]_{q^{-1}}`.
pub fn x_minus_11() -> QElement {
    &k(1, false) * &qcomm(&e(0), &e(2), -1)
}

/// `x^+_{1,-1} = [F_2, F_0]_q K_1^{-1}`.
pub fn x_plus_1m1() -> QElement {
    &qcomm(&f(2), &f(0), 1) * &k(1, true)
}

impl BeckDictionary {
    pub fn new() -> Self {
        let mut map = GeneratorMap::new(false, false);
        for i in 0..=2u8 {
            map.set(Gen::E(i), e(i));
            map.set(Gen::F(i), f(i));
            map.set(Gen::K(i, false), k(i, false));
            map.set(Gen::K(i, true), k(i, true));
        }
        let psi = psi_map();
        let xm = [x_minus_11(), -psi.apply(&x_minus_11()).expect("psi is total")];
        let xp = [x_plus_1m1(), -psi.apply(&x_plus_1m1()).expect("psi is total")];
        let qq = RatFuncQ::from(q_minus_qinv());
        for i in 1..=2u8 {
            let (xm, xp) = (&xm[i as usize - 1], &xp[i as usize - 1]);
            map.set(Gen::DPlus(i, 0), e(i));
            map.set(Gen::DMinus(i, 0), f(i));
            map.set(Gen::PhiPlus(i, 0), k(i, false));
            map.set(Gen::PhiMinus(i, 0), k(i, true));
            map.set(Gen::DMinus(i, 1), xm.clone());
            map.set(Gen::DPlus(i, -1), xp.clone());
            let br_plus = NCElement::commutator(&e(i), xm);
            let br_minus = NCElement::commutator(xp, &f(i));
            map.set(Gen::PhiPlus(i, 1), br_plus.scale(&qq));
            map.set(Gen::PhiMinus(i, -1), -br_minus.scale(&qq));
            map.set(Gen::H(i, 1), &k(i, true) * &br_plus);
            map.set(Gen::H(i, -1), &k(i, false) * &br_minus);
        }
        BeckDictionary { map }
    }

    pub fn entry(&self, g: Gen) -> Result<&QElement, AlgebraError> {
        self.map.image(&g)
    }

    /// Expands Drinfeld symbols; Drinfeld-Jimbo letters are kept.
    pub fn expand(&self, x: &QElement) -> Result<QElement, AlgebraError> {
        self.map.apply(x)
    }

    pub fn expand_tensor(&self, t: &QTensor) -> Result<QTensor, AlgebraError> {
        self.map.apply_tensor(t)
    }
}

impl Default for BeckDictionary {
    fn default() -> Self {
        Self::new()
    }
}

/// `T_{omega_i}`: `T_0 T_2 T_{tau_1}` for `i = 1`, `T_0 T_1 T_{tau_2}` for `i = 2`.
pub fn t_omega(i: u8, x: &QElement) -> Result<QElement, AlgebraError> {
    let rotated = permutation_map(tau(i)).apply(x)?;
    let other = if i == 1 { 2 } else { 1 };
    braid_word_apply(&[BraidOp::t(0), BraidOp::t(other)], &rotated)
}

/// Beck's `x^+_{i,-s} = o(i)^s T_{omega_i}^s (E_i)` and
/// `x^-_{i,s} = o(i)^s T_{omega_i}^s (F_i)`, rewritten; `o(1) = 1`, `o(2) = -1`.
pub fn beck_current(i: u8, plus: bool, s: u32) -> Result<QElement, AlgebraError> {
    let mut x = if plus { e(i) } else { f(i) };
    for _ in 0..s {
        x = t_omega(i, &x)?;
    }
    if i == 2 && s % 2 == 1 {
        x = -x;
    }
    Reducer::new(&dj_relations()).reduce(&x)
}

