use super::relations::{cartan, e, f, k, k_root, qp};
use crate::ncalg::{AlgebraError, Gen, GeneratorMap};
use crate::scalars::RatFuncQ;
use crate::QElement;

/// All Drinfeld-Jimbo letters, including `K_0^{+-1}`.
pub fn dj_letters() -> Vec<Gen> {
    let mut v = Vec::new();
    for i in 0..=2u8 {
        v.extend([Gen::E(i), Gen::F(i), Gen::K(i, false), Gen::K(i, true)]);
    }
    v
}

/// `Phi`: `E_i <-> F_i`, `K_i` fixed, `q -> q^{-1}`; multiplicative.
pub fn phi_map() -> GeneratorMap<RatFuncQ> {
    let mut m = GeneratorMap::new(false, true);
    for i in 0..=2u8 {
        m.set(Gen::E(i), f(i));
        m.set(Gen::F(i), e(i));
        m.set(Gen::K(i, false), k(i, false));
        m.set(Gen::K(i, true), k(i, true));
    }
    m
}

/// `Omega`: `E_i <-> F_i`, `K_i -> K_i^{-1}`, `q -> q^{-1}`; anti-multiplicative.
pub fn omega_map() -> GeneratorMap<RatFuncQ> {
    let mut m = GeneratorMap::new(true, true);
    for i in 0..=2u8 {
        m.set(Gen::E(i), f(i));
        m.set(Gen::F(i), e(i));
        m.set(Gen::K(i, false), k(i, true));
        m.set(Gen::K(i, true), k(i, false));
    }
    m
}

/// Diagram involution fixing node 0 and swapping nodes 1 and 2.
pub fn psi_node(i: u8) -> u8 {
    match i {
        1 => 2,
        2 => 1,
        _ => i,
    }
}

/// `psi` on the Drinfeld-Jimbo letters.
pub fn psi_map() -> GeneratorMap<RatFuncQ> {
    permutation_map(psi_node)
}

/// `E_i -> E_{tau(i)}` and likewise for `F`, `K`.
pub fn permutation_map(tau: impl Fn(u8) -> u8) -> GeneratorMap<RatFuncQ> {
    let mut m = GeneratorMap::new(false, false);
    for i in 0..=2u8 {
        let t = tau(i);
        m.set(Gen::E(i), e(t));
        m.set(Gen::F(i), f(t));
        m.set(Gen::K(i, false), k(t, false));
        m.set(Gen::K(i, true), k(t, true));
    }
    m
}

/// Rotation `tau_1: 0 -> 1 -> 2 -> 0` and its inverse `tau_2`.
pub fn tau(which: u8) -> impl Fn(u8) -> u8 {
    move |i| if which == 1 { (i + 1) % 3 } else { (i + 2) % 3 }
}

/// `s_i(alpha_j)` as coordinates over `(alpha_0, alpha_1, alpha_2)`.
pub fn reflect(i: u8, beta: [i64; 3]) -> [i64; 3] {
    let pairing: i64 = (0..3).map(|j| cartan(i, j as u8) * beta[j]).sum();
    let mut out = beta;
    out[i as usize] -= pairing;
    out
}

fn simple(j: u8) -> [i64; 3] {
    let mut c = [0; 3];
    c[j as usize] = 1;
    c
}

/// The braid generator `T_i` on the Drinfeld-Jimbo letters.
pub fn braid_map(i: u8) -> GeneratorMap<RatFuncQ> {
    let mut m = GeneratorMap::new(false, false);
    let one = RatFuncQ::from_int(1);
    for j in 0..=2u8 {
        if j == i {
            m.set(Gen::E(i), -(&f(i) * &k(i, false)));
            m.set(Gen::F(i), -(&k(i, true) * &e(i)));
        } else {
            let c = cartan(i, j);
            debug_assert_eq!(c, -1);
            m.set(Gen::E(j), &(&e(j) * &e(i)).scale(&qp(-1)) - &(&e(i) * &e(j)).scale(&one));
            m.set(Gen::F(j), &(&f(i) * &f(j)).scale(&qp(1)) - &(&f(j) * &f(i)));
        }
        let r = reflect(i, simple(j));
        m.set(Gen::K(j, false), k_root(r));
        m.set(Gen::K(j, true), k_root([-r[0], -r[1], -r[2]]));
    }
    m
}

/// A braid generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidOp {
    pub node: u8,
    pub inverse: bool,
}

impl BraidOp {
    pub fn t(node: u8) -> Self {
        BraidOp { node, inverse: false }
    }

    pub fn t_inv(node: u8) -> Self {
        BraidOp { node, inverse: true }
    }
}

/// `T_i(x)`, or `T_i^{-1}(x) = Phi T_i Phi (x)`.
pub fn braid_apply(op: BraidOp, x: &QElement) -> Result<QElement, AlgebraError> {
    let t = braid_map(op.node);
    if op.inverse {
        let p = phi_map();
        p.apply(&t.apply(&p.apply(x)?)?)
    } else {
        t.apply(x)
    }
}

/// Applies `ops` right to left, so `ops = [T_a, T_b]` gives `T_a T_b (x)`.
pub fn braid_word_apply(ops: &[BraidOp], x: &QElement) -> Result<QElement, AlgebraError> {
    let mut y = x.clone();
    for op in ops.iter().rev() {
        y = braid_apply(*op, &y)?;
    }
    Ok(y)
}
