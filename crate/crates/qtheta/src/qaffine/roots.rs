use std::collections::BTreeMap;
use std::fmt;

use super::braid::{braid_word_apply, omega_map, reflect, BraidOp};
use super::relations::{dj_relations, e};
use crate::ncalg::{AlgebraError, Reducer};
use crate::QElement;

/// Affine root over `(alpha_0, alpha_1, alpha_2)`; `delta = (1, 1, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineRoot(pub [i64; 3]);

/// Classification of a real root of the affine `A_2` root system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealRoot {
    /// `m delta + alpha`, `m >= 0`, `alpha` a positive root of `sl_3` as `(a_1, a_2)`.
    Plus { m: i64, alpha: [i64; 2] },
    /// `r delta - alpha`, `r >= 1`.
    Minus { r: i64, alpha: [i64; 2] },
}

const FINITE_POSITIVE: [[i64; 2]; 3] = [[1, 0], [0, 1], [1, 1]];

impl AffineRoot {
    pub fn simple(i: u8) -> Self {
        let mut c = [0; 3];
        c[i as usize] = 1;
        AffineRoot(c)
    }

    /// `m delta + a_1 alpha_1 + a_2 alpha_2`.
    pub fn new(m: i64, a1: i64, a2: i64) -> Self {
        AffineRoot([m, m + a1, m + a2])
    }

    pub fn delta_count(&self) -> i64 {
        self.0[0]
    }

    pub fn reflect(&self, i: u8) -> Self {
        AffineRoot(reflect(i, self.0))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn classify(&self) -> Option<RealRoot> {
        let m = self.0[0];
        let fin = [self.0[1] - m, self.0[2] - m];
        if m >= 0 && FINITE_POSITIVE.contains(&fin) {
            return Some(RealRoot::Plus { m, alpha: fin });
        }
        let neg = [-fin[0], -fin[1]];
        if m >= 1 && FINITE_POSITIVE.contains(&neg) {
            return Some(RealRoot::Minus { r: m, alpha: neg });
        }
        None
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0[0];
        let (a1, a2) = (self.0[1] - m, self.0[2] - m);
        let mut parts = Vec::new();
        if m != 0 {
            parts.push(if m == 1 { "d".to_string() } else { format!("{m}d") });
        }
        for (c, name) in [(a1, "a1"), (a2, "a2")] {
            match c {
                0 => {}
                1 => parts.push(format!("+{name}")),
                -1 => parts.push(format!("-{name}")),
                _ => parts.push(format!("{c:+}{name}")),
            }
        }
        let s = parts.concat();
        let s = s.strip_prefix('+').unwrap_or(&s);
        write!(f, "{}", if s.is_empty() { "0" } else { s })
    }
}

const PERIOD: [u8; 8] = [1, 0, 1, 2, 1, 0, 1, 2];

/// The periodic node sequence: `iota(1..=8) = (0,1,2,1,0,1,2,1)`, extended to all integers.
pub fn iota(k: i64) -> u8 {
    PERIOD[k.rem_euclid(8) as usize]
}

/// The braid word producing `beta_k` and `E_{beta_k}`.
pub fn braid_word(k: i64) -> Vec<BraidOp> {
    if k >= 1 {
        (1..k).map(|j| BraidOp::t(iota(j))).collect()
    } else {
        (k + 1..=0).rev().map(|j| BraidOp::t_inv(iota(j))).collect()
    }
}

/// Rank in the convex order `beta_1 < beta_2 < ... < beta_{-1} < beta_0`.
pub fn order_key(k: i64) -> (bool, i64) {
    (k <= 0, k)
}

#[derive(Clone, Debug)]
pub struct DamianiData {
    pub k_min: i64,
    pub k_max: i64,
    pub roots: BTreeMap<i64, AffineRoot>,
}

impl DamianiData {
    pub fn root(&self, k: i64) -> AffineRoot {
        self.roots[&k]
    }

    /// Indices sorted increasingly for the convex order.
    pub fn ordered(&self) -> Vec<i64> {
        let mut ks: Vec<i64> = self.roots.keys().copied().collect();
        ks.sort_by_key(|&k| order_key(k));
        ks
    }

    /// Whether `beta_k` precedes `beta_l`.
    pub fn precedes(k: i64, l: i64) -> bool {
        order_key(k) < order_key(l)
    }
}

/// `beta_k` for `k` in `k_min..=k_max` via affine reflections.
pub fn damiani_roots(k_min: i64, k_max: i64) -> DamianiData {
    assert!(k_min <= 0 && 0 < k_max, "window must contain 0 and 1");
    let mut roots = BTreeMap::new();
    for k in k_min..=k_max {
        let mut b = AffineRoot::simple(iota(k));
        for op in braid_word(k).iter().rev() {
            b = b.reflect(op.node);
        }
        roots.insert(k, b);
    }
    DamianiData { k_min, k_max, roots }
}

/// `E_{beta_k}`, rewritten with the Drinfeld-Jimbo rules.
pub fn root_vector(k: i64) -> Result<QElement, AlgebraError> {
    let x = braid_word_apply(&braid_word(k), &e(iota(k)))?;
    Reducer::new(&dj_relations()).reduce(&x)
}

/// `F_{beta_k} = Omega(E_{beta_k})`, rewritten.
pub fn root_vector_f(k: i64) -> Result<QElement, AlgebraError> {
    let x = omega_map().apply(&root_vector(k)?)?;
    Reducer::new(&dj_relations()).reduce(&x)
}
