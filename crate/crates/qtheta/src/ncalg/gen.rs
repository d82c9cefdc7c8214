use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Largest node index a [`Weight`] can carry, plus one.
pub const MAX_NODES: usize = 8;

/// A generator symbol. The variant is the alphabet family; indices are 1-based
/// nodes except for the affine node 0 of the Drinfeld-Jimbo alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    /// Elementary matrix `E_{jk}` of `sl_{n+1}`, `j != k`.
    Elem(u8, u8),
    /// Yangian Cartan current `xi_{i,p}`.
    Xi(u8, i8),
    /// Yangian current `x^+_{i,m}`.
    XPlus(u8, i8),
    /// Yangian current `x^-_{i,m}`.
    XMinus(u8, i8),
    /// Chevalley generator `F_i`, `i` in 0..=2.
    F(u8),
    /// `K_i` (`inverse = false`) or `K_i^{-1}`.
    K(u8, bool),
    /// Chevalley generator `E_i`, `i` in 0..=2.
    E(u8),
    /// Drinfeld current `x^+_{i,m}` of the quantum affine algebra.
    DPlus(u8, i8),
    /// Drinfeld current `x^-_{i,m}` of the quantum affine algebra.
    DMinus(u8, i8),
    /// `phi^+_{i,m}`.
    PhiPlus(u8, i8),
    /// `phi^-_{i,m}`.
    PhiMinus(u8, i8),
    /// Drinfeld-Cartan element `h_{i,s}`.
    H(u8, i8),
}

impl Gen {
    pub fn k(i: u8) -> Gen {
        Gen::K(i, false)
    }

    pub fn k_inv(i: u8) -> Gen {
        Gen::K(i, true)
    }

    /// Weight over the simple roots, indexed by node. For the affine alphabet
    /// node 0 carries `alpha_0` and `delta = alpha_0 + alpha_1 + alpha_2`.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        match *self {
            Gen::Elem(j, k) => {
                let (lo, hi, s) = if j < k { (j, k, 1) } else { (k, j, -1) };
                for l in lo..hi {
                    w.0[l as usize] += s;
                }
            }
            Gen::XPlus(i, _) | Gen::E(i) => w.0[i as usize] = 1,
            Gen::XMinus(i, _) | Gen::F(i) => w.0[i as usize] = -1,
            Gen::Xi(..) | Gen::K(..) => {}
            Gen::DPlus(i, m) => {
                w = Weight::delta(m as i32);
                w.0[i as usize] += 1;
            }
            Gen::DMinus(i, m) => {
                w = Weight::delta(m as i32);
                w.0[i as usize] -= 1;
            }
            Gen::PhiPlus(_, m) | Gen::PhiMinus(_, m) | Gen::H(_, m) => w = Weight::delta(m as i32),
        }
        w
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Elem(j, k) => write!(f, "E_{j}{k}"),
            Gen::Xi(i, p) => write!(f, "xi_{i},{p}"),
            Gen::XPlus(i, m) | Gen::DPlus(i, m) => write!(f, "x+_{i},{m}"),
            Gen::XMinus(i, m) | Gen::DMinus(i, m) => write!(f, "x-_{i},{m}"),
            Gen::E(i) => write!(f, "E{i}"),
            Gen::F(i) => write!(f, "F{i}"),
            Gen::K(i, false) => write!(f, "K{i}"),
            Gen::K(i, true) => write!(f, "K{i}^-1"),
            Gen::PhiPlus(i, m) => write!(f, "phi+_{i},{m}"),
            Gen::PhiMinus(i, m) => write!(f, "phi-_{i},{m}"),
            Gen::H(i, s) => write!(f, "h_{i},{s}"),
        }
    }
}

/// Element of the root lattice, coordinates indexed by node.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub [i32; MAX_NODES]);

impl Weight {
    pub fn zero() -> Self {
        Weight([0; MAX_NODES])
    }

    pub fn simple(i: usize) -> Self {
        let mut w = Weight::zero();
        w.0[i] = 1;
        w
    }

    /// `m * delta` in the affine `A_2` coordinates.
    pub fn delta(m: i32) -> Self {
        let mut w = Weight::zero();
        w.0[0] = m;
        w.0[1] = m;
        w.0[2] = m;
        w
    }

    pub fn from_coords(c: &[i32]) -> Self {
        let mut w = Weight::zero();
        w.0[..c.len()].copy_from_slice(c);
        w
    }

    /// Sum of all coordinates.
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        let mut w = *self;
        for c in w.0.iter_mut() {
            *c *= k;
        }
        w
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
        write!(f, "(")?;
        for (i, c) in self.0[..last].iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub type Word = Vec<Gen>;

pub fn word_weight(w: &[Gen]) -> Weight {
    w.iter().fold(Weight::zero(), |acc, g| acc + g.weight())
}

pub fn word_to_string(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}
