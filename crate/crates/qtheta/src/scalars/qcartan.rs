use num_traits::{One, Zero};

use super::qnum::q_bracket;
use super::ratfunc::RatFuncQ;
use crate::linalg;

/// Cartan matrix of type `A_n`.
pub fn cartan_matrix_a(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Quantum Cartan matrix `C(q) = ([c_ij]_q)` of type `A_n` and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCartan {
    pub n: usize,
    pub c: Vec<Vec<RatFuncQ>>,
    pub c_inv: Vec<Vec<RatFuncQ>>,
}

/// `C(q^s)` for type `A_n`.
pub fn quantum_cartan(n: usize, s: i64) -> Vec<Vec<RatFuncQ>> {
    cartan_matrix_a(n)
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| RatFuncQ::from(q_bracket(c).subs_q_pow(s)))
                .collect()
        })
        .collect()
}

impl QCartan {
    pub fn new(n: usize) -> Self {
        let c = quantum_cartan(n, 1);
        let c_inv = quantum_cartan_inverse(n, 1);
        QCartan { n, c, c_inv }
    }

    /// Checks `C * C^{-1} = 1` exactly.
    pub fn is_consistent(&self) -> bool {
        is_identity(&linalg::mat_mul(&self.c, &self.c_inv))
    }
}

/// `C^{-1}(q^s)` for type `A_n`, computed by exact elimination and checked
/// against `C(q^s)`.
pub fn quantum_cartan_inverse(n: usize, s: i64) -> Vec<Vec<RatFuncQ>> {
    assert!(n >= 1 && s >= 1);
    let c = quantum_cartan(n, s);
    let inv = linalg::mat_inverse(&c).expect("quantum Cartan matrix is invertible for generic q");
    debug_assert!(is_identity(&linalg::mat_mul(&c, &inv)));
    inv
}

fn is_identity(m: &[Vec<RatFuncQ>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}
