//! Exact linear algebra over a [`Coeff`] field: dense inverses and a sparse
//! incremental echelon basis with canonical remainders.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalars::Coeff;

pub type SparseVec<S> = BTreeMap<usize, S>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("linear system has rank {rank} < {unknowns} unknowns")]
    RankDeficient { rank: usize, unknowns: usize },
}

pub fn mat_mul<S: Coeff>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(S::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` if singular.
pub fn mat_inverse<S: Coeff>(a: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inverse()?;
        for x in m[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let t = m[col][c].clone();
                    m[r][c] = m[r][c].clone() - f.clone() * t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn axpy<S: Coeff>(v: &mut SparseVec<S>, a: &S, row: &SparseVec<S>) {
    for (c, x) in row {
        let t = a.clone() * x.clone();
        match v.get_mut(c) {
            Some(y) => {
                *y = y.clone() + t;
                if y.is_zero() {
                    v.remove(c);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(*c, t);
                }
            }
        }
    }
}

/// Row-echelon basis of a subspace, keyed by leading (largest) column.
///
/// Remainders modulo the span are canonical: they contain no pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    rows: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Coeff> Default for Echelon<S> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<S: Coeff> Echelon<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).rev().find(|(c, _)| self.rows.contains_key(c));
            let Some((&c, x)) = next else { break };
            let a = -x.clone();
            axpy(&mut v, &a, &self.rows[&c]);
            bound = c;
        }
        v
    }

    /// Adds `v` to the span; returns false if it was already in it.
    pub fn insert(&mut self, v: SparseVec<S>) -> bool {
        let r = self.reduce(v);
        let Some((&lead, x)) = r.iter().next_back() else {
            return false;
        };
        let inv = x.inverse().expect("nonzero pivot");
        let row = r.into_iter().map(|(c, y)| (c, y * inv.clone())).collect();
        self.rows.insert(lead, row);
        true
    }

    pub fn contains(&self, v: SparseVec<S>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Solves `sum_c A[r][c] x_c = b[r]` requiring a unique solution.
pub fn solve_unique<S: Coeff>(
    rows: Vec<(SparseVec<S>, S)>,
    unknowns: usize,
) -> Result<Vec<S>, SolveError> {
    let mut pivots: BTreeMap<usize, (SparseVec<S>, S)> = BTreeMap::new();
    for (mut v, mut b) in rows {
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).rev().find(|(c, _)| pivots.contains_key(c));
            let Some((&c, x)) = next else { break };
            let a = -x.clone();
            let (prow, pb) = &pivots[&c];
            axpy(&mut v, &a, prow);
            b = b + a * pb.clone();
            bound = c;
        }
        match v.iter().next_back() {
            None => {
                if !b.is_zero() {
                    return Err(SolveError::Inconsistent);
                }
            }
            Some((&lead, x)) => {
                let inv = x.inverse().expect("nonzero pivot");
                let row = v.into_iter().map(|(c, y)| (c, y * inv.clone())).collect();
                pivots.insert(lead, (row, b * inv));
            }
        }
    }
    if pivots.len() < unknowns {
        return Err(SolveError::RankDeficient { rank: pivots.len(), unknowns });
    }
    let mut x: Vec<S> = vec![S::zero(); unknowns];
    for (&p, (row, b)) in &pivots {
        let mut val = b.clone();
        for (c, a) in row.range(..p) {
            val = val - a.clone() * x[*c].clone();
        }
        x[p] = val;
    }
    Ok(x)
}
