//! Dense univariate polynomials over Q, lowest degree first. Used only for
//! canonicalizing rational functions.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. `b` must be nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &r[i + shift] - &c * bc;
            r[i + shift] = t;
        }
        quot[shift] = c;
        trim(&mut r);
    }
    (quot, r)
}

/// Monic gcd.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &lead;
        }
    }
    x
}

pub(crate) fn is_one(p: &[Rational]) -> bool {
    p.len() == 1 && p[0].is_one()
}
