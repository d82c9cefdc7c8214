use proptest::prelude::*;
use qtheta::ncalg::{Gen, NCElement, Normalizer, Reducer};
use qtheta::qaffine::*;
use qtheta::scalars::{inv_q_minus_qinv, RatFuncQ};
use qtheta::QElement;

/// Simple reflection in the affine A_2 root lattice, coordinates over alpha_0..alpha_2.
fn s(i: usize, b: [i64; 3]) -> [i64; 3] {
    let a = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]];
    let pair: i64 = (0..3).map(|j| a[i][j] * b[j]).sum();
    let mut out = b;
    out[i] -= pair;
    out
}

fn node(k: i64) -> usize {
    [1, 0, 1, 2, 1, 0, 1, 2][k.rem_euclid(8) as usize]
}

fn oracle_beta(k: i64) -> [i64; 3] {
    let mut b = [0; 3];
    b[node(k)] = 1;
    // Innermost reflection first: iota(k-1) for k >= 1, iota(k+1) for k <= 0.
    let word: Vec<i64> = if k >= 1 { (1..k).rev().collect() } else { (k + 1..=0).collect() };
    for &j in &word {
        b = s(node(j), b);
    }
    b
}

fn norm(b: [i64; 3]) -> i64 {
    2 * b.iter().map(|x| x * x).sum::<i64>() - 2 * (b[0] * b[1] + b[1] * b[2] + b[0] * b[2])
}

#[test]
fn displayed_roots() {
    let d = damiani_roots(-2, 4);
    assert_eq!(d.root(1), AffineRoot::new(1, -1, -1));
    assert_eq!(d.root(2), AffineRoot::new(1, 0, -1));
    assert_eq!(d.root(3), AffineRoot::new(2, -1, -1));
    assert_eq!(d.root(4), AffineRoot::new(1, -1, 0));
    assert_eq!(d.root(0), AffineRoot::new(0, 1, 0));
    assert_eq!(d.root(-1), AffineRoot::new(0, 1, 1));
    assert_eq!(d.root(-2), AffineRoot::new(0, 0, 1));
}

#[test]
fn roots_match_reflection_oracle() {
    let d = damiani_roots(-24, 24);
    for k in -24..=24 {
        assert_eq!(d.root(k).0, oracle_beta(k), "k={k}");
    }
    assert_eq!(d.ordered().first(), Some(&1));
    assert_eq!(d.ordered().last(), Some(&0));
}

#[test]
fn damiani_suite() {
    let rep = verify_damiani(-24, 24);
    assert!(rep.passed(), "{rep}");
}

proptest! {
    #[test]
    fn roots_are_real_and_signed(k in -200i64..=200) {
        let b = damiani_roots(k.min(0), k.max(1)).root(k);
        prop_assert_eq!(norm(b.0), 2);
        prop_assert!(b.is_nonnegative());
        prop_assert_eq!(matches!(b.classify(), Some(RealRoot::Plus { .. })), k <= 0);
        prop_assert_eq!(b.0, oracle_beta(k));
    }
}

fn qp(e: i64) -> RatFuncQ {
    RatFuncQ::q_pow(e)
}

#[test]
fn dj_rewriting_examples() {
    let rs = dj_relations();
    let mut red = Reducer::new(&rs);
    assert_eq!(red.reduce(&(&e(1) * &k(1, false))).unwrap(), (&k(1, false) * &e(1)).scale(&qp(-2)));
    assert_eq!(red.reduce(&(&e(1) * &k(2, false))).unwrap(), (&k(2, false) * &e(1)).scale(&qp(1)));
    assert_eq!(red.reduce(&(&e(1) * &f(2))).unwrap(), &f(2) * &e(1));
    let cross = (&k(1, false) - &k(1, true)).scale(&inv_q_minus_qinv());
    assert_eq!(red.reduce(&(&e(1) * &f(1))).unwrap(), &(&f(1) * &e(1)) + &cross);
    assert_eq!(red.reduce(&(&k(1, false) * &k(1, true))).unwrap(), NCElement::one());
}

#[test]
fn low_root_vectors() {
    let rs = dj_relations();
    let mut nz = Normalizer::new(&rs, 8);
    let mut same = |a: &QElement, b: &QElement| nz.normal_form(&(a - b)).unwrap().is_zero();
    assert!(same(&root_vector(0).unwrap(), &e(1)));
    assert!(same(&root_vector(-1).unwrap(), &(&(&e(1) * &e(2)).scale(&qp(-1)) - &(&e(2) * &e(1)))));
    assert!(same(&root_vector(-2).unwrap(), &e(2)));
    assert!(same(&root_vector(1).unwrap(), &e(0)));
    assert!(same(&root_vector(4).unwrap(), &-qcomm(&e(0), &e(2), -1)));
    assert!(same(&root_vector_f(-1).unwrap(), &-qcomm(&f(1), &f(2), 1)));
    assert!(!same(&(&e(1) * &e(2)), &(&e(2) * &e(1))));
}

#[test]
fn root_vector_suite() {
    let rep = verify_root_vectors(12).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn automorphism_suite() {
    let rep = verify_automorphisms(12).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn false_identity_is_rejected() {
    let rs = dj_relations();
    let mut c = DjCertifier::new(&rs, 10);
    let x = NCElement::gen(Gen::XMinus(1, 1));
    assert!(!c.check("x-_{1,1} = F_1", &x, &f(1)).passed());
    assert!(c.check("x-_{1,1} = x-_{1,1}", &x, &x).passed());
}
