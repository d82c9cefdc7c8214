use proptest::prelude::*;
use qtheta::health::{critical_pairs, rule_letters, words_up_to};
use qtheta::ncalg::*;
use qtheta::qaffine::{dj_letters, dj_relations, e, omega_map, phi_map, psi_map, serre};
use qtheta::scalars::{q_bracket, rat, rat_int, RatFuncQ, Rational};
use qtheta::yangian::{sl_commutator_rules, sl_extended_rules, theta_exponent, xi};

type Y = NCElement<Rational>;

fn el(j: u8, k: u8) -> Y {
    NCElement::gen(Gen::Elem(j, k))
}

#[test]
fn free_products() {
    let p = &NCElement::<RatFuncQ>::gen(Gen::E(1)) * &NCElement::gen(Gen::E(2));
    assert_eq!(p, NCElement::word(&[Gen::E(1), Gen::E(2)]));
    let (x, y) = (el(1, 2), el(2, 1));
    let lhs = &(&x + &y) * &(&x - &y);
    let want = &(&(&(&x * &x) - &(&x * &y)) + &(&y * &x)) - &(&y * &y);
    assert_eq!(lhs, want);
    assert_eq!(lhs.len(), 4);
}

#[test]
fn classical_exponential_of_a_pure_tensor() {
    let t = TensorElement::pure(&el(2, 1), &el(1, 2), 0, Cap::Height(2));
    let got = t.exponential(ExpFlavor::Classical, 2, false).unwrap();
    let mut want = TensorElement::one(Cap::Height(2));
    want = &want + &t;
    want = &want + &TensorElement::pure(&el(2, 1).pow(2), &el(1, 2).pow(2), 0, Cap::Height(2)).scale(&rat(1, 2));
    assert_eq!(got, want);
    let zero = TensorElement::<Rational>::zero(Cap::Height(2));
    assert_eq!(zero.exponential(ExpFlavor::Classical, 4, true).unwrap(), TensorElement::one(Cap::Height(2)));
}

#[test]
fn sl2_commutator_rewrites() {
    let rs = sl_commutator_rules(1);
    let got = reduce_pbw(&(&el(1, 2) * &el(2, 1)), &rs).unwrap();
    assert_eq!(got, &(&el(2, 1) * &el(1, 2)) + &xi(1, 0));
    let normal = &el(2, 1) * &el(1, 2);
    assert_eq!(reduce_pbw(&normal, &rs).unwrap(), normal);
}

#[test]
fn sl3_brackets() {
    let rs = sl_commutator_rules(2);
    let br = |a: &Y, b: &Y| reduce_pbw(&NCElement::commutator(a, b), &rs).unwrap();
    assert_eq!(br(&el(1, 2), &el(2, 1)), xi(1, 0));
    assert_eq!(br(&el(1, 3), &el(3, 2)), el(1, 2));
    assert_eq!(br(&xi(1, 0), &el(2, 3)), -el(2, 3));
}

#[test]
fn yangian_extension_xi_commutation() {
    // [xi_{1,0}, x+_{1,1}] = 2 x+_{1,1}.
    let rs = sl_extended_rules(1, 1);
    let x = NCElement::gen(Gen::XPlus(1, 1));
    let lhs = reduce_pbw(&(&xi(1, 0) * &x), &rs).unwrap();
    let rhs = reduce_pbw(&(&(&x * &xi(1, 0)) + &x.scale(&rat_int(2))), &rs).unwrap();
    assert_eq!(lhs, rhs);
}

fn serre_only() -> RelationSet<RatFuncQ> {
    let mut rs = RelationSet::new("serre", |_| 0);
    rs.ideal_generators.push(serre(&e(1), &e(2)));
    rs
}

#[test]
fn ideal_membership_examples() {
    let rs = serre_only();
    let s = serre(&e(1), &e(2));
    let q2 = RatFuncQ::from(q_bracket(2));
    let explicit = &(&(&e(1) * &e(1)) * &e(2)) - &(&(&(&e(1) * &e(2)) * &e(1)).scale(&q2) - &(&(&e(2) * &e(1)) * &e(1)));
    assert_eq!(s, explicit);
    assert!(ideal_member(&s, &rs, 3).unwrap());
    assert!(!ideal_member(&NCElement::commutator(&e(1), &e(2)), &rs, 3).unwrap());
    assert!(ideal_member(&NCElement::zero(), &rs, 3).unwrap());
    // A multiple of the generator needs the bound to cover it.
    let bigger = &e(1) * &s;
    assert!(ideal_member(&bigger, &rs, 4).unwrap());
    assert!(matches!(ideal_member(&bigger, &rs, 3), Err(AlgebraError::DegreeBoundTooSmall { .. })));
}

#[test]
fn sl_critical_pairs_resolve() {
    for n in 1..=3 {
        let rs = sl_commutator_rules(n);
        assert!(critical_pairs(&rs).unwrap().is_empty(), "sl_{}", n + 1);
    }
}

#[test]
fn broken_rule_is_caught_by_critical_pairs() {
    let mut rs = sl_commutator_rules(2);
    // Wrong sign in [E_12, E_21] = xi_{1,0}.
    let bad = &(&el(2, 1) * &el(1, 2)) - &xi(1, 0);
    rs.add_swap(Gen::Elem(1, 2), Gen::Elem(2, 1), bad);
    assert!(!critical_pairs(&rs).unwrap().is_empty());
}

#[test]
fn automorphisms_are_involutions() {
    let rs = dj_relations();
    let mut red = Reducer::new(&rs);
    for m in [phi_map(), omega_map(), psi_map()] {
        for g in dj_letters() {
            let x = NCElement::gen(g);
            let twice = m.apply(&m.apply(&x).unwrap()).unwrap();
            assert!(red.reduce(&(&twice - &x)).unwrap().is_zero(), "{g}");
        }
    }
}

#[test]
fn exponential_inverse_on_theta_exponent() {
    let rs = sl_commutator_rules(2);
    let mut red = Reducer::new(&rs);
    for i in 1..=2 {
        let h = 4;
        let y = theta_exponent(2, i, Cap::Height(h));
        let a = y.exponential(ExpFlavor::Classical, h as u32, false).unwrap();
        let b = y.scale(&rat_int(-1)).exponential(ExpFlavor::Classical, h as u32, false).unwrap();
        let prod = red.reduce_tensor(&(&a * &b)).unwrap();
        assert_eq!(prod, TensorElement::one(Cap::Height(h)), "node {i}");
    }
}

fn sl3_word() -> impl Strategy<Value = Word> {
    let letters = rule_letters(&sl_commutator_rules(2));
    prop::collection::vec(prop::sample::select(letters), 0..5)
}

fn sl3_element() -> impl Strategy<Value = Y> {
    prop::collection::vec((sl3_word(), -3i64..=3), 0..4)
        .prop_map(|ts| NCElement::from_terms(ts.into_iter().map(|(w, c)| (w, rat_int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grading_is_additive(a in sl3_element(), b in sl3_element()) {
        let prod = &a * &b;
        for (w, _) in prod.terms() {
            let split = a.terms().flat_map(|(wa, _)| b.terms().map(move |(wb, _)| (wa, wb)))
                .any(|(wa, wb)| word_weight(wa) + word_weight(wb) == word_weight(w));
            prop_assert!(split);
        }
    }

    #[test]
    fn reduction_is_a_projection(x in sl3_element()) {
        let rs = sl_commutator_rules(2);
        let r = reduce_pbw(&x, &rs).unwrap();
        prop_assert_eq!(reduce_pbw(&r, &rs).unwrap(), r.clone());
        let mut ideal = rs.clone();
        ideal.ideal_generators = rs.swap_differences();
        let deg = rs.max_degree(&x).max(2);
        prop_assert!(ideal_member(&(&x - &r), &ideal, deg).unwrap());
    }

    #[test]
    fn reduction_preserves_weight(x in sl3_element()) {
        let rs = sl_commutator_rules(2);
        for (wt, part) in x.components() {
            let rp = reduce_pbw(&part, &rs).unwrap();
            prop_assert!(rp.components().keys().all(|k| *k == wt));
        }
    }
}

#[test]
fn rewriting_is_idempotent_on_short_words() {
    for n in 1..=3 {
        let rs = sl_commutator_rules(n);
        let mut red = Reducer::new(&rs);
        for w in words_up_to(&rule_letters(&rs), 3) {
            let once = red.reduce_word(&w).unwrap();
            assert_eq!(red.reduce(&once).unwrap(), once);
        }
    }
}
