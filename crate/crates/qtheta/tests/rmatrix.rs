use qtheta::ncalg::{Gen, NCElement, Normalizer, TensorElement, TensorKey};
use qtheta::prefund::build_l1;
use qtheta::qaffine::{dminus, dplus, drinfeld_relations};
use qtheta::rmatrix::*;
use qtheta::scalars::{q_minus_qinv, q_round_factorial, RatFuncQ};

fn theta1(depth: u32) -> ThetaQAffine {
    let model = build_l1(depth + 1);
    assemble_theta1(&monodromy_table(&model, depth).unwrap(), depth).unwrap()
}

#[test]
fn closed_form_low_coefficients() {
    let th = theta_closed_expanded(1, 4);
    let qq = RatFuncQ::from(q_minus_qinv());
    let get = |left: Vec<Gen>, right: Vec<Gen>, z: i32| {
        let key = TensorKey { left, right, z };
        th.body.terms().find(|(k, _)| **k == key).map(|(_, c)| c.clone())
    };
    let (x, y) = (Gen::DMinus(1, 0), Gen::DPlus(1, -1));
    assert_eq!(get(vec![], vec![], 0), Some(RatFuncQ::from_int(1)));
    assert_eq!(get(vec![x], vec![y], 1), Some(qq.clone()));
    let c2 = qq.clone() * qq * RatFuncQ::from(q_round_factorial(2)).inv().unwrap();
    assert_eq!(get(vec![x, x], vec![y, y], 2), Some(c2));
}

#[test]
fn expanded_matches_exponential_product() {
    for node in 1..=2 {
        for depth in 1..=4 {
            let a = theta_closed_form(node, depth).unwrap().body;
            let b = theta_closed_expanded(node, depth).body;
            assert_eq!(a, b, "node={node} depth={depth}");
        }
    }
}

#[test]
fn first_monodromy_entries() {
    let model = build_l1(4);
    let t = monodromy_table(&model, 3).unwrap();
    let rules = drinfeld_relations(DRINFELD_WINDOW);
    let mut nz = Normalizer::new(&rules, 10);
    let qq = RatFuncQ::from(q_minus_qinv());
    assert_eq!(nz.normal_form(&t.plus[&(0, 0)]).unwrap(), NCElement::one());
    let want = [((1, 0), dminus(1, 0).scale(&-qq.clone())), ((0, 1), p1().scale(&qq))];
    for (idx, w) in want {
        assert!(nz.normal_form(&(&t.plus[&idx] - &w)).unwrap().is_zero(), "{idx:?}");
        assert!(nz.normal_form(&(&t.plus[&idx] - &t_plus_formula(idx.0, idx.1))).unwrap().is_zero());
    }
    assert_eq!(t.minus[&(1, 0)].1, 1);
    assert_eq!(t_minus_formula(1, 0), -(&dplus(1, -1) * &qtheta::qaffine::k_word(1, 0)));
}

#[test]
fn monodromy_suite() {
    let model = build_l1(5);
    let rep = verify_monodromy(&model, 4, 12).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn assembled_theta_matches_closed_form() {
    let th = theta1(4);
    assert_eq!(th.components()[&(0, 0)], TensorElement::one(th.body.cap()));
    let rep = compare_theta_closed(&th, 4, 12).unwrap();
    let fails: Vec<String> = rep.failures().map(|c| c.name.clone()).collect();
    // The exponents only q-commute; everything else must hold.
    assert_eq!(fails, ["exponents of Theta_1 commute", "exponents of Theta_2 commute"], "{rep}");
}

#[test]
fn exponents_q_commute() {
    let rep = verify_exponentials_commute(10).unwrap();
    for c in &rep.checks {
        assert_eq!(c.passed(), !c.name.ends_with(" commute"), "{}", c.name);
    }
}

#[test]
fn theta2_by_symmetry() {
    let rep = verify_theta2(&theta1(4), 12).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn coproduct_compatibility() {
    let rep = verify_ft_compatibility(2, 14).unwrap();
    assert!(rep.passed(), "{rep}");
}
