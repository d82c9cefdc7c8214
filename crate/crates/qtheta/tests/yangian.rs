use qtheta::ncalg::{Cap, Gen, NCElement, Reducer, TensorElement};
use qtheta::scalars::{rat, rat_int, Rational};
use qtheta::yangian::*;
use qtheta::YTensor;

fn el(j: u8, k: u8) -> NCElement<Rational> {
    NCElement::gen(Gen::Elem(j, k))
}

#[test]
fn sl2_theta_to_height_two() {
    let th = theta_closed_form(1, 1, 2);
    let cap = th.body.cap();
    let mut want = TensorElement::one(cap);
    want = &want + &TensorElement::pure(&el(2, 1), &el(1, 2), 0, cap);
    want = &want + &TensorElement::pure(&el(2, 1).pow(2), &el(1, 2).pow(2), 0, cap).scale(&rat(1, 2));
    assert_eq!(th.body, want);
}

#[test]
fn theta_at_height_zero_is_one() {
    for n in 1..=3 {
        for i in 1..=n {
            let th = theta_closed_form(n, i, 0);
            assert_eq!(th.body, TensorElement::one(th.body.cap()));
        }
    }
}

#[test]
fn exponent_terms_commute() {
    for n in 1..=3 {
        let rs = sl_commutator_rules(n);
        let mut red = Reducer::new(&rs);
        for i in 1..=n {
            let terms: Vec<YTensor> = (1..=i)
                .flat_map(|j| (i + 1..=n + 1).map(move |k| (j, k)))
                .map(|(j, k)| TensorElement::pure(&elem(k, j), &elem(j, k), 0, Cap::None))
                .collect();
            for a in &terms {
                for b in &terms {
                    let c = red.reduce_tensor(&TensorElement::commutator(a, b)).unwrap();
                    assert!(c.is_zero(), "n={n} i={i}");
                }
            }
        }
    }
}

#[test]
fn closed_form_satisfies_the_intertwining_system() {
    for n in 1..=3 {
        for i in 1..=n {
            let rep = verify_intertwining(n, i, 4).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn perturbed_theta_breaks_the_intertwining_system() {
    let mut th = theta_closed_form(2, 1, 3);
    let bump = TensorElement::pure(&el(3, 1), &el(1, 3), 0, th.body.cap()).scale(&rat_int(1));
    th.body = &th.body + &bump;
    let res = intertwining_residuals(2, &th).unwrap();
    assert!(res.iter().any(|(_, r)| !r.is_zero()));
}

#[test]
fn lemma_commutators() {
    for n in 1..=3 {
        for i in 1..=n {
            let rep = verify_lemma_commutators(n, i, 4).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn solver_agrees_with_closed_form() {
    for n in 1..=2 {
        for i in 1..=n {
            let sol = solve_theta_recursive(n, i, 4).unwrap();
            assert!(sol.is_z_independent());
            assert_eq!(sol.body, theta_closed_form(n, i, 4).body, "n={n} i={i}");
        }
    }
}

#[test]
fn shift_zigzag() {
    for n in 1..=3 {
        for i in 1..=n {
            let rep = verify_shift_zigzag(n, i).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn j_generator_images() {
    let sl2 = j_to_current(1, 1);
    let quarter = rat(1, 4);
    let anti = &(&x_plus0(1) * &xi(1, 0)) + &(&xi(1, 0) * &x_plus0(1));
    assert_eq!(sl2, &x_plus(1, 1) - &anti.scale(&quarter));
    // Two positive and two negative quadratic terms for n = 2, i = 1.
    let sl3 = j_to_current(1, 2);
    let quad: Vec<_> = sl3.terms().filter(|(w, _)| w.len() == 2).collect();
    assert_eq!(quad.iter().filter(|(_, c)| **c > rat_int(0)).count(), 2);
    assert_eq!(quad.iter().filter(|(_, c)| **c < rat_int(0)).count(), 2);
}
