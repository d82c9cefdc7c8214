use num_traits::{One, Zero};
use proptest::prelude::*;
use qtheta::scalars::*;

fn lq(terms: &[(i64, i64)]) -> LaurentQ {
    LaurentQ::from_terms(terms.iter().map(|&(e, c)| (e, rat_int(c))))
}

fn rf(x: LaurentQ) -> RatFuncQ {
    RatFuncQ::from_laurent(x)
}

#[test]
fn q_numbers() {
    assert_eq!(q_bracket(1), LaurentQ::one());
    assert_eq!(q_bracket(2), lq(&[(1, 1), (-1, 1)]));
    assert_eq!(&q_bracket(2) * &q_bracket(2) - LaurentQ::one(), q_bracket(3));
    assert_eq!(q_round(3), lq(&[(0, 1), (2, 1), (4, 1)]));
    assert_eq!(q_round_factorial(2), lq(&[(0, 1), (2, 1)]));
}

#[test]
fn rational_function_cancellation() {
    let a = RatFuncQ::new(lq(&[(2, 1), (0, -1)]), lq(&[(1, 1), (0, -1)])).unwrap();
    assert_eq!(a, rf(lq(&[(1, 1), (0, 1)])));
    let b = RatFuncQ::from(q_minus_qinv()) * RatFuncQ::from(q_bracket(2)) / RatFuncQ::from(q_minus_qinv());
    assert_eq!(b, RatFuncQ::from(q_bracket(2)));
    let c = RatFuncQ::new(lq(&[(3, 1), (-3, -1)]), q_minus_qinv()).unwrap();
    assert_eq!(c, RatFuncQ::from(q_bracket(3)));
    assert!(RatFuncQ::new(LaurentQ::one(), LaurentQ::zero()).is_err());
}

#[test]
fn quantum_cartan_inverse_examples() {
    let b2 = RatFuncQ::from(q_bracket(2));
    let inv3 = RatFuncQ::from(q_bracket(3)).inv().unwrap();
    let want = vec![vec![b2.clone() * inv3.clone(), inv3.clone()], vec![inv3.clone(), b2.clone() * inv3.clone()]];
    assert_eq!(quantum_cartan_inverse(2, 1), want);
    assert_eq!(quantum_cartan_inverse(1, 1), vec![vec![b2.inv().unwrap()]]);
}

#[test]
fn quantum_cartan_inverse_is_inverse() {
    for n in 1..=4 {
        for s in 1..=3 {
            let c = quantum_cartan(n, s);
            let ci = quantum_cartan_inverse(n, s);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = RatFuncQ::from_int(0);
                    for k in 0..n {
                        acc = acc + c[i][k].clone() * ci[k][j].clone();
                    }
                    assert_eq!(acc, RatFuncQ::from_int(i64::from(i == j)), "n={n} s={s} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn q_number_conventions() {
    for m in -20..=20i64 {
        assert_eq!(q_bracket(-m), -q_bracket(m));
        assert_eq!(q_bracket(m).eval_at_one(), rat_int(m));
    }
    for m in 1..=20i64 {
        assert_eq!(q_round(m), q_bracket(m).shift(m - 1), "m={m}");
    }
    for m in 0..=10i64 {
        for k in 0..=m as u32 {
            // The q-binomial is a Laurent polynomial and recovers the binomial at q = 1.
            let b = q_binomial(m, k);
            let exact: i64 = (0..k as i64).fold(1, |acc, j| acc * (m - j) / (j + 1));
            assert_eq!(b.eval_at_one(), rat_int(exact));
        }
    }
}

#[test]
fn exp_q_coefficients() {
    assert_eq!(exp_q_coefficient(0), RatFuncQ::from_int(1));
    let qq = RatFuncQ::from(q_minus_qinv());
    assert_eq!(exp_q_coefficient(2), qq.clone() * qq / RatFuncQ::from(q_round_factorial(2)));
}

fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..4).prop_map(|t| lq(&t))
}

fn ratfunc() -> impl Strategy<Value = RatFuncQ> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| RatFuncQ::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() - a.clone(), RatFuncQ::from_int(0));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), RatFuncQ::from_int(1));
        }
    }

    #[test]
    fn canonical_form(a in ratfunc()) {
        prop_assert_eq!(a.normalize(), a.clone());
        prop_assert_eq!(a.bar().bar(), a.clone());
        let rebuilt = RatFuncQ::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn bar_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!((a.clone() * b.clone()).bar(), a.bar() * b.bar());
    }

    #[test]
    fn rational_fast_path(a in any::<i64>(), b in 1..i64::MAX, c in any::<i64>(), d in 1..i64::MAX, big in any::<bool>()) {
        let x = rat(a, b);
        // Push one operand past i64 to exercise the fallback.
        let y = if big { rat(c, d) * rat_int(i64::MAX) * rat_int(3) } else { rat(c, d) };
        prop_assert_eq!(x.mul_ref(&y), x.clone() * y.clone());
        prop_assert_eq!(x.add_ref(&y), x.clone() + y.clone());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }
}
