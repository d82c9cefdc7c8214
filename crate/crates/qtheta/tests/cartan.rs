use qtheta::cartan::*;
use qtheta::ncalg::Gen;
use qtheta::scalars::{q_bracket, quantum_cartan_inverse, rat, RatFuncQ};

fn v(g: Gen) -> YPoly {
    CommPoly::var(g)
}

#[test]
fn gklo_low_order_coefficients() {
    // l(z) + l(z-1) = -log xi(z), matched at z^-1 and z^-2.
    let sol = solve_gklo(1, 2);
    let x0 = v(Gen::Xi(1, 0));
    let x1 = v(Gen::Xi(1, 1));
    assert_eq!(*sol.coeff(1, 0), x0.scale(&rat(-1, 2)));
    let want = &(&x1.scale(&rat(-1, 2)) + &x0.pow(2).scale(&rat(1, 4))) + &x0.scale(&rat(1, 4));
    assert_eq!(*sol.coeff(1, 1), want);
}

#[test]
fn gklo_residual_vanishes() {
    for n in 1..=3 {
        let sol = solve_gklo(n, 6);
        for i in 1..=n {
            assert!(gklo_residual(&sol, i).is_zero(), "n={n} i={i}");
        }
    }
}

#[test]
fn gklo_coefficients_are_polynomial() {
    let sol = solve_gklo(3, 6);
    for row in &sol.a {
        for p in row {
            assert!(p.terms().all(|(m, _)| m.iter().all(|&(_, e)| e > 0)));
        }
    }
}

#[test]
fn perturbed_gklo_solution_fails() {
    let mut sol = solve_gklo(2, 4);
    sol.a[0][1] = &sol.a[0][1] + &CommPoly::constant(rat(1, 3));
    assert!(!gklo_residual(&sol, 1).is_zero());
}

#[test]
fn s_series() {
    for n in 1..=3 {
        let g = solve_gklo(n, 6);
        let s = solve_s_series(&g, 6);
        for i in 1..=n {
            assert!(s.solvability[i - 1].is_zero());
            assert!(s_series_residual(&g, &s, i).is_zero(), "n={n} i={i}");
            assert!(s_series_log_residual(&g, &s, i).is_zero());
        }
    }
}

#[test]
fn t_series_first_coefficient() {
    let t = t_series_coefficients(2, 2);
    let inv3 = RatFuncQ::from(q_bracket(3)).inv().unwrap();
    let b2 = RatFuncQ::from(q_bracket(2));
    let h = |i| CommPoly::var(Gen::H(i, -1));
    assert_eq!(*t[0].coeff(1), &h(1).scale(&(b2.clone() * inv3.clone())) + &h(2).scale(&inv3));
    assert_eq!(*t[1].coeff(1), &h(2).scale(&(b2 * inv3.clone())) + &h(1).scale(&inv3));
    // The coefficients are the first column of the inverse quantum Cartan matrix.
    let ci = quantum_cartan_inverse(2, 1);
    assert_eq!(t[0].coeff(1).coeff(&vec![(Gen::H(1, -1), 1)]), ci[0][0]);
}

#[test]
fn h_extraction_round_trip() {
    for i in 1..=2 {
        let h = extract_h_from_phi(i, 4);
        assert_eq!(phi_from_h(i, &h).sub(&phi_minus_series(i, 4)).is_zero(), true);
    }
}

#[test]
fn quantum_cartan_suite() {
    let rep = verify_quantum_cartan(3);
    assert!(rep.passed(), "{rep}");
}
