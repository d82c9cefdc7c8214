use crate::ncalg::{Gen, NCElement, RelationSet};
use crate::scalars::{inv_q_minus_qinv, q_bracket, RatFuncQ};
use crate::QElement;

/// Affine `A_2` Cartan matrix entry `a_{ij}`, nodes `0..=2`.
pub fn cartan(i: u8, j: u8) -> i64 {
    if i == j {
        2
    } else {
        -1
    }
}

pub fn qp(e: i64) -> RatFuncQ {
    RatFuncQ::q_pow(e)
}

pub fn e(i: u8) -> QElement {
    NCElement::gen(Gen::E(i))
}

pub fn f(i: u8) -> QElement {
    NCElement::gen(Gen::F(i))
}

/// `K_i^{+-1}`; `K_0^{+-1}` is kept as a letter and eliminated by the rules.
pub fn k(i: u8, inverse: bool) -> QElement {
    NCElement::gen(Gen::K(i, inverse))
}

/// `K_1^{a} K_2^{b}` as a word with inverses for negative exponents.
pub fn k_word(a: i64, b: i64) -> QElement {
    let mut w = Vec::new();
    for (i, e) in [(1u8, a), (2u8, b)] {
        for _ in 0..e.abs() {
            w.push(Gen::K(i, e < 0));
        }
    }
    NCElement::word(&w)
}

/// `K_beta` for `beta = c_0 alpha_0 + c_1 alpha_1 + c_2 alpha_2`, using `K_0 = K_1^{-1} K_2^{-1}`.
pub fn k_root(c: [i64; 3]) -> QElement {
    k_word(c[1] - c[0], c[2] - c[0])
}

pub fn dplus(i: u8, m: i8) -> QElement {
    NCElement::gen(Gen::DPlus(i, m))
}

pub fn dminus(i: u8, m: i8) -> QElement {
    NCElement::gen(Gen::DMinus(i, m))
}

/// `[a, b]_p = ab - p ba`.
pub fn qcomm(a: &QElement, b: &QElement, p: i64) -> QElement {
    NCElement::q_commutator(a, b, &qp(p))
}

/// `a^2 b - [2]_q a b a + b a^2`.
pub fn serre(a: &QElement, b: &QElement) -> QElement {
    let two = RatFuncQ::from(q_bracket(2));
    let aa = a * a;
    &(&(&aa * b) - &(&(a * b) * a).scale(&two)) + &(b * &aa)
}

/// `K`-letters have degree 0 for the ideal-closure bound.
pub fn graded_degree(g: &Gen) -> usize {
    usize::from(!matches!(g, Gen::K(..)))
}

fn k_rules(rs: &mut RelationSet<RatFuncQ>) {
    rs.letter_degree = graded_degree;
    let one = NCElement::one();
    for i in 1..=2u8 {
        rs.add_swap(Gen::K(i, false), Gen::K(i, true), one.clone());
        rs.add_swap(Gen::K(i, true), Gen::K(i, false), one.clone());
    }
    for a in [Gen::K(1, false), Gen::K(1, true)] {
        for b in [Gen::K(2, false), Gen::K(2, true)] {
            rs.add_swap(b, a, NCElement::word(&[a, b]));
        }
    }
    rs.letter_rules.insert(Gen::K(0, false), k_word(-1, -1));
    rs.letter_rules.insert(Gen::K(0, true), k_word(1, 1));
}

/// Normal order `F < K < E`; the `K_i` are sorted by node.
pub fn dj_order(g: &Gen) -> i32 {
    match *g {
        Gen::F(_) => 100,
        Gen::K(i, inv) => 500 + 2 * i as i32 + inv as i32,
        Gen::E(_) => 900,
        _ => 0,
    }
}

/// The Drinfeld-Jimbo presentation: K-moves and E-F crossings as rewrite
/// rules, quantum Serre elements as ideal generators.
pub fn dj_relations() -> RelationSet<RatFuncQ> {
    let mut rs = RelationSet::new("U_q(sl3^) Drinfeld-Jimbo", dj_order);
    k_rules(&mut rs);
    let inv = inv_q_minus_qinv();
    for i in 0..=2u8 {
        for j in 0..=2u8 {
            let c = cartan(i, j);
            // Only K_1, K_2 survive as letters.
            if i != 0 {
                rs.add_commutation(Gen::E(j), Gen::K(i, false), qp(-c), NCElement::zero());
                rs.add_commutation(Gen::E(j), Gen::K(i, true), qp(c), NCElement::zero());
                rs.add_commutation(Gen::K(i, false), Gen::F(j), qp(-c), NCElement::zero());
                rs.add_commutation(Gen::K(i, true), Gen::F(j), qp(c), NCElement::zero());
            }
            let extra = if i == j { (&k(i, false) - &k(i, true)).scale(&inv) } else { NCElement::zero() };
            rs.add_commutation(Gen::E(i), Gen::F(j), RatFuncQ::from_int(1), extra);
            if i != j {
                rs.ideal_generators.push(serre(&e(i), &e(j)));
                rs.ideal_generators.push(serre(&f(i), &f(j)));
            }
        }
    }
    rs
}

/// Drinfeld letters are mutually free; only the `K_i^{+-1}` are ordered, to the right.
pub fn drinfeld_order(g: &Gen) -> i32 {
    match *g {
        Gen::K(i, inv) => 500 + 2 * i as i32 + inv as i32,
        _ => 100,
    }
}

/// `phi^+_{i,m}` (`plus = true`) or `phi^-_{i,m}` with the vanishing and
/// degree-0 conventions applied.
pub fn phi(plus: bool, i: u8, m: i8) -> QElement {
    match (plus, m.signum()) {
        (_, 0) => k(i, !plus),
        (true, 1) => NCElement::gen(Gen::PhiPlus(i, m)),
        (false, -1) => NCElement::gen(Gen::PhiMinus(i, m)),
        _ => NCElement::zero(),
    }
}

/// Relations of the Drinfeld new realization with all modes in `[-window, window]`.
///
/// Conjugation by `K_i = phi^+_{i,0}` is oriented (K's move right); everything
/// else is an ideal generator.
pub fn drinfeld_relations(window: i8) -> RelationSet<RatFuncQ> {
    assert!(window >= 1, "window must be at least 1");
    let mut rs = RelationSet::new(&format!("U_q(sl3^) Drinfeld modes<={window}"), drinfeld_order);
    k_rules(&mut rs);
    let inv = inv_q_minus_qinv();
    let modes: Vec<i8> = (-window..=window).collect();
    let xg = |plus: bool| if plus { Gen::DPlus as fn(u8, i8) -> Gen } else { Gen::DMinus };
    let x = |plus: bool, i: u8, m: i8| NCElement::gen(xg(plus)(i, m));
    for kin in 1..=2u8 {
        for j in 1..=2u8 {
            let c = cartan(kin, j);
            for &m in &modes {
                for plus in [true, false] {
                    let s = if plus { c } else { -c };
                    rs.add_commutation(Gen::K(kin, false), xg(plus)(j, m), qp(s), NCElement::zero());
                    rs.add_commutation(Gen::K(kin, true), xg(plus)(j, m), qp(-s), NCElement::zero());
                }
            }
            for &m in &modes {
                for g in [Gen::PhiPlus(j, m), Gen::PhiMinus(j, m), Gen::H(j, m)] {
                    rs.add_commutation(Gen::K(kin, false), g, RatFuncQ::from_int(1), NCElement::zero());
                    rs.add_commutation(Gen::K(kin, true), g, RatFuncQ::from_int(1), NCElement::zero());
                }
            }
        }
    }
    let push = |rs: &mut RelationSet<RatFuncQ>, r: QElement| {
        if !r.is_zero() && !rs.ideal_generators.contains(&r) && !rs.ideal_generators.contains(&-&r) {
            rs.ideal_generators.push(r);
        }
    };
    for i in 1..=2u8 {
        for j in 1..=2u8 {
            let c = cartan(i, j);
            for &m in &modes {
                for &p in &modes {
                    for (ea, eb) in [(true, true), (true, false), (false, false)] {
                        if (i, m, ea) < (j, p, eb) || (ea != eb) {
                            push(&mut rs, NCElement::commutator(&phi(ea, i, m), &phi(eb, j, p)));
                        }
                    }
                    if m + p >= -window && m + p <= window {
                        let mut r = NCElement::commutator(&x(true, i, m), &x(false, j, p));
                        if i == j {
                            r = &r - &(&phi(true, i, m + p) - &phi(false, i, m + p)).scale(&inv);
                        }
                        push(&mut rs, r);
                    }
                    if m < window && p < window {
                        for plus in [true, false] {
                            let s = qp(if plus { c } else { -c });
                            for ep in [true, false] {
                                let (a1, a0) = (phi(ep, i, m + 1), phi(ep, i, m));
                                let (b0, b1) = (x(plus, j, p), x(plus, j, p + 1));
                                let lhs = &(&a1 * &b0) - &(&a0 * &b1).scale(&s);
                                let rhs = &(&b0 * &a1).scale(&s) - &(&b1 * &a0);
                                push(&mut rs, &lhs - &rhs);
                            }
                            let (a1, a0) = (x(plus, i, m + 1), x(plus, i, m));
                            let (b0, b1) = (x(plus, j, p), x(plus, j, p + 1));
                            let lhs = &(&a1 * &b0) - &(&a0 * &b1).scale(&s);
                            let rhs = &(&b0 * &a1).scale(&s) - &(&b1 * &a0);
                            push(&mut rs, &lhs - &rhs);
                        }
                    }
                }
            }
            if i != j {
                for plus in [true, false] {
                    push(&mut rs, serre(&x(plus, i, 0), &x(plus, j, 0)));
                }
            }
        }
    }
    // Generators are kept in rewritten form so K-letters sit on the right.
    let gens = std::mem::take(&mut rs.ideal_generators);
    let mut red = crate::ncalg::Reducer::new(&rs);
    let reduced: Vec<QElement> = gens.iter().map(|g| red.reduce(g).expect("Drinfeld rules are complete")).collect();
    rs.ideal_generators = reduced.into_iter().filter(|g| !g.is_zero()).collect();
    rs
}
