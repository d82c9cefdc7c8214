use crate::ncalg::{Gen, NCElement, RelationSet};
use crate::scalars::{rat, rat_int, Rational};
use crate::YElement;

/// PBW order: lowering `E_{kj}` < `xi` < raising `E_{jk}` < `x^+_{i,m}`.
pub fn sl_order(g: &Gen) -> i32 {
    match *g {
        Gen::XMinus(i, m) => 100 + 32 * i as i32 + m as i32 + 8,
        Gen::Elem(j, k) if j > k => 1000 + 16 * j as i32 + k as i32,
        Gen::Xi(l, p) => 3000 + 32 * l as i32 + p as i32 + 8,
        Gen::Elem(j, k) => 5000 + 16 * j as i32 + k as i32,
        Gen::XPlus(i, m) => 7000 + 32 * i as i32 + m as i32 + 8,
        _ => 0,
    }
}

pub fn elem(j: usize, k: usize) -> YElement {
    NCElement::gen(Gen::Elem(j as u8, k as u8))
}

pub fn xi(l: usize, p: i8) -> YElement {
    NCElement::gen(Gen::Xi(l as u8, p))
}

/// `x^+_{j,0}`, identified with `E_{j,j+1}`.
pub fn x_plus0(j: usize) -> YElement {
    elem(j, j + 1)
}

pub fn x_plus(j: usize, m: i8) -> YElement {
    NCElement::gen(Gen::XPlus(j as u8, m))
}

/// `E_{aa} - E_{bb}` written in the `xi_{l,0}`.
pub fn diagonal_difference(a: usize, b: usize) -> YElement {
    let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let mut out = NCElement::zero();
    for l in lo..hi {
        out.add_term(vec![Gen::Xi(l as u8, 0)], rat_int(s));
    }
    out
}

/// `[E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}` inside `sl_{n+1}`.
pub fn sl_bracket(a: usize, b: usize, c: usize, d: usize) -> YElement {
    match (b == c, d == a) {
        (true, true) => diagonal_difference(a, b),
        (true, false) => elem(a, d),
        (false, true) => -elem(c, b),
        (false, false) => NCElement::zero(),
    }
}

/// `<alpha_l^vee, eps_j - eps_k>`, the eigenvalue of `ad xi_{l,0}` on `E_{jk}`.
pub fn xi_pairing(l: usize, j: usize, k: usize) -> i64 {
    let d = |a: usize, b: usize| i64::from(a == b);
    d(j, l) - d(j, l + 1) - d(k, l) + d(k, l + 1)
}

fn elems(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for j in 1..=n + 1 {
        for k in 1..=n + 1 {
            if j != k {
                v.push((j, k));
            }
        }
    }
    v
}

/// Commutator rules of `U(sl_{n+1})` in the elementary matrices and `xi_{l,0}`.
pub fn sl_commutator_rules(n: usize) -> RelationSet<Rational> {
    assert!(n >= 1 && n + 1 < crate::ncalg::MAX_NODES, "rank out of range");
    let mut rs = RelationSet::new(&format!("sl{}", n + 1), sl_order);
    let mut letters: Vec<Gen> = elems(n).into_iter().map(|(j, k)| Gen::Elem(j as u8, k as u8)).collect();
    letters.extend((1..=n).map(|l| Gen::Xi(l as u8, 0)));
    for &g in &letters {
        for &h in &letters {
            if sl_order(&g) <= sl_order(&h) {
                continue;
            }
            // gh -> hg + [g, h]
            let br = bracket(g, h);
            rs.add_commutation(g, h, rat_int(1), br);
        }
    }
    rs
}

fn bracket(g: Gen, h: Gen) -> YElement {
    match (g, h) {
        (Gen::Elem(a, b), Gen::Elem(c, d)) => sl_bracket(a as usize, b as usize, c as usize, d as usize),
        (Gen::Xi(l, 0), Gen::Elem(j, k)) => elem(j as usize, k as usize)
            .scale(&rat_int(xi_pairing(l as usize, j as usize, k as usize))),
        (Gen::Elem(..), Gen::Xi(..)) => -bracket(h, g),
        (Gen::Xi(..), Gen::Xi(..)) => NCElement::zero(),
        _ => unreachable!("no bracket for {g}, {h}"),
    }
}

/// The `sl_{n+1}` rules extended by `x^+_{i,1}`, with
/// `[x^+_{i,1}, E_{jk}] = E_{ik} E_{j,i+1}` for `j <= i < k` and
/// `[xi_{l,0}, x^+_{i,1}] = c_{li} x^+_{i,1}`.
pub fn sl_extended_rules(n: usize, i: usize) -> RelationSet<Rational> {
    assert!((1..=n).contains(&i));
    let mut rs = sl_commutator_rules(n);
    rs.name = format!("sl{}+x{}", n + 1, i);
    let x = Gen::XPlus(i as u8, 1);
    for j in 1..=i {
        for k in i + 1..=n + 1 {
            let extra = &elem(i, k) * &elem(j, i + 1);
            rs.add_commutation(x, Gen::Elem(j as u8, k as u8), rat_int(1), extra);
        }
    }
    // x^+_{i,1} xi_{l,0} = xi_{l,0} x^+_{i,1} - c_{li} x^+_{i,1}.
    let cartan = crate::scalars::cartan_matrix_a(n);
    for l in 1..=n {
        let c = cartan[l - 1][i - 1];
        let extra = NCElement::gen(x).scale(&rat_int(-c));
        rs.add_commutation(x, Gen::Xi(l as u8, 0), rat_int(1), extra);
    }
    rs
}

/// Defining relations of the current presentation with all modes at most
/// `window`, as unoriented ideal generators.
pub fn current_relations(n: usize, window: i8) -> RelationSet<Rational> {
    let cartan = crate::scalars::cartan_matrix_a(n);
    let mut rs = RelationSet::new(&format!("Y(sl{}) modes<={window}", n + 1), |_| 0);
    let g = NCElement::gen;
    let half = |c: i64, sign: i64| rat(sign * c, 2);
    for i in 1..=n {
        for j in 1..=n {
            let c = cartan[i - 1][j - 1];
            let (iu, ju) = (i as u8, j as u8);
            for p in 0..=window {
                for m in 0..=window {
                    if (i, p) < (j, m) {
                        rs.ideal_generators.push(NCElement::commutator(&g(Gen::Xi(iu, p)), &g(Gen::Xi(ju, m))));
                    }
                    if p + m <= window {
                        let mut r = NCElement::commutator(&g(Gen::XPlus(iu, p)), &g(Gen::XMinus(ju, m)));
                        if i == j {
                            r = &r - &g(Gen::Xi(iu, p + m));
                        }
                        rs.ideal_generators.push(r);
                    }
                    if p < window && m < window {
                        for (sign, xg) in [(1, Gen::XPlus as fn(u8, i8) -> Gen), (-1, Gen::XMinus)] {
                            let xi_m = g(Gen::Xi(iu, m));
                            let lhs = &NCElement::commutator(&g(Gen::Xi(iu, m + 1)), &g(xg(ju, p)))
                                - &NCElement::commutator(&xi_m, &g(xg(ju, p + 1)));
                            let sym = &(&xi_m * &g(xg(ju, p))) + &(&g(xg(ju, p)) * &xi_m);
                            rs.ideal_generators.push(&lhs - &sym.scale(&half(c, sign)));
                            let xa = g(xg(iu, m));
                            let xb = g(xg(ju, p));
                            let lhs = &NCElement::commutator(&g(xg(iu, m + 1)), &xb)
                                - &NCElement::commutator(&xa, &g(xg(ju, p + 1)));
                            let sym = &(&xa * &xb) + &(&xb * &xa);
                            rs.ideal_generators.push(&lhs - &sym.scale(&half(c, sign)));
                        }
                    }
                }
            }
            if i != j {
                for xg in [Gen::XPlus as fn(u8, i8) -> Gen, Gen::XMinus] {
                    let mut ad = g(xg(ju, 0));
                    for _ in 0..(1 - c) {
                        ad = NCElement::commutator(&g(xg(iu, 0)), &ad);
                    }
                    rs.ideal_generators.push(ad);
                }
            }
        }
    }
    rs.ideal_generators.retain(|r| !r.is_zero());
    rs
}
