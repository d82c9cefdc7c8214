use crate::ncalg::{AlgebraError, Cap, Gen, GeneratorMap, NCElement, TensorElement};
use crate::report::{tensor_residual, Check, Report};
use crate::scalars::Rational;
use crate::{YElement, YTensor};

use super::rules::elem;

fn g(x: Gen) -> YElement {
    NCElement::gen(x)
}

fn pure(a: &YElement, b: &YElement) -> YTensor {
    TensorElement::pure(a, b, 0, Cap::None)
}

/// The shifted coproduct of `x^+_{i,0}`, reading the displayed triple tensor
/// as `x^+_{i,0} (x) 1 + 1 (x) x^+_{i,1}`.
pub fn shifted_coproduct_x(n: usize, i: usize) -> YTensor {
    let one = NCElement::one();
    let iu = i as u8;
    let mut t = &pure(&g(Gen::XPlus(iu, 0)), &one) + &pure(&one, &g(Gen::XPlus(iu, 1)));
    t = &t + &pure(&g(Gen::Xi(iu, -1)), &g(Gen::XPlus(iu, 0)));
    for j in 1..i {
        t = &t + &pure(&elem(i, j), &elem(j, i + 1));
    }
    for k in i + 2..=n + 1 {
        t = &t - &pure(&elem(k, i + 1), &elem(i, k));
    }
    t
}

/// The quoted coproduct of `x^+_{i,1}` with the first sum running to `upper`.
pub fn coproduct_x1(i: usize, upper: usize) -> YTensor {
    let one = NCElement::one();
    let iu = i as u8;
    let mut t = &pure(&g(Gen::XPlus(iu, 1)), &one) + &pure(&one, &g(Gen::XPlus(iu, 1)));
    t = &t + &pure(&g(Gen::Xi(iu, 0)), &g(Gen::XPlus(iu, 0)));
    for j in i + 2..=upper {
        t = &t - &pure(&elem(j, i + 1), &elem(i, j));
    }
    for k in 1..i {
        t = &t + &pure(&elem(i, k), &elem(k, i + 1));
    }
    t
}

/// The shift morphism raising the modes of node `i` by one, on the letters
/// that occur in the shifted coproduct.
pub fn shift_map(n: usize, i: usize) -> GeneratorMap<Rational> {
    let mut m = GeneratorMap::new(false, false);
    let iu = i as u8;
    m.set(Gen::XPlus(iu, 0), g(Gen::XPlus(iu, 1)));
    m.set(Gen::Xi(iu, -1), g(Gen::Xi(iu, 0)));
    for j in 1..=n + 1 {
        for k in 1..=n + 1 {
            let e = Gen::Elem(j as u8, k as u8);
            if j != k && e.weight().0[i] == 0 {
                m.set(e, g(e));
            }
        }
    }
    m
}

/// Applies the shift to the left factor of the shifted coproduct and compares
/// with the quoted coproduct of `x^+_{i,1}` (sum bound `n+1`). The mismatch
/// under the bound `n` is reported in the detail of an informational check.
pub fn verify_shift_zigzag(n: usize, i: usize) -> Result<Report, AlgebraError> {
    assert!((1..=n).contains(&i));
    let mut rep = Report::new("yangian-zigzag").param("n", n).param("node", i);
    let shift = shift_map(n, i);
    let claimed = shifted_coproduct_x(n, i);
    let shifted = claimed.map_factors(|w| shift.apply_word(w), |w| Ok::<_, AlgebraError>(NCElement::word(w)))?;
    let target = coproduct_x1(i, n + 1);
    rep.push(tensor_residual("shifted Delta(x+_{i,0}) = Delta(x+_{i,1}), sum to n+1", &(&shifted - &target)));
    let alt = &shifted - &coproduct_x1(i, n);
    rep.push(Check::pass(
        "sum bound n reading",
        format!("{} mismatching terms if the first sum stops at n", alt.len()),
    ));
    let xi_img = shift.apply(&g(Gen::Xi(i as u8, -1)))?;
    rep.push(Check::from_bool("xi_{i,-1} -> xi_{i,0}", xi_img == g(Gen::Xi(i as u8, 0)), xi_img.to_string()));
    rep.push(Check::pass(
        "triple tensor reading",
        "displayed x+_{i,0} (x) 1 (x) x+_{i,1} read as x+_{i,0} (x) 1 + 1 (x) x+_{i,1}",
    ));
    Ok(rep)
}
