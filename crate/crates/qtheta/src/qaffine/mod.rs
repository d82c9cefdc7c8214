//! `U_q(sl_3^)` in the Drinfeld-Jimbo and Drinfeld presentations: relation
//! sets, the Beck dictionary, the automorphisms `Phi`, `Omega`, `psi`, the
//! braid group action and the root vectors `E_{beta_k}`, `F_{beta_k}`.

mod beck;
mod braid;
mod relations;
mod roots;

pub use beck::{beck_current, t_omega, x_minus_11, x_plus_1m1, BeckDictionary};
pub use braid::{
    braid_apply, braid_map, braid_word_apply, dj_letters, omega_map, permutation_map, phi_map, psi_map, psi_node,
    reflect, tau, BraidOp,
};
pub use relations::{
    cartan, dj_order, dj_relations, dminus, dplus, drinfeld_order, drinfeld_relations, e, f, k, k_root, k_word, phi,
    qcomm, qp, serre,
};
pub use roots::{
    braid_word, damiani_roots, iota, order_key, root_vector, root_vector_f, AffineRoot, DamianiData, RealRoot,
};

use crate::ncalg::{AlgebraError, Gen, NCElement, Normalizer, RelationSet};
use crate::report::{Check, Report};
use crate::scalars::RatFuncQ;
use crate::QElement;

/// Certifies identities `lhs = rhs` after expanding Drinfeld symbols,
/// by bounded ideal membership in the Drinfeld-Jimbo presentation.
pub struct DjCertifier<'a> {
    pub dict: BeckDictionary,
    nz: Normalizer<'a, RatFuncQ>,
}

impl<'a> DjCertifier<'a> {
    pub fn new(rules: &'a RelationSet<RatFuncQ>, bound: usize) -> Self {
        DjCertifier { dict: BeckDictionary::new(), nz: Normalizer::new(rules, bound) }
    }

    /// Normal form of `x` with Drinfeld symbols expanded.
    pub fn normal_form(&mut self, x: &QElement) -> Result<QElement, AlgebraError> {
        let y = self.dict.expand(x)?;
        self.nz.normal_form(&y)
    }

    pub fn check(&mut self, name: &str, lhs: &QElement, rhs: &QElement) -> Check {
        let diff = match self.dict.expand(&(lhs - rhs)) {
            Ok(d) => d,
            Err(err) => return Check::fail(name, err.to_string(), 1),
        };
        match self.nz.normal_form(&diff) {
            Ok(r) => Check::from_residual(name, r.len(), if r.is_zero() { String::new() } else { format!("residual {r}") }),
            Err(err) => Check::fail(name, err.to_string(), 1),
        }
    }
}

fn g(x: Gen) -> QElement {
    NCElement::gen(x)
}

/// Damiani roots in `k_min..=k_max` against the displayed values and the
/// partition into `m delta + alpha` (k <= 0) and `r delta - alpha` (k >= 1).
pub fn verify_damiani(k_min: i64, k_max: i64) -> Report {
    let mut rep = Report::new("qaffine-damiani").param("k_min", k_min).param("k_max", k_max);
    let d = damiani_roots(k_min, k_max);
    let expected = [
        (1, AffineRoot::new(1, -1, -1)),
        (2, AffineRoot::new(1, 0, -1)),
        (3, AffineRoot::new(2, -1, -1)),
        (4, AffineRoot::new(1, -1, 0)),
        (0, AffineRoot::new(0, 1, 0)),
        (-1, AffineRoot::new(0, 1, 1)),
        (-2, AffineRoot::new(0, 0, 1)),
    ];
    for (kk, want) in expected {
        if kk < k_min || kk > k_max {
            continue;
        }
        let got = d.root(kk);
        rep.push(Check::from_bool(format!("beta_{kk} = {want}"), got == want, format!("computed {got}")));
    }
    let mut bad = Vec::new();
    for (&kk, r) in &d.roots {
        let ok = match r.classify() {
            Some(RealRoot::Plus { m, .. }) => kk <= 0 && r.is_nonnegative() && r.delta_count() == m,
            Some(RealRoot::Minus { r: rr, .. }) => kk >= 1 && rr >= 1,
            None => false,
        };
        if !ok {
            bad.push(format!("beta_{kk} = {r}"));
        }
    }
    rep.push(Check::from_residual("k <= 0 gives m delta + alpha, k >= 1 gives r delta - alpha", bad.len(), bad.join(", ")));
    let mut distinct: Vec<AffineRoot> = d.roots.values().copied().collect();
    distinct.sort();
    distinct.dedup();
    rep.push(Check::from_bool("beta_k pairwise distinct", distinct.len() == d.roots.len(), format!("{} roots", d.roots.len())));
    let ordered = d.ordered();
    let ok = ordered.first() == Some(&1) && ordered.last() == Some(&0);
    rep.push(Check::from_bool("order starts at beta_1 and ends at beta_0", ok, String::new()));
    rep
}

/// The root-vector identities in terms of Drinfeld generators, certified
/// modulo the Drinfeld-Jimbo relations at `degree_bound`.
pub fn verify_root_vectors(degree_bound: usize) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("qaffine-roots").param("degree_bound", degree_bound as u64);
    let rules = dj_relations();
    let mut c = DjCertifier::new(&rules, degree_bound);
    let psi = psi_map();
    let omega = omega_map();
    let xp = |i: u8, m: i8| g(Gen::DPlus(i, m));
    let xm = |i: u8, m: i8| g(Gen::DMinus(i, m));
    let ki = |i: u8| k(i, true);

    rep.extend(verify_damiani(-8, 8));

    // Simple roots.
    let e_b0 = root_vector(0)?;
    rep.push(c.check("E_{a1} = E_{beta_0} = x+_{1,0}", &e_b0, &xp(1, 0)));
    rep.push(c.check("F_{a1} = x-_{1,0}", &root_vector_f(0)?, &xm(1, 0)));
    let e_a2 = root_vector(-2)?;
    rep.push(c.check("E_{a2} = T_1^-1 T_2^-1 (E_1) = E_2", &e_a2, &e(2)));
    rep.push(c.check("E_{a2} = x+_{2,0}", &e_a2, &xp(2, 0)));
    rep.push(c.check("F_{a2} = x-_{2,0}", &root_vector_f(-2)?, &xm(2, 0)));

    // alpha_1 + alpha_2.
    let e12 = root_vector(-1)?;
    let e12_words = &(&e(1) * &e(2)).scale(&qp(-1)) - &(&e(2) * &e(1));
    rep.push(c.check("E_{a1+a2} = T_1^-1(E_2) = q^-1 E1E2 - E2E1", &e12, &e12_words));
    rep.push(c.check("E_{a1+a2} = -[x+_{2,0}, x+_{1,0}]_{q^-1}", &e12, &-qcomm(&xp(2, 0), &xp(1, 0), -1)));
    let f12 = root_vector_f(-1)?;
    let f12_words = &(&f(2) * &f(1)).scale(&qp(1)) - &(&f(1) * &f(2));
    rep.push(c.check("F_{a1+a2} = q F2F1 - F1F2", &f12, &f12_words));
    rep.push(c.check("F_{a1+a2} = -[x-_{1,0}, x-_{2,0}]_q", &f12, &-qcomm(&xm(1, 0), &xm(2, 0), 1)));

    // alpha_0 = delta - alpha_1 - alpha_2 = beta_1.
    let e0 = root_vector(1)?;
    rep.push(c.check("E_{beta_1} = E_0", &e0, &e(0)));
    rep.push(c.check("E_0 = K_0 [x-_{1,1}, x-_{2,0}]_q", &e0, &(&k(0, false) * &qcomm(&xm(1, 1), &xm(2, 0), 1))));
    rep.push(c.check("E_0 = -K_0 [x-_{2,1}, x-_{1,0}]_q", &e0, &-(&k(0, false) * &qcomm(&xm(2, 1), &xm(1, 0), 1))));
    let f0 = root_vector_f(1)?;
    rep.push(c.check("F_0 = Omega(E_0) = [x+_{2,0}, x+_{1,-1}]_{q^-1} K_0^-1", &f0, &(&qcomm(&xp(2, 0), &xp(1, -1), -1) * &k(0, true))));

    // delta - alpha_1 = beta_4, delta - alpha_2 = beta_2.
    let ed1 = root_vector(4)?;
    rep.push(c.check("E_{d-a1} = T_0 T_1 T_2 (E_1) = -[E_0, E_2]_{q^-1}", &ed1, &-qcomm(&e(0), &e(2), -1)));
    rep.push(c.check("E_{d-a1} = -K_1^-1 x-_{1,1}", &ed1, &-(&ki(1) * &xm(1, 1))));
    let omega_xm = omega.apply(&x_minus_11())?;
    rep.push(c.check("Omega(x-_{1,1}) = F2F0K1^-1 - q F0F2K1^-1", &omega_xm, &(&(&(&f(2) * &f(0)) - &(&f(0) * &f(2)).scale(&qp(1))) * &ki(1))));
    rep.push(c.check("Omega(x-_{1,1}) = x+_{1,-1}", &omega_xm, &xp(1, -1)));
    let fd1 = root_vector_f(4)?;
    rep.push(c.check("F_{d-a1} = -x+_{1,-1} K_1", &fd1, &-(&xp(1, -1) * &k(1, false))));
    let ed2 = root_vector(2)?;
    rep.push(c.check("E_{d-a2} = psi(E_{d-a1})", &ed2, &psi.apply(&ed1)?));
    rep.push(c.check("E_{d-a2} = -K_2^-1 psi(x-_{1,1})", &ed2, &-(&ki(2) * &psi.apply(&x_minus_11())?)));
    rep.push(c.check("E_{d-a2} = K_2^-1 x-_{2,1} (sign o(2) = -1)", &ed2, &(&ki(2) * &xm(2, 1))));
    let fd2 = root_vector_f(2)?;
    rep.push(c.check("F_{d-a2} = psi(F_{d-a1})", &fd2, &psi.apply(&fd1)?));
    rep.push(c.check("F_{d-a2} = x+_{2,-1} K_2 (sign o(2) = -1)", &fd2, &(&xp(2, -1) * &k(2, false))));

    // The dictionary entries agree with Beck's braid-group definition.
    for i in 1..=2u8 {
        rep.push(c.check(&format!("x-_{{{i},1}} = o({i}) T_omega{i}(F_{i})"), &xm(i, 1), &beck_current(i, false, 1)?));
        rep.push(c.check(&format!("x+_{{{i},-1}} = o({i}) T_omega{i}(E_{i})"), &xp(i, -1), &beck_current(i, true, 1)?));
    }
    Ok(rep)
}

/// Automorphism and braid-action invariants.
pub fn verify_automorphisms(degree_bound: usize) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("qaffine-automorphisms").param("degree_bound", degree_bound as u64);
    let rules = dj_relations();
    let mut c = DjCertifier::new(&rules, degree_bound);
    let (phi_m, omega, psi) = (phi_map(), omega_map(), psi_map());
    let mut red = crate::ncalg::Reducer::new(&rules);
    let mut bad = [0usize; 4];
    for x in dj_letters() {
        let gx = g(x);
        bad[0] += (phi_m.apply(&phi_m.apply(&gx)?)? != gx) as usize;
        bad[1] += (omega.apply(&omega.apply(&gx)?)? != gx) as usize;
        bad[2] += (psi.apply(&psi.apply(&gx)?)? != gx) as usize;
        for i in 0..=2u8 {
            let lhs = psi.apply(&braid_apply(BraidOp::t(i), &gx)?)?;
            let rhs = braid_apply(BraidOp::t(psi_node(i)), &psi.apply(&gx)?)?;
            bad[3] += !red.reduce(&(&lhs - &rhs))?.is_zero() as usize;
        }
    }
    rep.push(Check::from_residual("Phi^2 = id on generators", bad[0], String::new()));
    rep.push(Check::from_residual("Omega^2 = id on generators", bad[1], String::new()));
    rep.push(Check::from_residual("psi^2 = id on generators", bad[2], String::new()));
    rep.push(Check::from_residual("psi T_i = T_psi(i) psi on generators", bad[3], String::new()));
    for i in 0..=2u8 {
        for x in dj_letters() {
            if matches!(x, Gen::K(0, _)) {
                continue;
            }
            let back = braid_apply(BraidOp::t_inv(i), &braid_apply(BraidOp::t(i), &g(x))?)?;
            rep.push(c.check(&format!("T_{i}^-1 T_{i} ({x}) = {x}"), &back, &g(x)));
            let fwd = braid_apply(BraidOp::t(i), &braid_apply(BraidOp::t_inv(i), &g(x))?)?;
            rep.push(c.check(&format!("T_{i} T_{i}^-1 ({x}) = {x}"), &fwd, &g(x)));
        }
    }
    for s in 1..=2u32 {
        let sign = RatFuncQ::from_int(if s % 2 == 0 { 1 } else { -1 });
        let lhs = psi.apply(&beck_current(1, true, s)?)?;
        let rhs = beck_current(2, true, s)?.scale(&sign);
        let r = red.reduce(&(&lhs - &rhs))?;
        rep.push(crate::report::element_residual(&format!("psi(x+_{{1,-{s}}}) = (-1)^{s} x+_{{2,-{s}}}"), &r));
    }
    Ok(rep)
}
