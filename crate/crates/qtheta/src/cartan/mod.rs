//! Commutative truncated series over the Cartan currents: the GKLO series
//! `A_i(z)`, the S-series, and on the quantum side `h_{i,-s}` and `T_i(z)`.

mod poly;
mod series;

pub use poly::{Accumulator, CommPoly, Monomial};
pub use series::{binom_neg, shift_series, SeriesZ, Var};

use crate::linalg::mat_inverse;
use crate::ncalg::Gen;
use crate::report::{Check, Report};
use crate::scalars::{cartan_matrix_a, q_bracket, q_minus_qinv, quantum_cartan_inverse, rat, rat_int, RatFuncQ, Rational};

pub type YPoly = CommPoly<Rational>;
pub type QPoly = CommPoly<RatFuncQ>;

/// `xi_i(z) = 1 + sum_{m < M} xi_{i,m} z^{-m-1}`.
pub fn xi_series(i: usize, order: usize) -> SeriesZ<Rational> {
    let mut s = SeriesZ::one(Var::ZInv, order);
    for m in 0..order {
        s.set(m + 1, CommPoly::var(Gen::Xi(i as u8, m as i8)));
    }
    s
}

/// Coefficients `a_{i,m}` of `A_i(z) = exp(sum_m a_{i,m} z^{-m-1})`.
#[derive(Clone, Debug)]
pub struct GkloSolution {
    pub n: usize,
    pub order: usize,
    /// `a[i-1][m]`.
    pub a: Vec<Vec<YPoly>>,
}

impl GkloSolution {
    pub fn coeff(&self, i: usize, m: usize) -> &YPoly {
        &self.a[i - 1][m]
    }

    /// `l_i(z) = log A_i(z)`; zero for `i` outside `1..=n`.
    pub fn log_series(&self, i: usize) -> SeriesZ<Rational> {
        let mut s = SeriesZ::zero(Var::ZInv, self.order);
        if (1..=self.n).contains(&i) {
            for (m, c) in self.a[i - 1].iter().enumerate() {
                s.set(m + 1, c.clone());
            }
        }
        s
    }

    pub fn a_series(&self, i: usize) -> SeriesZ<Rational> {
        self.log_series(i).exp()
    }
}

/// Coefficient of `z^{-k}` in `l(z + c)` where `l = sum_m coeffs[m] z^{-m-1}`.
fn shifted_coeff(coeffs: &[YPoly], k: usize, c: &Rational) -> YPoly {
    let mut out = CommPoly::zero();
    for (m, a) in coeffs.iter().enumerate() {
        let p = m + 1;
        if p > k || a.is_zero() {
            continue;
        }
        let j = k - p;
        let f = binom_neg(p, j) * num_traits::pow(c.clone(), j);
        out = &out + &a.scale(&f);
    }
    out
}

/// Solves `log xi_i(z) = l_{i-1}(z-1/2) + l_{i+1}(z-1/2) - l_i(z) - l_i(z-1)`
/// order by order; `A_j = 1` for `j` outside `1..=n`.
pub fn solve_gklo(n: usize, order: usize) -> GkloSolution {
    assert!(n >= 1 && order >= 1);
    let c = cartan_matrix_a(n);
    let neg_c: Vec<Vec<Rational>> = c.iter().map(|r| r.iter().map(|&x| rat_int(-x)).collect()).collect();
    let inv = mat_inverse(&neg_c).expect("type A Cartan matrix is invertible");
    let logs: Vec<SeriesZ<Rational>> = (1..=n).map(|i| xi_series(i, order).log()).collect();
    let half = rat(-1, 2);
    let minus_one = rat_int(-1);
    let mut a: Vec<Vec<YPoly>> = vec![Vec::new(); n];
    for k in 1..=order {
        // Lower-order contributions with a_{., k-1} still absent.
        let lower: Vec<YPoly> = (1..=n)
            .map(|i| {
                let mut s = &shifted_coeff(&a[i - 1], k, &rat_int(0)) + &shifted_coeff(&a[i - 1], k, &minus_one);
                s = -&s;
                if i > 1 {
                    s = &s + &shifted_coeff(&a[i - 2], k, &half);
                }
                if i < n {
                    s = &s + &shifted_coeff(&a[i], k, &half);
                }
                s
            })
            .collect();
        let rhs: Vec<YPoly> = (0..n).map(|i| logs[i].coeff(k) - &lower[i]).collect();
        for i in 0..n {
            let mut v = CommPoly::zero();
            for j in 0..n {
                v = &v + &rhs[j].scale(&inv[i][j]);
            }
            a[i].push(v);
        }
    }
    GkloSolution { n, order, a }
}

/// `xi_i(z) A_i(z) A_i(z-1) / (A_{i-1}(z-1/2) A_{i+1}(z-1/2)) - 1`, as a
/// product of expanded series.
pub fn gklo_residual(sol: &GkloSolution, i: usize) -> SeriesZ<Rational> {
    let m = sol.order;
    let half = rat(-1, 2);
    let a = sol.a_series(i);
    let mut prod = xi_series(i, m).mul(&a).mul(&shift_series(&a, &rat_int(-1)));
    for j in [i.wrapping_sub(1), i + 1] {
        if (1..=sol.n).contains(&j) {
            let inv = shift_series(&sol.log_series(j).neg(), &half).exp();
            prod = prod.mul(&inv);
        }
    }
    prod.sub(&SeriesZ::one(Var::ZInv, m))
}

/// `log S_i(z) = sum_{p >= 1} c_p z^{-p}` for every node.
#[derive(Clone, Debug)]
pub struct SSeries {
    pub order: usize,
    /// `log_s[i-1]`.
    pub log_s: Vec<SeriesZ<Rational>>,
    /// `z^{-1}` coefficient of the right-hand side per node; must vanish.
    pub solvability: Vec<YPoly>,
}

impl SSeries {
    pub fn s_series(&self, i: usize) -> SeriesZ<Rational> {
        self.log_s[i - 1].exp()
    }
}

/// `a_{i,0} sum_{k>0} (-z)^{-k}/k` truncated at the order.
fn correction(a0: &YPoly, order: usize) -> SeriesZ<Rational> {
    let mut s = SeriesZ::zero(Var::ZInv, order);
    for k in 1..=order {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        s.set(k, a0.scale(&rat(sign, k as i64)));
    }
    s
}

/// Solves `log S_i(z+1) - log S_i(z) = log A_i(z) + a_{i,0} sum (-z)^{-k}/k`.
/// The `z^{-p-1}` coefficient fixes `c_p`; `c_M` is beyond the truncation and
/// set to zero.
pub fn solve_s_series(gklo: &GkloSolution, order: usize) -> SSeries {
    assert!(order <= gklo.order, "GKLO solution is too short");
    let mut log_s = Vec::new();
    let mut solvability = Vec::new();
    for i in 1..=gklo.n {
        let mut l = gklo.log_series(i);
        l = SeriesZ::from_coeffs(Var::ZInv, order, l.coeffs().to_vec());
        let rhs = l.add(&correction(gklo.coeff(i, 0), order));
        solvability.push(rhs.coeff(1).clone());
        let mut c: Vec<YPoly> = vec![CommPoly::zero(); order + 1];
        for p in 1..order {
            let mut v = rhs.coeff(p + 1).clone();
            for (pp, cp) in c.iter().enumerate().take(p).skip(1) {
                v = &v - &cp.scale(&binom_neg(pp, p + 1 - pp));
            }
            c[p] = v.scale(&rat(-1, p as i64));
        }
        log_s.push(SeriesZ::from_coeffs(Var::ZInv, order, c));
    }
    SSeries { order, log_s, solvability }
}

/// `S_i(z+1) - S_i(z) A_i(z) exp(a_{i,0} sum (-z)^{-k}/k)`, as a product of
/// expanded series. The last two factors commute and are exponentiated together.
pub fn s_series_residual(gklo: &GkloSolution, s: &SSeries, i: usize) -> SeriesZ<Rational> {
    let m = s.order;
    let si = s.s_series(i);
    let l = SeriesZ::from_coeffs(Var::ZInv, m, gklo.log_series(i).coeffs().to_vec());
    let ae = l.add(&correction(gklo.coeff(i, 0), m)).exp();
    shift_series(&si, &rat_int(1)).sub(&si.mul(&ae))
}

/// `log S_i(z+1) - log S_i(z) - log A_i(z) - a_{i,0} sum (-z)^{-k}/k`.
pub fn s_series_log_residual(gklo: &GkloSolution, s: &SSeries, i: usize) -> SeriesZ<Rational> {
    let m = s.order;
    let log_s = &s.log_s[i - 1];
    let l = SeriesZ::from_coeffs(Var::ZInv, m, gklo.log_series(i).coeffs().to_vec());
    shift_series(log_s, &rat_int(1)).sub(log_s).sub(&l).sub(&correction(gklo.coeff(i, 0), m))
}

/// `phi^-_i(z) = sum_{s <= M} phi^-_{i,-s} z^{-s}`.
pub fn phi_minus_series(i: usize, order: usize) -> SeriesZ<RatFuncQ> {
    let mut s = SeriesZ::zero(Var::ZInv, order);
    for t in 0..=order {
        s.set(t, CommPoly::var(Gen::PhiMinus(i as u8, -(t as i8))));
    }
    s
}

/// `phi^+_{i,0} = (phi^-_{i,0})^{-1}`.
pub fn phi_plus0(i: usize) -> QPoly {
    CommPoly::var_pow(Gen::PhiMinus(i as u8, 0), -1)
}

/// `h_{i,-s}` for `1 <= s <= M` from
/// `phi^-_i(z) = phi^-_{i,0} exp(-(q - q^{-1}) sum_s h_{i,-s} z^{-s})`.
/// Entry `s - 1` of the result.
pub fn extract_h_from_phi(i: usize, order: usize) -> Vec<QPoly> {
    let normalized = phi_minus_series(i, order).mul(&SeriesZ::from_coeffs(Var::ZInv, order, vec![phi_plus0(i)]));
    let log = normalized.log();
    let f = RatFuncQ::from(q_minus_qinv()).inv().expect("q - q^-1 is nonzero");
    (1..=order).map(|s| log.coeff(s).scale(&-f.clone())).collect()
}

/// `phi^-_{i,0} exp(-(q - q^{-1}) sum_s h_s z^{-s})` with the given `h_s`.
pub fn phi_from_h(i: usize, h: &[QPoly]) -> SeriesZ<RatFuncQ> {
    let order = h.len();
    let k = -RatFuncQ::from(q_minus_qinv());
    let mut e = SeriesZ::zero(Var::ZInv, order);
    for (s, hs) in h.iter().enumerate() {
        e.set(s + 1, hs.scale(&k));
    }
    SeriesZ::from_coeffs(Var::ZInv, order, vec![CommPoly::var(Gen::PhiMinus(i as u8, 0))]).mul(&e.exp())
}

/// `T_i(z) = exp(sum_{s>0} sum_j C^{-1}_{ij}(q^s) h_{j,-s} z^s / [s]_q)` for
/// every node of type `A_n`.
pub fn t_series_coefficients(n: usize, order: usize) -> Vec<SeriesZ<RatFuncQ>> {
    let inverses: Vec<_> = (1..=order).map(|s| quantum_cartan_inverse(n, s as i64)).collect();
    (1..=n)
        .map(|i| {
            let mut e = SeriesZ::zero(Var::Z, order);
            for s in 1..=order {
                let bs = RatFuncQ::from(q_bracket(s as i64)).inv().expect("[s]_q is nonzero");
                let mut c = CommPoly::zero();
                for j in 1..=n {
                    let coeff = inverses[s - 1][i - 1][j - 1].clone() * bs.clone();
                    c = &c + &CommPoly::var(Gen::H(j as u8, -(s as i8))).scale(&coeff);
                }
                e.set(s, c);
            }
            e.exp()
        })
        .collect()
}

fn series_residual<S: crate::scalars::Coeff>(name: &str, s: &SeriesZ<S>) -> Check {
    Check::from_residual(name, s.term_count(), format!("order {}", s.order()))
}

fn poly_residual<S: crate::scalars::Coeff>(name: &str, p: &CommPoly<S>) -> Check {
    let detail = if p.is_zero() { "exact".to_string() } else { format!("residual {p}") };
    Check::from_residual(name, p.len(), detail)
}

/// GKLO solve plus multiplicative residual for every node.
pub fn verify_gklo(n: usize, order: usize) -> Report {
    let mut rep = Report::new("gklo").param("n", n).param("order", order);
    let sol = solve_gklo(n, order);
    for i in 1..=n {
        rep.push(series_residual(&format!("node {i}: xi_i A_i(z) A_i(z-1) / A_(i-1)(z-1/2) A_(i+1)(z-1/2) = 1"), &gklo_residual(&sol, i)));
    }
    if n == 1 {
        let x0 = CommPoly::var(Gen::Xi(1, 0));
        let expect0 = x0.scale(&rat(-1, 2));
        rep.push(poly_residual("a_{1,0} = -xi_{1,0}/2", &(sol.coeff(1, 0) - &expect0)));
        if order >= 2 {
            let x1 = CommPoly::var(Gen::Xi(1, 1));
            let expect1 = &(&x1.scale(&rat(-1, 2)) + &x0.pow(2).scale(&rat(1, 4))) + &x0.scale(&rat(1, 4));
            rep.push(poly_residual("a_{1,1} = -xi_{1,1}/2 + xi_{1,0}^2/4 + xi_{1,0}/4", &(sol.coeff(1, 1) - &expect1)));
        }
    }
    rep
}

/// S-series solvability and residual for every node.
pub fn verify_s_series(n: usize, order: usize) -> Report {
    let mut rep = Report::new("s-series").param("n", n).param("order", order);
    let gklo = solve_gklo(n, order);
    let s = solve_s_series(&gklo, order);
    for i in 1..=n {
        rep.push(poly_residual(&format!("node {i}: z^-1 coefficient of the right-hand side vanishes"), &s.solvability[i - 1]));
        rep.push(series_residual(&format!("node {i}: log S_i(z+1) - log S_i(z) = log A_i(z) + a_(i,0) sum (-z)^-k/k"), &s_series_log_residual(&gklo, &s, i)));
        rep.push(series_residual(&format!("node {i}: S_i(z+1) = S_i(z) A_i(z) exp(a_(i,0) sum (-z)^-k/k)"), &s_series_residual(&gklo, &s, i)));
        let si = s.s_series(i);
        rep.push(poly_residual(&format!("node {i}: S_i has constant term 1"), &(si.coeff(0) - &CommPoly::one())));
        if order >= 2 {
            let expect = &gklo.coeff(i, 1).scale(&rat_int(-1)) - &gklo.coeff(i, 0).scale(&rat(1, 2));
            rep.push(poly_residual(&format!("node {i}: c_1 = -a_(i,1) - a_(i,0)/2"), &(s.log_s[i - 1].coeff(1) - &expect)));
        }
    }
    rep
}

/// `h`-extraction round trip, `T_{i,1}` and the inversion `h <-> T` for `A_2`.
pub fn verify_quantum_cartan(order: usize) -> Report {
    let n = 2;
    let mut rep = Report::new("quantum-cartan").param("n", n).param("order", order);
    let qq = RatFuncQ::from(q_minus_qinv());
    for i in 1..=n {
        let h = extract_h_from_phi(i, order);
        let expect = (&CommPoly::var(Gen::PhiMinus(i as u8, -1)) * &phi_plus0(i)).scale(&-qq.inv().expect("nonzero"));
        rep.push(poly_residual(&format!("h_({i},-1) = -phi-_({i},-1) phi+_({i},0)/(q-q^-1)"), &(&h[0] - &expect)));
        rep.push(series_residual(&format!("node {i}: phi from extracted h reproduces phi-_{i}(z)"), &phi_from_h(i, &h).sub(&phi_minus_series(i, order))));
    }
    let t = t_series_coefficients(n, order);
    let b2 = RatFuncQ::from(q_bracket(2));
    let b3_inv = RatFuncQ::from(q_bracket(3)).inv().expect("nonzero");
    let h1 = CommPoly::var(Gen::H(1, -1));
    let h2 = CommPoly::var(Gen::H(2, -1));
    let expect = (&h1.scale(&b2) + &h2).scale(&b3_inv);
    rep.push(poly_residual("T_(1,1) = ([2] h_(1,-1) + h_(2,-1)) / [3]", &(t[0].coeff(1) - &expect)));
    let back = &t[0].coeff(1).scale(&b2) - t[1].coeff(1);
    rep.push(poly_residual("h_(1,-1) = [2] T_(1,1) - T_(2,1)", &(&back - &h1)));
    let back2 = &t[1].coeff(1).scale(&b2) - t[0].coeff(1);
    rep.push(poly_residual("h_(2,-1) = [2] T_(2,1) - T_(1,1)", &(&back2 - &h2)));
    let identity = &(&RatFuncQ::from(q_bracket(2)) * &RatFuncQ::from(q_bracket(2))) - &RatFuncQ::from_int(1);
    rep.push(Check::from_bool("[2]^2 - 1 = [3]", identity == RatFuncQ::from(q_bracket(3)), identity.to_string()));
    for s in 1..=order {
        let ok = crate::scalars::QCartan::new(n).is_consistent()
            && crate::linalg::mat_mul(&crate::scalars::quantum_cartan(n, s as i64), &quantum_cartan_inverse(n, s as i64))
                .iter()
                .enumerate()
                .all(|(a, row)| row.iter().enumerate().all(|(b, x)| *x == RatFuncQ::from_int(i64::from(a == b))));
        rep.push(Check::from_bool(format!("C(q^{s}) C^-1(q^{s}) = 1"), ok, "exact"));
    }
    for (i, ti) in t.iter().enumerate() {
        rep.push(poly_residual(&format!("T_{}(0) = 1", i + 1), &(ti.coeff(0) - &CommPoly::one())));
    }
    rep
}
