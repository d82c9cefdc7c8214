//! q-numbers, q-factorials and q-binomials.

use num_traits::One;

use super::laurent::LaurentQ;
use super::ratfunc::RatFuncQ;
use super::rat_int;

/// Symmetric q-number `[m]_q = (q^m - q^{-m})/(q - q^{-1})`.
pub fn q_bracket(m: i64) -> LaurentQ {
    if m < 0 {
        return -q_bracket(-m);
    }
    LaurentQ::from_terms((0..m).map(|k| (m - 1 - 2 * k, rat_int(1))))
}

/// `(m)_q = (q^{2m} - 1)/(q^2 - 1)`.
pub fn q_round(m: i64) -> LaurentQ {
    if m < 0 {
        return -(q_round(-m).shift(2 * m));
    }
    LaurentQ::from_terms((0..m).map(|k| (2 * k, rat_int(1))))
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_bracket_factorial(m: u32) -> LaurentQ {
    (1..=m as i64).fold(LaurentQ::one(), |acc, s| &acc * &q_bracket(s))
}

/// `(m)_q! = (1)_q (2)_q ... (m)_q`; the normalization of the q-exponential.
pub fn q_round_factorial(m: u32) -> LaurentQ {
    (1..=m as i64).fold(LaurentQ::one(), |acc, s| &acc * &q_round(s))
}

/// The product `[m]_q [m-1]_q ... [m-k+1]_q`.
pub fn q_falling(m: i64, k: u32) -> LaurentQ {
    (1..=k as i64).fold(LaurentQ::one(), |acc, s| &acc * &q_bracket(m - s + 1))
}

/// Gaussian binomial `q_falling(m, k) / [k]_q!`, which is always a Laurent polynomial.
pub fn q_binomial(m: i64, k: u32) -> LaurentQ {
    q_falling(m, k)
        .div_exact(&q_bracket_factorial(k))
        .expect("Gaussian binomial is a Laurent polynomial")
}

/// `q - q^{-1}`.
pub fn q_minus_qinv() -> LaurentQ {
    LaurentQ::q_pow(1) - LaurentQ::q_pow(-1)
}

/// `1/(q - q^{-1})`.
pub fn inv_q_minus_qinv() -> RatFuncQ {
    RatFuncQ::from(q_minus_qinv()).inv().unwrap()
}

/// `(q - q^{-1})^k / (k)_q!`, the coefficient of `g^k` in `exp_q((q - q^{-1}) g)`.
pub fn exp_q_coefficient(k: u32) -> RatFuncQ {
    let num = RatFuncQ::from(q_minus_qinv().pow(k));
    &num / &RatFuncQ::from(q_round_factorial(k))
}

