//! Type-A Yangian: `sl_{n+1}` rewriting with the `x^+_{i,1}` extension, the
//! closed-form Theta series and its verification, the recursive solver and
//! the shift zigzag identity.

mod rules;
mod solver;
mod theta;
mod zigzag;

pub use rules::{
    current_relations, diagonal_difference, elem, sl_bracket, sl_commutator_rules, sl_extended_rules, sl_order,
    x_plus, x_plus0, xi, xi_pairing,
};
pub use solver::{pbw_monomials, solve_theta_recursive, weights_of_height};
pub use theta::{
    intertwining_residuals, intertwining_source, j_to_current, quadratic_correction, theta_closed_form,
    theta_exponent, verify_intertwining, verify_lemma_commutators, ThetaSeries,
};
pub use zigzag::{coproduct_x1, shift_map, shifted_coproduct_x, verify_shift_zigzag};

use crate::ncalg::AlgebraError;
use crate::report::{tensor_residual, Check, Report};

/// Runs the solver and compares it with the closed form componentwise.
pub fn verify_solver(n: usize, i: usize, h: i32) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("yangian-solver").param("n", n).param("node", i).param("height", h);
    match solve_theta_recursive(n, i, h) {
        Ok(sol) => {
            rep.push(Check::pass("unique solutions", "every projected system has full column rank"));
            rep.push(Check::from_bool(
                "z-independent components",
                sol.is_z_independent(),
                format!("max z-degree {}", sol.body.max_z()),
            ));
            let closed = theta_closed_form(n, i, h);
            rep.push(tensor_residual("solver = closed form", &(&sol.body - &closed.body)));
        }
        Err(e) => rep.push(Check::fail("unique solutions", e.to_string(), 1)),
    }
    Ok(rep)
}

/// The full Yangian suite for one `(n, i, h)`.
pub fn verify_all(n: usize, i: usize, h: i32) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("yangian").param("n", n).param("node", i).param("height", h);
    rep.extend(verify_lemma_commutators(n, i, h)?);
    rep.extend(verify_intertwining(n, i, h)?);
    rep.extend(verify_solver(n, i, h)?);
    rep.extend(verify_shift_zigzag(n, i)?);
    Ok(rep)
}
