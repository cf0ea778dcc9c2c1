//! Validity in all abelian ℓ-groups.
//!
//! Words of the ℓ-group normal form collapse to integer linear forms. A meet
//! `∧_j c_j ≤ 0` holds in every abelian ℓ-group iff it holds over the
//! rationals, i.e. iff the strict system `{c_j > 0}` has no solution.

mod fourier_motzkin;
mod integer;
mod linear;

pub use fourier_motzkin::{strict_infeasible, StrictSystem};
pub use integer::{
    eval_integer, refute_integer, refute_sequent_integer, IntValuation, GRID_MAX_VARS, GRID_RADIUS,
};
pub use linear::LinearForm;

pub use crate::lg_oracle::OracleError;
use crate::lg_oracle::{normal_form, Dnf, DEFAULT_WORD_CAP};
use crate::terms::{replace_f_with_e, Sequent, Term};

/// Join-of-meets of linear forms equal to `t` in every abelian ℓ-group.
pub fn abelianize(t: &Term) -> Result<Dnf<LinearForm>, OracleError> {
    abelianize_capped(t, DEFAULT_WORD_CAP)
}

pub fn abelianize_capped(t: &Term, cap: usize) -> Result<Dnf<LinearForm>, OracleError> {
    normal_form::<LinearForm>(t, false, cap)
}

pub fn ablg_valid_leq_e(t: &Term) -> Result<bool, OracleError> {
    ablg_valid_leq_e_capped(t, DEFAULT_WORD_CAP)
}

pub fn ablg_valid_leq_e_capped(t: &Term, cap: usize) -> Result<bool, OracleError> {
    for block in abelianize_capped(t, cap)?.joinands {
        if !strict_infeasible(&StrictSystem::new(block))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `product(left) · (product(right) \ e)`, after `f ↦ e`.
pub fn sequent_to_leq_e(s: &Sequent) -> Term {
    let lhs = Term::product(&s.left);
    let rhs = Term::product(&s.right);
    let t = match rhs {
        Term::E => lhs,
        rhs => Term::fuse(lhs, Term::tilde(rhs)),
    };
    replace_f_with_e(&t)
}

/// Single- or multiple-conclusion validity; with `f ↦ e` both the empty sum
/// and `+` become the monoid operations.
pub fn ablg_valid_sequent(s: &Sequent) -> Result<bool, OracleError> {
    ablg_valid_leq_e(&sequent_to_leq_e(s))
}
