//! Validity of `t ≤ e` in all lattice-ordered groups.
//!
//! A term is brought to join-of-meets form over free-group words. A meet
//! `∧_j w_j ≤ e` holds in every ℓ-group iff the identity lies in the
//! subsemigroup generated by the `w_j`; a join holds iff every joinand does.

mod automaton;
mod normal_form;
mod word;

pub use automaton::{bfs_identity_oracle, semigroup_contains_identity, WordAutomaton};
pub(crate) use normal_form::normal_form;
pub use normal_form::{
    to_gnf, to_gnf_capped, Dnf, GroupElement, GroupNormalForm, DEFAULT_WORD_CAP,
};
pub use word::{GroupWord, Letter};

use crate::terms::{Sequent, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("term `{0}` contains f; replace it first")]
    Pointed(String),
    #[error("normal form needs {words} words, above the cap of {cap}")]
    SizeCap { words: usize, cap: usize },
    #[error("sequent `{0}` needs exactly one succedent")]
    MultiConclusion(String),
    #[error("integer overflow while eliminating variables")]
    Overflow,
}

pub fn lg_valid_leq_e(t: &Term) -> Result<bool, OracleError> {
    lg_valid_leq_e_capped(t, DEFAULT_WORD_CAP)
}

pub fn lg_valid_leq_e_capped(t: &Term, cap: usize) -> Result<bool, OracleError> {
    let nf = to_gnf_capped(t, cap)?;
    Ok(nf
        .joinands
        .iter()
        .all(|block| semigroup_contains_identity(block)))
}

/// The term `product(left) · (u \ e)` whose `≤ e` validity decides `left ⇒ u`.
pub fn sequent_to_leq_e(s: &Sequent) -> Result<Term, OracleError> {
    let u = match s.right.as_slice() {
        [u] => u,
        _ => return Err(OracleError::MultiConclusion(s.to_string())),
    };
    let lhs = Term::product(&s.left);
    Ok(match u {
        Term::E => lhs,
        _ => Term::fuse(lhs, Term::tilde(u.clone())),
    })
}

pub fn lg_valid_sequent(s: &Sequent) -> Result<bool, OracleError> {
    lg_valid_leq_e(&sequent_to_leq_e(s)?)
}
