//! Cut-free backward proof search, proof checking and cut elimination for
//! the nine calculi of [`Theory`].

mod check;
mod context;
mod cut;
mod oracle;
mod proof;
mod search;

pub use check::{check_proof, is_valid_proof, CheckFailure};
pub use cut::eliminate_cuts;
pub use proof::{Certificate, Proof, Rule, UnknownRule};
pub use search::{Formulation, Prover, SearchOutcome, SearchStats};

use crate::lg_oracle::OracleError;
use crate::terms::{Sequent, Term, Theory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProverError {
    #[error("malformed sequent: {0}")]
    Malformed(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid proof file: {0}")]
    Json(String),
    #[error("ill-formed proof: {0}")]
    IllFormedProof(String),
    #[error("cut elimination is only implemented for calculi without exchange, not {0}")]
    Unsupported(Theory),
}

/// Shape and signature requirements of `th` on a sequent.
pub fn validate_sequent(s: &Sequent, th: Theory) -> Result<(), ProverError> {
    if !th.multi_conclusion() && s.right.len() != 1 {
        return Err(ProverError::Malformed(format!(
            "`{s}` needs exactly one succedent in {th}"
        )));
    }
    if let Some(t) = s.left.iter().chain(&s.right).find(|t| !t.in_signature(th)) {
        return Err(ProverError::Malformed(format!(
            "`{t}` is outside the signature of {th}"
        )));
    }
    Ok(())
}

/// Search with the certified-axiom formulation of the weakening rule.
pub fn search(s: &Sequent, th: Theory) -> Result<SearchOutcome, ProverError> {
    Prover::new(th).search(s)
}

/// Search with explicit certified deletions and plain axioms only.
pub fn search_lgw_explicit(s: &Sequent, th: Theory) -> Result<SearchOutcome, ProverError> {
    Prover::with_formulation(th, Formulation::ExplicitWeakening).search(s)
}

/// `s ≈ t` holds iff both `s => t` and `t => s` are derivable.
pub fn decide_equation(s: &Term, t: &Term, th: Theory) -> Result<bool, ProverError> {
    let prover = Prover::new(th);
    decide_equation_with(&prover, s, t)
}

pub fn decide_equation_with(prover: &Prover, s: &Term, t: &Term) -> Result<bool, ProverError> {
    Ok(
        prover.derivable(&Sequent::single(vec![s.clone()], t.clone()))?
            && prover.derivable(&Sequent::single(vec![t.clone()], s.clone()))?,
    )
}
