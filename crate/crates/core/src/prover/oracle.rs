use dashmap::DashMap;

use crate::ablg_oracle::{self, ablg_valid_leq_e_capped};
use crate::lg_oracle::{self, lg_valid_leq_e_capped, OracleError};
use crate::terms::{OracleKind, Sequent};

/// Validity of a side-condition sequent under one oracle.
pub(crate) fn oracle_valid(kind: OracleKind, s: &Sequent, cap: usize) -> Result<bool, OracleError> {
    match kind {
        OracleKind::Lg => lg_valid_leq_e_capped(&lg_oracle::sequent_to_leq_e(s)?, cap),
        OracleKind::AbLg => ablg_valid_leq_e_capped(&ablg_oracle::sequent_to_leq_e(s), cap),
    }
}

/// Memoised side-condition queries for one theory.
pub(crate) struct OracleCache {
    kind: OracleKind,
    cap: usize,
    answers: DashMap<Sequent, bool>,
}

impl OracleCache {
    pub(crate) fn new(kind: OracleKind, cap: usize) -> OracleCache {
        OracleCache {
            kind,
            cap,
            answers: DashMap::new(),
        }
    }

    pub(crate) fn kind(&self) -> OracleKind {
        self.kind
    }

    pub(crate) fn valid(&self, s: &Sequent) -> Result<bool, OracleError> {
        // The abelian image ignores order on both sides.
        let key = match self.kind {
            OracleKind::AbLg => s.sorted(),
            OracleKind::Lg => s.clone(),
        };
        if let Some(v) = self.answers.get(&key) {
            return Ok(*v);
        }
        let v = oracle_valid(self.kind, &key, self.cap)?;
        self.answers.insert(key, v);
        Ok(v)
    }
}
