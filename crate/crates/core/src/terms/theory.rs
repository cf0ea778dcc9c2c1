use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The nine calculi the prover runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theory {
    /// Residuated lattices.
    Rl,
    /// Integral residuated lattices (RL plus unrestricted weakening).
    Irl,
    /// Integrally closed residuated lattices.
    Icrl,
    /// Commutative integrally closed residuated lattices.
    Cicrl,
    /// Semi-integral residuated pomonoids (m-sequents).
    Sirm,
    /// Pseudo BCI-algebras (m-sequents without `*`).
    PseudoBci,
    /// Commutative sirmonoids.
    Sircom,
    /// BCI-algebras.
    Bci,
    /// Casari algebras (pointed, multiple-conclusion).
    Ca,
}

/// Which validity oracle backs a theory's weakening side-condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OracleKind {
    #[serde(rename = "LG")]
    Lg,
    #[serde(rename = "AbLG")]
    AbLg,
}

impl OracleKind {
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Lg => "LG",
            OracleKind::AbLg => "AbLG",
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OracleKind {
    type Err = UnknownTheory;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lg" => Ok(OracleKind::Lg),
            "ablg" => Ok(OracleKind::AbLg),
            _ => Err(UnknownTheory(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TermSignature {
    Full,
    Monoid,
    Residual,
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("unknown theory `{0}` (expected one of rl, irl, icrl, cicrl, sirm, pbci, sircom, bci, ca)")]
pub struct UnknownTheory(pub String);

impl Theory {
    pub const ALL: [Theory; 9] = [
        Theory::Rl,
        Theory::Irl,
        Theory::Icrl,
        Theory::Cicrl,
        Theory::Sirm,
        Theory::PseudoBci,
        Theory::Sircom,
        Theory::Bci,
        Theory::Ca,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Rl => "rl",
            Theory::Irl => "irl",
            Theory::Icrl => "icrl",
            Theory::Cicrl => "cicrl",
            Theory::Sirm => "sirm",
            Theory::PseudoBci => "pbci",
            Theory::Sircom => "sircom",
            Theory::Bci => "bci",
            Theory::Ca => "ca",
        }
    }

    /// `f` is part of the signature.
    pub fn pointed(self) -> bool {
        matches!(self, Theory::Ca)
    }

    /// Exchange is available; left (and in CA right) contexts are multisets.
    pub fn exchange(self) -> bool {
        matches!(
            self,
            Theory::Cicrl | Theory::Sircom | Theory::Bci | Theory::Ca
        )
    }

    pub fn oracle(self) -> Option<OracleKind> {
        match self {
            Theory::Rl | Theory::Irl => None,
            Theory::Icrl | Theory::Sirm | Theory::PseudoBci => Some(OracleKind::Lg),
            Theory::Cicrl | Theory::Sircom | Theory::Bci | Theory::Ca => Some(OracleKind::AbLg),
        }
    }

    /// Terms are restricted to the monoid-residual fragment.
    pub fn m_sequents(self) -> bool {
        matches!(
            self,
            Theory::Sirm | Theory::PseudoBci | Theory::Sircom | Theory::Bci
        )
    }

    pub fn multi_conclusion(self) -> bool {
        matches!(self, Theory::Ca)
    }

    /// Integrality through the unrestricted weakening rule.
    pub fn weakening(self) -> bool {
        matches!(self, Theory::Irl)
    }

    pub fn has_lattice(self) -> bool {
        !self.m_sequents()
    }

    pub fn has_fuse(self) -> bool {
        !matches!(self, Theory::PseudoBci | Theory::Bci)
    }

    pub(crate) fn term_signature(self) -> TermSignature {
        if !self.m_sequents() {
            TermSignature::Full
        } else if self.has_fuse() {
            TermSignature::Monoid
        } else {
            TermSignature::Residual
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = UnknownTheory;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = match s.to_ascii_lowercase().as_str() {
            "rl" => Theory::Rl,
            "irl" => Theory::Irl,
            "icrl" => Theory::Icrl,
            "cicrl" => Theory::Cicrl,
            "sirm" => Theory::Sirm,
            "pbci" | "pseudobci" => Theory::PseudoBci,
            "sircom" => Theory::Sircom,
            "bci" => Theory::Bci,
            "ca" => Theory::Ca,
            _ => return Err(UnknownTheory(s.to_string())),
        };
        Ok(t)
    }
}
