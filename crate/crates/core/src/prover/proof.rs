use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ProverError;
use crate::terms::{parse_sequent, OracleKind, Sequent, Theory};

/// Rule labels, written as in the textual proof format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Id,
    Cut,
    /// `e=>`
    ELeft,
    /// `=>e`
    ERight,
    RDivLeft,
    RDivRight,
    LDivLeft,
    LDivRight,
    FuseLeft,
    FuseRight,
    MeetLeft1,
    MeetLeft2,
    JoinRight1,
    JoinRight2,
    JoinLeft,
    MeetRight,
    LgW,
    AbLgW,
    /// Unrestricted weakening.
    W,
    ExchangeLeft,
    ExchangeRight,
    FLeft,
    FRight,
    ImpLeft,
    ImpRight,
    /// `Γ, u, Π => u` with a certified context.
    GenAxId,
    /// `Δ => e` with a certified context.
    GenAxE,
}

impl Rule {
    pub const ALL: [Rule; 27] = [
        Rule::Id,
        Rule::Cut,
        Rule::ELeft,
        Rule::ERight,
        Rule::RDivLeft,
        Rule::RDivRight,
        Rule::LDivLeft,
        Rule::LDivRight,
        Rule::FuseLeft,
        Rule::FuseRight,
        Rule::MeetLeft1,
        Rule::MeetLeft2,
        Rule::JoinRight1,
        Rule::JoinRight2,
        Rule::JoinLeft,
        Rule::MeetRight,
        Rule::LgW,
        Rule::AbLgW,
        Rule::W,
        Rule::ExchangeLeft,
        Rule::ExchangeRight,
        Rule::FLeft,
        Rule::FRight,
        Rule::ImpLeft,
        Rule::ImpRight,
        Rule::GenAxId,
        Rule::GenAxE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Id => "id",
            Rule::Cut => "cut",
            Rule::ELeft => "e=>",
            Rule::ERight => "=>e",
            Rule::RDivLeft => "/=>",
            Rule::RDivRight => "=>/",
            Rule::LDivLeft => "\\=>",
            Rule::LDivRight => "=>\\",
            Rule::FuseLeft => "*=>",
            Rule::FuseRight => "=>*",
            Rule::MeetLeft1 => "/\\=>1",
            Rule::MeetLeft2 => "/\\=>2",
            Rule::JoinRight1 => "=>\\/1",
            Rule::JoinRight2 => "=>\\/2",
            Rule::JoinLeft => "\\/=>",
            Rule::MeetRight => "=>/\\",
            Rule::LgW => "LG-w",
            Rule::AbLgW => "AbLG-w",
            Rule::W => "w",
            Rule::ExchangeLeft => "el",
            Rule::ExchangeRight => "er",
            Rule::FLeft => "f=>",
            Rule::FRight => "=>f",
            Rule::ImpLeft => "->=>",
            Rule::ImpRight => "=>->",
            Rule::GenAxId => "GenAxId",
            Rule::GenAxE => "GenAxE",
        }
    }

    /// Whether the calculus of `th` contains this rule.
    pub fn allowed_in(self, th: Theory) -> bool {
        let ca = th == Theory::Ca;
        match self {
            Rule::Id | Rule::Cut | Rule::ELeft | Rule::ERight => true,
            Rule::FuseLeft | Rule::FuseRight => th.has_fuse(),
            Rule::MeetLeft1
            | Rule::MeetLeft2
            | Rule::JoinRight1
            | Rule::JoinRight2
            | Rule::JoinLeft
            | Rule::MeetRight => th.has_lattice(),
            Rule::RDivLeft | Rule::RDivRight | Rule::LDivLeft | Rule::LDivRight => !ca,
            Rule::ImpLeft | Rule::ImpRight | Rule::FLeft | Rule::FRight | Rule::ExchangeRight => ca,
            Rule::ExchangeLeft => th.exchange(),
            Rule::LgW => th.oracle() == Some(OracleKind::Lg),
            Rule::AbLgW => th.oracle() == Some(OracleKind::AbLg),
            Rule::W => th.weakening(),
            Rule::GenAxId | Rule::GenAxE => th.oracle().is_some() && !ca,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for Rule {
    type Err = UnknownRule;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// Records which oracle validated a side-condition, and on what.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub oracle: OracleKind,
    pub sequent: Sequent,
}

/// A derivation tree. Leaves are axioms; every node can be checked locally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proof {
    pub conclusion: Sequent,
    pub rule: Rule,
    pub premises: Vec<Proof>,
    pub certificate: Option<Certificate>,
}

impl Proof {
    pub fn leaf(conclusion: Sequent, rule: Rule) -> Proof {
        Proof {
            conclusion,
            rule,
            premises: Vec::new(),
            certificate: None,
        }
    }

    pub fn node(conclusion: Sequent, rule: Rule, premises: Vec<Proof>) -> Proof {
        Proof {
            conclusion,
            rule,
            premises,
            certificate: None,
        }
    }

    pub fn with_certificate(mut self, cert: Certificate) -> Proof {
        self.certificate = Some(cert);
        self
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Proof::height).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn count_rule(&self, rule: Rule) -> usize {
        usize::from(self.rule == rule)
            + self
                .premises
                .iter()
                .map(|p| p.count_rule(rule))
                .sum::<usize>()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ProofJson::from(self)).expect("proof serialises")
    }

    /// Parse the JSON format, reading every sequent in the signature of `th`.
    pub fn from_json(text: &str, th: Theory) -> Result<Proof, ProverError> {
        let raw: ProofJson =
            serde_json::from_str(text).map_err(|e| ProverError::Json(e.to_string()))?;
        raw.into_proof(th)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    oracle: OracleKind,
    sequent: String,
}

#[derive(Serialize, Deserialize)]
struct ProofJson {
    conclusion: String,
    rule: String,
    premises: Vec<ProofJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
}

impl From<&Proof> for ProofJson {
    fn from(p: &Proof) -> Self {
        ProofJson {
            conclusion: p.conclusion.to_string(),
            rule: p.rule.name().to_string(),
            premises: p.premises.iter().map(ProofJson::from).collect(),
            certificate: p.certificate.as_ref().map(|c| CertificateJson {
                oracle: c.oracle,
                sequent: c.sequent.to_string(),
            }),
        }
    }
}

fn read_sequent(text: &str, th: Theory) -> Result<Sequent, ProverError> {
    parse_sequent(text, th).map_err(|e| ProverError::Malformed(format!("`{text}`: {e}")))
}

impl ProofJson {
    fn into_proof(self, th: Theory) -> Result<Proof, ProverError> {
        let rule = self
            .rule
            .parse::<Rule>()
            .map_err(|e| ProverError::Json(e.to_string()))?;
        let certificate = match self.certificate {
            None => None,
            Some(c) => Some(Certificate {
                oracle: c.oracle,
                sequent: read_sequent(&c.sequent, th)?,
            }),
        };
        Ok(Proof {
            conclusion: read_sequent(&self.conclusion, th)?,
            rule,
            premises: self
                .premises
                .into_iter()
                .map(|p| p.into_proof(th))
                .collect::<Result<_, _>>()?,
            certificate,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_names_round_trip() {
        for r in Rule::ALL {
            assert_eq!(r.name().parse::<Rule>().unwrap(), r);
        }
        assert!("lgw".parse::<Rule>().is_err());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let s = |t| parse_sequent(t, Theory::Icrl).unwrap();
        let p = Proof::node(
            s("x, x \\ e, y => y"),
            Rule::LgW,
            vec![Proof::leaf(s("y => y"), Rule::Id)],
        )
        .with_certificate(Certificate {
            oracle: OracleKind::Lg,
            sequent: s("x, x \\ e => e"),
        });
        let text = p.to_json();
        let back = Proof::from_json(&text, Theory::Icrl).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), text);
        assert!(text.find("\"conclusion\"").unwrap() < text.find("\"rule\"").unwrap());
        assert!(text.contains("\"oracle\": \"LG\""));
    }
}
