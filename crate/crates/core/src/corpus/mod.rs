//! Seeded cross-checking suites: two deciders that should agree are run on
//! the same generated cases and every disagreement is reported.
//!
//! Case `i` of a suite draws from its own ChaCha stream `i` under the suite
//! seed, so reports are identical however the cases are scheduled.

mod cuts;
mod generate;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use cuts::{cut_proof, CUT_THEORIES};
pub use generate::TermGen;

use crate::ablg_oracle::ablg_valid_leq_e;
use crate::finmod::{refute, AlgebraClass};
use crate::lg_oracle::{
    bfs_identity_oracle, lg_valid_leq_e, semigroup_contains_identity, GroupWord, Letter,
};
use crate::prover::{check_proof, decide_equation_with, eliminate_cuts, Formulation, Prover, Rule};
use crate::terms::{neg_translation, OracleKind, Sequent, Term, Theory};

#[derive(Debug, Clone, thiserror::Error)]
pub enum CorpusError {
    #[error("malformed corpus file: {0}")]
    Spec(String),
}

/// Deliberate corruption of the first decider, to show that the harness
/// notices disagreement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    #[serde(rename = "negate-oracle")]
    NegateOracle,
}

/// What a suite compares.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "snake_case")]
pub enum SuiteKind {
    /// `t ≤ e` by the oracle against `t ⇒ e` in IcRL (LG) or CIcRL (AbLG).
    Glivenko { oracle: OracleKind },
    /// Certified axioms against explicit certified weakening.
    Formulation {
        #[serde(with = "theory_name")]
        theory: Theory,
    },
    /// Sequents of `theory`'s signature, decided in `theory` and in `base`.
    Conservativity {
        #[serde(with = "theory_name")]
        theory: Theory,
        #[serde(with = "theory_name")]
        base: Theory,
    },
    /// f-free sequents with empty succedent must never be CA-derivable.
    EmptySuccedent,
    /// `s ≈ t` in IRL against `s⁻ ≈ t⁻` in IcRL.
    NegativeCone,
    /// Proofs with 1–3 cuts; elimination must keep the conclusion and land
    /// in the cut-free calculus.
    CutElimination {
        #[serde(with = "theory_name")]
        theory: Theory,
    },
    /// Derivable sequents have no finite countermodel up to `max_size`.
    Soundness {
        #[serde(with = "theory_name")]
        theory: Theory,
        #[serde(default = "default_model_size")]
        max_size: usize,
    },
    /// Saturated automaton against bounded BFS where BFS finds the identity.
    AutomatonBfs {
        #[serde(default = "default_bfs_depth")]
        bfs_depth: usize,
    },
}

fn default_model_size() -> usize {
    3
}

fn default_bfs_depth() -> usize {
    8
}

/// Shape of the generated cases.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(default = "default_vars")]
    pub vars: usize,
    #[serde(default = "default_depth")]
    pub depth: usize,
    #[serde(default = "default_count")]
    pub count: usize,
    /// Overrides the corpus seed for this suite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_complexity: Option<usize>,
    /// Fraction of sequents drawn from often-derivable families.
    #[serde(default)]
    pub templated: f64,
}

fn default_vars() -> usize {
    2
}

fn default_depth() -> usize {
    3
}

fn default_count() -> usize {
    100
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            vars: default_vars(),
            depth: default_depth(),
            count: default_count(),
            seed: None,
            max_complexity: None,
            templated: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSpec {
    #[serde(flatten)]
    pub kind: SuiteKind,
    #[serde(flatten)]
    pub generator: GeneratorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl SuiteSpec {
    pub fn new(kind: SuiteKind, generator: GeneratorSpec) -> SuiteSpec {
        SuiteSpec {
            kind,
            generator,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(default)]
    pub seed: u64,
    pub suites: Vec<SuiteSpec>,
}

impl CorpusSpec {
    pub fn from_json(text: &str) -> Result<CorpusSpec, CorpusError> {
        let spec: CorpusSpec =
            serde_json::from_str(text).map_err(|e| CorpusError::Spec(e.to_string()))?;
        for s in &spec.suites {
            s.validate()?;
        }
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub case: String,
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub agreements: usize,
    /// Compared cases on which the first decider answered yes.
    pub positives: usize,
    /// Cases where the comparison is not meaningful (inconclusive BFS).
    pub skipped: usize,
    pub disagreements: Vec<Disagreement>,
    pub errors: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.errors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

pub fn run_corpus(spec: &CorpusSpec) -> CorpusReport {
    CorpusReport {
        seed: spec.seed,
        suites: spec
            .suites
            .iter()
            .map(|s| run_suite(s, spec.seed))
            .collect(),
    }
}

enum Outcome {
    Compared(bool, bool),
    Skipped,
}

impl SuiteKind {
    fn label(&self) -> String {
        match self {
            SuiteKind::Glivenko { oracle } => format!("glivenko/{oracle}"),
            SuiteKind::Formulation { theory } => format!("formulation/{theory}"),
            SuiteKind::Conservativity { theory, base } => {
                format!("conservativity/{theory}-vs-{base}")
            }
            SuiteKind::EmptySuccedent => "empty_succedent/ca".into(),
            SuiteKind::NegativeCone => "negative_cone/irl-vs-icrl".into(),
            SuiteKind::CutElimination { theory } => format!("cut_elimination/{theory}"),
            SuiteKind::Soundness { theory, max_size } => {
                format!("soundness/{theory}/size<={max_size}")
            }
            SuiteKind::AutomatonBfs { bfs_depth } => format!("automaton_bfs/depth{bfs_depth}"),
        }
    }
}

impl SuiteSpec {
    fn validate(&self) -> Result<(), CorpusError> {
        let bad = |m: String| Err(CorpusError::Spec(m));
        match &self.kind {
            SuiteKind::Conservativity { theory, base } if theory.pointed() && !base.pointed() => {
                // Pointed theories are compared on their f-free fragment.
                Ok(())
            }
            SuiteKind::Conservativity { theory, base } if !base.has_fuse() && theory.has_fuse() => {
                bad(format!("{base} cannot decide {theory} sequents"))
            }
            SuiteKind::CutElimination { theory } if !CUT_THEORIES.contains(theory) => {
                bad(format!("cut elimination does not run in {theory}"))
            }
            _ if self.generator.vars == 0 => bad("vars must be positive".into()),
            _ => Ok(()),
        }
    }
}

/// Run one suite; `default_seed` applies unless the generator has its own.
pub fn run_suite(spec: &SuiteSpec, default_seed: u64) -> SuiteReport {
    let seed = spec.generator.seed.unwrap_or(default_seed);
    let ctx = Context::new(spec);
    let results: Vec<(String, Result<Outcome, String>)> = (0..spec.generator.count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            ctx.case(&mut rng)
        })
        .collect();
    let mut report = SuiteReport {
        suite: spec.kind.label(),
        seed,
        cases: results.len(),
        agreements: 0,
        positives: 0,
        skipped: 0,
        disagreements: Vec::new(),
        errors: Vec::new(),
    };
    for (case, res) in results {
        match res {
            Ok(Outcome::Skipped) => report.skipped += 1,
            Ok(Outcome::Compared(mut left, right)) => {
                if spec.fault == Some(Fault::NegateOracle) {
                    left = !left;
                }
                report.positives += usize::from(left);
                if left == right {
                    report.agreements += 1;
                } else {
                    report
                        .disagreements
                        .push(Disagreement { case, left, right });
                }
            }
            Err(e) => report.errors.push(format!("{case}: {e}")),
        }
    }
    report
}

/// Per-suite state shared by all cases: generators and memoising provers.
struct Context<'a> {
    spec: &'a SuiteSpec,
    gen: TermGen,
    first: Option<Prover>,
    second: Option<Prover>,
}

impl<'a> Context<'a> {
    fn new(spec: &'a SuiteSpec) -> Context<'a> {
        let g = &spec.generator;
        let (gen, first, second) = match &spec.kind {
            SuiteKind::Glivenko { oracle } => {
                let th = match oracle {
                    OracleKind::Lg => Theory::Icrl,
                    OracleKind::AbLg => Theory::Cicrl,
                };
                (
                    TermGen::for_theory(th, g.vars, g.depth).f_free(),
                    Some(Prover::new(th)),
                    None,
                )
            }
            SuiteKind::Formulation { theory } => (
                TermGen::for_theory(*theory, g.vars, g.depth),
                Some(Prover::new(*theory)),
                Some(Prover::with_formulation(
                    *theory,
                    Formulation::ExplicitWeakening,
                )),
            ),
            SuiteKind::Conservativity { theory, base } => {
                let mut gen = TermGen::for_theory(*theory, g.vars, g.depth);
                if !base.pointed() {
                    gen = gen.f_free();
                }
                (gen, Some(Prover::new(*theory)), Some(Prover::new(*base)))
            }
            SuiteKind::EmptySuccedent => (
                TermGen::for_theory(Theory::Ca, g.vars, g.depth).f_free(),
                Some(Prover::new(Theory::Ca)),
                None,
            ),
            SuiteKind::NegativeCone => (
                TermGen::for_theory(Theory::Irl, g.vars, g.depth),
                Some(Prover::new(Theory::Irl)),
                Some(Prover::new(Theory::Icrl)),
            ),
            SuiteKind::CutElimination { theory } => {
                (TermGen::for_theory(*theory, g.vars, g.depth), None, None)
            }
            SuiteKind::Soundness { theory, .. } => (
                TermGen::for_theory(*theory, g.vars, g.depth),
                Some(Prover::new(*theory)),
                Some(Prover::with_formulation(
                    *theory,
                    Formulation::ExplicitWeakening,
                )),
            ),
            SuiteKind::AutomatonBfs { .. } => (
                TermGen::for_theory(Theory::Icrl, g.vars, g.depth),
                None,
                None,
            ),
        };
        Context {
            spec,
            gen,
            first,
            second,
        }
    }

    fn sequent(&self, rng: &mut ChaCha8Rng, th: Theory, multi: bool) -> Sequent {
        let g = &self.spec.generator;
        let cap = g.max_complexity.unwrap_or(12);
        if g.templated > 0.0 && rng.gen_bool(g.templated.min(1.0)) {
            let s = self.gen.templated(rng);
            if s.complexity() <= cap {
                return s;
            }
        }
        if multi && th.multi_conclusion() {
            self.gen.multi_sequent(rng, cap)
        } else {
            self.gen.sequent(rng, cap)
        }
    }

    fn first(&self) -> &Prover {
        self.first.as_ref().expect("suite has a first prover")
    }

    fn second(&self) -> &Prover {
        self.second.as_ref().expect("suite has a second prover")
    }

    fn case(&self, rng: &mut ChaCha8Rng) -> (String, Result<Outcome, String>) {
        let err = |e: &dyn std::fmt::Display| e.to_string();
        match &self.spec.kind {
            SuiteKind::Glivenko { oracle } => {
                let t = self.gen.term(rng);
                let s = Sequent::single(vec![t.clone()], Term::E);
                let run = || -> Result<Outcome, String> {
                    let o = match oracle {
                        OracleKind::Lg => lg_valid_leq_e(&t).map_err(|e| err(&e))?,
                        OracleKind::AbLg => ablg_valid_leq_e(&t).map_err(|e| err(&e))?,
                    };
                    Ok(Outcome::Compared(
                        o,
                        self.first().derivable(&s).map_err(|e| err(&e))?,
                    ))
                };
                (s.to_string(), run())
            }
            SuiteKind::Formulation { theory } | SuiteKind::Conservativity { theory, .. } => {
                let multi = matches!(self.spec.kind, SuiteKind::Formulation { .. });
                let s = self.sequent(rng, *theory, multi);
                let run = || -> Result<Outcome, String> {
                    let a = self.first().derivable(&s).map_err(|e| err(&e))?;
                    let b = self.second().derivable(&s).map_err(|e| err(&e))?;
                    Ok(Outcome::Compared(a, b))
                };
                (s.to_string(), run())
            }
            SuiteKind::EmptySuccedent => {
                let n = rng.gen_range(0..=2);
                let s = Sequent::new((0..n).map(|_| self.gen.term(rng)).collect(), vec![]);
                let run = || -> Result<Outcome, String> {
                    Ok(Outcome::Compared(
                        self.first().derivable(&s).map_err(|e| err(&e))?,
                        false,
                    ))
                };
                (s.to_string(), run())
            }
            SuiteKind::NegativeCone => {
                let (s, t) = (self.gen.term(rng), self.gen.term(rng));
                let case = format!("{s} = {t}");
                let run = || -> Result<Outcome, String> {
                    let a = decide_equation_with(self.first(), &s, &t).map_err(|e| err(&e))?;
                    let sn = neg_translation(&s).map_err(|e| err(&e))?;
                    let tn = neg_translation(&t).map_err(|e| err(&e))?;
                    let b = decide_equation_with(self.second(), &sn, &tn).map_err(|e| err(&e))?;
                    Ok(Outcome::Compared(a, b))
                };
                (case, run())
            }
            SuiteKind::CutElimination { theory } => {
                let cuts = rng.gen_range(1..=3);
                let proof = match cut_proof(rng, *theory, &self.gen, cuts) {
                    Ok(Some(p)) => p,
                    Ok(None) => return ("-".into(), Err(format!("no cut proofs in {theory}"))),
                    Err(e) => return ("-".into(), Err(e.to_string())),
                };
                let case = format!(
                    "{} ({} cuts)",
                    proof.conclusion,
                    proof.count_rule(Rule::Cut)
                );
                let run = || -> Result<Outcome, String> {
                    let q = eliminate_cuts(&proof, *theory).map_err(|e| err(&e))?;
                    let ok =
                        q.conclusion == proof.conclusion && check_proof(&q, *theory, false).is_ok();
                    Ok(Outcome::Compared(ok, true))
                };
                (case, run())
            }
            SuiteKind::Soundness { theory, max_size } => {
                let s = self.sequent(rng, *theory, true);
                let run = || -> Result<Outcome, String> {
                    let derivable = self.first().derivable(&s).map_err(|e| err(&e))?
                        || self.second().derivable(&s).map_err(|e| err(&e))?;
                    if !derivable {
                        return Ok(Outcome::Compared(false, false));
                    }
                    let class = AlgebraClass::for_theory(*theory);
                    let none = refute(&s, *max_size, class).map_err(|e| err(&e))?.is_none();
                    Ok(Outcome::Compared(true, none))
                };
                (s.to_string(), run())
            }
            SuiteKind::AutomatonBfs { bfs_depth } => {
                let gens =
                    random_generators(rng, self.spec.generator.vars, self.spec.generator.depth);
                let case = gens
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ; ");
                let bfs = bfs_identity_oracle(&gens, *bfs_depth);
                let outcome = if bfs {
                    Outcome::Compared(bfs, semigroup_contains_identity(&gens))
                } else {
                    Outcome::Skipped
                };
                (case, Ok(outcome))
            }
        }
    }
}

/// One to three reduced words of length at most `max_len` over `vars` letters.
pub fn random_generators<R: Rng>(rng: &mut R, vars: usize, max_len: usize) -> Vec<GroupWord> {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            GroupWord::from_letters((0..len).map(|_| {
                Letter::new(
                    NAMES[rng.gen_range(0..vars.clamp(1, NAMES.len()))],
                    rng.gen_bool(0.5),
                )
            }))
        })
        .collect()
}

mod theory_name {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::terms::Theory;

    pub fn serialize<S: Serializer>(th: &Theory, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(th.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Theory, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: SuiteKind, count: usize) -> SuiteSpec {
        SuiteSpec::new(
            kind,
            GeneratorSpec {
                count,
                ..GeneratorSpec::default()
            },
        )
    }

    #[test]
    fn corpus_file_round_trip() {
        let text = r#"{"seed": 7, "suites": [
            {"suite": "glivenko", "oracle": "LG", "vars": 2, "depth": 2, "count": 5},
            {"suite": "conservativity", "theory": "sirm", "base": "icrl", "count": 3, "fault": "negate-oracle"}
        ]}"#;
        let c = CorpusSpec::from_json(text).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(
            c.suites[0].kind,
            SuiteKind::Glivenko {
                oracle: OracleKind::Lg
            }
        );
        assert_eq!(c.suites[1].fault, Some(Fault::NegateOracle));
        let back = CorpusSpec::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        assert!(CorpusSpec::from_json(r#"{"suites": [{"suite": "nope"}]}"#).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let s = spec(
            SuiteKind::Glivenko {
                oracle: OracleKind::Lg,
            },
            12,
        );
        assert_eq!(run_suite(&s, 11), run_suite(&s, 11));
    }

    #[test]
    fn fault_injection_is_noticed() {
        let mut s = spec(
            SuiteKind::Glivenko {
                oracle: OracleKind::Lg,
            },
            10,
        );
        assert!(run_suite(&s, 1).passed());
        s.fault = Some(Fault::NegateOracle);
        let r = run_suite(&s, 1);
        assert_eq!(r.disagreements.len(), 10);
    }

    #[test]
    fn small_suites_agree() {
        for kind in [
            SuiteKind::Formulation {
                theory: Theory::Icrl,
            },
            SuiteKind::Conservativity {
                theory: Theory::Sirm,
                base: Theory::Icrl,
            },
            SuiteKind::EmptySuccedent,
            SuiteKind::CutElimination {
                theory: Theory::Icrl,
            },
            SuiteKind::Soundness {
                theory: Theory::Icrl,
                max_size: 3,
            },
            SuiteKind::AutomatonBfs { bfs_depth: 6 },
        ] {
            let r = run_suite(&spec(kind, 8), 3);
            assert!(r.passed(), "{r:?}");
        }
    }
}
