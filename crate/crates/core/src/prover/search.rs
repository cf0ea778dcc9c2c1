//! Backward proof search.
//!
//! Every premise of every rule has strictly smaller total complexity than its
//! conclusion, so plain depth-first search terminates; goals are memoised
//! together with the proof found for them. Candidates are tried in a fixed
//! order (axioms, single-premise rules, branching rules; positions left to
//! right), so the proof returned for a goal depends on the goal alone.

use std::sync::Arc;

use dashmap::DashMap;

use super::context::{
    concat, contiguous_blocks, distinct_positions, remove_at, sorted, splice, submultisets,
};
use super::oracle::OracleCache;
use super::{validate_sequent, Certificate, Proof, ProverError, Rule};
use crate::lg_oracle::DEFAULT_WORD_CAP;
use crate::terms::{OracleKind, Sequent, Term, Theory};

/// How the weakening side-condition of the oracle theories is searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// Certified axioms `Γ, u, Π => u` and `Δ => e`.
    GeneralizedAxioms,
    /// Backward deletion of certified blocks, with plain axioms.
    ExplicitWeakening,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Derivable(Proof),
    NotDerivable(SearchStats),
}

impl SearchOutcome {
    pub fn is_derivable(&self) -> bool {
        matches!(self, SearchOutcome::Derivable(_))
    }

    pub fn proof(&self) -> Option<&Proof> {
        match self {
            SearchOutcome::Derivable(p) => Some(p),
            SearchOutcome::NotDerivable(_) => None,
        }
    }
}

enum Step {
    Axiom {
        rule: Rule,
        side: Option<Sequent>,
    },
    /// `Γ, u, Π => u` with both Γ and Π non-empty: a certified weakening of Π
    /// over the axiom `Γ, u => u`.
    SplitAxiom {
        gamma: Vec<Term>,
        u: Term,
        pi: Vec<Term>,
    },
    Rule {
        rule: Rule,
        premises: Vec<Sequent>,
        side: Option<Sequent>,
    },
}

/// A reusable prover for one theory; its memo tables are shared between
/// calls and safe to use from several threads.
pub struct Prover {
    theory: Theory,
    formulation: Formulation,
    memo: DashMap<Sequent, Option<Arc<Proof>>>,
    oracle: Option<OracleCache>,
}

impl Prover {
    pub fn new(theory: Theory) -> Prover {
        Prover::with_formulation(theory, Formulation::GeneralizedAxioms)
    }

    pub fn with_formulation(theory: Theory, formulation: Formulation) -> Prover {
        Prover::with_word_cap(theory, formulation, DEFAULT_WORD_CAP)
    }

    pub fn with_word_cap(theory: Theory, formulation: Formulation, cap: usize) -> Prover {
        // The pointed calculus only has the explicit rule.
        let formulation = if theory.multi_conclusion() {
            Formulation::ExplicitWeakening
        } else {
            formulation
        };
        Prover {
            theory,
            formulation,
            memo: DashMap::new(),
            oracle: theory.oracle().map(|k| OracleCache::new(k, cap)),
        }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn formulation(&self) -> Formulation {
        self.formulation
    }

    pub fn search(&self, s: &Sequent) -> Result<SearchOutcome, ProverError> {
        validate_sequent(s, self.theory)?;
        let goal = self.normalize(s.clone());
        let mut stats = SearchStats::default();
        match self.derive(&goal, 1, &mut stats)? {
            Some(p) => {
                let mut p = (*p).clone();
                p.conclusion = s.clone();
                Ok(SearchOutcome::Derivable(p))
            }
            None => Ok(SearchOutcome::NotDerivable(stats)),
        }
    }

    pub fn derivable(&self, s: &Sequent) -> Result<bool, ProverError> {
        Ok(self.search(s)?.is_derivable())
    }

    fn exchange(&self) -> bool {
        self.theory.exchange()
    }

    fn normalize(&self, s: Sequent) -> Sequent {
        if self.exchange() {
            s.sorted()
        } else {
            s
        }
    }

    fn seq(&self, left: Vec<Term>, right: Vec<Term>) -> Sequent {
        self.normalize(Sequent::new(left, right))
    }

    fn positions(&self, v: &[Term]) -> Vec<usize> {
        if self.exchange() {
            distinct_positions(v)
        } else {
            (0..v.len()).collect()
        }
    }

    /// Non-empty deletable blocks as `(deleted, remaining)`.
    fn blocks(&self, v: &[Term]) -> Vec<(Vec<Term>, Vec<Term>)> {
        if self.exchange() {
            submultisets(v)
                .into_iter()
                .filter(|(d, _)| !d.is_empty())
                .collect()
        } else {
            contiguous_blocks(v)
        }
    }

    fn weakening_rule(&self) -> Option<Rule> {
        match self.oracle.as_ref().map(OracleCache::kind) {
            Some(OracleKind::Lg) => Some(Rule::LgW),
            Some(OracleKind::AbLg) => Some(Rule::AbLgW),
            None => None,
        }
    }

    fn side_valid(&self, s: &Sequent) -> Result<bool, ProverError> {
        let oracle = self
            .oracle
            .as_ref()
            .expect("side-conditions need an oracle");
        Ok(oracle.valid(s)?)
    }

    fn certificate(&self, s: Sequent) -> Certificate {
        Certificate {
            oracle: self.oracle.as_ref().expect("oracle theory").kind(),
            sequent: s,
        }
    }

    fn derive(
        &self,
        g: &Sequent,
        depth: usize,
        stats: &mut SearchStats,
    ) -> Result<Option<Arc<Proof>>, ProverError> {
        if let Some(hit) = self.memo.get(g) {
            return Ok(hit.clone());
        }
        stats.nodes += 1;
        stats.max_depth = stats.max_depth.max(depth);
        let steps = if self.theory.multi_conclusion() {
            self.steps_multi(g)
        } else {
            self.steps_single(g)
        };
        let mut found = None;
        for step in steps {
            if let Some(p) = self.try_step(g, step, depth, stats)? {
                found = Some(Arc::new(p));
                break;
            }
        }
        self.memo.insert(g.clone(), found.clone());
        Ok(found)
    }

    fn try_step(
        &self,
        g: &Sequent,
        step: Step,
        depth: usize,
        stats: &mut SearchStats,
    ) -> Result<Option<Proof>, ProverError> {
        match step {
            Step::Axiom { rule, side } => {
                let mut p = Proof::leaf(g.clone(), rule);
                if let Some(side) = side {
                    if !self.side_valid(&side)? {
                        return Ok(None);
                    }
                    p = p.with_certificate(self.certificate(side));
                }
                Ok(Some(p))
            }
            Step::SplitAxiom { gamma, u, pi } => {
                let left_side = Sequent::single(gamma.clone(), Term::E);
                let right_side = Sequent::single(pi, Term::E);
                if !self.side_valid(&left_side)? || !self.side_valid(&right_side)? {
                    return Ok(None);
                }
                let axiom = Proof::leaf(
                    Sequent::single(concat(&[&gamma, std::slice::from_ref(&u)]), u),
                    Rule::GenAxId,
                )
                .with_certificate(self.certificate(left_side));
                let rule = self.weakening_rule().expect("oracle theory");
                Ok(Some(
                    Proof::node(g.clone(), rule, vec![axiom])
                        .with_certificate(self.certificate(right_side)),
                ))
            }
            Step::Rule {
                rule,
                premises,
                side,
            } => {
                if let Some(side) = &side {
                    if !self.side_valid(side)? {
                        return Ok(None);
                    }
                }
                let mut proofs = Vec::with_capacity(premises.len());
                for p in &premises {
                    match self.derive(p, depth + 1, stats)? {
                        Some(d) => proofs.push((*d).clone()),
                        None => return Ok(None),
                    }
                }
                let mut p = Proof::node(g.clone(), rule, proofs);
                if let Some(side) = side {
                    p = p.with_certificate(self.certificate(side));
                }
                Ok(Some(p))
            }
        }
    }

    fn steps_single(&self, g: &Sequent) -> Vec<Step> {
        let l = &g.left;
        let u = &g.right[0];
        let single = |left: Vec<Term>, right: &Term| self.seq(left, vec![right.clone()]);
        let mut out = Vec::new();

        // Axioms.
        if l.len() == 1 && &l[0] == u {
            out.push(Step::Axiom {
                rule: Rule::Id,
                side: None,
            });
        }
        if l.is_empty() && *u == Term::E {
            out.push(Step::Axiom {
                rule: Rule::ERight,
                side: None,
            });
        }
        let generalized =
            self.oracle.is_some() && self.formulation == Formulation::GeneralizedAxioms;
        if generalized {
            for i in self.positions(l) {
                if &l[i] != u {
                    continue;
                }
                if self.exchange() {
                    let rest = remove_at(l, i);
                    if !rest.is_empty() {
                        out.push(Step::Axiom {
                            rule: Rule::GenAxId,
                            side: Some(Sequent::single(rest, Term::E)),
                        });
                    }
                    continue;
                }
                let (gamma, pi) = (l[..i].to_vec(), l[i + 1..].to_vec());
                match (gamma.is_empty(), pi.is_empty()) {
                    (true, true) => {}
                    (false, true) | (true, false) => out.push(Step::Axiom {
                        rule: Rule::GenAxId,
                        side: Some(Sequent::single(concat(&[&gamma, &pi]), Term::E)),
                    }),
                    (false, false) => out.push(Step::SplitAxiom {
                        gamma,
                        u: u.clone(),
                        pi,
                    }),
                }
            }
            if *u == Term::E && !l.is_empty() {
                out.push(Step::Axiom {
                    rule: Rule::GenAxE,
                    side: Some(Sequent::single(l.clone(), Term::E)),
                });
            }
        }

        // Single-premise rules.
        for i in self.positions(l) {
            let unary = |rule, with: &[Term]| Step::Rule {
                rule,
                premises: vec![single(splice(l, i, with), u)],
                side: None,
            };
            match &l[i] {
                Term::E => out.push(unary(Rule::ELeft, &[])),
                Term::Fuse(a, b) => {
                    out.push(unary(Rule::FuseLeft, &[(**a).clone(), (**b).clone()]))
                }
                Term::Meet(a, b) => {
                    out.push(unary(Rule::MeetLeft1, &[(**a).clone()]));
                    out.push(unary(Rule::MeetLeft2, &[(**b).clone()]));
                }
                _ => {}
            }
        }
        let right_unary = |rule, left: Vec<Term>, right: &Term| Step::Rule {
            rule,
            premises: vec![single(left, right)],
            side: None,
        };
        match u {
            Term::RDiv(t, s) => out.push(right_unary(
                Rule::RDivRight,
                concat(&[l, &[(**s).clone()]]),
                t,
            )),
            Term::LDiv(s, t) => out.push(right_unary(
                Rule::LDivRight,
                concat(&[&[(**s).clone()], l]),
                t,
            )),
            Term::Join(a, b) => {
                out.push(right_unary(Rule::JoinRight1, l.clone(), a));
                out.push(right_unary(Rule::JoinRight2, l.clone(), b));
            }
            _ => {}
        }
        if self.theory.weakening() {
            for (_, rest) in self.blocks(l) {
                out.push(Step::Rule {
                    rule: Rule::W,
                    premises: vec![single(rest, u)],
                    side: None,
                });
            }
        }
        if self.oracle.is_some() && self.formulation == Formulation::ExplicitWeakening {
            let rule = self.weakening_rule().expect("oracle theory");
            for (deleted, rest) in self.blocks(l) {
                out.push(Step::Rule {
                    rule,
                    premises: vec![single(rest, u)],
                    side: Some(Sequent::single(deleted, Term::E)),
                });
            }
        }

        // Branching rules.
        for i in self.positions(l) {
            match &l[i] {
                Term::Join(a, b) => out.push(Step::Rule {
                    rule: Rule::JoinLeft,
                    premises: vec![
                        single(splice(l, i, &[(**a).clone()]), u),
                        single(splice(l, i, &[(**b).clone()]), u),
                    ],
                    side: None,
                }),
                Term::RDiv(t, s) | Term::LDiv(s, t) => {
                    let rule = if matches!(l[i], Term::RDiv(..)) {
                        Rule::RDivLeft
                    } else {
                        Rule::LDivLeft
                    };
                    for (gamma2, main) in self.residual_splits(l, i, rule, t) {
                        out.push(Step::Rule {
                            rule,
                            premises: vec![single(gamma2, s), single(main, u)],
                            side: None,
                        });
                    }
                }
                _ => {}
            }
        }
        match u {
            Term::Meet(a, b) => out.push(Step::Rule {
                rule: Rule::MeetRight,
                premises: vec![single(l.clone(), a), single(l.clone(), b)],
                side: None,
            }),
            Term::Fuse(a, b) => {
                let splits: Vec<(Vec<Term>, Vec<Term>)> = if self.exchange() {
                    submultisets(l)
                } else {
                    (0..=l.len())
                        .map(|k| (l[..k].to_vec(), l[k..].to_vec()))
                        .collect()
                };
                for (l1, l2) in splits {
                    out.push(Step::Rule {
                        rule: Rule::FuseRight,
                        premises: vec![single(l1, a), single(l2, b)],
                        side: None,
                    });
                }
            }
            _ => {}
        }
        out
    }

    /// For a residual at position `i`: the argument context Γ2 and the main
    /// premise's antecedent (with the result `t` in place of the residual).
    fn residual_splits(
        &self,
        l: &[Term],
        i: usize,
        rule: Rule,
        t: &Term,
    ) -> Vec<(Vec<Term>, Vec<Term>)> {
        let t = std::slice::from_ref(t);
        if self.exchange() {
            return submultisets(&remove_at(l, i))
                .into_iter()
                .map(|(gamma2, rest)| (gamma2, sorted(concat(&[&rest, t]))))
                .collect();
        }
        if rule == Rule::RDivLeft {
            // Γ1, t/s, Γ2, Γ3: the argument block follows the residual.
            (0..l.len() - i)
                .map(|k| {
                    (
                        l[i + 1..i + 1 + k].to_vec(),
                        concat(&[&l[..i], t, &l[i + 1 + k..]]),
                    )
                })
                .collect()
        } else {
            // Γ1, Γ2, s\t, Γ3: the argument block precedes it.
            (0..=i)
                .map(|k| (l[i - k..i].to_vec(), concat(&[&l[..i - k], t, &l[i + 1..]])))
                .collect()
        }
    }

    fn steps_multi(&self, g: &Sequent) -> Vec<Step> {
        let (l, r) = (&g.left, &g.right);
        let mut out = Vec::new();

        if l.len() == 1 && r.len() == 1 && l[0] == r[0] {
            out.push(Step::Axiom {
                rule: Rule::Id,
                side: None,
            });
        }
        if l.is_empty() && r.len() == 1 && r[0] == Term::E {
            out.push(Step::Axiom {
                rule: Rule::ERight,
                side: None,
            });
        }
        if l.len() == 1 && l[0] == Term::F && r.is_empty() {
            out.push(Step::Axiom {
                rule: Rule::FLeft,
                side: None,
            });
        }

        let unary = |rule, left: Vec<Term>, right: Vec<Term>| Step::Rule {
            rule,
            premises: vec![self.seq(left, right)],
            side: None,
        };
        for i in distinct_positions(l) {
            match &l[i] {
                Term::E => out.push(unary(Rule::ELeft, remove_at(l, i), r.clone())),
                Term::Fuse(a, b) => out.push(unary(
                    Rule::FuseLeft,
                    splice(l, i, &[(**a).clone(), (**b).clone()]),
                    r.clone(),
                )),
                Term::Meet(a, b) => {
                    out.push(unary(
                        Rule::MeetLeft1,
                        splice(l, i, &[(**a).clone()]),
                        r.clone(),
                    ));
                    out.push(unary(
                        Rule::MeetLeft2,
                        splice(l, i, &[(**b).clone()]),
                        r.clone(),
                    ));
                }
                _ => {}
            }
        }
        for j in distinct_positions(r) {
            match &r[j] {
                Term::F => out.push(unary(Rule::FRight, l.clone(), remove_at(r, j))),
                Term::Join(a, b) => {
                    out.push(unary(
                        Rule::JoinRight1,
                        l.clone(),
                        splice(r, j, &[(**a).clone()]),
                    ));
                    out.push(unary(
                        Rule::JoinRight2,
                        l.clone(),
                        splice(r, j, &[(**b).clone()]),
                    ));
                }
                Term::LDiv(s, t) | Term::RDiv(t, s) => out.push(unary(
                    Rule::ImpRight,
                    concat(&[l, &[(**s).clone()]]),
                    splice(r, j, &[(**t).clone()]),
                )),
                _ => {}
            }
        }
        for (g2, g1) in submultisets(l) {
            for (d2, d1) in submultisets(r) {
                if g2.is_empty() && d2.is_empty() {
                    continue;
                }
                out.push(Step::Rule {
                    rule: Rule::AbLgW,
                    premises: vec![self.seq(g1.clone(), d1)],
                    side: Some(Sequent::new(g2.clone(), d2)),
                });
            }
        }

        for i in distinct_positions(l) {
            match &l[i] {
                Term::Join(a, b) => out.push(Step::Rule {
                    rule: Rule::JoinLeft,
                    premises: vec![
                        self.seq(splice(l, i, &[(**a).clone()]), r.clone()),
                        self.seq(splice(l, i, &[(**b).clone()]), r.clone()),
                    ],
                    side: None,
                }),
                Term::LDiv(s, t) | Term::RDiv(t, s) => {
                    for (g2, rest) in submultisets(&remove_at(l, i)) {
                        for (d2, d1) in submultisets(r) {
                            out.push(Step::Rule {
                                rule: Rule::ImpLeft,
                                premises: vec![
                                    self.seq(g2.clone(), concat(&[&[(**s).clone()], &d2])),
                                    self.seq(concat(&[&rest, &[(**t).clone()]]), d1),
                                ],
                                side: None,
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        for j in distinct_positions(r) {
            match &r[j] {
                Term::Meet(a, b) => out.push(Step::Rule {
                    rule: Rule::MeetRight,
                    premises: vec![
                        self.seq(l.clone(), splice(r, j, &[(**a).clone()])),
                        self.seq(l.clone(), splice(r, j, &[(**b).clone()])),
                    ],
                    side: None,
                }),
                Term::Fuse(a, b) => {
                    let rest = remove_at(r, j);
                    for (g1, g2) in submultisets(l) {
                        for (d1, d2) in submultisets(&rest) {
                            out.push(Step::Rule {
                                rule: Rule::FuseRight,
                                premises: vec![
                                    self.seq(g1.clone(), concat(&[&[(**a).clone()], &d1])),
                                    self.seq(g2.clone(), concat(&[&[(**b).clone()], &d2])),
                                ],
                                side: None,
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }
}
