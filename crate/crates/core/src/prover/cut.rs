//! Cut elimination for the calculi without exchange.
//!
//! Certified axioms are first unfolded into certified weakenings over `id`
//! and `=> e`. Cuts are then removed topmost first: each cut between two
//! cut-free derivations is pushed upward through whichever premise does not
//! introduce the cut formula, and reduced to cuts on proper subterms when
//! both do. A cut formula inside a certified deleted block disappears with
//! its derivation; the block widens to the cut antecedent and its
//! side-condition is re-established by the oracle.

use super::check::{block_starts, check_proof, cut_positions, left_principals};
use super::context::{concat, splice};
use super::oracle::OracleCache;
use super::{Certificate, Proof, ProverError, Rule};
use crate::lg_oracle::DEFAULT_WORD_CAP;
use crate::terms::{Sequent, Term, Theory};

/// A cut-free proof of the same conclusion as `p`.
pub fn eliminate_cuts(p: &Proof, th: Theory) -> Result<Proof, ProverError> {
    if th.exchange() || th.multi_conclusion() {
        return Err(ProverError::Unsupported(th));
    }
    check_proof(p, th, true).map_err(|e| ProverError::IllFormedProof(e.to_string()))?;
    let elim = Eliminator {
        oracle: th.oracle().map(|k| OracleCache::new(k, DEFAULT_WORD_CAP)),
    };
    elim.elim(unfold_axioms(p))
}

fn unfold_axioms(p: &Proof) -> Proof {
    let premises = p.premises.iter().map(unfold_axioms).collect();
    let cert = p.certificate.clone();
    let rule = match cert.as_ref().map(|c| c.oracle) {
        Some(crate::terms::OracleKind::AbLg) => Rule::AbLgW,
        _ => Rule::LgW,
    };
    match p.rule {
        Rule::GenAxId => {
            let u = p.conclusion.right[0].clone();
            let c = cert.expect("checked");
            if c.sequent.left.is_empty() {
                return Proof::leaf(p.conclusion.clone(), Rule::Id);
            }
            let id = Proof::leaf(Sequent::single(vec![u.clone()], u), Rule::Id);
            Proof::node(p.conclusion.clone(), rule, vec![id]).with_certificate(c)
        }
        Rule::GenAxE => {
            let c = cert.expect("checked");
            let unit = Proof::leaf(Sequent::single(vec![], Term::E), Rule::ERight);
            Proof::node(p.conclusion.clone(), rule, vec![unit]).with_certificate(c)
        }
        _ => Proof {
            conclusion: p.conclusion.clone(),
            rule: p.rule,
            premises,
            certificate: p.certificate.clone(),
        },
    }
}

fn is_right_rule(r: Rule) -> bool {
    use Rule::*;
    matches!(
        r,
        ERight | RDivRight | LDivRight | FuseRight | JoinRight1 | JoinRight2 | MeetRight
    )
}

fn take2(mut v: Vec<Proof>) -> (Proof, Proof) {
    let b = v.pop().expect("two premises");
    let a = v.pop().expect("two premises");
    (a, b)
}

fn take1(mut v: Vec<Proof>) -> Proof {
    v.pop().expect("one premise")
}

struct Eliminator {
    oracle: Option<OracleCache>,
}

impl Eliminator {
    fn elim(&self, p: Proof) -> Result<Proof, ProverError> {
        let premises = p
            .premises
            .into_iter()
            .map(|q| self.elim(q))
            .collect::<Result<Vec<_>, _>>()?;
        if p.rule != Rule::Cut {
            return Ok(Proof { premises, ..p });
        }
        let (d1, d2) = take2(premises);
        let pos = *cut_positions(&d1.conclusion, &d2.conclusion, &p.conclusion.left)
            .first()
            .ok_or_else(|| ProverError::IllFormedProof(format!("cut at `{}`", p.conclusion)))?;
        self.cut(d1, d2, pos)
    }

    /// Cut-free proof of `d2`'s antecedent with position `pos` replaced by
    /// `d1`'s antecedent; `d1` proves the formula at that position.
    fn cut(&self, d1: Proof, d2: Proof, pos: usize) -> Result<Proof, ProverError> {
        let concl = Sequent::new(
            splice(&d2.conclusion.left, pos, &d1.conclusion.left),
            d2.conclusion.right.clone(),
        );
        if d1.rule == Rule::Id {
            return Ok(d2);
        }
        if d2.rule == Rule::Id {
            return Ok(d1);
        }
        if !is_right_rule(d1.rule) {
            return self.permute_left(d1, d2, pos, concl);
        }
        if left_principals(&d2).contains(&pos) {
            return self.principal(d1, d2, pos);
        }
        self.permute_right(d1, d2, pos, concl)
    }

    /// `d1` ends in a left rule or a weakening: the cut moves to the premise
    /// that carries the cut formula as its succedent.
    fn permute_left(
        &self,
        d1: Proof,
        d2: Proof,
        pos: usize,
        concl: Sequent,
    ) -> Result<Proof, ProverError> {
        use Rule::*;
        let Proof {
            rule,
            premises,
            certificate,
            ..
        } = d1;
        let premises = match rule {
            ELeft | FuseLeft | MeetLeft1 | MeetLeft2 | LgW | AbLgW | W => {
                vec![self.cut(take1(premises), d2, pos)?]
            }
            JoinLeft => {
                let (a, b) = take2(premises);
                vec![self.cut(a, d2.clone(), pos)?, self.cut(b, d2, pos)?]
            }
            RDivLeft | LDivLeft => {
                let (side, main) = take2(premises);
                vec![side, self.cut(main, d2, pos)?]
            }
            other => {
                return Err(ProverError::IllFormedProof(format!(
                    "unexpected {other} above a cut"
                )))
            }
        };
        Ok(Proof {
            conclusion: concl,
            rule,
            premises,
            certificate,
        })
    }

    /// The cut formula is passive in `d2`: push the cut into the premise of
    /// `d2` that contains it.
    fn permute_right(
        &self,
        d1: Proof,
        d2: Proof,
        pos: usize,
        concl: Sequent,
    ) -> Result<Proof, ProverError> {
        use Rule::*;
        let starts = if matches!(d2.rule, LgW | AbLgW | W) {
            block_starts(&d2)
        } else {
            Vec::new()
        };
        let principals = left_principals(&d2);
        let Proof {
            rule,
            premises,
            certificate,
            conclusion,
        } = d2;
        let rebuilt = |premises, certificate| Proof {
            conclusion: concl.clone(),
            rule,
            premises,
            certificate,
        };
        match rule {
            RDivRight | JoinRight1 | JoinRight2 => {
                Ok(rebuilt(vec![self.cut(d1, take1(premises), pos)?], None))
            }
            LDivRight => Ok(rebuilt(vec![self.cut(d1, take1(premises), pos + 1)?], None)),
            MeetRight => {
                let (a, b) = take2(premises);
                Ok(rebuilt(
                    vec![self.cut(d1.clone(), a, pos)?, self.cut(d1, b, pos)?],
                    None,
                ))
            }
            FuseRight => {
                let (a, b) = take2(premises);
                let n = a.conclusion.left.len();
                let premises = if pos < n {
                    vec![self.cut(d1, a, pos)?, b]
                } else {
                    vec![a, self.cut(d1, b, pos - n)?]
                };
                Ok(rebuilt(premises, None))
            }
            ELeft | FuseLeft | MeetLeft1 | MeetLeft2 | JoinLeft | RDivLeft | LDivLeft => {
                let j = *principals.first().ok_or_else(|| {
                    ProverError::IllFormedProof(format!("{rule} at `{conclusion}`"))
                })?;
                let premises = self.left_passive(d1, rule, premises, j, pos)?;
                Ok(rebuilt(premises, None))
            }
            LgW | AbLgW | W => {
                let a = *starts.first().ok_or_else(|| {
                    ProverError::IllFormedProof(format!("{rule} at `{conclusion}`"))
                })?;
                let k = conclusion.left.len() - premises[0].conclusion.left.len();
                let inner = take1(premises);
                if pos < a {
                    Ok(rebuilt(vec![self.cut(d1, inner, pos)?], certificate))
                } else if pos >= a + k {
                    Ok(rebuilt(vec![self.cut(d1, inner, pos - k)?], certificate))
                } else {
                    // The cut formula is deleted: widen the block instead.
                    let block = concat(&[
                        &conclusion.left[a..pos],
                        &d1.conclusion.left,
                        &conclusion.left[pos + 1..a + k],
                    ]);
                    let certificate = match certificate {
                        None => None,
                        Some(c) => Some(self.certify(block, c)?),
                    };
                    Ok(rebuilt(vec![inner], certificate))
                }
            }
            other => Err(ProverError::IllFormedProof(format!(
                "unexpected {other} below a cut"
            ))),
        }
    }

    fn certify(&self, block: Vec<Term>, old: Certificate) -> Result<Certificate, ProverError> {
        let sequent = Sequent::single(block, Term::E);
        let oracle = self
            .oracle
            .as_ref()
            .ok_or_else(|| ProverError::IllFormedProof("certificate without an oracle".into()))?;
        if !oracle.valid(&sequent)? {
            return Err(ProverError::IllFormedProof(format!(
                "widened side-condition `{sequent}` is not valid"
            )));
        }
        Ok(Certificate {
            oracle: old.oracle,
            sequent,
        })
    }

    /// Premises of a left rule with principal position `j != pos`, after
    /// cutting `d1` into the one that holds position `pos`.
    fn left_passive(
        &self,
        d1: Proof,
        rule: Rule,
        premises: Vec<Proof>,
        j: usize,
        pos: usize,
    ) -> Result<Vec<Proof>, ProverError> {
        use Rule::*;
        Ok(match rule {
            ELeft => {
                let p = if pos < j { pos } else { pos - 1 };
                vec![self.cut(d1, take1(premises), p)?]
            }
            FuseLeft => {
                let p = if pos < j { pos } else { pos + 1 };
                vec![self.cut(d1, take1(premises), p)?]
            }
            MeetLeft1 | MeetLeft2 => vec![self.cut(d1, take1(premises), pos)?],
            JoinLeft => {
                let (a, b) = take2(premises);
                vec![self.cut(d1.clone(), a, pos)?, self.cut(d1, b, pos)?]
            }
            RDivLeft => {
                let (side, main) = take2(premises);
                let k = side.conclusion.left.len();
                if pos > j && pos <= j + k {
                    vec![self.cut(d1, side, pos - j - 1)?, main]
                } else if pos < j {
                    vec![side, self.cut(d1, main, pos)?]
                } else {
                    vec![side, self.cut(d1, main, pos - k)?]
                }
            }
            LDivLeft => {
                let (side, main) = take2(premises);
                let k = side.conclusion.left.len();
                if pos + k >= j && pos < j {
                    vec![self.cut(d1, side, pos + k - j)?, main]
                } else if pos < j {
                    vec![side, self.cut(d1, main, pos)?]
                } else {
                    vec![side, self.cut(d1, main, pos - k)?]
                }
            }
            _ => unreachable!("left rules only"),
        })
    }

    /// Both derivations introduce the cut formula: reduce to cuts on its
    /// immediate subterms.
    fn principal(&self, d1: Proof, d2: Proof, pos: usize) -> Result<Proof, ProverError> {
        use Rule::*;
        let d2_rule = d2.rule;
        let mismatch = || {
            Err(ProverError::IllFormedProof(format!(
                "{} meets {} on the cut formula",
                d1.rule, d2_rule
            )))
        };
        match (d1.rule, d2_rule) {
            (ERight, ELeft) => Ok(take1(d2.premises)),
            (FuseRight, FuseLeft) => {
                let (pa, pb) = take2(d1.premises);
                let x = self.cut(pb, take1(d2.premises), pos + 1)?;
                self.cut(pa, x, pos)
            }
            (MeetRight, MeetLeft1) => self.cut(take2(d1.premises).0, take1(d2.premises), pos),
            (MeetRight, MeetLeft2) => self.cut(take2(d1.premises).1, take1(d2.premises), pos),
            (JoinRight1, JoinLeft) => self.cut(take1(d1.premises), take2(d2.premises).0, pos),
            (JoinRight2, JoinLeft) => self.cut(take1(d1.premises), take2(d2.premises).1, pos),
            (RDivRight, RDivLeft) => {
                // d1: Γ2, s => t;  d2: Γa, t/s, Γb, Γc with Γb => s and Γa, t, Γc => u.
                let p = take1(d1.premises);
                let n = p.conclusion.left.len() - 1;
                let (q1, q2) = take2(d2.premises);
                let x = self.cut(q1, p, n)?;
                self.cut(x, q2, pos)
            }
            (LDivRight, LDivLeft) => {
                // d1: s, Γ2 => t;  d2: Γa, Γb, s\t, Γc with Γb => s and Γa, t, Γc => u.
                let p = take1(d1.premises);
                let (q1, q2) = take2(d2.premises);
                let k = q1.conclusion.left.len();
                let x = self.cut(q1, p, 0)?;
                self.cut(x, q2, pos - k)
            }
            _ => mismatch(),
        }
    }
}
