//! Local schema checking of derivations, independent of the search code.

use std::fmt;

use super::context::{concat, remove_at, remove_one, same_multiset, splice};
use super::oracle::oracle_valid;
use super::{validate_sequent, Proof, Rule};
use crate::lg_oracle::DEFAULT_WORD_CAP;
use crate::terms::{Sequent, Term, Theory};

/// The first node that fails, addressed by premise indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub path: Vec<usize>,
    pub conclusion: String,
    pub reason: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(
            f,
            "at [{}] `{}`: {}",
            path.join("."),
            self.conclusion,
            self.reason
        )
    }
}

pub fn check_proof(p: &Proof, th: Theory, allow_cut: bool) -> Result<(), CheckFailure> {
    let mut path = Vec::new();
    check_node(p, th, allow_cut, &mut path)
}

pub fn is_valid_proof(p: &Proof, th: Theory, allow_cut: bool) -> bool {
    check_proof(p, th, allow_cut).is_ok()
}

fn check_node(
    p: &Proof,
    th: Theory,
    allow_cut: bool,
    path: &mut Vec<usize>,
) -> Result<(), CheckFailure> {
    let fail = |reason: String| CheckFailure {
        path: path.clone(),
        conclusion: p.conclusion.to_string(),
        reason,
    };
    if !p.rule.allowed_in(th) {
        return Err(fail(format!(
            "rule {} is not part of the {} calculus",
            p.rule, th
        )));
    }
    if p.rule == Rule::Cut && !allow_cut {
        return Err(fail("cut is not allowed here".into()));
    }
    validate_sequent(&p.conclusion, th).map_err(|e| fail(e.to_string()))?;
    if p.premises.len() != arity(p.rule) {
        return Err(fail(format!(
            "{} takes {} premise(s), found {}",
            p.rule,
            arity(p.rule),
            p.premises.len()
        )));
    }
    check_certificate(p, th).map_err(&fail)?;
    let ok = if th.exchange() {
        multiset_schema(p, th)
    } else {
        list_schema(p)
    };
    if !ok {
        return Err(fail(format!("premises do not match the {} schema", p.rule)));
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        check_node(q, th, allow_cut, path)?;
        path.pop();
    }
    Ok(())
}

fn arity(rule: Rule) -> usize {
    use Rule::*;
    match rule {
        Id | ERight | FLeft | GenAxId | GenAxE => 0,
        Cut | RDivLeft | LDivLeft | FuseRight | JoinLeft | MeetRight | ImpLeft => 2,
        _ => 1,
    }
}

fn check_certificate(p: &Proof, th: Theory) -> Result<(), String> {
    let needs = matches!(
        p.rule,
        Rule::LgW | Rule::AbLgW | Rule::GenAxId | Rule::GenAxE
    );
    match (&p.certificate, needs) {
        (None, false) => Ok(()),
        (Some(_), false) => Err(format!("{} carries no side-condition", p.rule)),
        (None, true) => Err("missing certificate".into()),
        (Some(c), true) => {
            if Some(c.oracle) != th.oracle() {
                return Err(format!("certificate uses the {} oracle", c.oracle));
            }
            if !th.multi_conclusion() && c.sequent.right != [Term::E] {
                return Err("certificate must have the form Δ => e".into());
            }
            match oracle_valid(c.oracle, &c.sequent, DEFAULT_WORD_CAP) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("{} rejects `{}`", c.oracle, c.sequent)),
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn prem(p: &Proof, i: usize) -> &Sequent {
    &p.premises[i].conclusion
}

/// Schemas for sequences without exchange (single-conclusion).
fn list_schema(p: &Proof) -> bool {
    use Rule::*;
    let l = &p.conclusion.left;
    let r = &p.conclusion.right;
    let u = &r[0];
    match p.rule {
        Id => l.len() == 1 && &l[0] == u,
        ERight => l.is_empty() && *u == Term::E,
        GenAxId => {
            let d = &p.certificate.as_ref().expect("checked").sequent.left;
            let u1 = std::slice::from_ref(u);
            *l == concat(&[d, u1]) || *l == concat(&[u1, d])
        }
        GenAxE => *u == Term::E && p.certificate.as_ref().expect("checked").sequent.left == *l,
        ELeft | FuseLeft | MeetLeft1 | MeetLeft2 | JoinLeft | RDivLeft | LDivLeft => {
            !left_principals(p).is_empty()
        }
        RDivRight => match u {
            Term::RDiv(t, s) => {
                prem(p, 0).left == concat(&[l, &[(**s).clone()]])
                    && prem(p, 0).right == [(**t).clone()]
            }
            _ => false,
        },
        LDivRight => match u {
            Term::LDiv(s, t) => {
                prem(p, 0).left == concat(&[&[(**s).clone()], l])
                    && prem(p, 0).right == [(**t).clone()]
            }
            _ => false,
        },
        JoinRight1 | JoinRight2 => match u {
            Term::Join(a, b) => {
                let pick = if p.rule == JoinRight1 { a } else { b };
                prem(p, 0).left == *l && prem(p, 0).right == [(**pick).clone()]
            }
            _ => false,
        },
        MeetRight => match u {
            Term::Meet(a, b) => {
                prem(p, 0).left == *l
                    && prem(p, 1).left == *l
                    && prem(p, 0).right == [(**a).clone()]
                    && prem(p, 1).right == [(**b).clone()]
            }
            _ => false,
        },
        FuseRight => match u {
            Term::Fuse(a, b) => {
                prem(p, 0).right == [(**a).clone()]
                    && prem(p, 1).right == [(**b).clone()]
                    && *l == concat(&[&prem(p, 0).left, &prem(p, 1).left])
            }
            _ => false,
        },
        Cut => {
            let (d1, d2) = (prem(p, 0), prem(p, 1));
            d2.right == *r && !cut_positions(d1, d2, l).is_empty()
        }
        LgW | AbLgW | W => prem(p, 0).right == *r && !block_starts(p).is_empty(),
        ExchangeLeft | ExchangeRight | FLeft | FRight | ImpLeft | ImpRight => false,
    }
}

/// Positions `i` of `d2`'s antecedent at which cutting in `d1` yields `left`.
pub(crate) fn cut_positions(d1: &Sequent, d2: &Sequent, left: &[Term]) -> Vec<usize> {
    let Some(s) = d1.succedent() else {
        return Vec::new();
    };
    (0..d2.left.len())
        .filter(|&i| &d2.left[i] == s && splice(&d2.left, i, &d1.left) == left)
        .collect()
}

/// Positions at which a left rule's principal formula may sit.
pub(crate) fn left_principals(p: &Proof) -> Vec<usize> {
    let l = &p.conclusion.left;
    (0..l.len()).filter(|&i| left_instance(p, i)).collect()
}

fn left_instance(p: &Proof, i: usize) -> bool {
    use Rule::*;
    let l = &p.conclusion.left;
    let r = &p.conclusion.right;
    let main_right = |k: usize| prem(p, k).right == *r;
    match (p.rule, &l[i]) {
        (ELeft, Term::E) => prem(p, 0).left == remove_at(l, i) && main_right(0),
        (FuseLeft, Term::Fuse(a, b)) => {
            prem(p, 0).left == splice(l, i, &[(**a).clone(), (**b).clone()]) && main_right(0)
        }
        (MeetLeft1, Term::Meet(a, _)) | (MeetLeft2, Term::Meet(_, a)) => {
            prem(p, 0).left == splice(l, i, &[(**a).clone()]) && main_right(0)
        }
        (JoinLeft, Term::Join(a, b)) => {
            prem(p, 0).left == splice(l, i, &[(**a).clone()])
                && prem(p, 1).left == splice(l, i, &[(**b).clone()])
                && main_right(0)
                && main_right(1)
        }
        (RDivLeft, Term::RDiv(t, s)) => {
            let g2 = &prem(p, 0).left;
            let k = g2.len();
            prem(p, 0).right == [(**s).clone()]
                && i + 1 + k <= l.len()
                && l[i + 1..i + 1 + k] == g2[..]
                && prem(p, 1).left == concat(&[&l[..i], &[(**t).clone()], &l[i + 1 + k..]])
                && main_right(1)
        }
        (LDivLeft, Term::LDiv(s, t)) => {
            let g2 = &prem(p, 0).left;
            let k = g2.len();
            prem(p, 0).right == [(**s).clone()]
                && k <= i
                && l[i - k..i] == g2[..]
                && prem(p, 1).left == concat(&[&l[..i - k], &[(**t).clone()], &l[i + 1..]])
                && main_right(1)
        }
        _ => false,
    }
}

/// Start positions of the block a weakening node inserts into its premise.
pub(crate) fn block_starts(p: &Proof) -> Vec<usize> {
    let l = &p.conclusion.left;
    let pl = &prem(p, 0).left;
    if pl.len() > l.len() {
        return Vec::new();
    }
    let k = l.len() - pl.len();
    let block = p.certificate.as_ref().map(|c| &c.sequent.left);
    if let Some(b) = block {
        if b.len() != k {
            return Vec::new();
        }
    }
    (0..=pl.len())
        .filter(|&a| {
            l[..a] == pl[..a]
                && l[a + k..] == pl[a..]
                && block.is_none_or(|b| l[a..a + k] == b[..])
        })
        .collect()
}

/// Schemas modulo exchange; covers the pointed multiple-conclusion calculus.
fn multiset_schema(p: &Proof, th: Theory) -> bool {
    use Rule::*;
    let same = same_multiset;
    let l = &p.conclusion.left;
    let r = &p.conclusion.right;
    let one = |t: &Term| vec![t.clone()];
    let lefts = || first_occurrences(l);
    let rights = || first_occurrences(r);
    let cert = || &p.certificate.as_ref().expect("checked").sequent;
    let unchanged_right = |k: usize| same(&prem(p, k).right, r);
    let unchanged_left = |k: usize| same(&prem(p, k).left, l);
    match p.rule {
        Id => l.len() == 1 && r.len() == 1 && l[0] == r[0],
        ERight => l.is_empty() && r.len() == 1 && r[0] == Term::E,
        FLeft => l.len() == 1 && l[0] == Term::F && r.is_empty(),
        GenAxId => r.len() == 1 && same(l, &concat(&[&cert().left, &r[..]])),
        GenAxE => r.len() == 1 && r[0] == Term::E && same(l, &cert().left),
        ELeft => lefts().any(|i| {
            l[i] == Term::E && same(&remove_at(l, i), &prem(p, 0).left) && unchanged_right(0)
        }),
        FRight => rights().any(|j| {
            r[j] == Term::F && same(&remove_at(r, j), &prem(p, 0).right) && unchanged_left(0)
        }),
        FuseLeft => lefts().any(|i| match &l[i] {
            Term::Fuse(a, b) => {
                same(
                    &splice(l, i, &[(**a).clone(), (**b).clone()]),
                    &prem(p, 0).left,
                ) && unchanged_right(0)
            }
            _ => false,
        }),
        MeetLeft1 | MeetLeft2 => lefts().any(|i| match &l[i] {
            Term::Meet(a, b) => {
                let pick = if p.rule == MeetLeft1 { a } else { b };
                same(&splice(l, i, &one(pick)), &prem(p, 0).left) && unchanged_right(0)
            }
            _ => false,
        }),
        JoinLeft => lefts().any(|i| match &l[i] {
            Term::Join(a, b) => {
                same(&splice(l, i, &one(a)), &prem(p, 0).left)
                    && same(&splice(l, i, &one(b)), &prem(p, 1).left)
                    && unchanged_right(0)
                    && unchanged_right(1)
            }
            _ => false,
        }),
        JoinRight1 | JoinRight2 => rights().any(|j| match &r[j] {
            Term::Join(a, b) => {
                let pick = if p.rule == JoinRight1 { a } else { b };
                unchanged_left(0) && same(&splice(r, j, &one(pick)), &prem(p, 0).right)
            }
            _ => false,
        }),
        MeetRight => rights().any(|j| match &r[j] {
            Term::Meet(a, b) => {
                unchanged_left(0)
                    && unchanged_left(1)
                    && same(&splice(r, j, &one(a)), &prem(p, 0).right)
                    && same(&splice(r, j, &one(b)), &prem(p, 1).right)
            }
            _ => false,
        }),
        RDivRight | LDivRight | ImpRight => rights().any(|j| {
            let Some((s, t)) = implication(p.rule, &r[j]) else {
                return false;
            };
            same(&prem(p, 0).left, &concat(&[l, &one(s)]))
                && same(&prem(p, 0).right, &splice(r, j, &one(t)))
        }),
        FuseRight => rights().any(|j| match &r[j] {
            Term::Fuse(a, b) => {
                let (Some(r1), Some(r2)) = (
                    remove_one(&prem(p, 0).right, a),
                    remove_one(&prem(p, 1).right, b),
                ) else {
                    return false;
                };
                same(&remove_at(r, j), &concat(&[&r1, &r2]))
                    && same(l, &concat(&[&prem(p, 0).left, &prem(p, 1).left]))
            }
            _ => false,
        }),
        RDivLeft | LDivLeft | ImpLeft => lefts().any(|i| {
            let Some((s, t)) = implication(p.rule, &l[i]) else {
                return false;
            };
            let (Some(r1), Some(l2)) = (
                remove_one(&prem(p, 0).right, s),
                remove_one(&prem(p, 1).left, t),
            ) else {
                return false;
            };
            same(&remove_at(l, i), &concat(&[&prem(p, 0).left, &l2]))
                && same(r, &concat(&[&prem(p, 1).right, &r1]))
        }),
        Cut => {
            let (d1, d2) = (prem(p, 0), prem(p, 1));
            first_occurrences(&d1.right).any(|k| {
                let s = &d1.right[k];
                let Some(l2) = remove_one(&d2.left, s) else {
                    return false;
                };
                same(l, &concat(&[&d1.left, &l2]))
                    && same(r, &concat(&[&remove_at(&d1.right, k), &d2.right]))
            })
        }
        LgW | AbLgW => {
            let c = cert();
            let extra_right: &[Term] = if th.multi_conclusion() { &c.right } else { &[] };
            same(l, &concat(&[&prem(p, 0).left, &c.left]))
                && same(r, &concat(&[&prem(p, 0).right, extra_right]))
        }
        W => unchanged_right(0) && is_submultiset(&prem(p, 0).left, l),
        ExchangeLeft | ExchangeRight => unchanged_left(0) && unchanged_right(0),
    }
}

/// `(argument, result)` of an implication matched by the rule family.
fn implication(rule: Rule, t: &Term) -> Option<(&Term, &Term)> {
    use Rule::*;
    match (rule, t) {
        (RDivLeft | RDivRight | ImpLeft | ImpRight, Term::RDiv(res, arg)) => Some((arg, res)),
        (LDivLeft | LDivRight | ImpLeft | ImpRight, Term::LDiv(arg, res)) => Some((arg, res)),
        _ => None,
    }
}

/// First occurrence of each element; contexts here need not be sorted.
fn first_occurrences(v: &[Term]) -> impl Iterator<Item = usize> + '_ {
    (0..v.len()).filter(move |&i| !v[..i].contains(&v[i]))
}

fn is_submultiset(small: &[Term], big: &[Term]) -> bool {
    let mut rest = big.to_vec();
    for t in small {
        match remove_one(&rest, t) {
            Some(r) => rest = r,
            None => return false,
        }
    }
    true
}
