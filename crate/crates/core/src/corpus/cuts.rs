//! Proofs with cuts, assembled from cut-free derivations found by search.
//!
//! A cut needs a derivation of `Γ ⇒ a` and one of `Σ₁, a, Σ₂ ⇒ c`. Both come
//! from small families of sequents derivable by construction: families that
//! *produce* a (given or random) formula on the right, and families that
//! *consume* a given formula on the left. Further cuts are stacked below or
//! above the growing proof, occasionally under an ordinary rule.

use rand::seq::SliceRandom;
use rand::Rng;

use super::TermGen;
use crate::prover::{check_proof, Proof, Prover, ProverError, Rule, SearchOutcome};
use crate::terms::{Sequent, Term, Theory};

/// Theories whose proofs `eliminate_cuts` accepts.
pub const CUT_THEORIES: [Theory; 5] = [
    Theory::Rl,
    Theory::Irl,
    Theory::Icrl,
    Theory::Sirm,
    Theory::PseudoBci,
];

struct Builder<'a> {
    th: Theory,
    gen: &'a TermGen,
    prover: Prover,
}

impl Builder<'_> {
    fn derive(&self, s: Sequent) -> Result<Option<Proof>, ProverError> {
        if !self.gen.admits(&s) {
            return Ok(None);
        }
        Ok(match self.prover.search(&s)? {
            SearchOutcome::Derivable(p) => Some(p),
            SearchOutcome::NotDerivable(_) => None,
        })
    }

    fn sub<R: Rng>(&self, rng: &mut R) -> Term {
        self.gen
            .term_of_depth(rng, self.gen.depth().saturating_sub(2).max(1))
    }

    /// `Γ ⇒ a` for the given `a`.
    fn producing<R: Rng>(&self, rng: &mut R, a: &Term) -> Result<Proof, ProverError> {
        for _ in 0..16 {
            let r = self.sub(rng);
            let s = match rng.gen_range(0..5) {
                0 => Sequent::single(vec![a.clone()], a.clone()),
                1 => Sequent::single(vec![Term::meet(a.clone(), r)], a.clone()),
                2 => Sequent::single(vec![r.clone(), Term::ldiv(r, a.clone())], a.clone()),
                3 => Sequent::single(vec![Term::rdiv(a.clone(), r.clone()), r], a.clone()),
                _ => Sequent::single(vec![Term::fuse(Term::E, a.clone())], a.clone()),
            };
            if let Some(p) = self.derive(s)? {
                return Ok(p);
            }
        }
        self.identity(a)
    }

    /// `Γ ⇒ a` for some fresh `a`.
    fn fresh_right<R: Rng>(&self, rng: &mut R) -> Result<Proof, ProverError> {
        loop {
            let s = self.sub(rng);
            let r = self.sub(rng);
            let y = self.gen.leaf(rng);
            let cand = match rng.gen_range(0..7) {
                0 => Sequent::single(vec![s.clone()], Term::join(s, r)),
                1 => Sequent::single(vec![s.clone(), Term::ldiv(s, r.clone())], r),
                2 => Sequent::single(vec![r.clone(), s.clone()], Term::fuse(r, s)),
                3 => Sequent::single(vec![Term::meet(s.clone(), r)], s),
                4 => Sequent::single(vec![Term::ldiv(s.clone(), s)], Term::E),
                5 => Sequent::single(vec![y.clone(), s.clone(), Term::tilde(s)], y),
                _ => Sequent::single(vec![s.clone()], s),
            };
            if let Some(p) = self.derive(cand)? {
                return Ok(p);
            }
        }
    }

    /// `Σ₁, a, Σ₂ ⇒ c` for the given `a`, with the position of `a`.
    fn consuming<R: Rng>(&self, rng: &mut R, a: &Term) -> Result<(Proof, usize), ProverError> {
        for _ in 0..16 {
            let r = self.sub(rng);
            let y = self.gen.leaf(rng);
            let (s, pos) = match rng.gen_range(0..7) {
                0 => (
                    Sequent::single(vec![a.clone()], Term::join(a.clone(), r)),
                    0,
                ),
                1 => (
                    Sequent::single(vec![a.clone(), Term::ldiv(a.clone(), r.clone())], r),
                    0,
                ),
                2 => (
                    Sequent::single(vec![Term::rdiv(r.clone(), a.clone()), a.clone()], r),
                    1,
                ),
                3 => (
                    Sequent::single(vec![a.clone(), r.clone()], Term::fuse(a.clone(), r)),
                    0,
                ),
                4 => (
                    Sequent::single(vec![a.clone(), Term::tilde(a.clone()), y.clone()], y),
                    0,
                ),
                5 => (
                    Sequent::single(vec![y.clone(), a.clone(), Term::tilde(a.clone())], y),
                    1,
                ),
                _ => (
                    Sequent::single(vec![r.clone(), a.clone()], Term::fuse(r, a.clone())),
                    1,
                ),
            };
            if let Some(p) = self.derive(s)? {
                return Ok((p, pos));
            }
        }
        Ok((self.identity(a)?, 0))
    }

    fn identity(&self, a: &Term) -> Result<Proof, ProverError> {
        let s = Sequent::single(vec![a.clone()], a.clone());
        Ok(self.derive(s)?.expect("identity sequents are derivable"))
    }
}

fn cut(d1: Proof, d2: Proof, pos: usize) -> Proof {
    let mut left = d2.conclusion.left.clone();
    left.splice(pos..=pos, d1.conclusion.left.iter().cloned());
    let conclusion = Sequent::single(left, d2.conclusion.right[0].clone());
    Proof::node(conclusion, Rule::Cut, vec![d1, d2])
}

/// Wrap `p` in a single-premise rule that leaves its cuts in place.
fn wrap<R: Rng>(rng: &mut R, th: Theory, gen: &TermGen, p: Proof) -> Proof {
    let r = gen.leaf(rng);
    let c = p.conclusion.right[0].clone();
    let l = p.conclusion.left.clone();
    if th.has_lattice() && rng.gen_bool(0.5) {
        let concl = Sequent::single(l, Term::join(c, r));
        return Proof::node(concl, Rule::JoinRight1, vec![p]);
    }
    if th.has_lattice() && !l.is_empty() {
        let i = rng.gen_range(0..l.len());
        let mut left = l;
        left[i] = Term::meet(left[i].clone(), r);
        return Proof::node(Sequent::single(left, c), Rule::MeetLeft1, vec![p]);
    }
    // ⇒ ∖: move the first antecedent into the succedent.
    if !l.is_empty() {
        let a = l[0].clone();
        let concl = Sequent::single(l[1..].to_vec(), Term::ldiv(a, c));
        return Proof::node(concl, Rule::LDivRight, vec![p]);
    }
    p
}

/// A checkable proof in `th` containing exactly `cuts` cuts, or `None` when
/// the theory is outside [`CUT_THEORIES`].
pub fn cut_proof<R: Rng>(
    rng: &mut R,
    th: Theory,
    gen: &TermGen,
    cuts: usize,
) -> Result<Option<Proof>, ProverError> {
    if !CUT_THEORIES.contains(&th) || cuts == 0 {
        return Ok(None);
    }
    let b = Builder {
        th,
        gen,
        prover: Prover::new(th),
    };
    let d1 = b.fresh_right(rng)?;
    let a = d1.conclusion.right[0].clone();
    let (d2, pos) = b.consuming(rng, &a)?;
    let mut p = cut(d1, d2, pos);
    for _ in 1..cuts {
        if rng.gen_bool(0.3) {
            p = wrap(rng, b.th, gen, p);
        }
        if rng.gen_bool(0.5) || p.conclusion.left.is_empty() {
            // The proof so far derives the cut formula.
            let c = p.conclusion.right[0].clone();
            let (d2, pos) = b.consuming(rng, &c)?;
            p = cut(p, d2, pos);
        } else {
            // The proof so far consumes one of its antecedents.
            let pos = *(0..p.conclusion.left.len())
                .collect::<Vec<_>>()
                .choose(rng)
                .expect("non-empty antecedent");
            let a = p.conclusion.left[pos].clone();
            let d1 = b.producing(rng, &a)?;
            p = cut(d1, p, pos);
        }
    }
    debug_assert!(check_proof(&p, th, true).is_ok());
    Ok(Some(p))
}
