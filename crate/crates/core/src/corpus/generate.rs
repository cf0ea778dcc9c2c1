//! Seeded random terms, sequents and equations.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::terms::{Sequent, Term, Theory};

const VAR_NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

/// Random terms over a theory's signature.
#[derive(Clone, Debug)]
pub struct TermGen {
    vars: Vec<Arc<str>>,
    depth: usize,
    lattice: bool,
    fuse: bool,
    pointed: bool,
}

impl TermGen {
    pub fn for_theory(th: Theory, vars: usize, depth: usize) -> TermGen {
        TermGen {
            vars: VAR_NAMES[..vars.clamp(1, VAR_NAMES.len())]
                .iter()
                .map(|&v| Arc::from(v))
                .collect(),
            depth,
            lattice: th.has_lattice(),
            fuse: th.has_fuse(),
            pointed: th.pointed(),
        }
    }

    /// The same generator without the constant `f`.
    pub fn f_free(mut self) -> TermGen {
        self.pointed = false;
        self
    }

    pub fn without_fuse(mut self) -> TermGen {
        self.fuse = false;
        self
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn leaf<R: Rng>(&self, rng: &mut R) -> Term {
        let roll = rng.gen_range(0..10);
        if roll < 8 {
            Term::Var(
                self.vars
                    .choose(rng)
                    .expect("at least one variable")
                    .clone(),
            )
        } else if self.pointed && roll == 9 {
            Term::F
        } else {
            Term::E
        }
    }

    /// A term of depth at most `depth`.
    pub fn term_of_depth<R: Rng>(&self, rng: &mut R, depth: usize) -> Term {
        if depth == 0 || rng.gen_bool(0.25) {
            return self.leaf(rng);
        }
        let mut ops: Vec<u8> = vec![3, 4];
        if self.lattice {
            ops.extend([0, 1]);
        }
        if self.fuse {
            ops.push(2);
        }
        let op = *ops.choose(rng).expect("residuals are always present");
        let l = self.term_of_depth(rng, depth - 1);
        let r = self.term_of_depth(rng, depth - 1);
        match op {
            0 => Term::meet(l, r),
            1 => Term::join(l, r),
            2 => Term::fuse(l, r),
            3 => Term::ldiv(l, r),
            _ => Term::rdiv(l, r),
        }
    }

    pub fn term<R: Rng>(&self, rng: &mut R) -> Term {
        self.term_of_depth(rng, self.depth)
    }

    /// `Γ ⇒ t` with up to two antecedent terms, of complexity at most `max`.
    pub fn sequent<R: Rng>(&self, rng: &mut R, max_complexity: usize) -> Sequent {
        loop {
            let n = rng.gen_range(0..=2);
            let left = (0..n).map(|_| self.term(rng)).collect();
            let s = Sequent::single(left, self.term(rng));
            if s.complexity() <= max_complexity {
                return s;
            }
        }
    }

    /// Like [`TermGen::sequent`], but with `0..=2` succedent terms.
    pub fn multi_sequent<R: Rng>(&self, rng: &mut R, max_complexity: usize) -> Sequent {
        loop {
            let n = rng.gen_range(0..=2);
            let m = rng.gen_range(0..=2);
            let left = (0..n).map(|_| self.term(rng)).collect();
            let right = (0..m).map(|_| self.term(rng)).collect();
            let s = Sequent::new(left, right);
            if s.complexity() <= max_complexity {
                return s;
            }
        }
    }

    /// A sequent from a family that is often derivable, with random
    /// subterms of depth one less than the generator's.
    pub fn templated<R: Rng>(&self, rng: &mut R) -> Sequent {
        let d = self.depth.saturating_sub(1);
        loop {
            let s = self.term_of_depth(rng, d);
            let r = self.term_of_depth(rng, d);
            let y = self.leaf(rng);
            let candidate = match rng.gen_range(0..9) {
                0 => Sequent::single(vec![s.clone()], s),
                1 => Sequent::single(vec![Term::meet(s.clone(), r)], s),
                2 => Sequent::single(vec![s.clone()], Term::join(r, s)),
                3 => Sequent::single(vec![s.clone(), Term::ldiv(s, r.clone())], r),
                4 => Sequent::single(vec![Term::rdiv(r.clone(), s.clone()), s], r),
                5 => Sequent::single(vec![r.clone(), s.clone()], Term::fuse(r, s)),
                6 => Sequent::single(vec![Term::ldiv(s.clone(), s)], Term::E),
                7 => Sequent::single(vec![s.clone(), Term::tilde(s), y.clone()], y),
                _ => Sequent::single(vec![Term::fuse(s.clone(), r.clone())], Term::fuse(r, s)),
            };
            if self.admits(&candidate) {
                return candidate;
            }
        }
    }

    pub(crate) fn admits(&self, s: &Sequent) -> bool {
        fn ok(g: &TermGen, t: &Term) -> bool {
            match t {
                Term::Var(_) | Term::E => true,
                Term::F => g.pointed,
                Term::Meet(l, r) | Term::Join(l, r) => g.lattice && ok(g, l) && ok(g, r),
                Term::Fuse(l, r) => g.fuse && ok(g, l) && ok(g, r),
                Term::LDiv(l, r) | Term::RDiv(l, r) => ok(g, l) && ok(g, r),
            }
        }
        s.left.iter().chain(&s.right).all(|t| ok(self, t))
    }
}
