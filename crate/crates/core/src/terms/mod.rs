//! Term language over the residuated-lattice signature `{/\, \/, *, \, /, e}`
//! with the optional constant `f`, plus sequents and the theory table.
//!
//! Derived connectives (`~`, `-`, `->`, `+`) are expanded at parse time, so a
//! [`Term`] is always built from the eight constructors below.

mod parse;
mod print;
mod sequent;
mod theory;
mod translate;

use std::collections::BTreeSet;
use std::sync::Arc;

pub use parse::{parse_inequation, parse_sequent, parse_term, parse_term_unchecked, ParseError};
pub use print::print_term;
pub use sequent::Sequent;
pub use theory::{OracleKind, Theory, UnknownTheory};
pub use translate::{complexity, double_neg, neg_translation, replace_f_with_e, PointedTermError};

/// A residuated-lattice term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Arc<str>),
    E,
    F,
    Meet(Arc<Term>, Arc<Term>),
    Join(Arc<Term>, Arc<Term>),
    Fuse(Arc<Term>, Arc<Term>),
    /// `l \ r`
    LDiv(Arc<Term>, Arc<Term>),
    /// `l / r`
    RDiv(Arc<Term>, Arc<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(Arc::from(name))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Arc::new(l), Arc::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Arc::new(l), Arc::new(r))
    }

    pub fn fuse(l: Term, r: Term) -> Term {
        Term::Fuse(Arc::new(l), Arc::new(r))
    }

    pub fn ldiv(l: Term, r: Term) -> Term {
        Term::LDiv(Arc::new(l), Arc::new(r))
    }

    pub fn rdiv(l: Term, r: Term) -> Term {
        Term::RDiv(Arc::new(l), Arc::new(r))
    }

    /// `~t`, i.e. `t \ e`.
    pub fn tilde(t: Term) -> Term {
        Term::ldiv(t, Term::E)
    }

    /// Product of a sequence, with the empty product read as `e`.
    pub fn product<'a, I>(terms: I) -> Term
    where
        I: IntoIterator<Item = &'a Term>,
    {
        let mut it = terms.into_iter();
        match it.next() {
            None => Term::E,
            Some(first) => it.fold(first.clone(), |acc, t| Term::fuse(acc, t.clone())),
        }
    }

    pub fn is_pointed(&self) -> bool {
        match self {
            Term::F => true,
            Term::Var(_) | Term::E => false,
            Term::Meet(l, r)
            | Term::Join(l, r)
            | Term::Fuse(l, r)
            | Term::LDiv(l, r)
            | Term::RDiv(l, r) => l.is_pointed() || r.is_pointed(),
        }
    }

    /// Uses only `{*, \, /, e}` (and variables).
    pub fn is_monoid_term(&self) -> bool {
        match self {
            Term::Var(_) | Term::E => true,
            Term::F | Term::Meet(..) | Term::Join(..) => false,
            Term::Fuse(l, r) | Term::LDiv(l, r) | Term::RDiv(l, r) => {
                l.is_monoid_term() && r.is_monoid_term()
            }
        }
    }

    /// Uses only `{\, /, e}` (and variables).
    pub fn is_residual_term(&self) -> bool {
        match self {
            Term::Var(_) | Term::E => true,
            Term::F | Term::Meet(..) | Term::Join(..) | Term::Fuse(..) => false,
            Term::LDiv(l, r) | Term::RDiv(l, r) => l.is_residual_term() && r.is_residual_term(),
        }
    }

    pub fn vars(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::E | Term::F => {}
            Term::Meet(l, r)
            | Term::Join(l, r)
            | Term::Fuse(l, r)
            | Term::LDiv(l, r)
            | Term::RDiv(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Whether the term lies inside the signature of `theory`.
    pub fn in_signature(&self, theory: Theory) -> bool {
        if self.is_pointed() && !theory.pointed() {
            return false;
        }
        match theory.term_signature() {
            theory::TermSignature::Full => true,
            theory::TermSignature::Monoid => self.is_monoid_term(),
            theory::TermSignature::Residual => self.is_residual_term(),
        }
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_term(self))
    }
}
