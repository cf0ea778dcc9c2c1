use std::sync::Arc;

use super::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("term `{0}` contains the constant f")]
pub struct PointedTermError(pub String);

/// Number of variable, constant and connective occurrences.
pub fn complexity(t: &Term) -> usize {
    match t {
        Term::Var(_) | Term::E | Term::F => 1,
        Term::Meet(l, r)
        | Term::Join(l, r)
        | Term::Fuse(l, r)
        | Term::LDiv(l, r)
        | Term::RDiv(l, r) => 1 + complexity(l) + complexity(r),
    }
}

/// The negative-cone translation `t⁻`.
///
/// `e⁻ = e`, `x⁻ = x /\ e`, `(s ∗ t)⁻ = s⁻ ∗ t⁻` for `∗ ∈ {/\, \/, *}`,
/// `(s \ t)⁻ = (s⁻ \ t⁻) /\ e` and `(s / t)⁻ = (s⁻ / t⁻) /\ e`.
pub fn neg_translation(t: &Term) -> Result<Term, PointedTermError> {
    if t.is_pointed() {
        return Err(PointedTermError(t.to_string()));
    }
    Ok(neg(t))
}

fn neg(t: &Term) -> Term {
    match t {
        Term::E => Term::E,
        Term::F => unreachable!("checked by neg_translation"),
        Term::Var(_) => Term::meet(t.clone(), Term::E),
        Term::Meet(l, r) => Term::meet(neg(l), neg(r)),
        Term::Join(l, r) => Term::join(neg(l), neg(r)),
        Term::Fuse(l, r) => Term::fuse(neg(l), neg(r)),
        Term::LDiv(l, r) => Term::meet(Term::ldiv(neg(l), neg(r)), Term::E),
        Term::RDiv(l, r) => Term::meet(Term::rdiv(neg(l), neg(r)), Term::E),
    }
}

/// `~~t = (t \ e) \ e`.
pub fn double_neg(t: &Term) -> Term {
    Term::ldiv(Term::ldiv(t.clone(), Term::E), Term::E)
}

/// Substitute `e` for every occurrence of `f`.
pub fn replace_f_with_e(t: &Term) -> Term {
    if !t.is_pointed() {
        return t.clone();
    }
    let map = |l: &Arc<Term>, r: &Arc<Term>| (replace_f_with_e(l), replace_f_with_e(r));
    match t {
        Term::F => Term::E,
        Term::Var(_) | Term::E => t.clone(),
        Term::Meet(l, r) => {
            let (l, r) = map(l, r);
            Term::meet(l, r)
        }
        Term::Join(l, r) => {
            let (l, r) = map(l, r);
            Term::join(l, r)
        }
        Term::Fuse(l, r) => {
            let (l, r) = map(l, r);
            Term::fuse(l, r)
        }
        Term::LDiv(l, r) => {
            let (l, r) = map(l, r);
            Term::ldiv(l, r)
        }
        Term::RDiv(l, r) => {
            let (l, r) = map(l, r);
            Term::rdiv(l, r)
        }
    }
}
