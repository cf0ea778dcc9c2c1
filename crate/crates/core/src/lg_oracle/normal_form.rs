//! Join-of-meets normal form for ℓ-group terms.
//!
//! Residuals become group products with inverses (`a \ b ↦ a⁻¹b`,
//! `b / a ↦ ba⁻¹`), inverses are pushed inward with
//! `(ab)⁻¹ = b⁻¹a⁻¹`, `(a ∨ b)⁻¹ = a⁻¹ ∧ b⁻¹`, `(a ∧ b)⁻¹ = a⁻¹ ∨ b⁻¹`, and
//! products distribute over both lattice operations on either side.

use std::sync::Arc;

use super::{GroupWord, OracleError};
use crate::terms::Term;

/// Default cap on the total number of words in a normal form.
pub const DEFAULT_WORD_CAP: usize = 100_000;

/// What the normal-form construction needs from a group.
pub trait GroupElement: Clone + Ord {
    fn identity() -> Self;
    fn generator(var: &Arc<str>) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl GroupElement for GroupWord {
    fn identity() -> Self {
        GroupWord::identity()
    }
    fn generator(var: &Arc<str>) -> Self {
        GroupWord::generator(var)
    }
    fn mul(&self, other: &Self) -> Self {
        GroupWord::mul(self, other)
    }
    fn inverse(&self) -> Self {
        GroupWord::inverse(self)
    }
}

/// `∨_i ∧_j w_ij`: the outer list holds joinands, each a list of meetands.
///
/// Meetands within a joinand and the joinands themselves are kept sorted and
/// free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dnf<W> {
    pub joinands: Vec<Vec<W>>,
}

/// The ℓ-group normal form over free-group words.
pub type GroupNormalForm = Dnf<GroupWord>;

impl<W: GroupElement> Dnf<W> {
    fn atom(w: W) -> Self {
        Dnf {
            joinands: vec![vec![w]],
        }
    }

    pub fn word_count(&self) -> usize {
        self.joinands.iter().map(Vec::len).sum()
    }

    fn normalized(mut joinands: Vec<Vec<W>>) -> Self {
        for block in &mut joinands {
            block.sort();
            block.dedup();
        }
        joinands.sort();
        joinands.dedup();
        Dnf { joinands }
    }

    fn join(self, other: Self) -> Self {
        let mut joinands = self.joinands;
        joinands.extend(other.joinands);
        Dnf::normalized(joinands)
    }

    fn meet(&self, other: &Self, cap: usize) -> Result<Self, OracleError> {
        let words =
            self.joinands.len() * other.word_count() + other.joinands.len() * self.word_count();
        check_cap(words, cap)?;
        let mut joinands = Vec::with_capacity(self.joinands.len() * other.joinands.len());
        for a in &self.joinands {
            for b in &other.joinands {
                joinands.push(a.iter().chain(b).cloned().collect());
            }
        }
        Ok(Dnf::normalized(joinands))
    }

    fn mul(&self, other: &Self, cap: usize) -> Result<Self, OracleError> {
        check_cap(self.word_count() * other.word_count(), cap)?;
        let mut joinands = Vec::with_capacity(self.joinands.len() * other.joinands.len());
        for a in &self.joinands {
            for b in &other.joinands {
                let mut block = Vec::with_capacity(a.len() * b.len());
                for u in a {
                    for v in b {
                        block.push(u.mul(v));
                    }
                }
                joinands.push(block);
            }
        }
        Ok(Dnf::normalized(joinands))
    }
}

fn check_cap(words: usize, cap: usize) -> Result<(), OracleError> {
    if words > cap {
        Err(OracleError::SizeCap { words, cap })
    } else {
        Ok(())
    }
}

/// Normal form of `t` (or of `t⁻¹` when `inverted`).
pub(crate) fn normal_form<W: GroupElement>(
    t: &Term,
    inverted: bool,
    cap: usize,
) -> Result<Dnf<W>, OracleError> {
    match t {
        Term::F => Err(OracleError::Pointed(t.to_string())),
        Term::E => Ok(Dnf::atom(W::identity())),
        Term::Var(v) => {
            let g = W::generator(v);
            Ok(Dnf::atom(if inverted { g.inverse() } else { g }))
        }
        Term::Meet(l, r) | Term::Join(l, r) => {
            let a = normal_form::<W>(l, inverted, cap)?;
            let b = normal_form::<W>(r, inverted, cap)?;
            // Inversion swaps the two lattice operations.
            if matches!(t, Term::Meet(..)) != inverted {
                a.meet(&b, cap)
            } else {
                Ok(a.join(b))
            }
        }
        Term::Fuse(l, r) => {
            // (lr)⁻¹ = r⁻¹ l⁻¹
            if inverted {
                product(r, true, l, true, cap)
            } else {
                product(l, false, r, false, cap)
            }
        }
        // l \ r = l⁻¹ r, and (l⁻¹ r)⁻¹ = r⁻¹ l
        Term::LDiv(l, r) => {
            if inverted {
                product(r, true, l, false, cap)
            } else {
                product(l, true, r, false, cap)
            }
        }
        // l / r = l r⁻¹, and (l r⁻¹)⁻¹ = r l⁻¹
        Term::RDiv(l, r) => {
            if inverted {
                product(r, false, l, true, cap)
            } else {
                product(l, false, r, true, cap)
            }
        }
    }
}

fn product<W: GroupElement>(
    a: &Term,
    a_inv: bool,
    b: &Term,
    b_inv: bool,
    cap: usize,
) -> Result<Dnf<W>, OracleError> {
    let na = normal_form::<W>(a, a_inv, cap)?;
    let nb = normal_form::<W>(b, b_inv, cap)?;
    na.mul(&nb, cap)
}

/// ℓ-group normal form of an f-free term, with the default size cap.
pub fn to_gnf(t: &Term) -> Result<GroupNormalForm, OracleError> {
    to_gnf_capped(t, DEFAULT_WORD_CAP)
}

pub fn to_gnf_capped(t: &Term, cap: usize) -> Result<GroupNormalForm, OracleError> {
    normal_form::<GroupWord>(t, false, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_term_unchecked as p;

    fn w(pairs: &[(&str, i8)]) -> GroupWord {
        GroupWord::from_signed(pairs)
    }

    #[test]
    fn residual_of_itself_is_identity() {
        let nf = to_gnf(&p("x \\ x").unwrap()).unwrap();
        assert_eq!(nf.joinands, vec![vec![GroupWord::identity()]]);
    }

    #[test]
    fn join_with_inverse() {
        let nf = to_gnf(&p("x \\/ (x \\ e)").unwrap()).unwrap();
        let mut expected = vec![vec![w(&[("x", 1)])], vec![w(&[("x", -1)])]];
        expected.sort();
        assert_eq!(nf.joinands, expected);
    }

    // Integer evaluation of a normal form: max over joinands of min over words.
    fn eval_nf(nf: &GroupNormalForm, x: i64, y: i64) -> i64 {
        let word = |g: &GroupWord| -> i64 {
            g.letters()
                .iter()
                .map(|l| {
                    let v = if &*l.var == "x" { x } else { y };
                    if l.inverse {
                        -v
                    } else {
                        v
                    }
                })
                .sum()
        };
        nf.joinands
            .iter()
            .map(|b| b.iter().map(word).min().unwrap())
            .max()
            .unwrap()
    }

    #[test]
    fn inverse_of_meet_is_join_of_inverses() {
        let nf = to_gnf(&p("(x /\\ y) \\ e").unwrap()).unwrap();
        let mut expected = vec![vec![w(&[("x", -1)])], vec![w(&[("y", -1)])]];
        expected.sort();
        assert_eq!(nf.joinands, expected);
        // -(min(x, y)) = max(-x, -y) on a grid.
        for x in -3..=3 {
            for y in -3..=3 {
                assert_eq!(eval_nf(&nf, x, y), -x.min(y));
            }
        }
    }

    #[test]
    fn products_distribute_on_both_sides() {
        let nf = to_gnf(&p("(x \\/ y) * (x /\\ e)").unwrap()).unwrap();
        for x in -3..=3 {
            for y in -3..=3 {
                assert_eq!(eval_nf(&nf, x, y), x.max(y) + x.min(0));
            }
        }
    }

    #[test]
    fn pointed_input_rejected() {
        assert!(matches!(
            to_gnf(&p("x * f").unwrap()),
            Err(OracleError::Pointed(_))
        ));
    }

    #[test]
    fn size_cap_is_enforced() {
        let t = p("(x \\/ y) * (x \\/ y) * (x \\/ y) * (x \\/ y)").unwrap();
        assert!(to_gnf_capped(&t, 1_000).is_ok());
        assert!(matches!(
            to_gnf_capped(&t, 4),
            Err(OracleError::SizeCap { cap: 4, .. })
        ));
    }
}
