use std::fmt;

use super::{complexity, print_term, Term};

/// `left => right`. Single-conclusion sequents have exactly one term on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub left: Vec<Term>,
    pub right: Vec<Term>,
}

impl Sequent {
    pub fn new(left: Vec<Term>, right: Vec<Term>) -> Sequent {
        Sequent { left, right }
    }

    pub fn single(left: Vec<Term>, right: Term) -> Sequent {
        Sequent {
            left,
            right: vec![right],
        }
    }

    /// The succedent of a single-conclusion sequent.
    pub fn succedent(&self) -> Option<&Term> {
        match self.right.as_slice() {
            [u] => Some(u),
            _ => None,
        }
    }

    /// Sum of the complexities of all terms on both sides.
    pub fn complexity(&self) -> usize {
        self.left.iter().chain(&self.right).map(complexity).sum()
    }

    pub fn is_pointed(&self) -> bool {
        self.left.iter().chain(&self.right).any(Term::is_pointed)
    }

    /// Sort both sides; the canonical representative under exchange.
    pub fn sorted(&self) -> Sequent {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        left.sort();
        right.sort();
        Sequent { left, right }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |ts: &[Term]| ts.iter().map(print_term).collect::<Vec<_>>().join(", ");
        if self.left.is_empty() {
            f.write_str("=>")?;
        } else {
            write!(f, "{} =>", side(&self.left))?;
        }
        if !self.right.is_empty() {
            write!(f, " {}", side(&self.right))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_handles_empty_sides() {
        let x = Term::var("x");
        assert_eq!(Sequent::single(vec![], Term::E).to_string(), "=> e");
        assert_eq!(Sequent::new(vec![x.clone()], vec![]).to_string(), "x =>");
        assert_eq!(Sequent::new(vec![], vec![]).to_string(), "=>");
        assert_eq!(
            Sequent::single(vec![x.clone(), Term::ldiv(x.clone(), Term::E)], Term::E).to_string(),
            "x, x \\ e => e"
        );
    }
}
