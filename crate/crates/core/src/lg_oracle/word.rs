use std::fmt;
use std::sync::Arc;

/// A generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub var: Arc<str>,
    pub inverse: bool,
}

impl Letter {
    pub fn new(var: &str, inverse: bool) -> Letter {
        Letter {
            var: Arc::from(var),
            inverse,
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            var: self.var.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.var == other.var && self.inverse != other.inverse
    }
}

/// A freely reduced word of the free group; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    pub fn generator(var: &str) -> GroupWord {
        GroupWord {
            letters: vec![Letter::new(var, false)],
        }
    }

    /// Freely reduce an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> GroupWord {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        GroupWord { letters: stack }
    }

    /// Build from `(name, exponent sign)` pairs, e.g. `[("x", 1), ("y", -1)]`.
    pub fn from_signed(pairs: &[(&str, i8)]) -> GroupWord {
        GroupWord::from_letters(pairs.iter().map(|&(v, s)| Letter::new(v, s < 0)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        GroupWord::from_letters(self.letters.iter().chain(&other.letters).cloned())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&l.var)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cancellation() {
        let w = GroupWord::from_signed(&[("x", -1), ("x", 1)]);
        assert!(w.is_identity());
        let v = GroupWord::from_signed(&[("x", 1), ("y", 1), ("y", -1), ("z", -1)]);
        assert_eq!(v, GroupWord::from_signed(&[("x", 1), ("z", -1)]));
        assert_eq!(v.to_string(), "x z^-1");
        assert!(v.mul(&v.inverse()).is_identity());
    }

    fn letters() -> impl Strategy<Value = Vec<(u8, bool)>> {
        prop::collection::vec((0u8..3, any::<bool>()), 0..14)
    }

    fn to_letters(raw: &[(u8, bool)]) -> Vec<Letter> {
        let names = ["x", "y", "z"];
        raw.iter()
            .map(|&(v, inv)| Letter::new(names[v as usize], inv))
            .collect()
    }

    // Cancel adjacent inverse pairs in a seeded random order until none remain.
    fn reduce_randomly(mut w: Vec<Letter>, seed: u64) -> Vec<Letter> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let spots: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i].cancels(&w[i + 1]))
                .collect();
            if spots.is_empty() {
                return w;
            }
            let i = spots[rng.gen_range(0..spots.len())];
            w.drain(i..i + 2);
        }
    }

    proptest! {
        #[test]
        fn free_reduction_is_confluent(raw in letters(), seed in any::<u64>()) {
            let ls = to_letters(&raw);
            let stack = GroupWord::from_letters(ls.clone());
            let random = reduce_randomly(ls, seed);
            prop_assert_eq!(stack.letters(), random.as_slice());
        }

        #[test]
        fn inverse_is_two_sided(raw in letters()) {
            let w = GroupWord::from_letters(to_letters(&raw));
            prop_assert!(w.mul(&w.inverse()).is_identity());
            prop_assert!(w.inverse().mul(&w).is_identity());
        }
    }
}
