//! Rational-subset membership of the identity in a finitely generated
//! subsemigroup of a free group.
//!
//! The automaton reads every non-empty product of generators from the start
//! state to the final hub. Saturation adds an ε-edge `p → q` whenever `p`
//! reaches `q` along `a`, ε*, `a⁻¹`; at the fixpoint, some accepted word
//! freely reduces to the empty word iff the final hub is ε-reachable from the
//! start.

use std::collections::{BTreeSet, VecDeque};

use super::{GroupWord, Letter};

#[derive(Clone, Debug)]
pub struct WordAutomaton {
    states: usize,
    start: usize,
    finals: Vec<usize>,
    edges: Vec<(usize, Letter, usize)>,
    /// Outgoing letter edges per state, as indices into `edges`.
    outgoing: Vec<Vec<usize>>,
    eps: Vec<Vec<bool>>,
}

const START: usize = 0;
const HUB: usize = 1;

impl WordAutomaton {
    /// Accepts exactly the non-empty products of `gens`.
    pub fn generator_products(gens: &[GroupWord]) -> WordAutomaton {
        let mut a = WordAutomaton {
            states: 2,
            start: START,
            finals: vec![HUB],
            edges: Vec::new(),
            outgoing: vec![Vec::new(), Vec::new()],
            eps: vec![vec![false; 2]; 2],
        };
        for g in gens {
            let letters = g.letters();
            if letters.is_empty() {
                a.add_eps(START, HUB);
                continue;
            }
            // Both the start and the hub enter the shared path of this generator.
            let mut from = vec![START, HUB];
            for (i, l) in letters.iter().enumerate() {
                let to = if i + 1 == letters.len() {
                    HUB
                } else {
                    a.new_state()
                };
                for &src in &from {
                    a.add_edge(src, l.clone(), to);
                }
                from = vec![to];
            }
        }
        a
    }

    fn new_state(&mut self) -> usize {
        let id = self.states;
        self.states += 1;
        self.outgoing.push(Vec::new());
        for row in &mut self.eps {
            row.push(false);
        }
        self.eps.push(vec![false; self.states]);
        id
    }

    fn add_edge(&mut self, from: usize, l: Letter, to: usize) {
        self.outgoing[from].push(self.edges.len());
        self.edges.push((from, l, to));
    }

    fn add_eps(&mut self, from: usize, to: usize) -> bool {
        let fresh = !self.eps[from][to];
        self.eps[from][to] = true;
        fresh
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    /// Reflexive-transitive ε-closure of every state.
    fn closure(&self) -> Vec<Vec<bool>> {
        (0..self.states)
            .map(|s| {
                let mut seen = vec![false; self.states];
                let mut queue = VecDeque::from([s]);
                seen[s] = true;
                while let Some(p) = queue.pop_front() {
                    for (q, &edge) in self.eps[p].iter().enumerate() {
                        if edge && !seen[q] {
                            seen[q] = true;
                            queue.push_back(q);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    /// Add cancellation ε-edges until nothing changes.
    pub fn saturate(&mut self) {
        loop {
            let reach = self.closure();
            let mut fresh = Vec::new();
            for (p, a, mid) in &self.edges {
                let inverse = a.inverted();
                for (q, reachable) in reach[*mid].iter().enumerate() {
                    if !reachable {
                        continue;
                    }
                    for &ei in &self.outgoing[q] {
                        let (_, b, target) = &self.edges[ei];
                        if *b == inverse && !self.eps[*p][*target] {
                            fresh.push((*p, *target));
                        }
                    }
                }
            }
            let mut changed = false;
            for (p, q) in fresh {
                changed |= self.add_eps(p, q);
            }
            if !changed {
                return;
            }
        }
    }

    /// The empty word is accepted (start reaches a final state by ε-moves).
    pub fn accepts_empty(&self) -> bool {
        let reach = self.closure();
        self.finals.iter().any(|&f| reach[self.start][f])
    }
}

/// Whether some non-empty product of `gens` freely reduces to the identity.
pub fn semigroup_contains_identity(gens: &[GroupWord]) -> bool {
    if gens.iter().any(GroupWord::is_identity) {
        return true;
    }
    let mut a = WordAutomaton::generator_products(gens);
    a.saturate();
    a.accepts_empty()
}

/// Breadth-first closure over products of at most `depth` generators.
/// Sound but incomplete: `true` is definitive, `false` only means "not found".
pub fn bfs_identity_oracle(gens: &[GroupWord], depth: usize) -> bool {
    if gens.is_empty() || depth == 0 {
        return false;
    }
    let mut seen: BTreeSet<GroupWord> = gens.iter().cloned().collect();
    if seen.iter().any(GroupWord::is_identity) {
        return true;
    }
    let mut frontier: Vec<GroupWord> = seen.iter().cloned().collect();
    for _ in 1..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let p = w.mul(g);
                if p.is_identity() {
                    return true;
                }
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    false
}
