//! The ℓ-group of integers (with `f = e = 0`), used to find concrete
//! refutations. A refutation in ℤ refutes validity in every class of
//! ℓ-groups, abelian or not.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::terms::{Sequent, Term};

pub type IntValuation = BTreeMap<Arc<str>, i64>;

/// `∧ ↦ min`, `∨ ↦ max`, `· ↦ +`, `a \ b ↦ b − a`, `a / b ↦ a − b`.
pub fn eval_integer(t: &Term, v: &IntValuation) -> i64 {
    match t {
        Term::Var(x) => v.get(x).copied().unwrap_or(0),
        Term::E | Term::F => 0,
        Term::Meet(l, r) => eval_integer(l, v).min(eval_integer(r, v)),
        Term::Join(l, r) => eval_integer(l, v).max(eval_integer(r, v)),
        Term::Fuse(l, r) => eval_integer(l, v) + eval_integer(r, v),
        Term::LDiv(l, r) => eval_integer(r, v) - eval_integer(l, v),
        Term::RDiv(l, r) => eval_integer(l, v) - eval_integer(r, v),
    }
}

/// Largest number of variables the grid search will take on.
pub const GRID_MAX_VARS: usize = 3;
pub const GRID_RADIUS: i64 = 3;

/// A valuation in `[-3, 3]` with `lhs > rhs`, if the inequation has at most
/// three variables and one exists. Valuations are tried by increasing
/// largest magnitude, then in the order `0, 1, -1, 2, -2, …` with the first
/// variable varying slowest, so the answer is a smallest one.
pub fn refute_integer(lhs: &Term, rhs: &Term) -> Option<IntValuation> {
    let mut vars = lhs.vars();
    vars.extend(rhs.vars());
    if vars.len() > GRID_MAX_VARS {
        return None;
    }
    let vars: Vec<Arc<str>> = vars.into_iter().collect();
    let values: Vec<i64> = (0..=2 * GRID_RADIUS)
        .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -i / 2 })
        .collect();
    let side = values.len();
    let total = side.pow(vars.len() as u32);
    for radius in 0..=GRID_RADIUS {
        let found = (0..total).find_map(|mut code| {
            let mut digits = vec![0; vars.len()];
            for d in digits.iter_mut().rev() {
                *d = code % side;
                code /= side;
            }
            let point: Vec<i64> = digits.iter().map(|&d| values[d]).collect();
            if point.iter().map(|x| x.abs()).max().unwrap_or(0) != radius {
                return None;
            }
            let val: IntValuation = vars.iter().cloned().zip(point).collect();
            (eval_integer(lhs, &val) > eval_integer(rhs, &val)).then_some(val)
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Grid refutation of `product(left) ≤ product(right)`; in ℤ every sum
/// collapses to a product because `f = e`.
pub fn refute_sequent_integer(s: &Sequent) -> Option<IntValuation> {
    refute_integer(&Term::product(&s.left), &Term::product(&s.right))
}
