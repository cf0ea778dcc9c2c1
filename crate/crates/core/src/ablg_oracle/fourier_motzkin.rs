//! Exact feasibility of homogeneous strict systems `{⟨c_j, x⟩ > 0}` over the
//! rationals by Fourier–Motzkin elimination on integer rows.
//!
//! Positive combinations of strict inequalities stay strict, so every derived
//! row is again strict. Once no variable remains, each surviving row reads
//! `0 > 0`; the system is infeasible iff any row survives.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::{LinearForm, OracleError};

/// Rows read as `⟨row, x⟩ > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrictSystem {
    pub rows: Vec<LinearForm>,
}

impl StrictSystem {
    pub fn new(rows: Vec<LinearForm>) -> StrictSystem {
        StrictSystem { rows }
    }

    pub fn variables(&self) -> Vec<Arc<str>> {
        let vars: BTreeSet<Arc<str>> = self
            .rows
            .iter()
            .flat_map(|r| r.coefficients().keys().cloned())
            .collect();
        vars.into_iter().collect()
    }
}

type Row = Vec<i128>;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize(mut row: Row) -> Row {
    let g = row.iter().fold(0, |g, &c| gcd(g, c));
    if g > 1 {
        for c in &mut row {
            *c /= g;
        }
    }
    row
}

fn combine(p: &Row, n: &Row, col: usize) -> Result<Row, OracleError> {
    // p[col] > 0 > n[col]; scale so the column cancels.
    let a = p[col];
    let b = -n[col];
    let g = gcd(a, b);
    let (sp, sn) = (b / g, a / g);
    let row = p
        .iter()
        .zip(n)
        .map(|(&x, &y)| {
            x.checked_mul(sp)
                .zip(y.checked_mul(sn))
                .and_then(|(u, v)| u.checked_add(v))
                .ok_or(OracleError::Overflow)
        })
        .collect::<Result<Row, _>>()?;
    Ok(normalize(row))
}

/// True iff no rational point makes every row strictly positive.
pub fn strict_infeasible(sys: &StrictSystem) -> Result<bool, OracleError> {
    let vars = sys.variables();
    let mut rows: Vec<Row> = Vec::new();
    let mut seen = HashSet::new();
    for r in &sys.rows {
        let row = normalize(vars.iter().map(|v| r.coefficient(v) as i128).collect());
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }
    for col in 0..vars.len() {
        if rows.iter().any(|r| r.iter().all(|&c| c == 0)) {
            return Ok(true);
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r[col].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => rest.push(r),
            }
        }
        let mut seen: HashSet<Row> = rest.iter().cloned().collect();
        for p in &pos {
            for n in &neg {
                let c = combine(p, n, col)?;
                if seen.insert(c.clone()) {
                    rest.push(c);
                }
            }
        }
        rows = rest;
    }
    Ok(!rows.is_empty())
}
