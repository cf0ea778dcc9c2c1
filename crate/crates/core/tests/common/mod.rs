//! Independent reference deciders for the integration suites.
//!
//! Everything here is written against the definitions directly and shares no
//! code with the library's decision procedures.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::io::Write;

use icrl::terms::{Sequent, Term};
use num_rational::Ratio;

/// One line per criterion, written past the test harness's output capture.
pub fn report(n: usize, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance {n:>2} {verdict}  {name} — {detail}");
}

type Q = Ratio<i128>;

/// Kernel of the `rows × cols` matrix, when it is one-dimensional.
fn one_dim_kernel(m: &[Vec<i64>]) -> Option<Vec<Q>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != Q::from_integer(0)) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c];
        for x in a[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows {
            if i != r && a[i][c] != Q::from_integer(0) {
                let k = a[i][c];
                for j in 0..cols {
                    let d = a[r][j] * k;
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut v = vec![Q::from_integer(0); cols];
    v[f] = Q::from_integer(1);
    for (i, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[i][f];
    }
    Some(v)
}

/// Gordan's alternative: `{⟨rᵢ, x⟩ > 0}` is infeasible iff some non-zero,
/// non-negative combination of the rows vanishes. A minimal such combination
/// is supported on a circuit, whose kernel is one-dimensional and spanned by
/// a vector with all entries of one strict sign; every row subset is tried.
pub fn gordan_infeasible(rows: &[Vec<i64>]) -> bool {
    let m = rows.len();
    let vars = rows.first().map_or(0, Vec::len);
    for mask in 1u32..(1 << m) {
        let support: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        // Columns are the chosen rows.
        let matrix: Vec<Vec<i64>> = (0..vars.max(1))
            .map(|j| {
                support
                    .iter()
                    .map(|&i| rows[i].get(j).copied().unwrap_or(0))
                    .collect()
            })
            .collect();
        if let Some(v) = one_dim_kernel(&matrix) {
            let zero = Q::from_integer(0);
            if v.iter().all(|x| *x > zero) || v.iter().all(|x| *x < zero) {
                return true;
            }
        }
    }
    false
}

pub type IntPoint = BTreeMap<String, i64>;

/// Value of `t` in the ordered group ℤ, with `f = e = 0`.
pub fn int_eval(t: &Term, p: &IntPoint) -> i64 {
    match t {
        Term::Var(x) => p[&**x],
        Term::E | Term::F => 0,
        Term::Meet(l, r) => int_eval(l, p).min(int_eval(r, p)),
        Term::Join(l, r) => int_eval(l, p).max(int_eval(r, p)),
        Term::Fuse(l, r) => int_eval(l, p) + int_eval(r, p),
        Term::LDiv(l, r) => int_eval(r, p) - int_eval(l, p),
        Term::RDiv(l, r) => int_eval(l, p) - int_eval(r, p),
    }
}

/// A point of `[-r, r]^vars` falsifying the single-conclusion `s` in ℤ.
pub fn int_counterexample(s: &Sequent, radius: i64) -> Option<IntPoint> {
    let mut vars: Vec<String> = s
        .left
        .iter()
        .chain(&s.right)
        .flat_map(|t| t.vars())
        .map(|v| v.to_string())
        .collect();
    vars.sort();
    vars.dedup();
    let width = (2 * radius + 1) as usize;
    let total = width.pow(vars.len() as u32);
    for code in 0..total {
        let mut c = code;
        let p: IntPoint = vars
            .iter()
            .map(|v| {
                let d = (c % width) as i64 - radius;
                c /= width;
                (v.clone(), d)
            })
            .collect();
        let lhs: i64 = s.left.iter().map(|t| int_eval(t, &p)).sum();
        let rhs: i64 = s.right.iter().map(|t| int_eval(t, &p)).sum();
        if lhs > rhs {
            return Some(p);
        }
    }
    None
}

/// Isomorphism classes of residuated lattices with `n` elements, counted by
/// brute force over every order on `0..n` extending index order, every unit
/// and every multiplication table with that unit and the bottom absorbing.
pub fn brute_force_rl_count(n: usize) -> usize {
    use std::collections::BTreeSet;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            le[i][j] = mask >> b & 1 == 1;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c])));
        if !transitive {
            continue;
        }
        let Some(join) = least_upper_bounds(&le) else {
            continue;
        };
        let lower = |a: usize, b: usize| (0..n).filter(|&c| le[c][a] && le[c][b]).count() > 0;
        if !(0..n).all(|a| (0..n).all(|b| lower(a, b))) || !has_meets(&le) {
            continue;
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| le[b][x]))
            .expect("finite lattice");
        for e in 0..n {
            if n > 1 && e == bottom {
                continue;
            }
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != e && b != e && a != bottom && b != bottom)
                .collect();
            for code in 0..n.pow(free.len() as u32) {
                let mut m = vec![vec![0; n]; n];
                for x in 0..n {
                    m[e][x] = x;
                    m[x][e] = x;
                    m[bottom][x] = bottom;
                    m[x][bottom] = bottom;
                }
                let mut c = code;
                for &(a, b) in &free {
                    m[a][b] = c % n;
                    c /= n;
                }
                if let Some(key) = residuated_key(&le, &join, &m, e) {
                    classes.insert(key);
                }
            }
        }
    }
    classes.len()
}

fn least_upper_bounds(le: &[Vec<bool>]) -> Option<Vec<Vec<usize>>> {
    let n = le.len();
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let ub: Vec<usize> = (0..n).filter(|&c| le[a][c] && le[b][c]).collect();
            join[a][b] = *ub.iter().find(|&&l| ub.iter().all(|&c| le[l][c]))?;
        }
    }
    Some(join)
}

fn has_meets(le: &[Vec<bool>]) -> bool {
    let n = le.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let lb: Vec<usize> = (0..n).filter(|&c| le[c][a] && le[c][b]).collect();
            lb.iter().any(|&g| lb.iter().all(|&c| le[c][g]))
        })
    })
}

/// Canonical key of a residuated lattice, or `None` if `m` is not one.
fn residuated_key(
    le: &[Vec<bool>],
    join: &[Vec<usize>],
    m: &[Vec<usize>],
    e: usize,
) -> Option<Vec<usize>> {
    let n = le.len();
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m[m[a][b]][c] == m[a][m[b][c]])));
    if !assoc {
        return None;
    }
    // Residuals exist iff the join of {b : ab ≤ c} is itself in the set and
    // the set is a down-set; likewise on the other side.
    for a in 0..n {
        for c in 0..n {
            let l: Vec<usize> = (0..n).filter(|&b| le[m[a][b]][c]).collect();
            let r: Vec<usize> = (0..n).filter(|&b| le[m[b][a]][c]).collect();
            for set in [&l, &r] {
                let top = set.iter().copied().reduce(|x, y| join[x][y])?;
                if (0..n).any(|b| le[b][top] != set.contains(&b)) {
                    return None;
                }
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    permute(&all, &mut Vec::new(), &mut |map| {
        let mut inv = vec![0; n];
        for (o, &i) in map.iter().enumerate() {
            inv[i] = o;
        }
        let mut key = Vec::with_capacity(2 * n * n + 1);
        key.push(map[e]);
        for a in 0..n {
            for b in 0..n {
                key.push(usize::from(le[inv[a]][inv[b]]));
                key.push(map[m[inv[a]][inv[b]]]);
            }
        }
        if best.as_ref().is_none_or(|k| key < *k) {
            best = Some(key);
        }
    });
    best
}

fn permute(items: &[usize], chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == items.len() {
        f(chosen);
        return;
    }
    for &x in items {
        if !chosen.contains(&x) {
            chosen.push(x);
            permute(items, chosen, f);
            chosen.pop();
        }
    }
}

/// Exhaustive check of the sirmonoid axioms on explicit tables
/// (`mul`, `ld` for `a\b`, `rd` for `a/b`) with unit `e`.
pub fn is_sirmonoid(
    mul: &dyn Fn(usize, usize) -> usize,
    ld: &dyn Fn(usize, usize) -> usize,
    rd: &dyn Fn(usize, usize) -> usize,
    n: usize,
    e: usize,
) -> bool {
    let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
    };
    (0..n).all(|x| mul(e, x) == x && mul(x, e) == x)
        && all3(&|x, y, z| mul(mul(x, y), z) == mul(x, mul(y, z)))
        && all3(&|x, y, z| rd(rd(ld(x, z), ld(y, z)), ld(x, y)) == e)
        && all3(&|x, y, z| ld(rd(y, x), ld(rd(z, y), rd(z, x))) == e)
        && (0..n).all(|x| ld(e, x) == x && rd(x, e) == x)
        && all3(&|x, y, z| ld(mul(x, y), z) == ld(y, ld(x, z)))
        && (0..n).all(|x| (0..n).all(|y| x == y || ld(x, y) != e || ld(y, x) != e))
}
