//! Exhaustive enumeration of small algebras up to isomorphism.
//!
//! Orders come first, naturally labelled (`a ≤ b ⟹ a ≤ b` as integers), so
//! every isomorphism type of poset appears at least once. For each order and
//! choice of unit the multiplication table is filled cell by cell, rejecting
//! any value that breaks monotonicity against cells already placed, and the
//! completed tables are kept only if residuals exist and every law holds.
//! Copies are merged through a canonical form: the lexicographically least
//! table encoding over all relabellings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use super::{
    check_property, lattice_ops, validate, FiniteAlgebra, FinmodError, PropertyName, Signature,
};
use crate::terms::Theory;

/// Default size cap for classes with a lattice order.
pub const DEFAULT_LATTICE_CAP: usize = 5;
/// Default size cap for sirmonoid classes.
pub const DEFAULT_SIRMONOID_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    pub lattice: usize,
    pub sirmonoid: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps {
            lattice: DEFAULT_LATTICE_CAP,
            sirmonoid: DEFAULT_SIRMONOID_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraClass {
    Rl,
    Integral,
    CommutativeIntegral,
    Sirmonoid,
    CommutativeSirmonoid,
    Casari,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 6] = [
        AlgebraClass::Rl,
        AlgebraClass::Integral,
        AlgebraClass::CommutativeIntegral,
        AlgebraClass::Sirmonoid,
        AlgebraClass::CommutativeSirmonoid,
        AlgebraClass::Casari,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Rl => "rl",
            AlgebraClass::Integral => "integral",
            AlgebraClass::CommutativeIntegral => "cintegral",
            AlgebraClass::Sirmonoid => "sirmonoid",
            AlgebraClass::CommutativeSirmonoid => "csirmonoid",
            AlgebraClass::Casari => "casari",
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            AlgebraClass::Sirmonoid | AlgebraClass::CommutativeSirmonoid => Signature::Sirmonoid,
            _ => Signature::Lattice,
        }
    }

    pub fn cap(self, caps: SizeCaps) -> usize {
        match self.signature() {
            Signature::Lattice => caps.lattice,
            _ => caps.sirmonoid,
        }
    }

    /// Finite members of this class are models of the theory, so a
    /// countermodel here refutes derivability there.
    pub fn for_theory(th: Theory) -> AlgebraClass {
        match th {
            Theory::Rl => AlgebraClass::Rl,
            Theory::Irl | Theory::Icrl => AlgebraClass::Integral,
            Theory::Cicrl => AlgebraClass::CommutativeIntegral,
            Theory::Sirm | Theory::PseudoBci => AlgebraClass::Sirmonoid,
            Theory::Sircom | Theory::Bci => AlgebraClass::CommutativeSirmonoid,
            Theory::Ca => AlgebraClass::Casari,
        }
    }

    fn commutative(self) -> bool {
        matches!(
            self,
            AlgebraClass::CommutativeIntegral
                | AlgebraClass::CommutativeSirmonoid
                | AlgebraClass::Casari
        )
    }

    /// Whether `a` belongs to the class.
    pub fn contains(self, a: &FiniteAlgebra) -> bool {
        let has = |p| check_property(a, p).unwrap_or(false);
        let base = validate(a, self.signature()).is_empty();
        base && match self {
            AlgebraClass::Rl | AlgebraClass::Sirmonoid => true,
            AlgebraClass::Integral => has(PropertyName::IsIntegral),
            AlgebraClass::CommutativeIntegral => {
                has(PropertyName::IsIntegral) && has(PropertyName::IsCommutative)
            }
            AlgebraClass::CommutativeSirmonoid => has(PropertyName::IsCommutative),
            AlgebraClass::Casari => has(PropertyName::IsCasari),
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("unknown algebra class `{0}` (expected one of rl, integral, cintegral, sirmonoid, csirmonoid, casari)")]
pub struct UnknownClass(pub String);

impl FromStr for AlgebraClass {
    type Err = UnknownClass;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// All algebras of `class` with `size` elements, one per isomorphism type,
/// in canonical form and sorted.
pub fn enumerate(size: usize, class: AlgebraClass) -> Result<Vec<FiniteAlgebra>, FinmodError> {
    enumerate_with(size, class, SizeCaps::default())
}

pub fn enumerate_with(
    size: usize,
    class: AlgebraClass,
    caps: SizeCaps,
) -> Result<Vec<FiniteAlgebra>, FinmodError> {
    let max = class.cap(caps);
    if size > max {
        return Err(FinmodError::SizeBound { size, max });
    }
    if size == 0 {
        return Ok(Vec::new());
    }
    let raw: Vec<FiniteAlgebra> = match class {
        AlgebraClass::Casari => enumerate_with(size, AlgebraClass::CommutativeIntegral, caps)?
            .into_iter()
            .flat_map(|a| (0..size).map(move |f| a.clone().with_f(f)))
            .filter(|a| class.contains(a))
            .collect(),
        _ => {
            let jobs = jobs(size, class);
            jobs.par_iter()
                .flat_map_iter(|(order, e)| tables_for(size, class, order, *e))
                .collect()
        }
    };
    let canonical: BTreeMap<Vec<usize>, FiniteAlgebra> = raw
        .par_iter()
        .map(canonical_form)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(canonical.into_values().collect())
}

/// Every partial order on `0..n` extending the integer order's direction.
pub(crate) fn natural_orders(n: usize) -> Vec<Vec<u8>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![0u8; n * n];
        for i in 0..n {
            leq[i * n + i] = 1;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i * n + j] = 1;
            }
        }
        let transitive = (0..n)
            .cartesian_product(0..n)
            .cartesian_product(0..n)
            .all(|((a, b), c)| leq[a * n + b] == 0 || leq[b * n + c] == 0 || leq[a * n + c] == 1);
        if transitive {
            out.push(leq);
        }
    }
    out
}

/// Independent partitions of the search: an order and a unit.
fn jobs(n: usize, class: AlgebraClass) -> Vec<(Vec<u8>, usize)> {
    let mut out = Vec::new();
    for order in natural_orders(n) {
        let le = |a: usize, b: usize| order[a * n + b] != 0;
        let units: Vec<usize> = match class.signature() {
            Signature::Lattice => {
                if lattice_ops(n, &order).is_none() {
                    continue;
                }
                // In a natural labelling of a lattice, 0 is the bottom and n-1 the top.
                match class {
                    AlgebraClass::Rl if n > 1 => (1..n).collect(),
                    AlgebraClass::Rl => vec![0],
                    _ => vec![n - 1],
                }
            }
            _ => (0..n)
                .filter(|&e| (0..n).all(|x| x == e || !le(e, x)))
                .collect(),
        };
        for e in units {
            out.push((order.clone(), e));
        }
    }
    out
}

fn tables_for(n: usize, class: AlgebraClass, order: &[u8], e: usize) -> Vec<FiniteAlgebra> {
    let lattice = class.signature() == Signature::Lattice;
    // A bottom element absorbs products in any residuated lattice.
    let bottom = (lattice && n > 1).then_some(0);
    let mut out = Vec::new();
    fill_fuse(n, order, e, bottom, class.commutative(), &mut |fuse| {
        let candidate = if lattice {
            FiniteAlgebra::residuated(n, e, order.to_vec(), fuse.to_vec())
        } else {
            FiniteAlgebra::pomonoid(n, e, order, fuse.to_vec())
        };
        if let Some(a) = candidate {
            if class.contains(&a) {
                out.push(a);
            }
        }
    });
    out
}

/// Backtracking over monotone, associative multiplication tables with unit
/// `e` (and absorbing `bottom`, if given).
fn fill_fuse(
    n: usize,
    order: &[u8],
    e: usize,
    bottom: Option<usize>,
    commutative: bool,
    emit: &mut dyn FnMut(&[usize]),
) {
    let mut cells: Vec<Option<usize>> = vec![None; n * n];
    for x in 0..n {
        cells[e * n + x] = Some(x);
        cells[x * n + e] = Some(x);
        if let Some(b) = bottom {
            cells[b * n + x] = Some(b);
            cells[x * n + b] = Some(b);
        }
    }
    let free: Vec<usize> = (0..n * n).filter(|&i| cells[i].is_none()).collect();
    let le = |a: usize, b: usize| order[a * n + b] != 0;

    fn go(
        k: usize,
        free: &[usize],
        cells: &mut Vec<Option<usize>>,
        n: usize,
        le: &dyn Fn(usize, usize) -> bool,
        commutative: bool,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if k == free.len() {
            let t: Vec<usize> = cells.iter().map(|c| c.expect("filled")).collect();
            let assoc = (0..n)
                .cartesian_product(0..n)
                .cartesian_product(0..n)
                .all(|((x, y), z)| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]);
            if assoc {
                emit(&t);
            }
            return;
        }
        let cell = free[k];
        let (a, b) = (cell / n, cell % n);
        let forced = if commutative { cells[b * n + a] } else { None };
        for v in 0..n {
            if forced.is_some_and(|w| w != v) {
                continue;
            }
            let monotone = (0..n * n).all(|other| match cells[other] {
                None => true,
                Some(w) => {
                    let (c, d) = (other / n, other % n);
                    (!(le(c, a) && le(d, b)) || le(w, v)) && (!(le(a, c) && le(b, d)) || le(v, w))
                }
            });
            if !monotone {
                continue;
            }
            cells[cell] = Some(v);
            if associative_so_far(cells, n) {
                go(k + 1, free, cells, n, le, commutative, emit);
            }
            cells[cell] = None;
        }
    }
    go(0, &free, &mut cells, n, &le, commutative, emit);
}

/// No associativity failure among the triples whose products are all known.
fn associative_so_far(cells: &[Option<usize>], n: usize) -> bool {
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .all(|((x, y), z)| {
            let (Some(xy), Some(yz)) = (cells[x * n + y], cells[y * n + z]) else {
                return true;
            };
            match (cells[xy * n + z], cells[x * n + yz]) {
                (Some(l), Some(r)) => l == r,
                _ => true,
            }
        })
}

fn encode(a: &FiniteAlgebra) -> Vec<usize> {
    let mut code = vec![a.e, a.f.unwrap_or(a.size)];
    if let Some(l) = &a.leq {
        code.extend(l.iter().map(|&x| x as usize));
    }
    if let Some(t) = &a.fuse {
        code.extend(t);
    }
    code.extend(&a.ldiv);
    code.extend(&a.rdiv);
    code
}

/// The least encoding over all relabellings, and the relabelled algebra.
pub fn canonical_form(a: &FiniteAlgebra) -> (Vec<usize>, FiniteAlgebra) {
    let n = a.size;
    let mut best: Option<(Vec<usize>, FiniteAlgebra)> = None;
    for map in (0..n).permutations(n) {
        let b = a.relabel(&map);
        let code = encode(&b);
        if best.as_ref().is_none_or(|(c, _)| code < *c) {
            best = Some((code, b));
        }
    }
    best.expect("at least the identity relabelling")
}
