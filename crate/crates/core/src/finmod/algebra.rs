use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FinmodError;
use crate::terms::{Sequent, Term};

/// Assignment of algebra elements to variables.
pub type Valuation = BTreeMap<Arc<str>, usize>;

/// Which operations an algebra is judged against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    /// Order, meet, join, fuse and both residuals.
    Lattice,
    /// Fuse and both residuals; the order is `a ⪯ b ⟺ a\b = e`.
    Sirmonoid,
    /// Residuals only.
    PseudoBci,
}

/// A finite algebra over `{0, …, size-1}`.
///
/// Binary tables are row-major: `fuse[a * size + b]` is `a·b`,
/// `ldiv[a * size + b]` is `a\b` and `rdiv[a * size + b]` is `a/b`.
/// `leq[a * size + b]` is 1 iff `a ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAlgebra {
    pub size: usize,
    pub e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fuse: Option<Vec<usize>>,
    pub ldiv: Vec<usize>,
    pub rdiv: Vec<usize>,
}

impl FiniteAlgebra {
    /// The one-element algebra, with every operation present.
    pub fn trivial() -> FiniteAlgebra {
        FiniteAlgebra {
            size: 1,
            e: 0,
            f: None,
            leq: Some(vec![1]),
            meet: Some(vec![0]),
            join: Some(vec![0]),
            fuse: Some(vec![0]),
            ldiv: vec![0],
            rdiv: vec![0],
        }
    }

    /// Complete a lattice order and a monoid table to a residuated lattice,
    /// or `None` if the order is not a lattice or the residuals do not exist.
    pub fn residuated(
        size: usize,
        e: usize,
        leq: Vec<u8>,
        fuse: Vec<usize>,
    ) -> Option<FiniteAlgebra> {
        let le = |a: usize, b: usize| leq[a * size + b] != 0;
        let (meet, join) = lattice_ops(size, &leq)?;
        let mut ldiv = vec![0; size * size];
        let mut rdiv = vec![0; size * size];
        for a in 0..size {
            for c in 0..size {
                // a\c is the join of {b : ab ≤ c}; it must itself belong there.
                let l = (0..size)
                    .filter(|&b| le(fuse[a * size + b], c))
                    .reduce(|x, y| join[x * size + y])?;
                let r = (0..size)
                    .filter(|&b| le(fuse[b * size + a], c))
                    .reduce(|x, y| join[x * size + y])?;
                if !le(fuse[a * size + l], c) || !le(fuse[r * size + a], c) {
                    return None;
                }
                ldiv[a * size + c] = l;
                rdiv[c * size + a] = r;
            }
        }
        Some(FiniteAlgebra {
            size,
            e,
            f: None,
            leq: Some(leq),
            meet: Some(meet),
            join: Some(join),
            fuse: Some(fuse),
            ldiv,
            rdiv,
        })
    }

    /// Residuals of a monoid over a partial order, as greatest elements of
    /// `{b : ab ⪯ c}`; the order itself is not stored.
    pub fn pomonoid(
        size: usize,
        e: usize,
        order: &[u8],
        fuse: Vec<usize>,
    ) -> Option<FiniteAlgebra> {
        let le = |a: usize, b: usize| order[a * size + b] != 0;
        let greatest =
            |set: Vec<usize>| set.iter().copied().find(|&g| set.iter().all(|&s| le(s, g)));
        let mut ldiv = vec![0; size * size];
        let mut rdiv = vec![0; size * size];
        for a in 0..size {
            for c in 0..size {
                let l = greatest((0..size).filter(|&b| le(fuse[a * size + b], c)).collect())?;
                let r = greatest((0..size).filter(|&b| le(fuse[b * size + a], c)).collect())?;
                ldiv[a * size + c] = l;
                rdiv[c * size + a] = r;
            }
        }
        Some(FiniteAlgebra {
            size,
            e,
            f: None,
            leq: None,
            meet: None,
            join: None,
            fuse: Some(fuse),
            ldiv,
            rdiv,
        })
    }

    pub fn with_f(mut self, f: usize) -> FiniteAlgebra {
        self.f = Some(f);
        self
    }

    pub fn from_json(text: &str) -> Result<FiniteAlgebra, FinmodError> {
        let a: FiniteAlgebra =
            serde_json::from_str(text).map_err(|e| FinmodError::Json(e.to_string()))?;
        let shape = a.shape_violations();
        if let Some(v) = shape.first() {
            return Err(FinmodError::Shape(v.to_string()));
        }
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("algebra serialises")
    }

    /// The signature the stored tables support, richest first.
    pub fn signature(&self) -> Signature {
        if self.leq.is_some() && self.meet.is_some() && self.join.is_some() && self.fuse.is_some() {
            Signature::Lattice
        } else if self.fuse.is_some() {
            Signature::Sirmonoid
        } else {
            Signature::PseudoBci
        }
    }

    #[inline]
    fn at(&self, table: &[usize], a: usize, b: usize) -> usize {
        table[a * self.size + b]
    }

    pub fn ld(&self, a: usize, b: usize) -> usize {
        self.at(&self.ldiv, a, b)
    }

    pub fn rd(&self, a: usize, b: usize) -> usize {
        self.at(&self.rdiv, a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> Result<usize, FinmodError> {
        let t = self
            .fuse
            .as_ref()
            .ok_or(FinmodError::MissingOperation("*"))?;
        Ok(self.at(t, a, b))
    }

    pub fn meet_of(&self, a: usize, b: usize) -> Result<usize, FinmodError> {
        let t = self
            .meet
            .as_ref()
            .ok_or(FinmodError::MissingOperation("/\\"))?;
        Ok(self.at(t, a, b))
    }

    pub fn join_of(&self, a: usize, b: usize) -> Result<usize, FinmodError> {
        let t = self
            .join
            .as_ref()
            .ok_or(FinmodError::MissingOperation("\\/"))?;
        Ok(self.at(t, a, b))
    }

    /// The stored lattice order, or the derived `a\b = e` order without one.
    pub fn le(&self, a: usize, b: usize) -> bool {
        match &self.leq {
            Some(leq) => leq[a * self.size + b] != 0,
            None => self.derived_le(a, b),
        }
    }

    /// `a ⪯ b ⟺ a\b = e`.
    pub fn derived_le(&self, a: usize, b: usize) -> bool {
        self.ld(a, b) == self.e
    }

    /// `a + b := (a\f)\b`.
    pub fn sum(&self, a: usize, b: usize) -> Result<usize, FinmodError> {
        let f = self.f.ok_or(FinmodError::MissingOperation("f"))?;
        Ok(self.ld(self.ld(a, f), b))
    }

    /// Rename elements: `map[old]` is the new index of `old`.
    pub fn relabel(&self, map: &[usize]) -> FiniteAlgebra {
        let n = self.size;
        let table = |t: &Vec<usize>| {
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[map[a] * n + map[b]] = map[t[a * n + b]];
                }
            }
            out
        };
        let leq = self.leq.as_ref().map(|l| {
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[map[a] * n + map[b]] = l[a * n + b];
                }
            }
            out
        });
        FiniteAlgebra {
            size: n,
            e: map[self.e],
            f: self.f.map(|f| map[f]),
            leq,
            meet: self.meet.as_ref().map(table),
            join: self.join.as_ref().map(table),
            fuse: self.fuse.as_ref().map(table),
            ldiv: table(&self.ldiv),
            rdiv: table(&self.rdiv),
        }
    }

    /// Malformed tables: wrong lengths or entries outside the universe.
    pub fn shape_violations(&self) -> Vec<super::Violation> {
        use super::Violation;
        let n = self.size;
        let mut out = Vec::new();
        if n == 0 {
            out.push(Violation::new("universe is non-empty", vec![]));
            return out;
        }
        if self.e >= n {
            out.push(Violation::new("e is an element", vec![self.e]));
        }
        if let Some(f) = self.f {
            if f >= n {
                out.push(Violation::new("f is an element", vec![f]));
            }
        }
        let mut table = |name: &'static str, t: Option<&Vec<usize>>| {
            if let Some(t) = t {
                if t.len() != n * n {
                    out.push(Violation::new(name, vec![t.len()]));
                } else if let Some(i) = t.iter().position(|&x| x >= n) {
                    out.push(Violation::new(name, vec![i / n, i % n]));
                }
            }
        };
        table("meet table is total", self.meet.as_ref());
        table("join table is total", self.join.as_ref());
        table("fuse table is total", self.fuse.as_ref());
        table("ldiv table is total", Some(&self.ldiv));
        table("rdiv table is total", Some(&self.rdiv));
        if let Some(l) = &self.leq {
            if l.len() != n * n {
                out.push(Violation::new("order table is total", vec![l.len()]));
            } else if let Some(i) = l.iter().position(|&x| x > 1) {
                out.push(Violation::new("order table is boolean", vec![i / n, i % n]));
            }
        }
        out
    }
}

/// Meet and join tables of a partial order, if it is a lattice.
pub(crate) fn lattice_ops(n: usize, leq: &[u8]) -> Option<(Vec<usize>, Vec<usize>)> {
    let le = |a: usize, b: usize| leq[a * n + b] != 0;
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            meet[a * n + b] = *lower.iter().find(|&&g| lower.iter().all(|&c| le(c, g)))?;
            join[a * n + b] = *upper.iter().find(|&&l| upper.iter().all(|&c| le(l, c)))?;
        }
    }
    Some((meet, join))
}

/// Homomorphic evaluation of `t` under `v`.
pub fn eval_term(a: &FiniteAlgebra, v: &Valuation, t: &Term) -> Result<usize, FinmodError> {
    Ok(match t {
        Term::Var(x) => *v
            .get(x)
            .ok_or_else(|| FinmodError::UnboundVariable(x.to_string()))?,
        Term::E => a.e,
        Term::F => a.f.ok_or(FinmodError::MissingOperation("f"))?,
        Term::Meet(l, r) => a.meet_of(eval_term(a, v, l)?, eval_term(a, v, r)?)?,
        Term::Join(l, r) => a.join_of(eval_term(a, v, l)?, eval_term(a, v, r)?)?,
        Term::Fuse(l, r) => a.mul(eval_term(a, v, l)?, eval_term(a, v, r)?)?,
        Term::LDiv(l, r) => a.ld(eval_term(a, v, l)?, eval_term(a, v, r)?),
        Term::RDiv(l, r) => a.rd(eval_term(a, v, l)?, eval_term(a, v, r)?),
    })
}

/// Whether `s` holds in `a` under `v`.
///
/// With a stored order this is `s₁⋯sₙ ≤ t₁ + ⋯ + tₘ` (empty product `e`,
/// empty sum `f`). Without one it is `sₙ\(⋯(s₁\t)) = e`, which needs no fuse
/// table and coincides with `s₁⋯sₙ ⪯ t` when there is one.
pub fn sequent_holds(a: &FiniteAlgebra, s: &Sequent, v: &Valuation) -> Result<bool, FinmodError> {
    if a.leq.is_none() {
        let [t] = s.right.as_slice() else {
            return Err(FinmodError::SignatureMismatch(format!(
                "`{s}` needs a single succedent over an unordered signature"
            )));
        };
        let mut r = eval_term(a, v, t)?;
        for g in &s.left {
            r = a.ld(eval_term(a, v, g)?, r);
        }
        return Ok(r == a.e);
    }
    let mut lhs = a.e;
    for g in &s.left {
        lhs = a.mul(lhs, eval_term(a, v, g)?)?;
    }
    let rhs = match s.right.as_slice() {
        [t] => eval_term(a, v, t)?,
        [] => a.f.ok_or(FinmodError::MissingOperation("f"))?,
        [first, rest @ ..] => {
            let mut acc = eval_term(a, v, first)?;
            for t in rest {
                acc = a.sum(acc, eval_term(a, v, t)?)?;
            }
            acc
        }
    };
    Ok(a.le(lhs, rhs))
}
