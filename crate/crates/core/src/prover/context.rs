//! Operations on antecedent/succedent sequences, as lists or as multisets.

use crate::terms::Term;

pub(crate) fn sorted(mut v: Vec<Term>) -> Vec<Term> {
    v.sort();
    v
}

pub(crate) fn concat(parts: &[&[Term]]) -> Vec<Term> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// `v` with position `i` replaced by `with`.
pub(crate) fn splice(v: &[Term], i: usize, with: &[Term]) -> Vec<Term> {
    concat(&[&v[..i], with, &v[i + 1..]])
}

pub(crate) fn remove_at(v: &[Term], i: usize) -> Vec<Term> {
    splice(v, i, &[])
}

/// Remove one occurrence of `t`.
pub(crate) fn remove_one(v: &[Term], t: &Term) -> Option<Vec<Term>> {
    let i = v.iter().position(|u| u == t)?;
    Some(remove_at(v, i))
}

pub(crate) fn same_multiset(a: &[Term], b: &[Term]) -> bool {
    a.len() == b.len() && sorted(a.to_vec()) == sorted(b.to_vec())
}

/// Indices of the first occurrence of each distinct element of a sorted list.
pub(crate) fn distinct_positions(v: &[Term]) -> Vec<usize> {
    (0..v.len())
        .filter(|&i| i == 0 || v[i] != v[i - 1])
        .collect()
}

/// Every sub-multiset of a sorted list together with its complement, each
/// distinct split once, starting from the empty selection.
pub(crate) fn submultisets(v: &[Term]) -> Vec<(Vec<Term>, Vec<Term>)> {
    let mut groups: Vec<(&Term, usize)> = Vec::new();
    for t in v {
        match groups.last_mut() {
            Some((u, n)) if *u == t => *n += 1,
            _ => groups.push((t, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for (t, n) in groups {
        let mut next = Vec::with_capacity(out.len() * (n + 1));
        for (chosen, rest) in &out {
            for k in 0..=n {
                let mut c = chosen.clone();
                let mut r = rest.clone();
                c.extend(std::iter::repeat_n(t.clone(), k));
                r.extend(std::iter::repeat_n(t.clone(), n - k));
                next.push((c, r));
            }
        }
        out = next;
    }
    out
}

/// Contiguous non-empty blocks `v[i..j]`: `(deleted, remaining)`.
pub(crate) fn contiguous_blocks(v: &[Term]) -> Vec<(Vec<Term>, Vec<Term>)> {
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..=v.len() {
            out.push((v[i..j].to_vec(), concat(&[&v[..i], &v[j..]])));
        }
    }
    out
}
