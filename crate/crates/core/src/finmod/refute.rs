use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{
    enumerate_with, sequent_holds, AlgebraClass, FiniteAlgebra, FinmodError, SizeCaps, Valuation,
};
use crate::terms::Sequent;

/// A finite algebra and an assignment under which a sequent fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countermodel {
    pub algebra: FiniteAlgebra,
    pub valuation: Valuation,
}

type Catalogue = Mutex<HashMap<(usize, AlgebraClass), Arc<Vec<FiniteAlgebra>>>>;

/// Enumerations are reused across refutation calls.
fn catalogue(
    size: usize,
    class: AlgebraClass,
    caps: SizeCaps,
) -> Result<Arc<Vec<FiniteAlgebra>>, FinmodError> {
    static CACHE: OnceLock<Catalogue> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("catalogue lock").get(&(size, class)) {
        return Ok(hit.clone());
    }
    let all = Arc::new(enumerate_with(size, class, caps)?);
    cache
        .lock()
        .expect("catalogue lock")
        .insert((size, class), all.clone());
    Ok(all)
}

/// Search algebras of `class` with at most `size_bound` elements, smallest
/// first, for one falsifying `s`.
///
/// `None` means no countermodel exists up to the bound; it says nothing
/// about larger or infinite algebras.
pub fn refute(
    s: &Sequent,
    size_bound: usize,
    class: AlgebraClass,
) -> Result<Option<Countermodel>, FinmodError> {
    refute_with(s, size_bound, class, SizeCaps::default())
}

pub fn refute_with(
    s: &Sequent,
    size_bound: usize,
    class: AlgebraClass,
    caps: SizeCaps,
) -> Result<Option<Countermodel>, FinmodError> {
    let max = class.cap(caps);
    if size_bound > max {
        return Err(FinmodError::SizeBound {
            size: size_bound,
            max,
        });
    }
    let vars: Vec<Arc<str>> = s
        .left
        .iter()
        .chain(&s.right)
        .flat_map(|t| t.vars())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for size in 1..=size_bound {
        for a in catalogue(size, class, caps)?.iter() {
            if let Some(v) = falsifying_valuation(a, s, &vars)? {
                return Ok(Some(Countermodel {
                    algebra: a.clone(),
                    valuation: v,
                }));
            }
        }
    }
    Ok(None)
}

fn falsifying_valuation(
    a: &FiniteAlgebra,
    s: &Sequent,
    vars: &[Arc<str>],
) -> Result<Option<Valuation>, FinmodError> {
    let mut digits = vec![0usize; vars.len()];
    loop {
        let v: Valuation = vars.iter().cloned().zip(digits.iter().copied()).collect();
        if !sequent_holds(a, s, &v)? {
            return Ok(Some(v));
        }
        // Odometer step over a.size^vars.len() assignments.
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] < a.size {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
