//! Finite residuated lattices, sirmonoids and pseudo BCI-algebras given by
//! operation tables: validation, property checks, enumeration up to
//! isomorphism, and countermodel search for sequents.
//!
//! Finite models can only refute. A finite integrally closed residuated
//! lattice is integral, so no finite search can witness validity in the
//! integrally closed classes.

mod algebra;
mod enumerate;
pub mod examples;
mod property;
mod refute;
mod validate;

pub(crate) use algebra::lattice_ops;
pub use algebra::{eval_term, sequent_holds, FiniteAlgebra, Signature, Valuation};
pub use enumerate::{
    canonical_form, enumerate, enumerate_with, AlgebraClass, SizeCaps, UnknownClass,
    DEFAULT_LATTICE_CAP, DEFAULT_SIRMONOID_CAP,
};
pub use property::{check_property, PropertyName};
pub use refute::{refute, refute_with, Countermodel};
pub use validate::{validate, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinmodError {
    #[error("malformed algebra JSON: {0}")]
    Json(String),
    #[error("malformed algebra: {0}")]
    Shape(String),
    #[error("algebra has no `{0}` operation")]
    MissingOperation(&'static str),
    #[error("variable `{0}` is not assigned")]
    UnboundVariable(String),
    #[error("size {size} exceeds the configured maximum {max}")]
    SizeBound { size: usize, max: usize },
    #[error("{0}")]
    SignatureMismatch(String),
}

/// `{a : a ≤ e}` with inherited lattice and monoid operations and residuals
/// clipped to `(a\b) ∧ e`, `(b/a) ∧ e`. Elements keep their relative order.
pub fn negative_cone(a: &FiniteAlgebra) -> Result<FiniteAlgebra, FinmodError> {
    if a.signature() != Signature::Lattice {
        return Err(FinmodError::SignatureMismatch(
            "the negative cone needs a lattice signature".into(),
        ));
    }
    let keep: Vec<usize> = (0..a.size).filter(|&x| a.le(x, a.e)).collect();
    let m = keep.len();
    let mut index = vec![usize::MAX; a.size];
    for (i, &x) in keep.iter().enumerate() {
        index[x] = i;
    }
    let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        keep.iter()
            .flat_map(|&x| keep.iter().map(move |&y| (x, y)))
            .map(|(x, y)| index[op(x, y)])
            .collect()
    };
    let meet = |x, y| a.meet_of(x, y).expect("lattice signature");
    let cone = FiniteAlgebra {
        size: m,
        e: index[a.e],
        f: None,
        leq: Some(
            keep.iter()
                .flat_map(|&x| keep.iter().map(move |&y| u8::from(a.le(x, y))))
                .collect(),
        ),
        meet: Some(table(&meet)),
        join: Some(table(&|x, y| a.join_of(x, y).expect("lattice signature"))),
        fuse: Some(table(&|x, y| a.mul(x, y).expect("lattice signature"))),
        ldiv: table(&|x, y| meet(a.ld(x, y), a.e)),
        rdiv: table(&|x, y| meet(a.rd(x, y), a.e)),
    };
    Ok(cone)
}
