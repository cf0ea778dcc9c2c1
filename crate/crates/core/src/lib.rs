//! Decision procedures for integrally closed residuated lattices and their
//! commutative, semi-integral and pointed relatives.

pub mod ablg_oracle;
pub mod corpus;
pub mod finmod;
pub mod lg_oracle;
pub mod prover;
pub mod terms;
