use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::lg_oracle::{GroupElement, GroupWord};

/// Exponent vector of an abelianized group word; zero coefficients are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coefficients: BTreeMap<Arc<str>, i64>,
}

impl LinearForm {
    pub fn zero() -> LinearForm {
        LinearForm::default()
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> LinearForm {
        let mut f = LinearForm::zero();
        for &(v, c) in pairs {
            f.add_term(Arc::from(v), c);
        }
        f
    }

    pub fn from_word(w: &GroupWord) -> LinearForm {
        let mut f = LinearForm::zero();
        for l in w.letters() {
            f.add_term(l.var.clone(), if l.inverse { -1 } else { 1 });
        }
        f
    }

    fn add_term(&mut self, var: Arc<str>, c: i64) {
        let slot = self.coefficients.entry(var.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coefficients.remove(&var);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, var: &str) -> i64 {
        self.coefficients.get(var).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<Arc<str>, i64> {
        &self.coefficients
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let mut f = self.clone();
        for (v, &c) in &other.coefficients {
            f.add_term(v.clone(), c);
        }
        f
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coefficients: self
                .coefficients
                .iter()
                .map(|(v, c)| (v.clone(), -c))
                .collect(),
        }
    }

    /// Value at an integer point; unbound variables count as 0.
    pub fn eval(&self, point: &BTreeMap<Arc<str>, i64>) -> i64 {
        self.coefficients
            .iter()
            .map(|(v, c)| c * point.get(v).copied().unwrap_or(0))
            .sum()
    }
}

impl GroupElement for LinearForm {
    fn identity() -> Self {
        LinearForm::zero()
    }
    fn generator(var: &Arc<str>) -> Self {
        let mut f = LinearForm::zero();
        f.add_term(var.clone(), 1);
        f
    }
    fn mul(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn inverse(&self) -> Self {
        self.neg()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (v, &c)) in self.coefficients.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            match c.abs() {
                1 => write!(f, "{sign}{v}")?,
                a => write!(f, "{sign}{a}{v}")?,
            }
        }
        Ok(())
    }
}
