//! Finite direct products of monoids.

use serde_json::Value;

use super::DivisibilityMonoid;
use crate::error::{Error, Result};

/// `T_1 × … × T_s` with componentwise multiplication.
#[derive(Debug, Clone)]
pub struct ProductMonoid<M> {
    factors: Vec<M>,
}

impl<M: DivisibilityMonoid> ProductMonoid<M> {
    pub fn new(factors: Vec<M>) -> Self {
        ProductMonoid { factors }
    }

    pub fn factors(&self) -> &[M] {
        &self.factors
    }

    fn check(&self, a: &[M::Elem]) -> Result<()> {
        if a.len() != self.factors.len() {
            return Err(Error::invalid(format!("expected {} components, got {}", self.factors.len(), a.len())));
        }
        Ok(())
    }
}

impl<M: DivisibilityMonoid> DivisibilityMonoid for ProductMonoid<M> {
    type Elem = Vec<M::Elem>;
    type Key = Vec<M::Key>;

    fn identity(&self) -> Self::Elem {
        self.factors.iter().map(M::identity).collect()
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        self.factors.iter().zip(a.iter().zip(b)).map(|(m, (x, y))| m.multiply(x, y)).collect()
    }

    fn is_unit(&self, a: &Self::Elem) -> Result<bool> {
        self.check(a)?;
        for (m, x) in self.factors.iter().zip(a) {
            if !m.is_unit(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn size(&self, a: &Self::Elem) -> Result<u64> {
        self.check(a)?;
        self.factors.iter().zip(a).map(|(m, x)| m.size(x)).sum()
    }

    fn orbit_key(&self, a: &Self::Elem) -> Result<Self::Key> {
        self.check(a)?;
        self.factors.iter().zip(a).map(|(m, x)| m.orbit_key(x)).collect()
    }

    fn left_divisors(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, Self::Elem)>> {
        self.check(a)?;
        let mut out: Vec<(Self::Elem, Self::Elem)> = vec![(Vec::new(), Vec::new())];
        for (m, x) in self.factors.iter().zip(a) {
            let divs = m.left_divisors(x)?;
            out = out
                .into_iter()
                .flat_map(|(b, c)| {
                    divs.iter().map(move |(db, dc)| {
                        let mut b = b.clone();
                        let mut c = c.clone();
                        b.push(db.clone());
                        c.push(dc.clone());
                        (b, c)
                    })
                })
                .collect();
        }
        Ok(out)
    }

    fn same_element(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.len() == b.len() && self.factors.iter().zip(a.iter().zip(b)).all(|(m, (x, y))| m.same_element(x, y))
    }

    fn describe(&self, a: &Self::Elem) -> Value {
        Value::Array(self.factors.iter().zip(a).map(|(m, x)| m.describe(x)).collect())
    }
}
