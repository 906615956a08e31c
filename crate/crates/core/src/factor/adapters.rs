//! Concrete monoids for the engine.

use serde_json::json;

use super::DivisibilityMonoid;
use crate::abelian::{FiniteAbelianGroup, GSequence};
use crate::error::{Error, Result};
use crate::padic::{DvrMatrix, MatrixOrder, OrbitKey, OrderArithmetic};

/// `B(G)` with elements as multiplicity vectors over the element indices of
/// `G`. Divisors are found by scanning zero-sum sub-multisets, without any
/// precomputed atom list.
#[derive(Debug, Clone)]
pub struct ZeroSumMonoid {
    group: FiniteAbelianGroup,
    add: Vec<Vec<usize>>,
}

impl ZeroSumMonoid {
    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        if group.cardinality() > 1 << 12 {
            return Err(Error::resource(format!("group {group} is too large for the zero-sum adapter")));
        }
        Ok(ZeroSumMonoid { group: group.clone(), add: group.addition_table() })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Multiplicity vector of a zero-sum sequence.
    pub fn element(&self, s: &GSequence) -> Result<Vec<u32>> {
        let counts = s.to_multiplicities(&self.group)?;
        if self.sum(&counts) != 0 {
            return Err(Error::invalid(format!("{s} is not a zero-sum sequence")));
        }
        Ok(counts)
    }

    pub fn sequence(&self, counts: &[u32]) -> GSequence {
        GSequence::from_multiplicities(&self.group, counts)
    }

    fn sum(&self, counts: &[u32]) -> usize {
        let mut acc = 0;
        for (g, &k) in counts.iter().enumerate() {
            for _ in 0..k {
                acc = self.add[acc][g];
            }
        }
        acc
    }
}

impl DivisibilityMonoid for ZeroSumMonoid {
    type Elem = Vec<u32>;
    type Key = Vec<u32>;

    fn identity(&self) -> Vec<u32> {
        vec![0; self.add.len()]
    }

    fn multiply(&self, a: &Vec<u32>, b: &Vec<u32>) -> Result<Vec<u32>> {
        Ok(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn is_unit(&self, a: &Vec<u32>) -> Result<bool> {
        Ok(a.iter().all(|&k| k == 0))
    }

    fn size(&self, a: &Vec<u32>) -> Result<u64> {
        Ok(a.iter().map(|&k| u64::from(k)).sum())
    }

    fn orbit_key(&self, a: &Vec<u32>) -> Result<Vec<u32>> {
        Ok(a.clone())
    }

    fn left_divisors(&self, a: &Vec<u32>) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        let mut out = Vec::new();
        let mut pick = vec![0u32; a.len()];
        fn rec(
            g: usize,
            sum: usize,
            a: &[u32],
            add: &[Vec<usize>],
            pick: &mut Vec<u32>,
            out: &mut Vec<(Vec<u32>, Vec<u32>)>,
        ) {
            if g == a.len() {
                if sum == 0 {
                    out.push((pick.clone(), a.iter().zip(pick.iter()).map(|(x, y)| x - y).collect()));
                }
                return;
            }
            let mut s = sum;
            for k in 0..=a[g] {
                pick[g] = k;
                rec(g + 1, s, a, add, pick, out);
                s = add[s][g];
            }
            pick[g] = 0;
        }
        rec(0, 0, a, &self.add, &mut pick, &mut out);
        Ok(out)
    }

    fn same_element(&self, a: &Vec<u32>, b: &Vec<u32>) -> bool {
        a == b
    }

    fn describe(&self, a: &Vec<u32>) -> serde_json::Value {
        json!(self.sequence(a).elements().map(|g| g.coords().to_vec()).collect::<Vec<_>>())
    }
}

/// The free monoid `(N, +)` on one atom: the abstract model of the valuation
/// monoid of a local maximal order in a division algebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct ValuationMonoid;

impl DivisibilityMonoid for ValuationMonoid {
    type Elem = u64;
    type Key = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn multiply(&self, a: &u64, b: &u64) -> Result<u64> {
        a.checked_add(*b).ok_or_else(|| Error::invalid("valuation overflow"))
    }

    fn is_unit(&self, a: &u64) -> Result<bool> {
        Ok(*a == 0)
    }

    fn size(&self, a: &u64) -> Result<u64> {
        Ok(*a)
    }

    fn orbit_key(&self, a: &u64) -> Result<u64> {
        Ok(*a)
    }

    fn left_divisors(&self, a: &u64) -> Result<Vec<(u64, u64)>> {
        Ok((0..=*a).map(|b| (b, a - b)).collect())
    }

    fn same_element(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn describe(&self, a: &u64) -> serde_json::Value {
        json!(a)
    }
}

/// The trivial monoid `{1}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialMonoid;

impl DivisibilityMonoid for TrivialMonoid {
    type Elem = ();
    type Key = ();

    fn identity(&self) {}

    fn multiply(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }

    fn is_unit(&self, _: &()) -> Result<bool> {
        Ok(true)
    }

    fn size(&self, _: &()) -> Result<u64> {
        Ok(0)
    }

    fn orbit_key(&self, _: &()) -> Result<()> {
        Ok(())
    }

    fn left_divisors(&self, _: &()) -> Result<Vec<((), ())>> {
        Ok(vec![((), ())])
    }

    fn same_element(&self, _: &(), _: &()) -> bool {
        true
    }

    fn describe(&self, _: &()) -> serde_json::Value {
        json!(null)
    }
}

/// The cancellative elements of an order `O ⊆ M_n(Z_p)` at fixed precision.
/// Elements are assumed to lie in `O`; the size is `w(nrd a)`.
#[derive(Debug, Clone)]
pub struct MatrixMonoid<O: MatrixOrder> {
    arith: OrderArithmetic<O>,
    divisor_cap: usize,
}

impl<O: MatrixOrder> MatrixMonoid<O> {
    pub fn new(arith: OrderArithmetic<O>) -> Self {
        MatrixMonoid { arith, divisor_cap: 1 << 20 }
    }

    /// Bound on candidates examined in a single divisor enumeration.
    pub fn with_divisor_cap(mut self, cap: usize) -> Self {
        self.divisor_cap = cap;
        self
    }

    pub fn arithmetic(&self) -> &OrderArithmetic<O> {
        &self.arith
    }

    /// Checks that `a` is an element the engine can work with.
    pub fn admit(&self, a: &DvrMatrix) -> Result<()> {
        self.arith.checked_valuation(a)?;
        if !self.arith.contains(a)? {
            return Err(Error::invalid("matrix is not in the order"));
        }
        Ok(())
    }
}

impl<O: MatrixOrder> DivisibilityMonoid for MatrixMonoid<O> {
    type Elem = DvrMatrix;
    type Key = OrbitKey;

    fn identity(&self) -> DvrMatrix {
        DvrMatrix::identity(self.arith.context(), self.arith.order().size())
    }

    fn multiply(&self, a: &DvrMatrix, b: &DvrMatrix) -> Result<DvrMatrix> {
        Ok(a.mul(b))
    }

    fn is_unit(&self, a: &DvrMatrix) -> Result<bool> {
        Ok(self.arith.is_unit(a))
    }

    fn size(&self, a: &DvrMatrix) -> Result<u64> {
        Ok(u64::from(self.arith.checked_valuation(a)?))
    }

    fn orbit_key(&self, a: &DvrMatrix) -> Result<OrbitKey> {
        self.arith.orbit_key(a)
    }

    fn left_divisors(&self, a: &DvrMatrix) -> Result<Vec<(DvrMatrix, DvrMatrix)>> {
        Ok(self.arith.left_divisors(a, self.divisor_cap)?.into_iter().map(|d| (d.divisor, d.cofactor)).collect())
    }

    fn same_element(&self, a: &DvrMatrix, b: &DvrMatrix) -> bool {
        a == b
    }

    fn describe(&self, a: &DvrMatrix) -> serde_json::Value {
        let ctx = a.context();
        json!({"p": ctx.p(), "precision": ctx.precision(), "entries": a.rows()})
    }
}
