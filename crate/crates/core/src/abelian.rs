//! Finite abelian groups given by a cyclic decomposition, their elements,
//! and formal sequences (free abelian monoid `F(G)`) with the sum map.
//!
//! The group law is written additively: the identity is the zero vector.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A direct sum of cyclic groups `Z_{n_1} ⊕ … ⊕ Z_{n_k}`.
///
/// Orders equal to one are dropped at construction, so the trivial group has
/// an empty order list. Decompositions are not forced into invariant-factor
/// form; `[2, 3]` and `[6]` are distinct descriptors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupDescriptor", into = "GroupDescriptor")]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
    strides: Vec<u64>,
    cardinality: u64,
}

/// JSON form of a group: `{"cyclic_orders":[2,4]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub cyclic_orders: Vec<i64>,
}

impl TryFrom<GroupDescriptor> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(d: GroupDescriptor) -> Result<Self> {
        FiniteAbelianGroup::new(&d.cyclic_orders)
    }
}

impl From<FiniteAbelianGroup> for GroupDescriptor {
    fn from(g: FiniteAbelianGroup) -> Self {
        GroupDescriptor { cyclic_orders: g.cyclic_orders.iter().map(|&n| n as i64).collect() }
    }
}

/// An element of a [`FiniteAbelianGroup`], with every coordinate reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FiniteAbelianGroup {
    /// Builds the group from a list of cyclic orders, dropping trivial factors.
    pub fn new(cyclic_orders: &[i64]) -> Result<Self> {
        let mut orders = Vec::with_capacity(cyclic_orders.len());
        for (i, &n) in cyclic_orders.iter().enumerate() {
            if n < 1 {
                return Err(Error::invalid(format!("cyclic order #{i} is {n}, must be >= 1")));
            }
            if n > 1 {
                orders.push(n as u64);
            }
        }
        Self::from_normalized(orders)
    }

    pub fn trivial() -> Self {
        Self::from_normalized(Vec::new()).expect("trivial group")
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n as i64])
    }

    fn from_normalized(orders: Vec<u64>) -> Result<Self> {
        let mut cardinality: u64 = 1;
        for &n in &orders {
            cardinality = cardinality
                .checked_mul(n)
                .ok_or_else(|| Error::invalid("group cardinality overflows 64 bits"))?;
        }
        let mut strides = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        Ok(FiniteAbelianGroup { cyclic_orders: orders, strides, cardinality })
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn rank(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn is_trivial(&self) -> bool {
        self.cardinality == 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Builds an element, reducing each coordinate modulo its order.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    /// Accepts only already-reduced coordinates.
    pub fn element_strict(&self, coords: &[u64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        for (i, (&c, &n)) in coords.iter().zip(&self.cyclic_orders).enumerate() {
            if c >= n {
                return Err(Error::invalid(format!("coordinate #{i} = {c} is not reduced modulo {n}")));
            }
        }
        Ok(GroupElement(coords.to_vec()))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::invalid(format!(
                "element has {len} coordinates but the group has rank {}",
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.cyclic_orders).all(|(&c, &n)| c < n)
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::invalid(format!("element {g} does not belong to the group {self}")))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.cyclic_orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement(
            a.0.iter().zip(&self.cyclic_orders).map(|(&x, &n)| (n - x) % n).collect(),
        ))
    }

    /// `k · a`.
    pub fn scale(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&self.cyclic_orders)
                .map(|(&x, &n)| ((x as i128 * k as i128).rem_euclid(n as i128)) as u64)
                .collect(),
        ))
    }

    /// Additive order of `a`.
    pub fn order_of(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        Ok(a.0.iter().zip(&self.cyclic_orders).fold(1u64, |acc, (&x, &n)| {
            let ord = n / num_integer::gcd(x, n);
            num_integer::lcm(acc, ord)
        }))
    }

    /// Position of `g` in the lexicographic enumeration of the group.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum::<u64>() as usize
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        let mut idx = index as u64;
        let coords = self
            .strides
            .iter()
            .zip(&self.cyclic_orders)
            .map(|(&s, &n)| {
                let c = (idx / s) % n;
                idx -= c * s;
                c
            })
            .collect();
        GroupElement(coords)
    }

    /// All elements in lexicographic order; index 0 is the identity.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.cardinality as usize).map(move |i| self.element_at(i))
    }

    /// Addition table over element indices.
    pub(crate) fn addition_table(&self) -> Vec<Vec<usize>> {
        let elems: Vec<_> = self.elements().collect();
        elems
            .iter()
            .map(|a| elems.iter().map(|b| self.index_of(&self.add_unchecked(a, b))).collect())
            .collect()
    }

    pub(crate) fn negation_table(&self) -> Vec<usize> {
        self.elements().map(|a| self.index_of(&self.neg(&a).expect("member"))).collect()
    }

    /// The sum map `σ: F(G) → G`.
    pub fn sigma(&self, s: &GSequence) -> Result<GroupElement> {
        let mut acc = self.zero();
        for (g, &k) in s.iter() {
            acc = self.add_unchecked(&acc, &self.scale(g, k as i64)?);
        }
        Ok(acc)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_orders.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.cyclic_orders.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

/// A finite formal sequence over a group, stored as element multiplicities.
///
/// The sequence does not remember its group; operations that need the group
/// take it explicitly and check membership.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GSequence {
    multiplicities: BTreeMap<GroupElement, u32>,
    length: u32,
}

impl GSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elements<I: IntoIterator<Item = GroupElement>>(elems: I) -> Self {
        let mut s = Self::new();
        for g in elems {
            s.push(g, 1);
        }
        s
    }

    /// Inverse of [`GSequence::to_multiplicities`].
    pub fn from_multiplicities(group: &FiniteAbelianGroup, counts: &[u32]) -> Self {
        let mut s = Self::new();
        for (i, &k) in counts.iter().enumerate() {
            s.push(group.element_at(i), k);
        }
        s
    }

    pub fn push(&mut self, g: GroupElement, count: u32) {
        if count == 0 {
            return;
        }
        *self.multiplicities.entry(g).or_insert(0) += count;
        self.length += count;
    }

    pub fn len(&self) -> u32 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn multiplicity(&self, g: &GroupElement) -> u32 {
        self.multiplicities.get(g).copied().unwrap_or(0)
    }

    /// `(element, multiplicity)` pairs in element order.
    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &u32)> {
        self.multiplicities.iter()
    }

    /// Elements with repetition, in element order.
    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.multiplicities.iter().flat_map(|(g, &k)| std::iter::repeat(g).take(k as usize))
    }

    /// The product `S·T` in `F(G)`.
    pub fn concat(&self, other: &GSequence) -> GSequence {
        let mut out = self.clone();
        for (g, &k) in other.iter() {
            out.push(g.clone(), k);
        }
        out
    }

    pub fn contains_all_in(&self, group: &FiniteAbelianGroup) -> bool {
        self.multiplicities.keys().all(|g| group.contains(g))
    }

    /// Multiplicity vector indexed by [`FiniteAbelianGroup::index_of`].
    pub fn to_multiplicities(&self, group: &FiniteAbelianGroup) -> Result<Vec<u32>> {
        let mut counts = vec![0u32; group.cardinality() as usize];
        for (g, &k) in self.iter() {
            if !group.contains(g) {
                return Err(Error::invalid(format!("element {g} does not belong to the group {group}")));
            }
            counts[group.index_of(g)] += k;
        }
        Ok(counts)
    }
}

impl fmt::Display for GSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.elements().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(g: &FiniteAbelianGroup, elems: &[&[i64]]) -> GSequence {
        GSequence::from_elements(elems.iter().map(|c| g.element(c).unwrap()))
    }

    #[test]
    fn group_make_normalizes() {
        let trivial = FiniteAbelianGroup::new(&[]).unwrap();
        assert_eq!(trivial.cardinality(), 1);
        assert!(trivial.is_trivial());

        let klein = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(klein.cardinality(), 4);

        let z6 = FiniteAbelianGroup::new(&[1, 6]).unwrap();
        assert_eq!(z6.cyclic_orders(), &[6]);
        assert_eq!(z6.cardinality(), 6);
        assert_eq!(FiniteAbelianGroup::new(&[1, 1]).unwrap(), trivial);
    }

    #[test]
    fn group_make_rejects_non_positive_orders() {
        assert!(matches!(FiniteAbelianGroup::new(&[2, 0]), Err(Error::InvalidInput(_))));
        assert!(FiniteAbelianGroup::new(&[-3]).is_err());
    }

    #[test]
    fn addition_examples() {
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let s = z3.add(&z3.element(&[1]).unwrap(), &z3.element(&[2]).unwrap()).unwrap();
        assert_eq!(s, z3.zero());

        let klein = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        let s = klein.add(&klein.element(&[1, 0]).unwrap(), &klein.element(&[0, 1]).unwrap()).unwrap();
        assert_eq!(s.coords(), &[1, 1]);

        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let s = z4.add(&z4.element(&[3]).unwrap(), &z4.element(&[3]).unwrap()).unwrap();
        assert_eq!(s.coords(), &[2]);
    }

    #[test]
    fn add_rejects_foreign_elements() {
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let klein = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        let a = klein.element(&[1, 1]).unwrap();
        assert!(z4.add(&a, &z4.zero()).is_err());
        assert!(z4.element(&[1, 1]).is_err());
        assert!(z4.element_strict(&[4]).is_err());
    }

    #[test]
    fn sigma_examples() {
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        assert_eq!(z3.sigma(&GSequence::new()).unwrap(), z3.zero());
        assert_eq!(z3.sigma(&seq(&z3, &[&[1], &[1], &[1]])).unwrap(), z3.zero());

        let klein = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        let s = seq(&klein, &[&[1, 0], &[0, 1]]);
        assert_eq!(klein.sigma(&s).unwrap().coords(), &[1, 1]);
    }

    #[test]
    fn element_indexing_round_trips() {
        let g = FiniteAbelianGroup::new(&[2, 3, 4]).unwrap();
        for (i, e) in g.elements().enumerate() {
            assert_eq!(g.index_of(&e), i);
        }
        assert_eq!(g.element_at(0), g.zero());
    }

    #[test]
    fn element_orders() {
        let g = FiniteAbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!(g.order_of(&g.element(&[1, 2]).unwrap()).unwrap(), 2);
        assert_eq!(g.order_of(&g.element(&[1, 1]).unwrap()).unwrap(), 4);
        assert_eq!(g.order_of(&g.zero()).unwrap(), 1);
    }

    #[test]
    fn sequence_length_tracks_multiplicities() {
        let z5 = FiniteAbelianGroup::cyclic(5).unwrap();
        let s = seq(&z5, &[&[1], &[1], &[3]]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.multiplicity(&z5.element(&[1]).unwrap()), 2);
        let counts = s.to_multiplicities(&z5).unwrap();
        assert_eq!(counts, vec![0, 2, 0, 1, 0]);
        assert_eq!(GSequence::from_multiplicities(&z5, &counts), s);
    }
}
