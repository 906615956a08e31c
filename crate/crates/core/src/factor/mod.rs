//! A factorization engine for atomic monoids whose elements have finitely
//! many left divisors up to right units.
//!
//! Sets of lengths are built left to right: every factorization of `a`
//! starts with an atom `b` dividing `a` on the left, and after absorbing a
//! unit into `b` the rest is a factorization of the cofactor. So
//! `L(a) = ⋃ { 1 + L(c) : a = b·c, b an atom }`, memoized on the orbit key
//! of `c`.

mod adapters;
mod product;

pub use adapters::{MatrixMonoid, TrivialMonoid, ValuationMonoid, ZeroSumMonoid};
pub use product::ProductMonoid;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// What the engine needs from a monoid.
pub trait DivisibilityMonoid {
    type Elem: Clone + Debug;
    /// Fingerprint of the orbit `a·T^×`; equal keys must mean equal orbits.
    type Key: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> Result<bool>;

    /// A measure that is 0 exactly on units and drops strictly from `a` to
    /// any cofactor of a non-unit left divisor.
    fn size(&self, a: &Self::Elem) -> Result<u64>;

    fn orbit_key(&self, a: &Self::Elem) -> Result<Self::Key>;

    /// Every factorization `a = b·c`, one for each orbit `b·T^×`, units and
    /// `a` itself included.
    fn left_divisors(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, Self::Elem)>>;

    fn equal_up_to_right_unit(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(self.orbit_key(a)? == self.orbit_key(b)?)
    }

    /// Exact equality of elements (not up to units).
    fn same_element(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// JSON description of an element, for reports.
    fn describe(&self, a: &Self::Elem) -> serde_json::Value;
}

/// `max L / min L`, or a certified lower bound for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elasticity {
    Exact(Ratio<u64>),
    AtLeast(Ratio<u64>),
    Infinite,
}

impl Elasticity {
    pub fn value(&self) -> Option<Ratio<u64>> {
        match *self {
            Elasticity::Exact(r) | Elasticity::AtLeast(r) => Some(r),
            Elasticity::Infinite => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Elasticity::Exact(_))
    }
}

impl Serialize for Elasticity {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            Elasticity::Exact(r) => ser.serialize_str(&r.to_string()),
            Elasticity::Infinite => ser.serialize_str("inf"),
            Elasticity::AtLeast(r) => {
                let mut m = ser.serialize_map(Some(1))?;
                m.serialize_entry("at_least", &r.to_string())?;
                m.end()
            }
        }
    }
}

/// A set of lengths, flagged when the search hit its cap. A capped set is a
/// subset of the true one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthSet {
    pub lengths: BTreeSet<u32>,
    pub capped: bool,
}

impl LengthSet {
    pub fn min(&self) -> Option<u32> {
        self.lengths.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.lengths.last().copied()
    }

    /// `max/min`; 1 for units; a lower bound when capped.
    pub fn elasticity(&self) -> Option<Elasticity> {
        let (lo, hi) = (self.min()?, self.max()?);
        let r = if lo == 0 { Ratio::from_integer(1) } else { Ratio::new(u64::from(hi), u64::from(lo)) };
        Some(if self.capped { Elasticity::AtLeast(r) } else { Elasticity::Exact(r) })
    }
}

/// Per-call summary of a length-set computation.
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationReport {
    pub element: serde_json::Value,
    pub length_set: Vec<u32>,
    /// `None` when nothing was found before the cap.
    pub elasticity: Option<Elasticity>,
    /// Elements whose divisors were enumerated.
    pub atom_count_searched: usize,
    pub search_capped: bool,
}

/// Memoized length-set search over a [`DivisibilityMonoid`].
///
/// The cap bounds how many elements get their divisors enumerated. Once it
/// is hit the engine stops expanding, and every later answer is flagged as
/// capped (a lower approximation).
pub struct Engine<'m, M: DivisibilityMonoid> {
    monoid: &'m M,
    cap: usize,
    expanded: usize,
    capped: bool,
    lengths: HashMap<M::Key, Arc<BTreeSet<u32>>>,
    atoms: HashMap<M::Key, bool>,
}

pub const DEFAULT_CAP: usize = 100_000;

impl<'m, M: DivisibilityMonoid> Engine<'m, M> {
    pub fn new(monoid: &'m M) -> Self {
        Self::with_cap(monoid, DEFAULT_CAP)
    }

    pub fn with_cap(monoid: &'m M, cap: usize) -> Self {
        Engine { monoid, cap, expanded: 0, capped: false, lengths: HashMap::new(), atoms: HashMap::new() }
    }

    pub fn monoid(&self) -> &M {
        self.monoid
    }

    pub fn expanded(&self) -> usize {
        self.expanded
    }

    pub fn is_capped(&self) -> bool {
        self.capped
    }

    fn divisors(&mut self, a: &M::Elem) -> Result<Option<Vec<(M::Elem, M::Elem)>>> {
        if self.expanded >= self.cap {
            self.capped = true;
            return Ok(None);
        }
        self.expanded += 1;
        self.monoid.left_divisors(a).map(Some)
    }

    /// Atom test: a non-unit without a factorization into two non-units.
    /// An element that cannot be examined under the cap counts as a non-atom.
    pub fn is_atom(&mut self, a: &M::Elem) -> Result<bool> {
        if self.monoid.is_unit(a)? {
            return Ok(false);
        }
        let key = self.monoid.orbit_key(a)?;
        if let Some(&known) = self.atoms.get(&key) {
            return Ok(known);
        }
        let Some(divs) = self.divisors(a)? else { return Ok(false) };
        let mut atom = true;
        for (b, c) in &divs {
            if !self.monoid.is_unit(b)? && !self.monoid.is_unit(c)? {
                atom = false;
                break;
            }
        }
        self.atoms.insert(key, atom);
        Ok(atom)
    }

    /// Left divisors of `a` that are atoms, one per orbit, with cofactors.
    pub fn atom_divisors(&mut self, a: &M::Elem) -> Result<Vec<(M::Elem, M::Elem)>> {
        if self.monoid.is_unit(a)? {
            return Ok(Vec::new());
        }
        let Some(divs) = self.divisors(a)? else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        for (b, c) in divs {
            if self.is_atom(&b)? {
                out.push((b, c));
            }
        }
        Ok(out)
    }

    fn lengths_rec(&mut self, a: &M::Elem) -> Result<Arc<BTreeSet<u32>>> {
        if self.monoid.is_unit(a)? {
            return Ok(Arc::new(BTreeSet::from([0])));
        }
        let key = self.monoid.orbit_key(a)?;
        if let Some(known) = self.lengths.get(&key) {
            return Ok(Arc::clone(known));
        }
        let size = self.monoid.size(a)?;
        let mut out = BTreeSet::new();
        for (_, c) in self.atom_divisors(a)? {
            debug_assert!(self.monoid.size(&c)? < size, "size must drop along proper divisors");
            for l in self.lengths_rec(&c)?.iter() {
                out.insert(l + 1);
            }
        }
        let out = Arc::new(out);
        self.lengths.insert(key, Arc::clone(&out));
        Ok(out)
    }

    pub fn length_set(&mut self, a: &M::Elem) -> Result<LengthSet> {
        let lengths = (*self.lengths_rec(a)?).clone();
        if lengths.is_empty() && !self.capped {
            return Err(Error::invalid("element has no factorization into atoms (not cancellative?)"));
        }
        Ok(LengthSet { lengths, capped: self.capped })
    }

    /// A factorization of `a` into exactly `k` atoms, if one exists.
    pub fn factorization_of_length(&mut self, a: &M::Elem, k: u32) -> Result<Option<Vec<M::Elem>>> {
        if self.monoid.is_unit(a)? {
            return Ok((k == 0).then(Vec::new));
        }
        if k == 0 {
            return Ok(None);
        }
        for (b, c) in self.atom_divisors(a)? {
            if self.lengths_rec(&c)?.contains(&(k - 1)) {
                if let Some(mut rest) = self.factorization_of_length(&c, k - 1)? {
                    // fold the trailing unit of `c` into the last atom
                    if rest.is_empty() {
                        let last = self.monoid.multiply(&b, &c)?;
                        return Ok(Some(vec![last]));
                    }
                    let mut out = vec![b];
                    out.append(&mut rest);
                    return Ok(Some(out));
                }
            }
        }
        Ok(None)
    }

    pub fn report(&mut self, a: &M::Elem) -> Result<FactorizationReport> {
        let set = self.length_set(a)?;
        Ok(FactorizationReport {
            element: self.monoid.describe(a),
            length_set: set.lengths.iter().copied().collect(),
            elasticity: set.elasticity(),
            atom_count_searched: self.expanded,
            search_capped: set.capped,
        })
    }
}

/// Atom orbits dividing `a` on the left.
pub fn atoms_dividing<M: DivisibilityMonoid>(monoid: &M, a: &M::Elem, cap: usize) -> Result<Vec<M::Elem>> {
    let mut engine = Engine::with_cap(monoid, cap);
    let out: Vec<M::Elem> = engine.atom_divisors(a)?.into_iter().map(|(b, _)| b).collect();
    if engine.is_capped() {
        return Err(Error::resource(format!("atom search exceeded the cap of {cap} expansions")));
    }
    Ok(out)
}

pub fn length_set<M: DivisibilityMonoid>(monoid: &M, a: &M::Elem, cap: usize) -> Result<LengthSet> {
    Engine::with_cap(monoid, cap).length_set(a)
}

pub fn elasticity_of_element<M: DivisibilityMonoid>(monoid: &M, a: &M::Elem, cap: usize) -> Result<Option<Elasticity>> {
    Ok(length_set(monoid, a, cap)?.elasticity())
}

/// Lower bound for `ρ_k` from a list of candidates: the largest `max L(a)`
/// among candidates with `min L(a) <= k`.
#[derive(Debug, Clone, Serialize)]
pub struct RefinedBound {
    pub k: u32,
    /// `None` when no candidate qualified.
    pub lower_bound: Option<u32>,
    /// Index of the candidate attaining the bound.
    pub witness: Option<usize>,
    pub search_capped: bool,
}

pub fn refined_elasticity_lower_bound<M: DivisibilityMonoid>(
    monoid: &M,
    k: u32,
    candidates: &[M::Elem],
    cap: usize,
) -> Result<RefinedBound> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let mut engine = Engine::with_cap(monoid, cap);
    let mut best: Option<(u32, usize)> = None;
    for (i, a) in candidates.iter().enumerate() {
        let set = engine.length_set(a)?;
        let (Some(lo), Some(hi)) = (set.min(), set.max()) else { continue };
        if lo <= k && best.is_none_or(|(b, _)| hi > b) {
            best = Some((hi, i));
        }
    }
    Ok(RefinedBound {
        k,
        lower_bound: best.map(|b| b.0),
        witness: best.map(|b| b.1),
        search_capped: engine.is_capped(),
    })
}

/// Lower approximation of `U_k`: the union of `L(a)` over candidates with
/// `k ∈ L(a)`.
pub fn union_of_lengths<M: DivisibilityMonoid>(
    monoid: &M,
    k: u32,
    candidates: &[M::Elem],
    cap: usize,
) -> Result<LengthSet> {
    let mut engine = Engine::with_cap(monoid, cap);
    let mut lengths = BTreeSet::new();
    for a in candidates {
        let set = engine.length_set(a)?;
        if set.lengths.contains(&k) {
            lengths.extend(set.lengths);
        }
    }
    Ok(LengthSet { lengths, capped: engine.is_capped() })
}

/// Multiplies a list of elements left to right.
pub fn product<M: DivisibilityMonoid>(monoid: &M, factors: &[M::Elem]) -> Result<M::Elem> {
    factors.iter().try_fold(monoid.identity(), |acc, f| monoid.multiply(&acc, f))
}
