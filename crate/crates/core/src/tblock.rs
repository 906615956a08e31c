//! T-block monoids `B_T(G, ι) = {(S, t) : σ(S) + ι(t) = 0}`, valuation
//! splitting, the elasticity bound, and witness lifting from a local
//! monoid into its T-block monoid.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::abelian::{FiniteAbelianGroup, GSequence, GroupElement};
use crate::error::{Error, Result};
use crate::factor::{DivisibilityMonoid, Engine};
use crate::padic::{DvrContext, DvrMatrix};
use crate::tiled::{witness_atoms, TiledShape, WitnessAtoms};

/// An element `(S, t)`; `S` is a multiplicity vector over the element
/// indices of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TBlockElement<E> {
    pub counts: Vec<u32>,
    pub t: E,
}

/// `B_T(G, ι)` for a monoid `T` and a class map `ι: T → G`.
pub struct TBlockMonoid<T: DivisibilityMonoid, F> {
    group: FiniteAbelianGroup,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    base: T,
    class_map: F,
}

/// Builds `B_T(G, ι)`.
pub fn tblock_make<T, F>(group: &FiniteAbelianGroup, class_map: F, base: T) -> Result<TBlockMonoid<T, F>>
where
    T: DivisibilityMonoid,
    F: Fn(&T::Elem) -> Result<GroupElement>,
{
    TBlockMonoid::new(group, class_map, base)
}

impl<T, F> TBlockMonoid<T, F>
where
    T: DivisibilityMonoid,
    F: Fn(&T::Elem) -> Result<GroupElement>,
{
    pub fn new(group: &FiniteAbelianGroup, class_map: F, base: T) -> Result<Self> {
        if group.cardinality() > 1 << 12 {
            return Err(Error::resource(format!("group {group} is too large for T-block enumeration")));
        }
        let add = group.addition_table();
        let neg = (0..add.len()).map(|g| add[g].iter().position(|&s| s == 0).expect("inverse")).collect();
        let monoid = TBlockMonoid { group: group.clone(), add, neg, base, class_map };
        if monoid.class_index(&monoid.base.identity())? != 0 {
            return Err(Error::invalid("class map must send the identity to 0"));
        }
        Ok(monoid)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn base(&self) -> &T {
        &self.base
    }

    /// `ι(t)` as an element index.
    pub fn class_index(&self, t: &T::Elem) -> Result<usize> {
        let g = (self.class_map)(t)?;
        if !self.group.contains(&g) {
            return Err(Error::invalid(format!("class {g} is not an element of {}", self.group)));
        }
        Ok(self.group.index_of(&g))
    }

    pub fn class_of(&self, t: &T::Elem) -> Result<GroupElement> {
        (self.class_map)(t)
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

    /// `(S, t)`, checking `σ(S) + ι(t) = 0`.
    pub fn element(&self, s: &GSequence, t: T::Elem) -> Result<TBlockElement<T::Elem>> {
        let counts = s.to_multiplicities(&self.group)?;
        self.element_from_counts(counts, t)
    }

    pub fn element_from_counts(&self, counts: Vec<u32>, t: T::Elem) -> Result<TBlockElement<T::Elem>> {
        if counts.len() != self.add.len() {
            return Err(Error::invalid("multiplicity vector does not match the group"));
        }
        let total = self.add[self.sum(&counts)][self.class_index(&t)?];
        if total != 0 {
            return Err(Error::invalid(format!(
                "σ(S) + ι(t) = {} is not zero",
                self.group.element_at(total)
            )));
        }
        Ok(TBlockElement { counts, t })
    }

    /// The element index `-ι(t)`: the class a single prime must carry to
    /// pair with `t`.
    pub fn balancing_class(&self, t: &T::Elem) -> Result<usize> {
        Ok(self.neg[self.class_index(t)?])
    }

    pub fn sequence(&self, counts: &[u32]) -> GSequence {
        GSequence::from_multiplicities(&self.group, counts)
    }
}

impl<T, F> DivisibilityMonoid for TBlockMonoid<T, F>
where
    T: DivisibilityMonoid,
    F: Fn(&T::Elem) -> Result<GroupElement>,
{
    type Elem = TBlockElement<T::Elem>;
    type Key = (Vec<u32>, T::Key);

    fn identity(&self) -> Self::Elem {
        TBlockElement { counts: vec![0; self.add.len()], t: self.base.identity() }
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(TBlockElement {
            counts: a.counts.iter().zip(&b.counts).map(|(x, y)| x + y).collect(),
            t: self.base.multiply(&a.t, &b.t)?,
        })
    }

    fn is_unit(&self, a: &Self::Elem) -> Result<bool> {
        Ok(a.counts.iter().all(|&k| k == 0) && self.base.is_unit(&a.t)?)
    }

    fn size(&self, a: &Self::Elem) -> Result<u64> {
        Ok(a.counts.iter().map(|&k| u64::from(k)).sum::<u64>() + self.base.size(&a.t)?)
    }

    fn orbit_key(&self, a: &Self::Elem) -> Result<Self::Key> {
        Ok((a.counts.clone(), self.base.orbit_key(&a.t)?))
    }

    fn left_divisors(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, Self::Elem)>> {
        let t_divs = self.base.left_divisors(&a.t)?;
        let mut t_classes = Vec::with_capacity(t_divs.len());
        for (b, _) in &t_divs {
            t_classes.push(self.class_index(b)?);
        }
        let mut out = Vec::new();
        let mut pick = vec![0u32; a.counts.len()];
        let mut subs: Vec<(Vec<u32>, usize)> = Vec::new();
        fn rec(g: usize, sum: usize, a: &[u32], add: &[Vec<usize>], pick: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, usize)>) {
            if g == a.len() {
                out.push((pick.clone(), sum));
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
        rec(0, 0, &a.counts, &self.add, &mut pick, &mut subs);
        for (sub, sum) in &subs {
            for ((b, c), &cls) in t_divs.iter().zip(&t_classes) {
                if self.add[*sum][cls] != 0 {
                    continue;
                }
                let rest = a.counts.iter().zip(sub).map(|(x, y)| x - y).collect();
                out.push((
                    TBlockElement { counts: sub.clone(), t: b.clone() },
                    TBlockElement { counts: rest, t: c.clone() },
                ));
            }
        }
        Ok(out)
    }

    fn same_element(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.counts == b.counts && self.base.same_element(&a.t, &b.t)
    }

    fn describe(&self, a: &Self::Elem) -> serde_json::Value {
        json!({
            "sequence": self.sequence(&a.counts).elements().map(|g| g.coords().to_vec()).collect::<Vec<_>>(),
            "t": self.base.describe(&a.t),
        })
    }
}

/// `(ṽ, v_M)` of a factored norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitValuation {
    /// Sum of exponents at primes outside `M`.
    pub tilde: u64,
    /// Sum of exponents at primes in `M`.
    pub v_m: u64,
    /// `ṽ + v_M = 0`.
    pub unit: bool,
    /// `ṽ + v_M = 1`, which certifies an atom.
    pub atom_certificate: bool,
}

pub fn split_valuations(exponents: &BTreeMap<String, u64>, m_labels: &BTreeSet<String>) -> SplitValuation {
    let (mut tilde, mut v_m) = (0u64, 0u64);
    for (label, &e) in exponents {
        if m_labels.contains(label) {
            v_m += e;
        } else {
            tilde += e;
        }
    }
    SplitValuation { tilde, v_m, unit: tilde + v_m == 0, atom_certificate: tilde + v_m == 1 }
}

/// Inputs of the elasticity bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElasticityBoundInput {
    /// Degree `n` of the algebra.
    pub n: u64,
    /// `#M`, the number of primes where the order is not hereditary.
    pub ram_count: u64,
    /// `v_M([O' : O])`.
    pub index_valuation: u64,
    /// `D(C)`.
    pub davenport: u64,
}

/// `max{1, D/2}` for hereditary orders, `2n·#M·(v_M + D)` otherwise.
pub fn elasticity_upper_bound(input: &ElasticityBoundInput, hereditary: bool) -> Result<Ratio<u64>> {
    if input.n < 2 {
        return Err(Error::invalid(format!("algebra degree n = {} must be at least 2", input.n)));
    }
    if input.davenport < 1 {
        return Err(Error::invalid("the Davenport constant is at least 1"));
    }
    if hereditary {
        return Ok(Ratio::new(input.davenport, 2).max(Ratio::from_integer(1)));
    }
    if input.ram_count == 0 {
        return Err(Error::invalid("a non-hereditary order has at least one non-hereditary prime (ram_count >= 1)"));
    }
    let overflow = || Error::invalid("bound overflows 64 bits");
    let sum = input.index_valuation.checked_add(input.davenport).ok_or_else(overflow)?;
    let value = 2u64
        .checked_mul(input.n)
        .and_then(|x| x.checked_mul(input.ram_count))
        .and_then(|x| x.checked_mul(sum))
        .ok_or_else(overflow)?;
    Ok(Ratio::from_integer(value))
}

/// A local identity `α_1 ⋯ α_d = β·γ^K·δ` in `T`.
#[derive(Debug, Clone)]
pub struct LocalIdentity<E> {
    pub alphas: Vec<E>,
    pub beta: E,
    pub gamma: E,
    pub gamma_exponent: u32,
    pub delta: E,
}

/// A prime of `F(G)` with a formal label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledPrime {
    pub label: String,
    pub class: GroupElement,
}

/// One factor of a lifted factorization.
#[derive(Debug, Clone)]
pub struct LiftedFactor<E> {
    pub primes: Vec<LabeledPrime>,
    pub element: TBlockElement<E>,
}

/// Two factorizations of one element of `B_T`: a short one with at most
/// `d + 1` atoms and a long one with at least `m + 2`.
#[derive(Debug, Clone)]
pub struct WitnessLift<E> {
    pub element: TBlockElement<E>,
    pub short_side: Vec<LiftedFactor<E>>,
    /// The coarse long side `([ω], β)·(1, γ^{|G|})^m·(…, γ^{K−m|G|}δ)`.
    pub long_side_coarse: Vec<LiftedFactor<E>>,
    /// The long side refined into atoms.
    pub long_side: Vec<LiftedFactor<E>>,
    pub padded: bool,
    pub m: u32,
}

impl<E> WitnessLift<E> {
    pub fn short_length(&self) -> usize {
        self.short_side.len()
    }

    pub fn long_length(&self) -> usize {
        self.long_side.len()
    }
}

/// Lifts a local identity to two factorizations in `B_T(G, ι)`.
///
/// Each `α_i` with `ι(α_i) ≠ 0` is paired with a prime of class `−ι(α_i)`.
/// When `ι(β) ≠ 0` a padding atom `([ω]⊙[ω'], 1)` with `[ω] = −ι(β)` is put
/// on the short side. The coarse long side is refined into atoms with the
/// engine (a longest factorization of each coarse factor), and every atom on
/// both sides is re-checked.
pub fn witness_lift<T, F>(
    monoid: &TBlockMonoid<T, F>,
    identity: &LocalIdentity<T::Elem>,
    m: u32,
    cap: usize,
) -> Result<WitnessLift<T::Elem>>
where
    T: DivisibilityMonoid,
    F: Fn(&T::Elem) -> Result<GroupElement>,
{
    let base = monoid.base();
    let group = monoid.group();
    let order = u32::try_from(group.cardinality()).map_err(|_| Error::invalid("group too large"))?;
    if identity.alphas.is_empty() {
        return Err(Error::invalid("need at least one local atom"));
    }
    let needed = m.checked_mul(order).ok_or_else(|| Error::invalid("m·|G| overflows"))?;
    if identity.gamma_exponent < needed {
        return Err(Error::invalid(format!(
            "exponent K = {} is below m·|G| = {needed}",
            identity.gamma_exponent
        )));
    }
    let lhs = crate::factor::product(base, &identity.alphas)?;
    let gamma_pow = |e: u32| -> Result<T::Elem> {
        (0..e).try_fold(base.identity(), |acc, _| base.multiply(&acc, &identity.gamma))
    };
    let rhs = crate::factor::product(
        base,
        &[identity.beta.clone(), gamma_pow(identity.gamma_exponent)?, identity.delta.clone()],
    )?;
    if !base.same_element(&lhs, &rhs) {
        return Err(Error::invalid("local identity α_1⋯α_d = β·γ^K·δ does not hold"));
    }
    if base.is_unit(&identity.gamma)? {
        return Err(Error::invalid("γ must be a non-unit"));
    }

    let card = group.cardinality() as usize;
    let prime = |label: String, idx: usize| LabeledPrime { label, class: group.element_at(idx) };
    let counts_of = |primes: &[LabeledPrime]| {
        let mut c = vec![0u32; card];
        for p in primes {
            c[group.index_of(&p.class)] += 1;
        }
        c
    };
    let factor = |primes: Vec<LabeledPrime>, t: T::Elem| -> Result<LiftedFactor<T::Elem>> {
        let element = monoid.element_from_counts(counts_of(&primes), t)?;
        Ok(LiftedFactor { primes, element })
    };

    // short side
    let mut pis = Vec::new();
    let mut short_side = Vec::new();
    let omega = monoid.balancing_class(&identity.beta)?;
    let padded = omega != 0;
    if padded {
        let omega_prime = monoid.class_index(&identity.beta)?;
        short_side.push(factor(
            vec![prime("omega".into(), omega), prime("omega'".into(), omega_prime)],
            base.identity(),
        )?);
    }
    for (i, a) in identity.alphas.iter().enumerate() {
        let cls = monoid.balancing_class(a)?;
        let primes = if cls == 0 { Vec::new() } else { vec![prime(format!("pi_{}", i + 1), cls)] };
        pis.extend(primes.iter().cloned());
        short_side.push(factor(primes, a.clone())?);
    }

    // coarse long side
    let mut coarse = Vec::new();
    let head_primes = if padded { vec![prime("omega".into(), omega)] } else { Vec::new() };
    coarse.push(factor(head_primes, identity.beta.clone())?);
    let gamma_c = gamma_pow(order)?;
    for _ in 0..m {
        coarse.push(factor(Vec::new(), gamma_c.clone())?);
    }
    let mut tail_primes = Vec::new();
    if padded {
        tail_primes.push(prime("omega'".into(), monoid.class_index(&identity.beta)?));
    }
    tail_primes.extend(pis);
    let tail_t = base.multiply(&gamma_pow(identity.gamma_exponent - needed)?, &identity.delta)?;
    coarse.push(factor(tail_primes, tail_t)?);

    let element = crate::factor::product(monoid, &short_side.iter().map(|f| f.element.clone()).collect::<Vec<_>>())?;
    let coarse_product =
        crate::factor::product(monoid, &coarse.iter().map(|f| f.element.clone()).collect::<Vec<_>>())?;
    if !monoid.same_element(&element, &coarse_product) {
        return Err(Error::invalid("lifted factorizations do not multiply to the same element"));
    }

    let mut engine = Engine::with_cap(monoid, cap);
    for f in &short_side {
        if !engine.is_atom(&f.element)? {
            return Err(Error::invalid("a short-side factor is not an atom of the T-block monoid"));
        }
    }
    let mut long_side = Vec::new();
    for f in &coarse {
        if monoid.is_unit(&f.element)? {
            continue;
        }
        let lengths = engine.length_set(&f.element)?;
        let k = lengths.max().ok_or_else(|| Error::resource("could not refine a long-side factor under the cap"))?;
        let atoms = engine
            .factorization_of_length(&f.element, k)?
            .ok_or_else(|| Error::resource("could not refine a long-side factor under the cap"))?;
        let n_atoms = atoms.len();
        // primes travel with the atoms that carry their classes
        let mut remaining = f.primes.clone();
        for (j, atom) in atoms.into_iter().enumerate() {
            let mut primes = Vec::new();
            for (g, &k) in atom.counts.iter().enumerate() {
                for _ in 0..k {
                    let cls = group.element_at(g);
                    let pos = remaining.iter().position(|p| p.class == cls).expect("class present in factor");
                    primes.push(remaining.remove(pos));
                }
            }
            debug_assert!(j + 1 < n_atoms || remaining.is_empty());
            long_side.push(LiftedFactor { primes, element: atom });
        }
    }
    for f in &long_side {
        if !engine.is_atom(&f.element)? {
            return Err(Error::invalid("a refined long-side factor is not an atom"));
        }
    }
    let long_product =
        crate::factor::product(monoid, &long_side.iter().map(|f| f.element.clone()).collect::<Vec<_>>())?;
    if !monoid.equal_up_to_right_unit(&element, &long_product)? {
        return Err(Error::invalid("refined long side does not multiply back to the element"));
    }
    if engine.is_capped() {
        return Err(Error::resource(format!("atom verification exceeded the cap of {cap} expansions")));
    }
    Ok(WitnessLift { element, short_side, long_side_coarse: coarse, long_side, padded, m })
}

/// The class map `x ↦ w(nrd x)·c` on matrices.
pub fn valuation_class_map(
    group: &FiniteAbelianGroup,
    c: GroupElement,
) -> impl Fn(&DvrMatrix) -> Result<GroupElement> {
    let group = group.clone();
    move |x: &DvrMatrix| {
        let v = x.det_valuation();
        if v.at_precision {
            return Err(Error::precision("reduced norm vanishes at the working precision"));
        }
        group.scale(&c, i64::from(v.value))
    }
}

/// Builds the witness atoms `α_k, α'_k` of a non-hereditary tiled shape and
/// a local identity for them.
///
/// Unpadded: `α_kα'_k = 1·α_1^k·α'^k_1`. Padded: `α_kα'_k = α_1·α_1^{k−1}·α'^k_1`,
/// so that `β = α_1` carries a class whenever `γ = α_1` does.
pub fn tiled_local_identity(
    shape: &TiledShape,
    ctx: DvrContext,
    k: u32,
    padded: bool,
) -> Result<(WitnessAtoms, LocalIdentity<DvrMatrix>)> {
    if padded && k < 2 {
        return Err(Error::invalid("the padded identity needs k >= 2"));
    }
    let atoms = witness_atoms(shape, ctx, k)?;
    let first = witness_atoms(shape, ctx, 1)?;
    let n = atoms.order.shape().size();
    let delta = first.alpha_prime.pow(k);
    let identity = if padded {
        LocalIdentity {
            alphas: vec![atoms.alpha.clone(), atoms.alpha_prime.clone()],
            beta: first.alpha.clone(),
            gamma: first.alpha,
            gamma_exponent: k - 1,
            delta,
        }
    } else {
        LocalIdentity {
            alphas: vec![atoms.alpha.clone(), atoms.alpha_prime.clone()],
            beta: DvrMatrix::identity(ctx, n),
            gamma: first.alpha,
            gamma_exponent: k,
            delta,
        }
    };
    Ok((atoms, identity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{TrivialMonoid, ValuationMonoid};

    #[test]
    fn split_examples() {
        let empty = split_valuations(&BTreeMap::new(), &BTreeSet::new());
        assert_eq!((empty.tilde, empty.v_m, empty.unit), (0, 0, true));
        let map = BTreeMap::from([("p1".to_string(), 2), ("p2".to_string(), 1)]);
        let s = split_valuations(&map, &BTreeSet::from(["p2".to_string()]));
        assert_eq!((s.tilde, s.v_m), (2, 1));
        let q = split_valuations(&BTreeMap::from([("q".to_string(), 1)]), &BTreeSet::new());
        assert_eq!((q.tilde, q.v_m, q.atom_certificate), (1, 0, true));
    }

    #[test]
    fn bound_examples() {
        let input = |d| ElasticityBoundInput { n: 2, ram_count: 1, index_valuation: 2, davenport: d };
        assert_eq!(elasticity_upper_bound(&input(1), true).unwrap(), Ratio::from_integer(1));
        assert_eq!(elasticity_upper_bound(&input(3), true).unwrap(), Ratio::new(3, 2));
        assert_eq!(elasticity_upper_bound(&input(3), false).unwrap(), Ratio::from_integer(20));
        assert!(elasticity_upper_bound(&ElasticityBoundInput { n: 1, ..input(3) }, true).is_err());
    }

    #[test]
    fn valuation_base_membership() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let c = g.element(&[1]).unwrap();
        let gg = g.clone();
        let b = tblock_make(&g, move |w: &u64| gg.scale(&c, *w as i64), ValuationMonoid).unwrap();
        let one = GSequence::from_elements([g.element(&[1]).unwrap()]);
        assert!(b.element(&one, 1).is_ok());
        assert!(b.element(&one, 0).is_err());
        assert!(b.element(&GSequence::from_elements([g.zero()]), 0).is_ok());
    }

    #[test]
    fn trivial_base_lift_is_degenerate() {
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let b = tblock_make(&g, |_: &()| Ok(FiniteAbelianGroup::cyclic(3).unwrap().zero()), TrivialMonoid).unwrap();
        let id = LocalIdentity { alphas: vec![()], beta: (), gamma: (), gamma_exponent: 0, delta: () };
        assert!(witness_lift(&b, &id, 0, 100).is_err());
    }
    fn tiled_lift(group: &FiniteAbelianGroup, c: GroupElement, k: u32, m: u32, padded: bool) -> (usize, usize, bool) {
        use crate::factor::MatrixMonoid;
        use crate::padic::OrderArithmetic;
        let ctx = DvrContext::new(2, 2 * k + 2).unwrap();
        let shape = TiledShape::new(vec![1, 1], vec![vec![0, 2], vec![0, 0]]).unwrap();
        let (atoms, id) = tiled_local_identity(&shape, ctx, k, padded).unwrap();
        let base = MatrixMonoid::new(OrderArithmetic::new(atoms.order, ctx).unwrap());
        let b = tblock_make(group, valuation_class_map(group, c), base).unwrap();
        let lift = witness_lift(&b, &id, m, 100_000).unwrap();
        (lift.short_length(), lift.long_length(), lift.padded)
    }

    #[test]
    fn tiled_lift_trivial_group() {
        let g = FiniteAbelianGroup::trivial();
        for k in 1..=3 {
            assert_eq!(tiled_lift(&g, g.zero(), k, k, false), (2, 2 * k as usize, false));
        }
    }

    #[test]
    fn tiled_lift_z2_padded() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let c = g.element(&[1]).unwrap();
        let (short, long, padded) = tiled_lift(&g, c, 5, 2, true);
        assert!(padded);
        assert_eq!(short, 3);
        assert!(long >= 4);
    }

    #[test]
    fn lift_rejects_small_exponent() {
        use crate::factor::MatrixMonoid;
        use crate::padic::OrderArithmetic;
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let ctx = DvrContext::new(2, 8).unwrap();
        let shape = TiledShape::new(vec![1, 1], vec![vec![0, 2], vec![0, 0]]).unwrap();
        let (atoms, id) = tiled_local_identity(&shape, ctx, 3, true).unwrap();
        let base = MatrixMonoid::new(OrderArithmetic::new(atoms.order, ctx).unwrap());
        let b = tblock_make(&g, valuation_class_map(&g, g.element(&[1]).unwrap()), base).unwrap();
        assert!(matches!(witness_lift(&b, &id, 2, 1000), Err(Error::InvalidInput(_))));
        let mut bad = id.clone();
        bad.gamma_exponent = 1;
        assert!(witness_lift(&b, &bad, 0, 1000).is_err());
    }
}
