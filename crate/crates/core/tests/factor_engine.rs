use std::collections::BTreeSet;

use factorlab::abelian::{FiniteAbelianGroup, GSequence};
use factorlab::factor::{
    atoms_dividing, length_set, refined_elasticity_lower_bound, union_of_lengths, DivisibilityMonoid, Elasticity,
    Engine, MatrixMonoid, ProductMonoid, ValuationMonoid, ZeroSumMonoid,
};
use factorlab::padic::{left_divisors_exhaustive, DvrContext, DvrMatrix, FullMatrixRing, OrderArithmetic};
use factorlab::tiled::{witness_pair, TiledOrder, TiledShape};
use factorlab::zerosum::BlockMonoid;
use num_rational::Ratio;

fn seq(group: &FiniteAbelianGroup, elems: &[&[i64]]) -> GSequence {
    GSequence::from_elements(elems.iter().map(|c| group.element(c).unwrap()))
}

fn tiled(t: i64, p: u64, n: u32) -> MatrixMonoid<TiledOrder> {
    let shape = TiledShape::new(vec![1, 1], vec![vec![0, t], vec![0, 0]]).unwrap();
    let ctx = DvrContext::new(p, n).unwrap();
    MatrixMonoid::new(OrderArithmetic::new(TiledOrder::new(shape).unwrap(), ctx).unwrap())
}

/// Delegates everything to the structured adapter except divisor
/// enumeration, which scans residues.
struct ExhaustiveTiled(MatrixMonoid<TiledOrder>);

impl DivisibilityMonoid for ExhaustiveTiled {
    type Elem = DvrMatrix;
    type Key = factorlab::padic::OrbitKey;
    fn identity(&self) -> DvrMatrix {
        self.0.identity()
    }
    fn multiply(&self, a: &DvrMatrix, b: &DvrMatrix) -> factorlab::Result<DvrMatrix> {
        self.0.multiply(a, b)
    }
    fn is_unit(&self, a: &DvrMatrix) -> factorlab::Result<bool> {
        self.0.is_unit(a)
    }
    fn size(&self, a: &DvrMatrix) -> factorlab::Result<u64> {
        self.0.size(a)
    }
    fn orbit_key(&self, a: &DvrMatrix) -> factorlab::Result<Self::Key> {
        self.0.orbit_key(a)
    }
    fn left_divisors(&self, a: &DvrMatrix) -> factorlab::Result<Vec<(DvrMatrix, DvrMatrix)>> {
        let order = self.0.arithmetic().order();
        Ok(left_divisors_exhaustive(a, order, 1 << 26)?.into_iter().map(|d| (d.divisor, d.cofactor)).collect())
    }
    fn same_element(&self, a: &DvrMatrix, b: &DvrMatrix) -> bool {
        a == b
    }
    fn describe(&self, a: &DvrMatrix) -> serde_json::Value {
        self.0.describe(a)
    }
}

fn set(xs: &[u32]) -> BTreeSet<u32> {
    xs.iter().copied().collect()
}

#[test]
fn identity_has_no_atom_divisors() {
    let g = FiniteAbelianGroup::cyclic(3).unwrap();
    let m = ZeroSumMonoid::new(&g).unwrap();
    assert!(atoms_dividing(&m, &m.identity(), 100).unwrap().is_empty());
    assert_eq!(length_set(&m, &m.identity(), 100).unwrap().lengths, set(&[0]));
    let e = length_set(&m, &m.identity(), 100).unwrap().elasticity().unwrap();
    assert_eq!(e, Elasticity::Exact(Ratio::from_integer(1)));
}

#[test]
fn zero_sum_atoms_dividing() {
    let g = FiniteAbelianGroup::cyclic(2).unwrap();
    let m = ZeroSumMonoid::new(&g).unwrap();
    let a = m.element(&seq(&g, &[&[1], &[1], &[0]])).unwrap();
    let atoms: BTreeSet<Vec<u32>> = atoms_dividing(&m, &a, 100).unwrap().into_iter().collect();
    assert_eq!(atoms, BTreeSet::from([vec![1, 0], vec![0, 2]]));
}

#[test]
fn zero_sum_lengths_and_elasticity() {
    let g = FiniteAbelianGroup::cyclic(3).unwrap();
    let m = ZeroSumMonoid::new(&g).unwrap();
    let a = m.element(&seq(&g, &[&[1], &[1], &[1], &[2], &[2], &[2]])).unwrap();
    let l = length_set(&m, &a, 1000).unwrap();
    assert_eq!(l.lengths, set(&[2, 3]));
    assert_eq!(l.elasticity(), Some(Elasticity::Exact(Ratio::new(3, 2))));
}

#[test]
fn engine_matches_block_monoid_on_small_groups() {
    for orders in [&[2][..], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4], &[2, 2, 2]] {
        let g = FiniteAbelianGroup::new(orders).unwrap();
        let m = ZeroSumMonoid::new(&g).unwrap();
        let mut block = BlockMonoid::new(&g).unwrap();
        let mut engine = Engine::new(&m);
        let mut all = Vec::new();
        block.for_each_zero_sum(if g.cardinality() > 6 { 6 } else { 8 }, |c| all.push(c.to_vec()));
        for counts in all {
            let oracle = block.length_set_counts(&counts).unwrap();
            let got = engine.length_set(&counts).unwrap();
            assert!(!got.capped);
            assert_eq!(got.lengths, *oracle, "{g} {counts:?}");
        }
    }
}

#[test]
fn tiled_square_of_uniformizer() {
    let m = tiled(2, 2, 6);
    let ctx = m.arithmetic().context();
    let a = DvrMatrix::scalar(ctx, 2, 4);
    let atoms = atoms_dividing(&m, &a, 10_000).unwrap();
    for k in 1..=2 {
        let (alpha, _) = witness_pair(ctx, 2, 1, 2, k).unwrap();
        assert!(
            atoms.iter().any(|b| m.equal_up_to_right_unit(b, &alpha).unwrap()),
            "alpha_{k} missing among atom divisors of p^2 I"
        );
    }
    let l = length_set(&m, &a, 100_000).unwrap();
    assert!(!l.capped);
    assert!(l.lengths.is_superset(&set(&[2, 4])), "{:?}", l.lengths);
    // independent route: the same recursion over residue-scan divisors
    let oracle = length_set(&ExhaustiveTiled(m.clone()), &a, 100_000).unwrap();
    assert_eq!(l.lengths, oracle.lengths);
    assert_eq!(l.lengths, set(&[2, 4]));
    match l.elasticity().unwrap() {
        Elasticity::Exact(r) => assert!(r >= Ratio::from_integer(2)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn hereditary_and_maximal_are_half_factorial() {
    let h = tiled(1, 2, 5);
    let full = MatrixMonoid::new(OrderArithmetic::new(FullMatrixRing { size: 2 }, DvrContext::new(2, 5).unwrap()).unwrap());
    let ctx = DvrContext::new(2, 5).unwrap();
    let samples = [
        DvrMatrix::scalar(ctx, 2, 2),
        DvrMatrix::diagonal(ctx, &[8, 1]),
        DvrMatrix::diagonal(ctx, &[4, 2]),
        DvrMatrix::new(ctx, &[vec![2, 2], vec![1, 3]]).unwrap(),
    ];
    for a in &samples {
        let v = a.det_valuation().value;
        assert_eq!(length_set(&full, a, 10_000).unwrap().lengths, set(&[v]));
        if TiledOrder::contains(h.arithmetic().order(), a).unwrap() {
            assert_eq!(length_set(&h, a, 10_000).unwrap().lengths, set(&[v]));
        }
    }
}

#[test]
fn refined_elasticity_examples() {
    // half-factorial: rho_k = k, witnessed by powers of an atom
    let cands: Vec<u64> = (0..8).collect();
    assert_eq!(refined_elasticity_lower_bound(&ValuationMonoid, 3, &cands, 1000).unwrap().lower_bound, Some(3));
    // B(Z_2): rho_2 = 2
    let g = FiniteAbelianGroup::cyclic(2).unwrap();
    let m = ZeroSumMonoid::new(&g).unwrap();
    let mut cands = Vec::new();
    BlockMonoid::new(&g).unwrap().for_each_zero_sum(8, |c| cands.push(c.to_vec()));
    assert_eq!(refined_elasticity_lower_bound(&m, 2, &cands, 10_000).unwrap().lower_bound, Some(2));
}

#[test]
fn tiled_rho2_grows_with_k() {
    let m = tiled(2, 2, 8);
    let ctx = m.arithmetic().context();
    let family: Vec<DvrMatrix> = (1..=3)
        .map(|k| {
            let (a, ap) = witness_pair(ctx, 2, 1, 2, k).unwrap();
            a.mul(&ap)
        })
        .collect();
    let bound = refined_elasticity_lower_bound(&m, 2, &family, 1_000_000).unwrap();
    assert!(bound.lower_bound.unwrap() >= 6, "{bound:?}");
}

#[test]
fn unions_contain_the_witness_lengths() {
    let m = tiled(2, 2, 6);
    let ctx = m.arithmetic().context();
    let u = union_of_lengths(&m, 2, &[DvrMatrix::scalar(ctx, 2, 4)], 100_000).unwrap();
    assert!(u.lengths.contains(&4));
}

#[test]
fn product_lengths_are_sumsets() {
    let g = FiniteAbelianGroup::cyclic(3).unwrap();
    let m = ZeroSumMonoid::new(&g).unwrap();
    let prod = ProductMonoid::new(vec![m.clone(), m.clone()]);
    let a = m.element(&seq(&g, &[&[0]])).unwrap();
    let b = m.element(&seq(&g, &[&[1], &[1], &[1], &[2], &[2], &[2]])).unwrap();
    let l = length_set(&prod, &vec![a, b], 10_000).unwrap();
    assert_eq!(l.lengths, set(&[3, 4]));
}

#[test]
fn factorization_of_each_length_multiplies_back() {
    let m = tiled(2, 2, 6);
    let ctx = m.arithmetic().context();
    let a = DvrMatrix::scalar(ctx, 2, 4);
    let mut engine = Engine::new(&m);
    for k in engine.length_set(&a).unwrap().lengths {
        let f = engine.factorization_of_length(&a, k).unwrap().unwrap();
        assert_eq!(f.len() as u32, k);
        let prod = factorlab::factor::product(&m, &f).unwrap();
        assert_eq!(prod, a);
        for atom in &f {
            assert!(engine.is_atom(atom).unwrap());
        }
    }
}
