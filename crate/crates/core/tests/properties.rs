use std::collections::BTreeSet;

use factorlab::abelian::{FiniteAbelianGroup, GSequence};
use factorlab::codec::{decode_matrix, decode_shape, encode_matrix, encode_shape};
use factorlab::factor::{length_set, DivisibilityMonoid, MatrixMonoid, ValuationMonoid, ZeroSumMonoid};
use factorlab::padic::{DvrContext, DvrMatrix, OrderArithmetic};
use factorlab::tblock::{elasticity_upper_bound, tblock_make, valuation_class_map, ElasticityBoundInput};
use factorlab::tiled::{is_hereditary_by_staircase, shape_violations, TiledOrder, TiledShape};
use proptest::prelude::*;

fn group() -> impl Strategy<Value = FiniteAbelianGroup> {
    prop::sample::select(vec![vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4], vec![3, 3]])
        .prop_map(|o| FiniteAbelianGroup::new(&o).unwrap())
}

fn square(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..hi, n), n)
}

fn context() -> impl Strategy<Value = DvrContext> {
    prop::sample::select(vec![(2u64, 6u32), (3, 4), (5, 3), (7, 2)]).prop_map(|(p, n)| DvrContext::new(p, n).unwrap())
}

fn matrix_pair() -> impl Strategy<Value = (DvrMatrix, DvrMatrix)> {
    (context(), 1usize..=3).prop_flat_map(|(ctx, n)| {
        (square(n, -500, 500), square(n, -500, 500))
            .prop_map(move |(a, b)| (DvrMatrix::new(ctx, &a).unwrap(), DvrMatrix::new(ctx, &b).unwrap()))
    })
}

/// Valid exponent matrices with entries in `0..=3`.
fn valid_shape() -> impl Strategy<Value = TiledShape> {
    (1usize..=4).prop_flat_map(|r| {
        (prop::collection::vec(1usize..=2, r), square(r, 0, 4)).prop_filter_map("order conditions", |(part, mut e)| {
            for (i, row) in e.iter_mut().enumerate() {
                row[i] = 0;
            }
            if shape_violations(&part, &e).ok()?.is_empty() {
                TiledShape::new(part, e).ok()
            } else {
                None
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_is_additive(g in group(), xs in prop::collection::vec(0i64..12, 0..6), ys in prop::collection::vec(0i64..12, 0..6)) {
        let el = |v: &Vec<i64>| GSequence::from_elements(v.iter().map(|&x| g.element_at((x as u64 % g.cardinality()) as usize)));
        let (s, t) = (el(&xs), el(&ys));
        let lhs = g.sigma(&s.concat(&t)).unwrap();
        prop_assert_eq!(lhs, g.add(&g.sigma(&s).unwrap(), &g.sigma(&t).unwrap()).unwrap());
    }

    #[test]
    fn element_index_round_trip(g in group(), i in 0usize..64) {
        let i = i % g.cardinality() as usize;
        prop_assert_eq!(g.index_of(&g.element_at(i)), i);
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in matrix_pair()) {
        let ctx = a.context();
        let lhs = a.mul(&b).determinant();
        let rhs = (a.determinant() as u128 * b.determinant() as u128 % ctx.modulus() as u128) as u64;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjugate_identity((a, _) in matrix_pair()) {
        let det = a.determinant() as i64;
        prop_assert_eq!(a.mul(&a.adjugate()), DvrMatrix::scalar(a.context(), a.size(), det));
        if let Some(inv) = a.inverse() {
            prop_assert!(a.is_unit_matrix());
            prop_assert_eq!(a.mul(&inv), DvrMatrix::identity(a.context(), a.size()));
        } else {
            prop_assert!(!a.is_unit_matrix());
        }
    }

    #[test]
    fn det_valuation_is_additive((a, b) in matrix_pair()) {
        let (va, vb) = (a.det_valuation(), b.det_valuation());
        let vab = a.mul(&b).det_valuation();
        let n = a.context().precision();
        if va.value + vb.value < n {
            prop_assert_eq!(vab.value, va.value + vb.value);
        } else {
            prop_assert!(vab.at_precision);
        }
    }

    #[test]
    fn matrix_codec_round_trip((a, _) in matrix_pair()) {
        prop_assert_eq!(decode_matrix(&encode_matrix(&a), "", None).unwrap(), a);
    }

    #[test]
    fn shape_codec_round_trip(s in valid_shape()) {
        prop_assert_eq!(decode_shape(&encode_shape(&s), "").unwrap(), s);
    }

    #[test]
    fn reduction_is_idempotent_and_standard(s in valid_shape()) {
        let (r, _) = s.standard_form_reduce();
        prop_assert!(r.is_standard_form());
        prop_assert_eq!(r.standard_form_reduce().0, r.clone());
        prop_assert_eq!(r.size(), s.size());
        prop_assert_eq!(r.is_hereditary().unwrap(), is_hereditary_by_staircase(&r).unwrap());
    }

    #[test]
    fn conjugation_round_trips(s in valid_shape(), seed in any::<u64>()) {
        let (r, record) = s.standard_form_reduce();
        let ctx = DvrContext::new(2, 20).unwrap();
        let order = TiledOrder::new(s.clone()).unwrap();
        let n = s.size();
        let mut x = seed;
        let rows: Vec<Vec<i64>> = (0..n).map(|a| (0..n).map(|b| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((x >> 33) % 16) as i64 * (1i64 << order.entry_exponent(a, b))
        }).collect()).collect();
        let m = DvrMatrix::new(ctx, &rows).unwrap();
        let image = TiledOrder::conjugate(&record.composite, &m).unwrap().unwrap();
        prop_assert!(TiledOrder::new(r).unwrap().contains(&image).unwrap());
        let back = TiledOrder::conjugate(&record.composite.inverse(), &image).unwrap().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn zero_sum_lengths_bounded_by_size(g in group(), xs in prop::collection::vec(0u64..9, 1..7)) {
        let mut seq: Vec<_> = xs.iter().map(|&x| g.element_at((x % g.cardinality()) as usize)).collect();
        // close the sequence up to a zero-sum one
        let s = g.sigma(&GSequence::from_elements(seq.clone())).unwrap();
        seq.push(g.neg(&s).unwrap());
        let m = ZeroSumMonoid::new(&g).unwrap();
        let a = m.element(&GSequence::from_elements(seq.clone())).unwrap();
        let l = length_set(&m, &a, 100_000).unwrap();
        prop_assert!(!l.capped);
        prop_assert!(l.max().unwrap() as usize <= seq.len());
    }

    #[test]
    fn tblock_membership_and_class_map(c in 0i64..2, w in 0u64..6, g_in in 0i64..2) {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let cls = g.element(&[c]).unwrap();
        let gg = g.clone();
        let cc = cls.clone();
        let b = tblock_make(&g, move |x: &u64| gg.scale(&cc, *x as i64), ValuationMonoid).unwrap();
        let s = GSequence::from_elements([g.element(&[g_in]).unwrap()]);
        let expect = (g_in + c * w as i64) % 2 == 0;
        prop_assert_eq!(b.element(&s, w).is_ok(), expect);
    }

    #[test]
    fn matrix_class_map_is_a_homomorphism((a, b) in matrix_pair()) {
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let iota = valuation_class_map(&g, g.element(&[1]).unwrap());
        let n = a.context().precision();
        if a.det_valuation().value + b.det_valuation().value < n {
            let lhs = iota(&a.mul(&b)).unwrap();
            prop_assert_eq!(lhs, g.add(&iota(&a).unwrap(), &iota(&b).unwrap()).unwrap());
        }
    }

    #[test]
    fn bound_is_monotone(n in 2u64..6, ram in 1u64..4, v in 0u64..5, d in 1u64..9, field in 0usize..4, hereditary in any::<bool>()) {
        let input = ElasticityBoundInput { n, ram_count: ram, index_valuation: v, davenport: d };
        let mut bigger = input;
        match field {
            0 => bigger.n += 1,
            1 => bigger.ram_count += 1,
            2 => bigger.index_valuation += 1,
            _ => bigger.davenport += 1,
        }
        prop_assert!(elasticity_upper_bound(&bigger, hereditary).unwrap() >= elasticity_upper_bound(&input, hereditary).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Atoms have `w(nrd) >= 1`, so no factorization is longer than `w(nrd a)`.
    #[test]
    fn tiled_lengths_bounded_by_norm_valuation(rows in square(2, 0, 32), t in 1i64..=2) {
        let ctx = DvrContext::new(2, 6).unwrap();
        let shape = TiledShape::new(vec![1, 1], vec![vec![0, t], vec![0, 0]]).unwrap();
        let order = TiledOrder::new(shape).unwrap();
        let mut rows = rows;
        rows[0][1] <<= t;
        let a = DvrMatrix::new(ctx, &rows).unwrap();
        let m = MatrixMonoid::new(OrderArithmetic::new(order, ctx).unwrap());
        let v = a.det_valuation();
        prop_assume!(!v.at_precision && v.value + 2 <= 6 && v.value <= 3);
        let l = length_set(&m, &a, 100_000).unwrap();
        prop_assert!(!l.capped);
        if m.is_unit(&a).unwrap() {
            prop_assert_eq!(l.lengths, BTreeSet::from([0]));
        } else {
            prop_assert!(l.max().unwrap() <= v.value);
            prop_assert!(l.min().unwrap() >= 1);
        }
    }
}
