//! Left-divisor enumeration in an order `O ⊆ M_n(Z_p)` up to right units.
//!
//! A left divisor `b` of `a` is recorded by its right-unit orbit `b·O^×`.
//! Writing `b = H·g` with `H` the column Hermite normal form of `b` and
//! `g ∈ GL_n(Z_p)`, the orbit is determined by `H` together with the coset
//! `g·O^×`. When `p^c·M_n ⊆ O`, the group `O^×` contains `1 + p^μ·M_n` for
//! `μ = max(1, c)`, so cosets can be read off modulo `p^μ`.
//!
//! [`left_divisors_exhaustive`] is a slow independent route that scans every
//! residue and deduplicates by mutual divisibility; the tests check that the
//! two agree.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::{DvrContext, DvrMatrix};
use crate::error::{Error, Result};

/// An order of `M_n(Q_p)` contained in `M_n(Z_p)`, given by a membership test.
pub trait MatrixOrder {
    /// Matrix size `n`.
    fn size(&self) -> usize;
    /// Smallest `c` with `p^c·M_n(Z_p) ⊆ O`.
    fn conductor(&self) -> u32;
    /// Membership. Implementations may refuse when the precision is too low
    /// to decide.
    fn contains(&self, m: &DvrMatrix) -> Result<bool>;
}

/// The maximal order `M_n(Z_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullMatrixRing {
    pub size: usize,
}

impl MatrixOrder for FullMatrixRing {
    fn size(&self) -> usize {
        self.size
    }

    fn conductor(&self) -> u32 {
        0
    }

    fn contains(&self, m: &DvrMatrix) -> Result<bool> {
        Ok(m.size() == self.size)
    }
}

impl<T: MatrixOrder + ?Sized> MatrixOrder for &T {
    fn size(&self) -> usize {
        (**self).size()
    }
    fn conductor(&self) -> u32 {
        (**self).conductor()
    }
    fn contains(&self, m: &DvrMatrix) -> Result<bool> {
        (**self).contains(m)
    }
}

/// Precision needed above `w(nrd a)` before divisors of `a` are decidable.
pub(crate) fn precision_margin(conductor: u32) -> u32 {
    conductor.max(2)
}

/// Column Hermite normal form: `b = H·g` with `g` invertible, `H` lower
/// triangular with diagonal `p^{e_i}` and `0 <= H[i][j] < p^{e_i}` for `j < i`.
pub(crate) fn column_hnf(b: &DvrMatrix) -> Result<DvrMatrix> {
    let ctx = b.context();
    let n = b.size();
    let mut w = b.entries().to_vec();
    for i in 0..n {
        let pivot = (i..n).min_by_key(|&j| ctx.val(w[i * n + j])).expect("nonempty");
        let e = ctx.val(w[i * n + pivot]);
        if e >= ctx.precision() {
            return Err(Error::precision("matrix is singular at working precision"));
        }
        if pivot != i {
            for r in 0..n {
                w.swap(r * n + pivot, r * n + i);
            }
        }
        let pe = ctx.pow_p(e);
        let s = ctx.inv(w[i * n + i] / pe).expect("unit part");
        for r in 0..n {
            w[r * n + i] = ctx.mul(w[r * n + i], s);
        }
        debug_assert_eq!(w[i * n + i], pe);
        for j in i + 1..n {
            let x = w[i * n + j];
            if x == 0 {
                continue;
            }
            let q = x / pe;
            for r in 0..n {
                w[r * n + j] = ctx.sub(w[r * n + j], ctx.mul(q, w[r * n + i]));
            }
        }
    }
    for i in 0..n {
        let pe = w[i * n + i];
        for j in 0..i {
            let q = w[i * n + j] / pe;
            if q == 0 {
                continue;
            }
            for r in i..n {
                w[r * n + j] = ctx.sub(w[r * n + j], ctx.mul(q, w[r * n + i]));
            }
        }
    }
    Ok(DvrMatrix::from_raw(ctx, n, w))
}

/// Solves `H·x = a` for lower-triangular `H` in Hermite form.
///
/// Returns `None` when `x` is not integral. The result is exact modulo
/// `p^(N - w(det H))`; higher digits are arbitrary.
pub(crate) fn hnf_solve(h: &DvrMatrix, a: &DvrMatrix) -> Option<DvrMatrix> {
    let ctx = h.context();
    let n = h.size();
    let mut x = vec![0u64; n * n];
    for i in 0..n {
        let pe = h.get(i, i);
        for j in 0..n {
            let mut rhs = a.get(i, j);
            for k in 0..i {
                rhs = ctx.sub(rhs, ctx.mul(h.get(i, k), x[k * n + j]));
            }
            if rhs % pe != 0 {
                return None;
            }
            x[i * n + j] = rhs / pe;
        }
    }
    Some(DvrMatrix::from_raw(ctx, n, x))
}

/// All column Hermite forms of size `n` with `Σ e_i = total`.
pub fn enumerate_hnfs(ctx: DvrContext, n: usize, total: u32) -> Vec<DvrMatrix> {
    fn exponents(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n - 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=total {
            prefix.push(e);
            exponents(n, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut exps = Vec::new();
    exponents(n, total, &mut Vec::new(), &mut exps);
    for e in exps {
        // free slots: (i, j) with j < i, each ranging over [0, p^{e_i})
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
        let mut base = DvrMatrix::zero(ctx, n);
        for (i, &ei) in e.iter().enumerate() {
            base.set(i, i, ctx.pow_p(ei) as i64);
        }
        let mut digits = vec![0u64; slots.len()];
        loop {
            let mut h = base.clone();
            for (&(i, j), &d) in slots.iter().zip(&digits) {
                h.set(i, j, d as i64);
            }
            out.push(h);
            let mut k = 0;
            loop {
                if k == slots.len() {
                    break;
                }
                digits[k] += 1;
                if digits[k] < ctx.pow_p(e[slots[k].0]) {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == slots.len() {
                break;
            }
        }
    }
    out
}

/// Default bound on `p^(μ·n²)`, the size of the residue table for cosets.
pub const DEFAULT_COSET_TABLE_LIMIT: u64 = 1 << 24;

/// The coset space `GL_n(Z/p^μ) / O^×`, tabulated.
#[derive(Debug, Clone)]
pub struct UnitCosets {
    ctx_mu: DvrContext,
    n: usize,
    /// Coset id per encoded residue matrix, `u32::MAX` if not invertible.
    table: Vec<u32>,
    /// First member of each coset in encoding order.
    representatives: Vec<DvrMatrix>,
    unit_count: usize,
}

impl UnitCosets {
    pub fn new<O: MatrixOrder>(order: &O, p: u64, limit: u64) -> Result<Self> {
        let n = order.size();
        let mu = order.conductor().max(1);
        let ctx_mu = DvrContext::new(p, mu)?;
        let q = ctx_mu.modulus();
        let total = (n * n) as u32;
        let size = q.checked_pow(total).filter(|&s| s <= limit).ok_or_else(|| {
            Error::resource(format!("unit coset table needs {p}^({mu}·{}) residues, over the limit {limit}", n * n))
        })?;
        // membership needs strictly more precision than the conductor
        let ctx_check = DvrContext::new(p, mu + 1)?;
        let mut table = vec![u32::MAX - 1; size as usize];
        let mut units = Vec::new();
        let mut invertible = Vec::new();
        for code in 0..size {
            let m = Self::decode(ctx_mu, n, code);
            if !m.is_unit_matrix() {
                table[code as usize] = u32::MAX;
                continue;
            }
            invertible.push(code);
            if order.contains(&m.with_context(ctx_check)?)? {
                units.push(m);
            }
        }
        let mut representatives = Vec::new();
        for code in invertible {
            if table[code as usize] != u32::MAX - 1 {
                continue;
            }
            let id = representatives.len() as u32;
            let g = Self::decode(ctx_mu, n, code);
            for u in &units {
                table[Self::encode(&g.mul(u)) as usize] = id;
            }
            representatives.push(g);
        }
        Ok(UnitCosets { ctx_mu, n, table, representatives, unit_count: units.len() })
    }

    fn decode(ctx: DvrContext, n: usize, mut code: u64) -> DvrMatrix {
        let q = ctx.modulus();
        let mut entries = vec![0u64; n * n];
        for e in entries.iter_mut() {
            *e = code % q;
            code /= q;
        }
        DvrMatrix::from_raw(ctx, n, entries)
    }

    fn encode(m: &DvrMatrix) -> u64 {
        let q = m.context().modulus();
        m.entries().iter().rev().fold(0, |acc, &e| acc * q + e)
    }

    /// Coset id of an invertible matrix given at any precision `>= μ`.
    pub fn coset_of(&self, g: &DvrMatrix) -> Result<u32> {
        let q = self.ctx_mu.modulus();
        let code = g.entries().iter().rev().fold(0u64, |acc, &e| acc * q + e % q);
        match self.table[code as usize] {
            u32::MAX => Err(Error::invalid("matrix is not invertible")),
            id => Ok(id),
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representative(&self, id: u32) -> &DvrMatrix {
        &self.representatives[id as usize]
    }

    /// Number of units of `O` modulo `p^μ`.
    pub fn unit_count(&self) -> usize {
        self.unit_count
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// Canonical fingerprint of a right-unit orbit `b·O^×`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitKey {
    /// Row-major entries of the column Hermite form.
    pub hnf: Vec<u64>,
    pub coset: u32,
}

impl fmt::Display for OrbitKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}#{}", self.hnf, self.coset)
    }
}

/// A factorization `a = divisor · cofactor` inside the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftDivisor {
    pub divisor: DvrMatrix,
    pub cofactor: DvrMatrix,
}

/// Divisibility arithmetic in a fixed order at a fixed precision.
#[derive(Debug, Clone)]
pub struct OrderArithmetic<O: MatrixOrder> {
    order: O,
    ctx: DvrContext,
    cosets: UnitCosets,
    rep_inverses: Vec<DvrMatrix>,
}

impl<O: MatrixOrder> OrderArithmetic<O> {
    pub fn new(order: O, ctx: DvrContext) -> Result<Self> {
        Self::with_table_limit(order, ctx, DEFAULT_COSET_TABLE_LIMIT)
    }

    pub fn with_table_limit(order: O, ctx: DvrContext, limit: u64) -> Result<Self> {
        let cosets = UnitCosets::new(&order, ctx.p(), limit)?;
        let rep_inverses = cosets
            .representatives
            .iter()
            .map(|r| r.with_context(ctx).map(|r| r.inverse().expect("invertible representative")))
            .collect::<Result<_>>()?;
        Ok(OrderArithmetic { order, ctx, cosets, rep_inverses })
    }

    pub fn order(&self) -> &O {
        &self.order
    }

    pub fn context(&self) -> DvrContext {
        self.ctx
    }

    pub fn cosets(&self) -> &UnitCosets {
        &self.cosets
    }

    pub fn margin(&self) -> u32 {
        precision_margin(self.order.conductor())
    }

    fn check_matrix(&self, a: &DvrMatrix) -> Result<()> {
        if a.context() != self.ctx || a.size() != self.order.size() {
            return Err(Error::invalid(format!(
                "expected a {n}x{n} matrix over {}, got {}x{} over {}",
                self.ctx,
                a.size(),
                a.size(),
                a.context(),
                n = self.order.size()
            )));
        }
        Ok(())
    }

    /// `w(nrd a)`, failing when the precision does not leave the margin
    /// needed to decide divisibility.
    pub fn checked_valuation(&self, a: &DvrMatrix) -> Result<u32> {
        self.check_matrix(a)?;
        let v = a.det_valuation();
        if v.at_precision || v.value + self.margin() > self.ctx.precision() {
            return Err(Error::precision(format!(
                "w(nrd a) = {}{} needs precision at least w + {}, have {}",
                v.value,
                if v.at_precision { "+" } else { "" },
                self.margin(),
                self.ctx.precision()
            )));
        }
        Ok(v.value)
    }

    pub fn contains(&self, a: &DvrMatrix) -> Result<bool> {
        self.check_matrix(a)?;
        self.order.contains(a)
    }

    /// Units of `O` are the members with unit determinant.
    pub fn is_unit(&self, a: &DvrMatrix) -> bool {
        a.is_unit_matrix()
    }

    pub fn orbit_key(&self, b: &DvrMatrix) -> Result<OrbitKey> {
        self.checked_valuation(b)?;
        let h = column_hnf(b)?;
        let g = hnf_solve(&h, b).ok_or_else(|| Error::precision("Hermite form does not divide the matrix"))?;
        Ok(OrbitKey { hnf: h.entries().to_vec(), coset: self.cosets.coset_of(&g)? })
    }

    /// The canonical member `H·rep` of the orbit `b·O^×`.
    pub fn canonical(&self, b: &DvrMatrix) -> Result<DvrMatrix> {
        let key = self.orbit_key(b)?;
        let h = DvrMatrix::from_raw(self.ctx, b.size(), key.hnf);
        Ok(h.mul(&self.cosets.representative(key.coset).with_context(self.ctx)?))
    }

    /// True iff `b' ∈ b·O^×`.
    pub fn equal_up_to_right_unit(&self, b: &DvrMatrix, b2: &DvrMatrix) -> Result<bool> {
        Ok(self.orbit_key(b)? == self.orbit_key(b2)?)
    }

    /// Every left divisor of `a` in `O`, one per right-unit orbit, paired
    /// with its cofactor. Includes the unit orbit and the orbit of `a`.
    ///
    /// `cap` bounds the number of (Hermite form, coset) candidates examined.
    pub fn left_divisors(&self, a: &DvrMatrix, cap: usize) -> Result<Vec<LeftDivisor>> {
        let v = self.checked_valuation(a)?;
        if !self.contains(a)? {
            return Err(Error::invalid("matrix is not in the order"));
        }
        let mut out = Vec::new();
        let mut examined = 0usize;
        for vb in 0..=v {
            let hnfs = enumerate_hnfs(self.ctx, self.order.size(), vb);
            for h in &hnfs {
                let Some(x) = hnf_solve(h, a) else { continue };
                for id in 0..self.cosets.len() {
                    examined += 1;
                    if examined > cap {
                        return Err(Error::resource(format!("left-divisor search exceeded the cap of {cap} candidates")));
                    }
                    let rep = self.cosets.representative(id as u32).with_context(self.ctx)?;
                    let b = h.mul(&rep);
                    if !self.order.contains(&b)? {
                        continue;
                    }
                    let c = self.rep_inverses[id].mul(&x);
                    if self.order.contains(&c)? {
                        out.push(LeftDivisor { divisor: b, cofactor: c });
                    }
                }
            }
        }
        out.sort_by(|x, y| {
            let key = |d: &LeftDivisor| (d.divisor.det_valuation().value, d.divisor.entries().to_vec());
            key(x).cmp(&key(y))
        });
        Ok(out)
    }
}

/// Left divisors of `a` in `order`, one per right-unit orbit.
pub fn left_divisors<O: MatrixOrder>(a: &DvrMatrix, order: O, cap: usize) -> Result<Vec<LeftDivisor>> {
    OrderArithmetic::new(order, a.context())?.left_divisors(a, cap)
}

/// Reference enumeration: scan every residue `b` modulo `p^(w(nrd a) + margin)`,
/// keep members `b` with `b^{-1}a` in the order, and deduplicate by mutual
/// divisibility. Residues agreeing modulo `p^(w(b)+μ)` lie in one orbit and
/// are tested only once.
///
/// `cap` bounds the number of residues scanned.
pub fn left_divisors_exhaustive<O: MatrixOrder>(a: &DvrMatrix, order: O, cap: u64) -> Result<Vec<LeftDivisor>> {
    let ctx = a.context();
    let n = order.size();
    if a.size() != n {
        return Err(Error::invalid("matrix size does not match the order"));
    }
    let v = a.det_valuation();
    let margin = precision_margin(order.conductor());
    if v.at_precision || v.value + margin > ctx.precision() {
        return Err(Error::precision("insufficient precision for divisor search"));
    }
    let v = v.value;
    let q = ctx.pow_p(v + margin);
    let total = q
        .checked_pow((n * n) as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::resource(format!("exhaustive search over {q}^{} residues exceeds the cap {cap}", n * n)))?;
    // representatives grouped by determinant valuation
    let mut reps: BTreeMap<u32, Vec<LeftDivisor>> = BTreeMap::new();
    let mu = order.conductor().max(1);
    let mut seen_residues = HashSet::new();
    let mut entries = vec![0u64; n * n];
    for mut code in 0..total {
        for e in entries.iter_mut() {
            *e = code % q;
            code /= q;
        }
        let b = DvrMatrix::from_raw(ctx, n, entries.clone());
        if !order.contains(&b)? {
            continue;
        }
        let vb = b.det_valuation();
        if vb.at_precision || vb.value > v {
            continue;
        }
        // b + p^(w(b)+μ)·X = b·(1 + b^{-1}p^(w(b)+μ)X) with the bracket a unit of O
        let fold = ctx.pow_p((vb.value + mu).min(ctx.precision()));
        if !seen_residues.insert((vb.value, b.entries().iter().map(|&x| x % fold).collect::<Vec<_>>())) {
            continue;
        }
        let Some(c) = b.left_quotient(a)? else { continue };
        if !order.contains(&c)? {
            continue;
        }
        let bucket = reps.entry(vb.value).or_default();
        let mut seen = false;
        for r in bucket.iter() {
            if let Some(u) = r.divisor.left_quotient(&b)? {
                if order.contains(&u)? {
                    seen = true;
                    break;
                }
            }
        }
        if !seen {
            bucket.push(LeftDivisor { divisor: b, cofactor: c });
        }
    }
    Ok(reps.into_values().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper-triangular-mod-p^t order `O((1,1), [[0,t],[0,0]])`, written out
    /// directly so these tests do not depend on the tiled module.
    struct UpperOrder(u32);

    impl MatrixOrder for UpperOrder {
        fn size(&self) -> usize {
            2
        }
        fn conductor(&self) -> u32 {
            self.0
        }
        fn contains(&self, m: &DvrMatrix) -> Result<bool> {
            Ok(m.entry_valuation(0, 1) >= self.0)
        }
    }

    fn ctx(p: u64, n: u32) -> DvrContext {
        DvrContext::new(p, n).unwrap()
    }

    fn mat(c: DvrContext, rows: &[&[i64]]) -> DvrMatrix {
        DvrMatrix::new(c, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hnf_is_canonical_and_divides() {
        let c = ctx(3, 5);
        let b = mat(c, &[&[3, 1], &[9, 6]]);
        let h = column_hnf(&b).unwrap();
        let g = hnf_solve(&h, &b).unwrap();
        assert!(g.is_unit_matrix());
        assert_eq!(h.mul(&g), b);
        let u = mat(c, &[&[2, 1], &[1, 1]]);
        assert_eq!(column_hnf(&b.mul(&u)).unwrap(), h);
        assert_eq!(h.get(0, 1), 0);
    }

    #[test]
    fn hnf_count_matches_lattice_count() {
        // sublattices of index p^k in Z_p^2 number 1 + p + ... + p^k
        let c = ctx(2, 6);
        for k in 0..4 {
            assert_eq!(enumerate_hnfs(c, 2, k).len() as u64, (0..=k).map(|i| 2u64.pow(i)).sum::<u64>());
        }
        let c3 = ctx(3, 4);
        assert_eq!(enumerate_hnfs(c3, 2, 1).len(), 4);
    }

    #[test]
    fn coset_counts() {
        let full = UnitCosets::new(&FullMatrixRing { size: 2 }, 2, 1 << 20).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full.unit_count(), 6);
        let t1 = UnitCosets::new(&UpperOrder(1), 2, 1 << 20).unwrap();
        // GL_2(F_2) / Borel
        assert_eq!(t1.len(), 3);
        let t2 = UnitCosets::new(&UpperOrder(2), 2, 1 << 20).unwrap();
        assert_eq!(t2.len(), 96 / 16);
        assert!(matches!(UnitCosets::new(&UpperOrder(3), 2, 1 << 10), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn unit_has_only_the_unit_orbit() {
        let c = ctx(2, 4);
        for order in [UpperOrder(1), UpperOrder(2)] {
            let divs = left_divisors(&DvrMatrix::identity(c, 2), &order, 1000).unwrap();
            assert_eq!(divs.len(), 1);
            assert!(divs[0].divisor.is_unit_matrix());
        }
        let u = mat(c, &[&[1, 2], &[1, 1]]);
        assert_eq!(left_divisors(&u, FullMatrixRing { size: 2 }, 1000).unwrap().len(), 1);
    }

    #[test]
    fn diag_p_one_in_full_ring() {
        let c = ctx(2, 3);
        let a = DvrMatrix::diagonal(c, &[2, 1]);
        let divs = left_divisors(&a, FullMatrixRing { size: 2 }, 1000).unwrap();
        let oracle = left_divisors_exhaustive(&a, FullMatrixRing { size: 2 }, 1 << 20).unwrap();
        assert_eq!(divs.len(), 2);
        assert_eq!(oracle.len(), 2);
    }

    #[test]
    fn precision_is_checked() {
        let c = ctx(2, 3);
        let a = DvrMatrix::diagonal(c, &[4, 1]);
        assert!(matches!(left_divisors(&a, FullMatrixRing { size: 2 }, 1000), Err(Error::Precision(_))));
    }

    fn assert_same_orbits<O: MatrixOrder + Copy>(a: &DvrMatrix, order: O) {
        let fast = left_divisors(a, order, 1 << 20).unwrap();
        let slow = left_divisors_exhaustive(a, order, 1 << 22).unwrap();
        assert_eq!(fast.len(), slow.len(), "orbit counts differ for {a}");
        for d in &fast {
            assert_eq!(d.divisor.mul(&d.cofactor), *a);
            assert!(order.contains(&d.divisor).unwrap() && order.contains(&d.cofactor).unwrap());
            let matches = slow
                .iter()
                .filter(|s| {
                    s.divisor.det_valuation() == d.divisor.det_valuation()
                        && d.divisor.left_quotient(&s.divisor).unwrap().is_some_and(|u| order.contains(&u).unwrap())
                })
                .count();
            assert_eq!(matches, 1, "{} not matched exactly once", d.divisor);
        }
    }

    impl Clone for UpperOrder {
        fn clone(&self) -> Self {
            *self
        }
    }
    impl Copy for UpperOrder {}

    #[test]
    fn fast_and_exhaustive_agree() {
        let c = ctx(2, 4);
        for a in [
            DvrMatrix::diagonal(c, &[2, 1]),
            DvrMatrix::diagonal(c, &[2, 2]),
            mat(c, &[&[3, 4], &[1, 2]]),
            mat(c, &[&[2, 0], &[1, 2]]),
        ] {
            assert_same_orbits(&a, FullMatrixRing { size: 2 });
            assert_same_orbits(&a, UpperOrder(1));
            if UpperOrder(2).contains(&a).unwrap() {
                assert_same_orbits(&a, UpperOrder(2));
            }
        }
        let c3 = ctx(3, 3);
        assert_same_orbits(&DvrMatrix::diagonal(c3, &[3, 1]), FullMatrixRing { size: 2 });
        assert_same_orbits(&DvrMatrix::diagonal(c3, &[3, 1]), UpperOrder(1));
    }

    #[test]
    fn orbit_key_is_right_unit_invariant() {
        let c = ctx(2, 6);
        let arith = OrderArithmetic::new(UpperOrder(2), c).unwrap();
        let a = mat(c, &[&[3, 4], &[1, 2]]);
        let u = mat(c, &[&[1, 0], &[3, 3]]);
        assert!(arith.contains(&u).unwrap());
        assert_eq!(arith.orbit_key(&a).unwrap(), arith.orbit_key(&a.mul(&u)).unwrap());
        let canon = arith.canonical(&a).unwrap();
        assert!(arith.equal_up_to_right_unit(&a, &canon).unwrap());
        let not_unit = mat(c, &[&[1, 1], &[0, 1]]);
        assert_ne!(arith.orbit_key(&a).unwrap(), arith.orbit_key(&a.mul(&not_unit)).unwrap());
        let divs = arith.left_divisors(&a, 1000).unwrap();
        // an atom: the unit orbit and its own orbit
        assert_eq!(divs.len(), 2);
    }
}
