use std::fmt;

use super::{DvrContext, DvrElement, Valuation};
use crate::error::{Error, Result};

/// A square matrix over `Z_p / p^N`, entries stored row-major as residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DvrMatrix {
    ctx: DvrContext,
    size: usize,
    entries: Vec<u64>,
}

impl DvrMatrix {
    /// Builds a matrix from signed integer rows, reducing every entry.
    pub fn new(ctx: DvrContext, rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::invalid("matrix is not square"));
        }
        Ok(DvrMatrix {
            ctx,
            size,
            entries: rows.iter().flatten().map(|&x| ctx.reduce(x as i128)).collect(),
        })
    }

    /// Builds a matrix from residues, which must already lie in `[0, p^N)`.
    pub fn from_residues(ctx: DvrContext, size: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::invalid(format!("expected {} entries, got {}", size * size, entries.len())));
        }
        if let Some(pos) = entries.iter().position(|&x| x >= ctx.modulus()) {
            return Err(Error::invalid(format!(
                "entry ({}, {}) = {} is outside [0, {})",
                pos / size,
                pos % size,
                entries[pos],
                ctx.modulus()
            )));
        }
        Ok(DvrMatrix { ctx, size, entries })
    }

    pub(crate) fn from_raw(ctx: DvrContext, size: usize, entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&x| x < ctx.modulus()));
        DvrMatrix { ctx, size, entries }
    }

    pub fn identity(ctx: DvrContext, size: usize) -> Self {
        Self::scalar(ctx, size, 1)
    }

    pub fn zero(ctx: DvrContext, size: usize) -> Self {
        DvrMatrix { ctx, size, entries: vec![0; size * size] }
    }

    pub fn scalar(ctx: DvrContext, size: usize, x: i64) -> Self {
        let mut m = Self::zero(ctx, size);
        let r = ctx.reduce(x as i128);
        for i in 0..size {
            m.entries[i * size + i] = r;
        }
        m
    }

    pub fn diagonal(ctx: DvrContext, diag: &[i64]) -> Self {
        let size = diag.len();
        let mut m = Self::zero(ctx, size);
        for (i, &x) in diag.iter().enumerate() {
            m.entries[i * size + i] = ctx.reduce(x as i128);
        }
        m
    }

    pub fn context(&self) -> DvrContext {
        self.ctx
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.entries[i * self.size + j] = self.ctx.reduce(x as i128);
    }

    pub fn element(&self, i: usize, j: usize) -> DvrElement {
        DvrElement::from_residue(self.ctx, self.get(i, j)).expect("reduced entry")
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.size).map(<[u64]>::to_vec).collect()
    }

    /// Valuation of entry `(i, j)`, `N` if the entry is zero.
    pub fn entry_valuation(&self, i: usize, j: usize) -> u32 {
        self.ctx.val(self.get(i, j))
    }

    /// Minimum entry valuation (`N` for the zero matrix).
    pub fn valuation(&self) -> u32 {
        self.entries.iter().map(|&x| self.ctx.val(x)).min().unwrap_or(self.ctx.precision())
    }

    /// Reinterprets the integer representatives at another precision.
    pub fn with_context(&self, ctx: DvrContext) -> Result<Self> {
        if ctx.p() != self.ctx.p() {
            return Err(Error::invalid("cannot change the prime of a matrix"));
        }
        Ok(DvrMatrix {
            ctx,
            size: self.size,
            entries: self.entries.iter().map(|&x| x % ctx.modulus()).collect(),
        })
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "matrices over different rings");
        assert_eq!(self.size, other.size, "matrices of different sizes");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let n = self.size;
        let m = self.ctx.modulus() as u128;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: u128 = 0;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u128 * other.entries[k * n + j] as u128;
                    if acc >= 1 << 125 {
                        acc %= m;
                    }
                }
                out[i * n + j] = (acc % m) as u64;
            }
        }
        DvrMatrix { ctx: self.ctx, size: n, entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.ctx.add(a, b)).collect();
        DvrMatrix { ctx: self.ctx, size: self.size, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.ctx.sub(a, b)).collect();
        DvrMatrix { ctx: self.ctx, size: self.size, entries }
    }

    pub fn scale(&self, x: i64) -> Self {
        let r = self.ctx.reduce(x as i128);
        let entries = self.entries.iter().map(|&a| self.ctx.mul(a, r)).collect();
        DvrMatrix { ctx: self.ctx, size: self.size, entries }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.ctx, self.size), |acc, _| acc.mul(self))
    }

    /// Determinant modulo `p^N`.
    ///
    /// Gaussian elimination with a minimal-valuation pivot in each column:
    /// every row operation is unimodular on the integer representative, so the
    /// result is exact modulo `p^N`.
    pub fn determinant(&self) -> u64 {
        let ctx = self.ctx;
        let n = self.size;
        let mut w = self.entries.clone();
        let mut det: u64 = 1;
        for col in 0..n {
            let pivot = (col..n).min_by_key(|&r| ctx.val(w[r * n + col])).expect("nonempty range");
            let v = ctx.val(w[pivot * n + col]);
            if v >= ctx.precision() {
                return 0;
            }
            if pivot != col {
                for j in 0..n {
                    w.swap(pivot * n + j, col * n + j);
                }
                det = ctx.neg(det);
            }
            let pv = w[col * n + col];
            let pk = ctx.pow_p(v);
            let unit_inv = ctx.inv(pv / pk).expect("unit part");
            for r in col + 1..n {
                let x = w[r * n + col];
                if x == 0 {
                    continue;
                }
                // x = p^v·y exactly as integers since val(x) >= v
                let q = ctx.mul(x / pk, unit_inv);
                for j in col..n {
                    let t = ctx.mul(q, w[col * n + j]);
                    w[r * n + j] = ctx.sub(w[r * n + j], t);
                }
            }
            det = ctx.mul(det, pv);
        }
        det
    }

    /// The reduced norm, which in the split case is the determinant.
    pub fn reduced_norm(&self) -> DvrElement {
        DvrElement::from_residue(self.ctx, self.determinant()).expect("reduced")
    }

    pub fn det_valuation(&self) -> Valuation {
        self.reduced_norm().valuation()
    }

    /// True iff the determinant is a unit.
    pub fn is_unit_matrix(&self) -> bool {
        self.determinant() % self.ctx.p() != 0
    }

    /// Two-sided inverse modulo `p^N`, when the determinant is a unit.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit_matrix() {
            return None;
        }
        let ctx = self.ctx;
        let n = self.size;
        let mut w = self.entries.clone();
        let mut inv = Self::identity(ctx, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| w[r * n + col] % ctx.p() != 0)?;
            for j in 0..n {
                w.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
            let s = ctx.inv(w[col * n + col])?;
            for j in 0..n {
                w[col * n + j] = ctx.mul(w[col * n + j], s);
                inv[col * n + j] = ctx.mul(inv[col * n + j], s);
            }
            for r in 0..n {
                if r == col || w[r * n + col] == 0 {
                    continue;
                }
                let q = w[r * n + col];
                for j in 0..n {
                    w[r * n + j] = ctx.sub(w[r * n + j], ctx.mul(q, w[col * n + j]));
                    inv[r * n + j] = ctx.sub(inv[r * n + j], ctx.mul(q, inv[col * n + j]));
                }
            }
        }
        Some(DvrMatrix { ctx, size: n, entries: inv })
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.size;
        let entries = (0..n)
            .filter(|&i| i != skip_row)
            .flat_map(|i| (0..n).filter(move |&j| j != skip_col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        DvrMatrix { ctx: self.ctx, size: n - 1, entries }
    }

    /// The adjugate, built from cofactors; `A·adj(A) = det(A)·I`.
    pub fn adjugate(&self) -> Self {
        let n = self.size;
        if n == 1 {
            return Self::identity(self.ctx, 1);
        }
        let mut out = Self::zero(self.ctx, n);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(j, i).determinant();
                out.entries[i * n + j] = if (i + j) % 2 == 0 { d } else { self.ctx.neg(d) };
            }
        }
        out
    }

    /// Divides every entry by `p^k`, if all entries are divisible.
    ///
    /// The quotient is only determined modulo `p^(N-k)`; the integer quotient
    /// of each representative is returned.
    pub fn exact_div_p_pow(&self, k: u32) -> Option<Self> {
        let pk = self.ctx.pow_p(k.min(self.ctx.precision()));
        if k > self.ctx.precision() {
            return self.entries.iter().all(|&x| x == 0).then(|| self.clone());
        }
        if self.entries.iter().any(|&x| x % pk != 0) {
            return None;
        }
        Some(DvrMatrix {
            ctx: self.ctx,
            size: self.size,
            entries: self.entries.iter().map(|&x| x / pk).collect(),
        })
    }

    /// `self^{-1} · other` when it is integral, computed as
    /// `adj(self)·other / det(self)`. The quotient is known modulo
    /// `p^(N - w(det self))`.
    pub fn left_quotient(&self, other: &Self) -> Result<Option<Self>> {
        let v = self.det_valuation();
        if v.at_precision {
            return Err(Error::precision("divisor is singular at working precision"));
        }
        let det = self.determinant();
        let unit = det / self.ctx.pow_p(v.value);
        let unit_inv = self.ctx.inv(unit).expect("unit part");
        let num = self.adjugate().mul(other);
        Ok(num.exact_div_p_pow(v.value).map(|q| q.scale(unit_inv as i64)))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx);
        let n = self.size + other.size;
        let mut out = Self::zero(self.ctx, n);
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                out.entries[(i + self.size) * n + j + self.size] = other.get(i, j);
            }
        }
        out
    }

    /// The square sub-matrix on the index range `start..start+len`.
    pub fn principal_block(&self, start: usize, len: usize) -> Self {
        let entries = (start..start + len)
            .flat_map(|i| (start..start + len).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        DvrMatrix { ctx: self.ctx, size: len, entries }
    }

    /// Signed integer view with entries in `(-p^N/2, p^N/2]`, for display.
    pub fn centered_rows(&self) -> Vec<Vec<i64>> {
        let m = self.ctx.modulus();
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| if x > m / 2 { x as i64 - m as i64 } else { x as i64 }).collect())
            .collect()
    }
}

impl fmt::Display for DvrMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "] mod {}^{}", self.ctx.p(), self.ctx.precision())
    }
}

/// Recovers the unit `γ` with `C = γ·B` from `B ≡ C (mod p^t)` when
/// `t > w(det B)`.
///
/// `γ = C·adj(B)/det(B)` is computed at precision `N + w(det B)` from the
/// centered representatives of `B` and `C` and returned at precision `N`, so
/// `γ·B ≡ C (mod p^N)` holds exactly.
pub fn unit_recovery(b: &DvrMatrix, c: &DvrMatrix, t: u32) -> Result<DvrMatrix> {
    if b.ctx != c.ctx || b.size != c.size {
        return Err(Error::invalid("B and C must be matrices of the same size over the same ring"));
    }
    let ctx = b.ctx;
    let v = b.det_valuation();
    if v.at_precision {
        return Err(Error::precision("det B vanishes at working precision"));
    }
    let v = v.value;
    if t <= v {
        return Err(Error::invalid(format!("hypothesis t > w(nrd B) violated: t = {t}, w(nrd B) = {v}")));
    }
    if ctx.precision() <= t + v {
        return Err(Error::precision(format!(
            "precision {} must exceed t + w(nrd B) = {}",
            ctx.precision(),
            t + v
        )));
    }
    if b.sub(c).valuation() < t {
        return Err(Error::invalid(format!("B - C is not divisible by p^{t}")));
    }
    let hi = ctx.with_precision(ctx.precision() + v)?;
    // lift through centered representatives so small negative entries stay small
    let (b_hi, c_hi) = (DvrMatrix::new(hi, &b.centered_rows())?, DvrMatrix::new(hi, &c.centered_rows())?);
    let gamma_hi = b_hi
        .left_quotient_right(&c_hi)?
        .ok_or_else(|| Error::invalid("C·B^{-1} is not integral"))?;
    let gamma = gamma_hi.with_context(ctx)?;
    debug_assert_eq!(gamma.mul(b), *c);
    if !gamma.is_unit_matrix() {
        return Err(Error::invalid("recovered γ is not a unit"));
    }
    Ok(gamma)
}

impl DvrMatrix {
    /// `other · self^{-1}` when integral, via `other·adj(self)/det(self)`.
    pub fn left_quotient_right(&self, other: &Self) -> Result<Option<Self>> {
        let v = self.det_valuation();
        if v.at_precision {
            return Err(Error::precision("divisor is singular at working precision"));
        }
        let unit = self.determinant() / self.ctx.pow_p(v.value);
        let unit_inv = self.ctx.inv(unit).expect("unit part");
        let num = other.mul(&self.adjugate());
        Ok(num.exact_div_p_pow(v.value).map(|q| q.scale(unit_inv as i64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, n: u32) -> DvrContext {
        DvrContext::new(p, n).unwrap()
    }

    fn mat(c: DvrContext, rows: &[&[i64]]) -> DvrMatrix {
        DvrMatrix::new(c, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Oracle: Leibniz expansion over all permutations.
    fn leibniz(m: &DvrMatrix) -> u64 {
        let n = m.size();
        let c = m.context();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total: i128 = 0;
        fn heap(k: usize, perm: &mut Vec<usize>, sign: &mut i128, acc: &mut Vec<(Vec<usize>, i128)>) {
            if k == 1 {
                acc.push((perm.clone(), *sign));
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, sign, acc);
                if i + 1 < k {
                    let j = if k % 2 == 0 { i } else { 0 };
                    perm.swap(j, k - 1);
                    *sign = -*sign;
                }
            }
        }
        let mut all = Vec::new();
        let mut sign = 1;
        heap(n, &mut perm, &mut sign, &mut all);
        for (p, s) in all {
            let prod = (0..n).fold(1i128, |acc, i| (acc * m.get(i, p[i]) as i128) % c.modulus() as i128);
            total += s * prod;
        }
        c.reduce(total)
    }

    #[test]
    fn reduced_norm_examples() {
        let c = ctx(2, 4);
        assert_eq!(DvrMatrix::identity(c, 3).determinant(), 1);
        assert_eq!(DvrMatrix::diagonal(c, &[2, 1]).determinant(), 2);
        assert_eq!(mat(c, &[&[2, 2], &[1, 3]]).determinant(), 4);
    }

    #[test]
    fn determinant_matches_leibniz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for &(p, n) in &[(2u64, 5u32), (3, 3), (5, 2)] {
            let c = ctx(p, n);
            for size in 1..=4 {
                for _ in 0..200 {
                    let entries = (0..size * size).map(|_| rng.gen_range(0..c.modulus())).collect();
                    let m = DvrMatrix::from_residues(c, size, entries).unwrap();
                    assert_eq!(m.determinant(), leibniz(&m), "{m}");
                }
            }
        }
    }

    #[test]
    fn unit_matrix_examples() {
        let c = ctx(2, 4);
        assert!(DvrMatrix::identity(c, 2).is_unit_matrix());
        assert!(!DvrMatrix::diagonal(c, &[2, 1]).is_unit_matrix());
        let m = mat(c, &[&[1, 2], &[1, 1]]);
        assert_eq!(m.determinant(), 15);
        assert!(m.is_unit_matrix());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DvrMatrix::identity(c, 2));
        assert_eq!(inv.mul(&m), DvrMatrix::identity(c, 2));
        assert!(DvrMatrix::diagonal(c, &[2, 1]).inverse().is_none());
    }

    #[test]
    fn adjugate_identity() {
        let c = ctx(3, 4);
        let m = mat(c, &[&[3, 1, 0], &[2, 9, 4], &[1, 1, 1]]);
        let adj = m.adjugate();
        assert_eq!(m.mul(&adj), DvrMatrix::scalar(c, 3, m.determinant() as i64));
        assert_eq!(adj.mul(&m), DvrMatrix::scalar(c, 3, m.determinant() as i64));
    }

    #[test]
    fn unit_recovery_identity_case() {
        let c = ctx(2, 5);
        let b = DvrMatrix::identity(c, 2);
        let m = mat(c, &[&[1, 1], &[0, 3]]);
        let cc = b.sub(&m.scale(2));
        let gamma = unit_recovery(&b, &cc, 1).unwrap();
        assert_eq!(gamma, cc);
        assert!(gamma.is_unit_matrix());
    }

    #[test]
    fn unit_recovery_worked_example() {
        let c = ctx(2, 6);
        let b = DvrMatrix::diagonal(c, &[2, 1]);
        let m = mat(c, &[&[0, 1], &[1, 0]]);
        let cc = b.sub(&m.scale(4));
        let gamma = unit_recovery(&b, &cc, 2).unwrap();
        // oracle: C·B^{-1} by hand = [[1, -4], [-2, 1]]
        assert_eq!(gamma, mat(c, &[&[1, -4], &[-2, 1]]));
        assert_eq!(gamma.determinant(), c.reduce(1 - 8));
        assert_eq!(gamma.mul(&b), cc);
    }

    #[test]
    fn unit_recovery_rejects_bad_hypotheses() {
        let c = ctx(2, 6);
        let b = DvrMatrix::diagonal(c, &[2, 1]);
        let cc = b.sub(&DvrMatrix::identity(c, 2).scale(2));
        assert!(matches!(unit_recovery(&b, &cc, 1), Err(Error::InvalidInput(_))));
        // t + w = 5 + 1 >= N
        let cc = b.sub(&DvrMatrix::identity(c, 2).scale(32));
        assert!(matches!(unit_recovery(&b, &cc, 5), Err(Error::Precision(_))));
        // B - C not divisible by p^t
        let cc = b.sub(&DvrMatrix::identity(c, 2).scale(2));
        assert!(matches!(unit_recovery(&b, &cc, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn quotients() {
        let c = ctx(2, 6);
        let b = DvrMatrix::diagonal(c, &[2, 1]);
        let a = mat(c, &[&[2, 4], &[3, 1]]);
        let q = b.left_quotient(&a).unwrap().unwrap();
        assert_eq!(b.mul(&q), a);
        let not = mat(c, &[&[1, 0], &[0, 1]]);
        assert!(b.left_quotient(&not).unwrap().is_none());
        let r = b.left_quotient_right(&mat(c, &[&[2, 1], &[4, 1]])).unwrap().unwrap();
        assert_eq!(r.mul(&b), mat(c, &[&[2, 1], &[4, 1]]));
    }
}
