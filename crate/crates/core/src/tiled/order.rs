//! Tiled orders as concrete rings of matrices over `Z_p / p^N`.

use std::fmt;

use super::shape::{ScalarConjugation, TiledShape};
use crate::error::{Error, Result};
use crate::padic::{DvrContext, DvrMatrix, MatrixOrder};

/// `O(ñ, M) = ⊕ M_{n_i × n_j}(p^{m_ij} Z_p)` for a non-negative shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiledOrder {
    shape: TiledShape,
    /// Block of each scalar index.
    blocks: Vec<usize>,
}

impl TiledOrder {
    pub fn new(shape: TiledShape) -> Result<Self> {
        if !shape.is_nonnegative() {
            return Err(Error::invalid(
                "matrix arithmetic needs a non-negative exponent matrix; normalize the shape first",
            ));
        }
        let blocks = shape.block_of_index();
        Ok(TiledOrder { shape, blocks })
    }

    pub fn shape(&self) -> &TiledShape {
        &self.shape
    }

    /// Exponent required of scalar entry `(a, b)`.
    pub fn entry_exponent(&self, a: usize, b: usize) -> i64 {
        self.shape.m(self.blocks[a], self.blocks[b])
    }

    fn check(&self, a: &DvrMatrix) -> Result<()> {
        if a.size() != self.shape.size() {
            return Err(Error::invalid(format!(
                "matrix has size {} but the order lives in size {}",
                a.size(),
                self.shape.size()
            )));
        }
        let need = self.shape.max_exponent();
        if i64::from(a.context().precision()) <= need {
            return Err(Error::precision(format!(
                "precision {} must exceed the largest exponent {need}",
                a.context().precision()
            )));
        }
        Ok(())
    }

    /// Membership: every entry of block `(i, j)` has valuation `>= m_ij`.
    pub fn contains(&self, a: &DvrMatrix) -> Result<bool> {
        self.check(a)?;
        let n = a.size();
        Ok((0..n).all(|x| (0..n).all(|y| i64::from(a.entry_valuation(x, y)) >= self.entry_exponent(x, y))))
    }

    /// The square diagonal block `k`.
    pub fn diagonal_block(&self, a: &DvrMatrix, k: usize) -> DvrMatrix {
        let offsets = self.shape.offsets();
        a.principal_block(offsets[k], self.shape.partition()[k])
    }

    /// Unit criterion for standard forms: every diagonal block is invertible
    /// over `Z_p`.
    pub fn is_unit_in_order(&self, a: &DvrMatrix) -> Result<bool> {
        self.shape.require_standard_form()?;
        if !self.contains(a)? {
            return Err(Error::invalid("matrix is not in the order"));
        }
        Ok((0..self.shape.block_count()).all(|k| self.diagonal_block(a, k).is_unit_matrix()))
    }

    /// `τ`: extends `a ∈ O^{(l)}` by the identity on blocks `l+1, …, r`.
    pub fn extend_tau(&self, l: usize, a: &DvrMatrix) -> Result<DvrMatrix> {
        let sub = TiledOrder::new(self.shape.leading(l)?)?;
        if !sub.contains(a)? {
            return Err(Error::invalid(format!("matrix is not in the leading order O^({l})")));
        }
        let rest = self.shape.size() - a.size();
        Ok(if rest == 0 { a.clone() } else { a.direct_sum(&DvrMatrix::identity(a.context(), rest)) })
    }

    /// True iff `a` is block diagonal for the partition.
    pub fn is_block_diagonal(&self, a: &DvrMatrix) -> bool {
        let n = a.size();
        n == self.shape.size()
            && (0..n).all(|x| (0..n).all(|y| self.blocks[x] == self.blocks[y] || a.get(x, y) == 0))
    }

    /// Block test for right divisibility by a block-diagonal `b`: `b` divides
    /// `c` on the right iff every `c_{kl}` is right-divisible by `b_{ll}`.
    pub fn block_right_divides(&self, b: &DvrMatrix, c: &DvrMatrix) -> Result<bool> {
        if !self.is_block_diagonal(b) {
            return Err(Error::invalid("divisor is not block diagonal for the partition"));
        }
        if c.size() != b.size() || c.context() != b.context() {
            return Err(Error::invalid("matrices differ in size or ring"));
        }
        let ctx = b.context();
        let offsets = self.shape.offsets();
        let parts = self.shape.partition();
        for l in 0..parts.len() {
            let bl = self.diagonal_block(b, l);
            let v = bl.det_valuation();
            if v.at_precision {
                return Err(Error::precision(format!("diagonal block {} is singular at working precision", l + 1)));
            }
            let adj = bl.adjugate();
            let pv = ctx.pow_p(v.value);
            for x in 0..b.size() {
                for y in 0..parts[l] {
                    // (c_{·l} adj(b_ll))[x][y]
                    let acc = (0..parts[l]).fold(0u128, |acc, z| {
                        (acc + c.get(x, offsets[l] + z) as u128 * adj.get(z, y) as u128) % ctx.modulus() as u128
                    }) as u64;
                    if acc % pv != 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Applies a monomial conjugation to a member, returning `None` when the
    /// image is not integral.
    pub fn conjugate(conj: &ScalarConjugation, a: &DvrMatrix) -> Result<Option<DvrMatrix>> {
        let n = a.size();
        if conj.size() != n {
            return Err(Error::invalid("conjugation and matrix sizes differ"));
        }
        let ctx: DvrContext = a.context();
        let mut out = DvrMatrix::zero(ctx, n);
        for x in 0..n {
            for y in 0..n {
                let shift = conj.exponents[x] - conj.exponents[y];
                let v = a.get(x, y);
                let image = if shift >= 0 {
                    if shift >= i64::from(ctx.precision()) {
                        0
                    } else {
                        (v as u128 * ctx.pow_p(shift as u32) as u128 % ctx.modulus() as u128) as u64
                    }
                } else {
                    let k = (-shift) as u32;
                    if v == 0 {
                        0
                    } else if k >= ctx.precision() || v % ctx.pow_p(k) != 0 {
                        return Ok(None);
                    } else {
                        v / ctx.pow_p(k)
                    }
                };
                out.set(conj.permutation[x], conj.permutation[y], image as i64);
            }
        }
        Ok(Some(out))
    }
}

impl MatrixOrder for TiledOrder {
    fn size(&self) -> usize {
        self.shape.size()
    }

    fn conductor(&self) -> u32 {
        self.shape.max_exponent() as u32
    }

    fn contains(&self, m: &DvrMatrix) -> Result<bool> {
        TiledOrder::contains(self, m)
    }
}

impl fmt::Display for TiledOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(partition: &[usize], m: &[&[i64]]) -> TiledOrder {
        TiledOrder::new(TiledShape::new(partition.to_vec(), m.iter().map(|r| r.to_vec()).collect()).unwrap()).unwrap()
    }

    fn mat(c: DvrContext, rows: &[&[i64]]) -> DvrMatrix {
        DvrMatrix::new(c, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let c = DvrContext::new(2, 4).unwrap();
        let o = order(&[1, 1], &[&[0, 1], &[0, 0]]);
        assert!(o.contains(&DvrMatrix::identity(c, 2)).unwrap());
        assert!(o.contains(&mat(c, &[&[1, 2], &[1, 1]])).unwrap());
        assert!(!o.contains(&mat(c, &[&[1, 1], &[1, 1]])).unwrap());
        assert!(o.contains(&DvrMatrix::scalar(c, 2, 2)).unwrap());
        let c1 = DvrContext::new(2, 1).unwrap();
        assert!(matches!(o.contains(&DvrMatrix::identity(c1, 2)), Err(Error::Precision(_))));
    }

    #[test]
    fn unit_examples() {
        let c = DvrContext::new(2, 4).unwrap();
        let o = order(&[1, 1], &[&[0, 1], &[0, 0]]);
        assert!(o.is_unit_in_order(&mat(c, &[&[1, 2], &[1, 1]])).unwrap());
        assert!(!o.is_unit_in_order(&DvrMatrix::diagonal(c, &[2, 1])).unwrap());
        assert!(o.is_unit_in_order(&DvrMatrix::identity(c, 2)).unwrap());
        assert!(o.is_unit_in_order(&mat(c, &[&[1, 1], &[0, 1]])).is_err());
    }

    #[test]
    fn tau_examples() {
        let c = DvrContext::new(2, 4).unwrap();
        let o = order(&[1, 1], &[&[0, 1], &[0, 0]]);
        assert_eq!(o.extend_tau(1, &DvrMatrix::identity(c, 1)).unwrap(), DvrMatrix::identity(c, 2));
        let a = DvrMatrix::diagonal(c, &[2]);
        let ext = o.extend_tau(1, &a).unwrap();
        assert_eq!(ext, DvrMatrix::diagonal(c, &[2, 1]));
        assert_eq!(ext.determinant(), a.determinant());
        assert!(o.extend_tau(3, &a).is_err());
    }

    #[test]
    fn block_divisibility_examples() {
        let c = DvrContext::new(2, 5).unwrap();
        let o = order(&[1, 1], &[&[0, 1], &[0, 0]]);
        let any = mat(c, &[&[3, 5], &[7, 1]]);
        assert!(o.block_right_divides(&DvrMatrix::identity(c, 2), &any).unwrap());
        assert!(o.block_right_divides(&DvrMatrix::scalar(c, 2, 2), &mat(c, &[&[2, 4], &[6, 2]])).unwrap());
        let b = DvrMatrix::diagonal(c, &[2, 1]);
        // entry (2,1) = 1 is not divisible by p
        assert!(!o.block_right_divides(&b, &mat(c, &[&[2, 0], &[1, 1]])).unwrap());
        assert!(o.block_right_divides(&b, &mat(c, &[&[2, 0], &[2, 1]])).unwrap());
        assert!(o.block_right_divides(&mat(c, &[&[1, 1], &[0, 1]]), &any).is_err());
    }
}
