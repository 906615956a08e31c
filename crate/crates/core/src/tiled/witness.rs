//! The atom families `α_k, α'_k` of a non-hereditary standard form.

use serde::Serialize;

use super::order::TiledOrder;
use super::shape::{ConjugationRecord, TiledShape};
use crate::error::{Error, Result};
use crate::padic::{DvrContext, DvrMatrix};

/// Witness matrices for one `k`, together with the coordinates they live in.
#[derive(Debug, Clone)]
pub struct WitnessAtoms {
    /// The order after moving the offending pair to blocks 1, 2 and
    /// normalizing so that `m_21 = 0` and `m_12 = t`.
    pub order: TiledOrder,
    /// Conjugation from the input shape to `order`.
    pub record: ConjugationRecord,
    /// The offending block pair of the input, 0-based.
    pub pair: (usize, usize),
    pub t: u32,
    pub k: u32,
    pub alpha: DvrMatrix,
    pub alpha_prime: DvrMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSummary {
    pub pair: (usize, usize),
    pub t: u32,
    pub k: u32,
}

/// `(α_k, α'_k)` in `O((n_1, n_2, …), M)` with `m_21 = 0`, `m_12 = t`: the
/// identity except for the 2×2 core on indices `n_1 − 1, n_1`,
/// `[[p^{k−1} + p^{t−1}, p^t], [1, p]]` and
/// `[[p, −p^t], [−1, p^{t−1} + p^{k−1}]]`.
pub fn witness_pair(ctx: DvrContext, n: usize, n1: usize, t: u32, k: u32) -> Result<(DvrMatrix, DvrMatrix)> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if n1 == 0 || n1 >= n {
        return Err(Error::invalid("the first block must be a proper nonempty part"));
    }
    if t < 1 || ctx.precision() < k * t + 2 {
        return Err(Error::precision(format!(
            "precision {} is below k·t + 2 = {}",
            ctx.precision(),
            k * t + 2
        )));
    }
    let p = |e: u32| ctx.pow_p(e) as i64;
    let (x, y) = (n1 - 1, n1);
    let mut alpha = DvrMatrix::identity(ctx, n);
    alpha.set(x, x, p(k - 1) + p(t - 1));
    alpha.set(x, y, p(t));
    alpha.set(y, x, 1);
    alpha.set(y, y, p(1));
    let mut alpha_prime = DvrMatrix::identity(ctx, n);
    alpha_prime.set(x, x, p(1));
    alpha_prime.set(x, y, -p(t));
    alpha_prime.set(y, x, -1);
    alpha_prime.set(y, y, p(t - 1) + p(k - 1));
    Ok((alpha, alpha_prime))
}

/// Where the witness atoms of a shape live: the block pair, the conjugate
/// shape in which that pair leads, and the exponent `t = m_12` there.
#[derive(Debug, Clone)]
pub struct WitnessLayout {
    pub pair: (usize, usize),
    pub shape: TiledShape,
    pub record: ConjugationRecord,
    pub t: u32,
}

/// Locates the first block pair `(i, j)` with `m_ij + m_ji >= 2`, moves it to
/// the front and normalizes so that `m_21 = 0`.
pub fn witness_layout(shape: &TiledShape) -> Result<WitnessLayout> {
    shape.require_standard_form()?;
    let r = shape.block_count();
    let pair = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .find(|&(i, j)| shape.m(i, j) + shape.m(j, i) >= 2)
        .ok_or_else(|| Error::invalid("every pair has m_ij + m_ji = 1: the order is hereditary and has no witness atoms"))?;
    let order: Vec<usize> = [pair.0, pair.1].into_iter().chain((0..r).filter(|&b| b != pair.0 && b != pair.1)).collect();
    let (permuted, rec1) = shape.permute_blocks(&order)?;
    let (normalized, rec2) = permuted.normalize_nonnegative();
    let t = u32::try_from(normalized.m(0, 1)).map_err(|_| Error::invalid("exponent out of range"))?;
    debug_assert_eq!(normalized.m(1, 0), 0);
    Ok(WitnessLayout { pair, shape: normalized, record: rec1.then(&rec2), t })
}

/// Builds `α_k, α'_k` in the conjugate order given by [`witness_layout`].
pub fn witness_atoms(shape: &TiledShape, ctx: DvrContext, k: u32) -> Result<WitnessAtoms> {
    let WitnessLayout { pair, shape: normalized, record, t } = witness_layout(shape)?;
    let n1 = normalized.partition()[0];
    let (alpha, alpha_prime) = witness_pair(ctx, normalized.size(), n1, t, k)?;
    let order = TiledOrder::new(normalized)?;
    if !order.contains(&alpha)? || !order.contains(&alpha_prime)? {
        return Err(Error::invalid("witness matrices fall outside the order"));
    }
    Ok(WitnessAtoms { order, record, pair, t, k, alpha, alpha_prime })
}
