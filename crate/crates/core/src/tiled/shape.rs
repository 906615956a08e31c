//! Exponent-matrix combinatorics of tiled orders `O(ñ, M)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A failed order condition on an exponent matrix. Indices are 0-based;
/// `Display` prints them 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `m_ii != 0`.
    Diagonal { i: usize, value: i64 },
    /// `m_ij + m_jk < m_ik`.
    Triangle { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Diagonal { i, value } => write!(f, "m_{{{0}{0}}} = {value}, expected 0", i + 1),
            Violation::Triangle { i, j, k } => write!(
                f,
                "triple ({}, {}, {}): m_{{{0}{1}}} + m_{{{1}{2}}} < m_{{{0}{2}}}",
                i + 1,
                j + 1,
                k + 1
            ),
        }
    }
}

/// Partition `ñ = (n_1, …, n_r)` and exponent matrix `M = (m_ij)`.
///
/// A constructed shape always satisfies `m_ii = 0` and the triangle
/// inequalities, so it describes an order. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TiledShape {
    partition: Vec<usize>,
    exponents: Vec<Vec<i64>>,
}

/// Every violated order condition of `(partition, exponents)`.
///
/// Only fails (rather than reporting violations) when the data is not even
/// shaped like an exponent matrix for the partition.
pub fn shape_violations(partition: &[usize], exponents: &[Vec<i64>]) -> Result<Vec<Violation>> {
    let r = partition.len();
    if r == 0 {
        return Err(Error::invalid("partition must be nonempty"));
    }
    if let Some(pos) = partition.iter().position(|&n| n == 0) {
        return Err(Error::invalid(format!("partition entry {} is 0; parts must be >= 1", pos + 1)));
    }
    if exponents.len() != r || exponents.iter().any(|row| row.len() != r) {
        return Err(Error::invalid(format!("exponent matrix must be {r}x{r} to match the partition")));
    }
    let mut out = Vec::new();
    for (i, row) in exponents.iter().enumerate() {
        if row[i] != 0 {
            out.push(Violation::Diagonal { i, value: row[i] });
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if exponents[i][j] + exponents[j][k] < exponents[i][k] {
                    out.push(Violation::Triangle { i, j, k });
                }
            }
        }
    }
    Ok(out)
}

/// A monomial change of coordinates `X ↦ P·D·X·D^{-1}·P^{-1}` on `n × n`
/// matrices: `X'[π(a)][π(b)] = p^{e_a − e_b}·X[a][b]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalarConjugation {
    /// `π`, as images of the old scalar indices.
    pub permutation: Vec<usize>,
    /// `e`, indexed by old scalar index.
    pub exponents: Vec<i64>,
}

impl ScalarConjugation {
    pub fn identity(n: usize) -> Self {
        ScalarConjugation { permutation: (0..n).collect(), exponents: vec![0; n] }
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(a, &b)| a == b) && self.exponents.iter().all(|&e| e == 0)
    }

    pub fn size(&self) -> usize {
        self.permutation.len()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &ScalarConjugation) -> ScalarConjugation {
        ScalarConjugation {
            permutation: self.permutation.iter().map(|&a| other.permutation[a]).collect(),
            exponents: self
                .exponents
                .iter()
                .zip(&self.permutation)
                .map(|(&e, &a)| e + other.exponents[a])
                .collect(),
        }
    }

    pub fn inverse(&self) -> ScalarConjugation {
        let n = self.size();
        let mut permutation = vec![0; n];
        let mut exponents = vec![0; n];
        for a in 0..n {
            permutation[self.permutation[a]] = a;
            exponents[self.permutation[a]] = -self.exponents[a];
        }
        ScalarConjugation { permutation, exponents }
    }

    /// Image of an entry-valuation pattern (`None` for a zero entry).
    pub fn apply_valuations(&self, v: &[Vec<Option<i64>>]) -> Vec<Vec<Option<i64>>> {
        let n = self.size();
        let mut out = vec![vec![None; n]; n];
        for a in 0..n {
            for b in 0..n {
                out[self.permutation[a]][self.permutation[b]] =
                    v[a][b].map(|x| x + self.exponents[a] - self.exponents[b]);
            }
        }
        out
    }
}

/// One step of a standard-form reduction. Block indices are 0-based and
/// refer to the shape just before the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum ConjugationStep {
    /// Conjugation by `diag(p^{d_1}·I, …, p^{d_r}·I)`, so `m_ij ↦ m_ij + d_i − d_j`.
    Diagonal { block_exponents: Vec<i64> },
    /// Block reordering: new block `i` is old block `order[i]`.
    Permute { order: Vec<usize> },
    /// Block `source` joins block `target` (requires `m_ts = m_st = 0`).
    Merge { target: usize, source: usize },
}

/// The record of a sequence of conjugations, stepwise and composed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugationRecord {
    pub steps: Vec<ConjugationStep>,
    pub composite: ScalarConjugation,
    /// For each input block, the output block it lands in.
    pub block_map: Vec<usize>,
}

impl ConjugationRecord {
    fn identity(shape: &TiledShape) -> Self {
        ConjugationRecord {
            steps: Vec::new(),
            composite: ScalarConjugation::identity(shape.size()),
            block_map: (0..shape.block_count()).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Record followed by `other`.
    pub fn then(&self, other: &ConjugationRecord) -> ConjugationRecord {
        ConjugationRecord {
            steps: self.steps.iter().chain(&other.steps).cloned().collect(),
            composite: self.composite.then(&other.composite),
            block_map: self.block_map.iter().map(|&b| other.block_map[b]).collect(),
        }
    }
}

impl TiledShape {
    /// Validates the order conditions and returns the shape, or an
    /// invalid-input error listing every violation.
    pub fn new(partition: Vec<usize>, exponents: Vec<Vec<i64>>) -> Result<Self> {
        let violations = shape_violations(&partition, &exponents)?;
        if !violations.is_empty() {
            let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(Error::invalid(format!("not an order: {}", listed.join("; "))));
        }
        Ok(TiledShape { partition, exponents })
    }

    /// The maximal order `M_n(Z_p)` as a one-block shape.
    pub fn maximal(n: usize) -> Result<Self> {
        TiledShape::new(vec![n], vec![vec![0]])
    }

    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.exponents[i][j]
    }

    /// Number of blocks `r`.
    pub fn block_count(&self) -> usize {
        self.partition.len()
    }

    /// Matrix size `n = Σ n_i`.
    pub fn size(&self) -> usize {
        self.partition.iter().sum()
    }

    /// First scalar index of each block.
    pub fn offsets(&self) -> Vec<usize> {
        self.partition
            .iter()
            .scan(0, |acc, &n| {
                let start = *acc;
                *acc += n;
                Some(start)
            })
            .collect()
    }

    /// Block of each scalar index.
    pub fn block_of_index(&self) -> Vec<usize> {
        self.partition.iter().enumerate().flat_map(|(b, &n)| std::iter::repeat(b).take(n)).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exponents.iter().flatten().all(|&m| m >= 0)
    }

    pub fn max_exponent(&self) -> i64 {
        self.exponents.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_standard_form(&self) -> bool {
        let r = self.block_count();
        (0..r).all(|i| (0..r).all(|j| i == j || self.m(i, j) + self.m(j, i) > 0))
    }

    pub(crate) fn require_standard_form(&self) -> Result<()> {
        if self.is_standard_form() {
            Ok(())
        } else {
            Err(Error::invalid("shape is not in standard form; reduce it first"))
        }
    }

    /// `m_ijk = m_ij + m_jk − m_ik`, indexed `[i][j][k]`.
    pub fn structural_invariants(&self) -> Vec<Vec<Vec<i64>>> {
        let r = self.block_count();
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.m(i, j) + self.m(j, k) - self.m(i, k)).collect()).collect())
            .collect()
    }

    /// Hereditary test on a standard form: every pair sums to exactly 1.
    pub fn is_hereditary(&self) -> Result<bool> {
        self.require_standard_form()?;
        let r = self.block_count();
        Ok((0..r).all(|i| (0..r).all(|j| i == j || self.m(i, j) + self.m(j, i) == 1)))
    }

    /// Exponents of the radical, `I_r + M`.
    pub fn radical_exponents(&self) -> Result<Vec<Vec<i64>>> {
        self.require_standard_form()?;
        let mut e = self.exponents.clone();
        for (i, row) in e.iter_mut().enumerate() {
            row[i] += 1;
        }
        Ok(e)
    }

    /// `dim O/rad(O) = Σ n_k²` over the residue field.
    pub fn residue_dimension(&self) -> usize {
        self.partition.iter().map(|n| n * n).sum()
    }

    /// The order derived under `σ`: `n'_i = n_{σ(i)}`, `m'_ij = m_{σ(i)σ(j)}`.
    pub fn permuted(&self, sigma: &[usize]) -> Result<TiledShape> {
        let r = self.block_count();
        let mut seen = vec![false; r];
        if sigma.len() != r || sigma.iter().any(|&s| s >= r || std::mem::replace(&mut seen[s], true)) {
            return Err(Error::invalid("not a permutation of the blocks"));
        }
        Ok(TiledShape {
            partition: sigma.iter().map(|&s| self.partition[s]).collect(),
            exponents: sigma.iter().map(|&a| sigma.iter().map(|&b| self.m(a, b)).collect()).collect(),
        })
    }

    /// The leading sub-shape on blocks `1..=l`.
    pub fn leading(&self, l: usize) -> Result<TiledShape> {
        if l == 0 || l > self.block_count() {
            return Err(Error::invalid(format!("sub-shape index {l} is outside 1..={}", self.block_count())));
        }
        Ok(TiledShape {
            partition: self.partition[..l].to_vec(),
            exponents: self.exponents[..l].iter().map(|row| row[..l].to_vec()).collect(),
        })
    }

    fn diagonal_step(&self, d: &[i64]) -> (TiledShape, ConjugationRecord) {
        let r = self.block_count();
        let exponents = (0..r).map(|i| (0..r).map(|j| self.m(i, j) + d[i] - d[j]).collect()).collect();
        let scalar = self.block_of_index().iter().map(|&b| d[b]).collect();
        let out = TiledShape { partition: self.partition.clone(), exponents };
        let record = ConjugationRecord {
            steps: vec![ConjugationStep::Diagonal { block_exponents: d.to_vec() }],
            composite: ScalarConjugation { permutation: (0..self.size()).collect(), exponents: scalar },
            block_map: (0..r).collect(),
        };
        (out, record)
    }

    /// Reorders blocks: new block `i` is old block `order[i]`.
    pub fn permute_blocks(&self, order: &[usize]) -> Result<(TiledShape, ConjugationRecord)> {
        let out = self.permuted(order)?;
        let offsets = self.offsets();
        let mut permutation = vec![0; self.size()];
        let mut pos = 0;
        for &b in order {
            for a in offsets[b]..offsets[b] + self.partition[b] {
                permutation[a] = pos;
                pos += 1;
            }
        }
        let mut block_map = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            block_map[old] = new;
        }
        let record = ConjugationRecord {
            steps: vec![ConjugationStep::Permute { order: order.to_vec() }],
            composite: ScalarConjugation { permutation, exponents: vec![0; self.size()] },
            block_map,
        };
        Ok((out, record))
    }

    fn merge_step(&self, target: usize, source: usize) -> (TiledShape, ConjugationRecord) {
        debug_assert!(target < source);
        debug_assert!(self.m(target, source) == 0 && self.m(source, target) == 0);
        let r = self.block_count();
        let order: Vec<usize> = (0..=target).chain(std::iter::once(source)).chain((target + 1..r).filter(|&b| b != source)).collect();
        let offsets = self.offsets();
        let mut permutation = vec![0; self.size()];
        let mut pos = 0;
        for &b in &order {
            for a in offsets[b]..offsets[b] + self.partition[b] {
                permutation[a] = pos;
                pos += 1;
            }
        }
        let kept: Vec<usize> = (0..r).filter(|&b| b != source).collect();
        let mut partition: Vec<usize> = kept.iter().map(|&b| self.partition[b]).collect();
        partition[target] += self.partition[source];
        let exponents = kept.iter().map(|&a| kept.iter().map(|&b| self.m(a, b)).collect()).collect();
        let block_map = (0..r)
            .map(|b| if b == source { target } else { kept.iter().position(|&k| k == b).expect("kept") })
            .collect();
        let record = ConjugationRecord {
            steps: vec![ConjugationStep::Merge { target, source }],
            composite: ScalarConjugation { permutation, exponents: vec![0; self.size()] },
            block_map,
        };
        (TiledShape { partition, exponents }, record)
    }

    /// Shifts exponents by a diagonal conjugation so the first column is
    /// zero; by the triangle inequality every entry is then non-negative.
    /// Returns the shape unchanged when it already has a zero first column.
    pub fn normalize_nonnegative(&self) -> (TiledShape, ConjugationRecord) {
        let d: Vec<i64> = (0..self.block_count()).map(|i| -self.m(i, 0)).collect();
        if d.iter().all(|&x| x == 0) {
            return (self.clone(), ConjugationRecord::identity(self));
        }
        self.diagonal_step(&d)
    }

    /// Reduces to standard form.
    ///
    /// Pairs `(i, j)`, `i < j`, are scanned in lexicographic order. At the
    /// first pair with `m_ij + m_ji = 0`, block `j` is conjugated by
    /// `p^{m_ij}` so both entries vanish, then merged into block `i`; the scan
    /// restarts. When the result has negative entries it is finally
    /// normalized with [`TiledShape::normalize_nonnegative`], so the output
    /// describes an order inside `M_n(Z_p)`. Standard-form non-negative
    /// inputs come back unchanged with an empty record.
    pub fn standard_form_reduce(&self) -> (TiledShape, ConjugationRecord) {
        let mut shape = self.clone();
        let mut record = ConjugationRecord::identity(self);
        'scan: loop {
            let r = shape.block_count();
            for i in 0..r {
                for j in i + 1..r {
                    if shape.m(i, j) + shape.m(j, i) != 0 {
                        continue;
                    }
                    if shape.m(i, j) != 0 {
                        let mut d = vec![0; r];
                        d[j] = shape.m(i, j);
                        let (s, rec) = shape.diagonal_step(&d);
                        shape = s;
                        record = record.then(&rec);
                    }
                    let (s, rec) = shape.merge_step(i, j);
                    debug_assert!(shape_violations(&s.partition, &s.exponents).map(|v| v.is_empty()).unwrap_or(false));
                    shape = s;
                    record = record.then(&rec);
                    continue 'scan;
                }
            }
            break;
        }
        if !shape.is_nonnegative() {
            let (s, rec) = shape.normalize_nonnegative();
            shape = s;
            record = record.then(&rec);
        }
        (shape, record)
    }
}

impl fmt::Display for TiledShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({:?}, {:?})", self.partition, self.exponents)
    }
}

/// Iterates over all permutations of `0..r` in lexicographic order, stopping
/// early when `f` returns `true`. Returns the permutation that stopped it.
fn search_permutations(r: usize, mut accept: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    fn rec(
        perm: &mut Vec<usize>,
        used: &mut [bool],
        r: usize,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if perm.len() == r {
            return accept(perm);
        }
        for s in 0..r {
            if used[s] {
                continue;
            }
            used[s] = true;
            perm.push(s);
            if rec(perm, used, r, accept) {
                return true;
            }
            perm.pop();
            used[s] = false;
        }
        false
    }
    let mut perm = Vec::with_capacity(r);
    let mut used = vec![false; r];
    rec(&mut perm, &mut used, r, &mut accept).then_some(perm)
}

/// A permutation `σ` with `n'_i = n_{σ(i)}` and `m'_ijk = m_{σ(i)σ(j)σ(k)}`,
/// i.e. an isomorphism `O(ñ, M) ≅ O(ñ', M')` of standard forms.
///
/// Backtracking over `S_r`: a partial assignment is extended only while
/// sizes and all invariants among assigned indices agree.
pub fn isomorphic(a: &TiledShape, b: &TiledShape) -> Result<Option<Vec<usize>>> {
    a.require_standard_form()?;
    b.require_standard_form()?;
    if a.block_count() != b.block_count() {
        return Ok(None);
    }
    let (mut pa, mut pb) = (a.partition.clone(), b.partition.clone());
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return Ok(None);
    }
    let r = a.block_count();
    let ia = a.structural_invariants();
    let ib = b.structural_invariants();
    fn extend(
        sigma: &mut Vec<usize>,
        used: &mut [bool],
        a: &TiledShape,
        b: &TiledShape,
        ia: &[Vec<Vec<i64>>],
        ib: &[Vec<Vec<i64>>],
    ) -> bool {
        let r = a.block_count();
        let i = sigma.len();
        if i == r {
            return true;
        }
        for s in 0..r {
            if used[s] || b.partition[i] != a.partition[s] {
                continue;
            }
            sigma.push(s);
            let consistent = (0..=i).all(|x| {
                (0..=i).all(|y| {
                    [(i, x, y), (x, i, y), (x, y, i)]
                        .iter()
                        .all(|&(u, v, w)| ib[u][v][w] == ia[sigma[u]][sigma[v]][sigma[w]])
                })
            });
            if consistent {
                used[s] = true;
                if extend(sigma, used, a, b, ia, ib) {
                    return true;
                }
                used[s] = false;
            }
            sigma.pop();
        }
        false
    }
    let mut sigma = Vec::with_capacity(r);
    let mut used = vec![false; r];
    Ok(extend(&mut sigma, &mut used, a, b, &ia, &ib).then_some(sigma))
}

/// Independent hereditary test: some permutation `σ` maps the invariants of
/// the staircase exponents `s_ij = [i < j]` onto those of `shape`.
pub fn is_hereditary_by_staircase(shape: &TiledShape) -> Result<bool> {
    shape.require_standard_form()?;
    let r = shape.block_count();
    let inv = shape.structural_invariants();
    let s = |i: usize, j: usize| i64::from(i < j);
    let stair = |i: usize, j: usize, k: usize| s(i, j) + s(j, k) - s(i, k);
    let found = search_permutations(r, |sigma| {
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| inv[sigma[i]][sigma[j]][sigma[k]] == stair(i, j, k))))
    });
    Ok(found.is_some())
}
