//! The monoid of zero-sum sequences `B(G)`: zero-sumfree sequences, the
//! Davenport constant, atoms, sets of lengths and elasticity.
//!
//! Everything here is exhaustive search. Group elements are handled through
//! their lexicographic index (see [`FiniteAbelianGroup::index_of`]) and
//! sequences through multiplicity vectors over those indices.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_rational::Ratio;
use serde::Serialize;

use crate::abelian::{FiniteAbelianGroup, GSequence};
use crate::error::{Error, Result};

/// Caps on the exhaustive searches. Exceeding one is a resource-limit error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_group_order: u64,
    pub max_sequence_length: u32,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_group_order: 64, max_sequence_length: 20 }
    }
}

impl SearchLimits {
    fn check_group(&self, group: &FiniteAbelianGroup) -> Result<()> {
        // the subset-sum bitmask of the extension search is a u64
        let hard = self.max_group_order.min(64);
        if group.cardinality() > hard {
            return Err(Error::resource(format!(
                "group {group} has order {} > search cap {hard}",
                group.cardinality()
            )));
        }
        Ok(())
    }

    fn check_length(&self, len: u32) -> Result<()> {
        if len > self.max_sequence_length {
            return Err(Error::resource(format!(
                "sequence length {len} exceeds search cap {}",
                self.max_sequence_length
            )));
        }
        Ok(())
    }
}

/// The complete list of atoms of `B(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumAtomSet {
    pub group: FiniteAbelianGroup,
    /// Sorted by length, then by multiset order.
    pub atoms: Vec<GSequence>,
}

impl ZeroSumAtomSet {
    pub fn max_length(&self) -> u32 {
        self.atoms.iter().map(GSequence::len).max().unwrap_or(0)
    }
}

/// Calls `f` on every sub-multiset of `counts` (including empty and full)
/// together with its sum, as an element index.
fn for_each_submultiset(
    counts: &[u32],
    add: &[Vec<usize>],
    scaled: &[Vec<usize>],
    mut f: impl FnMut(&[u32], usize) -> bool,
) {
    let support: Vec<usize> = (0..counts.len()).filter(|&i| counts[i] > 0).collect();
    let mut pick = vec![0u32; counts.len()];
    fn rec(
        depth: usize,
        support: &[usize],
        counts: &[u32],
        add: &[Vec<usize>],
        scaled: &[Vec<usize>],
        pick: &mut Vec<u32>,
        sum: usize,
        f: &mut dyn FnMut(&[u32], usize) -> bool,
    ) -> bool {
        if depth == support.len() {
            return f(pick, sum);
        }
        let g = support[depth];
        for k in 0..=counts[g] {
            pick[g] = k;
            let s = add[sum][scaled[g][k as usize]];
            if !rec(depth + 1, support, counts, add, scaled, pick, s, f) {
                pick[g] = 0;
                return false;
            }
        }
        pick[g] = 0;
        true
    }
    rec(0, &support, counts, add, scaled, &mut pick, 0, &mut f);
}

/// Precomputed arithmetic on element indices.
#[derive(Debug, Clone)]
struct IndexArithmetic {
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    /// `scaled[g][k]` is the index of `k·g`, for `k` up to the sequence cap.
    scaled: Vec<Vec<usize>>,
}

impl IndexArithmetic {
    fn new(group: &FiniteAbelianGroup, max_multiplicity: u32) -> Self {
        let add = group.addition_table();
        let neg = group.negation_table();
        let scaled = (0..add.len())
            .map(|g| {
                let mut row = vec![0usize];
                for _ in 0..max_multiplicity {
                    let last = *row.last().unwrap();
                    row.push(add[last][g]);
                }
                row
            })
            .collect();
        IndexArithmetic { add, neg, scaled }
    }

    fn sum(&self, counts: &[u32]) -> usize {
        counts
            .iter()
            .enumerate()
            .fold(0, |acc, (g, &k)| self.add[acc][self.scaled[g][k as usize]])
    }

    fn ensure_multiplicity(&mut self, k: u32) {
        for g in 0..self.scaled.len() {
            while self.scaled[g].len() <= k as usize {
                let last = *self.scaled[g].last().unwrap();
                self.scaled[g].push(self.add[last][g]);
            }
        }
    }
}

/// True iff no nonempty subsequence of `s` sums to zero, decided by walking
/// every multiplicity vector below that of `s`.
pub fn is_zero_sumfree(group: &FiniteAbelianGroup, s: &GSequence) -> Result<bool> {
    let limits = SearchLimits::default();
    limits.check_group(group)?;
    limits.check_length(s.len())?;
    let counts = s.to_multiplicities(group)?;
    let arith = IndexArithmetic::new(group, s.len());
    let mut free = true;
    for_each_submultiset(&counts, &arith.add, &arith.scaled, |pick, sum| {
        if sum == 0 && pick.iter().any(|&k| k > 0) {
            free = false;
        }
        free
    });
    Ok(free)
}

/// `D(G)` by depth-first extension of zero-sumfree sequences, tracking the
/// set of nonempty subsequence sums as a bitmask.
pub fn davenport_by_extension(group: &FiniteAbelianGroup, limits: &SearchLimits) -> Result<u32> {
    limits.check_group(group)?;
    let card = group.cardinality() as usize;
    let add = group.addition_table();
    let neg = group.negation_table();

    fn translate(sums: u64, g: usize, add: &[Vec<usize>]) -> u64 {
        let mut out = 0u64;
        let mut rest = sums;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            out |= 1u64 << add[s][g];
            rest &= rest - 1;
        }
        out
    }

    fn dfs(start: usize, len: u32, sums: u64, card: usize, add: &[Vec<usize>], neg: &[usize], best: &mut u32) {
        *best = (*best).max(len);
        // each extension adds at least one new nonzero subsequence sum
        let room = (card as u32 - 1).saturating_sub(sums.count_ones());
        if len + room <= *best {
            return;
        }
        for g in start.max(1)..card {
            if sums & (1u64 << neg[g]) != 0 {
                continue;
            }
            let next = sums | translate(sums, g, add) | (1u64 << g);
            dfs(g, len + 1, next, card, add, neg, best);
        }
    }

    let mut best = 0;
    dfs(1, 0, 0, card, &add, &neg, &mut best);
    Ok(best + 1)
}

/// Enumerates the atoms of `B(G)` as multiplicity vectors.
///
/// Every atom of length `L ≥ 2`, with its largest element removed, is a
/// zero-sumfree sequence; conversely a zero-sumfree `T` closed by `-σ(T)` is
/// an atom. Zero-sumfreeness of each extension is checked by brute force over
/// sub-multisets, independently of [`davenport_by_extension`].
fn enumerate_atoms(group: &FiniteAbelianGroup, limits: &SearchLimits) -> Result<Vec<Vec<u32>>> {
    limits.check_group(group)?;
    let card = group.cardinality() as usize;
    let arith = IndexArithmetic::new(group, card as u32 + 1);
    let mut atoms = Vec::new();
    let mut prefix = vec![0u32; card];

    fn rec(
        prefix: &mut Vec<u32>,
        last: usize,
        sum: usize,
        arith: &IndexArithmetic,
        atoms: &mut Vec<Vec<u32>>,
    ) {
        let card = prefix.len();
        let closing = arith.neg[sum];
        if closing >= last {
            let mut atom = prefix.clone();
            atom[closing] += 1;
            atoms.push(atom);
        }
        for g in last.max(1)..card {
            let target = arith.neg[g];
            let mut hits = false;
            for_each_submultiset(prefix, &arith.add, &arith.scaled, |_, s| {
                hits = s == target;
                !hits
            });
            if hits {
                continue;
            }
            prefix[g] += 1;
            rec(prefix, g, arith.add[sum][g], arith, atoms);
            prefix[g] -= 1;
        }
    }

    rec(&mut prefix, 0, 0, &arith, &mut atoms);
    atoms.sort_by(|a, b| {
        let (la, lb): (u32, u32) = (a.iter().sum(), b.iter().sum());
        la.cmp(&lb).then_with(|| b.cmp(a))
    });
    Ok(atoms)
}

/// All atoms of `B(G)`, i.e. minimal nonempty zero-sum sequences.
pub fn block_atoms(group: &FiniteAbelianGroup) -> Result<ZeroSumAtomSet> {
    let atoms = enumerate_atoms(group, &SearchLimits::default())?;
    Ok(ZeroSumAtomSet {
        group: group.clone(),
        atoms: atoms.iter().map(|c| GSequence::from_multiplicities(group, c)).collect(),
    })
}

/// `D(G)` as the maximal atom length of `B(G)`.
pub fn davenport_by_atoms(group: &FiniteAbelianGroup, limits: &SearchLimits) -> Result<u32> {
    let atoms = enumerate_atoms(group, limits)?;
    Ok(atoms.iter().map(|a| a.iter().sum::<u32>()).max().unwrap_or(0))
}

/// The Davenport constant, computed by both independent searches.
///
/// # Panics
///
/// If the two searches disagree, which would be a bug in one of them.
pub fn davenport(group: &FiniteAbelianGroup) -> Result<u32> {
    let limits = SearchLimits::default();
    let by_extension = davenport_by_extension(group, &limits)?;
    let by_atoms = davenport_by_atoms(group, &limits)?;
    assert_eq!(
        by_extension, by_atoms,
        "Davenport searches disagree on {group}: extension {by_extension}, atoms {by_atoms}"
    );
    Ok(by_extension)
}

/// Brute-force elasticity of `B(G)` next to the closed form `max{1, D(G)/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockElasticity {
    #[serde(serialize_with = "crate::codec::serialize_ratio")]
    pub brute_force: Ratio<u64>,
    #[serde(serialize_with = "crate::codec::serialize_ratio")]
    pub formula: Ratio<u64>,
    /// A sequence attaining the brute-force value.
    #[serde(serialize_with = "crate::codec::serialize_sequence")]
    pub witness: GSequence,
    /// Largest sequence length that was searched.
    pub searched_length: u32,
}

impl BlockElasticity {
    pub fn agrees(&self) -> bool {
        self.brute_force == self.formula
    }
}

/// `B(G)` with its atom list and a length-set memo.
#[derive(Debug, Clone)]
pub struct BlockMonoid {
    group: FiniteAbelianGroup,
    limits: SearchLimits,
    arith: IndexArithmetic,
    atoms: Vec<Vec<u32>>,
    /// Atoms grouped by their least element index.
    atoms_by_least: Vec<Vec<usize>>,
    davenport: u32,
    memo: HashMap<Vec<u32>, Arc<BTreeSet<u32>>>,
}

impl BlockMonoid {
    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        Self::with_limits(group, SearchLimits::default())
    }

    pub fn with_limits(group: &FiniteAbelianGroup, limits: SearchLimits) -> Result<Self> {
        let atoms = enumerate_atoms(group, &limits)?;
        let davenport = atoms.iter().map(|a| a.iter().sum::<u32>()).max().unwrap_or(0);
        let card = group.cardinality() as usize;
        let mut atoms_by_least = vec![Vec::new(); card];
        for (i, a) in atoms.iter().enumerate() {
            let least = a.iter().position(|&k| k > 0).expect("atoms are nonempty");
            atoms_by_least[least].push(i);
        }
        Ok(BlockMonoid {
            group: group.clone(),
            limits,
            arith: IndexArithmetic::new(group, limits.max_sequence_length.max(davenport)),
            atoms,
            atoms_by_least,
            davenport,
            memo: HashMap::new(),
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn davenport(&self) -> u32 {
        self.davenport
    }

    pub fn atom_set(&self) -> ZeroSumAtomSet {
        ZeroSumAtomSet {
            group: self.group.clone(),
            atoms: self.atoms.iter().map(|c| GSequence::from_multiplicities(&self.group, c)).collect(),
        }
    }

    pub fn atom_counts(&self) -> &[Vec<u32>] {
        &self.atoms
    }

    pub fn length_set(&mut self, s: &GSequence) -> Result<BTreeSet<u32>> {
        let counts = s.to_multiplicities(&self.group)?;
        Ok((*self.length_set_counts(&counts)?).clone())
    }

    /// `L(S)` for a zero-sum multiplicity vector.
    pub fn length_set_counts(&mut self, counts: &[u32]) -> Result<Arc<BTreeSet<u32>>> {
        let len: u32 = counts.iter().sum();
        self.limits.check_length(len)?;
        self.arith.ensure_multiplicity(len);
        if self.arith.sum(counts) != 0 {
            return Err(Error::invalid("sequence is not zero-sum"));
        }
        Ok(self.lengths_rec(counts.to_vec()))
    }

    fn lengths_rec(&mut self, counts: Vec<u32>) -> Arc<BTreeSet<u32>> {
        if let Some(hit) = self.memo.get(&counts) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        match counts.iter().position(|&k| k > 0) {
            None => {
                out.insert(0);
            }
            Some(least) => {
                let candidates = self.atoms_by_least[least].clone();
                for ai in candidates {
                    let atom = &self.atoms[ai];
                    if atom.iter().zip(&counts).any(|(a, s)| a > s) {
                        continue;
                    }
                    let rest: Vec<u32> = counts.iter().zip(atom).map(|(s, a)| s - a).collect();
                    for l in self.lengths_rec(rest).iter() {
                        out.insert(l + 1);
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.memo.insert(counts, out.clone());
        out
    }

    /// Calls `f` on every zero-sum multiplicity vector of length `1..=max_len`.
    pub fn for_each_zero_sum(&self, max_len: u32, mut f: impl FnMut(&[u32])) {
        let card = self.group.cardinality() as usize;
        let mut counts = vec![0u32; card];
        fn rec(
            counts: &mut Vec<u32>,
            start: usize,
            len: u32,
            sum: usize,
            max_len: u32,
            add: &[Vec<usize>],
            f: &mut dyn FnMut(&[u32]),
        ) {
            if len > 0 && sum == 0 {
                f(counts);
            }
            if len == max_len {
                return;
            }
            for g in start..counts.len() {
                counts[g] += 1;
                rec(counts, g, len + 1, add[sum][g], max_len, add, f);
                counts[g] -= 1;
            }
        }
        rec(&mut counts, 0, 0, 0, max_len, &self.arith.add, &mut f);
    }

    /// `ρ(B(G))` by brute force over all zero-sum sequences of length at most
    /// `2·D(G)`, compared against `max{1, D(G)/2}`.
    pub fn elasticity(&mut self) -> Result<BlockElasticity> {
        let max_len = 2 * self.davenport;
        self.limits.check_length(max_len)?;
        self.arith.ensure_multiplicity(max_len);
        let mut sequences = Vec::new();
        self.for_each_zero_sum(max_len, |c| sequences.push(c.to_vec()));
        let mut best = Ratio::from_integer(1u64);
        let mut witness = vec![0u32; self.group.cardinality() as usize];
        witness[0] = 1;
        for counts in sequences {
            let lengths = self.lengths_rec(counts.clone());
            let (lo, hi) = (*lengths.first().unwrap() as u64, *lengths.last().unwrap() as u64);
            let ratio = Ratio::new(hi, lo);
            if ratio > best {
                best = ratio;
                witness = counts;
            }
        }
        let formula = Ratio::new(self.davenport as u64, 2).max(Ratio::from_integer(1));
        Ok(BlockElasticity {
            brute_force: best,
            formula,
            witness: GSequence::from_multiplicities(&self.group, &witness),
            searched_length: max_len,
        })
    }
}

/// `L(S)` for a zero-sum sequence over `G`.
pub fn block_length_set(group: &FiniteAbelianGroup, s: &GSequence) -> Result<BTreeSet<u32>> {
    BlockMonoid::new(group)?.length_set(s)
}

/// Brute-force `ρ(B(G))`; see [`BlockMonoid::elasticity`].
pub fn block_elasticity(group: &FiniteAbelianGroup) -> Result<BlockElasticity> {
    BlockMonoid::new(group)?.elasticity()
}
