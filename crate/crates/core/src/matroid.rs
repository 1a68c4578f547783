//! Vector matroids and their brute-force invariants.
//!
//! Every query here is answered from the representing matrix alone, which
//! makes this module the oracle the characterization theorems are checked
//! against.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{mask_indices, LabeledMatrix};
use crate::set::{canonicalize, ElementSet, Label};

/// Size guards for the exhaustive searches. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for circuit, basis and cocircuit enumeration.
    pub enumeration: usize,
    /// Largest ground set for the bipartition scan in connectivity tests.
    pub partition: usize,
    /// Largest number of kernel vectors visited when testing p-dependence.
    pub kernel_vectors: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { enumeration: 24, partition: 20, kernel_vectors: 1 << 20 }
    }
}

impl Limits {
    pub(crate) fn check_enumeration(&self, size: usize) -> Result<()> {
        if size > self.enumeration || size > 63 {
            return Err(Error::GroundSetTooLarge { size, limit: self.enumeration.min(63) });
        }
        Ok(())
    }

    pub(crate) fn check_partition(&self, size: usize) -> Result<()> {
        if size > self.partition || size > 63 {
            return Err(Error::GroundSetTooLarge { size, limit: self.partition.min(63) });
        }
        Ok(())
    }
}

/// A circuit: a minimal dependent set. Only constructed after verification.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit(ElementSet);

impl Circuit {
    pub fn elements(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_elements(self) -> ElementSet {
        self.0
    }
}

impl Deref for Circuit {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

/// Loops, coloops and parallel classes of a matroid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub loops: ElementSet,
    pub coloops: ElementSet,
    pub parallel_classes: Vec<ElementSet>,
}

impl ValidationReport {
    pub fn is_simple(&self) -> bool {
        self.loops.is_empty() && self.parallel_classes.is_empty()
    }

    pub fn is_coloopless(&self) -> bool {
        self.coloops.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorMatroid {
    matrix: LabeledMatrix,
    rank: usize,
}

impl VectorMatroid {
    pub fn new(matrix: LabeledMatrix) -> Self {
        let rank = matrix.rank();
        Self { matrix, rank }
    }

    pub fn matrix(&self) -> &LabeledMatrix {
        &self.matrix
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }

    pub fn ground(&self) -> ElementSet {
        self.matrix.label_set()
    }

    pub fn contains(&self, x: Label) -> bool {
        self.matrix.index_of(x).is_some()
    }

    pub fn rank_of(&self, x: &ElementSet) -> Result<usize> {
        self.matrix.column_rank(x)
    }

    pub fn is_independent(&self, x: &ElementSet) -> Result<bool> {
        Ok(self.rank_of(x)? == x.len())
    }

    pub fn closure(&self, x: &ElementSet) -> Result<ElementSet> {
        let mut idx = self.matrix.indices_of(x)?;
        let r = self.matrix.rank_of_indices(&idx);
        let mut cl = x.clone();
        for c in 0..self.len() {
            let y = self.matrix.labels()[c];
            if x.contains(y) {
                continue;
            }
            idx.push(c);
            if self.matrix.rank_of_indices(&idx) == r {
                cl.insert(y);
            }
            idx.pop();
        }
        Ok(cl)
    }

    /// Whether `x` is minimal dependent: rank |x|-1 and every one-smaller subset independent.
    pub fn is_circuit(&self, x: &ElementSet) -> Result<bool> {
        let idx = self.matrix.indices_of(x)?;
        if idx.is_empty() || self.matrix.rank_of_indices(&idx) + 1 != idx.len() {
            return Ok(false);
        }
        for skip in 0..idx.len() {
            let sub: Vec<usize> =
                idx.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c).collect();
            if self.matrix.rank_of_indices(&sub) != sub.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn circuit(&self, x: &ElementSet) -> Result<Circuit> {
        if self.is_circuit(x)? {
            Ok(Circuit(x.clone()))
        } else {
            Err(Error::NotACircuit(x.clone()))
        }
    }

    pub fn circuits(&self) -> Result<Vec<Circuit>> {
        self.circuits_limited(&Limits::default())
    }

    /// All circuits, sorted by size then lexicographically.
    pub fn circuits_limited(&self, limits: &Limits) -> Result<Vec<Circuit>> {
        limits.check_enumeration(self.len())?;
        let masks = self.circuit_masks_within(self.full_mask());
        let mut out: Vec<ElementSet> = masks.into_iter().map(|m| self.set_of(m)).collect();
        canonicalize(&mut out);
        Ok(out.into_iter().map(Circuit).collect())
    }

    /// Circuits contained in the column set `within`, as masks.
    ///
    /// Breadth-first by size; supersets of circuits already found are skipped.
    pub(crate) fn circuit_masks_within(&self, within: u64) -> Vec<u64> {
        let idx = mask_indices(within);
        let n = idx.len();
        let mut found: Vec<u64> = Vec::new();
        for k in 1..=n.min(self.rank + 1) {
            for_each_k_subset(n, k, |local| {
                let mask = lift_mask(local, &idx);
                if found.iter().any(|&c| mask & c == c) {
                    return;
                }
                if self.is_circuit_mask(mask) {
                    found.push(mask);
                }
            });
        }
        found
    }

    pub(crate) fn is_circuit_mask(&self, mask: u64) -> bool {
        let k = mask.count_ones() as usize;
        if k == 0 || self.matrix.rank_of_mask(mask) + 1 != k {
            return false;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.matrix.rank_of_mask(mask & !bit) != k - 1 {
                return false;
            }
        }
        true
    }

    pub fn bases(&self) -> Result<Vec<ElementSet>> {
        self.bases_limited(&Limits::default())
    }

    pub fn bases_limited(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        limits.check_enumeration(self.len())?;
        let mut out = Vec::new();
        for_each_k_subset(self.len(), self.rank, |mask| {
            if self.matrix.rank_of_mask(mask) == self.rank {
                out.push(self.set_of(mask));
            }
        });
        canonicalize(&mut out);
        Ok(out)
    }

    /// Independent sets of size `k`, canonically sorted.
    pub fn independent_sets_of_size(&self, k: usize, limits: &Limits) -> Result<Vec<ElementSet>> {
        limits.check_enumeration(self.len())?;
        let mut out = Vec::new();
        for_each_k_subset(self.len(), k, |mask| {
            if self.matrix.rank_of_mask(mask) == k {
                out.push(self.set_of(mask));
            }
        });
        canonicalize(&mut out);
        Ok(out)
    }

    /// The unique dependency of a circuit, scaled so its first coordinate is 1.
    /// Coordinates follow ascending label order.
    pub fn circuit_certificate(&self, c: &ElementSet) -> Result<Vec<Scalar>> {
        if !self.is_circuit(c)? {
            return Err(Error::NotACircuit(c.clone()));
        }
        let space = self.matrix.dependency_space(c)?;
        debug_assert_eq!(space.dim(), 1);
        let f = self.field();
        Ok(space.basis()[0].iter().map(|&v| f.reduce(i64::from(v))).collect())
    }

    /// Standard-form dual representation on the same labels.
    pub fn dual(&self) -> VectorMatroid {
        let f = self.field();
        let n = self.len();
        let rref = self.matrix.rref();
        let pivots = &rref.pivot_columns;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut entries = vec![0u32; free.len() * n];
        for (t, &j) in free.iter().enumerate() {
            entries[t * n + j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                entries[t * n + pc] = f.neg_raw(rref.reduced.get(i, j));
            }
        }
        let m = LabeledMatrix::new(f, free.len(), n, entries, self.matrix.labels().to_vec())
            .expect("dual shape is consistent");
        VectorMatroid::new(m)
    }

    pub fn cocircuits(&self) -> Result<Vec<Circuit>> {
        self.cocircuits_limited(&Limits::default())
    }

    pub fn cocircuits_limited(&self, limits: &Limits) -> Result<Vec<Circuit>> {
        self.dual().circuits_limited(limits)
    }

    pub fn delete(&self, x: &ElementSet) -> Result<VectorMatroid> {
        Ok(VectorMatroid::new(self.matrix.without_columns(x)?))
    }

    /// Contraction by `x`: pivots on a maximal independent subset of `x`
    /// (greedy in label order, lowest available row) and drops the pivot rows
    /// together with every column of `x`.
    pub fn contract(&self, x: &ElementSet) -> Result<VectorMatroid> {
        let idx = self.matrix.indices_of(x)?;
        let f = self.field();
        let (rows, cols) = (self.matrix.rows(), self.len());
        let mut work = self.matrix.entries().to_vec();
        let mut used_rows: Vec<usize> = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        for &c in &idx {
            chosen.push(c);
            if self.matrix.rank_of_indices(&chosen) < chosen.len() {
                chosen.pop();
                continue;
            }
            let pr = (0..rows)
                .find(|r| !used_rows.contains(r) && work[r * cols + c] != 0)
                .expect("independent column has a pivot in an unused row");
            let inv = f.inv_raw(work[pr * cols + c]).expect("nonzero pivot");
            for j in 0..cols {
                work[pr * cols + j] = f.mul_raw(work[pr * cols + j], inv);
            }
            for r in (0..rows).filter(|&r| r != pr) {
                let factor = work[r * cols + c];
                if factor != 0 {
                    for j in 0..cols {
                        let t = f.mul_raw(factor, work[pr * cols + j]);
                        work[r * cols + j] = f.sub_raw(work[r * cols + j], t);
                    }
                }
            }
            used_rows.push(pr);
        }
        let reduced =
            LabeledMatrix::new(f, rows, cols, work, self.matrix.labels().to_vec())?;
        let m = reduced.without_rows(&used_rows).without_columns(x)?;
        Ok(VectorMatroid::new(m))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.len();
        let labels = self.matrix.labels();
        let loops: ElementSet =
            (0..n).filter(|&c| self.matrix.rank_of_indices(&[c]) == 0).map(|c| labels[c]).collect();
        let coloops: ElementSet = (0..n)
            .filter(|&c| {
                let rest: Vec<usize> = (0..n).filter(|&d| d != c).collect();
                self.matrix.rank_of_indices(&rest) < self.rank
            })
            .map(|c| labels[c])
            .collect();
        let mut class_of: Vec<Option<usize>> = vec![None; n];
        let mut classes: Vec<ElementSet> = Vec::new();
        for x in 0..n {
            if loops.contains(labels[x]) || class_of[x].is_some() {
                continue;
            }
            let mut class = ElementSet::from([labels[x]]);
            for y in (x + 1)..n {
                if !loops.contains(labels[y]) && self.matrix.rank_of_indices(&[x, y]) == 1 {
                    class.insert(labels[y]);
                    class_of[y] = Some(classes.len());
                }
            }
            if class.len() > 1 {
                classes.push(class);
            }
        }
        canonicalize(&mut classes);
        ValidationReport { loops, coloops, parallel_classes: classes }
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub(crate) fn set_of(&self, mask: u64) -> ElementSet {
        mask_indices(mask).into_iter().map(|c| self.matrix.labels()[c]).collect()
    }

    pub(crate) fn mask_of(&self, x: &ElementSet) -> Result<u64> {
        let mut m = 0u64;
        for c in self.matrix.indices_of(x)? {
            if c >= 64 {
                return Err(Error::GroundSetTooLarge { size: self.len(), limit: 64 });
            }
            m |= 1 << c;
        }
        Ok(m)
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        self.matrix.rank_of_mask(mask)
    }
}

fn lift_mask(local: u64, idx: &[usize]) -> u64 {
    let mut m = 0u64;
    for i in mask_indices(local) {
        m |= 1 << idx[i];
    }
    m
}

/// Calls `f` on every `k`-subset of `0..n`, as bitmasks in increasing numeric order.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > n || n > 63 {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut s = (1u64 << k) - 1;
    while s < limit {
        f(s);
        // Gosper's hack.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}
