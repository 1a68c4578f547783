//! Dense matrices over GF(p) with labeled columns.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::set::{ElementSet, Label};

/// A matrix over GF(p) whose columns are named by distinct positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    labels: Vec<Label>,
}

/// Output of [`LabeledMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: LabeledMatrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

/// Basis of the dependencies among a set of columns.
///
/// Coordinates follow ascending label order. The basis is the reduced row
/// echelon form of the kernel, so it is unique for a given column set and
/// the first nonzero coordinate of every vector is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencySpace {
    field: PrimeField,
    labels: Vec<Label>,
    basis: Vec<Vec<u32>>,
}

impl DependencySpace {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Coefficient of `label` in the `i`-th basis vector.
    pub fn coefficient(&self, i: usize, label: Label) -> Option<Scalar> {
        let pos = self.labels.iter().position(|&l| l == label)?;
        let v = *self.basis.get(i)?.get(pos)?;
        Some(self.field.reduce(i64::from(v)))
    }

    /// Number of vectors in the space, `p^dim`, or `None` on overflow.
    pub fn cardinality(&self) -> Option<u64> {
        let p = u64::from(self.field.order());
        let mut n = 1u64;
        for _ in 0..self.dim() {
            n = n.checked_mul(p)?;
        }
        Some(n)
    }

    /// Visits every vector of the space (including zero) until `visit`
    /// returns `true`. Returns whether some visit returned `true`.
    pub fn any_vector(&self, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
        let p = self.field.order();
        let d = self.dim();
        let n = self.labels.len();
        let mut coeffs = vec![0u32; d];
        let mut v = vec![0u32; n];
        loop {
            for x in v.iter_mut() {
                *x = 0;
            }
            for (c, b) in coeffs.iter().zip(&self.basis) {
                if *c == 0 {
                    continue;
                }
                for (x, &bx) in v.iter_mut().zip(b) {
                    *x = self.field.add_raw(*x, self.field.mul_raw(*c, bx));
                }
            }
            if visit(&v) {
                return true;
            }
            // Odometer increment over GF(p)^d.
            let mut i = 0;
            loop {
                if i == d {
                    return false;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
}

impl LabeledMatrix {
    pub fn new(
        field: PrimeField,
        rows: usize,
        cols: usize,
        entries: Vec<u32>,
        labels: Vec<Label>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if labels.len() != cols {
            return Err(Error::Shape(format!("{} labels for {cols} columns", labels.len())));
        }
        if let Some(&v) = entries.iter().find(|&&v| v >= field.order()) {
            return Err(Error::ValueOutOfRange { value: v.into(), p: field.order() });
        }
        check_labels(&labels)?;
        Ok(Self { field, rows, cols, entries, labels })
    }

    pub fn from_rows(field: PrimeField, labels: Vec<Label>, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = labels.len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, entries, labels)
    }

    /// Identity matrix with the given column labels.
    pub fn identity(field: PrimeField, labels: Vec<Label>) -> Result<Self> {
        let n = labels.len();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self::new(field, n, n, entries, labels)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn scalar(&self, r: usize, c: usize) -> Scalar {
        self.field.reduce(i64::from(self.get(r, c)))
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn indices_of(&self, set: &ElementSet) -> Result<Vec<usize>> {
        set.iter().map(|l| self.index_of(l).ok_or(Error::UnknownElement(l))).collect()
    }

    pub fn label_set(&self) -> ElementSet {
        self.labels.iter().copied().collect()
    }

    /// Reduced row echelon form. Pivots are chosen as the lowest available row.
    pub fn rref(&self) -> Rref {
        let mut work = self.entries.clone();
        let pivots = rref_in_place(self.field, &mut work, self.rows, self.cols);
        let rank = pivots.len();
        let reduced = Self { entries: work, ..self.clone() };
        Rref { reduced, pivot_columns: pivots, rank }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.entries.clone();
        rref_in_place(self.field, &mut work, self.rows, self.cols).len()
    }

    pub fn column_rank(&self, subset: &ElementSet) -> Result<usize> {
        let idx = self.indices_of(subset)?;
        Ok(self.rank_of_indices(&idx))
    }

    pub fn dependency_space(&self, subset: &ElementSet) -> Result<DependencySpace> {
        let idx = self.indices_of(subset)?;
        Ok(DependencySpace {
            field: self.field,
            labels: subset.iter().collect(),
            basis: self.kernel_of_indices(&idx),
        })
    }

    pub(crate) fn gather(&self, idx: &[usize]) -> Vec<u32> {
        let k = idx.len();
        let mut sub = vec![0u32; self.rows * k];
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                sub[r * k + j] = self.get(r, c);
            }
        }
        sub
    }

    pub(crate) fn rank_of_indices(&self, idx: &[usize]) -> usize {
        let mut sub = self.gather(idx);
        rref_in_place(self.field, &mut sub, self.rows, idx.len()).len()
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        let idx = mask_indices(mask);
        self.rank_of_indices(&idx)
    }

    /// Canonical kernel basis of the selected columns, coordinates in `idx` order.
    pub(crate) fn kernel_of_indices(&self, idx: &[usize]) -> Vec<Vec<u32>> {
        let f = self.field;
        let k = idx.len();
        let mut sub = self.gather(idx);
        let pivots = rref_in_place(f, &mut sub, self.rows, k);
        let mut basis = Vec::new();
        for free in (0..k).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; k];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg_raw(sub[i * k + free]);
            }
            basis.push(v);
        }
        let d = basis.len();
        let mut flat: Vec<u32> = basis.into_iter().flatten().collect();
        rref_in_place(f, &mut flat, d, k);
        flat.chunks(k.max(1)).take(d).map(|c| c.to_vec()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self {
            field: self.field,
            rows: self.rows,
            cols: idx.len(),
            entries: self.gather(idx),
            labels: idx.iter().map(|&c| self.labels[c]).collect(),
        }
    }

    /// Drops the columns named in `remove`.
    pub fn without_columns(&self, remove: &ElementSet) -> Result<Self> {
        self.indices_of(remove)?;
        let keep: Vec<usize> =
            (0..self.cols).filter(|&c| !remove.contains(self.labels[c])).collect();
        Ok(self.select_columns(&keep))
    }

    pub fn without_rows(&self, remove: &[usize]) -> Self {
        let mut entries = Vec::new();
        let mut rows = 0;
        for r in (0..self.rows).filter(|r| !remove.contains(r)) {
            entries.extend_from_slice(self.row(r));
            rows += 1;
        }
        Self { entries, rows, ..self.clone() }
    }

    pub fn with_row(&self, row: &[u32]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::Shape(format!("new row has {} entries, expected {}", row.len(), self.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        Self::new(self.field, self.rows + 1, self.cols, entries, self.labels.clone())
    }

    pub fn with_column(&self, label: Label, column: &[u32]) -> Result<Self> {
        if column.len() != self.rows {
            return Err(Error::Shape(format!(
                "new column has {} entries, expected {}",
                column.len(),
                self.rows
            )));
        }
        let cols = self.cols + 1;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.push(column[r]);
        }
        let mut labels = self.labels.clone();
        labels.push(label);
        Self::new(self.field, self.rows, cols, entries, labels)
    }

    /// Same columns reordered by ascending label.
    pub fn sorted_by_label(&self) -> Self {
        let mut idx: Vec<usize> = (0..self.cols).collect();
        idx.sort_by_key(|&c| self.labels[c]);
        self.select_columns(&idx)
    }
}

fn check_labels(labels: &[Label]) -> Result<()> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted.first() == Some(&0) {
        return Err(Error::ZeroLabel);
    }
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel(w[0]));
    }
    Ok(())
}

pub(crate) fn mask_indices(mut mask: u64) -> Vec<usize> {
    let mut idx = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        idx.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    idx
}

/// Gauss-Jordan elimination on a row-major `rows x cols` buffer. Returns the pivot columns.
pub(crate) fn rref_in_place(f: PrimeField, m: &mut [u32], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                m.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv_raw(m[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            m[r * cols + j] = f.mul_raw(m[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m[i * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let t = f.mul_raw(factor, m[r * cols + j]);
                m[i * cols + j] = f.sub_raw(m[i * cols + j], t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn p8() -> LabeledMatrix {
        LabeledMatrix::from_rows(
            gf(3),
            (1..=8).collect(),
            &[
                vec![1, 0, 0, 0, 0, 1, 1, 2],
                vec![0, 1, 0, 0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1, 0, 1],
                vec![0, 0, 0, 1, 2, 1, 1, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = LabeledMatrix::identity(gf(3), vec![1, 2, 3, 4]).unwrap();
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivot_columns, vec![0, 1, 2, 3]);
        assert_eq!(r.rank, 4);

        let z = LabeledMatrix::new(gf(5), 2, 3, vec![0; 6], vec![1, 2, 3]).unwrap();
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivot_columns.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn p8_ranks() {
        let m = p8();
        assert_eq!(m.rref().rank, 4);
        assert_eq!(m.column_rank(&ElementSet::from([2, 3, 5])).unwrap(), 3);
        assert_eq!(m.column_rank(&ElementSet::from([1, 4, 5, 8])).unwrap(), 3);
        assert_eq!(m.column_rank(&ElementSet::new()).unwrap(), 0);
        assert_eq!(m.column_rank(&ElementSet::from([9])), Err(Error::UnknownElement(9)));
    }

    #[test]
    fn p8_dependency_spaces() {
        let m = p8();
        let d = m.dependency_space(&ElementSet::from([1, 4, 5, 8])).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.basis()[0], vec![1, 2, 2, 1]);
        assert_eq!(m.dependency_space(&ElementSet::from([1, 2, 3, 4, 5])).unwrap().dim(), 1);
        let id = LabeledMatrix::identity(gf(7), vec![3, 5, 9]).unwrap();
        assert_eq!(id.dependency_space(&id.label_set()).unwrap().dim(), 0);
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            LabeledMatrix::from_rows(gf(3), vec![1, 2], &[vec![0, 3]]),
            Err(Error::ValueOutOfRange { value: 3, p: 3 })
        ));
        assert_eq!(
            LabeledMatrix::from_rows(gf(3), vec![1, 1], &[vec![0, 1]]),
            Err(Error::DuplicateLabel(1))
        );
        assert_eq!(LabeledMatrix::from_rows(gf(3), vec![0, 1], &[vec![0, 1]]), Err(Error::ZeroLabel));
    }

    #[test]
    fn kernel_vectors_are_dependencies() {
        let m = p8();
        let all = m.label_set();
        let d = m.dependency_space(&all).unwrap();
        assert_eq!(d.dim(), 4);
        for v in d.basis() {
            let lead = v.iter().find(|&&x| x != 0).unwrap();
            assert_eq!(*lead, 1);
            for r in 0..m.rows() {
                let s = (0..m.cols()).fold(0, |acc, c| m.field().add_raw(acc, m.field().mul_raw(v[c], m.get(r, c))));
                assert_eq!(s, 0);
            }
        }
    }
}
