//! Seeded instance generator for property runs.

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::LabeledMatrix;
use crate::matroid::{Limits, VectorMatroid};
use crate::set::Label;
use crate::split::SplitSpec;

pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

const REJECTION_BUDGET: usize = 10_000;

/// Simple, coloopless `rows x cols` matroid over GF(p) with labels `1..=cols`
/// and a spec with `e = b` and one shared random constant.
pub fn random_instance(seed: u64, p: u32, rows: usize, cols: usize) -> Result<(VectorMatroid, SplitSpec)> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::Unsupported("random instances need p in {2, 3, 5, 7}"));
    }
    Limits::default().check_enumeration(cols + 2)?;
    if cols < 2 || rows == 0 {
        return Err(Error::Shape("random instances need at least one row and two columns".into()));
    }
    let field = PrimeField::new(p)?;
    let labels: Vec<Label> = (1..=cols as Label).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let entries: Vec<u32> = (0..rows * cols).map(|_| rng.random_range(0..p)).collect();
        let m = VectorMatroid::new(LabeledMatrix::new(field, rows, cols, entries, labels.clone())?);
        let v = m.validate();
        if !v.is_simple() || !v.is_coloopless() {
            continue;
        }
        let a = rng.random_range(1..=cols as Label);
        let mut b = rng.random_range(1..cols as Label);
        if b >= a {
            b += 1;
        }
        let alpha = rng.random_range(1..p);
        let spec = SplitSpec::new(&m, a, b, b)?.with_alphas(alpha, alpha);
        return Ok((m, spec));
    }
    Err(Error::RejectionBudgetExhausted(REJECTION_BUDGET))
}

/// Dimensions drawn for one property-run seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceShape {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
}

impl InstanceShape {
    /// `p` in {3, 5, 7}, `4 <= cols <= 7`, and `2 <= rows <= min(4, cols - 1)`
    /// with enough projective points for `cols` distinct columns.
    pub fn from_seed(seed: u64) -> Self {
        Self::sample(seed, &[3, 5, 7], 4..=7).expect("default shape range is feasible")
    }

    /// Same draw over caller-chosen primes and column counts.
    pub fn sample(seed: u64, primes: &[u32], cols: RangeInclusive<usize>) -> Result<Self> {
        if primes.is_empty() || primes.iter().any(|p| !SUPPORTED_PRIMES.contains(p)) {
            return Err(Error::Unsupported("random instances need p in {2, 3, 5, 7}"));
        }
        if cols.is_empty() || *cols.start() < 3 {
            return Err(Error::Shape("random instances need at least three columns".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5a9e);
        let p = primes[rng.random_range(0..primes.len())];
        let cols = rng.random_range(cols);
        let feasible: Vec<usize> = (2..=4.min(cols - 1)).filter(|&r| points(p, r) >= cols).collect();
        if feasible.is_empty() {
            return Err(Error::Shape(format!("no simple rank <= 4 matroid on {cols} elements over GF({p})")));
        }
        let rows = feasible[rng.random_range(0..feasible.len())];
        Ok(InstanceShape { p, rows, cols })
    }
}

fn points(p: u32, r: usize) -> usize {
    ((p as usize).pow(r as u32) - 1) / (p as usize - 1)
}

pub fn property_instance(seed: u64) -> Result<(VectorMatroid, SplitSpec)> {
    let s = InstanceShape::from_seed(seed);
    random_instance(seed, s.p, s.rows, s.cols)
}
