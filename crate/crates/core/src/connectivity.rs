//! Tutte connectivity by exhaustive bipartition scan.

use crate::error::{Error, Result};
use crate::matroid::{Limits, VectorMatroid};
use crate::set::ElementSet;

/// A k-separation `{S, T}`: a partition of the ground set with
/// `|S|, |T| >= k` and `r(S) + r(T) - r(M) < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side_s: ElementSet,
    pub side_t: ElementSet,
    pub order: usize,
}

impl VectorMatroid {
    pub fn is_n_connected(&self, n: usize) -> Result<bool> {
        Ok(self.separation_below(n, &Limits::default())?.is_none())
    }

    /// Smallest-order k-separation with `1 <= k < n`, if any.
    ///
    /// The side containing the lowest label is always `side_s`; within an
    /// order the first partition found in mask order is returned.
    pub fn separation_below(&self, n: usize, limits: &Limits) -> Result<Option<Separation>> {
        if n < 2 {
            return Err(Error::PreconditionViolated("connectivity order must be at least 2"));
        }
        let size = self.len();
        limits.check_partition(size)?;
        if size < 2 {
            return Ok(None);
        }
        let full = self.full_mask();
        let r = self.rank();
        let labels = self.matrix().labels();
        let anchor = (0..size).min_by_key(|&c| labels[c]).expect("nonempty ground");
        let anchor_bit = 1u64 << anchor;
        let others: u64 = full & !anchor_bit;
        for k in 1..n {
            // Enumerate S = anchor ∪ (subset of the others), T nonempty.
            let mut sub = others;
            loop {
                let s = sub | anchor_bit;
                let t = full & !s;
                let (ss, ts) = (s.count_ones() as usize, t.count_ones() as usize);
                if t != 0 && ss >= k && ts >= k {
                    let lambda = self.rank_of_mask(s) + self.rank_of_mask(t);
                    if lambda < r + k {
                        return Ok(Some(Separation {
                            side_s: self.set_of(s),
                            side_t: self.set_of(t),
                            order: k,
                        }));
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
        }
        Ok(None)
    }
}
