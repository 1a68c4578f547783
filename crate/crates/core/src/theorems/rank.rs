//! The rank function of `M^e` on sets `X`, `X ∪ z`, `X ∪ γ` and
//! `X ∪ {z, γ}` with `X ⊆ E(M)`, expressed through the rank function of `M`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matroid::{Limits, VectorMatroid};
use crate::set::ElementSet;
use crate::split::{classified_circuits, es_splitting, CircuitTag, SplitSpec};

use super::report::{describe_instance, Suite, VerificationReport};
use super::require_common_alpha;

/// Which new elements are added to `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankCase {
    Plain,
    WithZ,
    WithGamma,
    WithZGamma,
}

impl RankCase {
    pub const ALL: [RankCase; 4] = [RankCase::Plain, RankCase::WithZ, RankCase::WithGamma, RankCase::WithZGamma];

    pub fn from_flags(include_z: bool, include_gamma: bool) -> Self {
        match (include_z, include_gamma) {
            (false, false) => RankCase::Plain,
            (true, false) => RankCase::WithZ,
            (false, true) => RankCase::WithGamma,
            (true, true) => RankCase::WithZGamma,
        }
    }

    pub fn flags(self) -> (bool, bool) {
        match self {
            RankCase::Plain => (false, false),
            RankCase::WithZ => (true, false),
            RankCase::WithGamma => (false, true),
            RankCase::WithZGamma => (true, true),
        }
    }
}

impl fmt::Display for RankCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankCase::Plain => "X",
            RankCase::WithZ => "X+z",
            RankCase::WithGamma => "X+gamma",
            RankCase::WithZGamma => "X+z+gamma",
        })
    }
}

/// A set where the closed form and the matrix rank disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMismatch {
    pub x: ElementSet,
    pub case: RankCase,
    pub predicted: usize,
    pub oracle: usize,
    /// `X ∪ γ` with `a ∈ X`, `e ∉ X`, `X` free of np-circuits and `X ∪ e`
    /// holding an np-circuit through `e`. The `X ∪ γ` formula's first
    /// clause requires `a ∉ X` there, so the case falls to "otherwise".
    pub in_known_overlap: bool,
}

impl fmt::Display for RankMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r'({} {}) predicted {} but matrix gives {}", self.x, self.case, self.predicted, self.oracle)?;
        if self.in_known_overlap {
            f.write_str(" [gamma clause overlap]")?;
        }
        Ok(())
    }
}

/// Closed-form rank predictor with the np-circuits of `M` precomputed.
pub struct RankPredictor<'a> {
    m: &'a VectorMatroid,
    np_masks: Vec<u64>,
    e_bit: u64,
    a_bit: u64,
}

impl<'a> RankPredictor<'a> {
    pub fn new(m: &'a VectorMatroid, spec: &SplitSpec) -> Result<Self> {
        Self::with_limits(m, spec, &Limits::default())
    }

    pub fn with_limits(m: &'a VectorMatroid, spec: &SplitSpec, limits: &Limits) -> Result<Self> {
        require_common_alpha(spec)?;
        spec.validate(m)?;
        let np_masks = classified_circuits(m, spec, limits)?
            .into_iter()
            .filter(|(_, class)| class.tag == CircuitTag::NpCircuit)
            .map(|(c, _)| m.mask_of(&c))
            .collect::<Result<_>>()?;
        Ok(Self {
            m,
            np_masks,
            e_bit: m.mask_of(&ElementSet::from([spec.e]))?,
            a_bit: m.mask_of(&ElementSet::from([spec.partner()]))?,
        })
    }

    fn contains_np(&self, x: u64) -> bool {
        self.np_masks.iter().any(|&c| x & c == c)
    }

    fn spans_e(&self, x: u64) -> bool {
        self.m.rank_of_mask(x | self.e_bit) == self.m.rank_of_mask(x)
    }

    /// Predicted `r'` for a mask over the columns of `M`.
    pub fn predict_mask(&self, x: u64, case: RankCase) -> usize {
        let r = self.m.rank_of_mask(x);
        match case {
            RankCase::Plain => r + usize::from(self.contains_np(x)),
            RankCase::WithZ => r + 1,
            RankCase::WithGamma => {
                // An np-circuit in X is tested first; see `RankMismatch::in_known_overlap`.
                let spans = self.spans_e(x);
                if self.contains_np(x) {
                    if spans {
                        r + 1
                    } else {
                        r + 2
                    }
                } else if x & (self.a_bit | self.e_bit) == 0 && spans {
                    r
                } else {
                    r + 1
                }
            }
            RankCase::WithZGamma => {
                if self.spans_e(x) {
                    r + 1
                } else {
                    r + 2
                }
            }
        }
    }

    pub fn predict(&self, x: &ElementSet, case: RankCase) -> Result<usize> {
        Ok(self.predict_mask(self.m.mask_of(x)?, case))
    }

    pub(crate) fn in_overlap(&self, x: u64, case: RankCase) -> bool {
        if case != RankCase::WithGamma || x & self.a_bit == 0 || x & self.e_bit != 0 || self.contains_np(x) {
            return false;
        }
        let with_e = x | self.e_bit;
        self.np_masks.iter().any(|&c| c & self.e_bit != 0 && with_e & c == c)
    }
}

pub fn predicted_rank(
    m: &VectorMatroid,
    spec: &SplitSpec,
    x: &ElementSet,
    include_z: bool,
    include_gamma: bool,
) -> Result<usize> {
    for l in x.iter() {
        if !m.contains(l) {
            return Err(Error::UnknownElement(l));
        }
    }
    RankPredictor::new(m, spec)?.predict(x, RankCase::from_flags(include_z, include_gamma))
}

/// Compares the closed form with the matrix rank for every `X ⊆ E(M)` and every case.
pub fn verify_rank_theorem(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    let limits = Limits::default();
    limits.check_partition(m.len())?;
    let predictor = RankPredictor::with_limits(m, spec, &limits)?;
    let es = es_splitting(m, spec)?;
    let n = m.len();
    let z_bit = 1u64 << n;
    let g_bit = 1u64 << (n + 1);
    let mut report = VerificationReport::new(Suite::Rank, describe_instance(m, spec));
    for x in 0..=m.full_mask() {
        for case in RankCase::ALL {
            let (wz, wg) = case.flags();
            let es_mask = x | if wz { z_bit } else { 0 } | if wg { g_bit } else { 0 };
            let oracle = es.rank_of_mask(es_mask);
            let predicted = predictor.predict_mask(x, case);
            if oracle != predicted {
                report.rank_mismatches.push(RankMismatch {
                    x: m.set_of(x),
                    case,
                    predicted,
                    oracle,
                    in_known_overlap: predictor.in_overlap(x, case),
                });
            }
        }
    }
    report.rank_mismatches.sort_by(|p, q| p.x.cmp(&q.x).then(p.case.cmp(&q.case)));
    let overlaps = report.rank_mismatches.iter().filter(|r| r.in_known_overlap).count();
    if overlaps > 0 {
        let smallest = report.rank_mismatches.iter().find(|r| r.in_known_overlap).expect("counted");
        report.notes.push(alloc::format!(
            "{overlaps} X+gamma mismatches in the gamma clause overlap; smallest: {smallest}"
        ));
    }
    Ok(report.finish())
}
