//! Bases of the es-splitting matroid in terms of bases, np-circuits and
//! independent sets of `M`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::matroid::{for_each_k_subset, Limits, VectorMatroid};
use crate::set::ElementSet;
use crate::split::{classified_circuits, element_splitting, es_splitting, p_dependent_unchecked, CircuitTag, SplitSpec};

use super::report::{describe_instance, Suite, VerificationReport};
use super::require_common_alpha;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisFamily {
    /// A basis of the element-splitting matroid, found by enumeration.
    ElementSplitBasis,
    /// `B ∪ γ` with `B` a basis of `M` containing `e`.
    B1,
    /// `B ∪ γ` with `a ∈ B` and `e ∉ cl(B \ a)`.
    B2,
    /// `C ∪ I ∪ γ` with `C` an np-circuit, `|C ∪ I| = r(M)`, rank `r(M) - 1`,
    /// `e ∉ cl(C ∪ I)` and `C ∪ I` not p-dependent.
    B3,
    /// `I ∪ {z, γ}` with `I` independent of size `r(M) - 1` and `e ∉ cl(I)`.
    B4,
}

impl BasisFamily {
    pub fn name(self) -> &'static str {
        match self {
            BasisFamily::ElementSplitBasis => "element-split",
            BasisFamily::B1 => "B1",
            BasisFamily::B2 => "B2",
            BasisFamily::B3 => "B3",
            BasisFamily::B4 => "B4",
        }
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedBasis {
    pub elements: ElementSet,
    pub klass: BasisFamily,
}

pub fn predicted_bases(m: &VectorMatroid, spec: &SplitSpec) -> Result<Vec<PredictedBasis>> {
    predicted_bases_limited(m, spec, &Limits::default())
}

pub fn predicted_bases_limited(
    m: &VectorMatroid,
    spec: &SplitSpec,
    limits: &Limits,
) -> Result<Vec<PredictedBasis>> {
    require_common_alpha(spec)?;
    limits.check_enumeration(m.len() + 2)?;
    let (e, a, z, g) = (spec.e, spec.partner(), spec.z_label, spec.gamma_label);
    let r = m.rank();
    let e_bit = m.mask_of(&ElementSet::from([e]))?;
    let a_bit = m.mask_of(&ElementSet::from([a]))?;
    let spans_e = |mask: u64| m.rank_of_mask(mask | e_bit) == m.rank_of_mask(mask);

    let mut families: BTreeMap<ElementSet, BasisFamily> = BTreeMap::new();
    let mut add = |set: ElementSet, family: BasisFamily| {
        families.entry(set).or_insert(family);
    };

    for b in element_splitting(m, spec)?.bases_limited(limits)? {
        add(b, BasisFamily::ElementSplitBasis);
    }
    let bases_m = m.bases_limited(limits)?;
    for b in bases_m.iter().filter(|b| b.contains(e)) {
        add(b.with(g), BasisFamily::B1);
    }
    for b in bases_m.iter().filter(|b| b.contains(a)) {
        let rest = m.mask_of(b)? & !a_bit;
        if !spans_e(rest) {
            add(b.with(g), BasisFamily::B2);
        }
    }
    let pair = spec.pair();
    for (c, class) in classified_circuits(m, spec, limits)? {
        if class.tag != CircuitTag::NpCircuit || c.len() > r {
            continue;
        }
        let c_mask = m.mask_of(&c)?;
        let others = m.full_mask() & !c_mask;
        let outside: Vec<u64> = (0..m.len()).filter(|&i| others >> i & 1 == 1).map(|i| 1u64 << i).collect();
        let mut found: Vec<ElementSet> = Vec::new();
        let mut err = None;
        for_each_k_subset(outside.len(), r - c.len(), |local| {
            if err.is_some() {
                return;
            }
            let i_mask = outside.iter().enumerate().filter(|(j, _)| local >> j & 1 == 1).fold(0, |acc, (_, b)| acc | b);
            if m.rank_of_mask(i_mask) != i_mask.count_ones() as usize {
                return;
            }
            let u = c_mask | i_mask;
            if m.rank_of_mask(u) + 1 != r || spans_e(u) {
                return;
            }
            let union = m.set_of(u);
            // p-dependence is only defined when the union holds both a and b.
            if pair.is_subset(&union) {
                match p_dependent_unchecked(m, spec, &union, limits) {
                    Ok(true) => return,
                    Ok(false) => {}
                    Err(x) => {
                        err = Some(x);
                        return;
                    }
                }
            }
            found.push(union.with(g));
        });
        if let Some(x) = err {
            return Err(x);
        }
        for s in found {
            add(s, BasisFamily::B3);
        }
    }
    if r >= 1 {
        for i in m.independent_sets_of_size(r - 1, limits)? {
            if !spans_e(m.mask_of(&i)?) {
                add(i.with(z).with(g), BasisFamily::B4);
            }
        }
    }
    let mut out: Vec<PredictedBasis> =
        families.into_iter().map(|(elements, klass)| PredictedBasis { elements, klass }).collect();
    out.sort_by(|x, y| x.elements.cmp(&y.elements));
    Ok(out)
}

pub fn verify_basis_theorem(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    let predicted = predicted_bases(m, spec)?;
    let es = es_splitting(m, spec)?;
    let mut report = VerificationReport::new(Suite::Bases, describe_instance(m, spec));
    if let Some(bad) = predicted.iter().find(|b| b.elements.len() != m.rank() + 1) {
        report.failures.push(alloc::format!("{} from {} has the wrong size", bad.elements, bad.klass));
    }
    report.compare(predicted.into_iter().map(|b| b.elements).collect(), es.bases()?);
    report.notes.push("B4-included".into());
    Ok(report.finish())
}
