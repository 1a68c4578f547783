//! Circuits of the es-splitting matroid in terms of circuits of `M`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::matroid::{Limits, VectorMatroid};
use crate::set::ElementSet;
use crate::split::{classified_circuits, element_splitting, es_splitting, CircuitTag, SplitSpec};

use super::report::{describe_instance, Suite, VerificationReport};
use super::require_common_alpha;

/// Family a predicted circuit was built from. Declaration order is the
/// tie-break when one set arises from two families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircuitFamily {
    /// A circuit of the element-splitting matroid, found by enumeration.
    ElementSplit,
    /// `C ∪ {e, γ}` for an np-circuit `C` avoiding `e`.
    C4,
    /// `(C \ e) ∪ γ` for an np-circuit through `e` avoiding `a`.
    C5,
    /// `(C \ e) ∪ {z, γ}` for a p-circuit `C` (which contains `e`).
    C6,
    /// `C ∪ γ` for an np-circuit through both `e` and `a`.
    C7,
    /// `(C \ e) ∪ {z, γ}` for an np-circuit through both `e` and `a`.
    C8,
    /// `{e, z, γ}`.
    Delta,
}

impl CircuitFamily {
    pub fn name(self) -> &'static str {
        match self {
            CircuitFamily::ElementSplit => "element-split",
            CircuitFamily::C4 => "C4",
            CircuitFamily::C5 => "C5",
            CircuitFamily::C6 => "C6",
            CircuitFamily::C7 => "C7",
            CircuitFamily::C8 => "C8",
            CircuitFamily::Delta => "Delta",
        }
    }
}

impl fmt::Display for CircuitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedCircuit {
    pub elements: ElementSet,
    pub klass: CircuitFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitPrediction {
    /// Inclusion-minimal members of the union of all families, canonically sorted.
    pub circuits: Vec<PredictedCircuit>,
    /// Family members that properly contain another member. These are
    /// dependent in `M^e` but not circuits.
    pub non_minimal: Vec<PredictedCircuit>,
}

impl CircuitPrediction {
    pub fn sets(&self) -> Vec<ElementSet> {
        self.circuits.iter().map(|c| c.elements.clone()).collect()
    }

    pub fn of_family(&self, family: CircuitFamily) -> Vec<ElementSet> {
        self.circuits.iter().filter(|c| c.klass == family).map(|c| c.elements.clone()).collect()
    }
}

pub fn predicted_circuits(m: &VectorMatroid, spec: &SplitSpec) -> Result<CircuitPrediction> {
    predicted_circuits_limited(m, spec, &Limits::default())
}

pub fn predicted_circuits_limited(
    m: &VectorMatroid,
    spec: &SplitSpec,
    limits: &Limits,
) -> Result<CircuitPrediction> {
    require_common_alpha(spec)?;
    limits.check_enumeration(m.len() + 2)?;
    let (e, a, z, g) = (spec.e, spec.partner(), spec.z_label, spec.gamma_label);
    let classified = classified_circuits(m, spec, limits)?;

    let mut families: BTreeMap<ElementSet, CircuitFamily> = BTreeMap::new();
    let mut add = |set: ElementSet, family: CircuitFamily| {
        families.entry(set).or_insert(family);
    };

    // The element-splitting circuits come from the constructed matrix.
    for c in element_splitting(m, spec)?.circuits_limited(limits)? {
        add(c.into_elements(), CircuitFamily::ElementSplit);
    }
    let np = |tag: CircuitTag| tag == CircuitTag::NpCircuit;
    for (c, class) in &classified {
        if np(class.tag) && !c.contains(e) {
            add(c.with(e).with(g), CircuitFamily::C4);
        }
    }
    for (c, class) in &classified {
        if np(class.tag) && c.contains(e) && !c.contains(a) {
            add(c.without(e).with(g), CircuitFamily::C5);
        }
    }
    for (c, class) in &classified {
        if class.tag == CircuitTag::PCircuit && c.contains(e) {
            add(c.without(e).with(z).with(g), CircuitFamily::C6);
        }
    }
    for (c, class) in &classified {
        if np(class.tag) && c.contains(e) && c.contains(a) {
            add(c.with(g), CircuitFamily::C7);
        }
    }
    for (c, class) in &classified {
        if np(class.tag) && c.contains(e) && c.contains(a) {
            add(c.without(e).with(z).with(g), CircuitFamily::C8);
        }
    }
    add(ElementSet::from([e, z, g]), CircuitFamily::Delta);

    let mut all: Vec<PredictedCircuit> =
        families.into_iter().map(|(elements, klass)| PredictedCircuit { elements, klass }).collect();
    all.sort_by(|x, y| x.elements.cmp(&y.elements));

    let mut circuits: Vec<PredictedCircuit> = Vec::new();
    let mut non_minimal = Vec::new();
    for cand in all {
        // Sorted by size, so any proper subset among the candidates is already kept.
        if circuits.iter().any(|c| c.elements.is_subset(&cand.elements)) {
            non_minimal.push(cand);
        } else {
            circuits.push(cand);
        }
    }
    Ok(CircuitPrediction { circuits, non_minimal })
}

pub fn verify_circuit_theorem(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    let prediction = predicted_circuits(m, spec)?;
    verify_circuit_prediction(m, spec, &prediction)
}

/// Compares an arbitrary prediction with the circuits enumerated from `M^e`.
pub fn verify_circuit_prediction(
    m: &VectorMatroid,
    spec: &SplitSpec,
    prediction: &CircuitPrediction,
) -> Result<VerificationReport> {
    let es = es_splitting(m, spec)?;
    let oracle: Vec<ElementSet> = es.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    let mut report = VerificationReport::new(Suite::Circuits, describe_instance(m, spec));
    report.compare(prediction.sets(), oracle);
    if !prediction.non_minimal.is_empty() {
        report.notes.push(format!(
            "{} family members were dependent but not minimal and were pruned",
            prediction.non_minimal.len()
        ));
    }
    if m.field().order() == 2 {
        report.notes.push("p = 2: informational run".into());
    }
    Ok(report.finish())
}
