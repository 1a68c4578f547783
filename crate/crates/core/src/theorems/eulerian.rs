//! When `M^e` has a circuit decomposition, read off from circuits of `M`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::eulerian::{exact_cover, is_circuit_decomposition};
use crate::matroid::{Limits, VectorMatroid};
use crate::set::ElementSet;
use crate::split::{classified_circuits, es_splitting, CircuitTag, SplitSpec};

use super::report::{describe_instance, Suite, VerificationReport};
use super::require_common_alpha;

/// Circuits `C_np, C_1, ..., C_k` of `M` covering `E(M)`, pairwise disjoint
/// except `C_np ∩ C_1 = {e}`, where `C_np` is an np-circuit through `a` and `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianWitness {
    pub np_circuit: ElementSet,
    pub first: ElementSet,
    pub rest: Vec<ElementSet>,
    /// Found with `e = a`; the characterization only covers `e = b`.
    pub exploratory: bool,
}

/// Searches in canonical order: `C_np`, then `C_1`, then the first exact
/// cover of what remains.
pub fn eulerian_witness(m: &VectorMatroid, spec: &SplitSpec) -> Result<Option<EulerianWitness>> {
    if m.field().order() <= 2 {
        return Err(Error::EulerianTheoremRequiresOddP(m.field().order()));
    }
    if spec.e != spec.b {
        return Err(Error::ERequiresB);
    }
    search(m, spec, false)
}

/// Same search with no restriction on `e` or `p`. Results are marked exploratory when `e = a`.
pub fn eulerian_witness_exploratory(m: &VectorMatroid, spec: &SplitSpec) -> Result<Option<EulerianWitness>> {
    search(m, spec, spec.e != spec.b || m.field().order() <= 2)
}

fn search(m: &VectorMatroid, spec: &SplitSpec, exploratory: bool) -> Result<Option<EulerianWitness>> {
    spec.validate(m)?;
    let limits = Limits::default();
    let classified = classified_circuits(m, spec, &limits)?;
    let masks: Vec<u64> = classified.iter().map(|(c, _)| m.mask_of(c)).collect::<Result<_>>()?;
    let pair = m.mask_of(&spec.pair())?;
    let e_bit = m.mask_of(&ElementSet::from([spec.e]))?;
    let full = m.full_mask();
    for (i, (_, class)) in classified.iter().enumerate() {
        let np = masks[i];
        if class.tag != CircuitTag::NpCircuit || np & pair != pair {
            continue;
        }
        for &c1 in &masks {
            if c1 & np != e_bit {
                continue;
            }
            let used = np | c1;
            let rest = full & !used;
            let candidates: Vec<u64> = masks.iter().copied().filter(|&c| c & used == 0).collect();
            if let Some(chosen) = exact_cover(rest, &candidates) {
                let w = EulerianWitness {
                    np_circuit: m.set_of(np),
                    first: m.set_of(c1),
                    rest: chosen.into_iter().map(|j| m.set_of(candidates[j])).collect(),
                    exploratory,
                };
                debug_assert!(revalidate(m, spec, &w)?);
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn revalidate(m: &VectorMatroid, spec: &SplitSpec, w: &EulerianWitness) -> Result<bool> {
    let mut ok = m.is_circuit(&w.np_circuit)? && m.is_circuit(&w.first)?;
    ok &= spec.pair().is_subset(&w.np_circuit);
    ok &= w.np_circuit.intersection(&w.first) == ElementSet::from([spec.e]);
    let mut covered = w.np_circuit.union(&w.first);
    for c in &w.rest {
        ok &= m.is_circuit(c)? && c.is_disjoint(&covered);
        covered = covered.union(c);
    }
    Ok(ok && covered == m.ground())
}

/// `{C_np ∪ z, (C_1 \ e) ∪ γ, C_2, ..., C_k}`.
pub fn constructed_decomposition(spec: &SplitSpec, w: &EulerianWitness) -> Vec<ElementSet> {
    let mut parts = Vec::with_capacity(w.rest.len() + 2);
    parts.push(w.np_circuit.with(spec.z_label));
    parts.push(w.first.without(spec.e).with(spec.gamma_label));
    parts.extend(w.rest.iter().cloned());
    parts.sort();
    parts
}

pub fn verify_eulerian_theorem(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    require_common_alpha(spec)?;
    let witness = eulerian_witness(m, spec)?;
    let es = es_splitting(m, spec)?;
    let decomposition = es.is_eulerian()?;
    let mut report = VerificationReport::new(Suite::Eulerian, describe_instance(m, spec));
    match (&witness, &decomposition) {
        (Some(_), None) => report.failures.push("witness exists but M^e has no circuit decomposition".into()),
        (None, Some(d)) => report.failures.push(format!(
            "M^e decomposes as {:?} but no witness exists in M",
            d.sorted_sets()
        )),
        _ => {}
    }
    if let Some(w) = &witness {
        let parts = constructed_decomposition(spec, w);
        if !is_circuit_decomposition(&es, &parts)? {
            report.failures.push(format!("constructed decomposition {parts:?} is not a circuit decomposition of M^e"));
        }
        report.notes.push(format!("witness C_np={} C_1={}", w.np_circuit, w.first));
        report.predicted = parts;
    }
    if let Some(d) = decomposition {
        report.oracle = d.sorted_sets();
    }
    Ok(report.finish())
}
