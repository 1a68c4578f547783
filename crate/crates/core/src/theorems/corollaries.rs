//! Cocircuit, connectivity, Hamiltonian and lift statements.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::{Limits, VectorMatroid};
use crate::set::ElementSet;
use crate::split::{classified_circuits, element_splitting, es_splitting, splitting, CircuitTag, SplitSpec};

use super::report::{describe_instance, Suite, VerificationReport};
use super::require_common_alpha;

/// `{a, e, z}` is a cocircuit of `M^e` when `M` is coloopless.
pub fn verify_cocircuit_corollary(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    if let Some(&x) = m.validate().coloops.as_slice().first() {
        return Err(Error::ColoopPresent(x));
    }
    let es = es_splitting(m, spec)?;
    let target = ElementSet::from([spec.partner(), spec.e, spec.z_label]);
    let cocircuits: Vec<ElementSet> = es.cocircuits()?.into_iter().map(|c| c.into_elements()).collect();
    let mut report = VerificationReport::new(Suite::Cocircuit, describe_instance(m, spec));
    if cocircuits.binary_search(&target).is_err() {
        report.failures.push(format!("{target} is not a cocircuit of M^e"));
    }
    report.predicted = alloc::vec![target];
    Ok(report.finish())
}

/// Connectivity is preserved; 3-connectivity too once `|E| > 4`.
pub fn verify_connectivity(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    let limits = Limits::default();
    let instance = describe_instance(m, spec);
    if let Some(sep) = m.separation_below(2, &limits)? {
        return Ok(VerificationReport::not_applicable(
            Suite::Connectivity,
            instance,
            if sep.order == 1 { "hypothesis unmet: M is not connected" } else { "hypothesis unmet" },
        ));
    }
    let es = es_splitting(m, spec)?;
    let mut report = VerificationReport::new(Suite::Connectivity, instance);
    if let Some(sep) = es.separation_below(2, &limits)? {
        report.failures.push(format!("M^e has a 1-separation {} | {}", sep.side_s, sep.side_t));
    }
    if m.len() <= 4 {
        report.notes.push("3-connectivity hypothesis unmet: |E| <= 4".into());
    } else if m.separation_below(3, &limits)?.is_some() {
        report.notes.push("3-connectivity hypothesis unmet: M is not 3-connected".into());
    } else if let Some(sep) = es.separation_below(3, &limits)? {
        report.failures.push(format!(
            "M^e has a {}-separation {} | {}",
            sep.order, sep.side_s, sep.side_t
        ));
    }
    Ok(report.finish())
}

/// An np spanning circuit of `M` and the spanning circuits it yields in `M^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianWitness {
    pub np_circuit: ElementSet,
    pub with_z: ElementSet,
    /// `C_np ∪ gamma`, present when both `a` and `e` lie in `C_np`.
    pub with_gamma: Option<ElementSet>,
}

fn witnesses(m: &VectorMatroid, spec: &SplitSpec) -> Result<Vec<HamiltonianWitness>> {
    let target = m.rank() + 1;
    let both = ElementSet::from([spec.partner(), spec.e]);
    Ok(classified_circuits(m, spec, &Limits::default())?
        .into_iter()
        .filter(|(c, class)| class.tag == CircuitTag::NpCircuit && c.len() == target)
        .map(|(c, _)| {
            let c = c.into_elements();
            HamiltonianWitness {
                with_z: c.with(spec.z_label),
                with_gamma: both.is_subset(&c).then(|| c.with(spec.gamma_label)),
                np_circuit: c,
            }
        })
        .collect())
}

/// First np spanning circuit in canonical order, with its images in `M^e`.
pub fn hamiltonian_witness(m: &VectorMatroid, spec: &SplitSpec) -> Result<Option<HamiltonianWitness>> {
    spec.validate(m)?;
    require_common_alpha(spec)?;
    let w = witnesses(m, spec)?.into_iter().next();
    if let Some(w) = &w {
        let es = es_splitting(m, spec)?;
        debug_assert!(es.is_circuit(&w.with_z)? && w.with_z.len() == es.rank() + 1);
    }
    Ok(w)
}

/// Every np spanning circuit of `M` gives spanning circuits of `M^e`.
/// Nothing is claimed when there is none.
pub fn verify_hamiltonian(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    spec.validate(m)?;
    require_common_alpha(spec)?;
    let instance = describe_instance(m, spec);
    let all = witnesses(m, spec)?;
    if all.is_empty() {
        return Ok(VerificationReport::not_applicable(Suite::Hamiltonian, instance, "no np spanning circuit"));
    }
    let es = es_splitting(m, spec)?;
    let target = es.rank() + 1;
    let mut report = VerificationReport::new(Suite::Hamiltonian, instance);
    for w in &all {
        for s in core::iter::once(&w.with_z).chain(w.with_gamma.as_ref()) {
            if !es.is_circuit(s)? || s.len() != target {
                report.failures.push(format!("{s} is not a spanning circuit of M^e"));
            }
            report.predicted.push(s.clone());
        }
    }
    report.notes.push(format!("{} np spanning circuits", all.len()));
    Ok(report.finish())
}

/// `M' \ z` is the splitting matrix and `M' / z` has the circuits of `M`.
pub fn verify_lift(m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    let elt = element_splitting(m, spec)?;
    let split = splitting(m, spec)?;
    let z = ElementSet::from([spec.z_label]);
    let mut report = VerificationReport::new(Suite::Lift, describe_instance(m, spec));
    if elt.delete(&z)?.matrix() != split.matrix() {
        report.failures.push("M' \\ z differs from the splitting matrix".into());
    }
    let contracted: Vec<ElementSet> = elt.contract(&z)?.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    let original: Vec<ElementSet> = m.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    report.compare(contracted, original);
    Ok(report.finish())
}
