//! Closed-form characterizations of the es-splitting matroid, each paired
//! with a verifier that recomputes the same family by brute force from the
//! es-split matrix.
//!
//! Where the characterizations speak of "a" and "e", `e` is the element
//! copied by `gamma` and "a" is its partner in the split pair, so the
//! families are well defined whichever of the two elements `e` names.

mod bases;
mod circuits;
mod corollaries;
mod eulerian;
mod random;
mod rank;
mod report;

pub use bases::{predicted_bases, predicted_bases_limited, verify_basis_theorem, BasisFamily, PredictedBasis};
pub use circuits::{
    predicted_circuits, predicted_circuits_limited, verify_circuit_prediction, verify_circuit_theorem,
    CircuitFamily, CircuitPrediction, PredictedCircuit,
};
pub use corollaries::{
    hamiltonian_witness, verify_cocircuit_corollary, verify_connectivity, verify_hamiltonian, verify_lift,
    HamiltonianWitness,
};
pub use eulerian::{
    constructed_decomposition, eulerian_witness, eulerian_witness_exploratory, verify_eulerian_theorem,
    EulerianWitness,
};
pub use random::{property_instance, random_instance, InstanceShape, SUPPORTED_PRIMES};
pub use rank::{predicted_rank, verify_rank_theorem, RankCase, RankMismatch, RankPredictor};
pub use report::{describe_instance, run_suite, Suite, SuiteSummary, Verdict, VerificationReport};

use crate::error::{Error, Result};
use crate::split::SplitSpec;

/// The characterizations treat `gamma` as a copy of `e` with a zero last
/// coordinate, which needs one shared constant for the new row and for `z`.
pub(crate) fn require_common_alpha(spec: &SplitSpec) -> Result<()> {
    if spec.alpha_row != spec.alpha_z {
        return Err(Error::UnequalAlphas { row: spec.alpha_row, z: spec.alpha_z });
    }
    Ok(())
}
