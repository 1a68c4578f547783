//! Circuit decompositions, and the bipartite and Hamiltonian predicates.

use alloc::vec::Vec;

use crate::error::Result;
use crate::matroid::{Circuit, Limits, VectorMatroid};
use crate::set::ElementSet;

/// A partition of the ground set into circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitDecomposition {
    pub parts: Vec<Circuit>,
}

impl CircuitDecomposition {
    /// Parts as plain sets in canonical order.
    pub fn sorted_sets(&self) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = self.parts.iter().map(|c| c.elements().clone()).collect();
        v.sort();
        v
    }
}

/// Checks from first principles that `parts` are pairwise disjoint circuits of `m` covering its ground set.
pub fn is_circuit_decomposition(m: &VectorMatroid, parts: &[ElementSet]) -> Result<bool> {
    let mut seen = ElementSet::new();
    for p in parts {
        if !p.is_disjoint(&seen) || !m.is_circuit(p)? {
            return Ok(false);
        }
        seen = seen.union(p);
    }
    Ok(seen == m.ground())
}

/// First exact cover of `universe` by `candidates`, in candidate order.
///
/// Branches on the lowest uncovered bit and tries the candidates covering
/// it in slice order, so the result is deterministic.
pub(crate) fn exact_cover(universe: u64, candidates: &[u64]) -> Option<Vec<usize>> {
    fn go(universe: u64, covered: u64, candidates: &[u64], chosen: &mut Vec<usize>) -> bool {
        if covered == universe {
            return true;
        }
        let free = universe & !covered;
        let bit = free & free.wrapping_neg();
        for (i, &c) in candidates.iter().enumerate() {
            if c & bit != 0 && c & covered == 0 && c & !universe == 0 {
                chosen.push(i);
                if go(universe, covered | c, candidates, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(universe, 0, candidates, &mut chosen).then_some(chosen)
}

impl VectorMatroid {
    pub fn is_eulerian(&self) -> Result<Option<CircuitDecomposition>> {
        self.eulerian_limited(&Limits::default())
    }

    pub fn eulerian_limited(&self, limits: &Limits) -> Result<Option<CircuitDecomposition>> {
        let circuits = self.circuits_limited(limits)?;
        let masks: Vec<u64> = circuits.iter().map(|c| self.mask_of(c)).collect::<Result<_>>()?;
        let Some(chosen) = exact_cover(self.full_mask(), &masks) else {
            return Ok(None);
        };
        let mut parts: Vec<Circuit> = chosen.into_iter().map(|i| circuits[i].clone()).collect();
        parts.sort();
        Ok(Some(CircuitDecomposition { parts }))
    }

    /// Every circuit has even size.
    pub fn is_bipartite(&self) -> Result<bool> {
        Ok(self.circuits()?.iter().all(|c| c.len() % 2 == 0))
    }

    /// First spanning circuit (size r + 1) in canonical order.
    pub fn is_hamiltonian(&self) -> Result<Option<Circuit>> {
        let target = self.rank() + 1;
        Ok(self.circuits()?.into_iter().find(|c| c.len() == target))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn exact_cover_finds_first_solution() {
        // universe {0,1,2,3}; candidates in order.
        let cands = [0b0011, 0b0110, 0b1100, 0b1001];
        assert_eq!(exact_cover(0b1111, &cands), Some(vec![0, 2]));
        assert_eq!(exact_cover(0b0111, &[0b0011, 0b0110]), None);
        assert_eq!(exact_cover(0, &[]), Some(vec![]));
    }
}
