use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::error::Result;
use crate::matroid::VectorMatroid;
use crate::set::ElementSet;
use crate::split::SplitSpec;

use super::rank::RankMismatch;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Circuits,
    Bases,
    Rank,
    Cocircuit,
    Connectivity,
    Eulerian,
    Hamiltonian,
    Lift,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Circuits,
        Suite::Bases,
        Suite::Rank,
        Suite::Cocircuit,
        Suite::Connectivity,
        Suite::Eulerian,
        Suite::Hamiltonian,
        Suite::Lift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Circuits => "circuits",
            Suite::Bases => "bases",
            Suite::Rank => "rank",
            Suite::Cocircuit => "cocircuit",
            Suite::Connectivity => "connectivity",
            Suite::Eulerian => "eulerian",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Lift => "lift",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Holds except on cases already tracked as a known deviation (listed in the notes).
    KnownDeviation,
    Fail,
    /// The hypotheses of the statement do not hold for this instance.
    NotApplicable(String),
}

impl Verdict {
    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::KnownDeviation => f.write_str("pass (known deviation)"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::NotApplicable(why) => write!(f, "not applicable ({why})"),
        }
    }
}

/// Outcome of checking one predicted family (or one assertion) against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub instance: String,
    pub predicted: Vec<ElementSet>,
    pub oracle: Vec<ElementSet>,
    /// In the oracle but not predicted.
    pub missing: Vec<ElementSet>,
    /// Predicted but not in the oracle.
    pub spurious: Vec<ElementSet>,
    /// Failed assertions that are not set comparisons.
    pub failures: Vec<String>,
    pub rank_mismatches: Vec<RankMismatch>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    /// Smallest offending set or case, when the verdict is not a plain pass.
    pub counterexample: Option<String>,
}

impl VerificationReport {
    pub(crate) fn new(suite: Suite, instance: String) -> Self {
        Self {
            suite,
            instance,
            predicted: Vec::new(),
            oracle: Vec::new(),
            missing: Vec::new(),
            spurious: Vec::new(),
            failures: Vec::new(),
            rank_mismatches: Vec::new(),
            notes: Vec::new(),
            verdict: Verdict::Pass,
            counterexample: None,
        }
    }

    pub fn not_applicable(suite: Suite, instance: String, why: &str) -> Self {
        let mut r = Self::new(suite, instance);
        r.verdict = Verdict::NotApplicable(why.into());
        r
    }

    /// Fills `missing` and `spurious` from two canonically sorted families.
    pub(crate) fn compare(&mut self, mut predicted: Vec<ElementSet>, mut oracle: Vec<ElementSet>) {
        predicted.sort();
        predicted.dedup();
        oracle.sort();
        oracle.dedup();
        self.missing = oracle.iter().filter(|s| predicted.binary_search(s).is_err()).cloned().collect();
        self.spurious = predicted.iter().filter(|s| oracle.binary_search(s).is_err()).cloned().collect();
        self.predicted = predicted;
        self.oracle = oracle;
    }

    /// Derives the verdict from the recorded discrepancies, unless the
    /// report was already marked not applicable.
    pub(crate) fn finish(mut self) -> Self {
        if matches!(self.verdict, Verdict::NotApplicable(_)) {
            return self;
        }
        let unexplained = self.rank_mismatches.iter().filter(|m| !m.in_known_overlap).count();
        let explained = self.rank_mismatches.len() - unexplained;
        self.verdict = if !self.missing.is_empty()
            || !self.spurious.is_empty()
            || !self.failures.is_empty()
            || unexplained > 0
        {
            Verdict::Fail
        } else if explained > 0 {
            Verdict::KnownDeviation
        } else {
            Verdict::Pass
        };
        self.counterexample = self
            .missing
            .iter()
            .chain(&self.spurious)
            .min()
            .map(|s| format!("{s}"))
            .or_else(|| self.failures.first().cloned())
            .or_else(|| {
                let mut ms: Vec<&RankMismatch> = self.rank_mismatches.iter().collect();
                ms.sort_by(|x, y| x.x.cmp(&y.x));
                ms.first().map(|m| format!("{m}"))
            });
        self
    }

    pub fn passed(&self) -> bool {
        !self.verdict.is_failure()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {} :: {}", self.suite, self.verdict, self.instance)?;
        if !self.predicted.is_empty() || !self.oracle.is_empty() {
            writeln!(f, "  predicted {} / oracle {}", self.predicted.len(), self.oracle.len())?;
        }
        write_family(f, "missing", &self.missing)?;
        write_family(f, "spurious", &self.spurious)?;
        for x in &self.failures {
            writeln!(f, "  failure: {x}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn write_family(f: &mut fmt::Formatter<'_>, name: &str, fam: &[ElementSet]) -> fmt::Result {
    if fam.is_empty() {
        return Ok(());
    }
    write!(f, "  {name}:")?;
    for s in fam {
        write!(f, " {s}")?;
    }
    writeln!(f)
}

/// Compact, deterministic description of an instance.
pub fn describe_instance(m: &VectorMatroid, spec: &SplitSpec) -> String {
    let mat = m.matrix();
    let mut s = format!(
        "GF({}) E={} a={} b={} e={} alpha={}/{} A=[",
        m.field().order(),
        m.ground(),
        spec.a,
        spec.b,
        spec.e,
        spec.alpha_row,
        spec.alpha_z
    );
    for r in 0..mat.rows() {
        if r > 0 {
            s.push(';');
        }
        for (i, v) in mat.row(r).iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{v}");
        }
    }
    s.push(']');
    s
}

/// Runs one suite on one instance.
pub fn run_suite(suite: Suite, m: &VectorMatroid, spec: &SplitSpec) -> Result<VerificationReport> {
    match suite {
        Suite::Circuits => super::verify_circuit_theorem(m, spec),
        Suite::Bases => super::verify_basis_theorem(m, spec),
        Suite::Rank => super::verify_rank_theorem(m, spec),
        Suite::Cocircuit => super::verify_cocircuit_corollary(m, spec),
        Suite::Connectivity => super::verify_connectivity(m, spec),
        Suite::Eulerian => super::verify_eulerian_theorem(m, spec),
        Suite::Hamiltonian => super::verify_hamiltonian(m, spec),
        Suite::Lift => super::verify_lift(m, spec),
    }
}

/// Aggregate over many instances of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub instances: usize,
    pub passed: usize,
    pub known_deviation: usize,
    pub failed: usize,
    pub not_applicable: usize,
    /// Smallest failing instance by `|E|`, then `p`, then seed order.
    pub smallest_failure: Option<(usize, u32, VerificationReport)>,
    /// Smallest instance showing a known deviation, same ordering.
    pub smallest_deviation: Option<(usize, u32, VerificationReport)>,
}

impl SuiteSummary {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            instances: 0,
            passed: 0,
            known_deviation: 0,
            failed: 0,
            not_applicable: 0,
            smallest_failure: None,
            smallest_deviation: None,
        }
    }

    pub fn record(&mut self, ground_size: usize, p: u32, report: VerificationReport) {
        self.instances += 1;
        let slot = match report.verdict {
            Verdict::Pass => {
                self.passed += 1;
                None
            }
            Verdict::NotApplicable(_) => {
                self.not_applicable += 1;
                None
            }
            Verdict::KnownDeviation => {
                self.known_deviation += 1;
                Some(&mut self.smallest_deviation)
            }
            Verdict::Fail => {
                self.failed += 1;
                Some(&mut self.smallest_failure)
            }
        };
        if let Some(slot) = slot {
            let better = match slot {
                None => true,
                Some((n, q, _)) => (ground_size, p) < (*n, *q),
            };
            if better {
                *slot = Some((ground_size, p, report));
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances, {} pass, {} known-deviation, {} not-applicable, {} fail",
            self.suite, self.instances, self.passed, self.known_deviation, self.not_applicable, self.failed
        )
    }
}
