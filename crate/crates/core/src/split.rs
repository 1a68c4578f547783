//! Splitting, element splitting and es-splitting, plus the classification
//! of circuits relative to the split pair `{a, b}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matroid::{Circuit, Limits, VectorMatroid};
use crate::set::{ElementSet, Label};

/// Parameters of a split: the pair `{a, b}`, the element `e` that `gamma`
/// copies, the nonzero constants of the new row and of `z`, and the labels
/// given to the new columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitSpec {
    pub a: Label,
    pub b: Label,
    pub e: Label,
    pub alpha_row: u32,
    pub alpha_z: u32,
    pub z_label: Label,
    pub gamma_label: Label,
    /// Skip the coloop precondition. Off by default.
    pub allow_coloops: bool,
}

impl SplitSpec {
    /// A spec for `m` with both constants 1, `z = max(E) + 1` and `gamma = max(E) + 2`.
    pub fn new(m: &VectorMatroid, a: Label, b: Label, e: Label) -> Result<Self> {
        let top = m.ground().largest().unwrap_or(0);
        let spec = Self {
            a,
            b,
            e,
            alpha_row: 1,
            alpha_z: 1,
            z_label: top + 1,
            gamma_label: top + 2,
            allow_coloops: false,
        };
        spec.validate(m)?;
        Ok(spec)
    }

    pub fn with_alphas(mut self, alpha_row: u32, alpha_z: u32) -> Self {
        self.alpha_row = alpha_row;
        self.alpha_z = alpha_z;
        self
    }

    pub fn with_labels(mut self, z_label: Label, gamma_label: Label) -> Self {
        self.z_label = z_label;
        self.gamma_label = gamma_label;
        self
    }

    pub fn allowing_coloops(mut self) -> Self {
        self.allow_coloops = true;
        self
    }

    /// The element of `{a, b}` other than `e`.
    pub fn partner(&self) -> Label {
        if self.e == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn pair(&self) -> ElementSet {
        ElementSet::from([self.a, self.b])
    }

    pub fn validate(&self, m: &VectorMatroid) -> Result<()> {
        if self.a == self.b {
            return Err(Error::InvalidSpec("a and b must differ"));
        }
        if self.e != self.a && self.e != self.b {
            return Err(Error::InvalidSpec("e must be a or b"));
        }
        for x in [self.a, self.b] {
            if !m.contains(x) {
                return Err(Error::UnknownElement(x));
            }
        }
        let p = m.field().order();
        for alpha in [self.alpha_row, self.alpha_z] {
            if alpha >= p {
                return Err(Error::ValueOutOfRange { value: alpha.into(), p });
            }
            if alpha == 0 {
                return Err(Error::InvalidSpec("alpha must be nonzero"));
            }
        }
        if self.z_label == 0 || self.gamma_label == 0 {
            return Err(Error::ZeroLabel);
        }
        if self.z_label == self.gamma_label {
            return Err(Error::InvalidSpec("z and gamma need distinct labels"));
        }
        for x in [self.z_label, self.gamma_label] {
            if m.contains(x) {
                return Err(Error::LabelCollision(x));
            }
        }
        Ok(())
    }

    fn check_matroid(&self, m: &VectorMatroid) -> Result<()> {
        self.validate(m)?;
        let report = m.validate();
        if !self.allow_coloops {
            if let Some(x) = report.coloops.iter().next() {
                return Err(Error::ColoopPresent(x));
            }
        }
        if !report.is_simple() {
            log::warn!("splitting a matroid that is not simple");
        }
        Ok(())
    }
}

/// `M_{a,b}`: appends a row with `alpha_row` in columns `a` and `b`.
pub fn splitting(m: &VectorMatroid, spec: &SplitSpec) -> Result<VectorMatroid> {
    spec.check_matroid(m)?;
    let mat = m.matrix();
    let mut row = vec![0u32; mat.cols()];
    for x in [spec.a, spec.b] {
        row[mat.index_of(x).ok_or(Error::UnknownElement(x))?] = spec.alpha_row;
    }
    Ok(VectorMatroid::new(mat.with_row(&row)?))
}

/// `M'_{a,b}`: the splitting matrix plus a column `z` supported on the new row.
pub fn element_splitting(m: &VectorMatroid, spec: &SplitSpec) -> Result<VectorMatroid> {
    let split = splitting(m, spec)?;
    let mat = split.matrix();
    let mut z = vec![0u32; mat.rows()];
    *z.last_mut().expect("split matrix has a row") = spec.alpha_z;
    Ok(VectorMatroid::new(mat.with_column(spec.z_label, &z)?))
}

/// `M^e_{a,b}`: the element-splitting matrix plus `gamma = e - z`.
pub fn es_splitting(m: &VectorMatroid, spec: &SplitSpec) -> Result<VectorMatroid> {
    let es = element_splitting(m, spec)?;
    let mat = es.matrix();
    let f = mat.field();
    let e_col = mat.column(mat.index_of(spec.e).ok_or(Error::UnknownElement(spec.e))?);
    let z_col = mat.column(mat.index_of(spec.z_label).expect("z was just added"));
    let gamma: Vec<u32> = e_col.iter().zip(&z_col).map(|(&x, &y)| f.sub_raw(x, y)).collect();
    Ok(VectorMatroid::new(mat.with_column(spec.gamma_label, &gamma)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircuitTag {
    /// Meets neither `a` nor `b`.
    Disjoint,
    /// Contains both, with `coeff(a) + coeff(b) = 0`.
    PCircuit,
    /// Meets the pair once, or twice with `coeff(a) + coeff(b) != 0`.
    NpCircuit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitClass {
    pub tag: CircuitTag,
    /// Canonical dependency (ascending labels); absent for disjoint circuits.
    pub certificate: Option<Vec<Scalar>>,
}

impl CircuitClass {
    /// Member of the family preserved by splitting.
    pub fn survives_splitting(&self) -> bool {
        matches!(self.tag, CircuitTag::Disjoint | CircuitTag::PCircuit)
    }
}

pub fn classify_circuit(m: &VectorMatroid, spec: &SplitSpec, c: &ElementSet) -> Result<CircuitClass> {
    let certificate = m.circuit_certificate(c)?;
    Ok(classify_with_certificate(spec, c, certificate))
}

pub(crate) fn classify_with_certificate(spec: &SplitSpec, c: &ElementSet, cert: Vec<Scalar>) -> CircuitClass {
    let pos = |x: Label| c.iter().position(|y| y == x);
    match (pos(spec.a), pos(spec.b)) {
        (None, None) => CircuitClass { tag: CircuitTag::Disjoint, certificate: None },
        (Some(i), Some(j)) => {
            let sum = cert[i].add(cert[j]).expect("one field");
            let tag = if sum.is_zero() { CircuitTag::PCircuit } else { CircuitTag::NpCircuit };
            CircuitClass { tag, certificate: Some(cert) }
        }
        _ => CircuitClass { tag: CircuitTag::NpCircuit, certificate: Some(cert) },
    }
}

/// Every circuit of `m` with its class.
pub fn classified_circuits(
    m: &VectorMatroid,
    spec: &SplitSpec,
    limits: &Limits,
) -> Result<Vec<(Circuit, CircuitClass)>> {
    m.circuits_limited(limits)?
        .into_iter()
        .map(|c| {
            let class = classify_circuit(m, spec, &c)?;
            Ok((c, class))
        })
        .collect()
}

/// Whether `C ∪ I` is p-dependent: it contains no disjoint or p-circuit, and
/// some dependency on it has every coefficient nonzero with
/// `coeff(a) + coeff(b) = 0`. The dependency space is searched exhaustively.
pub fn is_p_dependent(
    m: &VectorMatroid,
    spec: &SplitSpec,
    c: &ElementSet,
    i: &ElementSet,
    limits: &Limits,
) -> Result<bool> {
    if !m.is_circuit(c)? || classify_circuit(m, spec, c)?.tag != CircuitTag::NpCircuit {
        return Err(Error::PreconditionViolated("C is not an np-circuit"));
    }
    if !m.is_independent(i)? {
        return Err(Error::PreconditionViolated("I is not independent"));
    }
    if !c.is_disjoint(i) {
        return Err(Error::PreconditionViolated("C and I intersect"));
    }
    let union = c.union(i);
    if !spec.pair().is_subset(&union) {
        return Err(Error::PreconditionViolated("{a, b} is not contained in C ∪ I"));
    }
    p_dependent_unchecked(m, spec, &union, limits)
}

pub(crate) fn p_dependent_unchecked(
    m: &VectorMatroid,
    spec: &SplitSpec,
    union: &ElementSet,
    limits: &Limits,
) -> Result<bool> {
    for mask in m.circuit_masks_within(m.mask_of(union)?) {
        let sub = m.set_of(mask);
        if classify_circuit(m, spec, &sub)?.survives_splitting() {
            return Ok(false);
        }
    }
    let space = m.matrix().dependency_space(union)?;
    let p = m.field().order();
    match space.cardinality() {
        Some(n) if n <= limits.kernel_vectors => {}
        _ => return Err(Error::KernelTooLarge { dim: space.dim(), p, limit: limits.kernel_vectors }),
    }
    let ia = union.iter().position(|x| x == spec.a).expect("a in union");
    let ib = union.iter().position(|x| x == spec.b).expect("b in union");
    let f = m.field();
    Ok(space.any_vector(|v| v.iter().all(|&x| x != 0) && f.add_raw(v[ia], v[ib]) == 0))
}
