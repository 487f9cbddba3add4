//! Loop algebras L_π(A) = ⊕_g A_{π(g)} ⊗ g, their centroids, splitting and
//! recovery of the base.

mod centroid;
mod recover;
mod split;
mod universal;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::abgroup::{GroupElement, GroupError, GroupHom, Subgroup};
use crate::algebra::{Algebra, AlgebraError, AlgebraMap};
use crate::grading::{check_g_isomorphism, GGrading, GradingError};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::{Scalar, ScalarError};

pub use centroid::{graded_centroid, is_graded_central_simple, GradedCentroidProfile, GradedSimplicity};
pub use recover::{base_isomorphism, recover_base, BaseIsomorphism, Recovery};
pub use split::{nilpotent_witness, split_loop, split_loop_with, LoopSplitting, NilpotentWitness};
pub use universal::{verify_loop_universal, LoopUniversalReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("InfiniteKernel: π has an infinite kernel")]
    InfiniteKernel,
    #[error("NotSurjective: π is not surjective")]
    NotSurjective,
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("BaseNotUniversal: the base grading group is not its universal group")]
    BaseNotUniversal,
    #[error("CentroidNotGraded: graded centroid pieces span {graded} of {total} dimensions")]
    CentroidNotGraded { graded: usize, total: usize },
    #[error("SupportNotSubgroup: the centroid support is not closed")]
    SupportNotSubgroup,
    #[error("NotSemisimple: {0}")]
    NotSemisimple(String),
    #[error("NoSuchRoot: {0}")]
    NoSuchRoot(String),
    #[error("CharDividesKernel: characteristic {p} divides |H| = {n}; see nilpotent_witness")]
    CharDividesKernel { p: u64, n: usize },
    #[error("CharCoprime: characteristic {p} does not divide |H| = {n}")]
    CharCoprime { p: u64, n: usize },
    #[error("NeedIsoCertificate: kernels agree but no base isomorphism was supplied")]
    NeedIsoCertificate,
    #[error("FieldTooSmall: {0}")]
    FieldTooSmall(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Grading(GradingError),
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Algebra(AlgebraError),
}

impl From<ScalarError> for LoopError {
    fn from(e: ScalarError) -> Self {
        match e {
            ScalarError::NoSuchRoot { n, field } => {
                LoopError::NoSuchRoot(format!("{field} has no primitive {n}-th root of unity"))
            }
            e => LoopError::Algebra(AlgebraError::Scalar(e)),
        }
    }
}

impl From<GroupError> for LoopError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Scalar(s) => s.into(),
            e => LoopError::Group(e),
        }
    }
}

impl From<AlgebraError> for LoopError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotSemisimple(w) => LoopError::NotSemisimple(w.to_string()),
            AlgebraError::FieldTooSmall(f) => LoopError::FieldTooSmall(f),
            AlgebraError::Scalar(s) => s.into(),
            e => LoopError::Algebra(e),
        }
    }
}

impl From<GradingError> for LoopError {
    fn from(e: GradingError) -> Self {
        match e {
            GradingError::Group(g) => g.into(),
            GradingError::Algebra(a) => a.into(),
            e => LoopError::Grading(e),
        }
    }
}

/// A basis vector u ⊗ g of the loop algebra: u is vector `k` of the base
/// component `component`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LoopBasisEntry {
    pub component: usize,
    pub degree: GroupElement,
    pub k: usize,
}

/// L_π(A) realized on the basis {u ⊗ g}, ordered by (base component,
/// canonical coordinates of g, u).
#[derive(Debug, Clone)]
pub struct LoopAlgebra {
    base: GGrading,
    pi: GroupHom,
    kernel: Subgroup,
    kernel_elements: Vec<GroupElement>,
    algebra: Arc<Algebra>,
    grading: GGrading,
    entries: Vec<LoopBasisEntry>,
    offsets: BTreeMap<(usize, GroupElement), usize>,
}

/// Short label of a base vector: the basis label for unit vectors, a
/// signed combination otherwise.
fn vector_label(a: &Algebra, v: &[Scalar]) -> String {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    if nz.len() == 1 && v[nz[0]].is_one() {
        return a.label(nz[0]);
    }
    let mut s = String::new();
    for (n, &i) in nz.iter().enumerate() {
        let c = &v[i];
        let minus_one = (-c).is_one();
        if n > 0 {
            s.push(if minus_one { '-' } else { '+' });
        } else if minus_one {
            s.push('-');
        }
        if !c.is_one() && !minus_one {
            s.push_str(&format!("({c})"));
        }
        s.push_str(&a.label(i));
    }
    format!("({s})")
}

/// L_π(A) for π: G → Ḡ surjective with finite kernel.
pub fn build_loop(base: &GGrading, pi: &GroupHom) -> Result<LoopAlgebra, LoopError> {
    if pi.codomain() != base.group() {
        return Err(LoopError::GroupMismatch("π does not land in the base grading group".into()));
    }
    if !pi.is_surjective() {
        return Err(LoopError::NotSurjective);
    }
    let kernel = pi.kernel();
    if !kernel.group.is_finite() {
        return Err(LoopError::InfiniteKernel);
    }
    let mut kernel_elements = kernel.elements()?;
    kernel_elements.sort();
    let g = pi.domain();
    let a = base.algebra();
    let field = a.field().clone();

    let mut entries = Vec::new();
    let mut offsets = BTreeMap::new();
    for (c, (comp, deg)) in base.components().iter().zip(base.degrees()).enumerate() {
        let g0 = pi.preimage(deg).ok_or(LoopError::NotSurjective)?;
        let mut lifts: Vec<GroupElement> = kernel_elements.iter().map(|h| g.add(&g0, h)).collect();
        lifts.sort();
        for l in lifts {
            offsets.insert((c, l.clone()), entries.len());
            for k in 0..comp.dim() {
                entries.push(LoopBasisEntry { component: c, degree: l.clone(), k });
            }
        }
    }
    let dim = entries.len();

    // products of base basis vectors in component coordinates
    let grading = base.grading();
    let n = base.len();
    let mut base_products: Vec<Vec<Option<(usize, Vector)>>> = vec![Vec::new(); n * n];
    for c1 in 0..n {
        for c2 in 0..n {
            let slot = &mut base_products[c1 * n + c2];
            for u in base.components()[c1].basis() {
                for v in base.components()[c2].basis() {
                    let p = a.multiply(u, v);
                    let entry = match grading.product_index(c1, c2) {
                        Some(c3) if !is_zero_vector(&p) => {
                            let x = base.components()[c3]
                                .coordinates(&p)
                                .ok_or_else(|| LoopError::Invariant("product leaves its component".into()))?;
                            Some((c3, x))
                        }
                        _ => None,
                    };
                    slot.push(entry);
                }
            }
        }
    }

    let mut table = Vec::with_capacity(dim * dim);
    for x in &entries {
        for y in &entries {
            let d2 = base.components()[y.component].dim();
            let mut row = Vec::new();
            if let Some((c3, coords)) = &base_products[x.component * n + y.component][x.k * d2 + y.k] {
                let deg = g.add(&x.degree, &y.degree);
                let off = offsets[&(*c3, deg)];
                for (k, s) in coords.iter().enumerate() {
                    if !s.is_zero() {
                        row.push((off + k, s.clone()));
                    }
                }
            }
            table.push(row);
        }
    }
    let labels: Vec<String> = entries
        .iter()
        .map(|e| {
            let u = &base.components()[e.component].basis()[e.k];
            format!("{}⊗{}", vector_label(a, u), g.show(&e.degree))
        })
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let algebra = Arc::new(Algebra::from_table(&field, dim, table)?.with_labels(&label_refs));

    let pieces: Vec<(GroupElement, Subspace)> = offsets
        .iter()
        .map(|((c, deg), &off)| {
            let d = base.components()[*c].dim();
            let span = Subspace::span(&field, dim, (off..off + d).map(|i| unit_vector(&field, dim, i)));
            (deg.clone(), span)
        })
        .collect();
    let lg = GGrading::new(algebra.clone(), g.clone(), pieces)?;
    Ok(LoopAlgebra {
        base: base.clone(),
        pi: pi.clone(),
        kernel,
        kernel_elements,
        algebra,
        grading: lg,
        entries,
        offsets,
    })
}

impl LoopAlgebra {
    pub fn base(&self) -> &GGrading {
        &self.base
    }

    pub fn pi(&self) -> &GroupHom {
        &self.pi
    }

    /// H = ker π as a subgroup of G.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Elements of H, sorted.
    pub fn kernel_elements(&self) -> &[GroupElement] {
        &self.kernel_elements
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The G-grading L_g = A_{π(g)} ⊗ g.
    pub fn grading(&self) -> &GGrading {
        &self.grading
    }

    pub fn entries(&self) -> &[LoopBasisEntry] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// x ⊗ g for x ∈ A_{π(g)}; `None` when x is not of degree π(g).
    pub fn embed(&self, x: &[Scalar], g: &GroupElement) -> Option<Vector> {
        let mut out = zero_vector(self.algebra.field(), self.dim());
        if is_zero_vector(x) {
            return Some(out);
        }
        let c = self.base.index_of(&self.pi.apply(g))?;
        let coords = self.base.components()[c].coordinates(x)?;
        let off = self.offsets[&(c, g.clone())];
        for (k, s) in coords.into_iter().enumerate() {
            out[off + k] = s;
        }
        Some(out)
    }

    /// The base vector u of the basis entry u ⊗ g.
    pub fn base_vector(&self, i: usize) -> &Vector {
        let e = &self.entries[i];
        &self.base.components()[e.component].basis()[e.k]
    }

    /// x ⊗ g ↦ x ⊗ (g + h) for h ∈ H.
    pub fn shift(&self, h: &GroupElement) -> Matrix {
        let f = self.algebra.field();
        let n = self.dim();
        let g = self.pi.domain();
        let cols: Vec<Vector> = self
            .entries
            .iter()
            .map(|e| {
                let off = self.offsets[&(e.component, g.add(&e.degree, h))];
                unit_vector(f, n, off + e.k)
            })
            .collect();
        Matrix::from_columns(f, n, &cols)
    }
}

/// Outcome of comparing two loops over the same G.
#[derive(Debug, Clone)]
pub enum LoopIso {
    /// A certified G-graded isomorphism x ⊗ g ↦ φ(x) ⊗ g.
    Isomorphic(AlgebraMap),
    /// ker π¹ ≠ ker π², so the loops are not isomorphic.
    KernelsDiffer,
    /// The supplied φ does not carry A¹_{π¹(g)} onto A²_{π²(g)}.
    CertificateRejected,
}

impl LoopIso {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, LoopIso::Isomorphic(_))
    }
}

/// Compares L_{π¹}(A¹) and L_{π²}(A²) given an isomorphism φ: A¹ → A² of
/// the bases. Without φ only identical loops are decided.
pub fn loop_iso_test(l1: &LoopAlgebra, l2: &LoopAlgebra, cert: Option<&AlgebraMap>) -> Result<LoopIso, LoopError> {
    if l1.pi.domain() != l2.pi.domain() {
        return Err(LoopError::GroupMismatch("the loops are graded by different groups".into()));
    }
    if !l1.kernel.same_as(&l2.kernel) {
        return Ok(LoopIso::KernelsDiffer);
    }
    let phi = match cert {
        Some(phi) => phi.clone(),
        None => {
            if l1.base == l2.base && l1.pi.same_map(&l2.pi) {
                AlgebraMap::identity(l1.base.algebra())
            } else {
                return Err(LoopError::NeedIsoCertificate);
            }
        }
    };
    if !phi.source().same_structure(l1.base.algebra()) || !phi.target().same_structure(l2.base.algebra()) {
        return Err(LoopError::Invariant("the certificate is not a map between the bases".into()));
    }
    let mut cols = Vec::with_capacity(l1.dim());
    for (i, e) in l1.entries.iter().enumerate() {
        let y = phi.apply(l1.base_vector(i));
        match l2.embed(&y, &e.degree) {
            Some(v) => cols.push(v),
            None => return Ok(LoopIso::CertificateRejected),
        }
    }
    let m = Matrix::from_columns(l2.algebra.field(), l2.dim(), &cols);
    let psi = match AlgebraMap::new(l1.algebra.clone(), l2.algebra.clone(), m) {
        Ok(p) => p,
        Err(_) => return Ok(LoopIso::CertificateRejected),
    };
    if !check_g_isomorphism(&psi, &l1.grading, &l2.grading) {
        return Ok(LoopIso::CertificateRejected);
    }
    Ok(LoopIso::Isomorphic(psi))
}
