//! Graded-simple decomposition of semisimple graded algebras, fineness of
//! free products, equivalence of loop algebras and the example catalog.

mod entries;
mod sl2;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::abgroup::{GroupError, GroupHom};
use crate::algebra::{decompose_semisimple, AlgebraError, AlgebraMap};
use crate::grading::{check_equivalence, check_g_isomorphism, Equivalence, GGrading, GradingError};
use crate::linalg::{Matrix, Subspace};
use crate::loops::{graded_centroid, recover_base, GradedCentroidProfile, LoopAlgebra, LoopError, Recovery};

pub use entries::{catalog, find_entry, run_entry, sl2_fineness_oracle, CatalogEntry, Check, EntryReport};
pub use sl2::{sl2_grading_classifier, Sl2Descriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("NotSemisimple: {0}")]
    NotSemisimple(String),
    #[error("MissingFinenessFlag: no fineness flag for factor {0}")]
    MissingFinenessFlag(usize),
    #[error("NoLift: the base map lifts to no homomorphism")]
    NoLift,
    #[error("NotAnEquivalence: the base map does not carry components to components")]
    NotAnEquivalence,
    #[error("BaseNotUniversal: a base is not graded by its universal group")]
    BaseNotUniversal,
    #[error("NotSl2: the algebra does not have the structure constants of sl2")]
    NotSl2,
    #[error("UnrecognizedGrading: {0}")]
    UnrecognizedGrading(String),
    #[error("TooManyIdeals: {0} simple ideals")]
    TooManyIdeals(usize),
    #[error("UnsupportedField: {0}")]
    UnsupportedField(String),
    #[error("UnknownEntry: {0}")]
    UnknownEntry(String),
    #[error(transparent)]
    Loop(LoopError),
}

impl From<LoopError> for ClassifyError {
    fn from(e: LoopError) -> Self {
        match e {
            LoopError::NotSemisimple(w) => ClassifyError::NotSemisimple(w),
            e => ClassifyError::Loop(e),
        }
    }
}

impl From<AlgebraError> for ClassifyError {
    fn from(e: AlgebraError) -> Self {
        LoopError::from(e).into()
    }
}

impl From<GradingError> for ClassifyError {
    fn from(e: GradingError) -> Self {
        LoopError::from(e).into()
    }
}

impl From<crate::scalar::ScalarError> for ClassifyError {
    fn from(e: crate::scalar::ScalarError) -> Self {
        LoopError::from(e).into()
    }
}

impl From<GroupError> for ClassifyError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::NoLift => ClassifyError::NoLift,
            e => LoopError::from(e).into(),
        }
    }
}

/// A minimal graded ideal of a semisimple graded algebra.
#[derive(Debug, Clone)]
pub struct GradedSimpleFactor {
    /// The ideal inside the ambient algebra.
    pub ideal: Subspace,
    /// Indices of the ambient simple ideals it contains.
    pub constituents: Vec<usize>,
    /// The grading restricted to the ideal, on its RREF basis.
    pub grading: GGrading,
    pub inclusion: AlgebraMap,
    pub profile: GradedCentroidProfile,
    /// The factor as a loop algebra, when the field is large enough.
    pub realization: Option<Box<Recovery>>,
}

const MAX_IDEALS: usize = 16;

/// Splits a semisimple G-graded algebra into its graded-simple ideals,
/// ordered by their first simple constituent.
pub fn decompose_graded(gg: &GGrading, seed: u64) -> Result<Vec<GradedSimpleFactor>, ClassifyError> {
    let a = gg.algebra();
    let ideals = decompose_semisimple(a, seed)?;
    let m = ideals.len();
    if m > MAX_IDEALS {
        return Err(ClassifyError::TooManyIdeals(m));
    }
    let sum = |mask: u32| {
        (0..m).filter(|i| mask >> i & 1 == 1).fold(Subspace::zero(a.field(), a.dim()), |acc, i| acc.sum(&ideals[i]))
    };
    let full = (1u32 << m) - 1;
    let graded: Vec<u32> = (1..=full).filter(|&mask| gg.grading().is_graded_subspace(&sum(mask))).collect();
    // the graded sums form a Boolean algebra; its atoms are the factors
    let mut atoms: Vec<u32> = Vec::new();
    for i in 0..m {
        let atom = graded.iter().filter(|&&g| g >> i & 1 == 1).fold(full, |acc, &g| acc & g);
        if !atoms.contains(&atom) {
            atoms.push(atom);
        }
    }
    let mut factors = Vec::with_capacity(atoms.len());
    for atom in atoms {
        let ideal = sum(atom);
        let (grading, inclusion) = gg.restrict(&ideal)?;
        let profile = graded_centroid(&grading)?;
        let realization = recover_base(&grading, seed).ok().map(Box::new);
        factors.push(GradedSimpleFactor {
            ideal,
            constituents: (0..m).filter(|i| atom >> i & 1 == 1).collect(),
            grading,
            inclusion,
            profile,
            realization,
        });
    }
    Ok(factors)
}

/// The factors put back together give the input grading degree by degree.
pub fn factors_reproduce(gg: &GGrading, factors: &[GradedSimpleFactor]) -> bool {
    let a = gg.algebra();
    let mut by_degree: BTreeMap<_, Subspace> = BTreeMap::new();
    for fct in factors {
        for (g, c) in fct.grading.degrees().iter().zip(fct.grading.components()) {
            let img = fct.inclusion.image_of(c);
            let slot = by_degree.entry(g.clone()).or_insert_with(|| Subspace::zero(a.field(), a.dim()));
            *slot = slot.sum(&img);
        }
    }
    by_degree.len() == gg.len() && by_degree.iter().all(|(g, s)| *s == gg.component_at(g))
}

/// φ restricted to `from.ideal`, as a map of factor algebras, when it lands
/// in `to.ideal`.
pub fn restrict_map(phi: &AlgebraMap, from: &GradedSimpleFactor, to: &GradedSimpleFactor) -> Option<AlgebraMap> {
    let cols: Option<Vec<_>> = from.ideal.basis().iter().map(|v| to.ideal.coordinates(&phi.apply(v))).collect();
    let m = Matrix::from_columns(phi.target().field(), to.ideal.dim(), &cols?);
    AlgebraMap::new(from.grading.algebra().clone(), to.grading.algebra().clone(), m).ok()
}

/// φ matches the factors of two decompositions bijectively by G-graded
/// isomorphisms.
pub fn factors_correspond(phi: &AlgebraMap, a: &[GradedSimpleFactor], b: &[GradedSimpleFactor]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for fa in a {
        let hit = b.iter().enumerate().find(|(j, fb)| {
            !used[*j] && restrict_map(phi, fa, fb).is_some_and(|r| check_g_isomorphism(&r, &fa.grading, &fb.grading))
        });
        match hit {
            Some((j, _)) => used[j] = true,
            None => return false,
        }
    }
    true
}

/// A factor of a free product as seen by the fineness criterion.
#[derive(Debug, Clone)]
pub struct FinenessInput {
    pub grading: GGrading,
    /// Whether the factor grading is fine; oracle data.
    pub fine: Option<bool>,
    /// Label of the isomorphism class of the factor algebra; factors
    /// without a label are compared by their structure constants.
    pub class: Option<String>,
}

impl FinenessInput {
    pub fn new(grading: GGrading, fine: Option<bool>) -> FinenessInput {
        FinenessInput { grading, fine, class: None }
    }

    fn is_trivial(&self) -> bool {
        self.grading.len() == 1 && self.grading.degree(0).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FineViolation {
    /// This factor's grading is not fine.
    FactorNotFine(usize),
    /// Trivially graded factors that are pairwise equivalent, more than
    /// the characteristic allows.
    EquivalentTrivialFactors(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FineVerdict {
    pub fine: bool,
    /// "nontrivial-factors", "char-2" or "char-not-2".
    pub rule: &'static str,
    pub violation: Option<FineViolation>,
}

/// Fineness of the free product of graded-central-simple factors.
pub fn fine_criteria_check(factors: &[FinenessInput]) -> Result<FineVerdict, ClassifyError> {
    for (i, f) in factors.iter().enumerate() {
        match f.fine {
            None => return Err(ClassifyError::MissingFinenessFlag(i)),
            Some(false) => {
                return Ok(FineVerdict {
                    fine: false,
                    rule: "factor-fineness",
                    violation: Some(FineViolation::FactorNotFine(i)),
                })
            }
            Some(true) => {}
        }
    }
    let trivial: Vec<usize> = (0..factors.len()).filter(|&i| factors[i].is_trivial()).collect();
    if trivial.is_empty() {
        return Ok(FineVerdict { fine: true, rule: "nontrivial-factors", violation: None });
    }
    let char2 = factors[0].grading.algebra().field().characteristic() == 2;
    let (rule, allowed) = if char2 { ("char-2", 2) } else { ("char-not-2", 1) };
    let same = |i: usize, j: usize| match (&factors[i].class, &factors[j].class) {
        (Some(a), Some(b)) => a == b,
        _ => factors[i].grading.algebra().same_structure(factors[j].grading.algebra()),
    };
    for &i in &trivial {
        let class: Vec<usize> = trivial.iter().copied().filter(|&j| same(i, j)).collect();
        if class.len() > allowed {
            return Ok(FineVerdict {
                fine: false,
                rule,
                violation: Some(FineViolation::EquivalentTrivialFactors(class)),
            });
        }
    }
    Ok(FineVerdict { fine: true, rule, violation: None })
}

/// An equivalence of loop algebras x ⊗ g ↦ φ(x) ⊗ ᾶ(g).
#[derive(Debug, Clone)]
pub struct LoopEquivalence {
    pub psi: AlgebraMap,
    pub alpha: GroupHom,
    pub equivalence: Equivalence,
}

#[derive(Debug, Clone)]
pub enum LoopEquivalenceOutcome {
    Extended(Box<LoopEquivalence>),
    /// Lifts exist but none is an isomorphism.
    NoIsoLift,
    /// Not even a homomorphism lifts the base group map.
    NoLift,
}

impl LoopEquivalenceOutcome {
    pub fn extends(&self) -> bool {
        matches!(self, LoopEquivalenceOutcome::Extended(_))
    }
}

/// Tries to extend an equivalence φ of the bases to the loops.
pub fn loop_equivalence(
    l1: &LoopAlgebra,
    l2: &LoopAlgebra,
    phi: &AlgebraMap,
) -> Result<LoopEquivalenceOutcome, ClassifyError> {
    let (b1, b2) = (l1.base(), l2.base());
    let eq = check_equivalence(phi, b1.grading(), b2.grading()).ok_or(ClassifyError::NotAnEquivalence)?;
    let (u1, beta1) = b1.universal_hom()?;
    let (_, beta2) = b2.universal_hom()?;
    if !beta1.is_isomorphism() || !beta2.is_isomorphism() {
        return Err(ClassifyError::BaseNotUniversal);
    }
    // eq.alpha is written on the universal groups; move it to Ḡ¹ → Ḡ²
    debug_assert_eq!(&u1.group, eq.alpha.domain());
    let alpha_bar = beta1.inverse().expect("isomorphism").then(&eq.alpha).then(&beta2);
    let lift = match crate::abgroup::solve_hom_extension(&alpha_bar, l1.pi(), l2.pi(), true) {
        Ok(Some(h)) => h,
        Ok(None) => return Ok(LoopEquivalenceOutcome::NoIsoLift),
        Err(GroupError::NoLift) => return Ok(LoopEquivalenceOutcome::NoLift),
        Err(e) => return Err(e.into()),
    };
    let mut cols = Vec::with_capacity(l1.dim());
    for (i, e) in l1.entries().iter().enumerate() {
        let y = phi.apply(l1.base_vector(i));
        let v = l2
            .embed(&y, &lift.apply(&e.degree))
            .ok_or_else(|| LoopError::Invariant("lifted degree does not match the image component".into()))?;
        cols.push(v);
    }
    let m = Matrix::from_columns(l2.algebra().field(), l2.dim(), &cols);
    let psi = AlgebraMap::new(l1.algebra().clone(), l2.algebra().clone(), m)
        .map_err(|e| LoopError::Invariant(format!("loop map: {e}")))?;
    let equivalence = check_equivalence(&psi, l1.grading().grading(), l2.grading().grading())
        .ok_or_else(|| LoopError::Invariant("loop map is not an equivalence".into()))?;
    Ok(LoopEquivalenceOutcome::Extended(Box::new(LoopEquivalence { psi, alpha: lift, equivalence })))
}
