//! Diagonal automorphisms, equivalences and G-isomorphisms.

use crate::abgroup::{Character, GroupHom};
use crate::algebra::AlgebraMap;

use super::{GGrading, Grading, GradingError, UniversalGroup};

/// x_g ↦ χ(g) x_g.
pub fn diagonal_automorphism(gg: &GGrading, chi: &Character) -> Result<AlgebraMap, GradingError> {
    if chi.group() != gg.group() {
        return Err(GradingError::GroupMismatch("the character is defined on another group".into()));
    }
    if chi.field() != gg.algebra().field() {
        return Err(GradingError::Algebra(crate::algebra::AlgebraError::FieldMismatch));
    }
    let m = gg.scaling_matrix(|g| chi.eval(g));
    let phi = AlgebraMap::new(gg.algebra().clone(), gg.algebra().clone(), m)
        .expect("a diagonal map from a character is a homomorphism");
    assert!(phi.is_bijective(), "a diagonal map from a character is invertible");
    Ok(phi)
}

/// An equivalence φ: (A, Γ) → (A′, Γ′) with the component bijection α_φ
/// and the induced isomorphism of universal groups.
#[derive(Debug, Clone)]
pub struct Equivalence {
    pub bijection: Vec<usize>,
    pub source: UniversalGroup,
    pub target: UniversalGroup,
    pub alpha: GroupHom,
}

/// `Some` iff the isomorphism φ sends every component of Γ onto a component of Γ′.
pub fn check_equivalence(phi: &AlgebraMap, a: &Grading, b: &Grading) -> Option<Equivalence> {
    if !phi.source().same_structure(a.algebra()) || !phi.target().same_structure(b.algebra()) {
        return None;
    }
    if a.len() != b.len() || !phi.is_isomorphism() {
        return None;
    }
    let mut bijection = Vec::with_capacity(a.len());
    let mut used = vec![false; b.len()];
    for c in a.components() {
        let img = phi.image_of(c);
        let j = b.components().iter().position(|w| *w == img)?;
        if used[j] {
            return None;
        }
        used[j] = true;
        bijection.push(j);
    }
    let source = a.universal_group();
    let target = b.universal_group();
    let images: Vec<_> = bijection.iter().map(|&j| target.degrees[j].clone()).collect();
    let alpha = GroupHom::from_images(&source.group, &target.group, &images).ok()?;
    assert!(alpha.is_isomorphism(), "an equivalence induces an isomorphism of universal groups");
    Some(Equivalence { bijection, source, target, alpha })
}

/// φ(A_g) = A′_g for every g.
pub fn check_g_isomorphism(phi: &AlgebraMap, a: &GGrading, b: &GGrading) -> bool {
    if a.group() != b.group() || a.len() != b.len() {
        return false;
    }
    if !phi.source().same_structure(a.algebra()) || !phi.target().same_structure(b.algebra()) {
        return false;
    }
    phi.is_isomorphism() && a.degrees().iter().zip(a.components()).all(|(g, c)| phi.image_of(c) == b.component_at(g))
}
