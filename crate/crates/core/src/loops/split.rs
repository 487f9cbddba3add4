use std::sync::Arc;

use crate::abgroup::{characters_of_finite_group, extend_character, Character};
use crate::algebra::{is_central_element, Algebra, AlgebraMap};
use crate::grading::{check_g_isomorphism, product_g_grading, GGrading};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;

use super::{LoopAlgebra, LoopError};

/// Φ: L_π(A) → Aⁿ, x ⊗ g ↦ (χ₁(g)x, …, χₙ(g)x).
#[derive(Debug, Clone)]
pub struct LoopSplitting {
    pub phi: AlgebraMap,
    /// Characters of G restricting to the n distinct characters of H.
    pub characters: Vec<Character>,
    /// (χⱼ(hᵢ)), rows indexed by characters, columns by sorted H.
    pub character_matrix: Matrix,
    pub determinant: Scalar,
    /// The product Ḡ-grading on Aⁿ.
    pub product_grading: GGrading,
    /// The loop G-grading carried to Aⁿ by Φ.
    pub image_grading: GGrading,
}

fn check_char(l: &LoopAlgebra) -> Result<(), LoopError> {
    let p = l.algebra.field().characteristic();
    let n = l.kernel_elements.len();
    if p != 0 && (n as u64).is_multiple_of(p) {
        return Err(LoopError::CharDividesKernel { p, n });
    }
    Ok(())
}

/// Splitting with the characters of H extended to G by the default rule.
pub fn split_loop(l: &LoopAlgebra) -> Result<LoopSplitting, LoopError> {
    check_char(l)?;
    let f = l.algebra.field();
    let chars = characters_of_finite_group(&l.kernel.group, f)?
        .iter()
        .map(|chi| extend_character(chi, &l.kernel.embedding))
        .collect::<Result<Vec<_>, _>>()?;
    split_loop_with(l, chars)
}

/// Splitting with caller-chosen characters of G.
pub fn split_loop_with(l: &LoopAlgebra, characters: Vec<Character>) -> Result<LoopSplitting, LoopError> {
    check_char(l)?;
    let a = l.base.algebra();
    let f = a.field();
    let g = l.pi.domain();
    let n = l.kernel_elements.len();
    if characters.len() != n {
        return Err(LoopError::Invariant(format!("{} characters for |H| = {n}", characters.len())));
    }
    if characters.iter().any(|c| c.group() != g || c.field() != f) {
        return Err(LoopError::GroupMismatch("characters must be defined on G over the base field".into()));
    }
    let rows: Vec<Vector> = characters.iter().map(|c| l.kernel_elements.iter().map(|h| c.eval(h)).collect()).collect();
    let character_matrix = Matrix::from_rows(f, n, &rows);
    let determinant = character_matrix.determinant();
    if determinant.is_zero() {
        return Err(LoopError::Invariant("the characters do not separate H".into()));
    }

    let copies: Vec<&Algebra> = (0..n).map(|_| a.as_ref()).collect();
    let target = Arc::new(Algebra::direct_product(&copies)?);
    let d = a.dim();
    let cols: Vec<Vector> = (0..l.dim())
        .map(|i| {
            let x = l.base_vector(i);
            let deg = &l.entries[i].degree;
            characters
                .iter()
                .flat_map(|c| {
                    let s = c.eval(deg);
                    x.iter().map(move |xi| xi * &s)
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_columns(f, n * d, &cols);
    let phi = AlgebraMap::new(l.algebra.clone(), target, m)
        .map_err(|e| LoopError::Invariant(format!("Φ is not multiplicative: {e}")))?;
    if !phi.is_bijective() {
        return Err(LoopError::Invariant("Φ is not bijective".into()));
    }
    let coarse = l.grading.coarsen(&l.pi)?;
    let bases: Vec<&GGrading> = (0..n).map(|_| &l.base).collect();
    let product_grading = product_g_grading(l.base.group(), &bases)?;
    if !check_g_isomorphism(&phi, &coarse, &product_grading) {
        return Err(LoopError::Invariant("Φ is not an isomorphism of Ḡ-graded algebras".into()));
    }
    let image_grading = l.grading.transport(&phi)?;
    Ok(LoopSplitting { phi, characters, character_matrix, determinant, product_grading, image_grading })
}

/// In characteristic p | |H|: c̃ = Σ_h (x ⊗ g ↦ x ⊗ hg) and the ideal c̃L.
#[derive(Debug, Clone)]
pub struct NilpotentWitness {
    pub element: Matrix,
    pub ideal: Subspace,
}

pub fn nilpotent_witness(l: &LoopAlgebra) -> Result<NilpotentWitness, LoopError> {
    let p = l.algebra.field().characteristic();
    let n = l.kernel_elements.len();
    if p == 0 || !(n as u64).is_multiple_of(p) {
        return Err(LoopError::CharCoprime { p, n });
    }
    let f = l.algebra.field();
    let c = l.kernel_elements.iter().fold(Matrix::zeros(f, l.dim(), l.dim()), |acc, h| acc.add(&l.shift(h)));
    if !is_central_element(&l.algebra, &c) {
        return Err(LoopError::Invariant("c̃ is not in the centroid".into()));
    }
    if !c.mul(&c).is_zero() {
        return Err(LoopError::Invariant("c̃² ≠ 0".into()));
    }
    let ideal = c.column_space();
    if ideal.is_zero() || ideal.is_full() || !l.algebra.is_ideal(&ideal) {
        return Err(LoopError::Invariant("c̃L is not a nonzero proper ideal".into()));
    }
    if !l.algebra.product_subspace(&ideal, &ideal).is_zero() {
        return Err(LoopError::Invariant("(c̃L)² ≠ 0".into()));
    }
    Ok(NilpotentWitness { element: c, ideal })
}
