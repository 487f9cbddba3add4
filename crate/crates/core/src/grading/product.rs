//! Gradings on cartesian products.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::abgroup::{FgAbelianGroup, GroupElement};
use crate::algebra::Algebra;
use crate::linalg::Subspace;

use super::{GGrading, Grading, GradingError};

fn product_algebra(algebras: &[&Arc<Algebra>]) -> Result<Arc<Algebra>, GradingError> {
    let refs: Vec<&Algebra> = algebras.iter().map(|a| a.as_ref()).collect();
    Ok(Arc::new(Algebra::direct_product(&refs)?))
}

fn offsets(algebras: &[&Arc<Algebra>]) -> Vec<usize> {
    let mut off = Vec::with_capacity(algebras.len());
    let mut acc = 0;
    for a in algebras {
        off.push(acc);
        acc += a.dim();
    }
    off
}

/// Γ¹ × … × Γⁿ: every component of every factor, embedded blockwise.
pub fn product_grading(factors: &[&Grading]) -> Result<Grading, GradingError> {
    let algebras: Vec<&Arc<Algebra>> = factors.iter().map(|g| g.algebra()).collect();
    let p = product_algebra(&algebras)?;
    let off = offsets(&algebras);
    let n = p.dim();
    let comps =
        factors.iter().zip(&off).flat_map(|(g, &o)| g.components().iter().map(move |c| c.embed(n, o))).collect();
    Grading::new(p, comps)
}

/// Concatenated presentation coordinates as an element of the product group.
fn product_element(prod: &FgAbelianGroup, groups: &[&FgAbelianGroup], i: usize, g: &GroupElement) -> GroupElement {
    let mut x: Vec<BigInt> = Vec::with_capacity(prod.generator_count());
    for (j, h) in groups.iter().enumerate() {
        if j == i {
            x.extend(h.to_presentation_coords(g));
        } else {
            x.extend(std::iter::repeat_n(BigInt::from(0), h.generator_count()));
        }
    }
    prod.from_presentation_coords(&x)
}

/// The product group-grading over G¹ × … × Gⁿ: the neutral components
/// multiply together, every other component sits in its own slot.
pub fn product_group_grading(factors: &[&GGrading]) -> Result<GGrading, GradingError> {
    let algebras: Vec<&Arc<Algebra>> = factors.iter().map(|g| g.algebra()).collect();
    let p = product_algebra(&algebras)?;
    let off = offsets(&algebras);
    let groups: Vec<&FgAbelianGroup> = factors.iter().map(|g| g.group()).collect();
    let prod = FgAbelianGroup::direct_product(&groups);
    let mut neutral = Subspace::zero(p.field(), p.dim());
    let mut pieces = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        for (deg, c) in g.degrees().iter().zip(g.components()) {
            let c = c.embed(p.dim(), off[i]);
            if deg.is_zero() {
                neutral = neutral.sum(&c);
            } else {
                pieces.push((product_element(&prod, &groups, i, deg), c));
            }
        }
    }
    if !neutral.is_zero() {
        pieces.push((prod.zero(), neutral));
    }
    GGrading::new(p, prod, pieces)
}

/// (Γ¹ × … × Γⁿ)_gr, realized as the product group-grading of the
/// factors over their universal groups.
pub fn free_product_group_grading(factors: &[&Grading]) -> Result<GGrading, GradingError> {
    let mut induced = Vec::with_capacity(factors.len());
    for (i, g) in factors.iter().enumerate() {
        if !g.is_group_grading() {
            return Err(GradingError::NotGroupGrading(i));
        }
        induced.push(g.induced_group_grading());
    }
    let refs: Vec<&GGrading> = induced.iter().collect();
    product_group_grading(&refs)
}

/// The product G-grading: (A¹ × … × Aⁿ)_g = A¹_g × … × Aⁿ_g.
pub fn product_g_grading(group: &FgAbelianGroup, factors: &[&GGrading]) -> Result<GGrading, GradingError> {
    for (i, g) in factors.iter().enumerate() {
        if g.group() != group {
            return Err(GradingError::GroupMismatch(format!("factor {i} is graded by {}", g.group())));
        }
    }
    let algebras: Vec<&Arc<Algebra>> = factors.iter().map(|g| g.algebra()).collect();
    let p = product_algebra(&algebras)?;
    let off = offsets(&algebras);
    let mut pieces: Vec<(GroupElement, Subspace)> = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        for (deg, c) in g.degrees().iter().zip(g.components()) {
            let c = c.embed(p.dim(), off[i]);
            match pieces.iter_mut().find(|(h, _)| h == deg) {
                Some((_, s)) => *s = s.sum(&c),
                None => pieces.push((deg.clone(), c)),
            }
        }
    }
    GGrading::new(p, group.clone(), pieces)
}
