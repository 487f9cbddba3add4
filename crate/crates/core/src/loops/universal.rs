use std::collections::BTreeSet;

use crate::abgroup::GroupHom;
use crate::grading::UniversalGroup;

use super::{LoopAlgebra, LoopError};

/// Universal group of a loop grading and the maps relating it to G and to
/// the universal group of the base.
#[derive(Debug, Clone)]
pub struct LoopUniversalReport {
    pub universal: UniversalGroup,
    /// α: U(Γ) → G.
    pub alpha: GroupHom,
    /// π^U: U(Γ) → U(Γ̄).
    pub pi_u: GroupHom,
    /// ᾱ: U(Γ̄) → Ḡ, an isomorphism by the precondition.
    pub alpha_bar: GroupHom,
    pub alpha_is_iso: bool,
    pub pi_u_surjective: bool,
    pub square_commutes: bool,
    pub kernel_bijection: bool,
}

impl LoopUniversalReport {
    pub fn certified(&self) -> bool {
        self.alpha_is_iso && self.pi_u_surjective && self.square_commutes && self.kernel_bijection
    }
}

pub fn verify_loop_universal(l: &LoopAlgebra) -> Result<LoopUniversalReport, LoopError> {
    let (ub, alpha_bar) = l.base.universal_hom()?;
    if !alpha_bar.is_isomorphism() {
        return Err(LoopError::BaseNotUniversal);
    }
    let (u, alpha) = l.grading.universal_hom()?;
    let images: Vec<_> = l
        .grading
        .degrees()
        .iter()
        .map(|g| {
            let c = l.base.index_of(&l.pi.apply(g)).expect("loop degrees lie over the base support");
            ub.degrees[c].clone()
        })
        .collect();
    let pi_u = GroupHom::from_images(&u.group, &ub.group, &images)?;
    let square_commutes = alpha.then(&l.pi).same_map(&pi_u.then(&alpha_bar));

    let ker_u = pi_u.kernel();
    let kernel_bijection = match ker_u.elements() {
        Ok(elts) => {
            let imgs: BTreeSet<_> = elts.iter().map(|x| alpha.apply(x)).collect();
            let target: BTreeSet<_> = l.kernel_elements.iter().cloned().collect();
            imgs.len() == elts.len() && imgs == target
        }
        Err(_) => false,
    };
    Ok(LoopUniversalReport {
        alpha_is_iso: alpha.is_isomorphism(),
        pi_u_surjective: pi_u.is_surjective(),
        universal: u,
        alpha,
        pi_u,
        alpha_bar,
        square_commutes,
        kernel_bijection,
    })
}
