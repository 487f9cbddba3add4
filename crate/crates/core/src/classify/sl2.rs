use crate::abgroup::{FgAbelianGroup, GroupElement};
use crate::catalog;
use crate::grading::GGrading;

use super::ClassifyError;

/// Isomorphism type of a G-grading on 𝔰𝔩₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sl2Descriptor {
    /// deg E = g, deg F = −g, with a Cartan subalgebra in degree e. `g` is
    /// the smaller of g and −g.
    Type1 { g: GroupElement },
    /// Three one-dimensional components on T ∖ {e}, T ≅ (ℤ/2)²; `t` is T sorted.
    Type2 { t: Vec<GroupElement> },
}

impl Sl2Descriptor {
    /// Gradings with equal descriptors are isomorphic and conversely.
    pub fn isomorphic(&self, other: &Sl2Descriptor) -> bool {
        self == other
    }
}

fn type1(group: &FgAbelianGroup, g: &GroupElement) -> Sl2Descriptor {
    let ng = group.neg(g);
    Sl2Descriptor::Type1 { g: g.clone().min(ng) }
}

pub fn sl2_grading_classifier(gg: &GGrading) -> Result<Sl2Descriptor, ClassifyError> {
    let a = gg.algebra();
    if !a.same_structure(&catalog::sl2(a.field())) {
        return Err(ClassifyError::NotSl2);
    }
    let group = gg.group();
    let dims: Vec<usize> = gg.components().iter().map(|c| c.dim()).collect();
    let degs = gg.degrees();
    let unrecognized = || ClassifyError::UnrecognizedGrading(format!("{gg:?}"));
    match gg.len() {
        1 if degs[0].is_zero() => Ok(type1(group, &group.zero())),
        2 => {
            // g of order 2: A_e a Cartan line, A_g two-dimensional
            let e = gg.index_of(&group.zero()).ok_or_else(unrecognized)?;
            let o = 1 - e;
            let g = &degs[o];
            if dims[e] == 1 && dims[o] == 2 && group.add(g, g).is_zero() {
                Ok(type1(group, g))
            } else {
                Err(unrecognized())
            }
        }
        3 => {
            if dims.iter().any(|&d| d != 1) {
                return Err(unrecognized());
            }
            match gg.index_of(&group.zero()) {
                Some(e) => {
                    let others: Vec<&GroupElement> = (0..3).filter(|&i| i != e).map(|i| &degs[i]).collect();
                    if group.add(others[0], others[1]).is_zero() {
                        Ok(type1(group, others[0]))
                    } else {
                        Err(unrecognized())
                    }
                }
                None => {
                    let two_torsion = degs.iter().all(|d| group.add(d, d).is_zero());
                    if two_torsion && group.add(&degs[0], &degs[1]) == degs[2] {
                        let mut t: Vec<GroupElement> = degs.to_vec();
                        t.push(group.zero());
                        t.sort();
                        Ok(Sl2Descriptor::Type2 { t })
                    } else {
                        Err(unrecognized())
                    }
                }
            }
        }
        _ => Err(unrecognized()),
    }
}
