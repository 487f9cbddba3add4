use crate::abgroup::{GroupElement, Subgroup};
use crate::algebra::{centroid, decompose_semisimple};
use crate::grading::GGrading;
use crate::linalg::{sub_vectors, Matrix, Subspace};

use super::LoopError;

/// The graded pieces C(A)_h = {c ∈ C(A) : c A_g ⊆ A_{g+h}} of the centroid.
#[derive(Debug, Clone)]
pub struct GradedCentroidProfile {
    /// Nonzero pieces with a basis of each, sorted by degree.
    pub pieces: Vec<(GroupElement, Vec<Matrix>)>,
    pub centroid_dim: usize,
    /// {h : C(A)_h ≠ 0}, sorted.
    pub support: Vec<GroupElement>,
    pub support_subgroup: Subgroup,
    pub support_is_subgroup: bool,
    /// dim C(A)_e.
    pub identity_dim: usize,
}

impl GradedCentroidProfile {
    /// C(A)_e = 𝔽·1.
    pub fn is_graded_central(&self) -> bool {
        self.identity_dim == 1
    }

    pub fn piece(&self, h: &GroupElement) -> Option<&[Matrix]> {
        self.pieces.iter().find(|(g, _)| g == h).map(|(_, m)| m.as_slice())
    }

    /// Basis of the whole centroid, piece by piece.
    pub fn basis(&self) -> Vec<Matrix> {
        self.pieces.iter().flat_map(|(_, m)| m.iter().cloned()).collect()
    }
}

pub fn graded_centroid(gg: &GGrading) -> Result<GradedCentroidProfile, LoopError> {
    let a = gg.algebra();
    let f = a.field();
    let group = gg.group();
    let grading = gg.grading();
    let basis = centroid(a);
    let total = basis.len();

    let supp = gg.support();
    let mut candidates: Vec<GroupElement> = Vec::new();
    for s in &supp {
        for t in &supp {
            candidates.push(group.sub(s, t));
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut pieces = Vec::new();
    for h in &candidates {
        // column m: the parts of C_m(A_g) outside A_{g+h}, stacked over g
        let cols: Vec<Vec<_>> = basis
            .iter()
            .map(|cm| {
                let mut col = Vec::new();
                for (comp, g) in gg.components().iter().zip(gg.degrees()) {
                    let target = gg.index_of(&group.add(g, h));
                    for v in comp.basis() {
                        let w = cm.mul_vec(v);
                        let off = match target {
                            Some(j) => sub_vectors(&w, &grading.project(&w, j)),
                            None => w,
                        };
                        col.extend(off);
                    }
                }
                col
            })
            .collect();
        let rows = cols.first().map_or(0, |c| c.len());
        let m = Matrix::from_columns(f, rows, &cols);
        let ker = m.kernel();
        if ker.is_empty() {
            continue;
        }
        let mats: Vec<Matrix> = ker
            .iter()
            .map(|lam| {
                basis.iter().zip(lam).fold(Matrix::zeros(f, a.dim(), a.dim()), |acc, (cm, l)| acc.add(&cm.scale(l)))
            })
            .collect();
        pieces.push((h.clone(), mats));
    }
    let graded: usize = pieces.iter().map(|(_, m)| m.len()).sum();
    if graded != total {
        return Err(LoopError::CentroidNotGraded { graded, total });
    }
    let support: Vec<GroupElement> = pieces.iter().map(|(h, _)| h.clone()).collect();
    let support_is_subgroup =
        support.iter().all(|x| support.iter().all(|y| support.binary_search(&group.sub(x, y)).is_ok()));
    let identity_dim = pieces.iter().find(|(h, _)| h.is_zero()).map_or(0, |(_, m)| m.len());
    Ok(GradedCentroidProfile {
        support_subgroup: group.subgroup(&support),
        pieces,
        centroid_dim: total,
        support,
        support_is_subgroup,
        identity_dim,
    })
}

/// Graded-simplicity and graded-centrality of a grading on a semisimple algebra.
#[derive(Debug, Clone)]
pub struct GradedSimplicity {
    /// The simple ideals of the algebra.
    pub simple_ideals: Vec<Subspace>,
    /// A proper nonzero graded ideal, if any.
    pub proper_graded_ideal: Option<Subspace>,
    /// Present when the grading is graded-simple.
    pub profile: Option<GradedCentroidProfile>,
}

impl GradedSimplicity {
    pub fn is_graded_simple(&self) -> bool {
        self.proper_graded_ideal.is_none()
    }

    pub fn is_graded_central(&self) -> Option<bool> {
        self.profile.as_ref().map(|p| p.is_graded_central())
    }

    pub fn is_graded_central_simple(&self) -> bool {
        self.is_graded_simple() && self.is_graded_central() == Some(true)
    }
}

/// Every ideal of a semisimple algebra is a sum of simple ideals, so
/// graded-simplicity is decided by testing all proper sums.
pub fn is_graded_central_simple(gg: &GGrading, seed: u64) -> Result<GradedSimplicity, LoopError> {
    let a = gg.algebra();
    let ideals = decompose_semisimple(a, seed)?;
    let m = ideals.len();
    let mut proper = None;
    for mask in 1u64..(1u64 << m) - 1 {
        let s = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Subspace::zero(a.field(), a.dim()), |acc, i| acc.sum(&ideals[i]));
        if gg.grading().is_graded_subspace(&s) {
            proper = Some(s);
            break;
        }
    }
    let profile = if proper.is_none() { Some(graded_centroid(gg)?) } else { None };
    Ok(GradedSimplicity { simple_ideals: ideals, proper_graded_ideal: proper, profile })
}
