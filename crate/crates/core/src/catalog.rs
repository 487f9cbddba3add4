//! Named algebras and gradings used throughout the examples.
//!
//! 𝔰𝔩₂ uses the basis (E, F, H) with [E,F] = H, [H,E] = 2E, [H,F] = −2F.

use std::sync::Arc;

use crate::abgroup::{FgAbelianGroup, GroupElement};
use crate::algebra::Algebra;
use crate::grading::{GGrading, Grading, GradingError};
use crate::linalg::{Subspace, Vector};
use crate::scalar::{Field, Scalar};

pub const E: usize = 0;
pub const F: usize = 1;
pub const H: usize = 2;

pub fn sl2(field: &Field) -> Arc<Algebra> {
    let a = Algebra::from_rule(field, 3, |i, j| match (i, j) {
        (E, F) => vec![(H, 1)],
        (F, E) => vec![(H, -1)],
        (H, E) => vec![(E, 2)],
        (E, H) => vec![(E, -2)],
        (H, F) => vec![(F, -2)],
        (F, H) => vec![(F, 2)],
        _ => vec![],
    });
    Arc::new(a.with_labels(&["E", "F", "H"]))
}

/// 𝔽 × 𝔽 with orthogonal idempotents e₁, e₂.
pub fn fxf(field: &Field) -> Arc<Algebra> {
    let a = Algebra::from_rule(field, 2, |i, j| if i == j { vec![(i, 1)] } else { vec![] });
    Arc::new(a.with_labels(&["e1", "e2"]))
}

/// n copies of the ground field.
pub fn field_power(field: &Field, n: usize) -> Arc<Algebra> {
    Arc::new(Algebra::from_rule(field, n, |i, j| if i == j { vec![(i, 1)] } else { vec![] }))
}

/// The one-dimensional algebra with xx = x.
pub fn ground_field(field: &Field) -> Arc<Algebra> {
    Arc::new(Algebra::from_rule(field, 1, |_, _| vec![(0, 1)]).with_labels(&["x"]))
}

/// The one-dimensional algebra with zero product.
pub fn zero_product_line(field: &Field) -> Arc<Algebra> {
    Arc::new(Algebra::from_rule(field, 1, |_, _| vec![]).with_labels(&["x"]))
}

/// a² = a, ab = b, ba = 0, b² = a + b.
pub fn trivial_fine(field: &Field) -> Arc<Algebra> {
    let a = Algebra::from_rule(field, 2, |i, j| match (i, j) {
        (0, 0) => vec![(0, 1)],
        (0, 1) => vec![(1, 1)],
        (1, 1) => vec![(0, 1), (1, 1)],
        _ => vec![],
    });
    Arc::new(a.with_labels(&["a", "b"]))
}

/// 𝔽1 ⊕ 𝔽u ⊕ 𝔽v, unital commutative with u² = v² = 1, uv = 0.
pub fn jordan_j(field: &Field) -> Arc<Algebra> {
    let a = Algebra::from_rule(field, 3, |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, 1)],
        (1, 1) | (2, 2) => vec![(0, 1)],
        _ => vec![],
    });
    Arc::new(a.with_labels(&["1", "u", "v"]))
}

pub fn sl2xsl2(field: &Field) -> Arc<Algebra> {
    let s = sl2(field);
    Arc::new(Algebra::direct_product(&[&s, &s]).expect("same field"))
}

/// Integer coordinates as a vector over the field.
pub fn vec_of(field: &Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

fn vec_s(xs: &[Scalar]) -> Vector {
    xs.to_vec()
}

fn line(field: &Field, xs: &[i64]) -> Subspace {
    Subspace::span(field, xs.len(), [vec_of(field, xs)])
}

fn el(g: &FgAbelianGroup, x: &[i64]) -> GroupElement {
    g.from_presentation_i64(x)
}

/// {𝔽e₁, 𝔽e₂} on 𝔽 × 𝔽.
pub fn fxf_grading(field: &Field) -> Grading {
    Grading::new(fxf(field), vec![line(field, &[1, 0]), line(field, &[0, 1])]).expect("valid grading")
}

/// The ℤ/2-grading 𝔽(1,1) ⊕ 𝔽(1,−1) on 𝔽 × 𝔽 (a grading only when char ≠ 2).
pub fn fxf_c2_grading(field: &Field) -> Result<GGrading, GradingError> {
    let g = FgAbelianGroup::cyclic(2);
    GGrading::from_homogeneous(
        fxf(field),
        g.clone(),
        vec![(vec_of(field, &[1, 1]), el(&g, &[0])), (vec_of(field, &[1, -1]), el(&g, &[1]))],
    )
}

/// Γ¹(G, g): deg E = g, deg H = e, deg F = −g.
pub fn sl2_type1(field: &Field, group: &FgAbelianGroup, g: &GroupElement) -> Result<GGrading, GradingError> {
    GGrading::from_homogeneous(
        sl2(field),
        group.clone(),
        vec![
            (vec_of(field, &[1, 0, 0]), g.clone()),
            (vec_of(field, &[0, 1, 0]), group.neg(g)),
            (vec_of(field, &[0, 0, 1]), group.zero()),
        ],
    )
}

/// Γ²(G, T) for T = {e, a, b, a + b} ≅ (ℤ/2)²: H at a, E + F at b, E − F at a + b.
pub fn sl2_type2(
    field: &Field,
    group: &FgAbelianGroup,
    a: &GroupElement,
    b: &GroupElement,
) -> Result<GGrading, GradingError> {
    GGrading::from_homogeneous(
        sl2(field),
        group.clone(),
        vec![
            (vec_of(field, &[0, 0, 1]), a.clone()),
            (vec_of(field, &[1, 1, 0]), b.clone()),
            (vec_of(field, &[1, -1, 0]), group.add(a, b)),
        ],
    )
}

/// Γ¹ on 𝔰𝔩₂ over ℤ (eigenspaces of ad H).
pub fn gamma1(field: &Field) -> GGrading {
    let z = FgAbelianGroup::integers(1);
    sl2_type1(field, &z, &el(&z, &[1])).expect("valid grading")
}

/// Γ² on 𝔰𝔩₂ over (ℤ/2)²; needs char ≠ 2.
pub fn gamma2(field: &Field) -> Result<GGrading, GradingError> {
    let k = FgAbelianGroup::from_invariants(0, &[2, 2]);
    sl2_type2(field, &k, &el(&k, &[1, 0]), &el(&k, &[0, 1]))
}

/// The five-component grading on 𝔰𝔩₂ × 𝔰𝔩₂ that is not a group-grading:
/// 𝔽H×𝔽H, 𝔽E×0, 𝔽F×0, 0×𝔽(E+F), 0×𝔽(E−F).
pub fn non_group_sl2xsl2(field: &Field) -> Result<Grading, GradingError> {
    let a = sl2xsl2(field);
    let comps = vec![
        Subspace::span(field, 6, [vec_of(field, &[0, 0, 1, 0, 0, 0]), vec_of(field, &[0, 0, 0, 0, 0, 1])]),
        line(field, &[1, 0, 0, 0, 0, 0]),
        line(field, &[0, 1, 0, 0, 0, 0]),
        line(field, &[0, 0, 0, 1, 1, 0]),
        line(field, &[0, 0, 0, 1, -1, 0]),
    ];
    Grading::new(a, comps)
}

/// Γ_L¹(G, h, ḡ) on 𝔰𝔩₂ × 𝔰𝔩₂ given a preimage g of ḡ:
/// (H,H) at e, (H,−H) at h, (E,±E) at g, g + h, (F,±F) at −g, −g + h.
pub fn gamma_l1(
    field: &Field,
    group: &FgAbelianGroup,
    h: &GroupElement,
    g: &GroupElement,
) -> Result<GGrading, GradingError> {
    let ng = group.neg(g);
    GGrading::from_homogeneous(
        sl2xsl2(field),
        group.clone(),
        vec![
            (vec_of(field, &[0, 0, 1, 0, 0, 1]), group.zero()),
            (vec_of(field, &[0, 0, 1, 0, 0, -1]), h.clone()),
            (vec_of(field, &[1, 0, 0, 1, 0, 0]), g.clone()),
            (vec_of(field, &[1, 0, 0, -1, 0, 0]), group.add(g, h)),
            (vec_of(field, &[0, 1, 0, 0, 1, 0]), ng.clone()),
            (vec_of(field, &[0, 1, 0, 0, -1, 0]), group.add(&ng, h)),
        ],
    )
}

/// Γ_L²(G, h, T̄) when π⁻¹(T̄) = ⟨h, a, b⟩ is 2-elementary:
/// (H,±H) at a, a + h; (E+F, ±(E+F)) at b, b + h; (E−F, ±(E−F)) at a + b, a + b + h.
pub fn gamma_l2(
    field: &Field,
    group: &FgAbelianGroup,
    h: &GroupElement,
    a: &GroupElement,
    b: &GroupElement,
) -> Result<GGrading, GradingError> {
    let ab = group.add(a, b);
    GGrading::from_homogeneous(
        sl2xsl2(field),
        group.clone(),
        vec![
            (vec_of(field, &[0, 0, 1, 0, 0, 1]), a.clone()),
            (vec_of(field, &[0, 0, 1, 0, 0, -1]), group.add(a, h)),
            (vec_of(field, &[1, 1, 0, 1, 1, 0]), b.clone()),
            (vec_of(field, &[1, 1, 0, -1, -1, 0]), group.add(b, h)),
            (vec_of(field, &[1, -1, 0, 1, -1, 0]), ab.clone()),
            (vec_of(field, &[1, -1, 0, -1, 1, 0]), group.add(&ab, h)),
        ],
    )
}

/// The ℤ/4 × ℤ/2-grading on 𝔰𝔩₂ × 𝔰𝔩₂ with L_(m̂,n̄) = {(x, iᵐx) | x ∈ (𝔰𝔩₂)_(m̄,n̄)};
/// the field must contain a square root of −1.
pub fn sl2xsl2_z4z2(field: &Field) -> Result<GGrading, GradingError> {
    let i = field.root_of_unity(4).map_err(crate::algebra::AlgebraError::from)?;
    let one = field.one();
    let zero = field.zero();
    let mi = -&i;
    let g = z4z2();
    let pieces = [
        ([1, 0], vec_s(&[zero.clone(), zero.clone(), one.clone(), zero.clone(), zero.clone(), i.clone()])),
        ([3, 0], vec_s(&[zero.clone(), zero.clone(), one.clone(), zero.clone(), zero.clone(), mi.clone()])),
        ([0, 1], vec_of(field, &[1, 1, 0, 1, 1, 0])),
        ([2, 1], vec_of(field, &[1, 1, 0, -1, -1, 0])),
        ([1, 1], vec_s(&[one.clone(), -&one, zero.clone(), i.clone(), mi.clone(), zero.clone()])),
        ([3, 1], vec_s(&[one.clone(), -&one, zero.clone(), mi.clone(), i.clone(), zero.clone()])),
    ];
    GGrading::from_homogeneous(sl2xsl2(field), g.clone(), pieces.into_iter().map(|(d, v)| (v, el(&g, &d))).collect())
}

/// ℤ/4 × ℤ/2 presented on two generators with relators 4x, 2y.
pub fn z4z2() -> FgAbelianGroup {
    FgAbelianGroup::from_relations_i64(2, &[&[4, 0], &[0, 2]]).expect("valid presentation")
}

/// (ℤ/2)² presented on two generators.
pub fn klein() -> FgAbelianGroup {
    FgAbelianGroup::from_invariants(0, &[2, 2])
}

/// Γ̄¹ on J: 1 at (0,0), u at (1,0), v at (1,1).
pub fn jordan_gamma1(field: &Field) -> Result<GGrading, GradingError> {
    jordan_grading(field, [1, 0], [1, 1])
}

/// Γ̄² on J: 1 at (0,0), u at (0,1), v at (1,1).
pub fn jordan_gamma2(field: &Field) -> Result<GGrading, GradingError> {
    jordan_grading(field, [0, 1], [1, 1])
}

fn jordan_grading(field: &Field, du: [i64; 2], dv: [i64; 2]) -> Result<GGrading, GradingError> {
    let k = klein();
    GGrading::from_homogeneous(
        jordan_j(field),
        k.clone(),
        vec![
            (vec_of(field, &[1, 0, 0]), k.zero()),
            (vec_of(field, &[0, 1, 0]), el(&k, &du)),
            (vec_of(field, &[0, 0, 1]), el(&k, &dv)),
        ],
    )
}
