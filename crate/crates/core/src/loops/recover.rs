use std::sync::Arc;

use crate::abgroup::{extend_character, Character, GroupElement, GroupHom};
use crate::algebra::{primitive_idempotents, Algebra, AlgebraMap};
use crate::grading::{check_g_isomorphism, GGrading};
use crate::linalg::{solve_matrix, Matrix, Subspace};

use super::{build_loop, graded_centroid, GradedCentroidProfile, LoopAlgebra, LoopError};

/// A graded-central-simple B written as a loop algebra of B/(1−e)B.
#[derive(Debug, Clone)]
pub struct Recovery {
    pub profile: GradedCentroidProfile,
    /// π: G → G/H.
    pub pi: GroupHom,
    /// The chosen primitive idempotent e of C(B).
    pub idempotent: Matrix,
    /// B → A = B/(1−e)B.
    pub projection: AlgebraMap,
    /// The G/H-grading on A by images of the components of B.
    pub base: GGrading,
    pub loop_algebra: LoopAlgebra,
    /// B_g ∋ x ↦ (x + (1−e)B) ⊗ g, a G-graded isomorphism onto the loop.
    pub iso: AlgebraMap,
}

pub fn recover_base(gg: &GGrading, seed: u64) -> Result<Recovery, LoopError> {
    let profile = graded_centroid(gg)?;
    if !profile.support_is_subgroup {
        return Err(LoopError::SupportNotSubgroup);
    }
    let b = gg.algebra();
    let f = b.field();
    let n = profile.support.len();
    let p = f.characteristic();
    if p != 0 && (n as u64).is_multiple_of(p) {
        return Err(LoopError::CharDividesKernel { p, n });
    }
    let (gbar, pi) = gg.group().quotient(&profile.support);

    let idems = primitive_idempotents(&profile.basis(), seed)?;
    if idems.len() != n {
        return Err(LoopError::Invariant(format!("{} primitive idempotents for |H| = {n}", idems.len())));
    }
    let e = idems[0].clone();
    let ideal = Matrix::identity(f, b.dim()).sub(&e).column_space();
    let (a, proj) = b.quotient(&ideal)?;

    let mut pieces: Vec<(GroupElement, Subspace)> = Vec::new();
    for (g, comp) in gg.degrees().iter().zip(gg.components()) {
        let gb = pi.apply(g);
        let img = proj.image_of(comp);
        if img.dim() != comp.dim() {
            return Err(LoopError::Invariant(format!("B_{g} does not embed in the quotient")));
        }
        match pieces.iter().find(|(h, _)| *h == gb) {
            Some((_, s)) if *s != img => {
                return Err(LoopError::Invariant(format!("components over {gb} have different images")));
            }
            Some(_) => {}
            None => pieces.push((gb, img)),
        }
    }
    let base = GGrading::new(a, gbar, pieces)?;
    let lp = build_loop(&base, &pi)?;

    let hb = gg.homogeneous_basis();
    let mut cols = Vec::with_capacity(hb.len());
    for (v, g) in &hb {
        let x = proj.apply(v);
        cols.push(lp.embed(&x, g).ok_or_else(|| LoopError::Invariant("image has the wrong degree".into()))?);
    }
    let vs: Vec<_> = hb.into_iter().map(|(v, _)| v).collect();
    let bh = Matrix::from_columns(f, b.dim(), &vs);
    let m = Matrix::from_columns(f, lp.dim(), &cols).mul(&bh.inverse().expect("a homogeneous basis"));
    let iso = AlgebraMap::new(b.clone(), lp.algebra().clone(), m)
        .map_err(|e| LoopError::Invariant(format!("recovery map: {e}")))?;
    if !check_g_isomorphism(&iso, gg, lp.grading()) {
        return Err(LoopError::Invariant("recovery map is not a G-graded isomorphism".into()));
    }
    Ok(Recovery { profile, pi, idempotent: e, projection: proj, base, loop_algebra: lp, iso })
}

/// An isomorphism between a recovered base and the original one.
#[derive(Debug, Clone)]
pub struct BaseIsomorphism {
    /// ν: G/H → Ḡ induced by the identity of G.
    pub nu: GroupHom,
    /// φ: A_rec → A, with φ(p(x ⊗ g)) = χ(g) x.
    pub phi: AlgebraMap,
    /// χ with s_h e = χ(h) e on H, extended to G.
    pub character: Character,
    /// φ carries each recovered component over ḡ onto A_{ν(ḡ)}.
    pub graded: bool,
}

/// For a recovery run on the grading of `l` itself.
pub fn base_isomorphism(l: &LoopAlgebra, r: &Recovery) -> Result<BaseIsomorphism, LoopError> {
    let g = l.pi.domain();
    if r.pi.domain() != g || !r.projection.source().same_structure(&l.algebra) {
        return Err(LoopError::GroupMismatch("the recovery was not run on this loop".into()));
    }
    let f = l.algebra.field();
    let e = &r.idempotent;
    let pivot = e.flatten().iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
    let k = &l.kernel;
    let mut values = Vec::with_capacity(k.group.rank());
    for j in 0..k.group.rank() {
        let h = k.embedding.apply(&k.group.canonical_generator(j));
        let se = l.shift(&h).mul(e);
        let lam = &se.flatten()[pivot] * &e.flatten()[pivot].inv().expect("pivot");
        if se != e.scale(&lam) {
            return Err(LoopError::Invariant("the idempotent is not an eigenvector of the shifts".into()));
        }
        values.push(lam);
    }
    let chi = Character::new(&k.group, f, values)?;
    let chit = extend_character(&chi, &k.embedding)?;

    let a = l.base.algebra();
    let cols: Vec<_> = (0..l.dim())
        .map(|i| {
            let s = chit.eval(&l.entries[i].degree);
            l.base_vector(i).iter().map(|x| x * &s).collect()
        })
        .collect();
    let psi = Matrix::from_columns(f, a.dim(), &cols);
    let p = r.projection.matrix();
    let (xt, _) = solve_matrix(&p.transpose(), &psi.transpose())
        .ok_or_else(|| LoopError::Invariant("x ⊗ g ↦ χ(g)x does not factor through the quotient".into()))?;
    let rec: &Arc<Algebra> = r.base.algebra();
    let phi = AlgebraMap::new(rec.clone(), a.clone(), xt.transpose())
        .map_err(|e| LoopError::Invariant(format!("base map: {e}")))?;
    if !phi.is_bijective() {
        return Err(LoopError::Invariant("base map is not bijective".into()));
    }
    let q = r.pi.codomain();
    let images: Vec<GroupElement> = (0..g.rank()).map(|i| l.pi.apply(&g.canonical_generator(i))).collect();
    let nu = GroupHom::from_images(q, l.pi.codomain(), &images)?;
    let graded = nu.is_isomorphism()
        && r.base.len() == l.base.len()
        && r.base
            .degrees()
            .iter()
            .zip(r.base.components())
            .all(|(gb, c)| phi.image_of(c) == l.base.component_at(&nu.apply(gb)));
    Ok(BaseIsomorphism { nu, phi, character: chit, graded })
}
