//! Lifting a hom Ū¹ → Ū² through surjections with finite kernels.

use super::{GroupElement, GroupError, GroupHom};

/// For each canonical generator u of U¹, every element x of U² with
/// π²(x) = α(π¹(u)) whose order is compatible with u. Any choice of one
/// candidate per generator is a hom making the square commute.
pub fn lift_candidates(alpha: &GroupHom, pi1: &GroupHom, pi2: &GroupHom) -> Result<Vec<Vec<GroupElement>>, GroupError> {
    if pi1.codomain() != alpha.domain() || pi2.codomain() != alpha.codomain() {
        return Err(GroupError::Dimension("maps do not form a square".into()));
    }
    let u1 = pi1.domain();
    let u2 = pi2.domain();
    let ker: Vec<GroupElement> = pi2.kernel().elements()?;
    let mut out = Vec::with_capacity(u1.rank());
    for i in 0..u1.rank() {
        let target = alpha.apply(&pi1.apply(&u1.canonical_generator(i)));
        let Some(p) = pi2.preimage(&target) else {
            return Err(GroupError::NoLift);
        };
        let d = u1.modulus(i);
        let cands: Vec<GroupElement> =
            ker.iter().map(|k| u2.add(&p, k)).filter(|x| d == 0u32.into() || u2.scale(&d, x).is_zero()).collect();
        if cands.is_empty() {
            return Err(GroupError::NoLift);
        }
        let mut cands = cands;
        cands.sort();
        out.push(cands);
    }
    Ok(out)
}

/// Searches the finite set of lifts ᾶ with π² ∘ ᾶ = α ∘ π¹. With
/// `require_iso`, returns the first lift (lexicographic in the candidate
/// lists) that is an isomorphism, or `None` when the set has none.
pub fn solve_hom_extension(
    alpha: &GroupHom,
    pi1: &GroupHom,
    pi2: &GroupHom,
    require_iso: bool,
) -> Result<Option<GroupHom>, GroupError> {
    let cands = lift_candidates(alpha, pi1, pi2)?;
    let u1 = pi1.domain();
    let u2 = pi2.domain();
    let mut idx = vec![0usize; cands.len()];
    loop {
        let images: Vec<GroupElement> = idx.iter().zip(&cands).map(|(&i, c)| c[i].clone()).collect();
        let h = GroupHom::from_canonical_images(u1, u2, &images)?;
        if !require_iso || h.is_isomorphism() {
            return Ok(Some(h));
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < cands[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
