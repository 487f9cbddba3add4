//! Finitely generated abelian groups given by integer presentations.
//!
//! A presentation with n generators and relator rows R is canonicalized
//! through the Smith normal form into ℤ^r × ℤ/d₁ × … × ℤ/d_s. Elements are
//! stored only in these canonical coordinates: free coordinates first, then
//! torsion coordinates reduced into [0, dᵢ).

mod character;
mod extension;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::scalar::ScalarError;

pub use character::{characters_of_finite_group, extend_character, extend_character_pinned, Character};
pub use extension::{lift_candidates, solve_hom_extension};
pub use snf::{int_solve, left_kernel, smith_normal_form, IntMatrix, Snf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("IllDefined: {0}")]
    IllDefined(String),
    #[error("InfiniteGroup: the group is not finite")]
    InfiniteGroup,
    #[error("NoLift: no homomorphism lifts the given map")]
    NoLift,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Canonical coordinates of an element; meaningful only together with its group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<BigInt>);

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct FgAbelianGroup {
    generators: usize,
    relations: IntMatrix,
    free_rank: usize,
    torsion: Vec<BigInt>,
    /// n × k: presentation coordinates to canonical coordinates.
    to_canonical: IntMatrix,
    /// k × n: canonical generators written in presentation generators.
    from_canonical: IntMatrix,
    /// Per-generator modulus when every relator involves a single generator.
    moduli: Option<Vec<BigInt>>,
}

impl PartialEq for FgAbelianGroup {
    /// Equal presentations; use [`FgAbelianGroup::is_isomorphic`] for invariants.
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.relations == other.relations
    }
}

impl Eq for FgAbelianGroup {}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl FgAbelianGroup {
    pub fn from_presentation(generators: usize, relations: IntMatrix) -> Result<FgAbelianGroup, GroupError> {
        if relations.cols() != generators {
            return Err(GroupError::Dimension(format!(
                "relation rows have {} entries, expected {generators}",
                relations.cols()
            )));
        }
        let s = smith_normal_form(&relations);
        let rank = s.rank();
        let free: Vec<usize> = (rank..generators).collect();
        let tors: Vec<usize> = (0..rank).filter(|&i| s.diagonal[i] > BigInt::one()).collect();
        let order: Vec<usize> = free.iter().chain(&tors).copied().collect();
        let k = order.len();
        let mut to_c = IntMatrix::zeros(generators, k);
        let mut from_c = IntMatrix::zeros(k, generators);
        for (c, &i) in order.iter().enumerate() {
            for g in 0..generators {
                to_c.set(g, c, s.v.get(g, i).clone());
                from_c.set(c, g, s.v_inv.get(i, g).clone());
            }
        }
        let moduli = diagonal_moduli(generators, &relations);
        Ok(FgAbelianGroup {
            generators,
            relations,
            free_rank: free.len(),
            torsion: tors.iter().map(|&i| s.diagonal[i].clone()).collect(),
            to_canonical: to_c,
            from_canonical: from_c,
            moduli,
        })
    }

    pub fn from_relations_i64(generators: usize, relations: &[&[i64]]) -> Result<FgAbelianGroup, GroupError> {
        FgAbelianGroup::from_presentation(generators, IntMatrix::from_i64(generators, relations))
    }

    /// ℤ^r × ℤ/t₁ × …, presented on r + len(t) generators in that order.
    pub fn from_invariants(free_rank: usize, torsion: &[u64]) -> FgAbelianGroup {
        let n = free_rank + torsion.len();
        let rows: Vec<Vec<BigInt>> = torsion
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut r = vec![BigInt::zero(); n];
                r[free_rank + i] = BigInt::from(d);
                r
            })
            .collect();
        FgAbelianGroup::from_presentation(n, IntMatrix::from_rows(n, &rows)).expect("consistent sizes")
    }

    pub fn trivial() -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(0, &[])
    }

    pub fn integers(rank: usize) -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(rank, &[])
    }

    pub fn cyclic(n: u64) -> FgAbelianGroup {
        FgAbelianGroup::from_invariants(0, &[n])
    }

    /// Direct product, presented on the concatenated generators.
    pub fn direct_product(groups: &[&FgAbelianGroup]) -> FgAbelianGroup {
        let n: usize = groups.iter().map(|g| g.generators).sum();
        let mut rows = Vec::new();
        let mut offset = 0;
        for g in groups {
            for r in g.relations.row_vectors() {
                let mut row = vec![BigInt::zero(); n];
                for (j, x) in r.into_iter().enumerate() {
                    row[offset + j] = x;
                }
                rows.push(row);
            }
            offset += g.generators;
        }
        FgAbelianGroup::from_presentation(n, IntMatrix::from_rows(n, &rows)).expect("consistent sizes")
    }

    /// ℤ^r × ℤ/t₁ × … on its canonical generators, with the isomorphism
    /// from self. Presentation coordinates there are canonical coordinates here.
    pub fn canonical_presentation(&self) -> (FgAbelianGroup, GroupHom) {
        let n = self.rank();
        let rows: Vec<Vec<BigInt>> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut r = vec![BigInt::zero(); n];
                r[self.free_rank + i] = d.clone();
                r
            })
            .collect();
        let c = FgAbelianGroup::from_presentation(n, IntMatrix::from_rows(n, &rows)).expect("consistent sizes");
        let images: Vec<GroupElement> = (0..n).map(|i| c.generator(i)).collect();
        let iso = GroupHom::from_canonical_images(self, &c, &images).expect("same invariants");
        (c, iso)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of canonical coordinates.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn is_isomorphic(&self, other: &FgAbelianGroup) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }

    /// Modulus of canonical coordinate i (0 for free coordinates).
    pub fn modulus(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn to_canonical_matrix(&self) -> &IntMatrix {
        &self.to_canonical
    }

    pub fn from_canonical_matrix(&self) -> &IntMatrix {
        &self.from_canonical
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![BigInt::zero(); self.rank()])
    }

    /// Reduces raw canonical coordinates.
    pub fn canonicalize(&self, mut coords: Vec<BigInt>) -> GroupElement {
        assert_eq!(coords.len(), self.rank(), "coordinate count");
        for (i, d) in self.torsion.iter().enumerate() {
            let x = &mut coords[self.free_rank + i];
            *x = x.mod_floor(d);
        }
        GroupElement(coords)
    }

    pub fn element_i64(&self, canonical: &[i64]) -> GroupElement {
        self.canonicalize(canonical.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Element with the given coordinates on the presentation generators.
    pub fn from_presentation_coords(&self, x: &[BigInt]) -> GroupElement {
        assert_eq!(x.len(), self.generators, "presentation coordinate count");
        self.canonicalize(self.to_canonical.left_mul(x))
    }

    pub fn from_presentation_i64(&self, x: &[i64]) -> GroupElement {
        let x: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.from_presentation_coords(&x)
    }

    /// A representative in presentation coordinates; reduced when the
    /// presentation is diagonal.
    pub fn to_presentation_coords(&self, e: &GroupElement) -> Vec<BigInt> {
        let mut x = self.from_canonical.left_mul(&e.0);
        if let Some(m) = &self.moduli {
            for (v, d) in x.iter_mut().zip(m) {
                if !d.is_zero() {
                    *v = v.mod_floor(d);
                }
            }
        }
        x
    }

    /// "(a,b,…)" in presentation coordinates.
    pub fn show(&self, e: &GroupElement) -> String {
        let v: Vec<String> = self.to_presentation_coords(e).iter().map(|x| x.to_string()).collect();
        format!("({})", v.join(","))
    }

    /// Image of presentation generator i.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut x = vec![BigInt::zero(); self.generators];
        x[i] = BigInt::one();
        self.from_presentation_coords(&x)
    }

    pub fn canonical_generator(&self, i: usize) -> GroupElement {
        let mut x = vec![BigInt::zero(); self.rank()];
        x[i] = BigInt::one();
        self.canonicalize(x)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.canonicalize(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.canonicalize(a.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.canonicalize(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        self.canonicalize(a.0.iter().map(|x| k * x).collect())
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a GroupElement>>(&self, items: I) -> GroupElement {
        let mut acc = vec![BigInt::zero(); self.rank()];
        for e in items {
            for (a, x) in acc.iter_mut().zip(&e.0) {
                *a += x;
            }
        }
        self.canonicalize(acc)
    }

    /// None for elements of infinite order.
    pub fn element_order(&self, a: &GroupElement) -> Option<BigInt> {
        if a.0[..self.free_rank].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut o = BigInt::one();
        for (i, d) in self.torsion.iter().enumerate() {
            let x = &a.0[self.free_rank + i];
            o = o.lcm(&(d / x.gcd(d)));
        }
        Some(o)
    }

    /// All elements of a finite group in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement>, GroupError> {
        if !self.is_finite() {
            return Err(GroupError::InfiniteGroup);
        }
        let ds: Vec<u64> = self.torsion.iter().map(|d| d.to_u64().expect("small torsion")).collect();
        let mut out = vec![Vec::new()];
        for &d in &ds {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for prefix in &out {
                for x in 0..d {
                    let mut v: Vec<BigInt> = prefix.clone();
                    v.push(BigInt::from(x));
                    next.push(v);
                }
            }
            out = next;
        }
        Ok(out.into_iter().map(GroupElement).collect())
    }

    /// Relator rows dᵢ·e_i of the torsion part, in canonical coordinates.
    fn torsion_relators(&self) -> IntMatrix {
        let k = self.rank();
        let rows: Vec<Vec<BigInt>> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut r = vec![BigInt::zero(); k];
                r[self.free_rank + i] = d.clone();
                r
            })
            .collect();
        IntMatrix::from_rows(k, &rows)
    }

    /// Integer coefficients z with Σ zᵢ gensᵢ = t, if t lies in their span.
    pub fn express(&self, gens: &[GroupElement], t: &GroupElement) -> Option<Vec<BigInt>> {
        let k = self.rank();
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.0.clone()).collect();
        let a = IntMatrix::from_rows(k, &rows).stack(&self.torsion_relators());
        int_solve(&a, &t.0).map(|z| z[..gens.len()].to_vec())
    }

    pub fn in_span(&self, gens: &[GroupElement], t: &GroupElement) -> bool {
        self.express(gens, t).is_some()
    }

    /// The subgroup generated by `gens`, with its embedding.
    pub fn subgroup(&self, gens: &[GroupElement]) -> Subgroup {
        let k = self.rank();
        let s = gens.len();
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.0.clone()).collect();
        let a = IntMatrix::from_rows(k, &rows).stack(&self.torsion_relators());
        let rel: Vec<Vec<BigInt>> = left_kernel(&a).into_iter().map(|z| z[..s].to_vec()).collect();
        let group = FgAbelianGroup::from_presentation(s, IntMatrix::from_rows(s, &rel)).expect("consistent sizes");
        let embedding = GroupHom::from_images(&group, self, gens).expect("relators map to zero");
        Subgroup { group, embedding }
    }

    /// G / ⟨gens⟩ with the projection.
    pub fn quotient(&self, gens: &[GroupElement]) -> (FgAbelianGroup, GroupHom) {
        let k = self.rank();
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.0.clone()).collect();
        let rel = self.torsion_relators().stack(&IntMatrix::from_rows(k, &rows));
        let q = FgAbelianGroup::from_presentation(k, rel).expect("consistent sizes");
        let images: Vec<GroupElement> = (0..k).map(|i| q.generator(i)).collect();
        let proj = GroupHom::from_canonical_images(self, &q, &images).expect("projection is well defined");
        (q, proj)
    }
}

fn diagonal_moduli(n: usize, rel: &IntMatrix) -> Option<Vec<BigInt>> {
    let mut m = vec![BigInt::zero(); n];
    for r in 0..rel.rows() {
        let nz: Vec<usize> = (0..n).filter(|&j| !rel.get(r, j).is_zero()).collect();
        match nz.as_slice() {
            [] => {}
            [j] => m[*j] = m[*j].gcd(rel.get(r, *j)),
            _ => return None,
        }
    }
    Some(m)
}

/// A subgroup as an abstract group together with its inclusion.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FgAbelianGroup,
    pub embedding: GroupHom,
}

impl Subgroup {
    /// Canonical generators of the subgroup as elements of the ambient group.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.group.rank()).map(|i| self.embedding.apply(&self.group.canonical_generator(i))).collect()
    }

    pub fn contains(&self, t: &GroupElement) -> bool {
        self.embedding.codomain().in_span(&self.generators(), t)
    }

    /// Ambient images of all elements, when finite.
    pub fn elements(&self) -> Result<Vec<GroupElement>, GroupError> {
        Ok(self.group.elements()?.iter().map(|e| self.embedding.apply(e)).collect())
    }

    /// Equality as subsets of the ambient group.
    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.generators().iter().all(|g| other.contains(g)) && other.generators().iter().all(|g| self.contains(g))
    }
}

/// A homomorphism stored by the images of the canonical generators.
#[derive(Debug, Clone)]
pub struct GroupHom {
    domain: FgAbelianGroup,
    codomain: FgAbelianGroup,
    /// k_dom × k_cod, row i = image of canonical generator i.
    matrix: IntMatrix,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.matrix == other.matrix
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    /// Hom from images of the presentation generators of the domain.
    pub fn from_images(
        domain: &FgAbelianGroup,
        codomain: &FgAbelianGroup,
        images: &[GroupElement],
    ) -> Result<GroupHom, GroupError> {
        if images.len() != domain.generators {
            return Err(GroupError::Dimension(format!("{} images for {} generators", images.len(), domain.generators)));
        }
        for (r, rel) in domain.relations.row_vectors().iter().enumerate() {
            let img = combine(codomain, rel, images);
            if !img.is_zero() {
                return Err(GroupError::IllDefined(format!("relator {r} maps to {img} in {codomain}")));
            }
        }
        let rows: Vec<Vec<BigInt>> =
            (0..domain.rank()).map(|c| combine(codomain, domain.from_canonical.row(c), images).0).collect();
        Ok(GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::from_rows(codomain.rank(), &rows),
        })
    }

    /// Hom from images of the canonical generators of the domain.
    pub fn from_canonical_images(
        domain: &FgAbelianGroup,
        codomain: &FgAbelianGroup,
        images: &[GroupElement],
    ) -> Result<GroupHom, GroupError> {
        if images.len() != domain.rank() {
            return Err(GroupError::Dimension(format!(
                "{} images for {} canonical generators",
                images.len(),
                domain.rank()
            )));
        }
        for (i, d) in domain.torsion.iter().enumerate() {
            let img = codomain.scale(d, &images[domain.free_rank + i]);
            if !img.is_zero() {
                return Err(GroupError::IllDefined(format!(
                    "generator of order {d} maps to an element whose {d}-th multiple is {img}"
                )));
            }
        }
        let rows: Vec<Vec<BigInt>> = images.iter().map(|e| codomain.canonicalize(e.0.clone()).0).collect();
        Ok(GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::from_rows(codomain.rank(), &rows),
        })
    }

    pub fn identity(g: &FgAbelianGroup) -> GroupHom {
        let images: Vec<GroupElement> = (0..g.rank()).map(|i| g.canonical_generator(i)).collect();
        GroupHom::from_canonical_images(g, g, &images).expect("identity is well defined")
    }

    pub fn zero(domain: &FgAbelianGroup, codomain: &FgAbelianGroup) -> GroupHom {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::zeros(domain.rank(), codomain.rank()),
        }
    }

    pub fn domain(&self) -> &FgAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbelianGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        self.codomain.canonicalize(self.matrix.left_mul(&x.0))
    }

    /// Images of the canonical generators.
    pub fn images(&self) -> Vec<GroupElement> {
        (0..self.domain.rank()).map(|i| GroupElement(self.matrix.row(i).to_vec())).collect()
    }

    /// Images of the presentation generators.
    pub fn presentation_images(&self) -> Vec<GroupElement> {
        (0..self.domain.generators).map(|i| self.apply(&self.domain.generator(i))).collect()
    }

    /// self followed by `next`.
    pub fn then(&self, next: &GroupHom) -> GroupHom {
        assert!(self.codomain == next.domain, "composition of incompatible homs");
        let images: Vec<GroupElement> = self.images().iter().map(|e| next.apply(e)).collect();
        GroupHom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            matrix: IntMatrix::from_rows(next.codomain.rank(), &images.into_iter().map(|e| e.0).collect::<Vec<_>>()),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        let kd = self.domain.rank();
        let a = self.matrix.stack(&self.codomain.torsion_relators());
        let gens: Vec<GroupElement> = left_kernel(&a)
            .into_iter()
            .map(|z| self.domain.canonicalize(z[..kd].to_vec()))
            .filter(|e| !e.is_zero())
            .collect();
        self.domain.subgroup(&gens)
    }

    pub fn image(&self) -> Subgroup {
        self.codomain.subgroup(&self.images())
    }

    pub fn preimage(&self, t: &GroupElement) -> Option<GroupElement> {
        let z = self.codomain.express(&self.images(), t)?;
        Some(self.domain.canonicalize(z))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        let imgs = self.images();
        (0..self.codomain.rank()).all(|i| self.codomain.in_span(&imgs, &self.codomain.canonical_generator(i)))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.is_isomorphic(&self.codomain) && self.is_surjective() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_isomorphism() {
            return None;
        }
        let images: Vec<GroupElement> = (0..self.codomain.rank())
            .map(|i| self.preimage(&self.codomain.canonical_generator(i)))
            .collect::<Option<_>>()?;
        GroupHom::from_canonical_images(&self.codomain, &self.domain, &images).ok()
    }

    /// Same map between the same groups.
    pub fn same_map(&self, other: &GroupHom) -> bool {
        self.domain.rank() == other.domain.rank()
            && self.codomain.is_isomorphic(&other.codomain)
            && self.matrix == other.matrix
    }
}

fn combine(g: &FgAbelianGroup, coeffs: &[BigInt], elems: &[GroupElement]) -> GroupElement {
    let mut acc = vec![BigInt::zero(); g.rank()];
    for (c, e) in coeffs.iter().zip(elems) {
        if c.is_zero() {
            continue;
        }
        for (a, x) in acc.iter_mut().zip(&e.0) {
            *a += c * x;
        }
    }
    g.canonicalize(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn infinite_cyclic_and_trivial() {
        let z = FgAbelianGroup::from_presentation(1, IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(z.free_rank(), 1);
        assert!(z.torsion().is_empty());
        let t = FgAbelianGroup::from_relations_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(t.is_trivial());
        assert_eq!(t.to_string(), "1");
    }

    #[test]
    fn z4_z2_projection() {
        let g = FgAbelianGroup::from_invariants(0, &[4, 2]);
        let q = FgAbelianGroup::from_invariants(0, &[2, 2]);
        let pi = GroupHom::from_images(&g, &q, &[q.generator(0), q.generator(1)]).unwrap();
        assert!(pi.is_surjective());
        let k = pi.kernel();
        assert_eq!(k.group.order(), Some(BigInt::from(2)));
        assert!(k.contains(&g.from_presentation_i64(&[2, 0])));
        assert!(!k.contains(&g.from_presentation_i64(&[0, 1])));
    }

    #[test]
    fn doubling_on_z() {
        let z = FgAbelianGroup::integers(1);
        let h = GroupHom::from_images(&z, &z, &[z.element_i64(&[2])]).unwrap();
        assert!(h.is_injective());
        assert!(!h.is_surjective());
        assert!(GroupHom::identity(&z).is_isomorphism());
    }

    #[test]
    fn ill_defined_hom() {
        let z2 = FgAbelianGroup::cyclic(2);
        let z = FgAbelianGroup::integers(1);
        let err = GroupHom::from_images(&z2, &z, &[z.element_i64(&[1])]).unwrap_err();
        assert!(matches!(err, GroupError::IllDefined(_)));
    }

    #[test]
    fn quotient_and_display_coords() {
        let g = FgAbelianGroup::from_invariants(1, &[2]);
        let (q, p) = g.quotient(&[g.from_presentation_i64(&[0, 1])]);
        assert!(q.is_isomorphic(&FgAbelianGroup::integers(1)));
        assert!(p.is_surjective());
        let e = g.from_presentation_i64(&[3, 5]);
        assert_eq!(g.to_presentation_coords(&e), big(&[3, 1]));
    }
}
