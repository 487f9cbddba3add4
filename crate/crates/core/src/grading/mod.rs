//! Gradings as direct-sum decompositions closed under products, and their
//! realizations by abelian groups.

mod maps;
mod product;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::abgroup::{FgAbelianGroup, GroupElement, GroupError, GroupHom, IntMatrix};
use crate::algebra::{Algebra, AlgebraError, AlgebraMap};
use crate::linalg::{is_zero_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

pub use maps::{check_equivalence, check_g_isomorphism, diagonal_automorphism, Equivalence};
pub use product::{free_product_group_grading, product_g_grading, product_grading, product_group_grading};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("NotDirectSum: {0}")]
    NotDirectSum(String),
    #[error("NotClosed: the product of components {u} and {v} lies in no component")]
    NotClosed { u: usize, v: usize, product: Subspace },
    #[error("NotGroupGrading: factor {0} is not a group-grading")]
    NotGroupGrading(usize),
    #[error("NotGradedSubalgebra: {0}")]
    NotGradedSubalgebra(String),
    #[error("degree map is not injective: components {0} and {1} share a degree")]
    DegreeNotInjective(usize, usize),
    #[error("degrees of components {u} and {v} do not add up to the degree of component {w}")]
    IncompatibleDegrees { u: usize, v: usize, w: usize },
    #[error("GroupMismatch: {0}")]
    GroupMismatch(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A grading: nonzero subspaces in canonical (RREF lexicographic) order,
/// with the product table `products[u * n + v] = Some(w)` when 0 ≠ UV ⊆ W.
#[derive(Clone)]
pub struct Grading {
    algebra: Arc<Algebra>,
    components: Vec<Subspace>,
    products: Vec<Option<usize>>,
    /// inverse of the matrix whose columns are the component bases, in order
    coords: Matrix,
    offsets: Vec<usize>,
}

impl fmt::Debug for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

impl PartialEq for Grading {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_structure(&other.algebra) && self.components == other.components
    }
}

pub fn validate_grading(algebra: &Arc<Algebra>, components: &[Vec<Vector>]) -> Result<Grading, GradingError> {
    let d = algebra.dim();
    let f = algebra.field();
    let mut spaces = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        if c.iter().any(|v| v.len() != d) {
            return Err(GradingError::Dimension(format!("component {i} has vectors of the wrong length")));
        }
        spaces.push(Subspace::span(f, d, c.iter().cloned()));
    }
    Grading::new(algebra.clone(), spaces)
}

impl Grading {
    /// Validates and canonically orders the components.
    pub fn new(algebra: Arc<Algebra>, mut components: Vec<Subspace>) -> Result<Grading, GradingError> {
        let d = algebra.dim();
        let f = algebra.field().clone();
        for (i, c) in components.iter().enumerate() {
            if c.ambient() != d || c.field() != &f {
                return Err(GradingError::Dimension(format!("component {i} does not live in the algebra")));
            }
            if c.is_zero() {
                return Err(GradingError::NotDirectSum(format!("component {i} is zero")));
            }
        }
        components.sort();
        let total: usize = components.iter().map(|c| c.dim()).sum();
        if total != d {
            return Err(GradingError::NotDirectSum(format!(
                "component dimensions add up to {total}, the algebra has dimension {d}"
            )));
        }
        let mut basis = Vec::with_capacity(d);
        let mut offsets = Vec::with_capacity(components.len() + 1);
        for c in &components {
            offsets.push(basis.len());
            basis.extend(c.basis().iter().cloned());
        }
        offsets.push(d);
        let coords = Matrix::from_columns(&f, d, &basis)
            .inverse()
            .ok_or_else(|| GradingError::NotDirectSum("the components are not independent".into()))?;
        let mut g = Grading { algebra, components, products: Vec::new(), coords, offsets };
        let n = g.components.len();
        let mut products = vec![None; n * n];
        for u in 0..n {
            for v in 0..n {
                let p = g.algebra.product_subspace(&g.components[u], &g.components[v]);
                if p.is_zero() {
                    continue;
                }
                let w = g.homogeneous_component(&p.basis()[0]).filter(|&w| p.is_subspace_of(&g.components[w]));
                match w {
                    Some(w) => products[u * n + v] = Some(w),
                    None => return Err(GradingError::NotClosed { u, v, product: p }),
                }
            }
        }
        g.products = products;
        Ok(g)
    }

    /// The grading with the single component A.
    pub fn trivial(algebra: &Arc<Algebra>) -> Grading {
        Grading::new(algebra.clone(), vec![algebra.full_space()]).expect("the trivial grading is valid")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Subspace {
        &self.components[i]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.components.len() == 1
    }

    /// w with 0 ≠ UV ⊆ W.
    pub fn product_index(&self, u: usize, v: usize) -> Option<usize> {
        self.products[u * self.len() + v]
    }

    /// Ordered pairs (u, v) with nonzero product, and the receiving component.
    pub fn product_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter_map(|(u, v)| self.product_index(u, v).map(|w| (u, v, w)))
            .collect()
    }

    /// Components of x: `parts[i]` lies in component i and the parts add up to x.
    pub fn decompose(&self, x: &[Scalar]) -> Vec<Vector> {
        let c = self.coords.mul_vec(x);
        (0..self.len())
            .map(|i| {
                let range = self.offsets[i]..self.offsets[i + 1];
                self.components[i].combine(&c[range])
            })
            .collect()
    }

    /// Projection onto component i along the others.
    pub fn project(&self, x: &[Scalar], i: usize) -> Vector {
        let c = self.coords.mul_vec(x);
        self.components[i].combine(&c[self.offsets[i]..self.offsets[i + 1]])
    }

    /// Index of the component containing the nonzero vector x, if x is homogeneous.
    pub fn homogeneous_component(&self, x: &[Scalar]) -> Option<usize> {
        let c = self.coords.mul_vec(x);
        let mut found = None;
        for i in 0..self.len() {
            if c[self.offsets[i]..self.offsets[i + 1]].iter().any(|s| !s.is_zero()) {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// S = ⊕ (S ∩ U).
    pub fn is_graded_subspace(&self, s: &Subspace) -> bool {
        let total: usize = self.components.iter().map(|c| c.intersection(s).dim()).sum();
        total == s.dim()
    }

    /// Matrix whose columns are the component bases in order.
    pub fn homogeneous_basis(&self) -> Vec<Vector> {
        self.components.iter().flat_map(|c| c.basis().iter().cloned()).collect()
    }

    /// U(Γ): one generator per component, one relator u + v − w per
    /// ordered pair with 0 ≠ UV ⊆ W.
    pub fn universal_group(&self) -> UniversalGroup {
        let n = self.len();
        let rows: Vec<Vec<i64>> = self
            .product_triples()
            .into_iter()
            .map(|(u, v, w)| {
                let mut r = vec![0i64; n];
                r[u] += 1;
                r[v] += 1;
                r[w] -= 1;
                r
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let group = FgAbelianGroup::from_presentation(n, IntMatrix::from_i64(n, &refs)).expect("consistent sizes");
        let degrees = (0..n).map(|i| group.generator(i)).collect();
        UniversalGroup { group, degrees }
    }

    /// δ^U is injective.
    pub fn is_group_grading(&self) -> bool {
        let u = self.universal_group();
        let mut seen = u.degrees.clone();
        seen.sort();
        seen.dedup();
        seen.len() == self.len()
    }

    /// Γ_gr over U(Γ): components with equal universal degree merged.
    pub fn induced_group_grading(&self) -> GGrading {
        let u = self.universal_group();
        let mut pieces: Vec<(GroupElement, Subspace)> = Vec::new();
        for (c, g) in self.components.iter().zip(&u.degrees) {
            match pieces.iter_mut().find(|(h, _)| h == g) {
                Some((_, s)) => *s = s.sum(c),
                None => pieces.push((g.clone(), c.clone())),
            }
        }
        GGrading::new(self.algebra.clone(), u.group, pieces).expect("the induced group-grading is compatible")
    }

    /// The surjection sending each component of `self` to the component of
    /// `coarser` containing it.
    pub fn refinement_map(&self, coarser: &Grading) -> Option<RefinementMap> {
        if !self.algebra.same_structure(&coarser.algebra) {
            return None;
        }
        let map: Option<Vec<usize>> =
            self.components.iter().map(|c| coarser.components.iter().position(|w| c.is_subspace_of(w))).collect();
        let map = map?;
        let mut hit = vec![false; coarser.len()];
        for &w in &map {
            hit[w] = true;
        }
        hit.iter().all(|&h| h).then_some(RefinementMap { map, coarser_len: coarser.len() })
    }

    /// Γ|_S on the subalgebra S (in the coordinates of its RREF basis),
    /// with the inclusion map.
    pub fn restrict(&self, s: &Subspace) -> Result<(Grading, AlgebraMap), GradingError> {
        if !self.algebra.is_subalgebra(s) {
            return Err(GradingError::NotGradedSubalgebra("not closed under multiplication".into()));
        }
        if !self.is_graded_subspace(s) {
            return Err(GradingError::NotGradedSubalgebra(
                "S is not the sum of its intersections with the components".into(),
            ));
        }
        let (sub, incl) = self.algebra.subalgebra(s)?;
        let f = sub.field().clone();
        let parts: Vec<Subspace> = self
            .components
            .iter()
            .map(|c| c.intersection(s))
            .filter(|c| !c.is_zero())
            .map(|c| {
                let vs = c.basis().iter().map(|v| s.coordinates(v).expect("inside S"));
                Subspace::span(&f, sub.dim(), vs)
            })
            .collect();
        Ok((Grading::new(sub, parts)?, incl))
    }

    /// The grading transported along an isomorphism.
    pub fn transport(&self, phi: &AlgebraMap) -> Result<Grading, GradingError> {
        if !phi.source().same_structure(&self.algebra) {
            return Err(GradingError::Dimension("map source is not the graded algebra".into()));
        }
        Grading::new(phi.target().clone(), self.components.iter().map(|c| phi.image_of(c)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalGroup {
    pub group: FgAbelianGroup,
    /// δ^U, aligned with the component order
    pub degrees: Vec<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementMap {
    map: Vec<usize>,
    coarser_len: usize,
}

impl RefinementMap {
    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_proper(&self) -> bool {
        self.map.len() != self.coarser_len
    }
}

/// A grading with an injective, product-compatible degree map into G.
#[derive(Clone)]
pub struct GGrading {
    grading: Grading,
    group: FgAbelianGroup,
    degrees: Vec<GroupElement>,
}

impl fmt::Debug for GGrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (g, c) in self.degrees.iter().zip(self.grading.components()) {
            m.entry(&g.to_string(), c);
        }
        m.finish()
    }
}

impl PartialEq for GGrading {
    fn eq(&self, other: &Self) -> bool {
        self.grading == other.grading && self.group == other.group && self.degrees == other.degrees
    }
}

impl GGrading {
    /// `pieces` pairs a degree with its homogeneous component; degrees
    /// must be distinct.
    pub fn new(
        algebra: Arc<Algebra>,
        group: FgAbelianGroup,
        pieces: Vec<(GroupElement, Subspace)>,
    ) -> Result<GGrading, GradingError> {
        for (g, _) in &pieces {
            if g.0.len() != group.rank() {
                return Err(GradingError::GroupMismatch(format!("degree {g} is not an element of {group}")));
            }
        }
        let pieces: Vec<(GroupElement, Subspace)> =
            pieces.into_iter().map(|(g, s)| (group.canonicalize(g.0), s)).collect();
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                if pieces[i].0 == pieces[j].0 {
                    return Err(GradingError::DegreeNotInjective(i, j));
                }
            }
        }
        let grading = Grading::new(algebra, pieces.iter().map(|(_, s)| s.clone()).collect())?;
        let degrees: Vec<GroupElement> = grading
            .components()
            .iter()
            .map(|c| pieces.iter().find(|(_, s)| s == c).expect("same components").0.clone())
            .collect();
        for (u, v, w) in grading.product_triples() {
            if group.add(&degrees[u], &degrees[v]) != degrees[w] {
                return Err(GradingError::IncompatibleDegrees { u, v, w });
            }
        }
        Ok(GGrading { grading, group, degrees })
    }

    /// Groups homogeneous vectors by degree.
    pub fn from_homogeneous(
        algebra: Arc<Algebra>,
        group: FgAbelianGroup,
        items: Vec<(Vector, GroupElement)>,
    ) -> Result<GGrading, GradingError> {
        let d = algebra.dim();
        let f = algebra.field().clone();
        let mut pieces: Vec<(GroupElement, Subspace)> = Vec::new();
        for (v, g) in items {
            if v.len() != d {
                return Err(GradingError::Dimension("homogeneous vector has the wrong length".into()));
            }
            if g.0.len() != group.rank() {
                return Err(GradingError::GroupMismatch(format!("degree {g} is not an element of {group}")));
            }
            let g = group.canonicalize(g.0);
            match pieces.iter_mut().find(|(h, _)| *h == g) {
                Some((_, s)) => {
                    s.insert(v);
                }
                None => pieces.push((g, Subspace::span(&f, d, [v]))),
            }
        }
        GGrading::new(algebra, group, pieces)
    }

    /// Everything in degree e.
    pub fn trivial(algebra: &Arc<Algebra>, group: &FgAbelianGroup) -> GGrading {
        GGrading::new(algebra.clone(), group.clone(), vec![(group.zero(), algebra.full_space())])
            .expect("the trivial grading is compatible")
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.grading.algebra()
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn components(&self) -> &[Subspace] {
        self.grading.components()
    }

    pub fn len(&self) -> usize {
        self.grading.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grading.is_empty()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.degrees.iter().position(|h| h == g)
    }

    /// A_g, the zero subspace off the support.
    pub fn component_at(&self, g: &GroupElement) -> Subspace {
        match self.index_of(g) {
            Some(i) => self.grading.component(i).clone(),
            None => Subspace::zero(self.algebra().field(), self.algebra().dim()),
        }
    }

    /// supp_G(Γ), sorted.
    pub fn support(&self) -> Vec<GroupElement> {
        let mut s = self.degrees.clone();
        s.sort();
        s
    }

    /// (degree, component) pairs sorted by degree.
    pub fn by_degree(&self) -> Vec<(GroupElement, Subspace)> {
        let mut v: Vec<(GroupElement, Subspace)> =
            self.degrees.iter().cloned().zip(self.components().iter().cloned()).collect();
        v.sort();
        v
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, x: &[Scalar]) -> Option<GroupElement> {
        if is_zero_vector(x) {
            return None;
        }
        self.grading.homogeneous_component(x).map(|i| self.degrees[i].clone())
    }

    /// Homogeneous basis with degrees, component by component.
    pub fn homogeneous_basis(&self) -> Vec<(Vector, GroupElement)> {
        self.components()
            .iter()
            .zip(&self.degrees)
            .flat_map(|(c, g)| c.basis().iter().map(move |v| (v.clone(), g.clone())))
            .collect()
    }

    /// Coarsening induced by β: G → H.
    pub fn coarsen(&self, beta: &GroupHom) -> Result<GGrading, GradingError> {
        if beta.domain() != &self.group {
            return Err(GradingError::GroupMismatch("β is not defined on the grading group".into()));
        }
        let mut pieces: Vec<(GroupElement, Subspace)> = Vec::new();
        for (c, g) in self.components().iter().zip(&self.degrees) {
            let h = beta.apply(g);
            match pieces.iter_mut().find(|(k, _)| *k == h) {
                Some((_, s)) => *s = s.sum(c),
                None => pieces.push((h, c.clone())),
            }
        }
        GGrading::new(self.algebra().clone(), beta.codomain().clone(), pieces)
    }

    /// The hom β: U(Γ) → G with β ∘ δ^U = δ (well defined by universality).
    pub fn universal_hom(&self) -> Result<(UniversalGroup, GroupHom), GradingError> {
        let u = self.grading.universal_group();
        let beta = GroupHom::from_images(&u.group, &self.group, &self.degrees)?;
        Ok((u, beta))
    }

    /// (G, δ) is the universal group of Γ: the induced β is an isomorphism.
    pub fn is_universal(&self) -> bool {
        self.universal_hom().map(|(_, b)| b.is_isomorphism()).unwrap_or(false)
    }

    /// The same grading transported along an isomorphism of algebras.
    pub fn transport(&self, phi: &AlgebraMap) -> Result<GGrading, GradingError> {
        let pieces = self.degrees.iter().zip(self.components()).map(|(g, c)| (g.clone(), phi.image_of(c))).collect();
        GGrading::new(phi.target().clone(), self.group.clone(), pieces)
    }

    /// The same components with degrees pushed through an isomorphism.
    pub fn regrade(&self, alpha: &GroupHom) -> Result<GGrading, GradingError> {
        if !alpha.is_isomorphism() {
            return Err(GradingError::GroupMismatch("regrading needs a group isomorphism".into()));
        }
        self.coarsen(alpha)
    }

    /// The restriction to a graded subalgebra, with the inclusion map.
    pub fn restrict(&self, s: &Subspace) -> Result<(GGrading, AlgebraMap), GradingError> {
        let (sub, incl) = self.grading.restrict(s)?;
        let f = sub.algebra().field().clone();
        let pieces = self
            .degrees
            .iter()
            .zip(self.components())
            .map(|(g, c)| (g, c.intersection(s)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| {
                let vs = c.basis().iter().map(|v| s.coordinates(v).expect("inside S"));
                (g.clone(), Subspace::span(&f, s.dim(), vs))
            })
            .collect();
        Ok((GGrading::new(sub.algebra().clone(), self.group.clone(), pieces)?, incl))
    }

    /// The linear map x_g ↦ s(g) x_g.
    pub(crate) fn scaling_matrix(&self, scale: impl Fn(&GroupElement) -> Scalar) -> Matrix {
        let a = self.algebra();
        let mut cols: Vec<Vector> = Vec::with_capacity(a.dim());
        for (c, g) in self.components().iter().zip(&self.degrees) {
            let s = scale(g);
            cols.extend(c.basis().iter().map(|v| v.iter().map(|x| x * &s).collect::<Vector>()));
        }
        Matrix::from_columns(a.field(), a.dim(), &cols).mul(&self.grading.coords)
    }
}
