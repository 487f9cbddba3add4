//! Finite-dimensional nonassociative algebras given by structure constants.

mod centroid;
mod simple;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{is_zero_vector, linear_solve, unit_vector, zero_vector, Matrix, SolutionSet, Subspace, Vector};
use crate::scalar::{Field, Scalar, ScalarError};

pub use centroid::{centroid, is_central_element, primitive_idempotents};
pub use simple::{decompose_semisimple, is_simple, minimal_polynomial, NotSemisimpleWitness, Simplicity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operands over different fields")]
    FieldMismatch,
    #[error("an algebra must have dimension at least 1")]
    ZeroDimension,
    #[error("NotAnIdeal: the subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("NotSubalgebra: the subspace is not closed under multiplication")]
    NotSubalgebra,
    #[error("ZeroQuotient: quotient by the whole algebra")]
    ZeroQuotient,
    #[error("NotHomomorphism: {0}")]
    NotHomomorphism(String),
    #[error("NotSemisimple: {0}")]
    NotSemisimple(NotSemisimpleWitness),
    #[error("FieldTooSmall: a centroid minimal polynomial has no root in {0}")]
    FieldTooSmall(String),
    #[error("Inconclusive: probing budget exhausted without a certificate")]
    Inconclusive,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Sparse structure constants: `table[i * dim + j]` lists (k, c) with
/// eᵢ·eⱼ = Σ c eₖ, sorted by k and without zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Algebra dim {} over {}", self.dim, self.field)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let t = &self.table[i * self.dim + j];
                if t.is_empty() {
                    continue;
                }
                let terms: Vec<String> = t.iter().map(|(k, c)| format!("{c}*{}", self.label(*k))).collect();
                writeln!(f, "  {}*{} = {}", self.label(i), self.label(j), terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

impl Algebra {
    /// Structure constants from sparse entries (repeated k are summed).
    pub fn from_table(field: &Field, dim: usize, table: Vec<Vec<(usize, Scalar)>>) -> Result<Algebra, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if table.len() != dim * dim {
            return Err(AlgebraError::Dimension(format!("table has {} entries, expected {}", table.len(), dim * dim)));
        }
        let mut clean = Vec::with_capacity(table.len());
        for entry in table {
            let mut v = zero_vector(field, dim);
            for (k, c) in entry {
                if k >= dim {
                    return Err(AlgebraError::Dimension(format!("basis index {k} out of range")));
                }
                if !field.contains(&c) {
                    return Err(AlgebraError::FieldMismatch);
                }
                v[k] = &v[k] + &c;
            }
            clean.push(sparse(&v));
        }
        Ok(Algebra { field: field.clone(), dim, table: clean, labels: None })
    }

    /// Dense products eᵢ·eⱼ, indexed i * dim + j.
    pub fn from_products(field: &Field, dim: usize, products: &[Vector]) -> Result<Algebra, AlgebraError> {
        if products.iter().any(|v| v.len() != dim) {
            return Err(AlgebraError::Dimension("product vector length".into()));
        }
        Algebra::from_table(field, dim, products.iter().map(|v| sparse(v)).collect())
    }

    /// Integer structure constants from a rule (i, j) ↦ [(k, c)].
    pub fn from_rule<F: Fn(usize, usize) -> Vec<(usize, i64)>>(field: &Field, dim: usize, rule: F) -> Algebra {
        let table = (0..dim * dim)
            .map(|ij| rule(ij / dim, ij % dim).into_iter().map(|(k, c)| (k, field.from_i64(c))).collect())
            .collect();
        Algebra::from_table(field, dim, table).expect("well-formed rule")
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Algebra {
        assert_eq!(labels.len(), self.dim, "label count");
        self.labels = Some(labels.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map_or_else(|| format!("e{i}"), |l| l[i].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &[Vec<(usize, Scalar)>] {
        &self.table
    }

    /// Same structure constants (labels ignored).
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(&self.field, self.dim);
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "vector length");
        let mut out = zero_vector(&self.field, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let entry = &self.table[i * self.dim + j];
                if entry.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in entry {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    /// eᵢ·y
    pub fn left_basis_mul(&self, i: usize, y: &[Scalar]) -> Vector {
        let mut out = zero_vector(&self.field, self.dim);
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k] = &out[*k] + &(b * c);
            }
        }
        out
    }

    /// x·eⱼ
    pub fn right_basis_mul(&self, x: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vector(&self.field, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k] = &out[*k] + &(a * c);
            }
        }
        out
    }

    /// Matrix of y ↦ x·y acting on column vectors.
    pub fn left_operator(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|j| self.multiply(x, &unit_vector(&self.field, self.dim, j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of y ↦ y·x acting on column vectors.
    pub fn right_operator(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|j| self.multiply(&unit_vector(&self.field, self.dim, j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// L_{eᵢ} and R_{eᵢ} for all i, skipping zero operators.
    pub fn multiplication_operators(&self) -> Vec<Matrix> {
        let mut ops = Vec::with_capacity(2 * self.dim);
        for i in 0..self.dim {
            let e = unit_vector(&self.field, self.dim, i);
            for m in [self.left_operator(&e), self.right_operator(&e)] {
                if !m.is_zero() && !ops.contains(&m) {
                    ops.push(m);
                }
            }
        }
        ops
    }

    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut s = Subspace::zero(&self.field, self.dim);
        for x in u.basis() {
            for y in v.basis() {
                s.insert(self.multiply(x, y));
                if s.is_full() {
                    return s;
                }
            }
        }
        s
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    /// A² as a subspace.
    pub fn square(&self) -> Subspace {
        let mut s = Subspace::zero(&self.field, self.dim);
        for t in &self.table {
            if !t.is_empty() {
                let mut v = zero_vector(&self.field, self.dim);
                for (k, c) in t {
                    v[*k] = c.clone();
                }
                s.insert(v);
            }
        }
        s
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Least two-sided ideal containing the given vectors.
    pub fn ideal_closure<I: IntoIterator<Item = Vector>>(&self, seeds: I) -> Subspace {
        spin(&self.field, self.dim, seeds, |v| {
            let mut out = Vec::with_capacity(2 * self.dim);
            for i in 0..self.dim {
                out.push(self.left_basis_mul(i, v));
                out.push(self.right_basis_mul(v, i));
            }
            out
        })
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim).all(|i| s.contains(&self.left_basis_mul(i, v)) && s.contains(&self.right_basis_mul(v, i)))
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&self.multiply(x, y))))
    }

    /// All u with u·x = x for every x, as an affine solution set.
    pub fn left_unities(&self) -> SolutionSet {
        let d = self.dim;
        // unknown u; equation (j,k): Σᵢ uᵢ c_ijk = δ_jk
        let mut m = Matrix::zeros(&self.field, d * d, d);
        let mut b = zero_vector(&self.field, d * d);
        for j in 0..d {
            b[j * d + j] = self.field.one();
            for i in 0..d {
                for (k, c) in &self.table[i * d + j] {
                    m.set(j * d + k, i, c.clone());
                }
            }
        }
        linear_solve(&self.field, &m, &b)
    }

    /// A/I on the canonical complement (the non-pivot coordinates of I).
    pub fn quotient(self: &Arc<Self>, ideal: &Subspace) -> Result<(Arc<Algebra>, AlgebraMap), AlgebraError> {
        if ideal.ambient() != self.dim {
            return Err(AlgebraError::Dimension("ideal ambient dimension".into()));
        }
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        if ideal.is_full() {
            return Err(AlgebraError::ZeroQuotient);
        }
        let comp = ideal.complement_indices();
        let q = comp.len();
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let mut products = Vec::with_capacity(q * q);
        for &a in &comp {
            for &b in &comp {
                products.push(project(&self.basis_product(a, b)));
            }
        }
        let mut quotient = Algebra::from_products(&self.field, q, &products)?;
        if let Some(l) = &self.labels {
            quotient.labels = Some(comp.iter().map(|&c| format!("[{}]", l[c])).collect());
        }
        let quotient = Arc::new(quotient);
        let cols: Vec<Vector> = (0..self.dim).map(|j| project(&unit_vector(&self.field, self.dim, j))).collect();
        let proj = AlgebraMap::new(self.clone(), quotient.clone(), Matrix::from_columns(&self.field, q, &cols))?;
        Ok((quotient, proj))
    }

    /// The subalgebra S on its RREF basis, with the inclusion map.
    pub fn subalgebra(self: &Arc<Self>, s: &Subspace) -> Result<(Arc<Algebra>, AlgebraMap), AlgebraError> {
        if s.ambient() != self.dim {
            return Err(AlgebraError::Dimension("subspace ambient dimension".into()));
        }
        if s.is_zero() {
            return Err(AlgebraError::ZeroDimension);
        }
        let k = s.dim();
        let mut products = Vec::with_capacity(k * k);
        for x in s.basis() {
            for y in s.basis() {
                let p = self.multiply(x, y);
                products.push(s.coordinates(&p).ok_or(AlgebraError::NotSubalgebra)?);
            }
        }
        let sub = Arc::new(Algebra::from_products(&self.field, k, &products)?);
        let incl = Matrix::from_columns(&self.field, self.dim, s.basis());
        let map = AlgebraMap::new(sub.clone(), self.clone(), incl)?;
        Ok((sub, map))
    }

    /// Cartesian product with blockwise multiplication.
    pub fn direct_product(factors: &[&Algebra]) -> Result<Algebra, AlgebraError> {
        let field = factors.first().ok_or(AlgebraError::ZeroDimension)?.field.clone();
        if factors.iter().any(|a| a.field != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let n: usize = factors.iter().map(|a| a.dim).sum();
        let mut table = vec![Vec::new(); n * n];
        let mut labels = Vec::with_capacity(n);
        let mut off = 0;
        for (f, a) in factors.iter().enumerate() {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    table[(off + i) * n + off + j] =
                        a.table[i * a.dim + j].iter().map(|(k, c)| (off + k, c.clone())).collect();
                }
                labels.push(format!("{}_{}", a.label(i), f + 1));
            }
            off += a.dim;
        }
        let mut p = Algebra::from_table(&field, n, table)?;
        if factors.iter().all(|a| a.labels.is_some()) {
            p.labels = Some(labels);
        }
        Ok(p)
    }

    /// Structure constants in the basis given by the columns of P.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra, AlgebraError> {
        let inv = p.inverse().ok_or_else(|| AlgebraError::Dimension("basis change is singular".into()))?;
        let cols = p.column_vectors();
        let mut products = Vec::with_capacity(self.dim * self.dim);
        for x in &cols {
            for y in &cols {
                products.push(inv.mul_vec(&self.multiply(x, y)));
            }
        }
        Algebra::from_products(&self.field, self.dim, &products)
    }
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// Smallest subspace containing `seeds` and closed under `step`.
pub fn spin<I, F>(field: &Field, dim: usize, seeds: I, step: F) -> Subspace
where
    I: IntoIterator<Item = Vector>,
    F: Fn(&Vector) -> Vec<Vector>,
{
    let mut s = Subspace::zero(field, dim);
    let mut queue: Vec<Vector> = Vec::new();
    for v in seeds {
        if s.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if s.is_full() {
            break;
        }
        for w in step(&v) {
            if !is_zero_vector(&w) && s.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    s
}

/// Spin under a list of matrices acting on column vectors.
pub fn spin_matrices<I: IntoIterator<Item = Vector>>(field: &Field, dim: usize, ops: &[Matrix], seeds: I) -> Subspace {
    spin(field, dim, seeds, |v| ops.iter().map(|m| m.mul_vec(v)).collect())
}

/// Linear map between algebras, matrix acting on column vectors.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

impl AlgebraMap {
    /// Checks φ(eᵢeⱼ) = φ(eᵢ)φ(eⱼ) on all basis pairs.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<AlgebraMap, AlgebraError> {
        let map = AlgebraMap::unchecked(source, target, matrix)?;
        if let Some((i, j)) = map.homomorphism_defect() {
            return Err(AlgebraError::NotHomomorphism(format!(
                "products of basis vectors {i} and {j} are not preserved"
            )));
        }
        Ok(map)
    }

    /// Only dimensions are checked.
    pub fn unchecked(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<AlgebraMap, AlgebraError> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(AlgebraError::Dimension(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        if source.field != target.field {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn identity(a: &Arc<Algebra>) -> AlgebraMap {
        AlgebraMap { source: a.clone(), target: a.clone(), matrix: Matrix::identity(&a.field, a.dim) }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    pub fn image_of(&self, s: &Subspace) -> Subspace {
        self.matrix.image_of(s)
    }

    /// First basis pair whose product is not preserved.
    pub fn homomorphism_defect(&self) -> Option<(usize, usize)> {
        let cols = self.matrix.column_vectors();
        for i in 0..self.source.dim {
            for j in 0..self.source.dim {
                let lhs = self.apply(&self.source.basis_product(i, j));
                let rhs = self.target.multiply(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_defect().is_none()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim == self.target.dim && self.matrix.rank() == self.source.dim
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective() && self.is_homomorphism()
    }

    pub fn inverse(&self) -> Option<AlgebraMap> {
        Some(AlgebraMap { source: self.target.clone(), target: self.source.clone(), matrix: self.matrix.inverse()? })
    }

    /// self followed by `next`.
    pub fn then(&self, next: &AlgebraMap) -> AlgebraMap {
        assert_eq!(self.target.dim, next.source.dim, "composition dimensions");
        AlgebraMap { source: self.source.clone(), target: next.target.clone(), matrix: next.matrix.mul(&self.matrix) }
    }
}
