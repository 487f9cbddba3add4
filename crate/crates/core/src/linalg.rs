//! Dense exact matrices, subspaces kept in reduced row echelon form, and
//! linear system solving over any [`Field`].

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// v += c * w, touching only the nonzero entries of w from `start` on.
fn axpy_from(v: &mut [Scalar], c: &Scalar, w: &[Scalar], start: usize) {
    for j in start..w.len() {
        if !w[j].is_zero() {
            v[j] = &v[j] + &(c * &w[j]);
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn diagonal(field: &Field, entries: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        let mut out = zero_vector(&self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: scale_vector(c, &self.data) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Entries row-major, as one long vector.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(field: &Field, rows: usize, cols: usize, data: Vector) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(&self.field, self.cols, self.row_vectors())
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::span(&self.field, self.rows, self.column_vectors())
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    /// Basis of {x : M x = 0}.
    pub fn kernel(&self) -> Vec<Vector> {
        self.row_space().annihilator_basis()
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let s = self.row_space();
        let pivots = s.pivots().to_vec();
        (s.to_matrix(), pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let sol = solve_matrix(self, &Matrix::identity(&self.field, n))?;
        if sol.1 > 0 {
            return None;
        }
        Some(sol.0)
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.row_vectors();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().unwrap();
            for r in c + 1..n {
                if !a[r][c].is_zero() {
                    let f = -(&a[r][c] * &inv);
                    let pivot_row = a[c].clone();
                    axpy_from(&mut a[r], &f, &pivot_row, c);
                }
            }
        }
        det
    }

    /// Image of a subspace (given by row vectors of the domain).
    pub fn image_of(&self, s: &Subspace) -> Subspace {
        Subspace::span(&self.field, self.rows, s.basis().iter().map(|v| self.mul_vec(v)))
    }
}

/// Solve M X = B column by column. Returns (X, nullity) or None if some
/// column is inconsistent. Free variables are set to zero.
pub fn solve_matrix(m: &Matrix, b: &Matrix) -> Option<(Matrix, usize)> {
    assert_eq!(m.rows, b.rows);
    let n = m.cols;
    let k = b.cols;
    let rows: Vec<Vector> = (0..m.rows)
        .map(|r| {
            let mut v = m.row(r).to_vec();
            v.extend(b.row(r).iter().cloned());
            v
        })
        .collect();
    let s = Subspace::span(&m.field, n + k, rows);
    if s.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = Matrix::zeros(&m.field, n, k);
    for (row, &p) in s.basis().iter().zip(s.pivots()) {
        for j in 0..k {
            x.set(p, j, row[n + j].clone());
        }
    }
    Some((x, n - s.dim()))
}

/// Solution set of a linear system M x = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// `None` when the system is inconsistent.
    pub particular: Option<Vector>,
    /// Pivot-normalized basis of the kernel of M.
    pub kernel: Vec<Vector>,
    pub rank: usize,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn is_unique(&self) -> bool {
        self.particular.is_some() && self.kernel.is_empty()
    }
}

pub fn linear_solve(field: &Field, m: &Matrix, b: &[Scalar]) -> SolutionSet {
    assert_eq!(m.rows, b.len(), "right-hand side length");
    let n = m.cols;
    let rows: Vec<Vector> = (0..m.rows)
        .map(|r| {
            let mut v = m.row(r).to_vec();
            v.push(b[r].clone());
            v
        })
        .collect();
    let aug = Subspace::span(field, n + 1, rows);
    let kernel = m.kernel();
    let rank = n - kernel.len();
    if aug.pivots().last() == Some(&n) {
        return SolutionSet { particular: None, kernel, rank };
    }
    let mut x = zero_vector(field, n);
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        x[p] = row[n].clone();
    }
    SolutionSet { particular: Some(x), kernel, rank }
}

/// A subspace of F^n stored as the rows of its reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", v.join(", "))
            })
            .collect();
        write!(f, "Subspace<{}>{{{}}}", self.ambient, rows.join(", "))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows).then(self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, (0..ambient).map(|i| unit_vector(field, ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(field: &Field, ambient: usize, vectors: I) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
            if s.dim() == ambient {
                break;
            }
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, &self.rows)
    }

    fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy_from(v, &c, row, p);
            }
        }
    }

    /// Remainder of v modulo the subspace; zero exactly at the pivots.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates with respect to the RREF basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(&self.field, self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            if !c.is_zero() {
                axpy_from(&mut out, c, row, 0);
            }
        }
        out
    }

    /// Adds v; returns false when it was already contained.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v[p..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy_from(row, &c, &v, p);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    /// Basis of {x : <r, x> = 0 for all basis rows r}, pivot-normalized.
    pub fn annihilator_basis(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ambient).filter(|&j| !is_pivot[j]) {
            let mut x = zero_vector(&self.field, self.ambient);
            x[f] = self.field.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    x[p] = -row[f].clone();
                }
            }
            out.push(x);
        }
        out
    }

    pub fn annihilator(&self) -> Subspace {
        Subspace::span(&self.field, self.ambient, self.annihilator_basis())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // U ∩ V = ann(ann U + ann V)
        let a = self.annihilator().sum(&other.annihilator());
        a.annihilator()
    }

    /// Indices of the standard basis vectors spanning the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Embeds F^k-subspace into F^n at an offset (used for products).
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        let rows = self.rows.iter().map(|r| {
            let mut v = zero_vector(&self.field, ambient);
            for (i, x) in r.iter().enumerate() {
                v[offset + i] = x.clone();
            }
            v
        });
        Subspace::span(&self.field, ambient, rows)
    }
}
