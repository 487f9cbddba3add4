//! Integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let v: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
                format!("[{}]", v.join(", "))
            })
            .collect();
        write!(f, "IntMatrix{}x{}[{}]", self.rows, self.cols, rows.join(", "))
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntMatrix::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: BigInt) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![BigInt::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += x * a;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Rows stacked below each other; column counts must agree.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "stacking needs equal column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.row_vectors();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// U · M · V = D with U, V unimodular and D diagonal, dᵢ | dᵢ₊₁, dᵢ ≥ 0.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Nonzero diagonal entries, in order.
    pub diagonal: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.row_vectors();
    let mut u = IntMatrix::identity(rows).row_vectors();
    let mut v = IntMatrix::identity(cols).row_vectors();
    let mut vinv = IntMatrix::identity(cols).row_vectors();

    let swap_cols = |mat: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for r in mat.iter_mut() {
            r.swap(i, j);
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        vinv.swap(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                for j in 0..rows {
                    let s = &q * &u[t][j];
                    u[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                for row in v.iter_mut() {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                for k in 0..cols {
                    let s = &q * &vinv[j][k];
                    vinv[t][k] += s;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest leftover in row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                        (bi, bj) = (t, j);
                    }
                }
                if bi != t {
                    a.swap(t, bi);
                    u.swap(t, bi);
                }
                if bj != t {
                    swap_cols(&mut a, t, bj);
                    swap_cols(&mut v, t, bj);
                    vinv.swap(t, bj);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let s = a[i][j].clone();
                        a[t][j] += s;
                    }
                    for j in 0..rows {
                        let s = u[i][j].clone();
                        u[t][j] += s;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..rows.min(cols)).map(|i| a[i][i].clone()).take_while(|x| !x.is_zero()).collect();
    Snf {
        u: IntMatrix::from_rows(rows, &u),
        d: IntMatrix::from_rows(cols, &a),
        v: IntMatrix::from_rows(cols, &v),
        v_inv: IntMatrix::from_rows(cols, &vinv),
        diagonal,
    }
}

/// Basis of {z : z·A = 0} over ℤ.
pub fn left_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(a);
    (s.rank()..a.rows).map(|i| s.u.row(i).to_vec()).collect()
}

/// Some integer z with z·A = t, if one exists.
pub fn int_solve(a: &IntMatrix, t: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(t.len(), a.cols, "right-hand side length");
    let s = smith_normal_form(a);
    let tv = s.v.left_mul(t);
    let r = s.rank();
    if tv[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); a.rows];
    for j in 0..r {
        let (q, rem) = tv[j].div_rem(&s.diagonal[j]);
        if !rem.is_zero() {
            return None;
        }
        y[j] = q;
    }
    Some(s.u.left_mul(&y))
}
