//! The centroid: endomorphisms commuting with all multiplications.
//!
//! A centroid element c is determined by its values on a set of vectors
//! generating A as a Mult(A)-module, since c(T v) = T c(v). We spin such
//! generators, record each new basis vector as an operator applied to an
//! earlier one, and solve only for the images of the generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::roots_in_field;

use super::{minimal_polynomial, AlgebraError};

use super::Algebra;

#[derive(Clone, Copy)]
enum Step {
    Root(usize),
    Left(usize, usize),
    Right(usize, usize),
}

fn spanning_tree(a: &Algebra) -> (Vec<Vector>, Vec<Step>, usize) {
    let d = a.dim();
    let f = a.field();
    let mut s = Subspace::zero(f, d);
    let mut vecs: Vec<Vector> = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    let mut roots = 0;
    for r in 0..d {
        let e = unit_vector(f, d, r);
        if s.contains(&e) {
            continue;
        }
        s.insert(e.clone());
        vecs.push(e);
        steps.push(Step::Root(roots));
        roots += 1;
        let mut next = vecs.len() - 1;
        while next < vecs.len() {
            let v = vecs[next].clone();
            for i in 0..d {
                let l = a.left_basis_mul(i, &v);
                if s.insert(l.clone()) {
                    vecs.push(l);
                    steps.push(Step::Left(i, next));
                }
                let r = a.right_basis_mul(&v, i);
                if s.insert(r.clone()) {
                    vecs.push(r);
                    steps.push(Step::Right(i, next));
                }
            }
            next += 1;
        }
        if s.is_full() {
            break;
        }
    }
    (vecs, steps, roots)
}

/// Basis of C(A) as d×d matrices, canonical (RREF of the flattened matrices).
pub fn centroid(a: &Algebra) -> Vec<Matrix> {
    let d = a.dim();
    let f = a.field();
    let (vecs, steps, roots) = spanning_tree(a);
    let b_inv = Matrix::from_columns(f, d, &vecs).inverse().expect("spanning tree is a basis");

    // candidate c for each unknown: root s sent to e_c
    let unknowns = roots * d;
    let mut candidates: Vec<Matrix> = Vec::with_capacity(unknowns);
    for t in 0..unknowns {
        let (root, c) = (t / d, t % d);
        let mut images: Vec<Vector> = Vec::with_capacity(d);
        for st in &steps {
            let y = match *st {
                Step::Root(s) => {
                    if s == root {
                        unit_vector(f, d, c)
                    } else {
                        zero_vector(f, d)
                    }
                }
                Step::Left(i, p) => a.left_basis_mul(i, &images[p]),
                Step::Right(i, p) => a.right_basis_mul(&images[p], i),
            };
            images.push(y);
        }
        candidates.push(Matrix::from_columns(f, d, &images).mul(&b_inv));
    }

    // equations: c(eᵢeⱼ) - eᵢ c(eⱼ) and c(eᵢeⱼ) - c(eᵢ) eⱼ
    let residuals: Vec<Vec<Vector>> = candidates
        .iter()
        .map(|c| {
            let cols = c.column_vectors();
            let mut out = Vec::with_capacity(2 * d * d);
            for i in 0..d {
                for j in 0..d {
                    let mut cij = zero_vector(f, d);
                    for (k, s) in &a.table()[i * d + j] {
                        for (m, x) in cols[*k].iter().enumerate() {
                            if !x.is_zero() {
                                cij[m] = &cij[m] + &(s * x);
                            }
                        }
                    }
                    let l = a.left_basis_mul(i, &cols[j]);
                    let r = a.right_basis_mul(&cols[i], j);
                    out.push(cij.iter().zip(&l).map(|(x, y)| x - y).collect());
                    out.push(cij.iter().zip(&r).map(|(x, y)| x - y).collect());
                }
            }
            out
        })
        .collect();

    let mut rows = Subspace::zero(f, unknowns);
    'outer: for e in 0..2 * d * d {
        for m in 0..d {
            let row: Vector = residuals.iter().map(|res| res[e][m].clone()).collect();
            rows.insert(row);
            // the identity is always central, so the rank is at most unknowns - 1
            if rows.dim() + 1 == unknowns {
                break 'outer;
            }
        }
    }
    let kernel = rows.annihilator_basis();
    let flat = kernel.iter().map(|w| {
        let mut acc = zero_vector(f, d * d);
        for (coef, c) in w.iter().zip(&candidates) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in acc.iter_mut().zip(c.flatten()) {
                if !y.is_zero() {
                    *x = &*x + &(coef * &y);
                }
            }
        }
        acc
    });
    Subspace::span(f, d * d, flat).basis().iter().map(|v| Matrix::from_flat(f, d, d, v.clone())).collect()
}

/// c(xy) = c(x)y = x c(y) on all basis pairs.
pub fn is_central_element(a: &Algebra, c: &Matrix) -> bool {
    let d = a.dim();
    let cols = c.column_vectors();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let cij = c.mul_vec(&a.basis_product(i, j));
            cij == a.left_basis_mul(i, &cols[j]) && cij == a.right_basis_mul(&cols[i], j)
        })
    })
}

/// The primitive idempotents of a split commutative semisimple algebra of
/// operators spanned by `basis` (which must contain the identity in its span),
/// in lexicographic order of their entries.
pub fn primitive_idempotents(basis: &[Matrix], seed: u64) -> Result<Vec<Matrix>, AlgebraError> {
    let n = basis.len();
    let f = basis[0].field().clone();
    let d = basis[0].rows();
    if n == 1 {
        return Ok(vec![Matrix::identity(&f, d)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes: Vec<Matrix> = basis.to_vec();
    for _ in 0..10 {
        let mut z = Matrix::zeros(&f, d, d);
        for m in basis {
            z = z.add(&m.scale(&f.from_i64(rng.gen_range(-20..=20))));
        }
        probes.push(z);
    }
    for z in &probes {
        let m = minimal_polynomial(z);
        if m.len() != n + 1 {
            continue;
        }
        let roots = roots_in_field(&f, &m);
        if roots.len() != n {
            continue;
        }
        let id = Matrix::identity(&f, d);
        let mut out: Vec<Matrix> = roots
            .iter()
            .map(|li| {
                let mut e = id.clone();
                for lj in roots.iter().filter(|lj| *lj != li) {
                    let c = (li - lj).inv().expect("distinct roots");
                    e = e.mul(&z.sub(&id.scale(lj))).scale(&c);
                }
                e
            })
            .collect();
        out.sort_by_key(|a| a.flatten());
        return Ok(out);
    }
    Err(AlgebraError::FieldTooSmall(f.to_string()))
}
