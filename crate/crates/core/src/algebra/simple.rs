//! Simplicity certificates and the splitting of semisimple algebras along
//! centroid idempotents.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{centroid, spin_matrices, Algebra, AlgebraError};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::{roots_in_field, Field, Scalar};

/// Outcome of a simplicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    ZeroSquare,
    ProperIdeal(Subspace),
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotSemisimpleWitness {
    /// A nonzero ideal with zero square.
    ZeroSquareIdeal(Subspace),
    /// A² (or the square of a summand) is a proper ideal.
    ProperSquare(Subspace),
    NonCommutativeCentroid(Matrix, Matrix),
    /// c ≠ 0 in the centroid with c² = 0; the ideal c·A has zero square.
    Nilpotent {
        element: Matrix,
        ideal: Subspace,
    },
    /// The centroid is the field, yet a proper ideal exists.
    CentralNotSimple(Subspace),
}

impl fmt::Display for NotSemisimpleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSemisimpleWitness::ZeroSquareIdeal(s) => write!(f, "ideal of dimension {} with zero square", s.dim()),
            NotSemisimpleWitness::ProperSquare(s) => write!(f, "square is a proper ideal of dimension {}", s.dim()),
            NotSemisimpleWitness::NonCommutativeCentroid(..) => write!(f, "centroid is not commutative"),
            NotSemisimpleWitness::Nilpotent { ideal, .. } => {
                write!(
                    f,
                    "nilpotent centroid element; its image is an ideal of dimension {} with zero square",
                    ideal.dim()
                )
            }
            NotSemisimpleWitness::CentralNotSimple(s) => {
                write!(f, "centroid is the ground field but there is a proper ideal of dimension {}", s.dim())
            }
        }
    }
}

const NORTON_ROUNDS: usize = 40;
const ENUMERATION_LIMIT: u128 = 1 << 16;

/// Decides whether A is simple: A² ≠ 0 and no proper nonzero ideal.
pub fn is_simple(a: &Algebra, seed: u64) -> Result<Simplicity, AlgebraError> {
    let f = a.field();
    let d = a.dim();
    if a.is_zero_product() {
        return Ok(Simplicity::ZeroSquare);
    }
    let sq = a.square();
    if !sq.is_full() {
        return Ok(Simplicity::ProperIdeal(sq));
    }
    for i in 0..d {
        let s = a.ideal_closure([crate::linalg::unit_vector(f, d, i)]);
        if !s.is_full() {
            return Ok(Simplicity::ProperIdeal(s));
        }
    }
    let ops = a.multiplication_operators();
    let ops_t: Vec<Matrix> = ops.iter().map(Matrix::transpose).collect();
    for i in 0..d {
        let w = spin_matrices(f, d, &ops_t, [crate::linalg::unit_vector(f, d, i)]);
        if !w.is_full() {
            return Ok(Simplicity::ProperIdeal(w.annihilator()));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Matrix> = ops.clone();
    for round in 0..NORTON_ROUNDS {
        if round >= candidates.len() {
            let mut t = random_combination(f, &ops, &mut rng);
            if round % 2 == 1 {
                t = t.mul(&random_combination(f, &ops, &mut rng));
            }
            candidates.push(t);
        }
        let t = candidates[round].clone();
        let Some(theta) = singular_shift(f, &t, &mut rng) else {
            continue;
        };
        if let Some(v) = norton(a, &ops, &ops_t, &theta) {
            return Ok(v);
        }
    }

    if let Field::Prime(p) = f {
        if (*p as u128).checked_pow(d as u32).is_some_and(|n| n <= ENUMERATION_LIMIT) {
            for v in projective_points(f, *p, &(0..d).map(|i| crate::linalg::unit_vector(f, d, i)).collect::<Vec<_>>())
            {
                let s = a.ideal_closure([v]);
                if !s.is_full() {
                    return Ok(Simplicity::ProperIdeal(s));
                }
            }
            return Ok(Simplicity::Simple);
        }
    }
    Err(AlgebraError::Inconclusive)
}

fn random_combination(f: &Field, ops: &[Matrix], rng: &mut ChaCha8Rng) -> Matrix {
    let d = ops[0].rows();
    let mut acc = Matrix::zeros(f, d, d);
    for m in ops {
        let c = f.from_i64(rng.gen_range(-3..=3));
        if !c.is_zero() {
            acc = acc.add(&m.scale(&c));
        }
    }
    acc
}

/// T itself if singular, else T - λ for an eigenvalue λ in the field.
fn singular_shift(f: &Field, t: &Matrix, rng: &mut ChaCha8Rng) -> Option<Matrix> {
    let d = t.rows();
    if t.rank() < d {
        return Some(t.clone());
    }
    let v: Vector = (0..d).map(|_| f.random_small(rng, 3)).collect();
    let poly = krylov_polynomial(t, &v)?;
    let lambda = roots_in_field(f, &poly).into_iter().next()?;
    Some(t.sub(&Matrix::identity(f, d).scale(&lambda)))
}

/// Monic relation among v, Tv, T²v, … (lowest degree first).
fn krylov_polynomial(t: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let f = t.field();
    let d = t.rows();
    let mut powers: Vec<Vector> = vec![v.to_vec()];
    loop {
        let next = t.mul_vec(powers.last().unwrap());
        let m = Matrix::from_columns(f, d, &powers);
        let sol = crate::linalg::linear_solve(f, &m, &next);
        if let Some(c) = sol.particular {
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x.clone()).collect();
            poly.push(f.one());
            return Some(poly);
        }
        powers.push(next);
        if powers.len() > d {
            return None;
        }
    }
}

/// Norton's criterion for a singular θ in the algebra generated by `ops`.
fn norton(a: &Algebra, ops: &[Matrix], ops_t: &[Matrix], theta: &Matrix) -> Option<Simplicity> {
    let f = a.field();
    let d = a.dim();
    let ker = theta.kernel();
    let ker_t = theta.transpose().kernel();
    for v in &ker {
        let s = spin_matrices(f, d, ops, [v.clone()]);
        if !s.is_full() {
            return Some(Simplicity::ProperIdeal(s));
        }
    }
    let u = ker_t.first()?;
    let w = spin_matrices(f, d, ops_t, [u.clone()]);
    if !w.is_full() {
        return Some(Simplicity::ProperIdeal(w.annihilator()));
    }
    if ker.len() == 1 {
        return Some(Simplicity::Simple);
    }
    if let Field::Prime(p) = f {
        if (*p as u128).checked_pow(ker.len() as u32).is_some_and(|n| n <= 4096) {
            for v in projective_points(f, *p, &ker) {
                let s = spin_matrices(f, d, ops, [v]);
                if !s.is_full() {
                    return Some(Simplicity::ProperIdeal(s));
                }
            }
            return Some(Simplicity::Simple);
        }
    }
    None
}

/// One nonzero vector per line in the span of `basis` over 𝔽_p.
fn projective_points(f: &Field, p: u64, basis: &[Vector]) -> Vec<Vector> {
    let k = basis.len();
    let d = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for lead in 0..k {
        let free = k - lead - 1;
        let count = p.pow(free as u32);
        for mut code in 0..count {
            let mut v = basis[lead].clone();
            for b in &basis[lead + 1..] {
                let c = f.from_i64((code % p) as i64);
                code /= p;
                if !c.is_zero() {
                    v = v.iter().zip(b).map(|(x, y)| x + &(&c * y)).collect();
                }
            }
            out.push(v);
        }
    }
    debug_assert!(out.iter().all(|v| v.len() == d));
    out
}

/// Monic minimal polynomial of a square matrix, lowest degree first.
pub fn minimal_polynomial(z: &Matrix) -> Vec<Scalar> {
    let f = z.field();
    let n = z.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(f, n)];
    loop {
        let next = powers.last().unwrap().mul(z);
        let cols: Vec<Vector> = powers.iter().map(Matrix::flatten).collect();
        let m = Matrix::from_columns(f, n * n, &cols);
        let sol = crate::linalg::linear_solve(f, &m, &next.flatten());
        if let Some(c) = sol.particular {
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x.clone()).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval_matrix_poly(poly: &[Scalar], z: &Matrix) -> Matrix {
    let f = z.field();
    let n = z.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for c in poly.iter().rev() {
        acc = acc.mul(z).add(&Matrix::identity(f, n).scale(c));
    }
    acc
}

/// Simple ideals of a semisimple algebra, sorted by RREF.
pub fn decompose_semisimple(a: &Arc<Algebra>, seed: u64) -> Result<Vec<Subspace>, AlgebraError> {
    let mut out = Vec::new();
    let incl = Matrix::identity(a.field(), a.dim());
    split(a, &incl, &[], seed, &mut out)?;
    out.sort();
    Ok(out)
}

/// `incl` embeds B into the ambient algebra; `comp` spans a complementary ideal.
fn split(
    b: &Arc<Algebra>,
    incl: &Matrix,
    comp: &[Vector],
    seed: u64,
    out: &mut Vec<Subspace>,
) -> Result<(), AlgebraError> {
    let f = b.field().clone();
    let d = b.dim();
    let lift = |s: &Subspace| incl.image_of(s);
    let fail = |w: NotSemisimpleWitness| Err(AlgebraError::NotSemisimple(w));

    if b.is_zero_product() {
        return fail(NotSemisimpleWitness::ZeroSquareIdeal(lift(&b.full_space())));
    }
    let sq = b.square();
    if !sq.is_full() {
        return fail(NotSemisimpleWitness::ProperSquare(lift(&sq)));
    }
    let c = centroid(b);
    if c.len() == 1 {
        return match is_simple(b, seed)? {
            Simplicity::Simple => {
                out.push(lift(&b.full_space()));
                Ok(())
            }
            Simplicity::ProperIdeal(s) => fail(NotSemisimpleWitness::CentralNotSimple(lift(&s))),
            Simplicity::ZeroSquare => fail(NotSemisimpleWitness::ZeroSquareIdeal(lift(&b.full_space()))),
        };
    }
    for (i, x) in c.iter().enumerate() {
        for y in &c[i + 1..] {
            if x.mul(y) != y.mul(x) {
                return fail(NotSemisimpleWitness::NonCommutativeCentroid(x.clone(), y.clone()));
            }
        }
    }
    if let Some(z) = nilpotent_element(&f, &c) {
        let mut w = z.clone();
        loop {
            let next = w.mul(&z);
            if next.is_zero() {
                break;
            }
            w = next;
        }
        let ideal = lift(&w.column_space());
        let element = if comp.is_empty() { w } else { embed_operator(incl, comp, &w) };
        return fail(NotSemisimpleWitness::Nilpotent { element, ideal });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes: Vec<Matrix> = c.clone();
    for _ in 0..5 {
        let mut z = Matrix::zeros(&f, d, d);
        for m in &c {
            let r = f.from_i64(rng.gen_range(-4..=4));
            z = z.add(&m.scale(&r));
        }
        probes.push(z);
    }
    for z in &probes {
        let m = minimal_polynomial(z);
        if m.len() < 3 {
            continue;
        }
        let Some(lambda) = roots_in_field(&f, &m).into_iter().next() else {
            continue;
        };
        let q = divide_linear(&m, &lambda);
        let qz = eval_matrix_poly(&q, z);
        let ql = crate::scalar::poly_eval(&q, &lambda);
        let e = qz.scale(&ql.inv().expect("coprime factors"));
        let one_minus_e = Matrix::identity(&f, d).sub(&e);
        let pieces = [e.column_space(), one_minus_e.column_space()];
        for k in 0..2 {
            let (sub, inc) = b.subalgebra(&pieces[k])?;
            let child_incl = incl.mul(inc.matrix());
            let mut child_comp = comp.to_vec();
            child_comp.extend(pieces[1 - k].basis().iter().map(|v| incl.mul_vec(v)));
            let child_seed = seed.wrapping_mul(6364136223846793005).wrapping_add(k as u64 + 1);
            split(&sub, &child_incl, &child_comp, child_seed, out)?;
        }
        return Ok(());
    }
    Err(AlgebraError::FieldTooSmall(f.to_string()))
}

/// m(x) / (x - λ) for a root λ.
fn divide_linear(m: &[Scalar], lambda: &Scalar) -> Vec<Scalar> {
    let n = m.len() - 1;
    let mut q = vec![lambda.field().zero(); n];
    let mut carry = lambda.field().zero();
    for i in (0..n).rev() {
        carry = &m[i + 1] + &(&carry * lambda);
        q[i] = carry.clone();
    }
    q
}

/// A nonzero nilpotent element of a commutative centroid, if any.
fn nilpotent_element(f: &Field, c: &[Matrix]) -> Option<Matrix> {
    let d = c[0].rows();
    let coords_space = Subspace::span(f, d * d, c.iter().map(Matrix::flatten));
    let combine = |w: &[Scalar]| -> Matrix {
        let mut acc = Matrix::zeros(f, d, d);
        for (x, m) in w.iter().zip(c) {
            if !x.is_zero() {
                acc = acc.add(&m.scale(x));
            }
        }
        acc
    };
    let k = c.len();
    let map = match f {
        Field::Prime(p) => {
            // x ↦ x^(p^m) is 𝔽_p-linear on a commutative algebra of characteristic p
            let mut e: u64 = 1;
            while (e as usize) < d {
                e = e.saturating_mul(*p);
            }
            let cols: Vec<Vector> =
                c.iter().map(|m| coords_space.coordinates(&m.pow(e).flatten()).expect("centroid is closed")).collect();
            Matrix::from_columns(f, k, &cols)
        }
        _ => {
            // trace form; its radical is the nilradical in characteristic 0
            let mut g = Matrix::zeros(f, k, k);
            for i in 0..k {
                for j in 0..k {
                    g.set(i, j, trace(&c[i].mul(&c[j])));
                }
            }
            g
        }
    };
    map.kernel().first().map(|w| combine(w))
}

fn trace(m: &Matrix) -> Scalar {
    let mut t = m.field().zero();
    for i in 0..m.rows() {
        t = &t + m.get(i, i);
    }
    t
}

/// Operator on a summand extended by zero on the complementary ideal.
fn embed_operator(incl: &Matrix, comp: &[Vector], w: &Matrix) -> Matrix {
    let f = incl.field();
    let n = incl.rows();
    let k = incl.cols();
    let mut cols = incl.column_vectors();
    cols.extend(comp.iter().cloned());
    let basis = Matrix::from_columns(f, n, &cols);
    let mut big = Matrix::zeros(f, n, n);
    for i in 0..k {
        for j in 0..k {
            big.set(i, j, w.get(i, j).clone());
        }
    }
    basis.mul(&big).mul(&basis.inverse().expect("basis"))
}
