//! Arithmetic in ℚ(ζ_N) on coefficient vectors in the power basis,
//! reduced modulo the N-th cyclotomic polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Precomputed data for ℚ(ζ_N), N ≥ 3.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    degree: usize,
    phi: Vec<BigInt>,
    /// `powers[k]` holds x^(degree + k) reduced mod Φ_N.
    powers: Vec<Vec<BigRational>>,
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(degree.saturating_sub(1));
        // x^degree = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
        let mut cur: Vec<BigRational> = phi[..degree].iter().map(|c| BigRational::from_integer(-c)).collect();
        for _ in 0..degree.saturating_sub(1) {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * BigRational::from_integer(phi[i].clone());
                }
            }
        }
        CycloField { order, degree, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of Φ_N, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let d = self.degree;
        let mut full = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                full[i + j] += x * y;
            }
        }
        let mut out: Vec<BigRational> = full[..d].to_vec();
        for (k, c) in full[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }

    /// x^k reduced.
    pub fn monomial(&self, k: u64) -> Vec<BigRational> {
        let k = (k % self.order as u64) as usize;
        let mut v = vec![BigRational::zero(); self.degree];
        if k < self.degree {
            v[k] = BigRational::one();
            return v;
        }
        let mut x = vec![BigRational::zero(); self.degree];
        x[1.min(self.degree - 1)] = BigRational::one();
        let mut acc = vec![BigRational::zero(); self.degree];
        acc[0] = BigRational::one();
        for _ in 0..k {
            acc = self.mul(&acc, &x);
        }
        acc
    }

    /// Inverse by solving the multiplication-by-a system over ℚ.
    pub fn inv(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let d = self.degree;
        // columns: a * x^j
        let mut cols = Vec::with_capacity(d);
        let mut cur = a.to_vec();
        let mut x = vec![BigRational::zero(); d];
        if d > 1 {
            x[1] = BigRational::one();
        }
        for j in 0..d {
            if j > 0 {
                cur = self.mul(&cur, &x);
            }
            cols.push(cur.clone());
        }
        // augmented rows: m[i][j] = cols[j][i], rhs e_0
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let inv = m[c][c].recip();
            for v in m[c].iter_mut() {
                *v *= &inv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=d {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[d].clone()).collect())
    }
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dd] / &lead;
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// Φ_n with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn format_poly(coeffs: &[BigRational], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mon = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        let abs = c.abs();
        let body = if mon.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mon
        } else {
            format!("{abs}*{mon}")
        };
        if parts.is_empty() {
            parts.push(if sign == "-" { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_values() {
        let expect = [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (12, 4), (15, 8)];
        for (n, f) in expect {
            assert_eq!(euler_phi(n), f);
            assert_eq!(cyclotomic_polynomial(n as u32).len() as u64 - 1, f);
        }
    }
}
