//! Roots of univariate polynomials inside a field.
//!
//! Over 𝔽_p this is plain root finding mod p. Over ℚ and ℚ(ζ_N) the monic
//! integral rescaling of the polynomial is reduced modulo a prime p ≡ 1 (N)
//! in every embedding ζ ↦ r^k, roots are found mod p, recombined through the
//! inverse Vandermonde matrix, lifted symmetrically and then checked exactly.
//! Only exactly verified roots are returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::{Field, Scalar};

pub fn poly_eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn trimmed(coeffs: &[Scalar]) -> &[Scalar] {
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1].is_zero() {
        n -= 1;
    }
    &coeffs[..n]
}

/// Distinct roots of the polynomial (coefficients lowest degree first) that
/// lie in `field`, in canonical scalar order.
pub fn roots_in_field(field: &Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let f = trimmed(coeffs);
    if f.len() < 2 {
        return Vec::new();
    }
    let mut out = match field {
        Field::Prime(p) => {
            let g: Vec<u64> = f
                .iter()
                .map(|c| match c {
                    Scalar::Fp(v, _) => *v,
                    _ => panic!("scalar field mismatch"),
                })
                .collect();
            modp::roots(&g, *p).into_iter().map(|r| Scalar::Fp(r, *p)).collect()
        }
        _ => roots_char0(field, f),
    };
    out.sort();
    out.dedup();
    out
}

fn roots_char0(field: &Field, f: &[Scalar]) -> Vec<Scalar> {
    let n = f.len() - 1;
    let lead_inv = f[n].inv().expect("nonzero leading coefficient");
    if n == 1 {
        return vec![-(&f[0] * &lead_inv)];
    }
    let monic: Vec<Vec<BigRational>> = f.iter().map(|c| (c * &lead_inv).coeffs()).collect();
    let (order, phi) = match field {
        Field::Cyclotomic(c) => (c.order() as u64, c.degree()),
        _ => (1u64, 1usize),
    };
    let mut den = BigInt::one();
    for v in &monic {
        for q in v {
            den = den.lcm(q.denom());
        }
    }
    // g(y) = den^n f(y/den), monic with integral coefficients
    let mut g: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for (i, v) in monic.iter().enumerate() {
        let scale = num_traits::pow(den.clone(), n - i);
        g.push(v.iter().map(|q| (q * BigRational::from_integer(scale.clone())).to_integer()).collect());
    }
    let mut bound = BigInt::zero();
    for v in &g[..n] {
        let s: BigInt = v.iter().map(|c| c.abs()).sum();
        if s > bound {
            bound = s;
        }
    }
    bound += 1;
    let coord_bound = bound * BigInt::from(1u64 << phi.min(20)) * BigInt::from(phi as u64 * order);
    let need: BigInt = coord_bound * 2 + 1;
    let Some(need) = need.to_u64().filter(|&x| x < (1u64 << 60)) else {
        return Vec::new();
    };
    let g_scalars: Vec<Scalar> = g
        .iter()
        .map(|v| {
            let q: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
            field.from_coeffs(&q).expect("coefficients in field")
        })
        .collect();

    let mut found: Vec<Scalar> = Vec::new();
    let mut p = next_prime_1_mod(need.max(1 << 16), order);
    for _ in 0..2 {
        for y in lift_roots(field, &g, &g_scalars, p, order, phi) {
            if !found.contains(&y) {
                found.push(y);
            }
        }
        if found.len() == n {
            break;
        }
        p = next_prime_1_mod(p + 1, order);
    }
    let den_s = field.from_bigint(&den);
    let den_inv = den_s.inv().unwrap();
    found.into_iter().map(|y| &y * &den_inv).collect()
}

fn next_prime_1_mod(start: u64, order: u64) -> u64 {
    let mut p = (start / order + 1) * order + 1;
    while !modp::is_prime(p) {
        p += order;
    }
    p
}

fn lift_roots(field: &Field, g: &[Vec<BigInt>], g_scalars: &[Scalar], p: u64, order: u64, phi: usize) -> Vec<Scalar> {
    let r = if order == 1 { 1 } else { modp::element_of_order(order, p) };
    let ks: Vec<u64> = (1..=order).filter(|k| k.gcd(&order) == 1).collect();
    debug_assert_eq!(ks.len(), phi);
    let pb = BigInt::from(p);
    let mut per_embedding: Vec<Vec<u64>> = Vec::with_capacity(phi);
    for &k in &ks {
        let rk = modp::pow_mod(r, k, p);
        let red: Vec<u64> = g
            .iter()
            .map(|v| {
                let mut acc = 0u64;
                let mut pw = 1u64;
                for c in v {
                    let cm = c.mod_floor(&pb).to_u64().unwrap();
                    acc = (acc + modp::mul_mod(cm, pw, p)) % p;
                    pw = modp::mul_mod(pw, rk, p);
                }
                acc
            })
            .collect();
        let rs = modp::roots(&red, p);
        if rs.is_empty() {
            return Vec::new();
        }
        per_embedding.push(rs);
    }
    let combos: usize = per_embedding.iter().map(|v| v.len()).product();
    if combos > 50_000 {
        return Vec::new();
    }
    let vinv = vandermonde_inverse(&ks, r, p);
    let half = p / 2;
    let mut out = Vec::new();
    let mut idx = vec![0usize; phi];
    loop {
        let rho: Vec<u64> = idx.iter().enumerate().map(|(k, &i)| per_embedding[k][i]).collect();
        let coords: Vec<BigRational> = (0..phi)
            .map(|j| {
                let mut acc = 0u64;
                for (k, &x) in rho.iter().enumerate() {
                    acc = (acc + modp::mul_mod(vinv[j][k], x, p)) % p;
                }
                let v = if acc > half { BigInt::from(acc) - &pb } else { BigInt::from(acc) };
                BigRational::from_integer(v)
            })
            .collect();
        let y = field.from_coeffs(&coords).expect("coefficients in field");
        if poly_eval(g_scalars, &y).is_zero() && !out.contains(&y) {
            out.push(y);
        }
        // advance odometer
        let mut pos = 0;
        loop {
            if pos == phi {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < per_embedding[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Inverse mod p of V[k][j] = (r^{ks[k]})^j.
fn vandermonde_inverse(ks: &[u64], r: u64, p: u64) -> Vec<Vec<u64>> {
    let n = ks.len();
    let mut m: Vec<Vec<u64>> = ks
        .iter()
        .map(|&k| {
            let x = modp::pow_mod(r, k, p);
            let mut row: Vec<u64> = (0..n).map(|j| modp::pow_mod(x, j as u64, p)).collect();
            row.extend((0..n).map(|_| 0));
            row
        })
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        row[n + i] = 1;
    }
    for c in 0..n {
        let piv = (c..n).find(|&i| m[i][c] != 0).expect("distinct nodes");
        m.swap(c, piv);
        let inv = modp::inv_mod(m[c][c], p).unwrap();
        for v in m[c].iter_mut() {
            *v = modp::mul_mod(*v, inv, p);
        }
        for i in 0..n {
            if i != c && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..2 * n {
                    let t = modp::mul_mod(f, m[c][j], p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
    }
    // rows of the inverse map embedding values back to coordinates:
    // V y = rho  =>  y = V^{-1} rho
    (0..n).map(|j| (0..n).map(|k| m[j][n + k]).collect()).collect()
}
