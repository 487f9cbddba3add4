//! Word-size modular arithmetic and root finding for polynomials over 𝔽_p.

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    if t < 0 {
        t += p as i128;
    }
    Some(t as u64)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of 𝔽_p^×. Only used for small p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = prime_factors(p - 1);
    (2..p).find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("prime modulus has a primitive root")
}

/// Some element of exact order n in 𝔽_p^×, with n | p - 1.
pub fn element_of_order(n: u64, p: u64) -> u64 {
    let fs = prime_factors(n);
    for a in 2..p {
        let r = pow_mod(a, (p - 1) / n, p);
        if fs.iter().all(|&q| pow_mod(r, n / q, p) != 1) {
            return r;
        }
    }
    1
}

type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let dm = m.len() - 1;
    if dm == 0 {
        return vec![0];
    }
    let inv_lead = inv_mod(m[dm], p).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    let mut top = r.len();
    while top > dm {
        let i = top - 1;
        let c = mul_mod(r[i], inv_lead, p);
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let idx = i - dm + j;
                r[idx] = (r[idx] + p - mul_mod(c, mj, p)) % p;
            }
        }
        top -= 1;
    }
    r.truncate(dm.min(r.len()).max(1));
    trim(r)
}

fn poly_divexact(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = inv_mod(m[dm], p).expect("nonzero leading coefficient");
    let mut q = vec![0u64; a.len() - dm];
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + dm], inv_lead, p);
        q[i] = c;
        for (j, &mj) in m.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mul_mod(c, mj, p)) % p;
        }
    }
    trim(q)
}

fn is_zero(f: &[u64]) -> bool {
    f.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !is_zero(&b) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    let lead = *a.last().unwrap();
    if lead == 0 {
        return a;
    }
    let inv = inv_mod(lead, p).unwrap();
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut result = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Distinct roots in 𝔽_p of f (coefficients lowest first), sorted.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let f: Poly = trim(f.iter().map(|&c| c % p).collect());
    if is_zero(&f) || f.len() == 1 {
        return Vec::new();
    }
    if p < 4096 {
        return (0..p).filter(|&x| eval(&f, x, p) == 0).collect();
    }
    // g = gcd(f, x^p - x) collects the distinct linear factors.
    let xp = poly_powmod(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp.clone();
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    let g = poly_gcd(&f, &trim(xp_minus_x), p);
    let mut out = Vec::new();
    split(&g, p, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

fn split(g: &[u64], p: u64, out: &mut Vec<u64>) {
    let deg = g.len() - 1;
    if deg == 0 {
        return;
    }
    if deg == 1 {
        let inv = inv_mod(g[1], p).unwrap();
        out.push((p - mul_mod(g[0], inv, p)) % p);
        return;
    }
    for delta in 0..p {
        let s = poly_powmod(&[delta, 1], (p - 1) / 2, g, p);
        let mut s1 = s.clone();
        s1[0] = (s1[0] + p - 1) % p;
        let d = poly_gcd(g, &trim(s1), p);
        let dd = d.len() - 1;
        if dd > 0 && dd < deg {
            split(&d, p, out);
            split(&poly_divexact(g, &d, p), p, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
        assert!(is_prime((1u64 << 61) - 1));
    }

    #[test]
    fn roots_large_prime() {
        let p = 1_000_000_007;
        // (x-3)(x-5)(x+7)(x^2+1)
        let mut f = vec![1u64];
        for r in [3u64, 5, p - 7] {
            f = poly_mul(&f, &[p - r, 1], p);
        }
        f = poly_mul(&f, &[1, 0, 1], p);
        let mut expect = vec![3, 5, p - 7];
        // p ≡ 3 mod 4, so x^2+1 has no roots
        expect.sort_unstable();
        assert_eq!(roots(&f, p), expect);
    }

    #[test]
    fn roots_small_prime() {
        assert_eq!(roots(&[0, 1, 1], 2), vec![0, 1]);
        assert_eq!(roots(&[1, 1, 1], 2), Vec::<u64>::new());
    }
}
