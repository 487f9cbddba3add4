//! Exact fields: ℚ, cyclotomic fields ℚ(ζ_N) and prime fields 𝔽_p.
//!
//! Every scalar carries enough of its field to do arithmetic on its own, so
//! the linear algebra above this layer is written once for all three kinds.

mod cyclotomic;
pub mod modp;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloField};
pub use poly::{poly_eval, roots_in_field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("NoSuchRoot: {field} has no primitive {n}-th root of unity")]
    NoSuchRoot { n: u64, field: String },
    #[error("IrreducibleFactorMissing: polynomial does not split over {0}")]
    IrreducibleFactorMissing(String),
    #[error("denominator not invertible modulo {0}")]
    NotInvertible(u64),
    #[error("scalar from a different field")]
    FieldMismatch,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Field descriptor as written by users and in instance files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `Q`, `Q(zeta_N)`, `cyclotomic:N`, `F_p`, `prime:p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ScalarError::Parse(format!("unknown field `{s}`"));
        if t == "Q" || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) =
            t.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')).or_else(|| t.strip_prefix("cyclotomic:"))
        {
            return rest.parse().map(FieldSpec::Cyclotomic).map_err(|_| bad());
        }
        if let Some(rest) = t.strip_prefix("F_").or_else(|| t.strip_prefix("prime:")) {
            return rest.parse().map(FieldSpec::Prime).map_err(|_| bad());
        }
        Err(bad())
    }
}

/// An exact field. ℚ(ζ₁) and ℚ(ζ₂) are represented as ℚ itself.
#[derive(Debug, Clone)]
pub enum Field {
    Rationals,
    Cyclotomic(Arc<CycloField>),
    Prime(u64),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec() == other.spec()
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec().hash(state)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

pub fn make_field(spec: FieldSpec) -> Result<Field, ScalarError> {
    Field::new(spec)
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field, ScalarError> {
        match spec {
            FieldSpec::Rationals => Ok(Field::Rationals),
            FieldSpec::Cyclotomic(0) => Err(ScalarError::ZeroOrder),
            FieldSpec::Cyclotomic(1) | FieldSpec::Cyclotomic(2) => Ok(Field::Rationals),
            FieldSpec::Cyclotomic(n) => Ok(Field::Cyclotomic(Arc::new(CycloField::new(n)))),
            FieldSpec::Prime(p) => {
                if modp::is_prime(p) && p < (1 << 62) {
                    Ok(Field::Prime(p))
                } else {
                    Err(ScalarError::NotPrime(p))
                }
            }
        }
    }

    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// Panics on invalid input; for literals in code and tests.
    pub fn cyclotomic(n: u32) -> Field {
        Field::new(FieldSpec::Cyclotomic(n)).expect("valid cyclotomic order")
    }

    pub fn prime(p: u64) -> Field {
        Field::new(FieldSpec::Prime(p)).expect("prime modulus")
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            Field::Rationals => FieldSpec::Rationals,
            Field::Cyclotomic(c) => FieldSpec::Cyclotomic(c.order()),
            Field::Prime(p) => FieldSpec::Prime(*p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Cyclotomic(c) => {
                let mut v = vec![BigRational::zero(); c.degree()];
                v[0] = BigRational::from_integer(n.clone());
                Scalar::Cyc(c.clone(), v)
            }
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                Scalar::Fp(r, *p)
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            Field::Rationals => Ok(Scalar::Rat(q.clone())),
            Field::Cyclotomic(c) => {
                let mut v = vec![BigRational::zero(); c.degree()];
                v[0] = q.clone();
                Ok(Scalar::Cyc(c.clone(), v))
            }
            Field::Prime(p) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den.inv().ok_or(ScalarError::NotInvertible(*p))?;
                Ok(&num * &inv)
            }
        }
    }

    pub fn from_ratio(&self, n: i64, d: i64) -> Scalar {
        self.from_rational(&BigRational::new(n.into(), d.into())).expect("invertible denominator")
    }

    /// Element with the given power-basis coordinates (cyclotomic fields).
    /// For ℚ and 𝔽_p only the constant coordinate may be nonzero.
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Result<Scalar, ScalarError> {
        match self {
            Field::Cyclotomic(c) => {
                if coeffs.len() > c.order() as usize {
                    return Err(ScalarError::Parse("too many coefficients".into()));
                }
                // coefficients beyond the degree are reduced
                let mut acc = vec![BigRational::zero(); c.degree()];
                for (k, q) in coeffs.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    let m = c.monomial(k as u64);
                    for (a, b) in acc.iter_mut().zip(m) {
                        *a += q * b;
                    }
                }
                Ok(Scalar::Cyc(c.clone(), acc))
            }
            _ => {
                if coeffs.iter().skip(1).any(|q| !q.is_zero()) {
                    return Err(ScalarError::FieldMismatch);
                }
                let q = coeffs.first().cloned().unwrap_or_else(BigRational::zero);
                self.from_rational(&q)
            }
        }
    }

    /// Order of the (cyclic) group of roots of unity available in the field.
    pub fn roots_of_unity_order(&self) -> u64 {
        match self {
            Field::Rationals => 2,
            Field::Cyclotomic(c) => {
                let n = c.order() as u64;
                if n.is_multiple_of(2) {
                    n
                } else {
                    2 * n
                }
            }
            Field::Prime(p) => p - 1,
        }
    }

    /// The distinguished primitive n-th root of unity. The choices are
    /// coherent: `root_of_unity(a)^(a/b) == root_of_unity(b)` whenever b | a.
    pub fn root_of_unity(&self, n: u64) -> Result<Scalar, ScalarError> {
        let w = self.roots_of_unity_order();
        if n == 0 || !w.is_multiple_of(n) {
            return Err(ScalarError::NoSuchRoot { n, field: self.to_string() });
        }
        let gen = match self {
            Field::Rationals => {
                if w / n == 1 {
                    self.from_i64(-1)
                } else {
                    self.one()
                }
            }
            Field::Cyclotomic(c) => {
                let order = c.order() as u64;
                // primitive w-th root
                let zw = if order.is_multiple_of(2) {
                    Scalar::Cyc(c.clone(), c.monomial(1))
                } else {
                    -Scalar::Cyc(c.clone(), c.monomial(order.div_ceil(2)))
                };
                return Ok(zw.pow(w / n));
            }
            Field::Prime(p) => {
                let g = modp::primitive_root(*p);
                Scalar::Fp(modp::pow_mod(g, (p - 1) / n, *p), *p)
            }
        };
        Ok(gen)
    }

    /// The generator ζ_N of a cyclotomic field (1 for ℚ).
    pub fn zeta(&self) -> Scalar {
        match self {
            Field::Cyclotomic(c) => Scalar::Cyc(c.clone(), c.monomial(1)),
            _ => self.one(),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Cyclotomic(a), Scalar::Cyc(b, _)) => a.order() == b.order(),
            (Field::Prime(p), Scalar::Fp(_, q)) => p == q,
            _ => false,
        }
    }

    /// Small random element, used for probes and property tests.
    pub fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match self {
            Field::Cyclotomic(c) => {
                let v =
                    (0..c.degree()).map(|_| BigRational::from_integer(rng.gen_range(-bound..=bound).into())).collect();
                Scalar::Cyc(c.clone(), v)
            }
            Field::Prime(p) => Scalar::Fp(rng.gen_range(0..*p), *p),
            Field::Rationals => {
                let n = rng.gen_range(-bound..=bound);
                let d = rng.gen_range(1..=bound.max(1));
                self.from_ratio(n, d)
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        loop {
            let s = self.random_small(rng, bound);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

/// Element of an exact field. Representations are canonical, so derived
/// comparisons are exact equality tests.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rat(BigRational),
    Cyc(Arc<CycloField>, Vec<BigRational>),
    Fp(u64, u64),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Cyc(f, a), Scalar::Cyc(g, b)) => f.order() == g.order() && a == b,
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) => a == b && p == q,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rat(a) => {
                0u8.hash(state);
                a.hash(state);
            }
            Scalar::Cyc(f, a) => {
                1u8.hash(state);
                f.order().hash(state);
                a.hash(state);
            }
            Scalar::Fp(a, p) => {
                2u8.hash(state);
                a.hash(state);
                p.hash(state);
            }
        }
    }
}

impl Ord for Scalar {
    /// A fixed total order used for canonical sorting; not a field order.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Cyc(_, a), Scalar::Cyc(_, b)) => a.cmp(b),
            (Scalar::Fp(a, _), Scalar::Fp(b, _)) => a.cmp(b),
            _ => self.tag().cmp(&other.tag()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Scalar {
    fn tag(&self) -> u8 {
        match self {
            Scalar::Rat(_) => 0,
            Scalar::Cyc(..) => 1,
            Scalar::Fp(..) => 2,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Cyc(c, _) => Field::Cyclotomic(c.clone()),
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(a) => a.is_zero(),
            Scalar::Cyc(_, v) => v.iter().all(|c| c.is_zero()),
            Scalar::Fp(a, _) => *a == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(a) => a.is_one(),
            Scalar::Cyc(_, v) => v[0].is_one() && v[1..].iter().all(|c| c.is_zero()),
            Scalar::Fp(a, _) => *a == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Cyc(c, v) => Scalar::Cyc(c.clone(), c.inv(v)?),
            Scalar::Fp(a, p) => Scalar::Fp(modp::inv_mod(*a, *p)?, *p),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow_int(&self, e: &BigInt) -> Scalar {
        let base = if e.is_negative() { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = self.field().one();
        let mut b = base;
        let mut k = e.abs();
        let two = BigInt::from(2);
        while !k.is_zero() {
            if k.is_odd() {
                acc = &acc * &b;
            }
            b = &b * &b;
            k /= &two;
        }
        acc
    }

    /// Rational value when the scalar lies in the prime subfield of ℚ(ζ).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rat(a) => Some(a.clone()),
            Scalar::Cyc(_, v) if v[1..].iter().all(|c| c.is_zero()) => Some(v[0].clone()),
            _ => None,
        }
    }

    /// Power-basis coordinates (length 1 for ℚ).
    pub fn coeffs(&self) -> Vec<BigRational> {
        match self {
            Scalar::Rat(a) => vec![a.clone()],
            Scalar::Cyc(_, v) => v.clone(),
            Scalar::Fp(a, _) => vec![BigRational::from_integer((*a).into())],
        }
    }

    /// Multiplicative order if it is a root of unity of order at most `bound`.
    pub fn root_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(a) => write!(f, "{a}"),
            Scalar::Cyc(_, v) => write!(f, "{}", cyclotomic::format_poly(v, "z")),
            Scalar::Fp(a, _) => write!(f, "{a}"),
        }
    }
}

fn zip_with(
    a: &[BigRational],
    b: &[BigRational],
    op: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Cyc(c, a), Scalar::Cyc(_, b)) => Scalar::Cyc(c.clone(), zip_with(a, b, |x, y| x + y)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(((*a as u128 + *b as u128) % *p as u128) as u64, *p),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Cyc(c, a), Scalar::Cyc(_, b)) => Scalar::Cyc(c.clone(), zip_with(a, b, |x, y| x - y)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => {
                Scalar::Fp(((*a as u128 + (*p - *b) as u128) % *p as u128) as u64, *p)
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Cyc(c, a), Scalar::Cyc(_, b)) => Scalar::Cyc(c.clone(), c.mul(a, b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(modp::mul_mod(*a, *b, *p), *p),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Cyc(c, a) => Scalar::Cyc(c.clone(), a.iter().map(|x| -x).collect()),
            Scalar::Fp(a, p) => Scalar::Fp((p - a) % p, *p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
