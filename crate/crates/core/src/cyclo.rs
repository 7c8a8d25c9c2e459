//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A value is stored at its conductor `n` (the least `n` with the value in
//! `Q(ζ_n)`) as rational coefficients on the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}`,
//! i.e. reduced modulo the cyclotomic polynomial `Φ_n`. That makes the
//! representation unique, so equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

fn prime_factors(mut n: u32) -> Vec<u32> {
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

pub(crate) fn euler_phi(n: u32) -> u32 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    if m == 1 {
        return 0;
    }
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u32
}

/// Integer coefficients of `Φ_n`, constant term first (monic, degree `φ(n)`).
fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let poly = Arc::new(compute_cyclotomic_poly(n));
    cache.write().unwrap().insert(n, poly.clone());
    poly
}

fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    if n == 1 {
        return vec![-1, 1];
    }
    // Φ_n(x) = Φ_rad(x^{n/rad}); for squarefree r > 1,
    // Φ_r(x) = ∏_{d | r} (1 - x^d)^{μ(r/d)} as a power series truncated at φ(r).
    let primes = prime_factors(n);
    let rad: u32 = primes.iter().product();
    let deg = euler_phi(rad) as usize;
    let mut series = vec![0i128; deg + 1];
    series[0] = 1;
    for mask in 0u32..(1 << primes.len()) {
        let d: u32 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) == 0)
            .map(|(_, p)| *p)
            .product();
        let mu_sign = mask.count_ones() % 2 == 0;
        let d = d as usize;
        if mu_sign {
            // multiply by (1 - x^d)
            for i in (d..=deg).rev() {
                series[i] -= series[i - d];
            }
        } else {
            // divide by (1 - x^d)
            for i in d..=deg {
                series[i] += series[i - d];
            }
        }
    }
    let stretch = (n / rad) as usize;
    let mut out = vec![0i64; deg * stretch + 1];
    for (i, c) in series.into_iter().enumerate() {
        out[i * stretch] = c as i64;
    }
    out
}

/// Reduces an exponent vector (coefficient of `ζ_n^i` at index `i`) modulo `Φ_n`.
fn reduce_mod_phi(n: u32, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let poly = cyclotomic_poly(n);
    let deg = poly.len() - 1;
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], BigRational::zero());
        for (j, &pj) in poly[..deg].iter().enumerate() {
            if pj != 0 {
                v[i - deg + j] -= &c * BigRational::from_integer(BigInt::from(pj));
            }
        }
    }
    v.truncate(deg);
    v.resize(deg, BigRational::zero());
    v
}

/// Drops the conductor while the value lies in a smaller cyclotomic field.
fn normalize(mut n: u32, mut c: Vec<BigRational>) -> (u32, Vec<BigRational>) {
    'outer: while n > 1 {
        for p in prime_factors(n) {
            if n.is_multiple_of(p * p) {
                // Φ_n(x) = Φ_{n/p}(x^p): the subfield is spanned by exponents ≡ 0 mod p.
                let inside = c
                    .iter()
                    .enumerate()
                    .all(|(i, x)| (i as u32).is_multiple_of(p) || x.is_zero());
                if inside {
                    c = c.into_iter().step_by(p as usize).collect();
                    n /= p;
                    continue 'outer;
                }
            } else {
                // Q(ζ_n) = Q(ζ_m)(ζ_p) with gcd(m, p) = 1. Write the value as
                // Σ_y B_y ζ_p^y with B_y ∈ Q(ζ_m); it lies in Q(ζ_m) iff B_1 = … = B_{p-1}.
                let m = n / p;
                let alpha = mod_inverse(p, m);
                let beta = mod_inverse(m, p);
                let mut parts = vec![vec![BigRational::zero(); m as usize]; p as usize];
                for (i, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let i = i as u64;
                    let y = (i * beta as u64 % p as u64) as usize;
                    let e = if m == 1 {
                        0
                    } else {
                        (i * alpha as u64 % m as u64) as usize
                    };
                    parts[y][e] += x;
                }
                let parts: Vec<Vec<BigRational>> = parts.into_iter().map(|b| reduce_mod_phi(m, b)).collect();
                if parts[1..].windows(2).all(|w| w[0] == w[1]) {
                    c = parts[0].iter().zip(&parts[1]).map(|(a, b)| a - b).collect();
                    n = m;
                    continue 'outer;
                }
            }
        }
        break;
    }
    (n, c)
}

impl Cyclotomic {
    /// Builds `Σ v[i] ζ_n^i` for an exponent vector of any length (indices taken mod `n`).
    pub fn from_exponents(n: u32, v: &[BigRational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("conductor must be positive".into()));
        }
        let mut e = vec![BigRational::zero(); n as usize];
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                e[i % n as usize] += x;
            }
        }
        Ok(Self::from_full_exponents(n, e))
    }

    /// Integer exponent vector variant of [`Cyclotomic::from_exponents`].
    pub fn from_int_exponents(n: u32, v: &[i64]) -> Result<Self> {
        let q: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        Self::from_exponents(n, &q)
    }

    /// `e` has length exactly `n`.
    fn from_full_exponents(n: u32, e: Vec<BigRational>) -> Self {
        let reduced = reduce_mod_phi(n, e);
        let (conductor, coeffs) = normalize(n, reduced);
        Cyclotomic { conductor, coeffs }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_n^k`, where `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("root_of_unity needs n >= 1".into()));
        }
        let mut e = vec![BigRational::zero(); n as usize];
        e[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Ok(Self::from_full_exponents(n, e))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients on `1, ζ, …, ζ^{φ(n)-1}` at the conductor `n`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exponent vector of length `big` representing the value in `Q(ζ_big)`;
    /// `big` must be a multiple of the conductor.
    fn embed(&self, big: u32) -> Vec<BigRational> {
        debug_assert_eq!(big % self.conductor, 0);
        let stride = (big / self.conductor) as usize;
        let mut e = vec![BigRational::zero(); big as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            if !x.is_zero() {
                e[i * stride] = x.clone();
            }
        }
        e
    }

    /// The value written at a larger conductor `n·conductor`, reduced mod `Φ`.
    /// Returns the coefficient vector on the power basis of `Q(ζ_big)`.
    pub fn promoted_coeffs(&self, big: u32) -> Result<Vec<BigRational>> {
        if big == 0 || !big.is_multiple_of(self.conductor) {
            return Err(Error::InvalidParameter(format!(
                "{big} is not a multiple of conductor {}",
                self.conductor
            )));
        }
        Ok(reduce_mod_phi(big, self.embed(big)))
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    pub fn as_big_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// The value as a machine integer, if it is a rational integer.
    pub fn as_rational_integer(&self) -> Option<i64> {
        self.as_big_integer().and_then(|z| z.to_i64())
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_n ↦ ζ_n^k`; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as i64;
        debug_assert_eq!(k.gcd(&n), 1);
        let mut e = vec![BigRational::zero(); n as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            if !x.is_zero() {
                e[(i as i64 * k).rem_euclid(n) as usize] += x;
            }
        }
        Self::from_full_exponents(self.conductor, e)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.conductor == other.conductor {
            let coeffs: Vec<BigRational> = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            let (conductor, coeffs) = normalize(self.conductor, coeffs);
            return Cyclotomic { conductor, coeffs };
        }
        let big = self.conductor.lcm(&other.conductor);
        let mut e = self.embed(big);
        let stride = (big / other.conductor) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            if negate {
                e[i * stride] -= x;
            } else {
                e[i * stride] += x;
            }
        }
        Self::from_full_exponents(big, e)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let big = self.conductor.lcm(&other.conductor) as usize;
        let sa = big / self.conductor as usize;
        let sb = big / other.conductor as usize;
        let mut e = vec![BigRational::zero(); big];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    e[(i * sa + j * sb) % big] += x * y;
                }
            }
        }
        Self::from_full_exponents(big as u32, e)
    }

    /// Floating-point value, for debugging output only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = std::f64::consts::TAU * i as f64 / n;
            (re + v * a.cos(), im + v * a.sin())
        })
    }

    /// The polynomial part `a0 + a1*z + …` without the `z = E(n)` header.
    pub fn poly_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    /// Rationals print bare; other values as `a0 + a1*z + … (z = E(n))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        write!(f, "{} (z = E({}))", self.poly_string(), self.conductor)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Cyclotomic::from_int(k)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        let mut acc = CycloSum::new();
        for x in iter {
            acc.add_scaled(&x, &BigRational::one());
        }
        acc.finish()
    }
}

/// Accumulates `Σ q_i · a_i` in a common exponent space and reduces once at
/// the end; cheaper than repeated field additions.
#[derive(Clone, Debug)]
pub struct CycloSum {
    conductor: u32,
    exps: Vec<BigRational>,
}

impl Default for CycloSum {
    fn default() -> Self {
        Self::new()
    }
}

impl CycloSum {
    pub fn new() -> Self {
        CycloSum {
            conductor: 1,
            exps: vec![BigRational::zero()],
        }
    }

    fn grow(&mut self, to: u32) {
        let big = self.conductor.lcm(&to);
        if big == self.conductor {
            return;
        }
        let stride = (big / self.conductor) as usize;
        let mut e = vec![BigRational::zero(); big as usize];
        for (i, x) in self.exps.drain(..).enumerate() {
            e[i * stride] = x;
        }
        self.exps = e;
        self.conductor = big;
    }

    pub fn add_scaled(&mut self, value: &Cyclotomic, q: &BigRational) {
        if q.is_zero() || value.is_zero() {
            return;
        }
        self.grow(value.conductor);
        let stride = (self.conductor / value.conductor) as usize;
        for (i, x) in value.coeffs.iter().enumerate() {
            if !x.is_zero() {
                self.exps[i * stride] += x * q;
            }
        }
    }

    pub fn add_int_scaled(&mut self, value: &Cyclotomic, k: i64) {
        if k != 0 {
            self.add_scaled(value, &BigRational::from_integer(BigInt::from(k)));
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_full_exponents(self.conductor, self.exps)
    }
}
