//! Irreducible characters by Dixon's method.
//!
//! The class matrices are diagonalized simultaneously over `F_p` for a prime
//! `p ≡ 1 (mod e)`, `p > 2√|G|`, where `e` is the group exponent. Each
//! one-dimensional common eigenspace gives a central character, from which
//! the character values mod `p` follow; eigenvalue multiplicities of every
//! class representative are then recovered mod `p` and lifted to exact
//! cyclotomic values.

use std::fmt::Write as _;
use std::sync::Arc;

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::ClassData;
use crate::cyclo::{CycloSum, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::Limits;

/// A class function on a group, stored classwise.
#[derive(Clone, Debug)]
pub struct Character {
    classes: Arc<ClassData>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) && self.values == other.values
    }
}

impl Character {
    pub fn from_values(classes: Arc<ClassData>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} classes",
                values.len(),
                classes.len()
            )));
        }
        Ok(Character { classes, values })
    }

    /// The trivial character.
    pub fn trivial(classes: Arc<ClassData>) -> Self {
        let values = vec![Cyclotomic::one(); classes.len()];
        Character { classes, values }
    }

    /// The regular character: `|G|` at the identity, zero elsewhere.
    pub fn regular(classes: Arc<ClassData>) -> Self {
        let mut values = vec![Cyclotomic::zero(); classes.len()];
        values[0] = Cyclotomic::from_int(classes.group_order() as i64);
        Character { classes, values }
    }

    pub fn class_data(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at a group element, `None` if the element is outside the group.
    pub fn value_at(&self, x: &Permutation) -> Option<&Cyclotomic> {
        self.classes.class_of(x).map(|c| &self.values[c])
    }

    /// `χ(1)` as an integer.
    pub fn degree(&self) -> i64 {
        self.values[0]
            .as_rational_integer()
            .expect("character degree is a rational integer")
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_real)
    }

    pub fn conj(&self) -> Self {
        Character {
            classes: self.classes.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// `(1/|G|) Σ_g χ(g) conj(ψ(g))`.
    pub fn inner_product(&self, other: &Character) -> Result<Cyclotomic> {
        if !Arc::ptr_eq(&self.classes, &other.classes) {
            return Err(Error::MismatchedClassData);
        }
        let mut acc = CycloSum::new();
        for c in 0..self.values.len() {
            let term = &self.values[c] * &other.values[c].conj();
            acc.add_int_scaled(&term, self.classes.sizes()[c] as i64);
        }
        let order = BigRational::from_integer(BigInt::from(self.classes.group_order()));
        Ok(acc.finish().scale(&order.recip()))
    }

    /// Classical indicator `ν_m(χ) = (1/|G|) Σ_g χ(g^m)`.
    pub fn nu_classical(&self, m: i64) -> Result<i64> {
        if m < 1 {
            return Err(Error::InvalidParameter(format!("indicator degree {m} < 1")));
        }
        let cd = &self.classes;
        let mut acc = CycloSum::new();
        for c in 0..cd.len() {
            acc.add_int_scaled(&self.values[cd.power_map(c, m)], cd.sizes()[c] as i64);
        }
        let order = BigRational::from_integer(BigInt::from(cd.group_order()));
        let v = acc.finish().scale(&order.recip());
        v.as_rational_integer().ok_or_else(|| Error::NonIntegral {
            context: format!("classical nu_{m}"),
            value: v.to_string(),
        })
    }

    /// Restriction to a subgroup with class data `sub`.
    pub fn restrict(&self, sub: &Arc<ClassData>) -> Result<Character> {
        let values = sub
            .reps()
            .iter()
            .map(|r| {
                self.value_at(r)
                    .cloned()
                    .ok_or_else(|| Error::NotSubgroup(format!("{r} is not in the ambient group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Character {
            classes: sub.clone(),
            values,
        })
    }

    /// Induction to an overgroup of index two:
    /// `Ind(y) = χ(y) + χ(g⁻¹ y g)` on the subgroup, zero outside it.
    pub fn induce_index2(&self, over: &Arc<ClassData>) -> Result<Character> {
        let sub = &self.classes;
        if over.group_order() != 2 * sub.group_order() {
            let idx = if sub.group_order() == 0 || !over.group_order().is_multiple_of(sub.group_order()) {
                0
            } else {
                over.group_order() / sub.group_order()
            };
            return Err(Error::IndexNotTwo(idx as u128));
        }
        if !over.group().contains_all(sub.group()) {
            return Err(Error::NotSubgroup(
                "induction source is not contained in the target".into(),
            ));
        }
        let g = over
            .group()
            .generators()
            .iter()
            .find(|x| sub.class_of(x).is_none())
            .expect("index-2 overgroup has a generator outside the subgroup");
        let ginv = g.inverse();
        let values = over
            .reps()
            .iter()
            .map(|y| match self.value_at(y) {
                Some(v) => v + self.value_at(&ginv.conj_unchecked(y)).unwrap(),
                None => Cyclotomic::zero(),
            })
            .collect();
        Ok(Character {
            classes: over.clone(),
            values,
        })
    }

    /// The conjugate class function `(g ▷ χ)(y) = χ(g⁻¹ y g)`; `g` must normalize the group.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Character> {
        let ginv = g.inverse();
        let values = self
            .classes
            .reps()
            .iter()
            .map(|y| {
                self.value_at(&ginv.conj_unchecked(y))
                    .cloned()
                    .ok_or_else(|| Error::Hypothesis(format!("{g} does not normalize the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Character {
            classes: self.classes.clone(),
            values,
        })
    }
}

/// All irreducible characters of a group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Arc<ClassData>,
    rows: Vec<Character>,
    prime: u64,
}

impl CharacterTable {
    pub fn class_data(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.rows.iter().map(Character::degree).collect()
    }

    /// Row orthogonality `⟨χ_i, χ_j⟩ = δ_ij` and `Σ χ(1)² = |G|`.
    pub fn verify_rows(&self) -> Result<()> {
        let n = self.classes.group_order();
        let dsq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if dsq as u64 != n {
            return Err(Error::TableFailure(format!(
                "sum of squared degrees {dsq} != |G| = {n}"
            )));
        }
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let want = if i == j { 1 } else { 0 };
                if ip != Cyclotomic::from_int(want) {
                    return Err(Error::TableFailure(format!(
                        "<chi_{i}, chi_{j}> = {ip}, expected {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Column orthogonality `Σ_χ χ(g_k) conj(χ(g_l)) = δ_kl |C_G(g_k)|`.
    pub fn verify_columns(&self) -> Result<()> {
        let cd = &self.classes;
        let n = cd.group_order();
        let conj: Vec<Vec<Cyclotomic>> = self
            .rows
            .iter()
            .map(|r| r.values.iter().map(Cyclotomic::conj).collect())
            .collect();
        for k in 0..cd.len() {
            for l in k..cd.len() {
                let s: Cyclotomic = self.rows.iter().zip(&conj).map(|(r, cr)| &r.values[k] * &cr[l]).sum();
                let want = if k == l { (n / cd.sizes()[k]) as i64 } else { 0 };
                if s != Cyclotomic::from_int(want) {
                    return Err(Error::TableFailure(format!(
                        "column sum ({k},{l}) = {s}, expected {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// One line per irreducible with classwise values; a header lists the
    /// class representatives and sizes.
    pub fn dump(&self) -> String {
        let cd = &self.classes;
        let mut out = String::new();
        let reps: Vec<String> = cd.reps().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "# classes: {}", reps.join(" "));
        let sizes: Vec<String> = cd.sizes().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "# sizes: {}", sizes.join(" "));
        for (i, row) in self.rows.iter().enumerate() {
            let vals: Vec<String> = row.values.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "chi_{i}: {}", vals.join(" | "));
        }
        out
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime `p ≡ 1 (mod e)` with `p > 2√order`.
fn dixon_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && (p as u128) * (p as u128) > 4 * order as u128) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let mut qs = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            qs.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        qs.push(m);
    }
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Row-reduced basis of a subspace of `F_p^r`; `pivots[i]` is the pivot column of row `i`.
#[derive(Clone, Debug)]
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_vectors(mut rows: Vec<Vec<u64>>, p: u64) -> Subspace {
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = inv_mod(rows[r][c], p);
            for x in rows[r].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = (*x + p - f * y % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Subspace { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Kernel of a square matrix over `F_p`, as a list of vectors.
fn kernel(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial over `F_p` (constant term first) via Hessenberg form.
fn char_poly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 0..n.saturating_sub(2) {
        let Some(i) = (m + 1..n).find(|&i| h[i][m] != 0) else {
            continue;
        };
        if i != m + 1 {
            h.swap(i, m + 1);
            for row in h.iter_mut() {
                row.swap(i, m + 1);
            }
        }
        let inv = inv_mod(h[m + 1][m], p);
        for r in m + 2..n {
            if h[r][m] == 0 {
                continue;
            }
            let u = h[r][m] * inv % p;
            let pivot = h[m + 1].clone();
            for (x, y) in h[r].iter_mut().zip(&pivot) {
                *x = (*x + p - u * y % p) % p;
            }
            for row in h.iter_mut() {
                row[m + 1] = (row[m + 1] + u * row[r]) % p;
            }
        }
    }
    // p_0 = 1; p_m = (x - h_mm) p_{m-1} - Σ_i h_im (∏ subdiag) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = (cur[k] + p - c * h[m - 1][m - 1] % p) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = t * h[i][i - 1] % p;
            let coef = h[i - 1][m - 1] * t % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - coef * c % p) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

struct Dixon<'a> {
    cd: &'a ClassData,
    p: u64,
    /// `mats[j][k][l]` = number of `x ∈ C_j` with `x⁻¹ z_l ∈ C_k`, mod p.
    mats: Vec<Vec<Vec<u64>>>,
}

impl Dixon<'_> {
    /// Matrix of `M = Σ_j coef_j M_j` restricted to an invariant subspace,
    /// in the basis of `space` (acting on column vectors).
    fn restricted(&self, space: &Subspace, coef: &[u64]) -> Vec<Vec<u64>> {
        let p = self.p;
        let r = self.cd.len();
        let d = space.dim();
        let mut a = vec![vec![0u64; d]; d];
        for (bi, b) in space.rows.iter().enumerate() {
            let mut mb = vec![0u64; r];
            for (j, &cj) in coef.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                for (k, mk) in mb.iter_mut().enumerate() {
                    let s = self.mats[j][k]
                        .iter()
                        .zip(b)
                        .fold(0u64, |acc, (&m, &x)| (acc + m * x) % p);
                    *mk = (*mk + cj * s) % p;
                }
            }
            for (row, &pc) in space.pivots.iter().enumerate() {
                a[row][bi] = mb[pc];
            }
        }
        a
    }

    /// Splits `space` into eigenspaces of the given combination; `None` if the
    /// combination acts as a scalar there.
    fn split(&self, space: &Subspace, coef: &[u64]) -> Result<Option<Vec<Subspace>>> {
        let p = self.p;
        let a = self.restricted(space, coef);
        let d = a.len();
        let eig = roots(&char_poly(a.clone(), p), p);
        if eig.len() <= 1 {
            return Ok(None);
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for lambda in eig {
            let mut shifted = a.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = (row[i] + p - lambda) % p;
            }
            let ker = kernel(shifted, p);
            total += ker.len();
            let vecs: Vec<Vec<u64>> = ker
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; self.cd.len()];
                    for (ci, &x) in c.iter().enumerate() {
                        for (k, vk) in v.iter_mut().enumerate() {
                            *vk = (*vk + x * space.rows[ci][k]) % p;
                        }
                    }
                    v
                })
                .collect();
            parts.push(Subspace::from_vectors(vecs, p));
        }
        if total != d {
            return Err(Error::TableFailure(
                "class matrix combination is not diagonalizable mod p".into(),
            ));
        }
        Ok(Some(parts))
    }
}

/// The irreducible characters of `group`.
pub fn character_table(group: &PermGroup, limits: &Limits) -> Result<CharacterTable> {
    let cd = ClassData::new(group, limits)?;
    character_table_from_classes(cd, limits.seed)
}

/// Dixon's method on precomputed class data.
pub fn character_table_from_classes(cd: Arc<ClassData>, seed: u64) -> Result<CharacterTable> {
    let r = cd.len();
    let order = cd.group_order();
    let e = cd.exponent();
    let p = dixon_prime(e, order);
    let omega = pow_mod(primitive_root(p), (p - 1) / e, p);

    // Class multiplication coefficients.
    let mut counts = vec![vec![vec![0u64; r]; r]; r];
    for (l, z) in cd.reps().iter().enumerate() {
        for (i, x) in cd.elements().iter().enumerate() {
            let y = x.inverse().mul_unchecked(z);
            let k = cd.class_of(&y).expect("closed group");
            counts[cd.class_of_index(i)][k][l] += 1;
        }
    }
    for m in counts.iter_mut().flatten().flatten() {
        *m %= p;
    }
    let dixon = Dixon {
        cd: &cd,
        p,
        mats: counts,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![Subspace::from_vectors(identity, p)];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(space) = pending.pop() {
        if space.dim() == 1 {
            lines.push(space.rows[0].clone());
            continue;
        }
        let mut parts = None;
        for _ in 0..8 {
            let coef: Vec<u64> = (0..r).map(|_| rng.gen_range(0..p)).collect();
            if let Some(s) = dixon.split(&space, &coef)? {
                parts = Some(s);
                break;
            }
        }
        if parts.is_none() {
            for j in 1..r {
                let mut coef = vec![0u64; r];
                coef[j] = 1;
                if let Some(s) = dixon.split(&space, &coef)? {
                    parts = Some(s);
                    break;
                }
            }
        }
        match parts {
            Some(s) => pending.extend(s),
            None => {
                return Err(Error::TableFailure(format!(
                    "a common eigenspace of dimension {} did not split",
                    space.dim()
                )))
            }
        }
    }
    if lines.len() != r {
        return Err(Error::TableFailure(format!(
            "found {} characters for {r} classes",
            lines.len()
        )));
    }

    let mut rows_mod: Vec<(i64, Vec<u64>, Character)> = Vec::with_capacity(r);
    for v in lines {
        let (deg, theta) = central_to_character(&cd, &v, p)?;
        let values = lift_values(&cd, &theta, deg, p, omega)?;
        rows_mod.push((deg, theta, Character::from_values(cd.clone(), values)?));
    }
    // Trivial character first, then by degree, then by the values mod p.
    rows_mod.sort_by(|a, b| {
        let triv = |t: &Vec<u64>| !t.iter().all(|&x| x == 1);
        (triv(&a.1), a.0, &a.1).cmp(&(triv(&b.1), b.0, &b.1))
    });
    let table = CharacterTable {
        classes: cd,
        rows: rows_mod.into_iter().map(|(_, _, c)| c).collect(),
        prime: p,
    };
    table.verify_rows()?;
    Ok(table)
}

/// From a common eigenvector of the class matrices to the degree and the
/// character values mod p.
fn central_to_character(cd: &ClassData, v: &[u64], p: u64) -> Result<(i64, Vec<u64>)> {
    if v[0] == 0 {
        return Err(Error::TableFailure("eigenvector vanishes at the identity".into()));
    }
    let inv0 = inv_mod(v[0], p);
    let w: Vec<u64> = v.iter().map(|&x| x * inv0 % p).collect();
    let order = cd.group_order();
    let mut s = 0u64;
    for k in 0..cd.len() {
        let kk = cd.inverse_class(k);
        s = (s + w[k] * w[kk] % p * inv_mod(cd.sizes()[k] % p, p)) % p;
    }
    if s == 0 {
        return Err(Error::TableFailure("degenerate norm in degree recovery".into()));
    }
    let dsq = order % p * inv_mod(s, p) % p;
    let deg = (1..=order.isqrt())
        .find(|&d| d * d % p == dsq)
        .ok_or_else(|| Error::TableFailure("no integral square root for the degree".into()))?;
    let theta = (0..cd.len())
        .map(|k| deg % p * w[k] % p * inv_mod(cd.sizes()[k] % p, p) % p)
        .collect();
    Ok((deg as i64, theta))
}

/// Eigenvalue multiplicities of each class representative, lifted to `Σ m_i ζ_o^i`.
fn lift_values(cd: &ClassData, theta: &[u64], deg: i64, p: u64, omega: u64) -> Result<Vec<Cyclotomic>> {
    let e = cd.exponent();
    (0..cd.len())
        .map(|k| {
            let o = cd.orders()[k];
            let w = pow_mod(omega, e / o, p);
            let oinv = inv_mod(o % p, p);
            let mut mult = vec![0i64; o as usize];
            for (i, slot) in mult.iter_mut().enumerate() {
                let winv_i = pow_mod(inv_mod(w, p), i as u64, p);
                let mut s = 0u64;
                let mut wp = 1u64;
                for j in 0..o {
                    s = (s + theta[cd.power_map(k, j as i64)] * wp) % p;
                    wp = wp * winv_i % p;
                }
                let m = s * oinv % p;
                if m as i64 > deg {
                    return Err(Error::TableFailure(format!(
                        "eigenvalue multiplicity {m} exceeds degree {deg}"
                    )));
                }
                *slot = m as i64;
            }
            if mult.iter().sum::<i64>() != deg {
                return Err(Error::TableFailure(
                    "eigenvalue multiplicities do not add up to the degree".into(),
                ));
            }
            Cyclotomic::from_int_exponents(o as u32, &mult)
        })
        .collect()
}

/// True when every element of `group` is conjugate to its inverse.
pub fn is_ambivalent(group: &PermGroup, limits: &Limits) -> Result<bool> {
    Ok(ClassData::new(group, limits)?.is_ambivalent())
}
