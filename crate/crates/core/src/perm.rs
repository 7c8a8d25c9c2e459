//! Permutations of `{1, …, n}`.
//!
//! Points are 1-based at every public boundary (cycle notation, [`Permutation::apply`],
//! [`Permutation::from_images`]); storage is a 0-based image array.
//!
//! Products compose right to left: `a.compose(&b)` is the map `x ↦ a(b(x))`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &p in images {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, degree: n });
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::NotBijective);
            }
            out.push((p - 1) as u32);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// 0-based constructor for internal use; the caller guarantees bijectivity.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Product of the given cycles (1-based points). Cycles need not be disjoint;
    /// they are multiplied right to left like any other product.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], degree: usize) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let cycle = cycle.as_ref();
            let mut seen = Vec::with_capacity(cycle.len());
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen.contains(&p) {
                    return Err(Error::RepeatedPoint { point: p });
                }
                seen.push(p);
            }
            if cycle.len() < 2 {
                continue;
            }
            let mut c: Vec<u32> = (0..degree as u32).collect();
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                c[from] = to as u32;
            }
            acc = acc.mul_unchecked(&Permutation::from_raw(c));
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1,2)(3,4)` or `(1 2 3)`, with an optional
    /// `deg=n` suffix. Without the suffix the degree is the largest point mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        parse_cycles(text, None)
    }

    /// Parses cycle notation at a fixed degree; a `deg=` suffix must agree.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Self> {
        parse_cycles(text, Some(degree))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// The 0-based image array.
    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.images
    }

    /// 1-based images, `images()[i-1]` being the image of `i`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// The action `g ▷ x = g x g⁻¹`, i.e. `self ▷ x`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        if self.degree() != x.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: x.degree(),
            });
        }
        Ok(self.conj_unchecked(x))
    }

    /// `self x self⁻¹`: relabels the cycles of `x` through `self`.
    #[inline]
    pub(crate) fn conj_unchecked(&self, x: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &xi) in x.images.iter().enumerate() {
            out[self.images[i] as usize] = self.images[xi as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        acc
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point, ordered
    /// by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Least `m ≥ 1` with `self^m = e`.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Smallest 1-based point not fixed, if any.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i + 1)
    }

    /// True when every cycle has length at most two.
    pub fn is_involution_or_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v as usize] as usize == i)
    }

    /// Same permutation on more points; the new points are fixed.
    pub fn extend_to(&self, degree: usize) -> Result<Permutation> {
        if degree < self.degree() {
            return Err(Error::InvalidParameter(format!(
                "cannot shrink degree {} to {degree}",
                self.degree()
            )));
        }
        let mut v = self.images.to_vec();
        v.extend(self.degree() as u32..degree as u32);
        Ok(Permutation::from_raw(v))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [deg {}]", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

/// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

fn parse_error(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}

fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut explicit_degree = None;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'(' => {
                pos += 1;
                let mut cycle = Vec::new();
                loop {
                    while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                        pos += 1;
                    }
                    if pos >= bytes.len() {
                        return Err(parse_error(text, pos, "unterminated cycle"));
                    }
                    if bytes[pos] == b')' {
                        pos += 1;
                        break;
                    }
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(parse_error(text, pos, "expected a point"));
                    }
                    let p: usize = text[start..pos]
                        .parse()
                        .map_err(|_| parse_error(text, start, "point too large"))?;
                    cycle.push(p);
                }
                cycles.push(cycle);
            }
            b'd' if text[pos..].starts_with("deg=") => {
                pos += 4;
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let d: usize = text[start..pos]
                    .parse()
                    .map_err(|_| parse_error(text, start, "expected degree after deg="))?;
                explicit_degree = Some(d);
            }
            _ => return Err(parse_error(text, pos, "unexpected character")),
        }
    }
    let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
    let degree = match (degree, explicit_degree) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::DegreeMismatch { left: a, right: b });
        }
        (Some(d), _) | (None, Some(d)) => d,
        (None, None) => max_point.max(1),
    };
    if degree == 0 {
        return Err(parse_error(text, 0, "degree must be positive"));
    }
    Permutation::from_cycles(&cycles, degree)
}
