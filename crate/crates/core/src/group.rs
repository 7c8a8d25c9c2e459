//! Permutation groups backed by a base and strong generating set.
//!
//! The stabilizer chain is built once (deterministic Schreier–Sims) on first
//! use and cached; membership and order never enumerate the group.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::Limits;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `reps[b] = (u, u⁻¹)` with `u(base_point) = b`.
    reps: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut l = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            reps: Vec::new(),
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.reps = vec![None; degree];
        self.reps[self.base_point] = Some((id.clone(), id));
        self.orbit = vec![self.base_point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            let u = self.reps[b].as_ref().unwrap().0.clone();
            for s in &self.gens {
                let c = s.as_slice()[b] as usize;
                if self.reps[c].is_none() {
                    let v = s.mul_unchecked(&u);
                    let vi = v.inverse();
                    self.reps[c] = Some((v, vi));
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    /// Sifts `g` through the chain. Returns the residue and the level at which
    /// sifting stopped (`levels.len()` when every level was passed).
    fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let b = h.as_slice()[level.base_point] as usize;
            if b == level.base_point {
                continue;
            }
            match &level.reps[b] {
                Some((_, uinv)) => h = uinv.mul_unchecked(&h),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn build(degree: usize, gens: &[Permutation]) -> StabChain {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { levels: Vec::new() };
        if gens.is_empty() {
            return chain;
        }
        // A complete base 0..n makes the base images of an element its whole
        // image array, so coset minimization below is lexicographic.
        for b in 0..degree {
            let mut level = Level::new(b, degree);
            level.gens = gens
                .iter()
                .filter(|g| (0..b).all(|x| g.as_slice()[x] as usize == x))
                .cloned()
                .collect();
            level.rebuild(degree);
            chain.levels.push(level);
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            'scan: for oi in 0..chain.levels[iu].orbit.len() {
                let beta = chain.levels[iu].orbit[oi];
                let u_beta = chain.levels[iu].reps[beta].as_ref().unwrap().0.clone();
                for si in 0..chain.levels[iu].gens.len() {
                    let s = &chain.levels[iu].gens[si];
                    let sb = s.as_slice()[beta] as usize;
                    let u_sb_inv = &chain.levels[iu].reps[sb].as_ref().unwrap().1;
                    let schreier = u_sb_inv.mul_unchecked(&s.mul_unchecked(&u_beta));
                    let (h, j) = chain.strip_from(&schreier, iu + 1);
                    let mut fail = j;
                    let new_gen = if j < chain.levels.len() {
                        true
                    } else if !h.is_identity() {
                        let p = h.smallest_moved_point().unwrap() - 1;
                        chain.levels.push(Level::new(p, degree));
                        fail = chain.levels.len() - 1;
                        true
                    } else {
                        false
                    };
                    if new_gen {
                        for l in iu + 1..=fail {
                            chain.levels[l].gens.push(h.clone());
                            chain.levels[l].rebuild(degree);
                        }
                        restart = Some(fail);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(f) => i = f as isize,
                None => i -= 1,
            }
        }
        chain
    }

    fn strip_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let level = &self.levels[i];
            let b = h.as_slice()[level.base_point] as usize;
            if b == level.base_point {
                continue;
            }
            match &level.reps[b] {
                Some((_, uinv)) => h = uinv.mul_unchecked(&h),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

/// A subgroup of `S_n` given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<OnceLock<StabChain>>,
    elements: Arc<OnceLock<Arc<Vec<Permutation>>>>,
}

impl PermGroup {
    /// The group generated by `generators`, all of degree `degree`.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(OnceLock::new()),
            elements: Arc::new(OnceLock::new()),
        })
    }

    /// The group generated by a nonempty list of permutations of equal degree.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidParameter("empty generator list".into()))?;
        PermGroup::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Wraps a known, closed set of elements (identity included). A small
    /// generating set is picked greedily and the element list is cached.
    pub(crate) fn from_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for x in &elements {
            if !current.contains(x) {
                gens.push(x.clone());
                current = PermGroup::new(degree, gens.clone()).expect("degrees agree");
            }
            if current.order() == elements.len() as u128 {
                break;
            }
        }
        debug_assert_eq!(current.order(), elements.len() as u128);
        let mut elements = elements;
        if let Some(pos) = elements.iter().position(Permutation::is_identity) {
            elements.swap(0, pos);
        }
        let _ = current.elements.set(Arc::new(elements));
        current
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    /// Forces construction of the stabilizer chain, so that the value can be
    /// shared without any further lazy initialization.
    pub fn build(&self) -> &Self {
        self.chain();
        self
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    /// Base points with nontrivial basic orbits, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.chain()
            .levels
            .iter()
            .filter(|l| l.orbit.len() > 1)
            .map(|l| l.base_point + 1)
            .collect()
    }

    /// Orbit lengths along the stabilizer chain; their product is the order.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact membership by sifting.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, _) = self.chain().strip(p);
        h.is_identity()
    }

    pub fn contains_all(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups of `S_n`.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.contains_all(other)
    }

    /// All elements, identity first; each exactly once.
    pub fn elements(&self, limits: &Limits) -> Result<Arc<Vec<Permutation>>> {
        if let Some(e) = self.elements.get() {
            return Ok(e.clone());
        }
        let order = self.order();
        if order > limits.enumeration as u128 {
            return Err(Error::BoundExceeded {
                what: "enumeration",
                limit: limits.enumeration,
                required: order,
            });
        }
        let list = self.elements.get_or_init(|| {
            let mut acc = vec![Permutation::identity(self.degree)];
            for level in self.chain().levels.iter().rev() {
                let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
                for &b in &level.orbit {
                    let u = &level.reps[b].as_ref().unwrap().0;
                    next.extend(acc.iter().map(|a| u.mul_unchecked(a)));
                }
                acc = next;
            }
            Arc::new(acc)
        });
        Ok(list.clone())
    }

    /// The lexicographically least element (by image array) of the left coset
    /// `g·self`. Two elements give the same result exactly when they lie in the
    /// same coset.
    pub fn canonical_left_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.chain().levels {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut best: Option<(u32, usize)> = None;
            for &b in &level.orbit {
                let img = h.as_slice()[b];
                if best.is_none_or(|(v, _)| img < v) {
                    best = Some((img, b));
                }
            }
            let (_, b) = best.unwrap();
            h = h.mul_unchecked(&level.reps[b].as_ref().unwrap().0);
        }
        h
    }

    /// The subgroup generated by elements of `self` satisfying `keep`, found by
    /// filtering the element list.
    pub fn filter_subgroup<F>(&self, limits: &Limits, keep: F) -> Result<PermGroup>
    where
        F: Fn(&Permutation) -> bool,
    {
        let elems = self.elements(limits)?;
        let kept: Vec<Permutation> = elems.iter().filter(|x| keep(x)).cloned().collect();
        Ok(PermGroup::from_elements(self.degree, kept))
    }

    /// A key identifying the group as a set of permutations.
    pub(crate) fn element_key(&self, limits: &Limits) -> Result<Vec<Permutation>> {
        let mut v = self.elements(limits)?.as_ref().clone();
        v.sort_unstable();
        Ok(v)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|a| g.iter().all(|b| a.mul_unchecked(b) == b.mul_unchecked(a)))
    }

    /// True when `u x u⁻¹ ∈ self` for every generator `x`.
    pub fn normalized_by(&self, u: &Permutation) -> bool {
        u.degree() == self.degree && self.generators.iter().all(|x| self.contains(&u.conj_unchecked(x)))
    }

    /// True when `u` commutes with every generator.
    pub fn centralized_by(&self, u: &Permutation) -> bool {
        u.degree() == self.degree && self.generators.iter().all(|x| u.mul_unchecked(x) == x.mul_unchecked(u))
    }

    /// Same group acting on more points (new points fixed).
    pub fn extend_to(&self, degree: usize) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.extend_to(degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(&[c], degree).expect("valid cycle")
}

fn check_range(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

/// The symmetric group on `{1..n}`.
pub fn sym(n: usize) -> Result<PermGroup> {
    sym_embed(n, n)
}

/// The alternating group on `{1..n}`.
pub fn alt(n: usize) -> Result<PermGroup> {
    alt_embed(n, n)
}

/// The cyclic group generated by `(1 2 … n)`.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    check_range(n >= 1, || format!("cyclic:{n} needs n >= 1"))?;
    let gens = if n >= 2 { vec![cycle(1..=n, n)] } else { vec![] };
    PermGroup::new(n, gens)
}

/// `S_l` acting on `{1..l}` inside `S_n`, fixing the last `n - l` letters.
pub fn sym_embed(l: usize, n: usize) -> Result<PermGroup> {
    check_range(1 <= l && l <= n, || format!("sym-embed:{l},{n} needs 1 <= l <= n"))?;
    let mut gens = Vec::new();
    if l >= 2 {
        gens.push(cycle([1, 2], n));
    }
    if l >= 3 {
        gens.push(cycle(1..=l, n));
    }
    PermGroup::new(n, gens)
}

/// `A_l` acting on `{1..l}` inside `S_n`.
pub fn alt_embed(l: usize, n: usize) -> Result<PermGroup> {
    check_range(1 <= l && l <= n, || format!("alt-embed:{l},{n} needs 1 <= l <= n"))?;
    let gens = (3..=l).map(|i| cycle([1, 2, i], n)).collect();
    PermGroup::new(n, gens)
}

/// `S'_k`: the permutations of `{1..n}` fixing `1..k`.
pub fn sym_prime(k: usize, n: usize) -> Result<PermGroup> {
    check_range(k <= n && n >= 1, || format!("sym-prime:{k},{n} needs k <= n"))?;
    let mut gens = Vec::new();
    if n >= k + 2 {
        gens.push(cycle([k + 1, k + 2], n));
    }
    if n >= k + 3 {
        gens.push(cycle(k + 1..=n, n));
    }
    PermGroup::new(n, gens)
}

/// `S̃_{n-2} = A_n ∩ ((1 2) S'_2 ⊔ S'_2)`, a copy of `S_{n-2}` inside `A_n`.
pub fn tilde_sym(n: usize) -> Result<PermGroup> {
    check_range(n >= 4, || format!("tilde-sym:{n} needs n >= 4"))?;
    let gens = (3..n)
        .map(|i| Permutation::from_cycles(&[vec![1, 2], vec![i, i + 1]], n).unwrap())
        .collect();
    PermGroup::new(n, gens)
}

/// Orbits of a group on `{1..n}` (1-based), each sorted, ordered by least point.
pub fn orbits(group: &PermGroup) -> Vec<Vec<usize>> {
    let n = group.degree();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for start in 0..n {
        if !seen.insert(start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for g in group.generators() {
                let c = g.as_slice()[orbit[i]] as usize;
                if seen.insert(c) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        let mut o: Vec<usize> = orbit.into_iter().map(|x| x + 1).collect();
        o.sort_unstable();
        out.push(o);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }

    #[test]
    fn family_orders() {
        let lim = Limits::default();
        for n in 1..=9u128 {
            assert_eq!(sym(n as usize).unwrap().order(), factorial(n));
            let a = if n >= 2 { factorial(n) / 2 } else { 1 };
            assert_eq!(alt(n as usize).unwrap().order(), a);
        }
        for n in 4..=9usize {
            let t = tilde_sym(n).unwrap();
            assert_eq!(t.order(), factorial(n as u128 - 2));
            let elems = t.elements(&lim).unwrap();
            assert_eq!(elems.len() as u128, t.order());
            // membership agrees with the defining description
            for x in elems.iter() {
                assert_eq!(x.sign(), 1);
                let fixes = x.apply(1) == 1 && x.apply(2) == 2;
                let swaps = x.apply(1) == 2 && x.apply(2) == 1;
                assert!(fixes || swaps);
            }
        }
        assert_eq!(tilde_sym(4).unwrap().order(), 2);
        assert_eq!(tilde_sym(7).unwrap().order(), 120);
        assert_eq!(sym_embed(3, 6).unwrap().order(), 6);
        assert_eq!(sym_prime(2, 6).unwrap().order(), 24);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert!(tilde_sym(3).is_err());
        assert!(sym_embed(5, 4).is_err());
    }

    #[test]
    fn membership() {
        let a4 = alt(4).unwrap();
        assert!(!a4.contains(&Permutation::parse_with_degree("(1,2)", 4).unwrap()));
        assert!(a4.contains(&Permutation::parse_with_degree("(1,2)(3,4)", 4).unwrap()));
        let c12 = cyclic(12).unwrap();
        let t = Permutation::parse_with_degree("(1,2,3,4,5,6,7,8,9,10,11,12)", 12).unwrap();
        assert!(c12.contains(&t));
        assert!(c12.contains(&t.pow(6)));
        assert!(!sym(5).unwrap().contains(&Permutation::identity(6)));
    }

    #[test]
    fn elements_are_distinct_members() {
        let lim = Limits::default();
        for g in [
            sym(5).unwrap(),
            alt(6).unwrap(),
            cyclic(8).unwrap(),
            tilde_sym(6).unwrap(),
        ] {
            let e = g.elements(&lim).unwrap();
            assert!(e[0].is_identity());
            let set: HashSet<_> = e.iter().cloned().collect();
            assert_eq!(set.len() as u128, g.order());
            assert!(e.iter().all(|x| g.contains(x)));
        }
    }

    #[test]
    fn enumeration_bound() {
        let lim = Limits {
            enumeration: 100,
            ..Limits::default()
        };
        assert!(matches!(
            sym(6).unwrap().elements(&lim),
            Err(Error::BoundExceeded { required: 720, .. })
        ));
        // membership still works above the bound
        let s12 = sym(12).unwrap();
        assert_eq!(s12.order(), factorial(12));
        assert!(s12.contains(&Permutation::parse_with_degree("(1,12)", 12).unwrap()));
    }

    #[test]
    fn canonical_coset_rep_is_class_invariant() {
        let lim = Limits::default();
        let h = sym_embed(3, 5).unwrap();
        let g = Permutation::parse_with_degree("(1,4,2,5)", 5).unwrap();
        let c = h.canonical_left_coset_rep(&g);
        for x in h.elements(&lim).unwrap().iter() {
            assert_eq!(h.canonical_left_coset_rep(&(&g * x)), c);
        }
        assert!(h.contains(&(&g.inverse() * &c)));
    }

    #[test]
    fn generated_from_redundant_generators() {
        let gens = vec![
            Permutation::parse_with_degree("(1,2)(3,4)", 4).unwrap(),
            Permutation::parse_with_degree("(1,3)", 4).unwrap(),
        ];
        let d8 = PermGroup::from_generators(gens).unwrap();
        assert_eq!(d8.order(), 8);
        let klein = PermGroup::from_generators(vec![
            Permutation::parse_with_degree("(1,2)(3,4)", 4).unwrap(),
            Permutation::parse_with_degree("(1,3)(2,4)", 4).unwrap(),
            Permutation::parse_with_degree("(1,4)(2,3)", 4).unwrap(),
        ])
        .unwrap();
        assert_eq!(klein.order(), 4);
    }
}
