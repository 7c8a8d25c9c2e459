//! Double cosets `H\G/H`, stabilizers `S(g)` and the normal form for `S_l ⊂ S_n`.
//!
//! `G` is never enumerated: cosets `gH` are canonicalized through the
//! stabilizer chain of `H` (lexicographically least element), reached by a
//! breadth-first search under left multiplication by the generators of `G`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{sym, sym_embed, PermGroup};
use crate::perm::Permutation;
use crate::Limits;

fn check_pair(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<u128> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    if !g.contains_all(h) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    let index = g.order() / h.order();
    if index > limits.index as u128 {
        return Err(Error::BoundExceeded {
            what: "index",
            limit: limits.index,
            required: index,
        });
    }
    Ok(index)
}

/// One representative per coset `gH`, each the least element of its coset;
/// the identity (representing `H`) comes first.
pub fn right_transversal(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<Vec<Permutation>> {
    Ok(transversal_with_index(g, h, limits)?.0)
}

fn transversal_with_index(
    g: &PermGroup,
    h: &PermGroup,
    limits: &Limits,
) -> Result<(Vec<Permutation>, HashMap<Permutation, usize>)> {
    let index = check_pair(g, h, limits)? as usize;
    let id = Permutation::identity(g.degree());
    let mut reps = Vec::with_capacity(index);
    let mut seen = HashMap::with_capacity(index);
    seen.insert(id.clone(), 0);
    reps.push(id);
    let mut i = 0;
    while i < reps.len() {
        for s in g.generators() {
            let c = h.canonical_left_coset_rep(&s.mul_unchecked(&reps[i]));
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), reps.len());
                reps.push(c);
            }
        }
        i += 1;
    }
    debug_assert_eq!(reps.len(), index);
    Ok((reps, seen))
}

/// A double coset `HgH`.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    /// Least element of the double coset.
    pub representative: Permutation,
    pub size: u128,
    /// Indices into the transversal of the cosets `xH ⊆ HgH`.
    pub transversal_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    g: PermGroup,
    h: PermGroup,
    transversal: Vec<Permutation>,
    cosets: Vec<DoubleCoset>,
}

impl DoubleCosetDecomposition {
    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.h
    }

    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    /// Double cosets ordered by representative; `H` itself is first.
    pub fn cosets(&self) -> &[DoubleCoset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Permutation> {
        self.cosets.iter().map(|c| &c.representative)
    }
}

/// Double cosets as orbits of `H` on the cosets `gH`.
pub fn double_cosets(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<DoubleCosetDecomposition> {
    let (transversal, index_of) = transversal_with_index(g, h, limits)?;
    let h_order = h.order();
    let mut orbit_of = vec![usize::MAX; transversal.len()];
    let mut cosets = Vec::new();
    for start in 0..transversal.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let r = &transversal[orbit[i]];
            for s in h.generators() {
                let c = h.canonical_left_coset_rep(&s.mul_unchecked(r));
                let j = index_of[&c];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orbit.push(j);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        let representative = orbit.iter().map(|&k| &transversal[k]).min().unwrap().clone();
        cosets.push(DoubleCoset {
            representative,
            size: h_order * orbit.len() as u128,
            transversal_indices: orbit,
        });
    }
    cosets.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(DoubleCosetDecomposition {
        g: g.clone(),
        h: h.clone(),
        transversal,
        cosets,
    })
}

/// `S(g) = {x ∈ H : g⁻¹xg ∈ H}`.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub g: Permutation,
    pub group: PermGroup,
    pub ambient: PermGroup,
}

pub fn stabilizer(g: &Permutation, h: &PermGroup, limits: &Limits) -> Result<Stabilizer> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: g.degree(),
        });
    }
    let ginv = g.inverse();
    let group = h.filter_subgroup(limits, |x| h.contains(&ginv.conj_unchecked(x)))?;
    Ok(Stabilizer {
        g: g.clone(),
        group,
        ambient: h.clone(),
    })
}

fn check_l(sigma: &Permutation, l: usize) -> Result<()> {
    if l == 0 || l > sigma.degree() {
        return Err(Error::InvalidParameter(format!(
            "l = {l} outside 1..={}",
            sigma.degree()
        )));
    }
    Ok(())
}

/// Normal form together with the element `w ∈ S_l` with `normal = σ·w`.
///
/// While some cycle holds two letters `≤ l`, the cycle holding the smallest
/// such letter is split by right multiplication with `(i j)`, `i < j` its two
/// smallest low letters.
pub fn normal_form_sl_with_witness(sigma: &Permutation, l: usize) -> Result<(Permutation, Permutation)> {
    check_l(sigma, l)?;
    let n = sigma.degree();
    let mut cur = sigma.clone();
    let mut witness = Permutation::identity(n);
    loop {
        let pick = cur
            .cycles()
            .into_iter()
            .filter_map(|c| {
                let mut low: Vec<usize> = c.into_iter().filter(|&x| x <= l).collect();
                low.sort_unstable();
                (low.len() >= 2).then(|| (low[0], low[1]))
            })
            .min();
        let Some((i, j)) = pick else { break };
        let t = Permutation::from_cycles(&[[i, j]], n)?;
        cur = cur.mul_unchecked(&t);
        witness = witness.mul_unchecked(&t);
    }
    Ok((cur, witness))
}

/// A representative of `σ`'s `S_l`-double coset whose cycles each hold at
/// most one letter `≤ l`.
pub fn normal_form_sl(sigma: &Permutation, l: usize) -> Result<Permutation> {
    Ok(normal_form_sl_with_witness(sigma, l)?.0)
}

/// True when the normal form is not a product of disjoint transpositions.
pub fn is_null_coset_sl(sigma: &Permutation, l: usize) -> Result<bool> {
    Ok(!normal_form_sl(sigma, l)?.is_involution_or_identity())
}

/// Renames the letters `≤ l` of a normal form `1, 2, …` in order of first
/// appearance, reading cycles sorted by their smallest letter `> l`.
pub fn relabel_normal_form(nf: &Permutation, l: usize) -> Result<Permutation> {
    check_l(nf, l)?;
    let n = nf.degree();
    let mut cycles: Vec<(usize, Vec<usize>)> = nf
        .cycles()
        .into_iter()
        .filter_map(|c| {
            let high = c.iter().copied().filter(|&x| x > l).min()?;
            Some((high, c))
        })
        .collect();
    cycles.sort_unstable();
    let mut images = (1..=n).collect::<Vec<usize>>();
    let mut used = vec![false; l + 1];
    let mut next = 1;
    for (_, c) in &cycles {
        for &x in c {
            if x <= l && !used[x] {
                used[x] = true;
                images[x - 1] = next;
                next += 1;
            }
        }
    }
    for x in 1..=l {
        if !used[x] {
            images[x - 1] = next;
            next += 1;
        }
    }
    let pi = Permutation::from_images(&images)?;
    Ok(pi.conj_unchecked(nf))
}

/// Double-coset counts for `S_l ⊂ S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub l: usize,
    pub n: usize,
    pub total: usize,
    pub null: usize,
}

/// Counts `S_l`-double cosets in `S_n` and the null ones among them.
pub fn census_sl(l: usize, n: usize, limits: &Limits) -> Result<Census> {
    let (g, h) = sl_pair(l, n)?;
    let dc = double_cosets(&g, &h, limits)?;
    let mut null = 0;
    for r in dc.representatives() {
        if is_null_coset_sl(r, l)? {
            null += 1;
        }
    }
    Ok(Census {
        l,
        n,
        total: dc.len(),
        null,
    })
}

/// The same counts obtained from relabeled normal forms of every element of
/// `S_n` (enumerates `S_n`).
pub fn census_sl_normal_forms(l: usize, n: usize, limits: &Limits) -> Result<Census> {
    let (g, _) = sl_pair(l, n)?;
    let mut forms = HashSet::new();
    for x in g.elements(limits)?.iter() {
        forms.insert(relabel_normal_form(&normal_form_sl(x, l)?, l)?);
    }
    let null = forms.iter().filter(|f| !f.is_involution_or_identity()).count();
    Ok(Census {
        l,
        n,
        total: forms.len(),
        null,
    })
}

fn sl_pair(l: usize, n: usize) -> Result<(PermGroup, PermGroup)> {
    if l == 0 || l > n {
        return Err(Error::InvalidParameter(format!(
            "census needs 1 <= l <= n, got l={l}, n={n}"
        )));
    }
    Ok((sym(n)?, sym_embed(l, n)?))
}

/// One row of a double-coset dump.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleCosetRecord {
    pub representative: String,
    pub size: u128,
    pub stabilizer_order: u128,
}

/// Representatives, sizes and stabilizer orders, in decomposition order.
pub fn double_coset_records(dc: &DoubleCosetDecomposition) -> Vec<DoubleCosetRecord> {
    // |HgH| = |H|²/|S(g)|
    let h = dc.subgroup().order();
    dc.cosets()
        .iter()
        .map(|c| DoubleCosetRecord {
            representative: c.representative.to_string(),
            size: c.size,
            stabilizer_order: h * h / c.size,
        })
        .collect()
}

pub fn double_cosets_json(dc: &DoubleCosetDecomposition) -> String {
    serde_json::to_string_pretty(&double_coset_records(dc)).expect("serializable")
}

/// CSV with header `representative,size,stabilizer_order`.
pub fn double_cosets_csv(dc: &DoubleCosetDecomposition) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in double_coset_records(dc) {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}

/// CSV with header `l,n,total,null`.
pub fn census_csv(rows: &[Census]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}
