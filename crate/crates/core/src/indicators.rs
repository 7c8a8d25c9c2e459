//! Frobenius–Schur indicators of simples `(g, χ)` of `C(G, H)`.
//!
//! Every formula reduces to a vector of class counts on `S(g)`: for each
//! class `c`, how many summation indices land in `c`. One count vector then
//! serves all irreducible characters of the stabilizer.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational};
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::{character_table_from_classes, Character, CharacterTable};
use crate::classes::ClassData;
use crate::cosets::{double_cosets, stabilizer, DoubleCosetDecomposition, Stabilizer};
use crate::cyclo::CycloSum;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::Limits;

/// `(1/denom) Σ_c counts[c]·χ(c)` (or `conj χ`) as an exact integer.
fn from_counts(chi: &Character, counts: &[u64], denom: u64, conj: bool, context: &str) -> Result<i64> {
    let mut acc = CycloSum::new();
    for (c, &k) in counts.iter().enumerate() {
        if k != 0 {
            acc.add_int_scaled(chi.value(c), k as i64);
        }
    }
    let mut v = acc.finish();
    if conj {
        v = v.conj();
    }
    let v = v.scale(&BigRational::new(BigInt::from(1), BigInt::from(denom)));
    v.as_rational_integer().ok_or_else(|| Error::NonIntegral {
        context: context.to_string(),
        value: v.to_string(),
    })
}

fn check_m(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("indicator degree {m} < 1")));
    }
    Ok(())
}

/// Class counts of `(gx)^m` over `x ∈ H` with `(gx)^m ∈ S(g)`.
fn general_counts(g: &Permutation, h_elems: &[Permutation], s: &ClassData, m: i64) -> Vec<u64> {
    let mut counts = vec![0u64; s.len()];
    for x in h_elems {
        let y = g.mul_unchecked(x).pow(m);
        if let Some(c) = s.class_of(&y) {
            counts[c] += 1;
        }
    }
    counts
}

/// Class counts of `(gx)²` over `x ∈ S`; needs `g² ∈ S` and `g ▷ S = S`.
fn stabilizer_counts(g: &Permutation, s: &ClassData) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; s.len()];
    for x in s.elements() {
        let gx = g.mul_unchecked(x);
        let c = s
            .class_of(&gx.mul_unchecked(&gx))
            .ok_or_else(|| Error::Hypothesis(format!("({gx})^2 leaves the stabilizer; g^2 is not in H")))?;
        counts[c] += 1;
    }
    Ok(counts)
}

fn check_stabilizer(g: &Permutation, chi: &Character, h: &PermGroup, limits: &Limits) -> Result<Stabilizer> {
    let st = stabilizer(g, h, limits)?;
    if !st.group.same_group(chi.class_data().group()) {
        return Err(Error::InvalidParameter(format!("character is not defined on S({g})")));
    }
    Ok(st)
}

/// General indicator `ν_m(g, χ) = (1/|S|) Σ_{x∈H, (gx)^m∈H} conj χ((gx)^m)`.
pub fn nu_m_general(g: &Permutation, chi: &Character, h: &PermGroup, m: i64, limits: &Limits) -> Result<i64> {
    check_m(m)?;
    check_stabilizer(g, chi, h, limits)?;
    let s = chi.class_data();
    let counts = general_counts(g, &h.elements(limits)?, s, m);
    from_counts(chi, &counts, s.group_order(), true, &format!("nu_{m}({g})"))
}

/// `ν₂(g, χ) = (1/|S|) Σ_{x∈S} χ((gx)²)`, valid when `g² ∈ H`.
pub fn nu2_stab(g: &Permutation, chi: &Character, h: &PermGroup, limits: &Limits) -> Result<i64> {
    if !h.contains(&g.mul_unchecked(g)) {
        return Err(Error::Hypothesis(format!("g^2 = {} is not in H", g.pow(2))));
    }
    check_stabilizer(g, chi, h, limits)?;
    let s = chi.class_data();
    from_counts(chi, &stabilizer_counts(g, s)?, s.group_order(), false, "nu_2 over S")
}

/// The index-two overgroup `Ŝ = S ⊔ gS`.
#[derive(Debug)]
pub struct HatS {
    pub s: Arc<ClassData>,
    pub g: Permutation,
    pub group: PermGroup,
    classes: Arc<ClassData>,
    seed: u64,
    table: OnceLock<Result<CharacterTable>>,
}

/// Builds `Ŝ` over the class data of `S`; `g ∉ S`, `g² ∈ S`, `g ▷ S = S` are required.
pub fn hat_s(g: &Permutation, s: &Arc<ClassData>, limits: &Limits) -> Result<HatS> {
    let sg = s.group();
    if s.class_of(g).is_some() {
        return Err(Error::Hypothesis(format!("{g} lies in S")));
    }
    if s.class_of(&g.mul_unchecked(g)).is_none() {
        return Err(Error::Hypothesis(format!("g^2 = {} is not in S", g.pow(2))));
    }
    if sg
        .generators()
        .iter()
        .any(|x| s.class_of(&g.conj_unchecked(x)).is_none())
    {
        return Err(Error::Hypothesis(format!("{g} does not normalize S")));
    }
    let mut gens = sg.generators().to_vec();
    gens.push(g.clone());
    let group = PermGroup::new(sg.degree(), gens)?;
    if group.order() != 2 * s.group_order() as u128 {
        return Err(Error::Hypothesis("S ∪ gS is not closed".into()));
    }
    let classes = ClassData::new(&group, limits)?;
    Ok(HatS {
        s: s.clone(),
        g: g.clone(),
        group,
        classes,
        seed: limits.seed,
        table: OnceLock::new(),
    })
}

impl HatS {
    pub fn class_data(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn table(&self) -> Result<&CharacterTable> {
        self.table
            .get_or_init(|| character_table_from_classes(self.classes.clone(), self.seed))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn check(&self, chi: &Character) -> Result<()> {
        if Arc::ptr_eq(chi.class_data(), &self.s) {
            Ok(())
        } else {
            Err(Error::MismatchedClassData)
        }
    }

    /// `(1/|S|) Σ_{x∈Ŝ} χ(x²) − ν₂(χ)`.
    pub fn nu2_hat(&self, chi: &Character) -> Result<i64> {
        self.check(chi)?;
        let mut counts = vec![0u64; self.s.len()];
        for x in self.classes.elements() {
            let c = self
                .s
                .class_of(&x.mul_unchecked(x))
                .ok_or_else(|| Error::Hypothesis("a square of Ŝ leaves S".into()))?;
            counts[c] += 1;
        }
        Ok(from_counts(chi, &counts, self.s.group_order(), false, "nu_2 over Ŝ")? - chi.nu_classical(2)?)
    }

    /// `ν₂(Ind χ) − ν₂(χ)`.
    pub fn nu2_induced(&self, chi: &Character) -> Result<i64> {
        self.check(chi)?;
        Ok(chi.induce_index2(&self.classes)?.nu_classical(2)? - chi.nu_classical(2)?)
    }

    /// Through an irreducible `χ̂` of `Ŝ` over `χ`: `2ν₂(χ̂) − ν₂(χ)` when
    /// `g ▷ χ = χ`, otherwise `ν₂(χ̂) − ν₂(χ)`.
    pub fn nu2_extension(&self, chi: &Character) -> Result<i64> {
        self.check(chi)?;
        let table = self.table()?;
        let mut hat = None;
        for row in table.rows() {
            if !row.restrict(&self.s)?.inner_product(chi)?.is_zero() {
                hat = Some(row);
                break;
            }
        }
        let hat = hat.ok_or_else(|| Error::TableFailure("no constituent over χ".into()))?;
        let stable = chi.conjugate_by(&self.g)?.values() == chi.values();
        let k = if stable { 2 } else { 1 };
        Ok(k * hat.nu_classical(2)? - chi.nu_classical(2)?)
    }
}

pub fn nu2_hat(g: &Permutation, chi: &Character, limits: &Limits) -> Result<i64> {
    hat_s(g, chi.class_data(), limits)?.nu2_hat(chi)
}

pub fn nu2_induced(g: &Permutation, chi: &Character, limits: &Limits) -> Result<i64> {
    hat_s(g, chi.class_data(), limits)?.nu2_induced(chi)
}

pub fn nu2_extension(g: &Permutation, chi: &Character, limits: &Limits) -> Result<i64> {
    hat_s(g, chi.class_data(), limits)?.nu2_extension(chi)
}

/// Twisted indicator `(1/|S|) Σ_{x∈S} χ(x·τ(x))` with `τ(x) = u x u⁻¹`.
pub fn nu_tau_twisted(chi: &Character, u: &Permutation) -> Result<i64> {
    let s = chi.class_data();
    if s.group()
        .generators()
        .iter()
        .any(|x| s.class_of(&u.conj_unchecked(x)).is_none())
    {
        return Err(Error::Hypothesis(format!("{u} does not normalize S")));
    }
    let mut counts = vec![0u64; s.len()];
    for x in s.elements() {
        let c = s
            .class_of(&x.mul_unchecked(&u.conj_unchecked(x)))
            .expect("S is normalized");
        counts[c] += 1;
    }
    from_counts(chi, &counts, s.group_order(), false, "tau-twisted nu_2")
}

/// Twisted indicator with respect to an element: `(1/|S|) Σ_{x∈S} χ((gx)²)`
/// for `g` normalizing `S` with `g² ∈ S`.
pub fn nu_twisted_by_element(chi: &Character, g: &Permutation) -> Result<i64> {
    let s = chi.class_data();
    if s.group()
        .generators()
        .iter()
        .any(|x| s.class_of(&g.conj_unchecked(x)).is_none())
    {
        return Err(Error::Hypothesis(format!("{g} does not normalize S")));
    }
    from_counts(chi, &stabilizer_counts(g, s)?, s.group_order(), false, "twisted nu_2")
}

fn vanishing_witness_in(g: &Permutation, h_elems: &[Permutation], in_h: impl Fn(&Permutation) -> bool, m: i64) -> bool {
    h_elems.iter().any(|x| in_h(&g.mul_unchecked(x).pow(m)))
}

/// True when some `x ∈ H` has `(gx)^m ∈ H`. False forces `ν_m(g, χ) = 0`
/// for every `χ`.
pub fn vanishing_witness(g: &Permutation, h: &PermGroup, m: i64, limits: &Limits) -> Result<bool> {
    check_m(m)?;
    Ok(vanishing_witness_in(g, &h.elements(limits)?, |y| h.contains(y), m))
}

fn normalize_in(g: &Permutation, h_elems: &[Permutation], in_h: impl Fn(&Permutation) -> bool) -> Option<Permutation> {
    let g1 = h_elems
        .iter()
        .map(|x| g.mul_unchecked(x))
        .find(|y| in_h(&y.mul_unchecked(y)))?;
    let mut odd = g1.order();
    while odd % 2 == 0 {
        odd /= 2;
    }
    // g1^odd = g1·(g1²)^l with odd = 2l + 1
    Some(g1.pow(odd as i64))
}

/// An element `g″ ∈ gH` of 2-power order with `g″² ∈ H`, if one exists.
/// Without one every `ν₂` on the double coset vanishes.
pub fn normalize_rep_order2(g: &Permutation, h: &PermGroup, limits: &Limits) -> Result<Option<Permutation>> {
    Ok(normalize_in(g, &h.elements(limits)?, |y| h.contains(y)))
}

/// Shared character tables, keyed by the element set of the group.
#[derive(Debug, Default)]
pub struct TableCache {
    seed: u64,
    tables: Mutex<HashMap<Vec<Permutation>, Arc<CharacterTable>>>,
}

impl TableCache {
    pub fn new(seed: u64) -> Self {
        TableCache {
            seed,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, group: &PermGroup, limits: &Limits) -> Result<Arc<CharacterTable>> {
        let key = group.element_key(limits)?;
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(character_table_from_classes(ClassData::new(group, limits)?, self.seed)?);
        Ok(self.tables.lock().unwrap().entry(key).or_insert(t).clone())
    }

    /// Every table built so far, in no particular order.
    pub fn tables(&self) -> Vec<Arc<CharacterTable>> {
        self.tables.lock().unwrap().values().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.tables.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A simple object `(g, χ)` with `χ ∈ Irr(S(g))`.
#[derive(Clone, Debug)]
pub struct SimpleObject {
    pub g: Permutation,
    pub stabilizer: Stabilizer,
    pub character: Character,
}

impl SimpleObject {
    /// All simples over `g`, one per irreducible of `S(g)`.
    pub fn all_over(g: &Permutation, h: &PermGroup, cache: &TableCache, limits: &Limits) -> Result<Vec<SimpleObject>> {
        let st = stabilizer(g, h, limits)?;
        let table = cache.get(&st.group, limits)?;
        Ok(table
            .rows()
            .iter()
            .map(|chi| SimpleObject {
                g: g.clone(),
                stabilizer: st.clone(),
                character: chi.clone(),
            })
            .collect())
    }

    pub fn nu(&self, m: i64, limits: &Limits) -> Result<i64> {
        check_m(m)?;
        let s = self.character.class_data();
        let counts = general_counts(&self.g, &self.stabilizer.ambient.elements(limits)?, s, m);
        from_counts(&self.character, &counts, s.group_order(), true, "nu_m")
    }
}

/// Which formula produced an indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    /// `g ∈ H`: the classical indicator of `χ`.
    Classical,
    /// No `x ∈ H` with `(gx)^m ∈ H`.
    Vanishing,
    /// Sum over `S` with an order-normalized representative.
    Stabilizer,
    /// Sum over `H`.
    General,
}

#[derive(Clone, Debug, Serialize)]
pub struct CategoryId {
    #[serde(rename = "G_spec")]
    pub g_spec: String,
    #[serde(rename = "H_spec")]
    pub h_spec: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorEntry {
    pub rep: String,
    pub stab_order: u64,
    pub chi_degree: i64,
    pub nu: i64,
    #[serde(skip)]
    pub representative: Permutation,
    #[serde(skip)]
    pub chi_index: usize,
    #[serde(skip)]
    pub path: Path,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    pub category: CategoryId,
    pub m: i64,
    pub entries: Vec<IndicatorEntry>,
    pub summary: BTreeMap<i64, usize>,
}

impl IndicatorReport {
    pub fn with_category(mut self, g_spec: impl Into<String>, h_spec: impl Into<String>) -> Self {
        self.category = CategoryId {
            g_spec: g_spec.into(),
            h_spec: h_spec.into(),
        };
        self
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|e| e.nu)
    }

    pub fn min(&self) -> Option<i64> {
        self.values().min()
    }

    /// True when every value lies in `allowed`.
    pub fn all_in(&self, allowed: &[i64]) -> bool {
        self.values().all(|v| allowed.contains(&v))
    }

    /// Entries grouped by double coset, in report order.
    pub fn by_coset(&self) -> Vec<&[IndicatorEntry]> {
        self.entries
            .chunk_by(|a, b| a.representative == b.representative)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Columns `rep,stab_order,chi_degree,nu`, one row per entry.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            w.serialize(e).expect("in-memory write");
        }
        if self.entries.is_empty() {
            w.write_record(["rep", "stab_order", "chi_degree", "nu"])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }
}

fn generator_spec(g: &PermGroup) -> String {
    let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
    format!("gens:{}@{}", gens.join(";"), g.degree())
}

/// Runs category scans, sharing character tables between cosets and scans.
#[derive(Debug)]
pub struct Scanner {
    limits: Limits,
    cache: TableCache,
}

impl Scanner {
    pub fn new(limits: Limits) -> Self {
        let cache = TableCache::new(limits.seed);
        Scanner { limits, cache }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cache(&self) -> &TableCache {
        &self.cache
    }

    /// Indicators of every simple of `C(G, H)`.
    pub fn scan(&self, g: &PermGroup, h: &PermGroup, m: i64) -> Result<IndicatorReport> {
        check_m(m)?;
        let dc = double_cosets(g, h, &self.limits)?;
        self.scan_decomposition(&dc, m)
    }

    pub fn scan_decomposition(&self, dc: &DoubleCosetDecomposition, m: i64) -> Result<IndicatorReport> {
        check_m(m)?;
        let h = dc.subgroup();
        let h_elems = h.elements(&self.limits)?;
        let h_set: HashSet<&Permutation> = h_elems.iter().collect();
        let per_coset = dc
            .cosets()
            .par_iter()
            .map(|c| self.scan_coset(&c.representative, h, &h_elems, &h_set, m))
            .collect::<Result<Vec<_>>>()?;
        let entries: Vec<IndicatorEntry> = per_coset.into_iter().flatten().collect();
        let mut summary = BTreeMap::new();
        for e in &entries {
            *summary.entry(e.nu).or_insert(0) += 1;
        }
        Ok(IndicatorReport {
            category: CategoryId {
                g_spec: generator_spec(dc.group()),
                h_spec: generator_spec(h),
            },
            m,
            entries,
            summary,
        })
    }

    fn scan_coset(
        &self,
        rep: &Permutation,
        h: &PermGroup,
        h_elems: &[Permutation],
        h_set: &HashSet<&Permutation>,
        m: i64,
    ) -> Result<Vec<IndicatorEntry>> {
        let in_h = |y: &Permutation| h_set.contains(y);
        let st = stabilizer(rep, h, &self.limits)?;
        let table = self.cache.get(&st.group, &self.limits)?;
        let s = table.class_data();
        let order = s.group_order();
        let (path, counts) = if in_h(rep) {
            (Path::Classical, None)
        } else if m == 2 {
            match normalize_in(rep, h_elems, in_h) {
                None => (Path::Vanishing, None),
                Some(g2) => (Path::Stabilizer, Some((stabilizer_counts(&g2, s)?, false))),
            }
        } else if !vanishing_witness_in(rep, h_elems, in_h, m) {
            (Path::Vanishing, None)
        } else {
            (Path::General, Some((general_counts(rep, h_elems, s, m), true)))
        };
        let rep_text = rep.to_string();
        table
            .rows()
            .iter()
            .enumerate()
            .map(|(i, chi)| {
                let nu = match (&path, &counts) {
                    (Path::Classical, _) => chi.nu_classical(m)?,
                    (_, None) => 0,
                    (_, Some((c, conj))) => from_counts(chi, c, order, *conj, &format!("nu_{m}({rep})"))?,
                };
                if m == 2 && !(-1..=1).contains(&nu) {
                    return Err(Error::NonIntegral {
                        context: format!("nu_2({rep}) outside {{-1,0,1}}"),
                        value: nu.to_string(),
                    });
                }
                Ok(IndicatorEntry {
                    rep: rep_text.clone(),
                    stab_order: order,
                    chi_degree: chi.degree(),
                    nu,
                    representative: rep.clone(),
                    chi_index: i,
                    path,
                })
            })
            .collect()
    }
}

/// Indicators of every simple of `C(G, H)`.
pub fn category_scan(g: &PermGroup, h: &PermGroup, m: i64, limits: &Limits) -> Result<IndicatorReport> {
    Scanner::new(limits.clone()).scan(g, h, m)
}

/// Both sides of the invariance under an element `u` centralizing `H`.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceCheck {
    pub stabilizers_equal: bool,
    /// `(ν_m(g, χ), ν_m(u ▷ g, χ))` per irreducible.
    pub conjugated: Vec<(i64, i64)>,
    /// `(ν_m(g, χ), ν_m(ug, χ))`, when `ug = gu` and `u^m = e`.
    pub product: Option<Vec<(i64, i64)>>,
}

impl InvarianceCheck {
    pub fn holds(&self) -> bool {
        self.stabilizers_equal
            && self.conjugated.iter().all(|(a, b)| a == b)
            && self.product.iter().flatten().all(|(a, b)| a == b)
    }
}

pub fn invariance_shift(
    u: &Permutation,
    g: &Permutation,
    h: &PermGroup,
    m: i64,
    limits: &Limits,
) -> Result<InvarianceCheck> {
    check_m(m)?;
    if !h.centralized_by(u) {
        return Err(Error::Hypothesis(format!("{u} does not centralize H")));
    }
    let cache = TableCache::new(limits.seed);
    let base = SimpleObject::all_over(g, h, &cache, limits)?;
    let s = &base[0].stabilizer.group;
    let with = |g2: Permutation| -> Result<(bool, Vec<(i64, i64)>)> {
        let s2 = stabilizer(&g2, h, limits)?.group;
        let equal = s2.same_group(s);
        let mut pairs = Vec::new();
        for obj in &base {
            let moved = SimpleObject {
                g: g2.clone(),
                ..obj.clone()
            };
            pairs.push((obj.nu(m, limits)?, moved.nu(m, limits)?));
        }
        Ok((equal, pairs))
    };
    let (eq1, conjugated) = with(u.conj_unchecked(g))?;
    let commuting = u.mul_unchecked(g) == g.mul_unchecked(u);
    let product = if commuting && u.pow(m).is_identity() {
        let (eq2, pairs) = with(u.mul_unchecked(g))?;
        Some((eq2, pairs))
    } else {
        None
    };
    Ok(InvarianceCheck {
        stabilizers_equal: eq1 && product.as_ref().is_none_or(|(e, _)| *e),
        conjugated,
        product: product.map(|(_, p)| p),
    })
}

/// Both sides of the reduction `ν₂(tf, χ, H) = ν₂(f, χ, H′)`, `H′ = Stab_H(tH)`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionCheck {
    pub h_prime_order: u128,
    pub stabilizer_order: u128,
    pub stabilizers_equal: bool,
    /// `(ν₂(tf, χ, H), ν₂(f, χ, H′))` per irreducible.
    pub values: Vec<(i64, i64)>,
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.stabilizers_equal && self.values.iter().all(|(a, b)| a == b)
    }
}

pub fn reduction_tf(
    t: &Permutation,
    f: &Permutation,
    h: &PermGroup,
    f_group: &PermGroup,
    limits: &Limits,
) -> Result<ReductionCheck> {
    if !t.mul_unchecked(t).is_identity() {
        return Err(Error::Hypothesis(format!("{t} is not an involution")));
    }
    if !f_group.contains_all(h) {
        return Err(Error::Hypothesis("H is not contained in F".into()));
    }
    let h_elems = h.elements(limits)?;
    for x in h_elems.iter() {
        let y = t.conj_unchecked(x);
        if f_group.contains(&y) && !h.contains(&y) {
            return Err(Error::Hypothesis(format!("{y} lies in F ∩ t▷H but not in H")));
        }
    }
    let h_prime = stabilizer(t, h, limits)?.group;
    if !h_prime.centralized_by(t) {
        return Err(Error::Hypothesis("Stab_H(tH) is not centralized by t".into()));
    }
    if !f_group.contains(f) || !h.contains(&f.mul_unchecked(f)) || f.mul_unchecked(t) != t.mul_unchecked(f) {
        return Err(Error::Hypothesis(format!(
            "{f} must lie in F, square into H and commute with t"
        )));
    }
    let tf = t.mul_unchecked(f);
    let cache = TableCache::new(limits.seed);
    let left = SimpleObject::all_over(&tf, h, &cache, limits)?;
    let right_stab = stabilizer(f, &h_prime, limits)?;
    let s = &left[0].stabilizer.group;
    let stabilizers_equal = right_stab.group.same_group(s);
    let mut values = Vec::new();
    if stabilizers_equal {
        for obj in &left {
            let right = SimpleObject {
                g: f.clone(),
                stabilizer: right_stab.clone(),
                character: obj.character.clone(),
            };
            values.push((obj.nu(2, limits)?, right.nu(2, limits)?));
        }
    }
    Ok(ReductionCheck {
        h_prime_order: h_prime.order(),
        stabilizer_order: s.order(),
        stabilizers_equal,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alt, cyclic, sym, sym_embed};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn identity_coset_is_classical() {
        let h = sym(4).unwrap();
        let cache = TableCache::new(1);
        for obj in SimpleObject::all_over(&Permutation::identity(4), &h, &cache, &lim()).unwrap() {
            assert_eq!(obj.nu(2, &lim()).unwrap(), obj.character.nu_classical(2).unwrap());
            assert_eq!(obj.nu(3, &lim()).unwrap(), obj.character.nu_classical(3).unwrap());
        }
    }

    #[test]
    fn minus_one_example() {
        let h = cyclic(12).unwrap();
        let g = p("(1,2,7,8)(3,11,9,5)(4,12,10,6)", 12);
        let cache = TableCache::new(1);
        let objs = SimpleObject::all_over(&g, &h, &cache, &lim()).unwrap();
        assert_eq!(objs.len(), 2);
        let vals: Vec<i64> = objs.iter().map(|o| o.nu(2, &lim()).unwrap()).collect();
        assert_eq!(vals, vec![1, -1]);
        for o in &objs {
            assert_eq!(
                nu2_stab(&g, &o.character, &h, &lim()).unwrap(),
                o.nu(2, &lim()).unwrap()
            );
        }
        assert_eq!(normalize_rep_order2(&g, &h, &lim()).unwrap(), Some(g.clone()));
    }

    #[test]
    fn stab_path_on_alt4() {
        let h = alt(4).unwrap();
        let g = p("(1,2)", 4);
        let cache = TableCache::new(1);
        let objs = SimpleObject::all_over(&g, &h, &cache, &lim()).unwrap();
        let triv = &objs[0];
        assert_eq!(nu2_stab(&g, &triv.character, &h, &lim()).unwrap(), 1);
        let c4 = cyclic(4).unwrap();
        assert!(matches!(
            nu2_stab(&p("(1,2,3)", 4), &triv.character, &c4, &lim()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn vanishing_p_example() {
        let h = sym_embed(5, 7).unwrap();
        let g = p("(5,6)", 7);
        assert!(!vanishing_witness(&g, &h, 7, &lim()).unwrap());
        assert!(vanishing_witness(&Permutation::identity(7), &h, 7, &lim()).unwrap());
        assert!(vanishing_witness(&p("(1,2)", 6), &alt(6).unwrap(), 2, &lim()).unwrap());
        let cache = TableCache::new(1);
        for o in SimpleObject::all_over(&g, &h, &cache, &lim()).unwrap() {
            assert_eq!(o.nu(7, &lim()).unwrap(), 0);
        }
    }

    #[test]
    fn normalization() {
        let triv = PermGroup::trivial(3);
        assert_eq!(normalize_rep_order2(&p("(1,2,3)", 3), &triv, &lim()).unwrap(), None);
        let h = sym_embed(2, 5).unwrap();
        let g = p("(1,3,2,4,5)", 5);
        if let Some(g2) = normalize_rep_order2(&g, &h, &lim()).unwrap() {
            assert!(h.contains(&g.inverse().mul_unchecked(&g2)));
            assert!(g2.order().is_power_of_two());
        }
    }

    #[test]
    fn twisted_indicators() {
        let c3 = cyclic(3).unwrap();
        let cd = ClassData::new(&c3, &lim()).unwrap();
        let t = character_table_from_classes(cd, 1).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(nu_tau_twisted(&t.rows()[0], &id).unwrap(), 1);
        assert_eq!(nu_tau_twisted(&t.rows()[1], &id).unwrap(), 0);
        assert!(nu_tau_twisted(&t.rows()[1], &p("(1,2)", 3)).is_ok());

        let a4 = alt(4).unwrap();
        let cd = ClassData::new(&a4, &lim()).unwrap();
        let t = character_table_from_classes(cd.clone(), 1).unwrap();
        let u = p("(1,2)", 4);
        let sum: i64 = t
            .rows()
            .iter()
            .map(|chi| nu_tau_twisted(chi, &u).unwrap() * chi.degree())
            .sum();
        // Σ ν^τ(χ)χ(1) = #{x : x·τ(x) = e}
        let count = cd
            .elements()
            .iter()
            .filter(|x| x.mul_unchecked(&u.conj_unchecked(x)).is_identity())
            .count() as i64;
        assert_eq!(sum, count);

        let c3 = PermGroup::new(4, vec![p("(1,2,3)", 4)]).unwrap();
        let t = character_table_from_classes(ClassData::new(&c3, &lim()).unwrap(), 1).unwrap();
        assert!(nu_tau_twisted(&t.rows()[0], &p("(1,4)", 4)).is_err());
    }

    #[test]
    fn hat_paths_agree() {
        let h = sym_embed(3, 6).unwrap();
        let cache = TableCache::new(1);
        for g in ["(1,4)", "(1,4)(2,5)", "(4,5)", "(1,4)(5,6)"] {
            let g = p(g, 6);
            for o in SimpleObject::all_over(&g, &h, &cache, &lim()).unwrap() {
                let chi = &o.character;
                let want = o.nu(2, &lim()).unwrap();
                let hat = hat_s(&g, chi.class_data(), &lim()).unwrap();
                assert_eq!(nu2_stab(&g, chi, &h, &lim()).unwrap(), want);
                assert_eq!(hat.nu2_hat(chi).unwrap(), want);
                assert_eq!(hat.nu2_induced(chi).unwrap(), want);
                assert_eq!(hat.nu2_extension(chi).unwrap(), want);
            }
        }
    }

    #[test]
    fn scan_alt_in_sym() {
        let r = category_scan(&sym(5).unwrap(), &alt(5).unwrap(), 2, &lim()).unwrap();
        assert!(r.all_in(&[0, 1]));
        assert_eq!(r.by_coset().len(), 2);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["entries"].as_array().unwrap().len(), r.entries.len());
        assert_eq!(r.to_csv().lines().count(), r.entries.len() + 1);
    }

    #[test]
    fn invariance_example() {
        let h = sym_embed(3, 8).unwrap();
        let c = invariance_shift(&p("(7,8)", 8), &p("(1,6)", 8), &h, 2, &lim()).unwrap();
        assert!(c.holds());
        assert!(c.product.is_some());
        assert!(invariance_shift(&p("(1,8)", 8), &p("(1,6)", 8), &h, 2, &lim()).is_err());
    }

    #[test]
    fn reduction_trivial_case() {
        // t commutes with H, f = e: both sides are classical indicators of H.
        let h = sym_embed(3, 6).unwrap();
        let f_group = sym_embed(4, 6).unwrap();
        let t = p("(5,6)", 6);
        let c = reduction_tf(&t, &Permutation::identity(6), &h, &f_group, &lim()).unwrap();
        assert!(c.holds());
        assert_eq!(c.h_prime_order, 6);
        assert!(c.values.iter().all(|(a, _)| *a == 1));
    }
}
