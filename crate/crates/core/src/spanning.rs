//! The brute-force route: enumerate spanning words of a multihomogeneous
//! component, evaluate them on generic matrices, and take the exact rank
//! of the resulting coefficient vectors.
//!
//! Left-normed Lie words of a fixed multidegree span the corresponding
//! multihomogeneous component of the relatively free algebra, so the
//! component's dimension is the rank of the matrix whose rows are the
//! entry-wise coefficient vectors of the evaluated words. Everything is
//! exact; nothing here depends on floating point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use thiserror::Error;

use crate::graded_model::{
    evaluate_word, generic_generators, matmul, Degree, Family, GenericMatrix, GradingSpec,
    Letter, LieWord, ModelError,
};
use crate::poly::{exact_rank, Monomial, PolyError, VarId};
use crate::{Nat, Rat};

/// Errors from word enumeration and dimension computation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpanError {
    /// A multidegree with no letters was passed where a component was
    /// expected.
    #[error("empty multidegree")]
    EmptyMultiDegree,
    /// Enumerating this component would produce more words than the
    /// configured cap allows.
    #[error("word enumeration would need {words} words, cap is {cap}")]
    WordCapExceeded { words: u128, cap: u64 },
    /// The associative spanning-word filter is only defined for the
    /// cyclic grading of the n x n matrices.
    #[error("associative spanning words are only defined for the cyclic matrix grading")]
    WrongFamily,
    /// Trouble in the underlying matrix model.
    #[error(transparent)]
    Model(#[from] ModelError),
    /// Trouble building coefficient vectors or taking ranks.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// How many times each free generator occurs in a word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree {
    counts: BTreeMap<Letter, u32>,
}

impl MultiDegree {
    /// Build from `(letter, count)` pairs; zero counts are dropped.
    pub fn new<I: IntoIterator<Item = (Letter, u32)>>(pairs: I) -> Self {
        let mut counts = BTreeMap::new();
        for (l, c) in pairs {
            if c > 0 {
                *counts.entry(l).or_insert(0) += c;
            }
        }
        MultiDegree { counts }
    }

    /// Total degree (word length).
    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    /// The `(letter, count)` pairs in letter order.
    pub fn counts(&self) -> impl Iterator<Item = (&Letter, u32)> {
        self.counts.iter().map(|(l, &c)| (l, c))
    }

    /// Multiplicity of one letter.
    pub fn count_of(&self, l: &Letter) -> u32 {
        self.counts.get(l).copied().unwrap_or(0)
    }

    /// Number of distinct letters.
    pub fn num_letters(&self) -> usize {
        self.counts.len()
    }

    /// Stable textual form, e.g. `x0_1^2*x1_1`.
    pub fn canonical(&self) -> String {
        if self.counts.is_empty() {
            return "1".to_string();
        }
        self.counts
            .iter()
            .map(|(l, &c)| {
                if c == 1 {
                    l.to_string()
                } else {
                    format!("{}^{}", l, c)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

/// The graded free generators of a model with `k` generators per
/// support degree, in letter order.
pub fn letters_of(spec: &GradingSpec, k: u16) -> Vec<Letter> {
    let mut out = Vec::with_capacity(spec.support().len() * k as usize);
    for d in spec.support() {
        for i in 1..=k {
            out.push(Letter { degree: *d, index: i });
        }
    }
    out.sort();
    out
}

/// All multidegrees of a given total over the model's letters, in a
/// fixed order.
pub fn multidegrees_of_total(spec: &GradingSpec, k: u16, m: u32) -> Vec<MultiDegree> {
    let letters = letters_of(spec, k);
    let mut out = Vec::new();
    let mut current: Vec<(Letter, u32)> = Vec::new();
    fn rec(
        letters: &[Letter],
        rem: u32,
        current: &mut Vec<(Letter, u32)>,
        out: &mut Vec<MultiDegree>,
    ) {
        if letters.len() == 1 {
            current.push((letters[0], rem));
            out.push(MultiDegree::new(current.iter().copied()));
            current.pop();
            return;
        }
        for c in 0..=rem {
            current.push((letters[0], c));
            rec(&letters[1..], rem - c, current, out);
            current.pop();
        }
    }
    if !letters.is_empty() {
        rec(&letters, m, &mut current, &mut out);
    }
    out
}

/// Exact binomial coefficient in `u128`, `None` on overflow.
fn binom_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 1..=k {
        r = r.checked_mul((n - k + i) as u128)? / i as u128;
    }
    Some(r)
}

/// Number of distinct arrangements of the multiset, `None` on overflow.
fn multinomial_u128(counts: &[u32]) -> Option<u128> {
    let mut seen: u64 = 0;
    let mut out: u128 = 1;
    for &c in counts {
        seen += c as u64;
        out = out.checked_mul(binom_u128(seen, c as u64)?)?;
    }
    Some(out)
}

/// How many words [`enumerate_words`] would yield for this multidegree,
/// or `None` if the count does not even fit in `u128`.
pub fn word_count(md: &MultiDegree, fix_first: bool) -> Option<u128> {
    let mut counts: Vec<u32> = md.counts().map(|(_, c)| c).collect();
    if counts.is_empty() {
        return Some(0);
    }
    if fix_first {
        // The first slot is pinned to the smallest letter present.
        counts[0] -= 1;
    }
    multinomial_u128(&counts)
}

/// All arrangements of the multidegree as left-normed word letter
/// sequences, in lexicographic order.
///
/// With `fix_first` the first letter is pinned to the smallest letter
/// occurring in the multidegree. Brackets are alternating, so a word
/// starting with a repeated pair is zero and any word can be rewritten
/// (via antisymmetry at the front) to start with the minimal letter;
/// the pinned enumeration spans the same component.
pub fn enumerate_words(md: &MultiDegree, fix_first: bool) -> Vec<LieWord> {
    let letters: Vec<Letter> = md.counts().map(|(l, _)| *l).collect();
    let mut rem: Vec<u32> = md.counts().map(|(_, c)| c).collect();
    let total = md.total() as usize;
    if total == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut word: Vec<Letter> = Vec::with_capacity(total);
    if fix_first {
        word.push(letters[0]);
        rem[0] -= 1;
    }
    fn rec(
        letters: &[Letter],
        rem: &mut [u32],
        word: &mut Vec<Letter>,
        total: usize,
        out: &mut Vec<LieWord>,
    ) {
        if word.len() == total {
            out.push(LieWord(word.clone()));
            return;
        }
        for i in 0..letters.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                word.push(letters[i]);
                rec(letters, rem, word, total, out);
                word.pop();
                rem[i] += 1;
            }
        }
    }
    rec(&letters, &mut rem, &mut word, total, &mut out);
    out
}

/// Which spanning route a growth table came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Rank of generic-matrix evaluations.
    Brute,
    /// Closed-form shape sums.
    Formula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Brute => write!(f, "brute"),
            Method::Formula => write!(f, "formula"),
        }
    }
}

/// A table of component dimensions `a_m` for `m = 1..=m_max`, plus the
/// provenance needed to label it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub family_id: String,
    pub k: u16,
    pub method: Method,
    /// `a[m - 1]` is the total dimension in word length `m`.
    pub a: Vec<Nat>,
}

impl GrowthTable {
    /// Largest word length in the table.
    pub fn m_max(&self) -> u32 {
        self.a.len() as u32
    }

    /// Partial sums `g(n) = a_1 + .. + a_n` for `n = 1..=m_max`.
    pub fn growth(&self) -> Vec<Nat> {
        let mut out = Vec::with_capacity(self.a.len());
        let mut acc = Nat::from(0u32);
        for a in &self.a {
            acc += a;
            out.push(acc.clone());
        }
        out
    }
}

/// Shared memo of component dimensions, keyed by a stable string
/// describing the model, the settings, and the multidegree.
#[derive(Default)]
pub struct DimCache {
    inner: Mutex<BTreeMap<String, u64>>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.inner.lock().unwrap().get(key).copied()
    }

    pub fn put(&self, key: String, dim: u64) {
        self.inner.lock().unwrap().insert(key, dim);
    }

    /// Snapshot of all entries, sorted by key.
    pub fn snapshot(&self) -> Vec<(String, u64)> {
        self.inner
            .lock()
            .unwrap()
            .iter()
            .map(|(k, &v)| (k.clone(), v))
            .collect()
    }

    /// Bulk-load entries (e.g. from a cache file).
    pub fn absorb<I: IntoIterator<Item = (String, u64)>>(&self, entries: I) {
        let mut g = self.inner.lock().unwrap();
        for (k, v) in entries {
            g.insert(k, v);
        }
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The brute-force dimension engine for one model and generator count.
pub struct Engine {
    spec: GradingSpec,
    k: u16,
    gens: BTreeMap<Letter, GenericMatrix>,
    fix_first: bool,
    word_cap: u64,
    cache: Arc<DimCache>,
}

/// Default cap on the number of words enumerated per multidegree.
pub const DEFAULT_WORD_CAP: u64 = 1_000_000;

impl Engine {
    /// Build an engine with default settings: first letter pinned,
    /// word cap of [`DEFAULT_WORD_CAP`], private cache.
    pub fn new(spec: GradingSpec, k: u16) -> Self {
        let gens = generic_generators(&spec, k);
        Engine {
            spec,
            k,
            gens,
            fix_first: true,
            word_cap: DEFAULT_WORD_CAP,
            cache: Arc::new(DimCache::new()),
        }
    }

    /// Toggle the pinned-first-letter enumeration.
    pub fn with_fix_first(mut self, fix_first: bool) -> Self {
        self.fix_first = fix_first;
        self
    }

    /// Override the per-multidegree word cap.
    pub fn with_word_cap(mut self, cap: u64) -> Self {
        self.word_cap = cap;
        self
    }

    /// Share a dimension cache (e.g. one loaded from disk).
    pub fn with_cache(mut self, cache: Arc<DimCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn spec(&self) -> &GradingSpec {
        &self.spec
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn fix_first(&self) -> bool {
        self.fix_first
    }

    pub fn word_cap(&self) -> u64 {
        self.word_cap
    }

    pub fn cache(&self) -> &Arc<DimCache> {
        &self.cache
    }

    fn cache_key(&self, kind: &str, md: &MultiDegree) -> String {
        format!(
            "{}|{}|k{}|ff{}|{}",
            kind,
            self.spec.id(),
            self.k,
            u8::from(self.fix_first),
            md.canonical()
        )
    }

    /// Variables that can appear in evaluations of one letter.
    fn letter_vars(&self, l: &Letter) -> Result<Vec<VarId>, SpanError> {
        let m = self
            .gens
            .get(l)
            .ok_or_else(|| ModelError::UnknownLetter(l.to_string()))?;
        let mut vars = BTreeSet::new();
        for e in m.entries() {
            for (mono, _) in e.terms() {
                for &(v, _) in mono.pairs() {
                    vars.insert(v);
                }
            }
        }
        Ok(vars.into_iter().collect())
    }

    /// Ordered monomial basis of the multihomogeneous component: all
    /// monomials of degree `c_l` in each letter's variables, multiplied
    /// across letters.
    fn monomial_basis(&self, md: &MultiDegree) -> Result<Vec<Monomial>, SpanError> {
        let mut partial = vec![Monomial::one()];
        for (l, c) in md.counts() {
            let vars = self.letter_vars(l)?;
            let group = monomials_of_degree(&vars, c);
            let mut next = Vec::with_capacity(partial.len() * group.len());
            for a in &partial {
                for b in &group {
                    next.push(a.mul(b));
                }
            }
            partial = next;
        }
        partial.sort();
        Ok(partial)
    }

    /// Dimension of one multihomogeneous component, by exact rank of the
    /// evaluated spanning words.
    pub fn component_dim(&self, md: &MultiDegree) -> Result<u64, SpanError> {
        if md.total() == 0 {
            return Err(SpanError::EmptyMultiDegree);
        }
        if md.total() == 1 {
            // The component is spanned by the generator itself; it is
            // nonzero exactly when its degree carries a nonzero part of
            // the algebra.
            let l = md.counts().next().expect("total is 1").0;
            return Ok(u64::from(self.spec.component_dim_of(&l.degree) > 0));
        }
        let key = self.cache_key("lie", md);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit);
        }
        let words = self.capped_words(md)?;
        let dim = self.rank_of_evaluations(md, words.iter().map(|w| Eval::Bracketed(w)))?;
        self.cache.put(key, dim);
        Ok(dim)
    }

    fn capped_words(&self, md: &MultiDegree) -> Result<Vec<LieWord>, SpanError> {
        let count = word_count(md, self.fix_first).unwrap_or(u128::MAX);
        if count > self.word_cap as u128 {
            return Err(SpanError::WordCapExceeded {
                words: count,
                cap: self.word_cap,
            });
        }
        Ok(enumerate_words(md, self.fix_first))
    }

    /// Evaluate a batch of same-multidegree words and take the rank of
    /// their stacked coefficient vectors.
    fn rank_of_evaluations<'a, I>(&'a self, md: &MultiDegree, words: I) -> Result<u64, SpanError>
    where
        I: Iterator<Item = Eval<'a>>,
    {
        let basis = self.monomial_basis(md)?;
        let n = self.spec.matrix_size();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for w in words {
            let mat = match w {
                Eval::Bracketed(w) => evaluate_word(w, &self.gens)?,
                Eval::Product(seq) => self.evaluate_product(seq)?,
            };
            if mat.is_zero() {
                continue;
            }
            let mut row = Vec::with_capacity(n * n * basis.len());
            for e in mat.entries() {
                row.extend(e.coeff_vector(&basis)?);
            }
            rows.push(row);
        }
        Ok(exact_rank(&rows)? as u64)
    }

    fn evaluate_product(&self, seq: &[Letter]) -> Result<GenericMatrix, SpanError> {
        let lookup = |l: &Letter| {
            self.gens
                .get(l)
                .ok_or_else(|| ModelError::UnknownLetter(l.to_string()))
        };
        let mut iter = seq.iter();
        let first = iter.next().expect("empty product");
        let mut acc = lookup(first)?.clone();
        for l in iter {
            acc = matmul(&acc, lookup(l)?)?;
        }
        Ok(acc)
    }

    /// Component dimensions of every multidegree of total `m`, in
    /// multidegree order.
    pub fn component_dims_of_total(
        &self,
        m: u32,
    ) -> Result<Vec<(MultiDegree, u64)>, SpanError> {
        let mds = multidegrees_of_total(&self.spec, self.k, m);
        let mut out: Vec<(MultiDegree, u64)> = mds
            .into_par_iter()
            .map(|md| self.component_dim(&md).map(|d| (md, d)))
            .collect::<Result<_, _>>()?;
        out.sort();
        Ok(out)
    }

    /// Total dimension in word length `m`: the sum of the component
    /// dimensions over all multidegrees of that total.
    pub fn a_m(&self, m: u32) -> Result<u64, SpanError> {
        Ok(self
            .component_dims_of_total(m)?
            .into_iter()
            .map(|(_, d)| d)
            .sum())
    }

    /// Brute-force growth table for `m = 1..=m_max`.
    pub fn growth_table(&self, m_max: u32) -> Result<GrowthTable, SpanError> {
        let mut a = Vec::with_capacity(m_max as usize);
        for m in 1..=m_max {
            a.push(Nat::from(self.a_m(m)?));
        }
        Ok(GrowthTable {
            family_id: self.spec.id(),
            k: self.k,
            method: Method::Brute,
            a,
        })
    }

    /// Associative product words of length `m` passing the spanning
    /// filter: the first two factors differ, and whenever an initial
    /// segment has degree zero the next factor has nonzero degree.
    /// Only defined for the cyclic matrix grading.
    pub fn assoc_spanning_words(&self, m: u32) -> Result<Vec<Vec<Letter>>, SpanError> {
        if self.spec.family() != Family::Sln {
            return Err(SpanError::WrongFamily);
        }
        self.assoc_words_where(m, true)
    }

    /// Every associative product word of length `m` (no filter).
    pub fn assoc_all_words(&self, m: u32) -> Result<Vec<Vec<Letter>>, SpanError> {
        self.assoc_words_where(m, false)
    }

    fn assoc_words_where(&self, m: u32, filtered: bool) -> Result<Vec<Vec<Letter>>, SpanError> {
        let letters = letters_of(&self.spec, self.k);
        let bound = (letters.len() as u128)
            .checked_pow(m)
            .unwrap_or(u128::MAX);
        if bound > self.word_cap as u128 {
            return Err(SpanError::WordCapExceeded {
                words: bound,
                cap: self.word_cap,
            });
        }
        let mut out = Vec::new();
        let mut word: Vec<Letter> = Vec::with_capacity(m as usize);
        fn rec(
            letters: &[Letter],
            word: &mut Vec<Letter>,
            prefix_deg: Option<Degree>,
            m: usize,
            filtered: bool,
            out: &mut Vec<Vec<Letter>>,
        ) {
            if word.len() == m {
                out.push(word.clone());
                return;
            }
            for l in letters {
                if filtered {
                    if word.len() == 1 && word[0] == *l {
                        continue;
                    }
                    if prefix_deg.is_some_and(|d| d.is_zero()) && l.degree.is_zero() {
                        continue;
                    }
                }
                // All letters share a grading group, so `add` cannot fail.
                let next_deg = match prefix_deg {
                    None => l.degree,
                    Some(d) => d.add(&l.degree).expect("single grading group"),
                };
                word.push(*l);
                rec(letters, word, Some(next_deg), m, filtered, out);
                word.pop();
            }
        }
        if m >= 1 {
            rec(&letters, &mut word, None, m as usize, filtered, &mut out);
        }
        Ok(out)
    }

    /// Dimensions of the span of the given associative words, grouped
    /// and summed by multidegree.
    fn assoc_dims(
        &self,
        words: Vec<Vec<Letter>>,
        kind: &str,
    ) -> Result<Vec<(MultiDegree, u64)>, SpanError> {
        let mut groups: BTreeMap<MultiDegree, Vec<Vec<Letter>>> = BTreeMap::new();
        for w in words {
            let md = MultiDegree::new(w.iter().map(|l| (*l, 1)));
            groups.entry(md).or_default().push(w);
        }
        let groups: Vec<(MultiDegree, Vec<Vec<Letter>>)> = groups.into_iter().collect();
        let mut out: Vec<(MultiDegree, u64)> = groups
            .into_par_iter()
            .map(|(md, ws)| {
                let key = self.cache_key(kind, &md);
                if let Some(hit) = self.cache.get(&key) {
                    return Ok((md, hit));
                }
                let dim =
                    self.rank_of_evaluations(&md, ws.iter().map(|w| Eval::Product(w)))?;
                self.cache.put(key, dim);
                Ok((md, dim))
            })
            .collect::<Result<_, SpanError>>()?;
        out.sort();
        Ok(out)
    }

    /// Per-multidegree span dimensions of the filtered associative words.
    pub fn assoc_spanning_dims(&self, m: u32) -> Result<Vec<(MultiDegree, u64)>, SpanError> {
        let words = self.assoc_spanning_words(m)?;
        self.assoc_dims(words, "assoc-span")
    }

    /// Total span dimension of the filtered associative words of
    /// length `m`.
    pub fn assoc_spanning_dim(&self, m: u32) -> Result<u64, SpanError> {
        Ok(self
            .assoc_spanning_dims(m)?
            .into_iter()
            .map(|(_, d)| d)
            .sum())
    }

    /// Per-multidegree dimensions of the span of all products of
    /// length `m` — the full associative component.
    pub fn assoc_all_dims(&self, m: u32) -> Result<Vec<(MultiDegree, u64)>, SpanError> {
        let words = self.assoc_all_words(m)?;
        self.assoc_dims(words, "assoc-all")
    }

    /// Total dimension of the span of all products of length `m`.
    pub fn assoc_all_dim(&self, m: u32) -> Result<u64, SpanError> {
        Ok(self
            .assoc_all_dims(m)?
            .into_iter()
            .map(|(_, d)| d)
            .sum())
    }
}

/// A word to evaluate: a left-normed bracket or a plain product.
enum Eval<'a> {
    Bracketed(&'a LieWord),
    Product(&'a [Letter]),
}

/// All monomials of the given total degree in the given variables, in a
/// deterministic order.
fn monomials_of_degree(vars: &[VarId], d: u32) -> Vec<Monomial> {
    if vars.is_empty() {
        return if d == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut acc: Vec<(VarId, u32)> = Vec::with_capacity(vars.len());
    fn rec(vars: &[VarId], d: u32, acc: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
        if vars.len() == 1 {
            acc.push((vars[0], d));
            out.push(Monomial::from_pairs(acc.iter().copied()));
            acc.pop();
            return;
        }
        for e in 0..=d {
            acc.push((vars[0], e));
            rec(&vars[1..], d - e, acc, out);
            acc.pop();
        }
    }
    rec(vars, d, &mut acc, &mut out);
    out
}
