//! Brute-force ground truth: codeword enumeration, minimum weights, span
//! equality and spanning-set minimality.
//!
//! Enumeration walks the modular p-ary Gray code over the echelon basis, so
//! each step adds exactly one basis vector and the weight is updated from
//! that vector's support alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{close, close_module, monomial_vector, CyclicCode};
use crate::error::{Error, Result};
use crate::gfpoly::PrimeField;
use crate::linalg::Subspace;
use crate::ring::Monomial;
use crate::rpoly::{gray_image_of_vector, RPoly};

pub const DEFAULT_BUDGET: u64 = 1 << 22;
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumBudget {
    pub max_codewords: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        Self {
            max_codewords: DEFAULT_BUDGET,
        }
    }
}

impl EnumBudget {
    pub fn new(max_codewords: u64) -> Self {
        Self { max_codewords }
    }

    /// `p^dim`, or `None` when it exceeds the cap.
    pub fn admits(&self, p: u32, dim: usize) -> Option<u64> {
        let mut total: u64 = 1;
        for _ in 0..dim {
            total = total.checked_mul(p as u64)?;
            if total > self.max_codewords {
                return None;
            }
        }
        Some(total)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinWeight {
    pub weight: usize,
    pub exact: bool,
    /// Codewords examined (all of them when exact).
    pub examined: u64,
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Every codeword of `code`, each exactly once, starting from zero.
pub fn enumerate_codewords(
    code: &CyclicCode,
    budget: EnumBudget,
) -> Result<impl Iterator<Item = RPoly> + '_> {
    let p = code.p();
    let total = budget.admits(p, code.dim()).ok_or(Error::BudgetExceeded {
        p,
        dim: code.dim(),
        budget: budget.max_codewords,
        upper_bound: None,
    })?;
    let field = code.field();
    let n = code.n();
    let rows = code.basis().rows();
    let mut cur = vec![0u32; 8 * n];
    let mut counter = Counter::new(p, rows.len());
    let mut emitted = 0u64;
    Ok(std::iter::from_fn(move || {
        if emitted == total {
            return None;
        }
        if emitted > 0 {
            let j = counter.step();
            for (c, &b) in cur.iter_mut().zip(&rows[j]) {
                *c = field.add(*c, b);
            }
        }
        emitted += 1;
        Some(RPoly::from_vector(field, n, &cur).expect("width 8n"))
    }))
}

/// Base-p counter reporting which Gray digit moves at each step.
struct Counter {
    p: u32,
    digits: Vec<u32>,
}

impl Counter {
    fn new(p: u32, len: usize) -> Self {
        Self {
            p,
            digits: vec![0; len],
        }
    }

    /// Increments; returns the number of trailing `p−1` digits before the
    /// increment, which is the Gray digit that advances by one.
    fn step(&mut self) -> usize {
        let mut j = 0;
        while self.digits[j] == self.p - 1 {
            self.digits[j] = 0;
            j += 1;
        }
        self.digits[j] += 1;
        j
    }
}

/// Basis vectors in a coordinate layout where weight is the number of
/// nonzero groups of `group` consecutive symbols.
#[derive(Debug, Clone)]
pub struct WeightLayout {
    field: PrimeField,
    width: usize,
    group: usize,
    /// Sparse rows: `(coordinate, value)`.
    rows: Vec<Vec<(usize, u32)>>,
}

impl WeightLayout {
    pub fn new(field: PrimeField, group: usize, rows: &[Vec<u32>]) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        Self {
            field,
            width,
            group,
            rows: rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (i, c))
                        .collect()
                })
                .collect(),
        }
    }

    /// Layout for `metric` over the rows of `code`'s echelon basis.
    pub fn for_code(code: &CyclicCode, metric: Metric) -> Self {
        let field = code.field();
        let n = code.n();
        let rows: Vec<Vec<u32>> = code
            .basis()
            .rows()
            .iter()
            .map(|r| match metric {
                Metric::Lee => gray_image_of_vector(field, n, r),
                Metric::Hamming => position_major(r, n),
            })
            .collect();
        Self::new(field, if metric == Metric::Lee { 1 } else { 8 }, &rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Minimum nonzero weight over the whole span, splitting the top
    /// digits across threads. Deterministic regardless of the split.
    pub fn min_weight(&self, budget: EnumBudget, seed: u64) -> MinWeight {
        let p = self.field.p();
        let dim = self.dim();
        if budget.admits(p, dim).is_none() {
            return self.sampled(budget, seed);
        }
        let top = split_digits(p, dim);
        let low = dim - top;
        let chunks = (p as u64).pow(top as u32);
        let best = (0..chunks)
            .into_par_iter()
            .map(|chunk| self.walk_chunk(chunk, top, low))
            .min()
            .unwrap_or(usize::MAX);
        MinWeight {
            weight: best,
            exact: true,
            examined: (p as u64).pow(dim as u32),
            budget: budget.max_codewords,
            seed: None,
        }
    }

    /// Walks all combinations of the `low` first basis rows on top of a
    /// fixed combination of the last `top` rows given by `chunk`'s digits.
    fn walk_chunk(&self, chunk: u64, top: usize, low: usize) -> usize {
        let f = self.field;
        let p = f.p();
        let mut cur = vec![0u32; self.width];
        let mut c = chunk;
        for t in 0..top {
            let digit = (c % p as u64) as u32;
            c /= p as u64;
            for &(i, v) in &self.rows[low + t] {
                cur[i] = f.add(cur[i], f.mul(digit, v));
            }
        }
        let groups = self.width.div_ceil(self.group.max(1));
        let mut live = vec![0u32; groups];
        let mut weight = 0usize;
        for (i, &v) in cur.iter().enumerate() {
            if v != 0 {
                let g = i / self.group;
                if live[g] == 0 {
                    weight += 1;
                }
                live[g] += 1;
            }
        }
        let mut best = if chunk == 0 { usize::MAX } else { weight };
        if low == 0 {
            return best;
        }
        let mut counter = Counter::new(p, low);
        let steps = (p as u64).pow(low as u32) - 1;
        for _ in 0..steps {
            let j = counter.step();
            for &(i, v) in &self.rows[j] {
                let old = cur[i];
                let new = f.add(old, v);
                cur[i] = new;
                let g = i / self.group;
                if old == 0 {
                    if live[g] == 0 {
                        weight += 1;
                    }
                    live[g] += 1;
                } else if new == 0 {
                    live[g] -= 1;
                    if live[g] == 0 {
                        weight -= 1;
                    }
                }
            }
            // the all-zero combination only occurs at the start of chunk 0
            if weight < best && weight > 0 {
                best = weight;
            }
        }
        best
    }

    /// Upper bound from the basis rows, their scalar multiples, and a
    /// seeded random walk of `budget` steps through the code.
    fn sampled(&self, budget: EnumBudget, seed: u64) -> MinWeight {
        let f = self.field;
        let weight_of = |v: &[u32]| -> usize {
            v.chunks(self.group)
                .filter(|g| g.iter().any(|&c| c != 0))
                .count()
        };
        let mut best = usize::MAX;
        let mut dense: Vec<Vec<u32>> = Vec::with_capacity(self.dim());
        for r in &self.rows {
            let mut v = vec![0u32; self.width];
            for &(i, c) in r {
                v[i] = c;
            }
            let w = weight_of(&v);
            if w > 0 {
                best = best.min(w);
            }
            dense.push(v);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cur = vec![0u32; self.width];
        let steps = budget.max_codewords.max(1);
        for _ in 0..steps {
            if dense.is_empty() {
                break;
            }
            let j = rng.gen_range(0..dense.len());
            let s = rng.gen_range(1..f.p());
            for (c, &b) in cur.iter_mut().zip(&dense[j]) {
                *c = f.add(*c, f.mul(s, b));
            }
            let w = weight_of(&cur);
            if w > 0 {
                best = best.min(w);
            }
        }
        MinWeight {
            weight: best,
            exact: false,
            examined: steps + dense.len() as u64,
            budget: budget.max_codewords,
            seed: Some(seed),
        }
    }
}

/// Enough leading digits to give every worker several chunks.
fn split_digits(p: u32, dim: usize) -> usize {
    let target = (rayon::current_num_threads() as u64 * 8).max(8);
    let mut top = 0;
    let mut chunks = 1u64;
    while top < dim && chunks < target && top < dim.saturating_sub(4) {
        chunks *= p as u64;
        top += 1;
    }
    top
}

/// Reorders a block-major vector so each position's eight ring
/// coordinates are adjacent.
pub fn position_major(v: &[u32], n: usize) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for m in 0..8 {
        for k in 0..n {
            out[k * 8 + m] = v[m * n + k];
        }
    }
    out
}

/// Minimum nonzero weight of `code` under `metric`; beyond the budget the
/// result is a sampled upper bound with `exact == false`.
pub fn min_weight(code: &CyclicCode, metric: Metric, budget: EnumBudget) -> Result<MinWeight> {
    min_weight_seeded(code, metric, budget, DEFAULT_SEED)
}

pub fn min_weight_seeded(
    code: &CyclicCode,
    metric: Metric,
    budget: EnumBudget,
    seed: u64,
) -> Result<MinWeight> {
    if code.is_zero() {
        return Err(Error::Precondition("the zero code has no minimum weight".into()));
    }
    Ok(WeightLayout::for_code(code, metric).min_weight(budget, seed))
}

/// Exact minimum Hamming weight over R by support subsets: the smallest
/// position set `S` such that some nonzero codeword vanishes off `S`.
/// Cost is `2ⁿ` rank computations, independent of `|C|`.
pub fn min_hamming_by_support(code: &CyclicCode) -> Result<usize> {
    if code.is_zero() {
        return Err(Error::Precondition("the zero code has no minimum weight".into()));
    }
    let n = code.n();
    if n > 24 {
        return Err(Error::Precondition(format!(
            "support search over 2^{n} subsets is out of scale"
        )));
    }
    let field = code.field();
    let dim = code.dim();
    let rows = code.basis().rows();
    let mut best = n;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        // codewords supported in S = kernel of the projection onto the
        // complement of S
        let projected = Subspace::from_vectors(
            field,
            8 * (n - size),
            rows.iter().map(|r| {
                let mut v = Vec::with_capacity(8 * (n - size));
                for m in 0..8 {
                    for k in 0..n {
                        if mask & (1 << k) == 0 {
                            v.push(r[m * n + k]);
                        }
                    }
                }
                v
            }),
        );
        if projected.dim() < dim {
            best = size;
        }
    }
    Ok(best)
}

/// Whether the ideal generated by `a` (closure under `x`, `u`, `v`, `w`)
/// equals `code`.
pub fn ideal_span_equals(a: &[RPoly], code: &CyclicCode) -> bool {
    match CyclicCode::span_closure(code.field(), code.n(), a) {
        Ok(c) => c.same_code(code),
        Err(_) => false,
    }
}

/// R-submodule generated by `a`: F_p-span closed under `u`, `v`, `w` only.
/// This is the span in which a spanning set like `{x^k A_i}` is minimal.
pub fn r_span(field: PrimeField, n: usize, a: &[RPoly]) -> Subspace {
    close_module(Subspace::new(field, 8 * n), n, a.iter().map(RPoly::to_vector))
}

/// Whether the R-submodule generated by `a` equals `code`.
pub fn r_span_equals(a: &[RPoly], code: &CyclicCode) -> bool {
    a.iter().all(|x| x.field() == code.field() && x.n() == code.n())
        && r_span(code.field(), code.n(), a).same_span(code.basis())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub spans: bool,
    pub minimal: bool,
    /// Index of the first element whose removal leaves the span unchanged.
    pub redundant: Option<usize>,
}

/// Confirms that dropping any single element shrinks the R-span.
pub fn verify_rank_minimality(b: &[RPoly], code: &CyclicCode) -> MinimalityReport {
    let spans = r_span_equals(b, code);
    let mut redundant = None;
    for i in 0..b.len() {
        let rest: Vec<RPoly> = b
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, x)| x.clone())
            .collect();
        if r_span_equals(&rest, code) {
            redundant = Some(i);
            break;
        }
    }
    MinimalityReport {
        spans,
        minimal: spans && redundant.is_none(),
        redundant,
    }
}

/// `dim_{F_p} C/mC` with `m = ⟨u, v, w⟩`: the minimal number of generators
/// of `C` as an R-module, by Nakayama's lemma.
pub fn module_rank(code: &CyclicCode) -> usize {
    let n = code.n();
    let m_c = Subspace::from_vectors(
        code.field(),
        8 * n,
        code.basis().rows().iter().flat_map(|r| {
            [Monomial::U, Monomial::V, Monomial::W].map(|m| monomial_vector(r, n, m))
        }),
    );
    code.dim() - m_c.dim()
}

/// A finite R-module is free iff `|C| = |R|^{μ(C)}`.
pub fn is_free(code: &CyclicCode) -> bool {
    code.dim() == 8 * module_rank(code)
}

/// Closure of arbitrary F_p^{8n} vectors into an ideal; exposed for tests
/// that build codes from raw vectors.
pub fn ideal_from_vectors(field: PrimeField, n: usize, vectors: Vec<Vec<u32>>) -> Subspace {
    close(Subspace::new(field, 8 * n), n, vectors)
}
