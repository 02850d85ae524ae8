//! Closed-form rank, spanning sets, the length-pˡ distance formula, and
//! Gray image parameters.

use serde::Serialize;

use crate::code::{CanonicalGenerators, CyclicCode};
use crate::error::{Error, Result};
use crate::gfpoly::{x_minus_one_pow, FpPoly};
use crate::oracle::{self, EnumBudget, Metric, WeightLayout};
use crate::rpoly::RPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    /// Shifts of `A_1, …, A_8` in the spanning set.
    pub counts: [usize; 8],
    pub t: [usize; 8],
    /// `t4′, t6′, t7′, t8′`.
    pub tprime: [usize; 4],
}

/// Rank formula and the spanning set `{x^k A_i : k < count_i}`.
pub fn rank_and_spanning_set(cg: &CanonicalGenerators) -> (RankReport, Vec<RPoly>) {
    let n = cg.n() as i64;
    let t = cg.ts();
    let ti = |i: usize| t[i - 1] as i64;
    let t4p = ti(2).min(ti(3));
    let t6p = ti(2).min(ti(5));
    let t7p = ti(3).min(ti(5));
    let t8p = ti(4).min(ti(6)).min(ti(7));
    let counts = [
        n - ti(1),
        ti(1) - ti(2),
        ti(1) - ti(3),
        t4p - ti(4),
        ti(1) - ti(5),
        t6p - ti(6),
        t7p - ti(7),
        t8p - ti(8),
    ];
    assert!(
        counts.iter().all(|&c| c >= 0),
        "negative spanning multiplicity {counts:?}; divisibility chain is broken"
    );
    let formula = n + 2 * ti(1) + t4p + t6p + t7p + t8p - (2..=8).map(ti).sum::<i64>();
    let counts = counts.map(|c| c as usize);
    debug_assert_eq!(formula as usize, counts.iter().sum::<usize>());
    let mut b = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        for k in 0..c {
            b.push(cg.a(i + 1).shift(k));
        }
    }
    (
        RankReport {
            rank: formula as usize,
            counts,
            t,
            tprime: [t4p, t6p, t7p, t8p].map(|v| v as usize),
        },
        b,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "q", rename_all = "kebab-case")]
pub enum ExpansionKind {
    ZeroExpansion(usize),
    NonzeroExpansion(usize),
    FullExpansion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PadicClass {
    /// `b_{l−1}, …, b_0`, most significant first.
    pub digits: Vec<u32>,
    pub kind: ExpansionKind,
}

impl PadicClass {
    pub fn value(&self, p: u32) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * p as u64 + d as u64)
    }
}

/// Base-p digits of `t8` and the zero / nonzero / full expansion class.
pub fn padic_classify(t8: u64, p: u32, l: u32) -> Result<PadicClass> {
    let pl = (p as u64)
        .checked_pow(l)
        .ok_or_else(|| Error::Precondition("p^l overflows".into()))?;
    if t8 == 0 || t8 >= pl {
        return Err(Error::Precondition(format!("t8 = {t8} is outside 0 < t8 < {pl}")));
    }
    let mut digits = vec![0u32; l as usize];
    let mut rest = t8;
    for d in digits.iter_mut().rev() {
        *d = (rest % p as u64) as u32;
        rest /= p as u64;
    }
    let q = digits.iter().take_while(|&&d| d != 0).count();
    let kind = if q == l as usize {
        ExpansionKind::FullExpansion
    } else if digits[q..].iter().all(|&d| d == 0) {
        ExpansionKind::ZeroExpansion(q)
    } else {
        ExpansionKind::NonzeroExpansion(q)
    };
    Ok(PadicClass { digits, kind })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremDistance {
    pub distance: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<PadicClass>,
    /// `t8 = 0`: the unit ideal, whose distance is 1 by convention.
    pub unit_convention: bool,
}

/// The length-pˡ distance formula evaluated on `t8`.
pub fn distance_formula(t8: usize, p: u32, l: u32) -> Result<TheoremDistance> {
    if t8 == 0 {
        return Ok(TheoremDistance {
            distance: 1,
            class: None,
            unit_convention: true,
        });
    }
    let threshold = (p as usize).pow(l - 1);
    if t8 <= threshold {
        return Ok(TheoremDistance {
            distance: 2,
            class: None,
            unit_convention: false,
        });
    }
    let class = padic_classify(t8 as u64, p, l)?;
    let q = match class.kind {
        ExpansionKind::FullExpansion => l as usize,
        ExpansionKind::ZeroExpansion(q) | ExpansionKind::NonzeroExpansion(q) => q,
    };
    let prod: usize = class.digits[..q].iter().map(|&b| b as usize + 1).product();
    let distance = match class.kind {
        ExpansionKind::NonzeroExpansion(_) => 2 * prod,
        _ => prod,
    };
    Ok(TheoremDistance {
        distance,
        class: Some(class),
        unit_convention: false,
    })
}

/// `l` with `n = p^l`, if any.
pub fn prime_power_exponent(n: usize, p: u32) -> Option<u32> {
    let mut m = n;
    let mut l = 0;
    while m > 1 && m % p as usize == 0 {
        m /= p as usize;
        l += 1;
    }
    (m == 1 && l > 0).then_some(l)
}

/// Distance of a length-pˡ code from its `t8` via the closed form.
pub fn distance_prime_power(cg: &CanonicalGenerators) -> Result<TheoremDistance> {
    let p = cg.field().p();
    let n = cg.n();
    let l = prime_power_exponent(n, p).ok_or_else(|| {
        Error::Precondition(format!("n = {n} is not a positive power of p = {p}"))
    })?;
    let t8 = cg.t(8);
    if t8 == n {
        return Err(Error::Precondition("the zero code has no minimum distance".into()));
    }
    if cg.f(8) != &x_minus_one_pow(cg.field(), t8) {
        return Err(Error::Contract(format!(
            "f8 = {} is not a power of x - 1",
            cg.f(8)
        )));
    }
    distance_formula(t8, p, l)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HammingDistance {
    pub distance: usize,
    pub exact: bool,
}

/// Minimum Hamming weight of `⟨f⟩ ⊆ F_p[x]/(xⁿ−1)` by enumeration.
pub fn cyclic_min_weight(f: &FpPoly, n: usize, budget: EnumBudget) -> Result<HammingDistance> {
    let field = f.field();
    let d = f.degree().finite().unwrap_or(n);
    if d >= n {
        return Err(Error::Precondition("the zero code has no minimum distance".into()));
    }
    let k = n - d;
    if budget.admits(field.p(), k).is_none() {
        let layout = WeightLayout::new(field, 1, &shift_rows(f, n, k));
        let w = layout.min_weight(budget, oracle::DEFAULT_SEED);
        return Err(Error::BudgetExceeded {
            p: field.p(),
            dim: k,
            budget: budget.max_codewords,
            upper_bound: Some(w.weight),
        });
    }
    let layout = WeightLayout::new(field, 1, &shift_rows(f, n, k));
    Ok(HammingDistance {
        distance: layout.min_weight(budget, oracle::DEFAULT_SEED).weight,
        exact: true,
    })
}

fn shift_rows(f: &FpPoly, n: usize, k: usize) -> Vec<Vec<u32>> {
    (0..k).map(|s| f.shift(s).reduce_cyclic(n).to_dense(n)).collect()
}

/// `d_H(C) = d_H(C_8)`, the latter found by enumerating `⟨f8⟩`.
pub fn hamming_distance(code: &CyclicCode, budget: EnumBudget) -> Result<HammingDistance> {
    if code.is_zero() {
        return Err(Error::Precondition("the zero code has no minimum distance".into()));
    }
    let f8 = code.tower_ideal(8);
    if f8.is_one() {
        return Ok(HammingDistance {
            distance: 1,
            exact: true,
        });
    }
    cyclic_min_weight(&f8, code.n(), budget)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrayParams {
    pub length: usize,
    pub dimension: usize,
    pub distance: usize,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl std::fmt::Display for GrayParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.length, self.dimension, self.distance)?;
        if !self.exact {
            f.write_str(" (upper bound)")?;
        }
        Ok(())
    }
}

/// `[8n, k, d]` of the Gray image; `d` is the minimum Lee weight.
pub fn gray_params(code: &CyclicCode, budget: EnumBudget) -> Result<GrayParams> {
    let w = oracle::min_weight(code, Metric::Lee, budget)?;
    Ok(GrayParams {
        length: 8 * code.n(),
        dimension: code.dim(),
        distance: w.weight,
        exact: w.exact,
        seed: w.seed,
    })
}
