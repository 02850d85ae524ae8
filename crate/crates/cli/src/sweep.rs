//! Evaluating generators over many bindings of their free constants.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ringcodes::analysis;
use ringcodes::Result;

use crate::Input;

/// Above this many bindings the sweep samples instead of enumerating.
pub const SWEEP_CAP: u64 = 4096;
pub const SWEEP_SEED: u64 = 0xb1d5;

#[derive(Debug, Clone, Serialize)]
pub struct Bindings {
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip)]
    pub list: Vec<BTreeMap<String, u64>>,
}

/// Every binding in `F_p^k` when there are at most [`SWEEP_CAP`], otherwise
/// that many seeded samples.
pub fn bindings(constants: &BTreeSet<String>, p: u32) -> Bindings {
    let names: Vec<&String> = constants.iter().collect();
    let k = names.len() as u32;
    let total = (p as u64).checked_pow(k).filter(|&t| t <= SWEEP_CAP);
    let to_map = |digits: &[u64]| -> BTreeMap<String, u64> {
        names.iter().map(|s| (*s).clone()).zip(digits.iter().copied()).collect()
    };
    match total {
        Some(t) => {
            let list = (0..t)
                .map(|mut idx| {
                    let digits: Vec<u64> = (0..k)
                        .map(|_| {
                            let d = idx % p as u64;
                            idx /= p as u64;
                            d
                        })
                        .collect();
                    to_map(&digits)
                })
                .collect();
            Bindings {
                exhaustive: true,
                seed: None,
                list,
            }
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED);
            let list = (0..SWEEP_CAP)
                .map(|_| {
                    let digits: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p as u64)).collect();
                    to_map(&digits)
                })
                .collect();
            Bindings {
                exhaustive: false,
                seed: Some(SWEEP_SEED),
                list,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RankDistance {
    pub rank: usize,
    pub d: usize,
}

/// Rank from the closed form and `d_H` from the minimum weight of `C_8`.
pub fn rank_distance(input: &Input, b: &BTreeMap<String, u64>) -> Result<RankDistance> {
    let (_, code) = input.code_with(b)?;
    let cg = code.canonical_generators();
    let (r, _) = analysis::rank_and_spanning_set(&cg);
    let d = analysis::hamming_distance(&code, input.budget)?.distance;
    Ok(RankDistance { rank: r.rank, d })
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome<T> {
    pub value: T,
    pub count: usize,
    /// First binding producing this value.
    pub example: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult<T> {
    pub bindings: usize,
    #[serde(flatten)]
    pub how: Bindings,
    pub outcomes: Vec<Outcome<T>>,
    /// Bindings for which evaluation failed, with the error text.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<(BTreeMap<String, u64>, String)>,
}

impl<T: PartialEq> SweepResult<T> {
    pub fn values(&self) -> Vec<&T> {
        self.outcomes.iter().map(|o| &o.value).collect()
    }
}

/// Runs `f` on every binding of the input's free constants, keeping the
/// user's explicit `--set` values fixed.
pub fn sweep<T, F>(input: &Input, f: F) -> Result<SweepResult<T>>
where
    T: Ord + Clone,
    F: Fn(&BTreeMap<String, u64>) -> Result<T>,
{
    let free: BTreeSet<String> = input
        .constants()?
        .into_iter()
        .filter(|c| !input.bindings.contains_key(c))
        .collect();
    let how = bindings(&free, input.p());
    let mut outcomes: BTreeMap<T, Outcome<T>> = BTreeMap::new();
    let mut errors = Vec::new();
    for b in &how.list {
        let mut full = input.bindings.clone();
        full.extend(b.iter().map(|(k, v)| (k.clone(), *v)));
        match f(&full) {
            Ok(v) => {
                outcomes
                    .entry(v.clone())
                    .and_modify(|o| o.count += 1)
                    .or_insert(Outcome {
                        value: v,
                        count: 1,
                        example: full.clone(),
                    });
            }
            Err(e) => errors.push((full, e.to_string())),
        }
    }
    Ok(SweepResult {
        bindings: how.list.len(),
        how,
        outcomes: outcomes.into_values().collect(),
        errors,
    })
}

/// Which per-binding quantity a `--sweep` run collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    Rank,
    Distance,
    Gray,
}

/// `--sweep` for the rank, distance and gray commands.
pub fn sweep_report(input: &Input, kind: SweepKind) -> Result<crate::Report> {
    let render = |json: serde_json::Value, outcomes: Vec<String>, bindings: usize, errors: usize| {
        let mut text = format!("{bindings} bindings\n");
        for o in outcomes {
            text.push_str(&format!("  {o}\n"));
        }
        if errors > 0 {
            text.push_str(&format!("  {errors} bindings failed\n"));
        }
        crate::Report {
            json,
            text,
            budget_exceeded: false,
        }
    };
    let mut r = match kind {
        SweepKind::Rank => {
            let s = sweep(input, |b| {
                let (_, code) = input.code_with(b)?;
                Ok(analysis::rank_and_spanning_set(&code.canonical_generators()).0.rank)
            })?;
            let lines = s
                .outcomes
                .iter()
                .map(|o| format!("rank {} x{} e.g. {:?}", o.value, o.count, o.example))
                .collect();
            render(serde_json::to_value(&s).expect("serializes"), lines, s.bindings, s.errors.len())
        }
        SweepKind::Distance => {
            let s = sweep(input, |b| {
                let (_, code) = input.code_with(b)?;
                Ok(analysis::hamming_distance(&code, input.budget)?.distance)
            })?;
            let lines = s
                .outcomes
                .iter()
                .map(|o| format!("d {} x{} e.g. {:?}", o.value, o.count, o.example))
                .collect();
            render(serde_json::to_value(&s).expect("serializes"), lines, s.bindings, s.errors.len())
        }
        SweepKind::Gray => {
            let s = sweep(input, |b| {
                let (_, code) = input.code_with(b)?;
                let g = analysis::gray_params(&code, input.budget)?;
                Ok((g.length, g.dimension, g.distance, g.exact))
            })?;
            let lines = s
                .outcomes
                .iter()
                .map(|o| {
                    let (l, k, d, exact) = o.value;
                    let bound = if exact { "" } else { " (upper bound)" };
                    format!("[{l},{k},{d}]{bound} x{} e.g. {:?}", o.count, o.example)
                })
                .collect();
            let inexact = s.outcomes.iter().any(|o| !o.value.3);
            let mut r = render(serde_json::to_value(&s).expect("serializes"), lines, s.bindings, s.errors.len());
            r.budget_exceeded = inexact;
            r
        }
    };
    if r.json.get("errors").is_some_and(|e| e.to_string().contains("budget")) {
        r.budget_exceeded = true;
    }
    Ok(r)
}
