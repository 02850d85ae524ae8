//! Command implementations behind the `ringcodes` binary.

pub mod expr;
pub mod sweep;
pub mod tables;

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use ringcodes::analysis::{self, prime_power_exponent};
use ringcodes::code::CyclicCode;
use ringcodes::gfpoly::PrimeField;
use ringcodes::oracle::{self, EnumBudget, Metric};
use ringcodes::rpoly::RPoly;
use ringcodes::{Error, Result};

pub use expr::{parse_bindings, parse_generator, split_generators, Expr};

pub const MAX_P: u32 = 13;

/// A command outcome: machine-readable payload plus a text rendering.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Some quantity hit the enumeration budget and is only a bound.
    pub budget_exceeded: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            budget_exceeded: false,
        }
    }
}

/// Code parameters shared by every command.
#[derive(Debug, Clone)]
pub struct Input {
    pub field: PrimeField,
    pub n: usize,
    pub generators: Vec<String>,
    pub bindings: BTreeMap<String, u64>,
    pub budget: EnumBudget,
}

impl Input {
    pub fn new(p: u32, n: usize, generators: Vec<String>) -> Result<Self> {
        if p > MAX_P {
            return Err(Error::Precondition(format!("p = {p} exceeds the supported maximum {MAX_P}")));
        }
        if n == 0 {
            return Err(Error::Precondition("n must be at least 1".into()));
        }
        Ok(Self {
            field: PrimeField::new(p)?,
            n,
            generators: generators
                .iter()
                .flat_map(|g| split_generators(g).into_iter().map(str::to_string).collect::<Vec<_>>())
                .collect(),
            bindings: BTreeMap::new(),
            budget: EnumBudget::default(),
        })
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn parsed(&self) -> Result<Vec<Expr>> {
        self.generators.iter().map(|g| Expr::parse(g)).collect()
    }

    pub fn constants(&self) -> Result<BTreeSet<String>> {
        Ok(self.parsed()?.iter().flat_map(Expr::constants).collect())
    }

    pub fn polys_with(&self, bindings: &BTreeMap<String, u64>) -> Result<Vec<RPoly>> {
        self.parsed()?
            .iter()
            .map(|e| e.eval(self.field, self.n, bindings))
            .collect()
    }

    pub fn code_with(&self, bindings: &BTreeMap<String, u64>) -> Result<(Vec<RPoly>, CyclicCode)> {
        let polys = self.polys_with(bindings)?;
        let code = CyclicCode::span_closure(self.field, self.n, &polys)?;
        Ok((polys, code))
    }

    pub fn code(&self) -> Result<(Vec<RPoly>, CyclicCode)> {
        self.code_with(&self.bindings)
    }
}

fn nonzero(code: &CyclicCode) -> Result<()> {
    if code.is_zero() {
        return Err(Error::Precondition("the generators span the zero code".into()));
    }
    Ok(())
}

pub fn canon(input: &Input) -> Result<Report> {
    let (polys, code) = input.code()?;
    let cg = code.canonical_generators();
    let desc = cg.descriptor(&polys);
    let mut text = format!("p = {}, n = {}, dim = {}\n", input.p(), input.n, code.dim());
    for i in 1..=8 {
        text.push_str(&format!("f{i} = {}  (t{i} = {})\n", cg.f(i), cg.t(i)));
    }
    for i in 1..=8 {
        for j in i + 1..=8 {
            if !cg.fij(i, j).is_zero() {
                text.push_str(&format!("f{i},{j} = {}\n", cg.fij(i, j)));
            }
        }
    }
    for i in 1..=8 {
        if !cg.is_absent(i) {
            text.push_str(&format!("A{i} = {}\n", cg.a(i)));
        }
    }
    let mut json = serde_json::to_value(&desc).expect("descriptor serializes");
    json["dimension"] = json!(code.dim());
    json["t"] = json!(cg.ts());
    json["free"] = json!(cg.is_free());
    Ok(Report::new(json, text))
}

pub fn verify(input: &Input) -> Result<Report> {
    let (_, code) = input.code()?;
    let report = code.canonical_generators().verify_conditions();
    let mut text = String::new();
    for c in &report.conditions {
        let status = serde_json::to_value(c.status).expect("status serializes");
        let extra = match (c.status, c.evaluated) {
            (ringcodes::code::ConditionStatus::UncheckedAmbiguous, Some(v)) => {
                format!(" (reading evaluates {})", if v { "true" } else { "false" })
            }
            _ => String::new(),
        };
        text.push_str(&format!(
            "({:>2}) {}{}  {}\n",
            c.number,
            status.as_str().unwrap_or("?"),
            extra,
            c.reading
        ));
        for f in &c.failures {
            text.push_str(&format!("       violated: {f}\n"));
        }
    }
    text.push_str(&format!("checked conditions all pass: {}\n", report.all_checked_pass()));
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["all_checked_pass"] = json!(report.all_checked_pass());
    Ok(Report::new(json, text))
}

pub fn rank(input: &Input) -> Result<Report> {
    let (_, code) = input.code()?;
    let cg = code.canonical_generators();
    let (r, b) = analysis::rank_and_spanning_set(&cg);
    let mut text = format!("rank {}\ncounts {:?}\nt {:?}\nt' {:?}\n", r.rank, r.counts, r.t, r.tprime);
    for x in &b {
        text.push_str(&format!("  {x}\n"));
    }
    let mut json = serde_json::to_value(&r).expect("rank serializes");
    json["spanning_set"] = json!(b.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(Report::new(json, text))
}

pub fn distance(input: &Input) -> Result<Report> {
    let (_, code) = input.code()?;
    nonzero(&code)?;
    let cg = code.canonical_generators();
    let mut json = json!({ "t8": cg.t(8) });
    let mut text = String::new();
    let mut report_budget = false;
    if prime_power_exponent(input.n, input.p()).is_some() {
        let th = analysis::distance_prime_power(&cg)?;
        text.push_str(&format!("theorem: d = {}\n", th.distance));
        json["theorem"] = serde_json::to_value(&th).expect("serializes");
    }
    match analysis::hamming_distance(&code, input.budget) {
        Ok(h) => {
            text.push_str(&format!("oracle (min weight of C8): d = {}\n", h.distance));
            json["oracle"] = serde_json::to_value(&h).expect("serializes");
        }
        Err(Error::BudgetExceeded { upper_bound, .. }) => {
            report_budget = true;
            text.push_str(&format!("oracle: budget exceeded, upper bound {upper_bound:?}\n"));
            json["oracle"] = json!({ "distance": upper_bound, "exact": false });
        }
        Err(e) => return Err(e),
    }
    let mut r = Report::new(json, text);
    r.budget_exceeded = report_budget;
    Ok(r)
}

pub fn gray(input: &Input) -> Result<Report> {
    let (_, code) = input.code()?;
    nonzero(&code)?;
    let g = analysis::gray_params(&code, input.budget)?;
    let mut r = Report::new(
        serde_json::to_value(&g).expect("serializes"),
        format!("{g}\n"),
    );
    r.budget_exceeded = !g.exact;
    Ok(r)
}

/// Brute-force figures computed without any closed form.
pub fn oracle_report(input: &Input) -> Result<Report> {
    let (polys, code) = input.code()?;
    nonzero(&code)?;
    let hamming = oracle::min_weight(&code, Metric::Hamming, input.budget)?;
    let hamming_value = if hamming.exact {
        json!({ "distance": hamming.weight, "exact": true, "method": "enumeration" })
    } else {
        let d = oracle::min_hamming_by_support(&code)?;
        json!({ "distance": d, "exact": true, "method": "support-subsets" })
    };
    let lee = oracle::min_weight(&code, Metric::Lee, input.budget)?;
    let module_rank = oracle::module_rank(&code);
    let json = json!({
        "dimension": code.dim(),
        "codewords": format!("{}^{}", input.p(), code.dim()),
        "hamming": hamming_value,
        "lee": lee,
        "module_rank": module_rank,
        "free": oracle::is_free(&code),
        "generators_span": oracle::ideal_span_equals(&polys, &code),
    });
    let text = format!(
        "dim {}\nmin Hamming weight {} ({})\nmin Lee weight {}{}\nmodule rank {}\nfree {}\n",
        code.dim(),
        hamming_value["distance"],
        hamming_value["method"].as_str().unwrap_or(""),
        lee.weight,
        if lee.exact { "" } else { " (sampled upper bound)" },
        module_rank,
        oracle::is_free(&code),
    );
    let mut r = Report::new(json, text);
    r.budget_exceeded = !lee.exact;
    Ok(r)
}
