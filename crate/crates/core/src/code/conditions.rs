//! Divisibility conditions satisfied by canonical generators.
//!
//! Conditions 1–4, 11 and 15–19 are printed unambiguously and get a
//! pass/fail verdict. The rest are evaluated under one stated reading each
//! and reported as informational only.

use serde::Serialize;

use super::CanonicalGenerators;
use crate::gfpoly::FpPoly;
use crate::rpoly::RPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionStatus {
    Pass,
    Fail,
    UncheckedAmbiguous,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionResult {
    pub number: u32,
    pub status: ConditionStatus,
    /// Outcome of the reading we evaluate for informational conditions;
    /// `None` when nothing could be evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluated: Option<bool>,
    pub reading: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<ConditionResult>,
}

impl ConditionReport {
    pub const CHECKED: [u32; 10] = [1, 2, 3, 4, 11, 15, 16, 17, 18, 19];

    pub fn all_checked_pass(&self) -> bool {
        self.conditions
            .iter()
            .filter(|c| Self::CHECKED.contains(&c.number))
            .all(|c| c.status == ConditionStatus::Pass)
    }

    pub fn get(&self, number: u32) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.number == number)
    }
}

/// Collects the individual divisibility instances behind one condition.
struct Check<'a> {
    cg: &'a CanonicalGenerators,
    failures: Vec<String>,
    undefined: bool,
}

impl<'a> Check<'a> {
    fn new(cg: &'a CanonicalGenerators) -> Self {
        Self {
            cg,
            failures: Vec::new(),
            undefined: false,
        }
    }

    /// `d | g` in `F_p[x]/(xⁿ−1)`; since `d | xⁿ−1` this is ordinary
    /// divisibility of the reduced `g`, and `xⁿ−1 | g` forces `g ≡ 0`.
    fn divides(&mut self, d: &FpPoly, g: &FpPoly, label: impl Into<String>) {
        if !d.divides(&g.reduce_cyclic(self.cg.n())) {
            self.failures.push(label.into());
        }
    }

    /// Exact quotient `a / b`; a failed division is itself a violation.
    fn quot(&mut self, a: &FpPoly, b: &FpPoly, label: &str) -> FpPoly {
        match a.exact_div(b) {
            Some(q) => q,
            None => {
                self.failures.push(format!("{label} is not exact"));
                self.undefined = true;
                FpPoly::zero(a.field())
            }
        }
    }

    fn checked(self, number: u32, reading: &str) -> ConditionResult {
        ConditionResult {
            number,
            status: if self.failures.is_empty() {
                ConditionStatus::Pass
            } else {
                ConditionStatus::Fail
            },
            evaluated: Some(self.failures.is_empty()),
            reading: reading.into(),
            failures: self.failures,
        }
    }

    fn informational(self, number: u32, reading: &str) -> ConditionResult {
        ConditionResult {
            number,
            status: ConditionStatus::UncheckedAmbiguous,
            evaluated: Some(self.failures.is_empty()),
            reading: reading.into(),
            failures: self.failures,
        }
    }
}

impl CanonicalGenerators {
    pub fn verify_conditions(&self) -> ConditionReport {
        let f = |i: usize| self.f(i).clone();
        let fij = |i: usize, j: usize| self.fij(i, j).clone();
        let xn1 = FpPoly::x_n_minus_one(self.field(), self.n());
        let mut out = Vec::new();

        let mut c = Check::new(self);
        for i in 1..=7 {
            c.divides(&f(8), &f(i), format!("f8 | f{i}"));
        }
        for j in 2..=7 {
            c.divides(&f(j), &f(1), format!("f{j} | f1"));
        }
        if !f(1).divides(&xn1) {
            c.failures.push("f1 | x^n-1".into());
        }
        out.push(c.checked(1, "f8 | fi (i<8); fj | f1 (2<=j<=7); f1 | x^n-1"));

        let mut c = Check::new(self);
        for (d, g) in [(4, 2), (4, 3), (6, 5), (6, 2), (7, 5), (7, 3)] {
            c.divides(&f(d), &f(g), format!("f{d} | f{g}"));
        }
        out.push(c.checked(2, "f4|f2, f4|f3, f6|f5, f6|f2, f7|f5, f7|f3"));

        let mut c = Check::new(self);
        for i in 1..=7 {
            let g = &self.h(i) * &fij(i, i + 1);
            c.divides(&f(i + 1), &g, format!("f{} | h{i} f{i},{}", i + 1, i + 1));
        }
        out.push(c.checked(3, "f_{i+1} | (x^n-1)/f_i * f_{i,i+1}"));

        let mut c = Check::new(self);
        for i in 1..=7 {
            let mut h = FpPoly::one(self.field());
            for j in 1..=8 - i {
                h = h.mul_cyclic(&self.h(i + j - 1), self.n());
                let g = &h * &fij(i, i + j);
                c.divides(&f(i + j), &g, format!("f{} | h{i}..h{} f{i},{}", i + j, i + j - 1, i + j));
            }
        }
        out.push(c.checked(4, "f_{i+j} | h_i...h_{i+j-1} f_{i,i+j}"));

        for number in 5..=10 {
            out.push(self.cascade_condition(number));
        }

        let mut c = Check::new(self);
        for i in [4, 6, 8] {
            c.divides(&f(i), &fij(i - 2, i - 1), format!("f{i} | f{},{}", i - 2, i - 1));
        }
        out.push(c.checked(11, "f_i | f_{i-2,i-1}, i in {4,6,8}"));

        let mut c = Check::new(self);
        for i in [4, 6, 8] {
            let q = c.quot(&f(1), &f(i - 1), &format!("f1/f{}", i - 1));
            let g = &fij(1, 2) - &(&q * &fij(i - 1, i));
            c.divides(&f(i), &g, format!("f{i} | f1,2 - (f1/f{})f{},{i}", i - 1, i - 1));
        }
        out.push(c.informational(12, "as printed: f_i | f_{1,2} - (f_1/f_{i-1}) f_{i-1,i}, i in {4,6,8}"));

        let mut c = Check::new(self);
        for i in [7, 8] {
            let q = c.quot(&f(i - 5), &f(i - 1), &format!("f{}/f{}", i - 5, i - 1));
            let g = &fij(i - 5, i - 4) - &(&q * &fij(i - 1, i));
            c.divides(&f(i), &g, format!("condition 13 at i={i}"));
        }
        out.push(c.informational(
            13,
            "as printed: f_i | f_{i-5,i-4} - (f_{i-5}/f_{i-1}) f_{i-1,i}, i in {7,8}",
        ));

        let mut c = Check::new(self);
        for i in [7, 8] {
            let q1 = c.quot(&f(i - 6), &f(i - 2), "f_{i-6}/f_{i-2}");
            let num = &fij(i - 6, i - 5) - &(&q1 * &fij(i - 2, i - 1));
            let q2 = c.quot(&num, &f(i - 1), "bracket/f_{i-1}");
            let g = &(&fij(i - 6, i - 4) - &(&q1 * &fij(i - 2, i))) - &(&q2 * &fij(i - 1, i));
            c.divides(&f(i), &g, format!("condition 14 at i={i}"));
        }
        out.push(c.informational(
            14,
            "printed form with the last term subtracted, as in its derivation",
        ));

        let mut c = Check::new(self);
        c.divides(&f(7), &fij(4, 5), "f7 | f4,5");
        c.divides(&f(7), &fij(3, 5), "f7 | f3,5");
        out.push(c.checked(15, "f7 | f_{4,5} and f7 | f_{3,5}"));

        let mut c = Check::new(self);
        c.divides(&f(8), &fij(2, 5), "f8 | f2,5");
        out.push(c.checked(16, "f8 | f_{2,5}"));

        for (number, (a, b)) in [(17u32, ((3, 6), (3, 5))), (18, ((4, 6), (4, 5)))] {
            let mut c = Check::new(self);
            let q = c.quot(&fij(b.0, b.1), &f(7), "quotient by f7");
            let g = &fij(a.0, a.1) - &(&q * &fij(7, 8));
            c.divides(&f(8), &g, format!("condition {number}"));
            let reading = format!(
                "f8 | f_{{{},{}}} - (f_{{{},{}}}/f7) f_{{7,8}}",
                a.0, a.1, b.0, b.1
            );
            out.push(c.checked(number, &reading));
        }

        let mut c = Check::new(self);
        let q = c.quot(&f(5), &f(7), "f5/f7");
        let g = &fij(5, 6) - &(&q * &fij(7, 8));
        c.divides(&f(8), &g, "condition 19");
        out.push(c.checked(19, "f8 | f_{5,6} - (f5/f7) f_{7,8}"));

        let mut c = Check::new(self);
        let q5 = c.quot(&f(1), &f(5), "f1/f5");
        let a_num = &fij(1, 2) - &(&q5 * &fij(5, 6));
        let a = c.quot(&a_num, &f(6), "A");
        let b_num = &(&fij(1, 3) - &(&q5 * &fij(5, 7))) - &(&a * &fij(6, 7));
        let b = c.quot(&b_num, &f(7), "B");
        let g = &(&(&fij(1, 4) - &(&q5 * &fij(5, 8))) - &(&a * &fij(6, 8))) - &(&b * &fij(7, 8));
        c.divides(&f(8), &g, "condition 20");
        out.push(c.informational(
            20,
            "printed form with the denominator of B read as f7 (it eliminates the vw block)",
        ));

        out.push(ConditionResult {
            number: 21,
            status: ConditionStatus::UncheckedAmbiguous,
            evaluated: None,
            reading: "not printed; the condition list ends at 20".into(),
            failures: Vec::new(),
        });

        ConditionReport { conditions: out }
    }

    /// Reading used for conditions 5–10: start from `h_s A_s` with
    /// `s = i − k`, clear the blocks `s+1..i−1` with exact quotients by the
    /// corresponding `A_j`, and require `f_i` to divide what remains in
    /// block `i`. Condition `k + 3` covers every admissible `i`.
    fn cascade_condition(&self, number: u32) -> ConditionResult {
        let k = number as usize - 3;
        let mut c = Check::new(self);
        for i in k + 1..=8 {
            let s = i - k;
            let mut x: RPoly = self.a(s).mul_poly(&self.h(s));
            for j in s + 1..i {
                let block = x.component(super::canonical::mu(j)).clone();
                let q = c.quot(&block, self.f(j), &format!("block {j} over f{j}"));
                if !q.is_zero() {
                    x = x.sub(&self.a(j).mul_poly(&q));
                }
            }
            let last = x.component(super::canonical::mu(i)).clone();
            c.divides(self.f(i), &last, format!("f{i} | cascade from h{s} A{s}"));
        }
        c.informational(number, "elimination cascade from h_{i-k} A_{i-k}, k = number - 3")
    }
}
