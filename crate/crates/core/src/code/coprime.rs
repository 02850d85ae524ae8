//! The four-generator description claimed for lengths coprime to `p`.

use serde::Serialize;

use super::{CanonicalGenerators, CyclicCode};
use crate::error::{Error, Result};
use crate::gfpoly::FpPoly;
use crate::ring::Monomial;
use crate::rpoly::RPoly;

/// `⟨f1 + u f2, v f3 + uv f4, w(f5 + u f6), w(v f7 + uv f8)⟩`, with absent
/// tower ideals contributing nothing.
#[derive(Debug, Clone, Serialize)]
pub struct CoprimeForm {
    pub generators: Vec<RPoly>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoprimeReport {
    pub form: CoprimeForm,
    /// Each stated divisibility with its outcome.
    pub chains: Vec<(String, bool)>,
    /// `f_{1,j} = 0` for `5 ≤ j ≤ 8` and `f_{3,j} = 0` for `5 ≤ j ≤ 8`.
    pub vanishing: Vec<(String, bool)>,
    /// Whether the four generators span the same ideal as the code.
    pub regenerates: bool,
}

impl CoprimeReport {
    pub fn chains_hold(&self) -> bool {
        self.chains.iter().all(|(_, ok)| *ok)
    }

    pub fn vanishing_holds(&self) -> bool {
        self.vanishing.iter().all(|(_, ok)| *ok)
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

impl CanonicalGenerators {
    pub fn coprime_form(&self) -> Result<CoprimeForm> {
        let p = self.field().p() as usize;
        let n = self.n();
        if gcd_usize(n, p) != 1 {
            return Err(Error::Precondition(format!(
                "coprime form needs gcd(n, p) = 1, got n = {n}, p = {p}"
            )));
        }
        let part = |m: Monomial, i: usize| {
            if self.is_absent(i) {
                RPoly::zero(self.field(), n)
            } else {
                RPoly::from_component(m, self.f(i), n)
            }
        };
        use Monomial::*;
        let generators = [
            part(One, 1).add(&part(U, 2)),
            part(V, 3).add(&part(UV, 4)),
            part(W, 5).add(&part(UW, 6)),
            part(VW, 7).add(&part(UVW, 8)),
        ]
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
        Ok(CoprimeForm { generators })
    }

    pub fn coprime_report(&self, code: &CyclicCode) -> Result<CoprimeReport> {
        let form = self.coprime_form()?;
        let xn1 = FpPoly::x_n_minus_one(self.field(), self.n());
        let f = |i: usize| if i == 0 { &xn1 } else { self.f(i) };
        // 0 stands for x^n - 1 in the chains below
        let stated: [&[usize]; 6] = [&[4, 2, 1, 0], &[4, 3, 1], &[8, 6, 5, 0], &[8, 7, 5, 1], &[6, 2], &[7, 3]];
        let name = |i: usize| if i == 0 { "x^n-1".to_string() } else { format!("f{i}") };
        let mut chains = Vec::new();
        for chain in stated {
            for w in chain.windows(2) {
                chains.push((
                    format!("{} | {}", name(w[0]), name(w[1])),
                    f(w[0]).divides(f(w[1])),
                ));
            }
        }
        let mut vanishing = Vec::new();
        for i in [1, 3] {
            for j in 5..=8 {
                vanishing.push((format!("f{i},{j} = 0"), self.fij(i, j).is_zero()));
            }
        }
        let regenerated = CyclicCode::span_closure(self.field(), self.n(), &form.generators)?;
        Ok(CoprimeReport {
            regenerates: regenerated.same_code(code),
            form,
            chains,
            vanishing,
        })
    }
}
