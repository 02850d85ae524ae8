//! The unique triangular generating family `A_1, …, A_8`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::CyclicCode;
use crate::gfpoly::{FpPoly, PrimeField};
use crate::ring::Monomial;
use crate::rpoly::RPoly;

/// `A_i = μ_i f_i + Σ_{j>i} μ_j f_{i,j}` with `deg f_{i,j} < deg f_j`.
///
/// Index arguments are 1-based to match the usual `f_{i,j}` notation.
/// A zero tower ideal is recorded as `f_i = xⁿ−1`, in which case `A_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGenerators {
    field: PrimeField,
    n: usize,
    f: [FpPoly; 8],
    tails: [[FpPoly; 8]; 8],
    a: [RPoly; 8],
}

impl CanonicalGenerators {
    pub(super) fn compute(code: &CyclicCode) -> Self {
        let field = code.field();
        let n = code.n();
        let f: [FpPoly; 8] = std::array::from_fn(|i| code.tower_ideal(i + 1));
        let mut out = Self {
            field,
            n,
            f,
            tails: std::array::from_fn(|_| std::array::from_fn(|_| FpPoly::zero(field))),
            a: std::array::from_fn(|_| RPoly::zero(field, n)),
        };
        for i in (1..=8).rev() {
            if out.is_absent(i) {
                continue;
            }
            let lift = initial_lift(code, i, &out.f[i - 1]);
            let reduced = out.reduce_lift(i, lift);
            for j in i + 1..=8 {
                out.tails[i - 1][j - 1] = reduced.component(mu(j)).clone();
            }
            out.a[i - 1] = reduced;
        }
        out
    }

    /// Runs the division cascade on any codeword `μ_i f_i + (higher terms)`,
    /// using the already reduced `A_j` for `j > i`.
    pub fn reduce_lift(&self, i: usize, mut lift: RPoly) -> RPoly {
        for j in i + 1..=8 {
            if self.is_absent(j) {
                continue;
            }
            let tail = lift.component(mu(j)).clone();
            let (q, _) = tail.divmod(&self.f[j - 1]).expect("f_j is nonzero");
            if !q.is_zero() {
                lift = lift.sub(&self.a[j - 1].mul_poly(&q));
            }
        }
        lift
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_i`, 1-based.
    pub fn f(&self, i: usize) -> &FpPoly {
        &self.f[i - 1]
    }

    pub fn fs(&self) -> &[FpPoly; 8] {
        &self.f
    }

    /// `f_{i,j}` for `1 ≤ i < j ≤ 8`.
    pub fn fij(&self, i: usize, j: usize) -> &FpPoly {
        assert!(1 <= i && i < j && j <= 8, "f_{{i,j}} needs 1 <= i < j <= 8");
        &self.tails[i - 1][j - 1]
    }

    /// `A_i`; zero when `C_i` is the zero ideal.
    pub fn a(&self, i: usize) -> &RPoly {
        &self.a[i - 1]
    }

    pub fn generators(&self) -> Vec<RPoly> {
        self.a.iter().filter(|a| !a.is_zero()).cloned().collect()
    }

    /// `t_i = deg f_i`, equal to `n` for a zero tower ideal.
    pub fn t(&self, i: usize) -> usize {
        self.f[i - 1].degree().finite().expect("f_i is nonzero")
    }

    pub fn ts(&self) -> [usize; 8] {
        std::array::from_fn(|i| self.t(i + 1))
    }

    pub fn is_absent(&self, i: usize) -> bool {
        self.t(i) == self.n
    }

    /// `(xⁿ−1)/f_i`.
    pub fn h(&self, i: usize) -> FpPoly {
        FpPoly::x_n_minus_one(self.field, self.n)
            .exact_div(&self.f[i - 1])
            .expect("f_i divides x^n - 1")
    }

    /// Every tail has degree below its pivot polynomial, or vanishes.
    pub fn tails_are_reduced(&self) -> bool {
        (1..=8).all(|i| {
            (i + 1..=8).all(|j| {
                let t = self.fij(i, j);
                t.is_zero() || t.degree() < self.f(j).degree()
            })
        })
    }

    pub fn is_free(&self) -> bool {
        self.f[0] == self.f[7]
    }

    /// `A_1` when the code is free.
    pub fn free_generator(&self) -> Option<RPoly> {
        self.is_free().then(|| self.a[0].clone())
    }

    pub fn to_code(&self) -> CyclicCode {
        CyclicCode::span_closure(self.field, self.n, &self.generators())
            .expect("generators share the code parameters")
    }

    pub fn descriptor(&self, generators: &[RPoly]) -> CodeDescriptor {
        let mut fij = BTreeMap::new();
        for i in 1..=8 {
            for j in i + 1..=8 {
                fij.insert(format!("{i},{j}"), self.fij(i, j).clone());
            }
        }
        CodeDescriptor {
            p: self.field.p(),
            n: self.n,
            generators: generators.to_vec(),
            canonical: CanonicalJson {
                f: self.f.to_vec(),
                fij,
            },
        }
    }
}

pub(crate) fn mu(i: usize) -> Monomial {
    Monomial::from_index(i - 1)
}

/// A codeword with zero blocks before `μ_i` and block `μ_i` equal to `f_i`.
///
/// Rows pivoting in block `μ_i` restrict to an echelon basis of `C_i`, so the
/// coefficients of `f_i` at those pivot columns give the combination.
fn initial_lift(code: &CyclicCode, i: usize, fi: &FpPoly) -> RPoly {
    let n = code.n();
    let field = code.field();
    let b = i - 1;
    let mut acc = vec![0u32; 8 * n];
    for (row, &piv) in code.basis().rows().iter().zip(code.basis().pivots()) {
        if piv / n != b {
            continue;
        }
        let c = fi.coeff(piv - b * n);
        if c == 0 {
            continue;
        }
        for (a, &r) in acc.iter_mut().zip(row) {
            *a = field.add(*a, field.mul(c, r));
        }
    }
    let lift = RPoly::from_vector(field, n, &acc).expect("width 8n");
    assert_eq!(
        lift.component(mu(i)),
        fi,
        "lift of f_{i} not found; closure is inconsistent"
    );
    lift
}

#[derive(Debug, Clone, Serialize)]
pub struct CanonicalJson {
    pub f: Vec<FpPoly>,
    pub fij: BTreeMap<String, FpPoly>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeDescriptor {
    pub p: u32,
    pub n: usize,
    pub generators: Vec<RPoly>,
    pub canonical: CanonicalJson,
}
