//! Cyclic codes as ideals of `R_n`, held as an F_p-subspace of `F_p^{8n}`.

mod canonical;
mod conditions;
mod coprime;

pub use canonical::{CanonicalGenerators, CodeDescriptor};
pub use conditions::{ConditionReport, ConditionResult, ConditionStatus};
pub use coprime::{CoprimeForm, CoprimeReport};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::gfpoly::{cyclic_generator, FpPoly, PrimeField};
use crate::linalg::Subspace;
use crate::ring::Monomial;
use crate::rpoly::RPoly;

/// Leading monomial of `C_i` and the monomials it is taken modulo.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerIndex {
    pub i: usize,
    pub monomial: Monomial,
    pub modulo: &'static [Monomial],
}

pub const TOWER: [TowerIndex; 8] = {
    use Monomial::*;
    [
        TowerIndex { i: 1, monomial: One, modulo: &[U, V, W] },
        TowerIndex { i: 2, monomial: U, modulo: &[V, W] },
        TowerIndex { i: 3, monomial: V, modulo: &[UV, W] },
        TowerIndex { i: 4, monomial: UV, modulo: &[W] },
        TowerIndex { i: 5, monomial: W, modulo: &[UW, VW] },
        TowerIndex { i: 6, monomial: UW, modulo: &[VW] },
        TowerIndex { i: 7, monomial: VW, modulo: &[UVW] },
        TowerIndex { i: 8, monomial: UVW, modulo: &[] },
    ]
};

impl TowerIndex {
    /// Basis monomials that vanish in the quotient: everything divisible by
    /// a member of the mod-list.
    pub fn killed(&self) -> Vec<Monomial> {
        Monomial::ALL
            .into_iter()
            .filter(|m| {
                self.modulo
                    .iter()
                    .any(|k| m.index() & k.index() == k.index())
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: PrimeField,
    n: usize,
    generators: Vec<RPoly>,
    basis: Subspace,
}

/// `x·v` on a block-major flattened vector.
pub(crate) fn shift_vector(v: &[u32], n: usize) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for (b, block) in v.chunks(n).enumerate() {
        for (k, &c) in block.iter().enumerate() {
            out[b * n + (k + 1) % n] = c;
        }
    }
    out
}

/// `μ·v` on a block-major flattened vector.
pub(crate) fn monomial_vector(v: &[u32], n: usize, m: Monomial) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    let mi = m.index();
    for a in 0..8 {
        if a & mi == 0 {
            out[(a | mi) * n..((a | mi) + 1) * n].copy_from_slice(&v[a * n..(a + 1) * n]);
        }
    }
    out
}

impl CyclicCode {
    /// Smallest subspace containing `generators` and closed under
    /// multiplication by `x`, `u`, `v` and `w`.
    pub fn span_closure(field: PrimeField, n: usize, generators: &[RPoly]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("code length must be positive".into()));
        }
        for g in generators {
            if g.field() != field {
                return Err(Error::ModulusMismatch {
                    left: field.p(),
                    right: g.field().p(),
                });
            }
            if g.n() != n {
                return Err(Error::LengthMismatch { left: n, right: g.n() });
            }
        }
        let basis = close(
            Subspace::new(field, 8 * n),
            n,
            generators.iter().map(RPoly::to_vector),
        );
        Ok(Self {
            field,
            n,
            generators: generators.to_vec(),
            basis,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RPoly] {
        &self.generators
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    /// `log_p |C|`.
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_polys(&self) -> Vec<RPoly> {
        self.basis
            .rows()
            .iter()
            .map(|r| RPoly::from_vector(self.field, self.n, r).expect("basis width is 8n"))
            .collect()
    }

    pub fn contains(&self, a: &RPoly) -> bool {
        a.field() == self.field && a.n() == self.n && self.basis.contains(&a.to_vector())
    }

    pub fn same_code(&self, other: &CyclicCode) -> bool {
        self.field == other.field && self.n == other.n && self.basis.same_span(&other.basis)
    }

    /// Generator of `C_i`, `1 ≤ i ≤ 8`; `xⁿ−1` for the zero ideal.
    ///
    /// In reduced row echelon form the codewords vanishing on the blocks
    /// before `μ_i` are exactly the span of rows pivoting at or after that
    /// block, so `C_i` is the projection of those rows onto block `μ_i`.
    pub fn tower_ideal(&self, i: usize) -> FpPoly {
        assert!((1..=8).contains(&i), "tower index out of range");
        let n = self.n;
        let b = i - 1;
        let projected: Vec<Vec<u32>> = self
            .basis
            .rows()
            .iter()
            .zip(self.basis.pivots())
            .filter(|(_, &piv)| piv / n == b)
            .map(|(row, _)| row[b * n..(b + 1) * n].to_vec())
            .collect();
        cyclic_generator(self.field, &projected, n).expect("tower projection is an ideal")
    }

    pub fn canonical_generators(&self) -> CanonicalGenerators {
        CanonicalGenerators::compute(self)
    }
}

/// Inserts `seeds` and their images under `x, u, v, w` until a fixpoint.
pub(crate) fn close(
    mut space: Subspace,
    n: usize,
    seeds: impl IntoIterator<Item = Vec<u32>>,
) -> Subspace {
    let mut queue: VecDeque<Vec<u32>> = seeds.into_iter().collect();
    while let Some(v) = queue.pop_front() {
        if space.insert(v.clone()) {
            queue.push_back(shift_vector(&v, n));
            for m in [Monomial::U, Monomial::V, Monomial::W] {
                queue.push_back(monomial_vector(&v, n, m));
            }
        }
    }
    space
}

/// F_p-span of `vectors` closed under `u, v, w` but not `x`: the R-module
/// span used when counting spanning sets.
pub(crate) fn close_module(
    mut space: Subspace,
    n: usize,
    seeds: impl IntoIterator<Item = Vec<u32>>,
) -> Subspace {
    let mut queue: VecDeque<Vec<u32>> = seeds.into_iter().collect();
    while let Some(v) = queue.pop_front() {
        if space.insert(v.clone()) {
            for m in [Monomial::U, Monomial::V, Monomial::W] {
                queue.push_back(monomial_vector(&v, n, m));
            }
        }
    }
    space
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn g_pow(field: PrimeField, t: usize) -> FpPoly {
        crate::gfpoly::x_minus_one_pow(field, t)
    }

    #[test]
    fn tower_table_matches_quotients() {
        use Monomial::*;
        for t in TOWER {
            // every monomial strictly above μ_i in basis order is killed
            let killed = t.killed();
            let expect: Vec<Monomial> = Monomial::ALL
                .into_iter()
                .filter(|m| m.index() > t.monomial.index())
                .collect();
            assert_eq!(killed, expect, "C_{}", t.i);
        }
        assert_eq!(TOWER[2].modulo, &[UV, W]);
    }

    #[test]
    fn closure_dimensions() {
        let fl = f(2);
        let c = CyclicCode::span_closure(fl, 4, &[RPoly::from_component(
            Monomial::UVW,
            &g_pow(fl, 3),
            4,
        )])
        .unwrap();
        assert_eq!(c.dim(), 1);
        let unit = CyclicCode::span_closure(fl, 4, &[RPoly::one(fl, 4)]).unwrap();
        assert_eq!(unit.dim(), 32);
        let zero = CyclicCode::span_closure(fl, 4, &[]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn tower_of_single_torsion_generator() {
        let fl = f(2);
        let c = CyclicCode::span_closure(fl, 4, &[RPoly::from_component(
            Monomial::UVW,
            &g_pow(fl, 3),
            4,
        )])
        .unwrap();
        assert_eq!(c.tower_ideal(8), g_pow(fl, 3));
        for i in 1..8 {
            assert_eq!(c.tower_ideal(i), FpPoly::x_n_minus_one(fl, 4));
        }
        let unit = CyclicCode::span_closure(fl, 4, &[RPoly::one(fl, 4)]).unwrap();
        for i in 1..=8 {
            assert!(unit.tower_ideal(i).is_one());
        }
    }

    #[test]
    fn vector_helpers_match_rpoly() {
        let fl = f(3);
        let a = RPoly::from_vector(fl, 3, &(0..24).map(|k| (k * 7 % 3) as u32).collect::<Vec<_>>())
            .unwrap();
        let v = a.to_vector();
        assert_eq!(shift_vector(&v, 3), a.shift(1).to_vector());
        for m in Monomial::ALL {
            assert_eq!(monomial_vector(&v, 3, m), a.mul_monomial(m).to_vector());
        }
    }
}
