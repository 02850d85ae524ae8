//! The quotient algebra `R_n = R[x]/(xⁿ−1)`.
//!
//! An element is stored as eight component polynomials over F_p, one per
//! basis monomial of R, each reduced modulo `xⁿ−1`. Flattening is
//! block-major: coordinate `m·n + k` holds the coefficient of `x^k` in the
//! component of monomial `m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gfpoly::{Degree, FpPoly, PrimeField};
use crate::ring::{gray_coords, Monomial, RingElem};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RPoly {
    field: PrimeField,
    n: usize,
    comps: [FpPoly; 8],
}

impl RPoly {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            n,
            comps: std::array::from_fn(|_| FpPoly::zero(field)),
        }
    }

    pub fn one(field: PrimeField, n: usize) -> Self {
        Self::from_component(Monomial::One, &FpPoly::one(field), n)
    }

    /// `μ·f(x)` reduced modulo `xⁿ−1`.
    pub fn from_component(m: Monomial, f: &FpPoly, n: usize) -> Self {
        let mut out = Self::zero(f.field(), n);
        out.comps[m.index()] = f.reduce_cyclic(n);
        out
    }

    pub fn from_components(field: PrimeField, n: usize, comps: [FpPoly; 8]) -> Result<Self> {
        for c in &comps {
            if c.field() != field {
                return Err(Error::ModulusMismatch {
                    left: field.p(),
                    right: c.field().p(),
                });
            }
        }
        Ok(Self {
            field,
            n,
            comps: comps.map(|c| c.reduce_cyclic(n)),
        })
    }

    /// A ring constant placed at `x^0`.
    pub fn constant(r: &RingElem, n: usize) -> Self {
        let f = r.field();
        let mut out = Self::zero(f, n);
        for m in Monomial::ALL {
            out.comps[m.index()] = FpPoly::constant(f, r.coord(m) as i64).reduce_cyclic(n);
        }
        out
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component(&self, m: Monomial) -> &FpPoly {
        &self.comps[m.index()]
    }

    pub fn components(&self) -> &[FpPoly; 8] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(FpPoly::is_zero)
    }

    /// Ring coefficient of `x^k`.
    pub fn coefficient(&self, k: usize) -> RingElem {
        RingElem::from_coords(self.field, std::array::from_fn(|m| self.comps[m].coeff(k) as i64))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, b) in out.comps.iter_mut().zip(&other.comps) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, b) in out.comps.iter_mut().zip(&other.comps) {
            *a = &*a - b;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.field, self.n);
        for a in 0..8 {
            if self.comps[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if a & b != 0 || other.comps[b].is_zero() {
                    continue;
                }
                let prod = self.comps[a].mul_cyclic(&other.comps[b], self.n);
                out.comps[a | b] = &out.comps[a | b] + &prod;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("R_n parameter mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("R_n parameter mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("R_n parameter mismatch")
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field,
            n: self.n,
            comps: self.comps.clone().map(|c| -&c),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        Self {
            field: self.field,
            n: self.n,
            comps: self.comps.clone().map(|p| p.scale(c)),
        }
    }

    /// Multiplication by a polynomial over F_p.
    pub fn mul_poly(&self, f: &FpPoly) -> Self {
        Self {
            field: self.field,
            n: self.n,
            comps: self.comps.clone().map(|c| c.mul_cyclic(f, self.n)),
        }
    }

    /// Multiplication by a basis monomial of R.
    pub fn mul_monomial(&self, m: Monomial) -> Self {
        let mut out = Self::zero(self.field, self.n);
        for a in 0..8 {
            if let Some(prod) = Monomial::from_index(a).times(m) {
                out.comps[prod.index()] = self.comps[a].clone();
            }
        }
        out
    }

    /// Multiplication by `x^k`, a cyclic shift of every component.
    pub fn shift(&self, k: usize) -> Self {
        Self {
            field: self.field,
            n: self.n,
            comps: self.comps.clone().map(|c| c.shift(k % self.n.max(1)).reduce_cyclic(self.n)),
        }
    }

    /// Largest component degree; see the crate docs for why this is a
    /// convention rather than a ring-theoretic degree.
    pub fn degree(&self) -> Degree {
        self.comps.iter().map(FpPoly::degree).max().unwrap_or(Degree::MinusInfinity)
    }

    pub fn to_vector(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(8 * self.n);
        for c in &self.comps {
            v.extend(c.to_dense(self.n));
        }
        v
    }

    pub fn from_vector(field: PrimeField, n: usize, v: &[u32]) -> Result<Self> {
        if v.len() != 8 * n {
            return Err(Error::WrongVectorLength {
                expected: 8 * n,
                got: v.len(),
            });
        }
        let mut out = Self::zero(field, n);
        for (m, chunk) in v.chunks(n.max(1)).enumerate().take(8) {
            out.comps[m] = FpPoly::from_residues(field, chunk)?;
        }
        Ok(out)
    }

    /// Coordinate-wise Gray image: position `k` contributes the eight
    /// symbols `φ_L(a_k)` at offsets `8k..8k+8`.
    pub fn gray_image(&self) -> Vec<u32> {
        let v = self.to_vector();
        gray_image_of_vector(self.field, self.n, &v)
    }

    pub fn lee_weight(&self) -> usize {
        self.gray_image().iter().filter(|&&c| c != 0).count()
    }

    /// Divides `xⁿ−1` by `self` in `R[x]` (not modulo `xⁿ−1`), returning the
    /// quotient's coefficients when the division is exact. Needs a unit
    /// leading coefficient.
    pub fn quotient_of_x_n_minus_one(&self) -> Option<Vec<RingElem>> {
        let d = self.degree().finite()?;
        let lead_inv = self.coefficient(d).inverse()?;
        let zero = RingElem::zero(self.field);
        let mut rem = vec![zero.clone(); self.n + 1];
        rem[0] = RingElem::one(self.field).neg();
        rem[self.n] = RingElem::one(self.field);
        let divisor: Vec<RingElem> = (0..=d).map(|k| self.coefficient(k)).collect();
        let mut quot = vec![zero; self.n - d + 1];
        for top in (d..=self.n).rev() {
            let q = rem[top].mul(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (k, c) in divisor.iter().enumerate() {
                let idx = top - d + k;
                rem[idx] = rem[idx].add(&q.mul(c).neg());
            }
            quot[top - d] = q;
        }
        rem.iter().all(RingElem::is_zero).then_some(quot)
    }

    /// Number of positions `k` whose ring coefficient is nonzero.
    pub fn hamming_weight(&self) -> usize {
        (0..self.n)
            .filter(|&k| self.comps.iter().any(|c| c.coeff(k) != 0))
            .count()
    }
}

/// Gray image of a block-major flattened vector.
pub fn gray_image_of_vector(field: PrimeField, n: usize, v: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(8 * n);
    for k in 0..n {
        let block: [u32; 8] = std::array::from_fn(|m| v[m * n + k]);
        out.extend(gray_coords(field, &block));
    }
    out
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly[p={}, n={}]({})", self.field.p(), self.n, self)
    }
}

/// Prints `μ*(poly)` terms in basis order, which the generator parser reads
/// back unchanged.
impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in Monomial::ALL {
            let c = &self.comps[m.index()];
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match m {
                Monomial::One => write!(f, "({c})")?,
                _ => write!(f, "{m}*({c})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for RPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, (&str, &FpPoly)> = Monomial::ALL
            .iter()
            .map(|m| (m.index(), (m.name(), &self.comps[m.index()])))
            .collect();
        use serde::ser::SerializeMap;
        let mut out = s.serialize_map(Some(8))?;
        for (name, poly) in map.values() {
            out.serialize_entry(name, poly)?;
        }
        out.end()
    }
}
