//! The local ring R = F_p[u,v,w]/<u², v², w²> and its Gray map.
//!
//! Elements are stored on the ordered basis `1, u, v, uv, w, uw, vw, uvw`.
//! The index of a basis monomial is its bitmask over `(u, v, w) = (1, 2, 4)`,
//! so the product of two monomials is their union when they are disjoint and
//! zero otherwise.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gfpoly::PrimeField;

/// A basis monomial of R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    One = 0,
    U = 1,
    V = 2,
    UV = 3,
    W = 4,
    UW = 5,
    VW = 6,
    UVW = 7,
}

impl Monomial {
    pub const ALL: [Monomial; 8] = [
        Monomial::One,
        Monomial::U,
        Monomial::V,
        Monomial::UV,
        Monomial::W,
        Monomial::UW,
        Monomial::VW,
        Monomial::UVW,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Monomial {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["1", "u", "v", "uv", "w", "uw", "vw", "uvw"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Monomial> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }

    /// `None` when the product contains a square and therefore vanishes.
    pub fn times(self, other: Monomial) -> Option<Monomial> {
        let (a, b) = (self.index(), other.index());
        (a & b == 0).then(|| Monomial::from_index(a | b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rows of the Gray map as 0/1 masks over the eight coordinates.
pub const GRAY_MATRIX: [[i8; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

/// Integer inverse of [`GRAY_MATRIX`]; unimodular, so valid over every F_p.
pub const GRAY_INVERSE: [[i8; 8]; 8] = [
    [-1, 1, 1, 1, -1, -1, -1, 1],
    [1, -1, 0, -1, 0, 1, 0, 0],
    [1, 0, -1, -1, 0, 0, 1, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0],
    [1, -1, -1, 0, 1, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
];

const fn gray_inverse_is_exact() -> bool {
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let mut s = 0i32;
            let mut k = 0;
            while k < 8 {
                s += GRAY_MATRIX[i][k] as i32 * GRAY_INVERSE[k][j] as i32;
                k += 1;
            }
            if s != (i == j) as i32 {
                return false;
            }
            j += 1;
        }
        i += 1;
    }
    true
}

const _: () = assert!(gray_inverse_is_exact(), "Gray map is not invertible");

/// An element `α₁ + uα₂ + vα₃ + uvα₄ + wα₅ + uwα₆ + vwα₇ + uvwα₈` of R.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElem {
    field: PrimeField,
    coords: [u32; 8],
}

/// Image of a ring element under the Gray map, a vector in F_p^8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrayVector {
    pub field: PrimeField,
    pub coords: [u32; 8],
}

impl GrayVector {
    pub fn hamming_weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }
}

impl RingElem {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coords: [0; 8],
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::monomial(field, Monomial::One, 1)
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: i64) -> Self {
        let mut e = Self::zero(field);
        e.coords[m.index()] = field.reduce(c);
        e
    }

    pub fn from_coords(field: PrimeField, coords: [i64; 8]) -> Self {
        Self {
            field,
            coords: coords.map(|c| field.reduce(c)),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coords(&self) -> [u32; 8] {
        self.coords
    }

    pub fn coord(&self, m: Monomial) -> u32 {
        self.coords[m.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let mut out = *self;
        for (a, &b) in out.coords.iter_mut().zip(&other.coords) {
            *a = f.add(*a, b);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            field: f,
            coords: self.coords.map(|c| f.neg(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self {
            field: f,
            coords: self.coords.map(|a| f.mul(a, c)),
        }
    }

    /// Structure-constant product; any term containing u², v² or w² drops.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let mut out = [0u32; 8];
        for a in 0..8 {
            if self.coords[a] == 0 {
                continue;
            }
            for b in 0..8 {
                if a & b == 0 && other.coords[b] != 0 {
                    out[a | b] = f.add(out[a | b], f.mul(self.coords[a], other.coords[b]));
                }
            }
        }
        Ok(Self {
            field: f,
            coords: out,
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring modulus mismatch")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring modulus mismatch")
    }

    /// R is local with maximal ideal <u, v, w>: units are exactly the
    /// elements with nonzero constant coordinate.
    pub fn is_unit(&self) -> bool {
        self.coords[0] != 0
    }

    /// Writes `a = c(1 + m)` with `m` nilpotent and sums the geometric series;
    /// `m⁴ = 0` because <u,v,w>⁴ = 0.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let f = self.field;
        let c_inv = f.inv(self.coords[0]);
        let mut m = self.scale(c_inv);
        m.coords[0] = 0;
        let one = Self::one(f);
        let m2 = m.mul(&m);
        let m3 = m2.mul(&m);
        let series = one.add(&m.neg()).add(&m2).add(&m3.neg());
        Some(series.scale(c_inv))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn gray_map(&self) -> GrayVector {
        GrayVector {
            field: self.field,
            coords: apply(self.field, &GRAY_MATRIX, &self.coords),
        }
    }

    pub fn gray_inverse(g: &GrayVector) -> Self {
        Self {
            field: g.field,
            coords: apply(g.field, &GRAY_INVERSE, &g.coords),
        }
    }

    /// `w_L(α) = w_H(φ_L(α))`.
    pub fn lee_weight(&self) -> usize {
        self.gray_map().hamming_weight()
    }
}

fn apply(field: PrimeField, m: &[[i8; 8]; 8], x: &[u32; 8]) -> [u32; 8] {
    let mut out = [0u32; 8];
    for (o, row) in out.iter_mut().zip(m) {
        let s: i64 = row.iter().zip(x).map(|(&a, &b)| a as i64 * b as i64).sum();
        *o = field.reduce(s);
    }
    out
}

/// Gray image of a single coordinate block, used by the vectorised paths.
#[inline]
pub(crate) fn gray_coords(field: PrimeField, x: &[u32; 8]) -> [u32; 8] {
    apply(field, &GRAY_MATRIX, x)
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem[{}]({})", self.field.p(), self)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for m in Monomial::ALL {
            let c = self.coord(m);
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, m) {
                (c, Monomial::One) => write!(f, "{c}")?,
                (1, m) => write!(f, "{m}")?,
                (c, m) => write!(f, "{c}{m}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u32, mono: Monomial) -> RingElem {
        RingElem::monomial(f(p), mono, 1)
    }

    fn all_elements(field: PrimeField) -> impl Iterator<Item = RingElem> {
        let p = field.p() as usize;
        (0..p.pow(8)).map(move |mut k| {
            let mut c = [0i64; 8];
            for slot in &mut c {
                *slot = (k % p) as i64;
                k /= p;
            }
            RingElem::from_coords(field, c)
        })
    }

    fn random_elem(rng: &mut impl Rng, field: PrimeField) -> RingElem {
        let p = field.p() as i64;
        RingElem::from_coords(field, std::array::from_fn(|_| rng.gen_range(0..p)))
    }

    #[test]
    fn basis_products() {
        use Monomial::*;
        assert_eq!(m(2, U).mul(&m(2, V)), m(2, UV));
        assert_eq!(m(2, UV).mul(&m(2, W)), m(2, UVW));
        assert!(m(2, UVW).mul(&m(2, U)).is_zero());
        let one = RingElem::one(f(3));
        let a = one.add(&m(3, U));
        let b = one.add(&m(3, U).neg());
        assert_eq!(a.mul(&b), one);
    }

    #[test]
    fn units_and_inverses() {
        use Monomial::*;
        let fl = f(3);
        let one = RingElem::one(fl);
        assert!(one.add(&m(3, U)).add(&m(3, V)).add(&m(3, W)).is_unit());
        assert!(!m(3, U).add(&m(3, VW)).is_unit());
        let a = RingElem::monomial(fl, One, 2).add(&m(3, UVW));
        // (2+uvw)(2+y·uvw) = 1 + (2y+2)uvw over F_3, so y = 2
        let inv = a.inverse().unwrap();
        assert_eq!(inv, RingElem::monomial(fl, One, 2).add(&RingElem::monomial(fl, UVW, 2)));
        assert_eq!(a.mul(&inv), one);
    }

    #[test]
    fn gray_examples() {
        use Monomial::*;
        assert_eq!(RingElem::one(f(2)).gray_map().coords, [0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(m(2, UVW).gray_map().coords, [1; 8]);
        assert_eq!(m(2, U).gray_map().coords, [0, 0, 0, 0, 0, 1, 0, 1]);
        assert_eq!(RingElem::zero(f(2)).lee_weight(), 0);
        assert_eq!(m(2, UVW).lee_weight(), 8);
        assert_eq!(m(2, U).lee_weight(), 2);
    }

    #[test]
    fn exhaustive_binary_ring() {
        let fl = f(2);
        let elems: Vec<RingElem> = all_elements(fl).collect();
        assert_eq!(elems.iter().filter(|e| e.is_unit()).count(), 128);
        let mut images = std::collections::HashSet::new();
        for a in &elems {
            let g = a.gray_map();
            assert!(images.insert(g.coords));
            assert_eq!(RingElem::gray_inverse(&g), *a);
            assert_eq!(a.lee_weight() == 0, a.is_zero());
            match a.inverse() {
                Some(inv) => assert_eq!(a.mul(&inv), RingElem::one(fl)),
                None => assert!(a.pow(4).is_zero()),
            }
        }
        for a in elems.iter().step_by(7) {
            for b in elems.iter().step_by(5) {
                assert_eq!(a.mul(b), b.mul(a));
                let ga = a.gray_map().coords;
                let gb = b.gray_map().coords;
                let gs = a.add(b).gray_map().coords;
                for k in 0..8 {
                    assert_eq!(gs[k], (ga[k] + gb[k]) % 2);
                }
                for c in elems.iter().step_by(31) {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn randomized_odd_characteristic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3, 5] {
            let fl = f(p);
            for _ in 0..2000 {
                let a = random_elem(&mut rng, fl);
                let b = random_elem(&mut rng, fl);
                let c = random_elem(&mut rng, fl);
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(RingElem::gray_inverse(&a.gray_map()), a);
                let s = rng.gen_range(0..p);
                let scaled = a.scale(s).gray_map().coords;
                let expect = a.gray_map().coords.map(|x| fl.mul(x, s));
                assert_eq!(scaled, expect);
                match a.inverse() {
                    Some(inv) => assert_eq!(a.mul(&inv), RingElem::one(fl)),
                    None => assert!(a.pow(4).is_zero()),
                }
            }
        }
    }
}
