use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::field::PrimeField;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// Polynomial degree, with the zero polynomial ordered below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial over F_p.
///
/// `coeffs[k]` is the coefficient of `x^k`; there are no trailing zeros, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::monomial(field, c, 0)
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = field.reduce(c);
        Self::from_raw(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: PrimeField, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Self::from_raw(field, coeffs)
    }

    /// Builds a polynomial from signed integer coefficients (ascending degree).
    pub fn from_coeffs(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    /// Builds a polynomial from residues already in `[0, p)`.
    pub fn from_residues(field: PrimeField, coeffs: &[u32]) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= field.p()) {
            return Err(Error::CoefficientOutOfRange {
                value: bad as u64,
                p: field.p(),
            });
        }
        Ok(Self::from_raw(field, coeffs.to_vec()))
    }

    pub(crate) fn from_raw(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            l => Degree::Finite(l - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    /// Dense coefficient vector padded with zeros to `len` entries.
    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), 0);
        v.truncate(len);
        v
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
        Ok(self.zip_with(other, |f, a, b| f.add(a, b)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |f, a, b| f.sub(a, b)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_raw(f, out))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(PrimeField, u32, u32) -> u32) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len)
            .map(|k| op(self.field, self.coeff(k), other.coeff(k)))
            .collect();
        Self::from_raw(self.field, out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by the unit making the leading coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc)),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_raw(self.field, coeffs)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Division with remainder: `self = g·q + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        let Some(lc) = g.leading_coeff() else {
            return Err(Error::DivisionByZero);
        };
        let f = self.field;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(f), self.clone()));
        }
        let lc_inv = f.inv(lc);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, lc_inv);
            quot[k - dg] = q;
            for (j, &b) in g.coeffs.iter().enumerate() {
                let idx = k - dg + j;
                rem[idx] = f.sub(rem[idx], f.mul(q, b));
            }
        }
        rem.truncate(dg);
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divmod(g)?.1)
    }

    /// Exact quotient; `None` when `g` does not divide `self` (or `g = 0`).
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        match self.divmod(g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// True iff `self` divides `other` in F_p[x]. Zero divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Reduction modulo `x^n - 1` (folds exponents mod n).
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let f = self.field;
        let mut out = vec![0u32; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k % n] = f.add(out[k % n], c);
        }
        Self::from_raw(f, out)
    }

    /// Product reduced modulo `x^n - 1`.
    pub fn mul_cyclic(&self, other: &Self, n: usize) -> Self {
        (self * other).reduce_cyclic(n)
    }

    /// Parses `x^3+2x+1`, `2*x^2 - x`, `1 + x` and similar.
    pub fn parse(field: PrimeField, text: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut acc = Self::zero(field);
        let mut first = true;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let number = |i: &mut usize| -> Option<u64> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            text[start..*i].parse().ok()
        };
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                if first {
                    return Err(err(i, "empty polynomial"));
                }
                break;
            }
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-'"));
            }
            first = false;
            let start = i;
            let coeff = number(&mut i);
            skip_ws(&mut i);
            if coeff.is_some() && i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                skip_ws(&mut i);
            }
            let mut exp = 0usize;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                exp = 1;
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    skip_ws(&mut i);
                    let at = i;
                    exp = number(&mut i).ok_or_else(|| err(at, "expected exponent"))? as usize;
                }
            } else if coeff.is_none() {
                return Err(err(start, "expected a term"));
            }
            let c = coeff.unwrap_or(1) % field.p() as u64;
            acc = &acc + &Self::monomial(field, sign * c as i64, exp);
        }
        Ok(acc)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[{}]({})", self.field.p(), self)
    }
}

/// Descending-degree text, e.g. `x^3+2x+1`.
impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, k) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, k) => write!(f, "x^{k}")?,
                (c, 1) => write!(f, "{c}x")?,
                (c, k) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for FpPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        /// Panics on a modulus mismatch; use the `try_` method to get an error instead.
        impl $tr<&FpPoly> for &FpPoly {
            type Output = FpPoly;
            fn $method(self, rhs: &FpPoly) -> FpPoly {
                self.$try(rhs).expect("polynomial modulus mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let f = self.field;
        FpPoly::from_raw(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Orders by degree first, then lexicographically from the top coefficient.
impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.field.cmp(&other.field))
    }
}

/// Generator of the ideal of F_p[x]/(x^n - 1) spanned by `basis`.
///
/// The span must be closed under multiplication by `x` (cyclic shift). The
/// result is the monic element of least degree; the zero subspace yields
/// `x^n - 1`.
pub fn cyclic_generator(field: PrimeField, basis: &[Vec<u32>], n: usize) -> Result<FpPoly> {
    // columns reversed so that pivots sit at the highest degree
    let mut space = Subspace::new(field, n);
    for v in basis {
        if v.len() != n {
            return Err(Error::WrongVectorLength {
                expected: n,
                got: v.len(),
            });
        }
        space.insert(v.iter().rev().copied().collect());
    }
    if space.dim() == 0 {
        return Ok(FpPoly::x_n_minus_one(field, n));
    }
    for row in space.rows() {
        let mut shifted: Vec<u32> = row.iter().rev().copied().collect();
        shifted.rotate_right(1);
        shifted.reverse();
        if !space.contains(&shifted) {
            return Err(Error::NotShiftClosed);
        }
    }
    let last = space.rows().last().unwrap();
    let g = FpPoly::from_raw(field, last.iter().rev().copied().collect());
    let expect_deg = n - space.dim();
    if g.degree() != Degree::Finite(expect_deg) || !g.divides(&FpPoly::x_n_minus_one(field, n)) {
        return Err(Error::Contract(format!(
            "cyclic generator {g} inconsistent with dimension {}",
            space.dim()
        )));
    }
    Ok(g)
}

/// `(x - 1)^(p^j) = x^(p^j) - 1` over F_p.
pub fn frobenius_binomial(field: PrimeField, j: u32) -> FpPoly {
    let k = (field.p() as usize).pow(j);
    FpPoly::x_n_minus_one(field, k)
}

/// `(x - 1)^t`, assembled from the base-p digits of `t` as a product of
/// sparse powers `(x^(p^j) - 1)^(b_j)`.
pub fn x_minus_one_pow(field: PrimeField, t: usize) -> FpPoly {
    let p = field.p() as usize;
    let mut acc = FpPoly::one(field);
    let mut rest = t;
    let mut j = 0u32;
    while rest > 0 {
        let b = rest % p;
        if b > 0 {
            let stride = p.pow(j);
            // (X - 1)^b with X = x^stride, b < p so the binomials are units
            let mut coeffs = vec![0u32; b * stride + 1];
            let mut binom = 1u64;
            for k in 0..=b {
                if k > 0 {
                    binom = binom * (b - k + 1) as u64 / k as u64;
                }
                let sign = if (b - k) % 2 == 0 { 1 } else { -1 };
                coeffs[k * stride] = field.reduce(sign * (binom % p as u64) as i64);
            }
            acc = &acc * &FpPoly::from_raw(field, coeffs);
        }
        rest /= p;
        j += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u32, c: &[i64]) -> FpPoly {
        FpPoly::from_coeffs(f(p), c)
    }

    #[test]
    fn arithmetic_examples() {
        let a = poly(2, &[1, 1]);
        assert!((&a + &a).is_zero());
        // (x-1)^2 over F_3: x^2 - 2x + 1 = x^2 + x + 1
        let g = poly(3, &[-1, 1]);
        assert_eq!(&g * &g, poly(3, &[1, 1, 1]));
        assert!((&g * &FpPoly::zero(f(3))).is_zero());
        assert!(poly(2, &[1]).try_add(&poly(3, &[1])).is_err());
    }

    #[test]
    fn division_examples() {
        let x4 = FpPoly::x_n_minus_one(f(2), 4);
        let g = poly(2, &[1, 1]);
        let (q, r) = x4.divmod(&g).unwrap();
        assert_eq!(q, poly(2, &[1, 1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(&(&q * &g) + &r, x4);

        let (q, r) = g.divmod(&g).unwrap();
        assert!(q.is_one() && r.is_zero());

        let small = poly(5, &[3, 1]);
        let big = poly(5, &[1, 2, 1]);
        let (q, r) = small.divmod(&big).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert_eq!(g.divmod(&FpPoly::zero(f(2))), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let g = poly(3, &[-1, 1]);
        assert_eq!(g.pow(2).gcd(&g.pow(3)).unwrap(), g.pow(2));
        let h = poly(5, &[2, 0, 3]);
        assert_eq!(h.gcd(&FpPoly::zero(f(5))).unwrap(), h.monic());
        // x^2 + 1 = (x + 1)^2 over F_2
        assert_eq!(poly(2, &[1, 1]).pow(2), poly(2, &[1, 0, 1]));
        assert_eq!(
            poly(2, &[1, 0, 1]).gcd(&poly(2, &[1, 1])).unwrap(),
            poly(2, &[1, 1])
        );
        let z = FpPoly::zero(f(7));
        assert_eq!(z.gcd(&z), Err(Error::UndefinedGcd));
    }

    #[test]
    fn zero_degree_is_below_constants() {
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(FpPoly::zero(f(2)).degree(), Degree::MinusInfinity);
        assert_eq!(poly(2, &[1]).degree(), Degree::Finite(0));
    }

    #[test]
    fn cyclic_generator_examples() {
        let g = cyclic_generator(f(3), &[vec![1, 1, 1]], 3).unwrap();
        assert_eq!(g, poly(3, &[1, 1, 1]));
        assert_eq!(
            cyclic_generator(f(2), &[], 4).unwrap(),
            FpPoly::x_n_minus_one(f(2), 4)
        );
        let full: Vec<Vec<u32>> = (0..4)
            .map(|i| (0..4).map(|j| u32::from(i == j)).collect())
            .collect();
        assert!(cyclic_generator(f(2), &full, 4).unwrap().is_one());
        assert_eq!(
            cyclic_generator(f(2), &[vec![1, 0, 0, 0]], 4),
            Err(Error::NotShiftClosed)
        );
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_binomial(f(2), 2), poly(2, &[1, 0, 0, 0, 1]));
        let g = poly(3, &[-1, 1]);
        let expected = &FpPoly::x_n_minus_one(f(3), 3) * &g.pow(2);
        assert_eq!(x_minus_one_pow(f(3), 5), expected);
        assert_eq!(x_minus_one_pow(f(5), 1), poly(5, &[-1, 1]));
    }

    #[test]
    fn frobenius_matches_repeated_multiplication() {
        for p in [2, 3, 5] {
            let g = poly(p, &[-1, 1]);
            let mut naive = FpPoly::one(f(p));
            for t in 0..=25 {
                assert_eq!(x_minus_one_pow(f(p), t), naive, "p={p} t={t}");
                naive = &naive * &g;
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let a = FpPoly::parse(f(5), "x^3+2x+1").unwrap();
        assert_eq!(a, poly(5, &[1, 2, 0, 1]));
        assert_eq!(a.to_string(), "x^3+2x+1");
        assert_eq!(FpPoly::parse(f(3), "1 + x - 2*x^2").unwrap(), poly(3, &[1, 1, 1]));
        assert!(FpPoly::parse(f(3), "x^").is_err());
        assert!(FpPoly::parse(f(3), "").is_err());
    }

    fn arb_poly(p: u32) -> impl Strategy<Value = FpPoly> {
        prop::collection::vec(0..p, 0..13).prop_map(move |c| FpPoly::from_raw(f(p), c))
    }

    fn arb_pair() -> impl Strategy<Value = (FpPoly, FpPoly)> {
        prop_oneof![Just(2u32), Just(3), Just(5)]
            .prop_flat_map(|p| (arb_poly(p), arb_poly(p)))
    }

    proptest! {
        #[test]
        fn divmod_reconstructs((a, g) in arb_pair()) {
            prop_assume!(!g.is_zero());
            let (q, r) = a.divmod(&g).unwrap();
            prop_assert_eq!(&(&g * &q) + &r, a);
            prop_assert!(r.degree() < g.degree());
        }

        #[test]
        fn gcd_is_greatest_common_divisor((a, b) in arb_pair(), c in 1usize..4) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(g.leading_coeff(), Some(1));
            // any common divisor divides the gcd; build one from a shared factor
            let shared = FpPoly::x(a.field()).pow(c).try_add(&FpPoly::one(a.field())).unwrap();
            let g2 = (&a * &shared).gcd(&(&b * &shared)).unwrap();
            prop_assert!(shared.monic().divides(&g2));
            prop_assert!(g.divides(&g2));
        }

        #[test]
        fn parse_roundtrip((a, _) in arb_pair()) {
            prop_assert_eq!(FpPoly::parse(a.field(), &a.to_string()).unwrap(), a);
        }
    }

    #[test]
    fn cyclic_generator_divides_and_counts_dimension() {
        // every divisor of x^6 - 1 over F_3 = (x-1)^3 (x+1)^3
        let field = f(3);
        let n = 6;
        for a in 0..=3 {
            for b in 0..=3 {
                let gen = &x_minus_one_pow(field, a) * &poly(3, &[1, 1]).pow(b);
                let basis: Vec<Vec<u32>> = (0..n)
                    .map(|k| gen.shift(k).reduce_cyclic(n).to_dense(n))
                    .collect();
                let g = cyclic_generator(field, &basis, n).unwrap();
                let expect = if a + b == 6 { FpPoly::x_n_minus_one(field, n) } else { gen.clone() };
                assert_eq!(g, expect);
                let span = Subspace::from_vectors(
                    field,
                    n,
                    (0..n).map(|k| g.shift(k).reduce_cyclic(n).to_dense(n)),
                );
                assert_eq!(span.dim(), n - g.degree().finite().unwrap());
            }
        }
    }
}
