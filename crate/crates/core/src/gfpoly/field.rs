use std::fmt;

use crate::error::{Error, Result};

/// The prime field F_p, identified by its (checked) modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 16 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse by Fermat's little theorem. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn elem(self, v: i64) -> FieldElem {
        FieldElem {
            value: self.reduce(v),
            field: self,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.p).map(move |v| FieldElem { value: v, field: self })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_p carrying its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    field: PrimeField,
}

impl FieldElem {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(())
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.with(self.field.inv(self.value)))
    }

    fn with(self, value: u32) -> Self {
        Self { value, field: self.field }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        for p in [0, 1, 4, 6, 9, 15, 25, 49] {
            assert_eq!(PrimeField::new(p), Err(Error::NotPrime(p)));
        }
        for p in [2, 3, 5, 7, 11, 13, 65521] {
            assert!(PrimeField::new(p).is_ok());
        }
        assert!(PrimeField::new(65537).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                assert_eq!(a.try_add(a.neg()).unwrap().value(), 0);
                if let Some(ai) = a.inv() {
                    assert_eq!(a.try_mul(ai).unwrap().value(), 1);
                } else {
                    assert!(a.is_zero());
                }
                for b in f.elements() {
                    assert_eq!(a.try_add(b), b.try_add(a));
                    assert_eq!(a.try_mul(b), b.try_mul(a));
                    for c in f.elements() {
                        let lhs = a.try_mul(b.try_add(c).unwrap()).unwrap();
                        let rhs = a
                            .try_mul(b)
                            .unwrap()
                            .try_add(a.try_mul(c).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                        assert_eq!(
                            a.try_mul(b).unwrap().try_mul(c),
                            a.try_mul(b.try_mul(c).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        let a = PrimeField::new(2).unwrap().elem(1);
        let b = PrimeField::new(3).unwrap().elem(1);
        assert_eq!(
            a.try_add(b),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        );
    }
}
