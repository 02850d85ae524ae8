//! Row-reduced echelon bases of subspaces of F_p^m.

use crate::gfpoly::PrimeField;

/// A subspace of F_p^m kept in fully reduced row echelon form.
///
/// Rows are sorted by pivot column; each pivot entry is 1 and every other
/// row is zero in that column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Self {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I>(field: PrimeField, width: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut s = Self::new(field, width);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the basis; returns true if it became zero.
    pub fn reduce(&self, v: &mut [u32]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                let m = f.neg(c);
                for (x, &r) in v.iter_mut().zip(row).skip(piv) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(m, r));
                    }
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w)
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        if self.reduce(&mut v) {
            return false;
        }
        let f = self.field;
        let piv = v.iter().position(|&x| x != 0).unwrap();
        let s = f.inv(v[piv]);
        for x in v.iter_mut().skip(piv) {
            *x = f.mul(*x, s);
        }
        for row in &mut self.rows {
            let c = row[piv];
            if c != 0 {
                let m = f.neg(c);
                for (x, &r) in row.iter_mut().zip(&v).skip(piv) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(m, r));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(at, v);
        self.pivots.insert(at, piv);
        true
    }

    /// True iff both sides span the same subspace.
    pub fn same_span(&self, other: &Subspace) -> bool {
        // RREF is unique, so equal subspaces have identical bases.
        self.width == other.width && self.rows == other.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_vectors(f(3), 3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(f(3), 3, vec![vec![1, 0, 1], vec![0, 2, 2]]);
        let c = Subspace::from_vectors(f(3), 3, vec![vec![1, 0, 1], vec![2, 1, 2]]);
        assert!(a.same_span(&b));
        assert!(!a.same_span(&c));
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn dependent_vectors_do_not_grow_dimension() {
        let mut s = Subspace::new(f(2), 4);
        assert!(s.insert(vec![1, 1, 0, 0]));
        assert!(s.insert(vec![0, 1, 1, 0]));
        assert!(!s.insert(vec![1, 0, 1, 0]));
        assert!(s.contains(&[1, 0, 1, 0]));
        assert!(!s.contains(&[0, 0, 0, 1]));
        assert_eq!(s.pivots(), &[0, 1]);
    }
}
