//! Arithmetic in F_p and F_p[x].

mod field;
mod poly;

pub use field::{FieldElem, PrimeField};
pub use poly::{cyclic_generator, frobenius_binomial, x_minus_one_pow, Degree, FpPoly};
