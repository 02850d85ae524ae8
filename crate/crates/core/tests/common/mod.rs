#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use ringcodes::gfpoly::{FpPoly, PrimeField};
use ringcodes::ring::Monomial;
use ringcodes::rpoly::RPoly;

/// Monic divisors of `xⁿ−1`, found by trying every monic polynomial.
pub fn divisors(field: PrimeField, n: usize) -> Vec<FpPoly> {
    let p = field.p() as usize;
    let modulus = FpPoly::x_n_minus_one(field, n);
    let mut out = Vec::new();
    for deg in 0..=n {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut c = Vec::with_capacity(deg + 1);
            let mut r = idx;
            for _ in 0..deg {
                c.push((r % p) as u32);
                r /= p;
            }
            c.push(1);
            let f = FpPoly::from_residues(field, &c).unwrap();
            if f.divides(&modulus) {
                out.push(f);
            }
        }
    }
    out
}

pub fn random_poly<R: Rng>(rng: &mut R, field: PrimeField, max_deg: usize) -> FpPoly {
    let c: Vec<u32> = (0..=max_deg).map(|_| rng.gen_range(0..field.p())).collect();
    FpPoly::from_residues(field, &c).unwrap()
}

/// Generators of a random ideal: each component is a random multiple of a
/// random divisor of `xⁿ−1`, with the low monomials left out more often so
/// that the unit ideal does not dominate.
pub fn random_generators<R: Rng>(rng: &mut R, field: PrimeField, n: usize, divs: &[FpPoly]) -> Vec<RPoly> {
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| {
            let mut g = RPoly::zero(field, n);
            for m in Monomial::ALL {
                let keep = 0.25 + 0.08 * m.index() as f64;
                if !rng.gen_bool(keep) {
                    continue;
                }
                let d = &divs[rng.gen_range(0..divs.len())];
                let mult = random_poly(rng, field, 1);
                let comp = (d * &mult).reduce_cyclic(n);
                g = g.add(&RPoly::from_component(m, &comp, n));
            }
            g
        })
        .collect()
}

/// Ideal generated by `gens`, by naive repeated multiplication over a set of
/// explicit codewords. Only usable for tiny codes.
pub fn naive_ideal(gens: &[RPoly]) -> HashSet<Vec<u32>> {
    let Some(first) = gens.first() else {
        return HashSet::new();
    };
    let (field, n) = (first.field(), first.n());
    let mut set: HashSet<Vec<u32>> = HashSet::new();
    set.insert(RPoly::zero(field, n).to_vector());
    let mut frontier: Vec<RPoly> = gens.to_vec();
    while let Some(a) = frontier.pop() {
        if !set.insert(a.to_vector()) {
            continue;
        }
        let mut next = vec![a.shift(1), a.mul_monomial(Monomial::U), a.mul_monomial(Monomial::V), a.mul_monomial(Monomial::W)];
        next.extend((2..field.p()).map(|c| a.scale(c)));
        let existing: Vec<Vec<u32>> = set.iter().cloned().collect();
        for e in existing {
            next.push(a.add(&RPoly::from_vector(field, n, &e).unwrap()));
        }
        frontier.extend(next.into_iter().filter(|b| !set.contains(&b.to_vector())));
    }
    set
}

/// Minimum weight of the F_p cyclic code `⟨f⟩` by multiplying `f` with every
/// polynomial of degree below `n − deg f`.
pub fn naive_cyclic_min_weight(f: &FpPoly, n: usize) -> usize {
    let field = f.field();
    let p = field.p() as usize;
    let k = n - f.degree().finite().unwrap();
    let mut best = usize::MAX;
    for idx in 1..p.pow(k as u32) {
        let mut c = Vec::with_capacity(k);
        let mut r = idx;
        for _ in 0..k {
            c.push((r % p) as u32);
            r /= p;
        }
        let h = FpPoly::from_residues(field, &c).unwrap();
        let w = (f * &h).reduce_cyclic(n).coeffs().iter().filter(|&&c| c != 0).count();
        best = best.min(w);
    }
    best
}
