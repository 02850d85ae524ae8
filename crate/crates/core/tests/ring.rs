use proptest::prelude::*;
use ringcodes::gfpoly::PrimeField;
use ringcodes::ring::{GrayVector, Monomial, RingElem};

fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn arb_elem(p: u32) -> impl Strategy<Value = RingElem> {
    prop::array::uniform8(0..p as i64).prop_map(move |c| RingElem::from_coords(f(p), c))
}

fn arb_any() -> impl Strategy<Value = RingElem> {
    prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(arb_elem)
}

#[test]
fn monomial_table() {
    use Monomial::*;
    assert_eq!(U.times(V), Some(UV));
    assert_eq!(UV.times(W), Some(UVW));
    assert_eq!(U.times(UW), None);
    assert_eq!(One.times(VW), Some(VW));
    for m in Monomial::ALL {
        assert_eq!(Monomial::from_name(m.name()), Some(m));
        assert_eq!(Monomial::from_index(m.index()), m);
        if m != One {
            assert_eq!(m.times(m), None, "{} is nilpotent", m.name());
        }
    }
}

#[test]
fn uvw_annihilates_the_maximal_ideal() {
    let field = f(5);
    let uvw = RingElem::monomial(field, Monomial::UVW, 1);
    for m in Monomial::ALL.into_iter().skip(1) {
        assert!(uvw.mul(&RingElem::monomial(field, m, 3)).is_zero());
    }
}

#[test]
fn binary_inverse_table_is_an_involution() {
    let field = f(2);
    for idx in 0..256i64 {
        let a = RingElem::from_coords(field, std::array::from_fn(|k| (idx >> k) & 1));
        if let Some(b) = a.inverse() {
            assert_eq!(b.inverse().unwrap(), a);
        }
    }
}

#[test]
fn gray_map_is_a_bijection_for_p2() {
    let field = f(2);
    let mut seen = std::collections::HashSet::new();
    for idx in 0..256i64 {
        let a = RingElem::from_coords(field, std::array::from_fn(|k| (idx >> k) & 1));
        let g = a.gray_map();
        assert_eq!(g.hamming_weight(), a.lee_weight());
        assert_eq!(RingElem::gray_inverse(&g), a);
        assert!(seen.insert(g.coords.to_vec()));
    }
    assert_eq!(seen.len(), 256);
}

proptest! {
    #[test]
    fn commutative_ring_laws(
        (a, b, c) in prop::sample::select(vec![2u32, 3, 5])
            .prop_flat_map(|p| (arb_elem(p), arb_elem(p), arb_elem(p)))
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn units_have_a_two_sided_inverse(a in arb_any()) {
        let one = RingElem::one(a.field());
        match a.inverse() {
            Some(b) => {
                prop_assert!(a.is_unit());
                prop_assert_eq!(a.mul(&b), one.clone());
                prop_assert_eq!(b.mul(&a), one);
            }
            None => {
                prop_assert!(!a.is_unit());
                // a non-unit lies in the maximal ideal, so a^4 = 0
                prop_assert!(a.pow(4).is_zero());
            }
        }
    }

    #[test]
    fn gray_map_is_linear_and_isometric(
        (a, b, c) in prop::sample::select(vec![2u32, 3, 5])
            .prop_flat_map(|p| (arb_elem(p), arb_elem(p), 0..p))
    ) {
        let field = a.field();
        let ga = a.gray_map().coords;
        let gb = b.gray_map().coords;
        let lhs = a.scale(c).add(&b).gray_map().coords;
        let rhs: [u32; 8] = std::array::from_fn(|k| field.add(field.mul(c, ga[k]), gb[k]));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.lee_weight(), a.gray_map().hamming_weight());
        let back = RingElem::gray_inverse(&GrayVector { field, coords: ga });
        prop_assert_eq!(back, a);
    }
}
