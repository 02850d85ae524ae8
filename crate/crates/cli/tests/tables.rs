use ringcodes::ring::{Monomial, RingElem};
use ringcodes::rpoly::RPoly;
use ringcodes_cli::tables::{self, Verdict};
use ringcodes_cli::Input;

fn code(p: u32, n: usize, gens: &str) -> ringcodes::code::CyclicCode {
    Input::new(p, n, vec![gens.into()]).unwrap().code().unwrap().1
}

#[test]
fn free_ternary_code_has_a_lee_weight_three_word() {
    // printed as [24,16,4]
    let c = code(3, 3, "g+u+v+uv+w+uw+vw+uvw");
    let fl = c.field();
    let a = RingElem::from_coords(fl, [1, 1, 1, 2, 1, 2, 2, 1]);
    let b = RingElem::from_coords(fl, [2, 1, 1, 2, 1, 2, 2, 1]);
    let word = RPoly::constant(&a, 3).add(&RPoly::constant(&b, 3).shift(1));
    assert!(c.contains(&word));
    assert_eq!(word.lee_weight(), 3);
    assert_eq!(c.dim(), 16);
}

#[test]
fn dimensions_that_differ_from_the_print() {
    // the extra dimension comes from products with u, v and x that the
    // printed counts leave out
    assert_eq!(code(2, 4, "uwg^3+vwg^2+uvwg, uvwg^2").dim(), 4);
    let c = code(5, 5, "uvg^4+2uwg^3+vwg^4+uvwg^2, uwg^4+vwg^4+4uvwg^2");
    assert_eq!(c.dim(), 5);
    let uvw_g3 = RPoly::from_component(Monomial::UVW, &ringcodes::gfpoly::x_minus_one_pow(c.field(), 3), 5);
    assert!(c.contains(&uvw_g3));
    assert_eq!(code(3, 3, "g^2+ug+uv+uw+vw").dim(), 10);
}

#[test]
fn rows_parse_and_skips_are_reported() {
    let rows = tables::parse_rows(tables::EXPECTED).unwrap();
    assert_eq!(rows.len(), 50);
    let (results, report) = tables::run(tables::EXPECTED, Default::default(), Some("T4")).unwrap();
    assert_eq!(results.iter().filter(|r| r.verdict == Verdict::Skipped).count(), 2);
    assert!(report.budget_exceeded);
}
