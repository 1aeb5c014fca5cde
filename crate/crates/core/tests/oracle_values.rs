//! Values computed independently with sympy and frozen here.

use hedge_iep::lambda::cubic_family;
use hedge_iep::mpoly::MPoly;
use hedge_iep::rigid::{double_root_exclusion, simplify_resultant};
use hedge_iep::scalar::{parse_rat, rat};
use num_rational::BigRational;

fn q(s: &str) -> BigRational {
    parse_rat(s).unwrap()
}

fn qs(v: &[&str]) -> Vec<BigRational> {
    v.iter().map(|s| q(s)).collect()
}

#[test]
fn cubic_family_coefficients() {
    let cases = [
        ("2/5", ["2/5", "40/63", "1/3", "1/9", "116/315"], ["2/5", "179/315", "2/5", "40/63"], ["74/4725", "22/189", "4/35"]),
        ("1/2", ["1/2", "26/45", "1/3", "1/9", "37/90"], ["1/2", "37/90", "1/2", "26/45"], ["7/540", "14/135", "2/15"]),
    ];
    for (x, lam, a, b) in cases {
        let l = cubic_family(&q(x));
        assert_eq!(l.values().to_vec(), qs(&lam));
        let (ga, gb) = l.abc(4).unwrap();
        assert_eq!(ga, qs(&a), "x = {x}");
        assert_eq!(gb, qs(&b), "x = {x}");
    }
}

#[test]
fn cubic_family_level_roots() {
    let l = cubic_family(&rat(2, 5));
    let r3 = l.remainder_poly(3).unwrap();
    assert!(r3.eval(&rat(6, 7)) == rat(0, 1));
    let r4 = l.remainder_poly(4).unwrap();
    assert!(r4.eval(&rat(0, 1)) == rat(0, 1) && r4.eval(&rat(1, 1)) == rat(0, 1));
    let l = cubic_family(&rat(1, 2));
    assert!(l.remainder_poly(3).unwrap().eval(&rat(4, 5)) == rat(0, 1));
}

fn removed_powers(a: usize, b: usize) -> Vec<(String, usize)> {
    let mut v = simplify_resultant(a, b).unwrap().removed;
    v.sort();
    v
}

fn frozen(list: &[(&str, usize)]) -> Vec<(String, usize)> {
    let mut v: Vec<(String, usize)> = list.iter().map(|(s, k)| (s.to_string(), *k)).collect();
    v.sort();
    v
}

#[test]
fn resultant_trivial_factor_powers() {
    const A1B4: &str = "alpha1 - beta4";
    const A1B2: &str = "alpha1 - beta2";
    const A2B2: &str = "alpha2 - beta2";
    const A2B3: &str = "alpha2 - beta3";
    const B2B3: &str = "beta2 - beta3";
    const B3B4: &str = "beta3 - beta4";
    const SUM: &str = "alpha2 + beta2 - beta3 - beta4";
    let table: [((usize, usize), Vec<(&str, usize)>); 8] = [
        ((3, 5), vec![(A1B4, 1), (B3B4, 1), (B2B3, 1), (SUM, 1)]),
        ((3, 6), vec![(A1B4, 1), (B3B4, 1), (A1B2, 1), (SUM, 1), (A2B3, 1)]),
        ((3, 7), vec![(A1B4, 1), (B3B4, 1), (B2B3, 1), (A2B3, 1)]),
        ((4, 5), vec![(B3B4, 1), (A1B2, 1), (A1B4, 2), (A2B2, 2), (SUM, 1)]),
        ((4, 6), vec![(A1B4, 1), (B3B4, 2), (A2B2, 2), (A1B2, 3), (SUM, 1), (A2B3, 1)]),
        ((4, 7), vec![(B3B4, 1), (A1B4, 2), (A2B2, 2), (B2B3, 2), (A1B2, 3), (SUM, 1), (A2B3, 2)]),
        ((4, 8), vec![(A1B4, 2), (B3B4, 2), (A2B2, 2), (A1B2, 3), (SUM, 2)]),
        ((4, 9), vec![(A1B4, 1), (B3B4, 1), (A2B2, 2), (A1B2, 3), (A2B3, 1)]),
    ];
    for ((a, b), want) in table {
        assert_eq!(removed_powers(a, b), frozen(&want), "pair ({a}, {b})");
    }
    assert_eq!(simplify_resultant(4, 8).unwrap().reduced.total_degree(), 5);
    assert_eq!(simplify_resultant(4, 9).unwrap().reduced.total_degree(), 11);
}

fn mpoly(terms: &[(i64, [u32; 3])]) -> MPoly {
    let mut p = MPoly::int(0);
    for &(c, e) in terms {
        let mut m = MPoly::int(c);
        for (var, &k) in e.iter().enumerate() {
            for _ in 0..k {
                m = &m * &MPoly::var(var);
            }
        }
        p = p + m;
    }
    p
}

#[test]
fn r48_matches_oracle_up_to_sign() {
    let want = mpoly(&[
        (1, [1, 2, 2]), (6, [1, 2, 1]), (9, [1, 2, 0]), (-2, [1, 1, 3]), (-8, [1, 1, 2]), (-6, [1, 1, 1]),
        (1, [1, 0, 4]), (2, [1, 0, 3]), (1, [1, 0, 2]), (-4, [1, 0, 0]), (1, [0, 2, 2]), (2, [0, 2, 1]),
        (-3, [0, 2, 0]), (-2, [0, 1, 3]), (-4, [0, 1, 2]), (10, [0, 1, 1]), (12, [0, 1, 0]), (1, [0, 0, 4]),
        (2, [0, 0, 3]), (-11, [0, 0, 2]), (-12, [0, 0, 1]), (4, [0, 0, 0]),
    ]);
    let got = simplify_resultant(4, 8).unwrap().reduced;
    assert!(got == want || got == want.scale(&rat(-1, 1)));
}

#[test]
fn double_root_entry_ratio_is_one() {
    assert_eq!(double_root_exclusion().unwrap().ratio, rat(1, 1));
}
