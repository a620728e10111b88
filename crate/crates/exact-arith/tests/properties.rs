mod common;

use common::{brute_force_constant_term, hull_2d, quotient_exists};
use lgm_arith::*;
use proptest::prelude::*;

fn poly_strategy(nvars: usize, max_terms: usize, emin: i32, emax: i32) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(
        (prop::collection::vec(emin..=emax, nvars), -3i64..=3),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
        let v = VariableSet::new(names).unwrap();
        LaurentPolynomial::from_terms(&v, terms.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))))
    })
}

fn triple(nvars: usize) -> impl Strategy<Value = (LaurentPolynomial, LaurentPolynomial, LaurentPolynomial)> {
    (
        poly_strategy(nvars, 4, -2, 2),
        poly_strategy(nvars, 4, -2, 2),
        poly_strategy(nvars, 4, -2, 2),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_text_is_idempotent(f in poly_strategy(3, 6, -3, 3)) {
        let text = f.to_text();
        let g = parse_laurent(&text, f.vars()).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_text(), text);
        let j = f.to_json().to_string();
        prop_assert_eq!(LaurentPolynomial::from_json_str(&j).unwrap(), f);
    }

    #[test]
    fn distributive((a, b, c) in triple(3)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn power_law(a in poly_strategy(2, 3, -1, 1), m in 0u32..3, n in 0u32..3) {
        prop_assert_eq!(a.pow(m + n), &a.pow(m) * &a.pow(n));
    }

    #[test]
    fn division_of_products_succeeds(a in poly_strategy(3, 3, -1, 2), b in poly_strategy(3, 3, -1, 2)) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).exact_divide(&b).unwrap();
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn division_is_sound(num in poly_strategy(3, 4, 0, 2), den in poly_strategy(3, 3, 0, 2)) {
        prop_assume!(!den.is_zero());
        match num.exact_divide(&den).unwrap() {
            Some(q) => prop_assert_eq!(&q * &den, num),
            None => prop_assert!(!quotient_exists(&num, &den)),
        }
    }

    #[test]
    fn constant_term_matches_expansion(f in poly_strategy(3, 6, -2, 2), j in 0u32..=6) {
        let fast = constant_term(&f, j);
        prop_assert_eq!(&fast, &constant_term_naive(&f, j));
        let seq = constant_terms(&f, j);
        prop_assert_eq!(&seq[j as usize], &fast);
    }

    #[test]
    fn constant_term_matches_enumeration(f in poly_strategy(2, 4, -2, 2), j in 0u32..=4) {
        prop_assert_eq!(constant_term(&f, j), brute_force_constant_term(&f, j));
    }

    #[test]
    fn newton_matches_planar_hull(f in poly_strategy(2, 8, -3, 3)) {
        prop_assume!(!f.is_zero());
        let pts = support(&f);
        let hull = hull_2d(&pts);
        prop_assume!(hull.len() >= 3);
        prop_assert_eq!(newton_polytope(&f).unwrap().vertices, hull);
    }

    #[test]
    fn substitution_of_identity_and_inverse(f in poly_strategy(2, 4, -2, 2)) {
        // x0 -> 1/x0 applied twice is the identity.
        let v = f.vars().clone();
        let mut b = Bindings::new();
        b.insert("x0".into(), RationalFunction::var(&v, "x0").unwrap().inv().unwrap());
        let once = RationalFunction::from(f.clone()).substitute(&b, &v).unwrap();
        let twice = once.substitute(&b, &v).unwrap();
        prop_assert_eq!(twice.to_laurent().unwrap(), f);
    }
}
