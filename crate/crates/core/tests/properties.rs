use proptest::prelude::*;
use rookmon::algebra::{multiply, power, root, transpose};
use rookmon::census;
use rookmon::{classify, nilpotency_index, ones_count, Ambient, Classification, Element, Triplet};

const MAX_N: i64 = 12;

/// A dimension together with an element of `M_n` (zero included).
fn element_in() -> impl Strategy<Value = (i64, Element)> {
    (2..=MAX_N).prop_flat_map(|n| (Just(n), member(n)))
}

fn member(n: i64) -> impl Strategy<Value = Element> {
    let nonzero = (-(n - 1)..=(n - 1))
        .prop_flat_map(move |d| {
            let lo = 1 - d.min(0);
            let hi = n - d.max(0);
            (Just(d), lo..=hi).prop_flat_map(move |(d, k)| (Just(d), Just(k), k..=hi))
        })
        .prop_map(move |(d, k, m)| Element::new(d, k, m, Ambient::finite(n).unwrap()).unwrap());
    prop_oneof![1 => Just(Element::Zero), 12 => nonzero]
}

fn triple_in() -> impl Strategy<Value = (i64, Element, Element, Element)> {
    (2..=MAX_N).prop_flat_map(|n| (Just(n), member(n), member(n), member(n)))
}

fn pair_in() -> impl Strategy<Value = (i64, Element, Element)> {
    (2..=MAX_N).prop_flat_map(|n| (Just(n), member(n), member(n)))
}

fn fin(n: i64) -> Ambient {
    Ambient::finite(n).unwrap()
}

proptest! {
    #[test]
    fn products_stay_in_the_monoid((n, x, y) in pair_in()) {
        prop_assert!(multiply(x, y).is_valid_in(fin(n)));
    }

    #[test]
    fn multiplication_is_associative((_n, x, y, z) in triple_in()) {
        prop_assert_eq!(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    }

    #[test]
    fn identity_and_zero((n, x) in element_in()) {
        let one = Element::NonZero(fin(n).identity().unwrap());
        prop_assert_eq!(multiply(one, x), x);
        prop_assert_eq!(multiply(x, one), x);
        prop_assert_eq!(multiply(Element::Zero, x), Element::Zero);
        prop_assert_eq!(multiply(x, Element::Zero), Element::Zero);
    }

    #[test]
    fn power_is_repeated_multiplication((_n, x) in element_in(), j in 1u32..8) {
        let mut acc = x;
        for _ in 1..j {
            acc = multiply(acc, x);
        }
        prop_assert_eq!(power(x, j), acc);
    }

    #[test]
    fn ones_never_increase_along_products((_n, x, y) in pair_in()) {
        prop_assert!(ones_count(multiply(x, y)) <= ones_count(x).min(ones_count(y)));
    }

    #[test]
    fn ones_of_a_power((_n, x) in element_in(), j in 1u32..8) {
        if let Element::NonZero(t) = x {
            let expected = (t.m() - t.k() + 1 - i64::from(j - 1) * t.d().abs()).max(0);
            prop_assert_eq!(ones_count(power(x, j)), expected);
        }
    }

    #[test]
    fn index_only_depends_on_the_block_and_slope((n, x) in element_in(), shift in 0i64..6) {
        if let Classification::Nilpotent { index } = classify(x, fin(n)) {
            let t = x.triplet().unwrap();
            let moved = Triplet::new(t.d(), t.k() + shift, t.m() + shift, Ambient::Unbounded).unwrap();
            prop_assert_eq!(nilpotency_index(moved), index);
            prop_assert_eq!(power(x, index as u32), Element::Zero);
            prop_assert_ne!(power(x, index as u32 - 1), Element::Zero);
        }
    }

    #[test]
    fn transpose_is_an_involutive_inverse((n, x, y) in pair_in()) {
        let xt = transpose(x);
        prop_assert!(xt.is_valid_in(fin(n)));
        prop_assert_eq!(transpose(xt), x);
        prop_assert_eq!(multiply(multiply(x, xt), x), x);
        prop_assert_eq!(multiply(multiply(xt, x), xt), xt);
        prop_assert_eq!(transpose(multiply(x, y)), multiply(transpose(y), xt));
    }

    #[test]
    fn root_inverts_power((n, x) in element_in(), j in 1u32..6) {
        if let Element::NonZero(t) = x {
            let p = power(x, j);
            if let Element::NonZero(pt) = p {
                let r = root(pt, j).map(Element::NonZero);
                prop_assert_eq!(r, Some(x));
                prop_assert!(x.is_valid_in(fin(n)));
            }
            match root(t, j) {
                Some(y) => prop_assert_eq!(power(Element::NonZero(y), j), x),
                None => prop_assert!(t.d() % i64::from(j) != 0),
            }
        }
    }

    #[test]
    fn text_and_json_round_trip((n, x) in element_in()) {
        prop_assert_eq!(Element::parse_in(&x.to_string(), fin(n)).unwrap(), x);
        prop_assert_eq!(Element::parse_in(&x.to_json(), fin(n)).unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), x);
    }

    #[test]
    fn conjectured_census_is_integral(n in 2i64..2000) {
        let psi = census::psi_conjecture(n).unwrap();
        let s = census::semigroup_order(n);
        prop_assert!(psi > 0 && psi <= s * s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identity_free_pairs_match_the_ratio_numerator(n in 2i64..12) {
        let one = Ambient::finite(n).unwrap().identity().unwrap();
        let rest: Vec<Triplet> = rookmon::enumeration::nonzero_elements(n).filter(|&t| t != one).collect();
        let hits = rest
            .iter()
            .flat_map(|&x| rest.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| rookmon::algebra::triplets_nonzero_product(x, y))
            .count() as i128;
        let s = census::semigroup_order(n);
        let r = census::ratio(n).unwrap();
        prop_assert_eq!(census::Rational::new(hits, (s - 1) * (s - 1)), r);
    }
}
