use nexus_core::arrangement::CentralArrangement3;
use nexus_core::cyclotomic::CycloProduct;
use nexus_core::le::{analyze_generic, candidate_forms, SliceSetup};
use nexus_core::local::{colength, Budget, Colength, Ideal};
use nexus_core::poly::{parse, Monomial, MultiPoly, RationalMatrix};
use nexus_core::{BigInt, BigRational};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn names() -> Vec<String> {
    NAMES.iter().map(|s| s.to_string()).collect()
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn multipoly(max_degree: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_degree, 3), rational()), 0..6).prop_map(
        |terms| {
            MultiPoly::from_terms(3, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))).unwrap()
        },
    )
}

fn cyclo_product() -> impl Strategy<Value = CycloProduct> {
    prop::collection::vec((1u64..=12, 0u64..=3), 0..5)
        .prop_map(|factors| CycloProduct::from_factors(factors).unwrap())
}

fn invertible_matrix() -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-2i64..=2, 9)
        .prop_map(|e| RationalMatrix::from_integers(3, &e).unwrap())
        .prop_filter("invertible", RationalMatrix::is_invertible)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse(f in multipoly(4)) {
        let text = f.display_with(&names()).to_string();
        prop_assert_eq!(parse(&text, &names()).unwrap(), f);
    }

    #[test]
    fn product_rule(f in multipoly(3), g in multipoly(3), i in 0usize..3) {
        let lhs = (&f * &g).partial(i).unwrap();
        let rhs = &(&f.partial(i).unwrap() * &g) + &(&f * &g.partial(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_change_round_trip(f in multipoly(3), m in invertible_matrix()) {
        let inverse = m.inverse().unwrap();
        let back = f.linear_change(&m).unwrap().linear_change(&inverse).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn gcd_divides_and_commutes(a in cyclo_product(), b in cyclo_product()) {
        let g = a.gcd(&b);
        prop_assert_eq!(&g, &b.gcd(&a));
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        prop_assert_eq!(a.gcd(&a), a.clone());
        prop_assert_eq!(a.mul(&b).gcd(&a), a);
    }

    #[test]
    fn expand_is_multiplicative(a in cyclo_product(), b in cyclo_product()) {
        prop_assert_eq!(a.mul(&b).expand(), a.expand().mul(&b.expand()));
        prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
        prop_assert_eq!(a.mul(&b).trace(), a.trace() + b.trace());
    }

    #[test]
    fn cyclo_text_round_trip(a in cyclo_product()) {
        prop_assert_eq!(a.to_string().parse::<CycloProduct>().unwrap(), a);
    }

    #[test]
    fn arrangement_order_does_not_matter(
        normals in prop::collection::vec(prop::array::uniform3(-3i64..=3), 2..7),
        seed in any::<u64>(),
    ) {
        let Ok(arr) = CentralArrangement3::from_integers(&normals) else {
            return Ok(());
        };
        let mut shuffled = normals.clone();
        let n = shuffled.len();
        for i in 0..n {
            let j = (seed.wrapping_mul(i as u64 + 7) % n as u64) as usize;
            shuffled.swap(i, j);
            shuffled[i] = shuffled[i].map(|v| -v);
        }
        let other = CentralArrangement3::from_integers(&shuffled).unwrap();
        prop_assert_eq!(arr.multiple_points(), other.multiple_points());
        prop_assert_eq!(arr.to_setup(), other.to_setup());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn milnor_number_survives_coordinate_change(a in 2u32..=4, b in 2u32..=4, c in 2u32..=3, m in invertible_matrix()) {
        let budget = Budget::default();
        let f = parse(&format!("x^{a}+y^{b}+z^{c}"), &names()).unwrap();
        let g = f.linear_change(&m).unwrap();
        let mu = |p: &MultiPoly| colength(&Ideal::new(3, p.gradient()).unwrap(), &budget).unwrap();
        let expected = u64::from((a - 1) * (b - 1) * (c - 1));
        prop_assert_eq!(mu(&f), Colength::Finite(expected));
        prop_assert_eq!(mu(&g), Colength::Finite(expected));
    }

    #[test]
    fn brieskorn_lambda0_is_milnor_number(a in 2u32..=3, b in 2u32..=3, c in 2u32..=4, seed in 0u64..4) {
        let f = parse(&format!("x^{a}+y^{b}+z^{c}"), &names()).unwrap();
        let (_, le) = analyze_generic(&f, seed, 16, &Budget::default()).unwrap();
        let (_, lambda0, lambda1, _) = le.values().unwrap();
        prop_assert_eq!(lambda0, u64::from((a - 1) * (b - 1) * (c - 1)));
        prop_assert_eq!(lambda1, 0);
    }
}

#[test]
fn lambda1_is_the_same_for_every_generic_form() {
    let budget = Budget::default();
    for text in ["x*y*z", "y^2-x^2*z", "x*y*(x+y)"] {
        let f = parse(text, &names()).unwrap();
        let mut seen = Vec::new();
        for form in candidate_forms(3, 5, 6) {
            let slice = SliceSetup::with_linear_form(&f, &form).unwrap();
            let le = slice.compute_all(&budget).unwrap();
            if le.genericity_ok && le.balanced {
                seen.push(le.values().unwrap());
            }
        }
        assert!(seen.len() >= 3, "{text}: too few generic forms");
        // mu0 and lambda0 may drop on special forms; lambda1 and the generic values may not
        let lambda1: Vec<u64> = seen.iter().map(|v| v.2).collect();
        assert!(lambda1.iter().all(|&l| l == lambda1[0]), "{text}: {seen:?}");
    }
}
