use num_bigint::BigInt;
use proptest::prelude::*;
use strong_edge::poly::*;

const VARS: usize = 6;

fn arb_product() -> impl Strategy<Value = FactorProduct> {
    proptest::collection::vec((0..VARS, 1..VARS), 0..=8).prop_map(|raw| {
        let factors = raw.into_iter().map(|(a, d)| (a, (a + d) % VARS)).collect();
        FactorProduct::new(VARS, factors).unwrap()
    })
}

/// A product with a top-degree monomial: each factor contributes one variable.
fn arb_product_with_top_monomial() -> impl Strategy<Value = (FactorProduct, Monomial)> {
    arb_product().prop_flat_map(|p| {
        proptest::collection::vec(any::<bool>(), p.len()).prop_map(move |pick| {
            let mut e = vec![0u32; VARS];
            for (&(a, b), first) in p.factors().iter().zip(pick) {
                e[if first { a } else { b }] += 1;
            }
            (p.clone(), Monomial::from_dense(&e))
        })
    })
}

fn arb_monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, VARS).prop_map(|e| Monomial::from_dense(&e))
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(3), -6i64..=6), 0..8)
        .prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn arb_caps() -> impl Strategy<Value = CapVector> {
    proptest::collection::vec(proptest::option::of(0u32..4), VARS).prop_map(CapVector::from_caps)
}

proptest! {
    #[test]
    fn capped_expansion_is_sound(p in arb_product(), caps in arb_caps()) {
        let full = p.expand_naive();
        let capped = p.expand_capped(&caps);
        for (m, c) in capped.terms() {
            prop_assert!(caps.admits(m));
            prop_assert_eq!(c, &full.coefficient(m));
        }
        for (m, c) in full.terms() {
            if caps.admits(m) {
                prop_assert_eq!(&capped.coefficient(m), c);
            }
        }
    }

    #[test]
    fn engine_matches_naive(p in arb_product()) {
        prop_assert_eq!(p.expand(), p.expand_naive());
    }

    #[test]
    fn homogeneous_of_factor_degree(p in arb_product()) {
        let e = p.expand();
        prop_assert!(e.is_homogeneous());
        if !e.is_zero() {
            prop_assert_eq!(e.degree(), Some(p.len() as u32));
        }
    }

    #[test]
    fn flipping_one_factor_negates(p in arb_product(), pick in any::<prop::sample::Index>()) {
        prop_assume!(!p.is_empty());
        let i = pick.index(p.len());
        prop_assert_eq!(p.with_flipped(i).expand(), -p.expand());
    }

    #[test]
    fn eta_is_linear(a in -5i64..=5, b in -5i64..=5, p in arb_poly(), q in arb_poly(), j in arb_monomial(2)) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let lhs = (&p.scale(&a) + &q.scale(&b)).eta_partial(&j);
        let rhs = &p.eta_partial(&j).scale(&a) + &q.eta_partial(&j).scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_matches_derivative_oracle(p in arb_poly(), j in arb_monomial(3)) {
        prop_assert_eq!(p.eta_partial(&j), p.eta_derivative_oracle(&j));
    }

    #[test]
    fn eta_of_products_matches_oracle(p in arb_product(), j in arb_monomial(2)) {
        let naive = p.expand_naive();
        prop_assert_eq!(p.eta(&j), naive.eta_partial(&j));
        prop_assert_eq!(naive.eta_partial(&j), naive.eta_derivative_oracle(&j));
    }

    #[test]
    fn full_degree_eta_is_constant((p, j) in arb_product_with_top_monomial()) {
        prop_assert_eq!(j.degree() as usize, p.len());
        let expanded = p.expand();
        let eta = expanded.eta_partial(&j);
        prop_assert_eq!(eta.as_constant(), Some(expanded.coefficient(&j)));
        prop_assert_eq!(p.coefficient(&j), expanded.coefficient(&j));
    }

    #[test]
    fn debug_format_round_trip(p in arb_poly()) {
        let back: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn spec_degree_examples() {
    let s = strong_edge::certifier::build_p1();
    assert_eq!(s.product.degree(), 45);
    let capped = s.product.expand_capped(&CapVector::from_monomial(&s.j, 12));
    assert_eq!(capped.degree(), Some(45));
    assert!(capped.is_homogeneous());
    let q = &Polynomial::var(1) + &(&Polynomial::var(2) * &Polynomial::var(2));
    assert_eq!(q.degree(), Some(2));
    assert!(!q.is_homogeneous());
    let c = Polynomial::constant(5);
    assert_eq!(c.degree(), Some(0));
    assert!(c.is_homogeneous());
}
