//! Property tests for the coefficient ring, PBW multiplication and the
//! structure maps.

use proptest::prelude::*;

use g2hopf::cli::parse_element;
use g2hopf::hopf::{antipode, coproduct, counit};
use g2hopf::pbw::{basis_of_degree, multiply, AlgebraElement, Monomial};
use g2hopf::{LaurentPoly, Scalar, Var};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2, any::<bool>()), 0..4).prop_map(
        |terms| {
            let mut p = LaurentPoly::zero();
            for (c, a, b, g) in terms {
                let mut t = &LaurentPoly::rs(a, b) * &LaurentPoly::constant(c);
                if g {
                    t = &t * &LaurentPoly::var(Var::Gamma1);
                }
                p = &p + &t;
            }
            p
        },
    )
}

/// Small PBW elements: up to two terms of e-degree at most `max_degree`.
fn element(max_degree: u32) -> impl Strategy<Value = AlgebraElement> {
    let term = (
        0..=max_degree,
        any::<prop::sample::Index>(),
        -1i32..=1,
        -1i32..=1,
        -2i32..=2,
        1i64..=3,
    );
    prop::collection::vec(term, 1..=2).prop_map(|terms| {
        let mut x = AlgebraElement::zero();
        for (d, idx, m, n, a, c) in terms {
            let basis = basis_of_degree(d);
            let mono = Monomial {
                x: basis[idx.index(basis.len())],
                k: [m, n],
            };
            let coef: Scalar = (&LaurentPoly::rs(a, -a) * &LaurentPoly::constant(c)).into();
            x = &x + &AlgebraElement::monomial(mono, coef);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_is_associative(x in element(2), y in element(2), z in element(2)) {
        prop_assert_eq!(multiply(&multiply(&x, &y), &z), multiply(&x, &multiply(&y, &z)));
    }

    #[test]
    fn structure_maps_respect_products(x in element(2), y in element(2)) {
        let xy = multiply(&x, &y);
        prop_assert_eq!(coproduct(&xy), coproduct(&x).multiply(&coproduct(&y)));
        prop_assert_eq!(counit(&xy), &counit(&x) * &counit(&y));
        prop_assert_eq!(antipode(&xy), multiply(&antipode(&y), &antipode(&x)));
    }

    #[test]
    fn printed_elements_parse_back(x in element(3)) {
        prop_assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }
}
