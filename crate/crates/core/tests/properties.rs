//! Property tests for the exact arithmetic layer and the polynomial actions.
//! Everything here is an exact equality; there are no tolerances.

use num::BigInt;
use proptest::prelude::*;

use relequiv_core::exact::{parse_cyclotomic, Cyclotomic, Rational};
use relequiv_core::poly::{act_on_poly, Poly};
use relequiv_core::presets;
use relequiv_core::reynolds::average_over_k;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Random cyclotomic built as a short sum of rational multiples of roots of
/// unity, over a small set of conductors.
fn cyclotomic_strategy() -> impl Strategy<Value = Cyclotomic> {
    let conductor = prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]);
    conductor.prop_flat_map(|n| {
        prop::collection::vec((rational_strategy(), 0i64..n as i64), 1..=3).prop_map(
            move |terms| {
                let mut acc = Cyclotomic::zero();
                for (r, k) in terms {
                    let term = Cyclotomic::root_of_unity(k, n).scale_rational(&r);
                    acc = acc.add(&term);
                }
                acc
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyclotomic_strategy(), b in cyclotomic_strategy(), c in cyclotomic_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Cyclotomic::zero());
    }

    #[test]
    fn inverses_and_division(a in cyclotomic_strategy()) {
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(a.mul(&inv).is_one());
            prop_assert!(a.div(&a).unwrap().is_one());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn conjugation_is_a_ring_automorphism(a in cyclotomic_strategy(), b in cyclotomic_strategy()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn conductor_unification_preserves_values(a in cyclotomic_strategy(), b in cyclotomic_strategy()) {
        // adding zero at another conductor is the identity
        let zero = b.sub(&b);
        prop_assert_eq!(a.add(&zero), a.clone());
        // equality is stable under the detour through a common field
        let via = a.add(&b).sub(&b);
        prop_assert_eq!(via, a.clone());
    }

    #[test]
    fn display_parse_roundtrip(a in cyclotomic_strategy()) {
        let printed = a.to_string();
        let reparsed = parse_cyclotomic(&printed).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn root_of_unity_power_sums(n in 1u32..=10, k in 0u32..=10) {
        let mut sum = Cyclotomic::zero();
        for i in 0..n {
            sum = sum.add(&Cyclotomic::root_of_unity((i * k) as i64, n));
        }
        let expected = if k % n == 0 { n as i64 } else { 0 };
        prop_assert_eq!(sum, Cyclotomic::from_integer(expected));
    }
}

/// Random polynomial in the four paper variables with small coefficients.
fn poly4_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=2, 4),
            -3i64..=3,
            0i64..3,
        ),
        1..=4,
    )
    .prop_map(|terms| {
        let mut acc = Poly::zero(4);
        for (exps, c, k) in terms {
            let coeff =
                Cyclotomic::from_integer(c).mul(&Cyclotomic::root_of_unity(k, 3));
            acc = acc.add(&Poly::monomial(relequiv_core::poly::Mono(exps), coeff));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_is_linear_and_degree_preserving(f in poly4_strategy(), g in poly4_strategy(), idx in 0usize..9) {
        let group = presets::z3xz3();
        let lhs = act_on_poly(&group, idx, &f.add(&g));
        let rhs = act_on_poly(&group, idx, &f).add(&act_on_poly(&group, idx, &g));
        prop_assert_eq!(lhs, rhs);
        for d in 0..=8u32 {
            let part = f.homogeneous_component(d);
            let acted = act_on_poly(&group, idx, &part);
            if let Some(deg) = acted.homogeneous_degree() {
                prop_assert_eq!(deg, d);
            } else {
                prop_assert!(acted.is_zero());
            }
        }
    }

    #[test]
    fn homogeneous_components_reassemble(f in poly4_strategy()) {
        let mut sum = Poly::zero(4);
        for d in 0..=8u32 {
            sum = sum.add(&f.homogeneous_component(d));
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn kernel_average_is_kernel_fixed(f in poly4_strategy()) {
        let group = presets::z3xz3();
        let avg = average_over_k(&group, &f);
        prop_assert!(relequiv_core::reynolds::is_k_fixed(&group, &avg));
        // averaging is idempotent
        prop_assert_eq!(average_over_k(&group, &avg), avg);
    }
}
