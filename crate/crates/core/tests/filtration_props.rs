mod common;

use proptest::prelude::*;
use vfilt_core::filtration::certificate_multiplier;
use vfilt_core::ring::monomials_up_to;
use vfilt_core::{
    associated_primes, check_filtration_property, filtration_members, integral_closure, irreducible_decomposition,
    minimal_primes, newton_member, power_membership_oracle, FiltrationKind, MonomialIdeal,
};

fn kind() -> impl Strategy<Value = FiltrationKind> {
    prop::sample::select(FiltrationKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn filtration_axioms(kind in kind(), l in common::ideal(3, 3, 2)) {
        let members = filtration_members(kind, &l, 6).unwrap();
        prop_assert!(members[0].is_unit());
        for k in 0..6 {
            prop_assert!(members[k + 1].is_subset(&members[k]).unwrap(), "I_{} not in I_{}", k + 1, k);
        }
        for k in 0..=3 {
            for r in 0..=3 {
                let prod = members[k].product(&members[r]).unwrap();
                prop_assert!(prod.is_subset(&members[k + r]).unwrap(), "I_{} I_{}", k, r);
            }
        }
        for k in 1..=6u32 {
            prop_assert!(l.power(k).unwrap().is_subset(&members[k as usize]).unwrap());
        }
    }

    #[test]
    fn division_property(kind in kind(), l in common::ideal(3, 3, 2), k in 1u32..=3) {
        let rep = check_filtration_property(kind, &l, k, 6).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn symbolic_min_is_intersection_of_prime_powers(l in common::ideal(4, 5, 1), h in 1u32..=3) {
        let comps = irreducible_decomposition(&l).unwrap();
        let powers: Vec<MonomialIdeal> = comps.iter().map(|q| q.ideal().power(h).unwrap()).collect();
        let expected = MonomialIdeal::intersect_all(powers.iter()).unwrap().unwrap();
        let member = filtration_members(FiltrationKind::SymbolicMin, &l, h).unwrap().pop().unwrap();
        prop_assert_eq!(member, expected);
    }

    #[test]
    fn symbolic_ass_inside_symbolic_min(l in common::ideal(3, 4, 3), k in 1u32..=3) {
        let ass = filtration_members(FiltrationKind::SymbolicAss, &l, k).unwrap().pop().unwrap();
        let min = filtration_members(FiltrationKind::SymbolicMin, &l, k).unwrap().pop().unwrap();
        prop_assert!(ass.is_subset(&min).unwrap());
        if associated_primes(&l).unwrap() == minimal_primes(&l).unwrap() {
            prop_assert_eq!(ass, min);
        }
    }

    #[test]
    fn closure_contains_and_is_idempotent(l in common::ideal(3, 4, 3)) {
        let c = integral_closure(&l).unwrap();
        prop_assert!(l.is_subset(&c).unwrap());
        prop_assert_eq!(integral_closure(&c).unwrap(), c.clone());
    }

    #[test]
    fn closure_agrees_with_pointwise_lp(l in common::ideal(3, 3, 3)) {
        let c = integral_closure(&l).unwrap();
        for g in monomials_up_to(l.ring(), 7) {
            let lp = newton_member(g.exponents(), l.gen_exponents()).unwrap().is_some();
            prop_assert_eq!(c.contains(&g).unwrap(), lp, "g = {}", g);
        }
    }

    #[test]
    fn newton_agrees_with_power_oracle((l, a) in common::ideal_and_monomial(3, 3, 3)) {
        match newton_member(a.exponents(), l.gen_exponents()).unwrap() {
            Some(cert) => {
                let m = certificate_multiplier(&cert).unwrap();
                let found = power_membership_oracle(&a, &l, m).unwrap();
                prop_assert!(found.is_some_and(|j| j <= m), "cert {} m {}", cert, m);
            }
            None => prop_assert_eq!(power_membership_oracle(&a, &l, 6).unwrap(), None),
        }
    }
}
