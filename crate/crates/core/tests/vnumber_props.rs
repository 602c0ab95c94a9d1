mod common;

use proptest::prelude::*;
use vfilt_core::{associated_primes, brute_force_local_v, local_v, local_v_verified, v_number, Method};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn local_v_matches_enumeration(l in common::ideal(3, 4, 3)) {
        for p in associated_primes(&l).unwrap() {
            let fast = local_v(&l, &p).unwrap();
            let cap = fast.degree as u32;
            let slow = brute_force_local_v(&l, &p, cap).unwrap().expect("a witness exists at the candidate degree");
            prop_assert_eq!(slow.degree, fast.degree);
            prop_assert_eq!(slow.method, Method::BruteForce);
            if cap > 0 {
                prop_assert!(brute_force_local_v(&l, &p, cap - 1).unwrap().is_none());
            }
            prop_assert_eq!(local_v_verified(&l, &p).unwrap(), fast.clone());
            prop_assert_eq!(l.colon_monomial(&fast.witness).unwrap(), p.as_ideal());
        }
    }

    #[test]
    fn global_v_is_min_of_local(l in common::ideal(3, 4, 3)) {
        let global = v_number(&l).unwrap();
        let locals: Vec<u64> = associated_primes(&l).unwrap().iter().map(|p| local_v(&l, p).unwrap().degree).collect();
        prop_assert_eq!(Some(global.degree), locals.iter().copied().min());
    }
}
