mod common;

use proptest::prelude::*;

use bandbraid::braid::BandWord;
use bandbraid::fdtc::{dehornoy_compare, dehornoy_floor, fdtc_interval, integer, is_trivial, HandleReducer, OrderVerdict};
use bandbraid::garside::left_normal_form;
use common::{word, word_in, word_pair, word_triple};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn two_word_problem_solvers_agree(w in word(5, 12)) {
        prop_assert_eq!(is_trivial(&w).unwrap(), left_normal_form(&w).is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn order_is_antisymmetric((u, v) in word_pair(4, 10)) {
        let a = dehornoy_compare(&u, &v).unwrap();
        prop_assert_eq!(dehornoy_compare(&v, &u).unwrap(), a.reverse());
        prop_assert_eq!(a == OrderVerdict::Equal, left_normal_form(&u) == left_normal_form(&v));
    }

    #[test]
    fn order_is_transitive((u, v, w) in word_triple(4, 8)) {
        let mut t = [u, v, w];
        t.sort_by(|a, b| match dehornoy_compare(a, b).unwrap() {
            OrderVerdict::Less => std::cmp::Ordering::Less,
            OrderVerdict::Equal => std::cmp::Ordering::Equal,
            OrderVerdict::Greater => std::cmp::Ordering::Greater,
        });
        prop_assert!(dehornoy_compare(&t[0], &t[1]).unwrap() != OrderVerdict::Greater);
        prop_assert!(dehornoy_compare(&t[1], &t[2]).unwrap() != OrderVerdict::Greater);
        prop_assert!(dehornoy_compare(&t[0], &t[2]).unwrap() != OrderVerdict::Greater);
    }

    #[test]
    fn floor_is_quasi_conjugation_invariant((w, g) in word_pair(4, 10)) {
        let a = dehornoy_floor(&w).unwrap();
        let b = dehornoy_floor(&w.conjugate(&g).unwrap()).unwrap();
        prop_assert!((a - b).abs() <= 1, "{} vs {}", a, b);
    }

    #[test]
    fn full_twists_shift_the_floor(w in word(5, 10), k in -3i64..=3) {
        let n = w.strands();
        let shifted = w.concat(&BandWord::delta_power(n, n as i64 * k).unwrap()).unwrap();
        prop_assert_eq!(dehornoy_floor(&shifted).unwrap(), dehornoy_floor(&w).unwrap() + k);
    }

    #[test]
    fn interval_has_width_one(w in word(5, 10)) {
        let iv = fdtc_interval(&w).unwrap();
        prop_assert_eq!(iv.width(), Some(integer(1)));
        prop_assert!(!iv.lo_strict && !iv.hi_strict);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handle_reduction_stays_within_budget(w in (2usize..=6).prop_flat_map(|n| word_in(n, 40))) {
        prop_assert!(HandleReducer::default().is_trivial(&w).is_ok());
    }
}
