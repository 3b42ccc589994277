mod common;

use proptest::prelude::*;

use bandbraid::braid::BandWord;
use bandbraid::fdtc::is_trivial;
use bandbraid::garside::{all_simples, cycle_normal_form, is_left_weighted_pair, left_normal_form, summit_infimum};
use bandbraid::sample::{insert_relators, rng_for};
use common::{word, word_pair};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_is_sound(w in word(5, 12)) {
        let back = left_normal_form(&w).to_band_word();
        prop_assert_eq!(is_trivial(&back.concat(&w.inverse()).unwrap()), Ok(true));
    }

    #[test]
    fn normal_form_is_unique(w in word(5, 12), seed in any::<u64>(), k in 1usize..=3) {
        let v = insert_relators(&mut rng_for(seed, 0), &w, k);
        prop_assert_eq!(left_normal_form(&v), left_normal_form(&w));
    }

    #[test]
    fn factors_are_left_weighted(w in word(6, 16)) {
        let nf = left_normal_form(&w);
        for p in nf.factors().windows(2) {
            prop_assert!(is_left_weighted_pair(&p[0], &p[1]));
        }
        prop_assert!(nf.factors().iter().all(|x| !x.is_identity() && !x.is_delta()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycling_never_lowers_inf(w in word(6, 12)) {
        let nf = left_normal_form(&w);
        if nf.canonical_length() > 0 {
            let (c, _) = cycle_normal_form(&nf).unwrap();
            prop_assert!(c.inf() >= nf.inf());
        }
    }

    #[test]
    fn summit_inf_is_a_conjugacy_invariant((w, g) in word_pair(5, 8)) {
        let c = w.conjugate(&g).unwrap();
        prop_assert_eq!(summit_infimum(&c).summit_inf, summit_infimum(&w).summit_inf);
    }

    #[test]
    fn summit_witness_conjugates(w in word(5, 10)) {
        let s = summit_infimum(&w);
        let conj = w.conjugate(&s.witness).unwrap();
        prop_assert_eq!(left_normal_form(&conj), s.conjugate.clone());
        prop_assert_eq!(s.conjugate.inf(), s.summit_inf);
    }
}

#[test]
fn full_twist_is_central() {
    for n in 2..=6 {
        let d = BandWord::delta_power(n, n as i64).unwrap();
        for j in 2..=n {
            for i in 1..j {
                for e in [1, -1] {
                    let g = BandWord::from_triples(n, &[(i, j, e)]);
                    let c = d.concat(&g).unwrap().concat(&d.inverse()).unwrap().concat(&g.inverse()).unwrap();
                    assert!(left_normal_form(&c).is_identity(), "n={n} s({i},{j})^{e}");
                }
            }
        }
    }
}

#[test]
fn complement_reverses_the_lattice_order() {
    for n in 2..=6 {
        let simples = all_simples(n);
        for x in &simples {
            assert_eq!(x.complement().complement(), x.tau(1));
            for y in &simples {
                if x.refines(y) {
                    assert!(y.complement().refines(&x.complement()), "{x} <= {y}");
                }
            }
        }
    }
}
