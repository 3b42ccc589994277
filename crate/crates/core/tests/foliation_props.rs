mod common;

use proptest::prelude::*;

use bandbraid::braid::Sign;
use bandbraid::foliation::{
    ab_stabilization, coherence_run, euler_and_sl, extended_graph, from_bennequin_surface,
    key_lemma_check, sample_complex, stabilize_all_ab, CoherenceEvent, CoherenceState, RegionType,
    SampleProfile, Vertex,
};
use bandbraid::surface::build_surface;
use common::word;

fn event() -> impl Strategy<Value = CoherenceEvent> {
    prop::sample::select(CoherenceEvent::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn counts_of_the_bennequin_foliation(w in word(6, 14)) {
        let c = from_bennequin_surface(&build_surface(&w));
        let n = w.strands() as i64;
        prop_assert_eq!(euler_and_sl(&c).unwrap(), (n - w.len() as i64, w.self_linking()));
    }

    #[test]
    fn extended_graph_counts(seed in any::<u64>(), i in 0u64..1000) {
        let c = sample_complex(seed, i, SampleProfile::General);
        let g = extended_graph(&c).unwrap();
        for &f in &g.fake {
            prop_assert_eq!(g.valence(Vertex::Fake(f)), 1);
        }
        let negative = c
            .regions
            .iter()
            .filter(|r| {
                let h = c.region_kind(r).unwrap();
                h.sign == Sign::Negative && matches!(h.kind, RegionType::Ab | RegionType::Bb | RegionType::Bc)
            })
            .count();
        prop_assert_eq!(g.edges.len(), negative);
    }

    #[test]
    fn key_lemma_on_samples(seed in any::<u64>(), i in 0u64..1000) {
        let c = sample_complex(seed, i, SampleProfile::KeyLemma);
        prop_assert!(key_lemma_check(&c).unwrap().holds);
    }

    #[test]
    fn ab_stabilization_invariants(seed in any::<u64>(), i in 0u64..1000) {
        let c = sample_complex(seed, i, SampleProfile::AbOnly);
        let (chi, _) = euler_and_sl(&c).unwrap();
        let k = c.counts();
        for id in c.hyperbolics.iter().filter(|(_, h)| h.kind == RegionType::Ab).map(|(id, _)| *id) {
            let s = ab_stabilization(&c, id).unwrap();
            let k2 = s.complex.counts();
            prop_assert_eq!(euler_and_sl(&s.complex).unwrap().0, chi);
            prop_assert_eq!(k2.e_neg + 1, k.e_neg);
            prop_assert_eq!(k2.h_pos + k2.h_neg + 1, k.h_pos + k.h_neg);
        }
        let (end, _) = stabilize_all_ab(&c).unwrap();
        prop_assert!(end.is_bennequin());
    }

    #[test]
    fn coherence_bookkeeping(c0 in 0u64..4, i0 in 0u64..4, events in prop::collection::vec(event(), 0..24)) {
        let mut s = CoherenceState { coherent: c0, incoherent: i0 };
        let mut legal = Vec::new();
        for (step, e) in events.into_iter().enumerate() {
            if let Ok(next) = s.apply(e, step) {
                let (dc, di) = e.delta();
                prop_assert_eq!(next.coherent as i64 - s.coherent as i64, dc);
                prop_assert_eq!(next.incoherent as i64 - s.incoherent as i64, di);
                prop_assert!(next.incoherent >= s.incoherent);
                if e != CoherenceEvent::AcSplit && e != CoherenceEvent::Aa {
                    prop_assert!(next.coherent <= s.coherent);
                }
                if e == CoherenceEvent::CcSplitCoherent {
                    prop_assert_eq!(next.coherent, s.coherent);
                }
                s = next;
                legal.push(e);
            }
        }
        let run = coherence_run(CoherenceState { coherent: c0, incoherent: i0 }, &legal).unwrap();
        prop_assert!(run.incoherent_monotone);
        prop_assert_eq!(run.final_state(), s);
        if legal.contains(&CoherenceEvent::AcSplit) {
            prop_assert!(!run.closure_holds());
        }
    }
}
