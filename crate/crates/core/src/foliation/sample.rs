use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::complex::{validate_complex, Elliptic, FoliationComplex, Hyperbolic, Region, RegionType};
use crate::braid::Sign;
use crate::sample::rng_for;

pub const MAX_ELLIPTIC: usize = 8;
pub const MAX_HYPERBOLIC: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleProfile {
    /// Any valid complex.
    General,
    /// `e₋ ≥ 1`, `h₋ ≥ e₋`, minimal genus asserted: the setting of the
    /// valence lemma.
    KeyLemma,
    /// Only aa- and ab-tiles, every negative elliptic point on at least one
    /// ab-tile.
    AbOnly,
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn pick<R: Rng>(rng: &mut R, pool: &[u32], k: usize) -> BTreeSet<u32> {
    pool.choose_multiple(rng, k).copied().collect()
}

fn draw<R: Rng>(rng: &mut R, profile: SampleProfile) -> FoliationComplex {
    let min_neg = usize::from(profile != SampleProfile::General);
    let e_pos = rng.gen_range(1..=MAX_ELLIPTIC - min_neg);
    let e_neg = rng.gen_range(min_neg..=MAX_ELLIPTIC - e_pos);
    let binding_count = rng.gen_range(1..=2);
    let bindings: Vec<String> = (0..binding_count).map(|b| format!("C{b}")).collect();

    let mut c = FoliationComplex {
        bindings: bindings.iter().cloned().collect(),
        minimal_genus: profile == SampleProfile::KeyLemma || rng.gen_bool(0.5),
        essential: rng.gen_bool(0.5),
        ..Default::default()
    };
    let positives: Vec<u32> = (1..=e_pos as u32).collect();
    let negatives: Vec<u32> = (e_pos as u32 + 1..=(e_pos + e_neg) as u32).collect();
    for &id in &positives {
        c.elliptics.insert(
            id,
            Elliptic {
                sign: Sign::Positive,
                binding: bindings.choose(rng).expect("non-empty").clone(),
            },
        );
    }
    for &id in &negatives {
        c.elliptics.insert(
            id,
            Elliptic {
                sign: Sign::Negative,
                binding: bindings.choose(rng).expect("non-empty").clone(),
            },
        );
    }

    let mut kinds: Vec<RegionType> = match profile {
        SampleProfile::AbOnly => vec![RegionType::Aa, RegionType::Ab],
        _ => RegionType::ALL.to_vec(),
    };
    kinds.retain(|k| k.negative_corners() <= e_neg);

    let h_min = match profile {
        SampleProfile::AbOnly => e_neg,
        SampleProfile::KeyLemma => e_neg,
        SampleProfile::General => 0,
    };
    let h = rng.gen_range(h_min..=MAX_HYPERBOLIC.max(h_min));
    for k in 0..h {
        let id = k as u32 + 1;
        let (kind, forced_negative) = if profile == SampleProfile::AbOnly && k < e_neg {
            (RegionType::Ab, Some(negatives[k]))
        } else {
            (*kinds.choose(rng).expect("aa is always allowed"), None)
        };
        let sign = if profile == SampleProfile::KeyLemma && k < e_neg {
            Sign::Negative
        } else {
            random_sign(rng)
        };
        let mut corners = match forced_negative {
            Some(v) => BTreeSet::from([v]),
            None => pick(rng, &negatives, kind.negative_corners()),
        };
        if kind.needs_positive_corner() {
            let p = rng.gen_range(1..=e_pos.min(3));
            corners.extend(pick(rng, &positives, p));
        }
        c.hyperbolics.insert(id, Hyperbolic { sign, kind });
        c.regions.push(Region {
            hyperbolics: vec![id],
            corners,
        });
    }
    c
}

fn accepts(c: &FoliationComplex, profile: SampleProfile) -> bool {
    if !validate_complex(c).is_empty() {
        return false;
    }
    let k = c.counts();
    match profile {
        SampleProfile::General => true,
        SampleProfile::KeyLemma => k.e_neg >= 1 && k.h_neg >= k.e_neg && c.minimal_genus,
        SampleProfile::AbOnly => c.hyperbolics.values().all(|h| matches!(h.kind, RegionType::Aa | RegionType::Ab)),
    }
}

/// Sample `index` of the seeded stream `seed`, rejection-sampled against
/// `validate_complex` and the profile, with at most `MAX_ELLIPTIC` elliptic
/// and `MAX_HYPERBOLIC` hyperbolic points (more only when a profile needs
/// one hyperbolic point per negative elliptic point).
pub fn sample_complex(seed: u64, index: u64, profile: SampleProfile) -> FoliationComplex {
    let mut rng = rng_for(seed, index);
    loop {
        let c = draw(&mut rng, profile);
        if accepts(&c, profile) {
            return c;
        }
    }
}
