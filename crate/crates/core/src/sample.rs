//! Seeded random band words and relator insertion.
//!
//! Sample `i` of a sweep draws from its own ChaCha stream `(seed, i)`, so a
//! sweep gives the same samples whatever order, or thread, evaluates them.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{BandGenerator, BandWord, Sign};

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_generator<R: Rng>(rng: &mut R, n: usize, positive_only: bool) -> BandGenerator {
    assert!(n >= 2, "band generators need two strands");
    let i = rng.gen_range(1..n);
    let j = rng.gen_range(i + 1..=n);
    let sign = if positive_only || rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    BandGenerator::new(i, j, sign).expect("1 <= i < j")
}

pub fn random_band_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BandWord {
    if n < 2 {
        return BandWord::identity(n.max(1)).expect("n >= 1");
    }
    let letters = (0..len).map(|_| random_generator(rng, n, false)).collect();
    BandWord::new(n, letters).expect("indices in range")
}

pub fn random_positive_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BandWord {
    if n < 2 {
        return BandWord::identity(n.max(1)).expect("n >= 1");
    }
    let letters = (0..len).map(|_| random_generator(rng, n, true)).collect();
    BandWord::new(n, letters).expect("indices in range")
}

fn chords_commute(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (a, b);
    let disjoint = j < k || l < i;
    let nested = (i < k && l < j) || (k < i && j < l);
    disjoint || nested
}

fn word(n: usize, triples: &[(usize, usize, i64)]) -> BandWord {
    BandWord::from_triples(n, triples)
}

/// A random word that is trivial in `B_n`: a free pair, a band relation
/// `σ_{s,t}σ_{r,s} = σ_{r,t}σ_{s,t} = σ_{r,s}σ_{r,t}`, a commutator of
/// non-interleaved chords, or the centrality of `δ^n`.
pub fn random_relator<R: Rng>(rng: &mut R, n: usize) -> BandWord {
    if n < 2 {
        return BandWord::identity(n.max(1)).expect("n >= 1");
    }
    let kind = rng.gen_range(0..4);
    match kind {
        1 if n >= 3 => {
            let mut idx: Vec<usize> = (1..=n).collect();
            let mut pick = Vec::new();
            for _ in 0..3 {
                pick.push(idx.remove(rng.gen_range(0..idx.len())));
            }
            pick.sort_unstable();
            let (r, s, t) = (pick[0], pick[1], pick[2]);
            let forms = [
                vec![(s, t, 1), (r, s, 1)],
                vec![(r, t, 1), (s, t, 1)],
                vec![(r, s, 1), (r, t, 1)],
            ];
            let a = rng.gen_range(0..3);
            let b = (a + rng.gen_range(1..3)) % 3;
            word(n, &forms[a]).concat(&word(n, &forms[b]).inverse()).expect("same n")
        }
        2 if n >= 3 => {
            for _ in 0..32 {
                let g = random_generator(rng, n, true);
                let h = random_generator(rng, n, true);
                if chords_commute((g.i(), g.j()), (h.i(), h.j())) {
                    let gh = word(n, &[(g.i(), g.j(), 1), (h.i(), h.j(), 1)]);
                    let hg = word(n, &[(h.i(), h.j(), 1), (g.i(), g.j(), 1)]);
                    return gh.concat(&hg.inverse()).expect("same n");
                }
            }
            free_pair(rng, n)
        }
        3 => {
            let g = BandWord::new(n, vec![random_generator(rng, n, false)]).expect("in range");
            let d = BandWord::delta_power(n, n as i64).expect("n >= 1");
            d.concat(&g)
                .and_then(|x| x.concat(&d.inverse()))
                .and_then(|x| x.concat(&g.inverse()))
                .expect("same n")
        }
        _ => free_pair(rng, n),
    }
}

fn free_pair<R: Rng>(rng: &mut R, n: usize) -> BandWord {
    let g = random_generator(rng, n, false);
    BandWord::new(n, vec![g, g.inverse()]).expect("in range")
}

/// Inserts `count` random relators at random positions.
pub fn insert_relators<R: Rng>(rng: &mut R, w: &BandWord, count: usize) -> BandWord {
    let mut letters = w.letters().to_vec();
    for _ in 0..count {
        let r = random_relator(rng, w.strands());
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, r.letters().iter().copied());
    }
    BandWord::new(w.strands(), letters).expect("same strands")
}
