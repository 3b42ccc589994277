use std::fmt;
use std::str::FromStr;

use crate::braid::{closure_profile, markov_move, BandGenerator, BandWord, MarkovMove, Sign};
use crate::error::Error;
use crate::fdtc::is_trivial;
use crate::foliation::{euler_and_sl, from_bennequin_surface};
use crate::garside::{cycle_normal_form, left_normal_form, summit_infimum};
use crate::par::{map_indices, Execution};
use crate::sample::{random_band_word, random_positive_word, rng_for};
use crate::surface::{build_surface, surface_stats};

pub const MAX_STRANDS: usize = 6;
pub const MAX_LENGTH: usize = 12;
pub const DEFAULT_WORD_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// Self-linking and component count under conjugation and stabilization.
    SlMarkov,
    /// Normal-form triviality agrees with handle reduction, and the normal
    /// form re-expands to the same braid.
    NfVsOracle,
    /// `sl = -χ(F_w)` on positive words.
    SqpSharp,
    /// The foliation counts of `F_w` reproduce `χ = n - m` and the
    /// self-linking formula.
    Lemma33,
    /// Left-weighted factors, `τ^n = id`, `∂∂ = τ`, central full twist, and
    /// monotone infimum under cycling.
    Garside,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::SlMarkov,
        Property::NfVsOracle,
        Property::SqpSharp,
        Property::Lemma33,
        Property::Garside,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::SlMarkov => "sl-markov",
            Property::NfVsOracle => "nf-vs-oracle",
            Property::SqpSharp => "sqp-sharp",
            Property::Lemma33 => "lemma33",
            Property::Garside => "garside",
        }
    }

    fn positive_only(self) -> bool {
        self == Property::SqpSharp
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown property '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    /// Every word of length `0..=max_length`.
    Exhaustive,
    /// `samples` words of uniformly random length in `0..=max_length`.
    Seeded { seed: u64, samples: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateConfig {
    pub strands: usize,
    pub max_length: usize,
    pub property: Property,
    pub sweep: Sweep,
    pub execution: Execution,
    pub word_budget: u64,
}

impl EnumerateConfig {
    pub fn new(strands: usize, max_length: usize, property: Property, sweep: Sweep) -> Self {
        EnumerateConfig {
            strands,
            max_length,
            property,
            sweep,
            execution: Execution::default(),
            word_budget: DEFAULT_WORD_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub property: Property,
    pub strands: usize,
    pub max_length: usize,
    pub cases: u64,
    pub violation_count: u64,
    /// The first few violations, in enumeration order.
    pub violations: Vec<String>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const KEPT_VIOLATIONS: usize = 10;

fn alphabet(n: usize, positive_only: bool) -> Vec<BandGenerator> {
    let mut out = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            out.push(BandGenerator::new(i, j, Sign::Positive).expect("i < j"));
            if !positive_only {
                out.push(BandGenerator::new(i, j, Sign::Negative).expect("i < j"));
            }
        }
    }
    out
}

/// Total word count for lengths `0..=max_length`, or `None` past `budget`.
fn exhaustive_count(k: u64, max_length: usize, budget: u64) -> Option<u64> {
    let mut total: u64 = 0;
    let mut level: u64 = 1;
    for _ in 0..=max_length {
        total = total.checked_add(level)?;
        if total > budget {
            return None;
        }
        level = level.checked_mul(k)?;
    }
    Some(total)
}

/// The `index`-th word in shortlex order over `alpha`.
fn decode(n: usize, alpha: &[BandGenerator], mut index: u64) -> BandWord {
    let k = alpha.len() as u64;
    let mut len = 0;
    let mut level = 1u64;
    while index >= level {
        index -= level;
        level *= k;
        len += 1;
    }
    let mut letters = vec![alpha[0]; len];
    for slot in letters.iter_mut().rev() {
        *slot = alpha[(index % k) as usize];
        index /= k;
    }
    BandWord::new(n, letters).expect("indices in range")
}

/// The property's failures on one word, as messages.
pub fn check_word(property: Property, w: &BandWord) -> Vec<String> {
    let mut bad = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            bad.push(format!("{what} fails on [{w}]"));
        }
    };
    let n = w.strands();
    match property {
        Property::SlMarkov => {
            let profile = closure_profile(w);
            for g in alphabet(n, false) {
                let g = BandWord::new(n, vec![g]).expect("in range");
                let c = w.conjugate(&g).expect("same n");
                expect(c.self_linking() == w.self_linking(), "sl under conjugation");
                expect(c.exponent_sum() == w.exponent_sum(), "exp under conjugation");
                expect(
                    closure_profile(&c).component_count == profile.component_count,
                    "components under conjugation",
                );
            }
            let up = markov_move(w, MarkovMove::StabilizePositive).expect("always allowed");
            let down = markov_move(w, MarkovMove::StabilizeNegative).expect("always allowed");
            expect(up.self_linking() == w.self_linking(), "sl under positive stabilization");
            expect(down.self_linking() == w.self_linking() - 2, "sl drop under negative stabilization");
            expect(
                closure_profile(&up).component_count == profile.component_count
                    && closure_profile(&down).component_count == profile.component_count,
                "components under stabilization",
            );
            expect(
                markov_move(&up, MarkovMove::Destabilize).as_ref() == Ok(w),
                "destabilize undoes stabilize",
            );
        }
        Property::NfVsOracle => {
            let nf = left_normal_form(w);
            let oracle = is_trivial(w);
            expect(oracle.is_ok(), "handle reduction within budget");
            if let Ok(t) = oracle {
                expect(t == nf.is_identity(), "normal form triviality matches handle reduction");
            }
            let back = nf.to_band_word().concat(&w.inverse()).expect("same n");
            expect(is_trivial(&back) == Ok(true), "normal form re-expands to the same braid");
        }
        Property::SqpSharp => {
            if w.is_positive() {
                let s = surface_stats(&build_surface(w));
                expect(w.self_linking() == -s.euler_char, "sl = -chi(F_w)");
                expect(s.negative_bands == 0, "no negative bands");
            }
        }
        Property::Lemma33 => {
            let c = from_bennequin_surface(&build_surface(w));
            let expected = (n as i64 - w.len() as i64, w.self_linking());
            expect(euler_and_sl(&c) == Ok(expected), "foliation counts give (n - m, sl)");
        }
        Property::Garside => {
            let nf = left_normal_form(w);
            expect(nf.is_left_weighted(), "left-weighted factors");
            for x in nf.factors() {
                expect(x.tau(n as i64) == *x, "tau^n = id");
                expect(x.complement().complement() == x.tau(1), "complement twice = tau");
            }
            let d = BandWord::delta_power(n, n as i64).expect("n >= 1");
            let commutator = d
                .concat(w)
                .and_then(|x| x.concat(&d.inverse()))
                .and_then(|x| x.concat(&w.inverse()))
                .expect("same n");
            expect(left_normal_form(&commutator).is_identity(), "full twist central");
            if nf.canonical_length() > 0 {
                let (c, _) = cycle_normal_form(&nf).expect("length >= 1");
                expect(c.inf() >= nf.inf(), "inf non-decreasing under cycling");
            }
            expect(summit_infimum(w).summit_inf >= nf.inf(), "summit inf >= inf");
        }
    }
    bad
}

pub fn enumerate_and_verify(cfg: &EnumerateConfig) -> Result<Summary, Error> {
    let n = cfg.strands;
    if n == 0 {
        return Err(Error::ZeroStrands);
    }
    if n > MAX_STRANDS || cfg.max_length > MAX_LENGTH {
        return Err(Error::Budget(format!(
            "sweeps are limited to n <= {MAX_STRANDS} and length <= {MAX_LENGTH}"
        )));
    }
    let alpha = alphabet(n, cfg.property.positive_only());
    let results: Vec<Vec<String>> = match cfg.sweep {
        Sweep::Exhaustive => {
            let count = if alpha.is_empty() {
                1
            } else {
                exhaustive_count(alpha.len() as u64, cfg.max_length, cfg.word_budget).ok_or_else(|| {
                    Error::Budget(format!(
                        "exhaustive sweep over {} letters up to length {} exceeds {} words",
                        alpha.len(),
                        cfg.max_length,
                        cfg.word_budget
                    ))
                })?
            };
            map_indices(cfg.execution, count, |i| {
                let w = if alpha.is_empty() {
                    BandWord::identity(n).expect("n >= 1")
                } else {
                    decode(n, &alpha, i)
                };
                check_word(cfg.property, &w)
            })
        }
        Sweep::Seeded { seed, samples } => {
            if samples > cfg.word_budget {
                return Err(Error::Budget(format!("{samples} samples exceed {}", cfg.word_budget)));
            }
            map_indices(cfg.execution, samples, |i| {
                let mut rng = rng_for(seed, i);
                let len = rand::Rng::gen_range(&mut rng, 0..=cfg.max_length);
                let w = if cfg.property.positive_only() {
                    random_positive_word(&mut rng, n, len)
                } else {
                    random_band_word(&mut rng, n, len)
                };
                check_word(cfg.property, &w)
            })
        }
    };
    let violation_count = results.iter().map(|v| v.len() as u64).sum();
    Ok(Summary {
        property: cfg.property,
        strands: n,
        max_length: cfg.max_length,
        cases: results.len() as u64,
        violation_count,
        violations: results.into_iter().flatten().take(KEPT_VIOLATIONS).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortlex_decoding() {
        let alpha = alphabet(3, false);
        assert_eq!(alpha.len(), 6);
        assert!(decode(3, &alpha, 0).is_empty());
        assert_eq!(decode(3, &alpha, 1).letters(), &[alpha[0]]);
        assert_eq!(decode(3, &alpha, 6).letters(), &[alpha[5]]);
        assert_eq!(decode(3, &alpha, 7).letters(), &[alpha[0], alpha[0]]);
        assert_eq!(exhaustive_count(6, 2, u64::MAX), Some(43));
        assert_eq!(exhaustive_count(6, 12, 1000), None);
    }

    #[test]
    fn small_sweeps_pass() {
        for p in Property::ALL {
            let cfg = EnumerateConfig::new(3, 3, p, Sweep::Exhaustive);
            let s = enumerate_and_verify(&cfg).unwrap();
            assert!(s.passed(), "{p}: {:?}", s.violations);
            let cfg = EnumerateConfig::new(4, 8, p, Sweep::Seeded { seed: 1, samples: 50 });
            assert!(enumerate_and_verify(&cfg).unwrap().passed(), "{p}");
        }
    }

    #[test]
    fn modes_agree() {
        let mut cfg = EnumerateConfig::new(3, 4, Property::NfVsOracle, Sweep::Exhaustive);
        cfg.execution = Execution::Sequential;
        let a = enumerate_and_verify(&cfg).unwrap();
        cfg.execution = Execution::Parallel;
        assert_eq!(a, enumerate_and_verify(&cfg).unwrap());
    }

    #[test]
    fn limits() {
        let cfg = EnumerateConfig::new(7, 3, Property::Lemma33, Sweep::Exhaustive);
        assert!(matches!(enumerate_and_verify(&cfg), Err(Error::Budget(_))));
        let cfg = EnumerateConfig::new(6, 12, Property::Lemma33, Sweep::Exhaustive);
        assert!(matches!(enumerate_and_verify(&cfg), Err(Error::Budget(_))));
        assert_eq!("sqp-sharp".parse::<Property>().unwrap(), Property::SqpSharp);
    }
}
