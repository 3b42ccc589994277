use std::fmt;

use super::partition::NonCrossingPartition;
use crate::braid::{BandWord, Sign};
use crate::error::Error;

/// Left canonical form `δ^N x_1 ⋯ x_k` in the dual Garside structure.
///
/// Every factor is a proper simple (neither the identity nor `δ`), and every
/// consecutive pair is left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualNormalForm {
    n: usize,
    delta_power: i64,
    factors: Vec<NonCrossingPartition>,
}

impl DualNormalForm {
    pub fn identity(n: usize) -> Self {
        DualNormalForm {
            n,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[NonCrossingPartition] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Normalizes `δ^power · simples[0] ⋯ simples[k-1]`.
    pub fn from_simples(
        n: usize,
        power: i64,
        simples: impl IntoIterator<Item = NonCrossingPartition>,
    ) -> Self {
        let mut nf = DualNormalForm {
            n,
            delta_power: power,
            factors: Vec::new(),
        };
        for s in simples {
            nf.push_simple(s);
        }
        nf
    }

    /// Multiplies on the right by a simple and restores the normal form.
    pub fn push_simple(&mut self, s: NonCrossingPartition) {
        debug_assert_eq!(s.strands(), self.n);
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        for j in (0..self.factors.len() - 1).rev() {
            let t = self.factors[j]
                .complement()
                .meet(&self.factors[j + 1])
                .expect("same strand count");
            if t.is_identity() {
                break;
            }
            let left = self.factors[j].times(&t);
            let right = self.factors[j + 1].left_quotient(&t);
            self.factors[j] = left;
            self.factors[j + 1] = right;
        }
        let leading = self.factors.iter().take_while(|x| x.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
        while self.factors.last().is_some_and(|x| x.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.factors.iter().all(|x| !x.is_identity() && !x.is_delta()));
        debug_assert!(self.is_left_weighted());
    }

    /// True when every consecutive pair satisfies `∂x_i ∧ x_{i+1} = 1`.
    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|w| is_left_weighted_pair(&w[0], &w[1]))
    }

    /// Re-expands to a band word: `δ^N` followed by each factor's canonical
    /// positive word.
    pub fn to_band_word(&self) -> BandWord {
        let mut letters = BandWord::delta_power(self.n, self.delta_power)
            .expect("n >= 1")
            .letters()
            .to_vec();
        for x in &self.factors {
            letters.extend_from_slice(x.to_band_word().letters());
        }
        BandWord::new(self.n, letters).expect("indices in range")
    }

    /// Parses `delta^N | x1 | x2 | ...` on `n` strands.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let mut parts = text.split('|').map(str::trim);
        let head = parts.next().unwrap_or("");
        let power = head
            .strip_prefix("delta^")
            .ok_or_else(|| Error::Malformed(format!("expected 'delta^N', got '{head}'")))?
            .parse::<i64>()
            .map_err(|_| Error::Malformed(format!("bad delta power in '{head}'")))?;
        let mut factors = Vec::new();
        for part in parts {
            let x = NonCrossingPartition::parse(part)?;
            if x.strands() != n {
                return Err(Error::StrandMismatch(x.strands(), n));
            }
            factors.push(x);
        }
        let nf = DualNormalForm {
            n,
            delta_power: power,
            factors,
        };
        if nf.factors.iter().any(|x| x.is_identity() || x.is_delta()) || !nf.is_left_weighted() {
            return Err(Error::Malformed(format!("'{text}' is not in normal form")));
        }
        Ok(nf)
    }
}

impl fmt::Display for DualNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " | {x}")?;
        }
        Ok(())
    }
}

pub fn is_left_weighted_pair(a: &NonCrossingPartition, b: &NonCrossingPartition) -> bool {
    a.complement().meet(b).expect("same strand count").is_identity()
}

/// Computes the left canonical normal form of a band word.
///
/// A negative letter is rewritten as `σ_{i,j}^{-1} = δ^{-1} · (δ σ_{i,j}^{-1})`
/// where `δ σ_{i,j}^{-1} = τ^{-1}(∂σ_{i,j})` is simple. Each simple then
/// carries the number of `δ^{-1}` to its right as a pending `τ` shift, which
/// is applied once all inverse deltas have been gathered on the left.
pub fn left_normal_form(w: &BandWord) -> DualNormalForm {
    let n = w.strands();
    let mut shifted = Vec::with_capacity(w.len());
    let mut inverse_deltas = 0i64;
    for g in w.letters().iter().rev() {
        let band = NonCrossingPartition::from_blocks(n, &[vec![g.i(), g.j()]])
            .expect("a single chord never crosses");
        let simple = match g.sign() {
            Sign::Positive => band,
            Sign::Negative => band.complement().tau(-1),
        };
        shifted.push(simple.tau(-inverse_deltas));
        if g.sign() == Sign::Negative {
            inverse_deltas += 1;
        }
    }
    shifted.reverse();
    DualNormalForm::from_simples(n, -inverse_deltas, shifted)
}

pub fn infimum(w: &BandWord) -> i64 {
    left_normal_form(w).inf()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_band_word, rotation_braid};

    fn nc(text: &str) -> NonCrossingPartition {
        NonCrossingPartition::parse(text).unwrap()
    }

    #[test]
    fn inverse_band_generator() {
        let w = parse_band_word("s(1,2)^-1", 3).unwrap();
        let nf = left_normal_form(&w);
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors(), &[nc("{1}{2 3}")]);
        assert_eq!(nf.to_string(), "delta^-1 | {1}{2 3}");
    }

    #[test]
    fn rotation_braid_powers() {
        for n in 3..=6 {
            for m in 1..=3 {
                let w = rotation_braid(n).unwrap().pow(m);
                let nf = left_normal_form(&w);
                assert_eq!(nf.inf(), 0);
                assert_eq!(nf.canonical_length(), n * m as usize);
                for (k, x) in nf.factors().iter().enumerate() {
                    let a = k % n + 1;
                    let b = (k + 1) % n + 1;
                    let (lo, hi) = (a.min(b), a.max(b));
                    let expect = NonCrossingPartition::from_blocks(n, &[vec![lo, hi]]).unwrap();
                    assert_eq!(*x, expect);
                }
            }
        }
    }

    #[test]
    fn repeated_generator_is_left_weighted() {
        let w = parse_band_word("s(1,2) s(1,2)", 3).unwrap();
        let nf = left_normal_form(&w);
        assert_eq!(nf.inf(), 0);
        assert_eq!(nf.factors(), &[nc("{1 2}{3}"), nc("{1 2}{3}")]);
    }

    #[test]
    fn infimum_examples() {
        assert_eq!(infimum(&BandWord::delta_power(4, 3).unwrap()), 3);
        let w = parse_band_word("s(1,2)^-1 s(1,3)^-1", 3).unwrap();
        assert_eq!(infimum(&w), -2);
        assert_eq!(infimum(&parse_band_word("s(1,2) s(1,3)", 3).unwrap()), 1);
    }

    #[test]
    fn free_cancellation_normalizes_to_identity() {
        let w = parse_band_word("s(1,3) s(2,4)^-1 s(2,4) s(1,3)^-1", 4).unwrap();
        assert!(left_normal_form(&w).is_identity());
    }

    #[test]
    fn serialization_round_trips() {
        let w = parse_band_word(crate::braid::HIRASAWA_STOIMENOW, 4).unwrap();
        let nf = left_normal_form(&w);
        assert_eq!(DualNormalForm::parse(&nf.to_string(), 4).unwrap(), nf);
        assert_eq!(left_normal_form(&nf.to_band_word()), nf);
        assert!(DualNormalForm::parse("delta^0 | {1 2}{3} | {1 3}{2}", 3).is_err());
    }
}
