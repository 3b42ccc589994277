use super::word::{BandGenerator, BandWord, Sign};
use crate::error::Error;

/// A permutation of `{1, …, n}` stored 0-based.
///
/// Composition follows word order: `a.then(&b)` first applies `a`, then `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        StrandPermutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from a 0-based image table, rejecting non-bijections.
    pub fn from_image(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::Malformed("image table is not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(StrandPermutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn then(&self, next: &StrandPermutation) -> StrandPermutation {
        StrandPermutation {
            image: self.image.iter().map(|&i| next.image[i]).collect(),
        }
    }

    pub fn inverse(&self) -> StrandPermutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        StrandPermutation { image: inv }
    }

    /// Swaps the 1-based points `i` and `j` after applying `self`.
    pub fn then_transpose(&mut self, i: usize, j: usize) {
        for v in self.image.iter_mut() {
            if *v == i - 1 {
                *v = j - 1;
            } else if *v == j - 1 {
                *v = i - 1;
            }
        }
    }

    /// Cycles as sorted 1-based blocks, ordered by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.image[k];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }
}

/// Underlying permutation of a word: the product of the transpositions
/// `(i j)` of its letters in reading order.
pub fn strand_permutation(w: &BandWord) -> StrandPermutation {
    let mut p = StrandPermutation::identity(w.strands());
    for g in w.letters() {
        p.then_transpose(g.i(), g.j());
    }
    p
}

/// Components of the closed braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureProfile {
    pub component_count: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl ClosureProfile {
    pub fn is_knot(&self) -> bool {
        self.component_count == 1
    }
}

pub fn closure_profile(w: &BandWord) -> ClosureProfile {
    let cycles = strand_permutation(w).cycles();
    ClosureProfile {
        component_count: cycles.len(),
        cycles,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkovMove {
    StabilizePositive,
    StabilizeNegative,
    Destabilize,
}

/// Applies a Markov (de)stabilization.
///
/// Stabilization appends `σ_{n,n+1}^{±1}` on `n + 1` strands. Destabilization
/// requires the last letter to be `σ_{n-1,n}^{±1}` and no other letter to touch
/// strand `n`.
pub fn markov_move(w: &BandWord, kind: MarkovMove) -> Result<BandWord, Error> {
    let n = w.strands();
    match kind {
        MarkovMove::StabilizePositive | MarkovMove::StabilizeNegative => {
            let sign = if kind == MarkovMove::StabilizePositive {
                Sign::Positive
            } else {
                Sign::Negative
            };
            let mut letters = w.letters().to_vec();
            letters.push(BandGenerator::new(n, n + 1, sign)?);
            BandWord::new(n + 1, letters)
        }
        MarkovMove::Destabilize => {
            if n < 2 {
                return Err(Error::Destabilize("word has a single strand".into()));
            }
            let (last, rest) = w
                .letters()
                .split_last()
                .ok_or_else(|| Error::Destabilize("word is empty".into()))?;
            if last.i() != n - 1 || last.j() != n {
                return Err(Error::Destabilize(format!(
                    "last letter {last} is not s({},{})^±1",
                    n - 1,
                    n
                )));
            }
            if rest.iter().any(|g| g.j() == n) {
                return Err(Error::Destabilize(format!(
                    "strand {n} is touched by more than one letter"
                )));
            }
            BandWord::new(n - 1, rest.to_vec())
        }
    }
}
