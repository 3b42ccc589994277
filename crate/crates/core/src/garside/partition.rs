use std::fmt;

use crate::braid::{BandGenerator, BandWord, Sign, StrandPermutation};
use crate::error::Error;

/// A dual simple element: a non-crossing partition of `{1, …, n}`.
///
/// Internally the partition is kept as the permutation that sends each
/// element of a block to the next larger element of the same block, and the
/// largest back to the smallest. That permutation is the image of the simple
/// braid in the symmetric group, which makes products and quotients of
/// simples a matter of composing permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    succ: Vec<u8>,
}

impl NonCrossingPartition {
    pub fn identity(n: usize) -> Self {
        NonCrossingPartition {
            succ: (0..n as u8).collect(),
        }
    }

    /// The Garside element `δ`: one block containing everything.
    pub fn delta(n: usize) -> Self {
        NonCrossingPartition {
            succ: (0..n).map(|i| ((i + 1) % n) as u8).collect(),
        }
    }

    /// Builds from 1-based blocks; unlisted points become singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, Error> {
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::Malformed(format!("unsupported strand count {n}")));
        }
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange {
                        index: x,
                        strands: n,
                    });
                }
                if label[x - 1] != usize::MAX {
                    return Err(Error::Malformed(format!("point {x} is listed twice")));
                }
                label[x - 1] = b;
            }
        }
        // Unlisted points are singletons.
        for (next, l) in (blocks.len()..).zip(label.iter_mut().filter(|l| **l == usize::MAX)) {
            *l = next;
        }
        let p = Self::from_labels(&label);
        if !p.is_non_crossing() {
            return Err(Error::Malformed(format!("partition {p} is crossing")));
        }
        Ok(p)
    }

    /// Points with equal labels share a block. No crossing check.
    fn from_labels(label: &[usize]) -> Self {
        let n = label.len();
        let mut succ = vec![0u8; n];
        for i in 0..n {
            let next = (i + 1..n)
                .find(|&j| label[j] == label[i])
                .or_else(|| (0..=i).find(|&j| label[j] == label[i]))
                .expect("i itself matches");
            succ[i] = next as u8;
        }
        NonCrossingPartition { succ }
    }

    /// Reads back a simple element from its permutation. The caller
    /// guarantees the permutation comes from a simple braid.
    pub(crate) fn from_permutation(p: &StrandPermutation) -> Self {
        let x = NonCrossingPartition {
            succ: p.image().iter().map(|&v| v as u8).collect(),
        };
        debug_assert!(x.is_canonical(), "permutation {:?} is not simple", p.image());
        x
    }

    fn is_canonical(&self) -> bool {
        let labels = self.labels();
        Self::from_labels(&labels) == *self && self.is_non_crossing()
    }

    pub fn strands(&self) -> usize {
        self.succ.len()
    }

    pub fn permutation(&self) -> StrandPermutation {
        StrandPermutation::from_image(self.succ.iter().map(|&v| v as usize).collect())
            .expect("bijection")
    }

    /// Block label for each 0-based point: the smallest member of its block.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.succ.len();
        let mut label = vec![usize::MAX; n];
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut k = start;
            loop {
                label[k] = start;
                k = self.succ[k] as usize;
                if k == start {
                    break;
                }
            }
        }
        label
    }

    /// Sorted 1-based blocks, ordered by smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.permutation().cycles()
    }

    fn is_non_crossing(&self) -> bool {
        let label = self.labels();
        let n = label.len();
        for a in 0..n {
            for b in a + 1..n {
                if label[b] == label[a] {
                    continue;
                }
                for c in b + 1..n {
                    if label[c] != label[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if label[d] == label[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.succ.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        *self == Self::delta(self.strands())
    }

    /// Number of band letters in the canonical positive word: `n - #blocks`.
    pub fn letter_count(&self) -> usize {
        self.strands() - self.blocks().len()
    }

    /// Refinement order, which is the divisibility order on simples.
    pub fn refines(&self, other: &NonCrossingPartition) -> bool {
        let (a, b) = (self.labels(), other.labels());
        (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
    }

    /// Blockwise intersection: the greatest common divisor of two simples.
    pub fn meet(&self, other: &NonCrossingPartition) -> Result<NonCrossingPartition, Error> {
        if self.strands() != other.strands() {
            return Err(Error::StrandMismatch(self.strands(), other.strands()));
        }
        let (a, b) = (self.labels(), other.labels());
        let n = a.len();
        let combined: Vec<usize> = (0..n).map(|i| a[i] * n + b[i]).collect();
        Ok(Self::from_labels(&combined))
    }

    /// The Kreweras complement `∂x`, the unique simple with `x · ∂x = δ`.
    pub fn complement(&self) -> NonCrossingPartition {
        let n = self.strands();
        let inv = self.permutation().inverse();
        let image = (0..n).map(|j| (inv.apply(j) + 1) % n).collect();
        Self::from_permutation(&StrandPermutation::from_image(image).expect("bijection"))
    }

    /// `δ^{-k} x δ^{k}`: every index `i` becomes `i + k` modulo `n`.
    pub fn tau(&self, k: i64) -> NonCrossingPartition {
        let n = self.strands();
        let shift = k.rem_euclid(n as i64) as usize;
        let mut succ = vec![0u8; n];
        for i in 0..n {
            succ[(i + shift) % n] = ((self.succ[i] as usize + shift) % n) as u8;
        }
        NonCrossingPartition { succ }
    }

    /// Product `self · t`, which must again be simple (`t ≼ ∂self`).
    pub(crate) fn times(&self, t: &NonCrossingPartition) -> NonCrossingPartition {
        Self::from_permutation(&self.permutation().then(&t.permutation()))
    }

    /// The simple `r` with `t · r = self`, for a left divisor `t` of `self`.
    pub(crate) fn left_quotient(&self, t: &NonCrossingPartition) -> NonCrossingPartition {
        Self::from_permutation(&t.permutation().inverse().then(&self.permutation()))
    }

    /// Canonical positive word: per block `a_1 < ⋯ < a_k`, the descending
    /// product `σ_{a_{k-1},a_k} ⋯ σ_{a_1,a_2}`.
    pub fn to_band_word(&self) -> BandWord {
        let mut letters = Vec::new();
        for block in self.blocks() {
            for w in block.windows(2).rev() {
                letters.push(BandGenerator::new(w[0], w[1], Sign::Positive).expect("i < j"));
            }
        }
        BandWord::new(self.strands(), letters).expect("indices in range")
    }

    /// Parses the `{1 3}{2}{4}` block notation; `n` is the largest point.
    pub fn parse(text: &str) -> Result<NonCrossingPartition, Error> {
        let mut blocks = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Malformed(format!("expected '{{' in '{text}'")))?;
            let close = body
                .find('}')
                .ok_or_else(|| Error::Malformed(format!("unclosed block in '{text}'")))?;
            let block = body[..close]
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("bad point '{t}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if block.is_empty() {
                return Err(Error::Malformed("empty block".into()));
            }
            blocks.push(block);
            rest = body[close + 1..].trim_start();
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        let listed: usize = blocks.iter().map(Vec::len).sum();
        if listed != n {
            return Err(Error::Malformed(format!(
                "blocks in '{text}' do not cover 1..{n}"
            )));
        }
        Self::from_blocks(n, &blocks)
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            let parts: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NC{self}")
    }
}

/// The simple element `{i, j}` of a positive band generator.
pub fn simple_of_band(g: &BandGenerator, n: usize) -> Result<NonCrossingPartition, Error> {
    if !g.sign().is_positive() {
        return Err(Error::NegativeGenerator);
    }
    NonCrossingPartition::from_blocks(n, &[vec![g.i(), g.j()]])
}

pub fn nc_meet(
    a: &NonCrossingPartition,
    b: &NonCrossingPartition,
) -> Result<NonCrossingPartition, Error> {
    a.meet(b)
}

pub fn complement(x: &NonCrossingPartition) -> NonCrossingPartition {
    x.complement()
}

pub fn tau(x: &NonCrossingPartition, k: i64) -> NonCrossingPartition {
    x.tau(k)
}

/// Every non-crossing partition of `{1, …, n}`, in a fixed order.
/// There are Catalan(n) of them.
pub fn all_simples(n: usize) -> Vec<NonCrossingPartition> {
    fn extend(
        n: usize,
        labels: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<NonCrossingPartition>,
    ) {
        if labels.len() == n {
            let p = NonCrossingPartition::from_labels(labels);
            if p.is_non_crossing() {
                out.push(p);
            }
            return;
        }
        for l in 0..=used {
            labels.push(l);
            extend(n, labels, used.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}
