#![allow(dead_code)]

use proptest::prelude::*;

use bandbraid::braid::{BandGenerator, BandWord, Sign};

pub fn letter(n: usize, positive_only: bool) -> impl Strategy<Value = BandGenerator> {
    (1..n, 1..n, any::<bool>()).prop_map(move |(a, b, neg)| {
        let (i, j) = if a < b { (a, b + 1) } else { (b, a + 1) };
        let sign = if neg && !positive_only { Sign::Negative } else { Sign::Positive };
        BandGenerator::new(i, j, sign).unwrap()
    })
}

pub fn word_in(n: usize, max_len: usize) -> impl Strategy<Value = BandWord> {
    prop::collection::vec(letter(n, false), 0..=max_len).prop_map(move |l| BandWord::new(n, l).unwrap())
}

pub fn positive_word_in(n: usize, max_len: usize) -> impl Strategy<Value = BandWord> {
    prop::collection::vec(letter(n, true), 0..=max_len).prop_map(move |l| BandWord::new(n, l).unwrap())
}

/// A word on `2..=max_n` strands.
pub fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BandWord> {
    (2..=max_n).prop_flat_map(move |n| word_in(n, max_len))
}

/// Two words on the same number of strands.
pub fn word_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BandWord, BandWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_in(n, max_len), word_in(n, max_len)))
}

pub fn word_triple(max_n: usize, max_len: usize) -> impl Strategy<Value = (BandWord, BandWord, BandWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_in(n, max_len), word_in(n, max_len), word_in(n, max_len)))
}
