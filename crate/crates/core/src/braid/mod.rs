//! Braid words in band generators and Artin generators.
//!
//! Conventions used throughout the crate:
//! - strand indices are 1-based;
//! - letters act left to right, and permutations compose in the same order;
//! - words are values and are never freely reduced behind the caller's back.

mod closure;
mod parse;
mod word;

pub use closure::{
    closure_profile, markov_move, strand_permutation, ClosureProfile, MarkovMove,
    StrandPermutation,
};
pub use parse::{parse_band_word, parse_word, InputMode};
pub use word::{band_to_artin, ArtinLetter, ArtinWord, BandGenerator, BandWord, Sign};

/// The 11-letter 4-braid of Hirasawa and Stoimenow, in band generators.
pub const HIRASAWA_STOIMENOW: &str =
    "s(1,2) s(2,4)^2 s(1,2)^-1 s(1,3) s(1,2) s(2,4)^-1 s(1,2)^-2 s(1,3)^-2";

/// `β = σ_{1,2} σ_{2,3} ⋯ σ_{n-1,n} σ_{1,n}`, the rigid braid whose powers
/// have infimum 0 and FDTC `m`.
pub fn rotation_braid(n: usize) -> Result<BandWord, crate::Error> {
    let mut letters = Vec::with_capacity(n);
    for i in 1..n {
        letters.push(BandGenerator::positive(i, i + 1)?);
    }
    letters.push(BandGenerator::positive(1, n)?);
    BandWord::new(n, letters)
}
