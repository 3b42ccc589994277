use super::normal_form::{is_left_weighted_pair, left_normal_form, DualNormalForm};
use super::partition::NonCrossingPartition;
use crate::braid::BandWord;
use crate::error::Error;

/// Cycling `δ^p x_1 ⋯ x_k ↦ δ^p x_2 ⋯ x_k τ^{-p}(x_1)`.
///
/// Returns the normalized result and the simple `a = τ^{-p}(x_1)` with
/// `result = a⁻¹ · w · a`.
pub fn cycle_normal_form(
    nf: &DualNormalForm,
) -> Result<(DualNormalForm, NonCrossingPartition), Error> {
    let (first, rest) = nf.factors().split_first().ok_or(Error::PureDeltaPower)?;
    let moved = first.tau(-nf.delta_power());
    let out = DualNormalForm::from_simples(
        nf.strands(),
        nf.delta_power(),
        rest.iter().cloned().chain(std::iter::once(moved.clone())),
    );
    Ok((out, moved))
}

/// Decycling `δ^p x_1 ⋯ x_k ↦ δ^p τ^{p}(x_k) x_1 ⋯ x_{k-1}`, i.e. conjugation
/// by `x_k⁻¹`. Returns the normalized result and `x_k`.
pub fn decycle_normal_form(
    nf: &DualNormalForm,
) -> Result<(DualNormalForm, NonCrossingPartition), Error> {
    let (last, rest) = nf.factors().split_last().ok_or(Error::PureDeltaPower)?;
    let moved = last.tau(nf.delta_power());
    let out = DualNormalForm::from_simples(
        nf.strands(),
        nf.delta_power(),
        std::iter::once(moved).chain(rest.iter().cloned()),
    );
    Ok((out, last.clone()))
}

/// Word-level cycling: the normal-form word of the cycled braid.
pub fn cycling(w: &BandWord) -> Result<BandWord, Error> {
    Ok(cycle_normal_form(&left_normal_form(w))?.0.to_band_word())
}

pub fn decycling(w: &BandWord) -> Result<BandWord, Error> {
    Ok(decycle_normal_form(&left_normal_form(w))?.0.to_band_word())
}

/// Largest infimum found in the conjugacy class, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummitData {
    pub summit_inf: i64,
    /// `g` such that `g⁻¹ w g` has infimum `summit_inf`.
    pub witness: BandWord,
    /// Normal form of `g⁻¹ w g`.
    pub conjugate: DualNormalForm,
    pub cyclings: usize,
}

/// Number of consecutive non-improving cyclings after which the infimum is
/// accepted as maximal. Iterated cycling raises a non-maximal infimum within
/// `n - 1` steps; this cap is larger.
pub fn cycling_certificate(n: usize) -> usize {
    (n * (n - 1) / 2).max(1)
}

/// Maximizes the infimum over the conjugacy class by iterated cycling.
pub fn summit_infimum(w: &BandWord) -> SummitData {
    let n = w.strands();
    let mut nf = left_normal_form(w);
    let mut conjugator: Vec<NonCrossingPartition> = Vec::new();
    let mut best = SummitData {
        summit_inf: nf.inf(),
        witness: BandWord::identity(n).expect("n >= 1"),
        conjugate: nf.clone(),
        cyclings: 0,
    };
    let cap = cycling_certificate(n);
    let mut stale = 0;
    let mut steps = 0;
    while stale < cap && nf.canonical_length() > 0 {
        let (next, a) = cycle_normal_form(&nf).expect("length >= 1");
        nf = next;
        conjugator.push(a);
        steps += 1;
        if nf.inf() > best.summit_inf {
            best = SummitData {
                summit_inf: nf.inf(),
                witness: simples_to_word(n, &conjugator),
                conjugate: nf.clone(),
                cyclings: steps,
            };
            stale = 0;
        } else {
            stale += 1;
        }
    }
    best
}

fn simples_to_word(n: usize, simples: &[NonCrossingPartition]) -> BandWord {
    let letters = simples
        .iter()
        .flat_map(|x| x.to_band_word().letters().to_vec())
        .collect();
    BandWord::new(n, letters).expect("indices in range")
}

/// Whether the closure is strongly quasipositive, i.e. some conjugate has
/// infimum at least 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqpVerdict {
    pub strongly_quasipositive: bool,
    pub summit: SummitData,
}

impl SqpVerdict {
    /// The conjugator realizing a positive conjugate, when one exists.
    pub fn witness(&self) -> Option<&BandWord> {
        self.strongly_quasipositive.then_some(&self.summit.witness)
    }
}

pub fn is_strongly_quasipositive_closure(w: &BandWord) -> SqpVerdict {
    let summit = summit_infimum(w);
    SqpVerdict {
        strongly_quasipositive: summit.summit_inf >= 0,
        summit,
    }
}

/// Rigidity: the pair `(x_k, τ^{-p}(x_1))` is left-weighted, so that cycling
/// produces a normal form as written.
pub fn is_rigid_normal_form(nf: &DualNormalForm) -> Result<bool, Error> {
    let first = nf.factors().first().ok_or(Error::PureDeltaPower)?;
    let last = nf.factors().last().expect("non-empty");
    Ok(is_left_weighted_pair(last, &first.tau(-nf.delta_power())))
}

pub fn is_rigid(w: &BandWord) -> Result<bool, Error> {
    is_rigid_normal_form(&left_normal_form(w))
}
