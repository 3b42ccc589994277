use super::handle::{HandleReducer, OrderVerdict};
use super::interval::{integer, RationalInterval};
use crate::braid::{band_to_artin, BandWord};
use crate::error::Error;

/// True iff `Δ^{2k} ⪯ w`, where `Δ² = δ^n` is the full twist.
fn full_twist_power_below(r: &HandleReducer, w: &BandWord, k: i64) -> Result<bool, Error> {
    let n = w.strands();
    let d = BandWord::delta_power(n, -(n as i64) * k)?.concat(w)?;
    let sign = r.sign(&band_to_artin(&d).signed_letters())?;
    Ok(sign != OrderVerdict::Less)
}

/// The Dehornoy floor: the unique `m` with `Δ^{2m} ⪯ w ≺ Δ^{2(m+1)}`.
///
/// Every band letter lies strictly between `Δ^{-2}` and `Δ²`, and the full
/// twist is central, so the floor lies in `[-q, p]` for a word with `p`
/// positive and `q` negative letters. Binary search inside that bracket.
pub fn dehornoy_floor_with(r: &HandleReducer, w: &BandWord) -> Result<i64, Error> {
    let mut lo = -(w.negative_count() as i64);
    let mut hi = w.positive_count() as i64 + 1;
    debug_assert!(full_twist_power_below(r, w, lo)?);
    debug_assert!(!full_twist_power_below(r, w, hi)?);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if full_twist_power_below(r, w, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn dehornoy_floor(w: &BandWord) -> Result<i64, Error> {
    dehornoy_floor_with(&HandleReducer::default(), w)
}

/// `[⌊w⌋_D, ⌊w⌋_D + 1]`, which contains the FDTC of the closure.
pub fn fdtc_interval(w: &BandWord) -> Result<RationalInterval, Error> {
    let f = dehornoy_floor(w)?;
    RationalInterval::closed(integer(f), integer(f + 1))
}
