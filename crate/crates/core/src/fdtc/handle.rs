//! Dehornoy handle reduction on Artin words.
//!
//! A `σ_i`-handle is a factor `σ_i^e u σ_i^{-e}` where `u` only contains
//! letters `σ_k^{±1}` with `k > i`. Reducing it replaces every `σ_{i+1}^d` in
//! `u` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^{e}` and deletes the two ends. Always
//! reducing the handle that closes first keeps every reduction permitted, and
//! the process ends on an empty, σ-positive or σ-negative word.

use std::cmp::Ordering;

use crate::braid::{band_to_artin, BandWord};
use crate::error::Error;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Outcome of comparing two braids in the Dehornoy order.
///
/// The verdict is the sign of `u⁻¹v`: `Greater` means `v` lies strictly
/// above `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderVerdict {
    Less,
    Equal,
    Greater,
}

impl OrderVerdict {
    pub fn reverse(self) -> OrderVerdict {
        match self {
            OrderVerdict::Less => OrderVerdict::Greater,
            OrderVerdict::Equal => OrderVerdict::Equal,
            OrderVerdict::Greater => OrderVerdict::Less,
        }
    }
}

impl From<Ordering> for OrderVerdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrderVerdict::Less,
            Ordering::Equal => OrderVerdict::Equal,
            Ordering::Greater => OrderVerdict::Greater,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct HandleReducer {
    pub step_budget: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        HandleReducer {
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl HandleReducer {
    pub fn with_budget(step_budget: u64) -> Self {
        HandleReducer { step_budget }
    }

    /// Fully reduces a signed Artin word (`+k` for `σ_k`, `-k` for `σ_k⁻¹`).
    pub fn reduce(&self, word: &[i16]) -> Result<Vec<i16>, Error> {
        let mut w = word.to_vec();
        let mut steps = 0u64;
        let mut from = 0usize;
        while let Some((p, q)) = first_closing_handle(&w, from) {
            steps += 1;
            if steps > self.step_budget {
                return Err(Error::StepBudget(self.step_budget));
            }
            let e = w[p].signum();
            let i = w[p].abs();
            let mut inner = Vec::with_capacity(q - p);
            for &x in &w[p + 1..q] {
                if x.abs() == i + 1 {
                    inner.push(-e * (i + 1));
                    inner.push(x.signum() * i);
                    inner.push(e * (i + 1));
                } else {
                    inner.push(x);
                }
            }
            w.splice(p..=q, inner);
            from = p;
        }
        Ok(w)
    }

    /// Sign of the braid in the Dehornoy order: `Greater` for σ-positive,
    /// `Less` for σ-negative, `Equal` for the identity.
    pub fn sign(&self, word: &[i16]) -> Result<OrderVerdict, Error> {
        let reduced = self.reduce(word)?;
        Ok(sign_of_reduced(&reduced))
    }

    pub fn compare(&self, u: &BandWord, v: &BandWord) -> Result<OrderVerdict, Error> {
        let d = u.inverse().concat(v)?;
        self.sign(&band_to_artin(&d).signed_letters())
    }

    pub fn is_trivial(&self, w: &BandWord) -> Result<bool, Error> {
        Ok(self.reduce(&band_to_artin(w).signed_letters())?.is_empty())
    }
}

/// Reads the sign of a handle-free word off its main generator.
fn sign_of_reduced(w: &[i16]) -> OrderVerdict {
    match w.iter().map(|x| x.abs()).min() {
        None => OrderVerdict::Equal,
        Some(m) => {
            let first = w.iter().find(|x| x.abs() == m).expect("present");
            debug_assert!(w.iter().filter(|x| x.abs() == m).all(|x| x == first));
            if *first > 0 {
                OrderVerdict::Greater
            } else {
                OrderVerdict::Less
            }
        }
    }
}

/// Finds the handle `(p, q)` with the smallest closing position `q ≥ from`.
fn first_closing_handle(w: &[i16], from: usize) -> Option<(usize, usize)> {
    for q in from.max(1)..w.len() {
        let i = w[q].abs();
        for p in (0..q).rev() {
            let k = w[p].abs();
            if k < i {
                break;
            }
            if k == i {
                if w[p] == -w[q] {
                    return Some((p, q));
                }
                break;
            }
        }
    }
    None
}

/// Dehornoy comparison with the default step budget.
pub fn dehornoy_compare(u: &BandWord, v: &BandWord) -> Result<OrderVerdict, Error> {
    HandleReducer::default().compare(u, v)
}

/// Word-problem oracle: true iff `w` is the identity braid.
pub fn is_trivial(w: &BandWord) -> Result<bool, Error> {
    HandleReducer::default().is_trivial(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_word, InputMode};

    fn artin(n: usize, s: &str) -> BandWord {
        parse_word(s, n, InputMode::Artin).unwrap()
    }

    #[test]
    fn reduces_basic_handles() {
        let r = HandleReducer::default();
        assert_eq!(r.reduce(&[1, -1]).unwrap(), Vec::<i16>::new());
        assert_eq!(r.reduce(&[1, 2, -1]).unwrap(), vec![-2, 1, 2]);
        assert_eq!(r.reduce(&[1, 2, 1, -2, -1, -2]).unwrap(), Vec::<i16>::new());
    }

    #[test]
    fn compare_examples() {
        let e = BandWord::identity(3).unwrap();
        assert_eq!(
            dehornoy_compare(&e, &artin(3, "a1")).unwrap(),
            OrderVerdict::Greater
        );
        assert_eq!(
            dehornoy_compare(&artin(3, "a1 a2 a1"), &artin(3, "a2 a1 a2")).unwrap(),
            OrderVerdict::Equal
        );
        let u = BandWord::from_triples(3, &[(1, 3, 1)]);
        let v = BandWord::from_triples(3, &[(1, 2, 1), (2, 3, 1)]);
        let uv = dehornoy_compare(&u, &v).unwrap();
        assert_ne!(uv, OrderVerdict::Equal);
        assert_eq!(dehornoy_compare(&v, &u).unwrap(), uv.reverse());
    }

    #[test]
    fn trivial_words() {
        assert!(is_trivial(&BandWord::identity(4).unwrap()).unwrap());
        assert!(is_trivial(&artin(3, "a1 a2 a1 a2^-1 a1^-1 a2^-1")).unwrap());
        assert!(!is_trivial(&artin(3, "a1 a2")).unwrap());
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=5 {
            let full = BandWord::delta_power(n, n as i64).unwrap();
            for i in 1..n {
                for j in i + 1..=n {
                    let g = BandWord::from_triples(n, &[(i, j, 1)]);
                    let w = full
                        .concat(&g)
                        .unwrap()
                        .concat(&full.inverse())
                        .unwrap()
                        .concat(&g.inverse())
                        .unwrap();
                    assert!(is_trivial(&w).unwrap(), "n={n} g={g}");
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let r = HandleReducer::with_budget(0);
        assert_eq!(r.reduce(&[1, -1]), Err(Error::StepBudget(0)));
    }
}
