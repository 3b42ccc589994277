use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// An interval of rationals with optional infinite ends.
///
/// `lo == None` means `-inf`, `hi == None` means `+inf`. Infinite ends are
/// always open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Option<BigRational>,
    pub hi: Option<BigRational>,
    pub lo_strict: bool,
    pub hi_strict: bool,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RationalInterval {
    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::Malformed(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(RationalInterval {
            lo: Some(lo),
            hi: Some(hi),
            lo_strict: false,
            hi_strict: false,
        })
    }

    pub fn point(v: BigRational) -> Self {
        Self::closed(v.clone(), v).expect("lo == hi")
    }

    pub fn lower_open(lo: BigRational) -> Self {
        RationalInterval {
            lo: Some(lo),
            hi: None,
            lo_strict: true,
            hi_strict: true,
        }
    }

    pub fn at_least(lo: BigRational) -> Self {
        RationalInterval {
            lo: Some(lo),
            hi: None,
            lo_strict: false,
            hi_strict: true,
        }
    }

    pub fn at_most(hi: BigRational) -> Self {
        RationalInterval {
            lo: None,
            hi: Some(hi),
            lo_strict: true,
            hi_strict: false,
        }
    }

    pub fn everything() -> Self {
        RationalInterval {
            lo: None,
            hi: None,
            lo_strict: true,
            hi_strict: true,
        }
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        let above = match &self.lo {
            None => true,
            Some(lo) if self.lo_strict => v > lo,
            Some(lo) => v >= lo,
        };
        let below = match &self.hi {
            None => true,
            Some(hi) if self.hi_strict => v < hi,
            Some(hi) => v <= hi,
        };
        above && below
    }

    /// True when every point of the interval is strictly greater than `t`.
    pub fn lower_exceeds(&self, t: &BigRational) -> bool {
        match &self.lo {
            None => false,
            Some(lo) => lo > t || (lo == t && self.lo_strict),
        }
    }

    pub fn width(&self) -> Option<BigRational> {
        match (&self.lo, &self.hi) {
            (Some(lo), Some(hi)) => Some(hi - lo),
            _ => None,
        }
    }
}

fn fmt_end(v: &Option<BigRational>, infinite: &str) -> String {
    match v {
        None => infinite.to_string(),
        Some(r) => r.to_string(),
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_strict { '(' } else { '[' },
            fmt_end(&self.lo, "-inf"),
            fmt_end(&self.hi, "+inf"),
            if self.hi_strict { ')' } else { ']' },
        )
    }
}

fn parse_end(text: &str) -> Result<Option<BigRational>, Error> {
    let t = text.trim();
    if matches!(t, "-inf" | "+inf" | "inf") {
        return Ok(None);
    }
    BigRational::from_str(t)
        .map(Some)
        .map_err(|_| Error::Malformed(format!("bad rational '{t}'")))
}

impl FromStr for RationalInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("bad interval '{s}'"));
        let lo_strict = match s.chars().next() {
            Some('(') => true,
            Some('[') => false,
            _ => return Err(bad()),
        };
        let hi_strict = match s.chars().last() {
            Some(')') => true,
            Some(']') => false,
            _ => return Err(bad()),
        };
        let (a, b) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
        let lo = parse_end(a)?;
        let hi = parse_end(b)?;
        if lo.is_none() && !(lo_strict && a.trim().starts_with('-')) {
            return Err(bad());
        }
        if hi.is_none() && !(hi_strict && !b.trim().starts_with('-')) {
            return Err(bad());
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h || (l == h && (lo_strict || hi_strict)) {
                return Err(bad());
            }
        }
        Ok(RationalInterval {
            lo,
            hi,
            lo_strict,
            hi_strict,
        })
    }
}

/// Bound propagation rules for the FDTC map `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    /// `|c(αβ) - c(α) - c(β)| ≤ 1`: bounds on `c(α)` and `c(β)` give bounds
    /// on `c(αβ)`.
    Product(RationalInterval, RationalInterval),
    /// Bounds on `c(αβ)`; inserting a strongly quasipositive `p` gives
    /// `c(αpβ) ≥ c(αβ)`, so only the lower bound survives.
    SqpInsert(RationalInterval),
    /// Bounds on `c(αpβ)`; deleting the strongly quasipositive `p` gives
    /// `c(αβ) ≤ c(αpβ)`, so only the upper bound survives.
    SqpDelete(RationalInterval),
    /// A product of `negatives` negative band generators on `strands`
    /// strands has `c > -(negatives + 1) / strands`.
    NegativeBandLower { negatives: u64, strands: u64 },
}

pub fn interval_propagate(rule: &Propagation) -> Result<RationalInterval, Error> {
    match rule {
        Propagation::Product(a, b) => {
            let one = BigRational::one();
            let lo = match (&a.lo, &b.lo) {
                (Some(x), Some(y)) => Some(x + y - &one),
                _ => None,
            };
            let hi = match (&a.hi, &b.hi) {
                (Some(x), Some(y)) => Some(x + y + &one),
                _ => None,
            };
            Ok(RationalInterval {
                lo_strict: lo.is_none() || a.lo_strict || b.lo_strict,
                hi_strict: hi.is_none() || a.hi_strict || b.hi_strict,
                lo,
                hi,
            })
        }
        Propagation::SqpInsert(a) => Ok(RationalInterval {
            lo: a.lo.clone(),
            lo_strict: a.lo_strict,
            hi: None,
            hi_strict: true,
        }),
        Propagation::SqpDelete(a) => Ok(RationalInterval {
            lo: None,
            lo_strict: true,
            hi: a.hi.clone(),
            hi_strict: a.hi_strict,
        }),
        Propagation::NegativeBandLower { negatives, strands } => {
            if *strands == 0 {
                return Err(Error::Malformed("strand count must be positive".into()));
            }
            let lo = -BigRational::new(
                BigInt::from(*negatives) + BigInt::one(),
                BigInt::from(*strands),
            );
            Ok(RationalInterval::lower_open(lo))
        }
    }
}

/// Which large-FDTC hypotheses an interval for `c(id, K, ∂D²)` certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainHypotheses {
    /// `c > δ/2 + 1`: a minimum genus Bennequin surface exists.
    pub main2: bool,
    /// `c > 1`: the FDTC clause of the planar, single binding statement.
    pub main1: bool,
    /// `δ = 0` and `c > 1`: the braid itself is strongly quasipositive.
    pub sqp_clause: bool,
}

pub fn check_main_hypotheses(interval: &RationalInterval, delta: u64) -> MainHypotheses {
    let d = BigRational::from_integer(BigInt::from(delta));
    let threshold = d / integer(2) + BigRational::one();
    let main1 = interval.lower_exceeds(&BigRational::one());
    MainHypotheses {
        main2: interval.lower_exceeds(&threshold),
        main1,
        sqp_clause: delta == 0 && main1,
    }
}

impl Default for RationalInterval {
    fn default() -> Self {
        Self::point(BigRational::zero())
    }
}
