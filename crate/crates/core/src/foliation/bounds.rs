use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::complex::FoliationComplex;
use crate::braid::Sign;
use crate::error::Error;

/// `χ(F) = (e₊ + e₋) - (h₊ + h₋)` and `sl = -(e₊ - e₋) + (h₊ - h₋)`.
pub fn euler_and_sl(c: &FoliationComplex) -> Result<(i64, i64), Error> {
    c.ensure_valid()?;
    let k = c.counts();
    Ok((
        (k.e_pos + k.e_neg) - (k.h_pos + k.h_neg),
        -(k.e_pos - k.e_neg) + (k.h_pos - k.h_neg),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectBound {
    Exact(i64),
    UpperBound(i64),
}

impl DefectBound {
    pub fn value(self) -> i64 {
        match self {
            DefectBound::Exact(v) | DefectBound::UpperBound(v) => v,
        }
    }
}

impl fmt::Display for DefectBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefectBound::Exact(v) => write!(f, "{v} (exact)"),
            DefectBound::UpperBound(v) => write!(f, "<= {v} (upper bound)"),
        }
    }
}

/// `h₋ - e₋`, which bounds the defect and equals it for a minimal genus
/// surface.
pub fn defect_from_foliation(c: &FoliationComplex) -> Result<DefectBound, Error> {
    c.ensure_valid()?;
    let k = c.counts();
    let v = k.h_neg - k.e_neg;
    Ok(if c.minimal_genus {
        DefectBound::Exact(v)
    } else {
        DefectBound::UpperBound(v)
    })
}

/// Upper bound `N / n` on the FDTC at binding component `binding`, where `n`
/// counts negative elliptic points on it and `N` the negative hyperbolic
/// points sharing a region with one of them.
pub fn fdtc_upper_bound(c: &FoliationComplex, binding: &str) -> Result<BigRational, Error> {
    c.ensure_valid()?;
    if !c.essential {
        return Err(Error::Precondition(
            "the FDTC bound needs every b-arc essential; set the 'essential' flag".into(),
        ));
    }
    let vs: BTreeSet<u32> = c
        .elliptics
        .iter()
        .filter(|(_, e)| e.sign == Sign::Negative && e.binding == binding)
        .map(|(id, _)| *id)
        .collect();
    if vs.is_empty() {
        return Err(Error::NoNegativeElliptic(binding.to_string()));
    }
    let adjacent: BTreeSet<u32> = c
        .regions
        .iter()
        .filter(|r| r.corners.iter().any(|e| vs.contains(e)))
        .flat_map(|r| r.hyperbolics.iter().copied())
        .filter(|h| c.hyperbolics[h].sign == Sign::Negative)
        .collect();
    Ok(BigRational::new(
        BigInt::from(adjacent.len()),
        BigInt::from(vs.len()),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticConstraint {
    /// No negative elliptic point on the component.
    None,
    /// Fewer than `k` negative elliptic points on the component.
    FewerThan(u64),
    Unconstrained,
}

impl fmt::Display for EllipticConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticConstraint::None => write!(f, "e_C = 0"),
            EllipticConstraint::FewerThan(k) => write!(f, "e_C < {k}"),
            EllipticConstraint::Unconstrained => write!(f, "no constraint"),
        }
    }
}

/// Constraint on the number `e_C` of negative elliptic points on a binding
/// component, given `c ≥ c_lower` for its FDTC and defect `delta`.
pub fn negative_elliptic_bound(c_lower: &BigRational, delta: u64, k: u64) -> Result<EllipticConstraint, Error> {
    if k == 0 {
        return Err(Error::Malformed("k must be positive".into()));
    }
    let one = BigRational::one();
    if delta == 0 && *c_lower > one {
        return Ok(EllipticConstraint::None);
    }
    let threshold = BigRational::new(BigInt::from(delta), BigInt::from(k)) + one;
    Ok(if *c_lower > threshold {
        EllipticConstraint::FewerThan(k)
    } else {
        EllipticConstraint::Unconstrained
    })
}
