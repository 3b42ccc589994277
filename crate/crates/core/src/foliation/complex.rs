use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::braid::Sign;
use crate::error::Error;
use crate::surface::BennequinSurface;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionType {
    Aa,
    Ab,
    Bb,
    Ac,
    Bc,
    Cc,
}

impl RegionType {
    pub const ALL: [RegionType; 6] = [
        RegionType::Aa,
        RegionType::Ab,
        RegionType::Bb,
        RegionType::Ac,
        RegionType::Bc,
        RegionType::Cc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionType::Aa => "aa",
            RegionType::Ab => "ab",
            RegionType::Bb => "bb",
            RegionType::Ac => "ac",
            RegionType::Bc => "bc",
            RegionType::Cc => "cc",
        }
    }

    /// Number of negative elliptic corners a region of this type must have.
    /// Every b-arc ends at exactly one negative elliptic point; a-arcs and
    /// c-circles contribute none.
    pub fn negative_corners(self) -> usize {
        match self {
            RegionType::Aa | RegionType::Ac | RegionType::Cc => 0,
            RegionType::Ab | RegionType::Bc => 1,
            RegionType::Bb => 2,
        }
    }

    /// Whether the region meets a positive elliptic point: every a-arc and
    /// every b-arc has one positive endpoint.
    pub fn needs_positive_corner(self) -> bool {
        self != RegionType::Cc
    }
}

impl fmt::Display for RegionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RegionType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown region type '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elliptic {
    pub sign: Sign,
    pub binding: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hyperbolic {
    pub sign: Sign,
    pub kind: RegionType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub hyperbolics: Vec<u32>,
    /// Elliptic corners, unordered.
    pub corners: BTreeSet<u32>,
}

impl Region {
    /// Regions are named by their hyperbolic point.
    pub fn id(&self) -> Option<u32> {
        self.hyperbolics.first().copied()
    }
}

/// A combinatorial open book foliation: signed singular points, typed
/// regions, and the binding component each elliptic point sits on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FoliationComplex {
    pub bindings: BTreeSet<String>,
    pub elliptics: BTreeMap<u32, Elliptic>,
    pub hyperbolics: BTreeMap<u32, Hyperbolic>,
    pub regions: Vec<Region>,
    /// Caller-asserted: every b-arc is essential.
    pub essential: bool,
    /// Caller-asserted: `g(F) = g(K, [F])`.
    pub minimal_genus: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PointCounts {
    pub e_pos: i64,
    pub e_neg: i64,
    pub h_pos: i64,
    pub h_neg: i64,
}

impl FoliationComplex {
    pub fn counts(&self) -> PointCounts {
        let mut c = PointCounts::default();
        for e in self.elliptics.values() {
            match e.sign {
                Sign::Positive => c.e_pos += 1,
                Sign::Negative => c.e_neg += 1,
            }
        }
        for h in self.hyperbolics.values() {
            match h.sign {
                Sign::Positive => c.h_pos += 1,
                Sign::Negative => c.h_neg += 1,
            }
        }
        c
    }

    pub fn region(&self, id: u32) -> Option<&Region> {
        self.regions.iter().find(|r| r.hyperbolics.contains(&id))
    }

    pub fn negative_corners<'a>(&'a self, r: &'a Region) -> impl Iterator<Item = u32> + 'a {
        r.corners
            .iter()
            .copied()
            .filter(|e| self.elliptics.get(e).is_some_and(|p| p.sign == Sign::Negative))
    }

    /// The type and sign of a region, read from its (first) hyperbolic point.
    pub fn region_kind(&self, r: &Region) -> Option<Hyperbolic> {
        r.id().and_then(|h| self.hyperbolics.get(&h).copied())
    }

    pub fn is_bennequin(&self) -> bool {
        self.counts().e_neg == 0
            && self.hyperbolics.values().all(|h| h.kind == RegionType::Aa)
    }

    /// Sorts regions by id so that equal complexes compare and print equally.
    pub fn normalize(&mut self) {
        for r in &mut self.regions {
            r.hyperbolics.sort_unstable();
        }
        self.regions
            .sort_by(|a, b| a.hyperbolics.cmp(&b.hyperbolics).then(a.corners.cmp(&b.corners)));
    }

    /// The invalid-complex error for the first violation, if any.
    pub fn ensure_valid(&self) -> Result<(), Error> {
        match validate_complex(self).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidComplex(v.to_string())),
        }
    }
}

/// A broken structural rule, reported as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub region: Option<u32>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.region {
            Some(r) => write!(f, "region {r}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

pub fn validate_complex(c: &FoliationComplex) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |region: Option<u32>, message: String| out.push(Violation { region, message });

    for (id, e) in &c.elliptics {
        if !c.bindings.contains(&e.binding) {
            push(
                None,
                format!("elliptic point {id} lies on unknown binding component '{}'", e.binding),
            );
        }
    }

    let mut owner: BTreeMap<u32, usize> = BTreeMap::new();
    for r in &c.regions {
        for h in &r.hyperbolics {
            *owner.entry(*h).or_default() += 1;
        }
    }
    for id in c.hyperbolics.keys() {
        match owner.get(id).copied().unwrap_or(0) {
            1 => {}
            0 => push(None, format!("hyperbolic point {id} lies in no region")),
            k => push(None, format!("hyperbolic point {id} lies in {k} regions")),
        }
    }

    for r in &c.regions {
        let rid = r.id();
        if r.hyperbolics.len() != 1 {
            push(
                rid,
                format!(
                    "a region must contain exactly one hyperbolic point, found {}",
                    r.hyperbolics.len()
                ),
            );
        }
        for h in &r.hyperbolics {
            if !c.hyperbolics.contains_key(h) {
                push(rid, format!("unknown hyperbolic point {h}"));
            }
        }
        for e in &r.corners {
            if !c.elliptics.contains_key(e) {
                push(rid, format!("unknown elliptic point {e}"));
            }
        }
        let kinds: BTreeSet<RegionType> = r
            .hyperbolics
            .iter()
            .filter_map(|h| c.hyperbolics.get(h))
            .map(|h| h.kind)
            .collect();
        if kinds.len() > 1 {
            push(rid, "hyperbolic points of one region disagree on its type".into());
        }
        let Some(kind) = kinds.into_iter().next() else {
            continue;
        };
        let negatives = c.negative_corners(r).count();
        let positives = r
            .corners
            .iter()
            .filter(|e| c.elliptics.get(e).is_some_and(|p| p.sign == Sign::Positive))
            .count();
        match kind {
            RegionType::Aa | RegionType::Ac if negatives > 0 => {
                push(rid, "a-arc endpoint must be positive elliptic".into());
            }
            RegionType::Cc if !r.corners.is_empty() => {
                push(rid, "a cc-region has no elliptic corners".into());
            }
            _ if negatives != kind.negative_corners() => push(
                rid,
                format!(
                    "{kind}-region needs {} negative elliptic corner(s), found {negatives}",
                    kind.negative_corners()
                ),
            ),
            _ => {}
        }
        if kind.needs_positive_corner() && positives == 0 {
            push(rid, format!("{kind}-region needs a positive elliptic corner"));
        }
    }
    out
}

pub fn from_bennequin_surface(f: &BennequinSurface) -> FoliationComplex {
    let binding = "B".to_string();
    let mut c = FoliationComplex {
        bindings: BTreeSet::from([binding.clone()]),
        ..Default::default()
    };
    for d in 1..=f.disks() as u32 {
        c.elliptics.insert(
            d,
            Elliptic {
                sign: Sign::Positive,
                binding: binding.clone(),
            },
        );
    }
    for (k, b) in f.bands().iter().enumerate() {
        let id = k as u32 + 1;
        c.hyperbolics.insert(
            id,
            Hyperbolic {
                sign: b.sign,
                kind: RegionType::Aa,
            },
        );
        c.regions.push(Region {
            hyperbolics: vec![id],
            corners: BTreeSet::from([b.i as u32, b.j as u32]),
        });
    }
    c
}

fn sign_char(s: Sign) -> char {
    if s.is_positive() {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for FoliationComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bindings")?;
        for b in &self.bindings {
            write!(f, " {b}")?;
        }
        writeln!(f)?;
        for (id, e) in &self.elliptics {
            writeln!(f, "elliptic {id} {} {}", sign_char(e.sign), e.binding)?;
        }
        for (id, h) in &self.hyperbolics {
            writeln!(f, "hyperbolic {id} {} {}", sign_char(h.sign), h.kind)?;
        }
        let mut regions = self.regions.clone();
        for r in &mut regions {
            r.hyperbolics.sort_unstable();
        }
        regions.sort_by(|a, b| a.hyperbolics.cmp(&b.hyperbolics).then(a.corners.cmp(&b.corners)));
        for r in &regions {
            let hs: Vec<String> = r.hyperbolics.iter().map(u32::to_string).collect();
            write!(f, "region {}", hs.join(","))?;
            for e in &r.corners {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        write!(f, "flags")?;
        if self.essential {
            write!(f, " essential")?;
        }
        if self.minimal_genus {
            write!(f, " minimalGenus")?;
        }
        writeln!(f)
    }
}

fn parse_sign(s: &str, line: &str) -> Result<Sign, Error> {
    match s {
        "+" | "+1" => Ok(Sign::Positive),
        "-" | "-1" => Ok(Sign::Negative),
        _ => Err(Error::Malformed(format!("bad sign '{s}' in '{line}'"))),
    }
}

fn parse_id(s: &str, line: &str) -> Result<u32, Error> {
    s.parse()
        .map_err(|_| Error::Malformed(format!("bad id '{s}' in '{line}'")))
}

impl FromStr for FoliationComplex {
    type Err = Error;

    /// Parses the line format written by `Display`. `#` starts a comment.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut c = FoliationComplex::default();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            match f[0] {
                "bindings" => c.bindings.extend(f[1..].iter().map(|s| s.to_string())),
                "elliptic" => {
                    let [_, id, s, b] = f.as_slice() else {
                        return Err(Error::Malformed(format!("expected 'elliptic id sign binding': '{line}'")));
                    };
                    let id = parse_id(id, line)?;
                    let e = Elliptic {
                        sign: parse_sign(s, line)?,
                        binding: b.to_string(),
                    };
                    if c.elliptics.insert(id, e).is_some() {
                        return Err(Error::Malformed(format!("duplicate elliptic id {id}")));
                    }
                }
                "hyperbolic" => {
                    let [_, id, s, t] = f.as_slice() else {
                        return Err(Error::Malformed(format!("expected 'hyperbolic id sign type': '{line}'")));
                    };
                    let id = parse_id(id, line)?;
                    let h = Hyperbolic {
                        sign: parse_sign(s, line)?,
                        kind: t.parse()?,
                    };
                    if c.hyperbolics.insert(id, h).is_some() {
                        return Err(Error::Malformed(format!("duplicate hyperbolic id {id}")));
                    }
                }
                "region" => {
                    let hs = f
                        .get(1)
                        .ok_or_else(|| Error::Malformed(format!("region without hyperbolic id: '{line}'")))?;
                    let hyperbolics = hs
                        .split(',')
                        .map(|h| parse_id(h, line))
                        .collect::<Result<Vec<_>, _>>()?;
                    let mut corners = BTreeSet::new();
                    for e in &f[2..] {
                        if !corners.insert(parse_id(e, line)?) {
                            return Err(Error::Malformed(format!("repeated corner {e} in '{line}'")));
                        }
                    }
                    c.regions.push(Region {
                        hyperbolics,
                        corners,
                    });
                }
                "flags" => {
                    for flag in &f[1..] {
                        match *flag {
                            "essential" => c.essential = true,
                            "minimalGenus" => c.minimal_genus = true,
                            _ => return Err(Error::Malformed(format!("unknown flag '{flag}'"))),
                        }
                    }
                }
                other => return Err(Error::Malformed(format!("unknown section '{other}'"))),
            }
        }
        c.normalize();
        Ok(c)
    }
}
