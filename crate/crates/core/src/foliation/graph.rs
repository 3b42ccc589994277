use std::collections::BTreeMap;
use std::fmt;

use super::complex::{FoliationComplex, RegionType};
use crate::braid::Sign;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Elliptic(u32),
    Fake(u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Elliptic(e) => write!(f, "e{e}"),
            Vertex::Fake(k) => write!(f, "f{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: Vertex,
    pub b: Vertex,
    /// The negative hyperbolic point the edge passes through.
    pub hyperbolic: u32,
}

/// The graph on negative elliptic points with one edge per negative ab-, bb-
/// or bc-region, padded with fake vertices where an edge has no second
/// negative endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtendedGraph {
    pub non_fake: Vec<u32>,
    pub fake: Vec<u32>,
    pub edges: Vec<Edge>,
}

impl ExtendedGraph {
    pub fn valence(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.a == v) + usize::from(e.b == v))
            .sum()
    }

    pub fn valences(&self) -> BTreeMap<Vertex, usize> {
        let mut out: BTreeMap<Vertex, usize> = self
            .non_fake
            .iter()
            .map(|&e| (Vertex::Elliptic(e), 0))
            .chain(self.fake.iter().map(|&k| (Vertex::Fake(k), 0)))
            .collect();
        for e in &self.edges {
            *out.entry(e.a).or_default() += 1;
            *out.entry(e.b).or_default() += 1;
        }
        out
    }
}

pub fn extended_graph(c: &FoliationComplex) -> Result<ExtendedGraph, Error> {
    c.ensure_valid()?;
    let mut g = ExtendedGraph {
        non_fake: c
            .elliptics
            .iter()
            .filter(|(_, e)| e.sign == Sign::Negative)
            .map(|(id, _)| *id)
            .collect(),
        ..Default::default()
    };
    let mut regions: Vec<_> = c.regions.iter().collect();
    regions.sort_by_key(|r| r.id());
    for r in regions {
        let h = c.region_kind(r).expect("valid complex");
        if h.sign == Sign::Positive || !matches!(h.kind, RegionType::Ab | RegionType::Bb | RegionType::Bc) {
            continue;
        }
        let mut ends: Vec<Vertex> = c.negative_corners(r).map(Vertex::Elliptic).collect();
        while ends.len() < 2 {
            let k = g.fake.len() as u32 + 1;
            g.fake.push(k);
            ends.push(Vertex::Fake(k));
        }
        g.edges.push(Edge {
            a: ends[0],
            b: ends[1],
            hyperbolic: r.id().expect("valid complex"),
        });
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyLemmaResult {
    pub min_non_fake_valence: usize,
    pub bound: i64,
    pub holds: bool,
}

/// Some negative elliptic point has valence at most `δ + 2` in the extended
/// graph, where `δ = h₋ - e₋` for a minimal genus surface.
pub fn key_lemma_check(c: &FoliationComplex) -> Result<KeyLemmaResult, Error> {
    let g = extended_graph(c)?;
    let k = c.counts();
    if k.e_neg < 1 {
        return Err(Error::Precondition("needs at least one negative elliptic point".into()));
    }
    if !c.minimal_genus {
        return Err(Error::Precondition("needs the minimalGenus flag".into()));
    }
    let delta = k.h_neg - k.e_neg;
    if delta < 0 {
        return Err(Error::Precondition(format!("h₋ - e₋ = {delta} is negative")));
    }
    let min = g
        .non_fake
        .iter()
        .map(|&e| g.valence(Vertex::Elliptic(e)))
        .min()
        .expect("e₋ >= 1");
    let bound = delta + 2;
    Ok(KeyLemmaResult {
        min_non_fake_valence: min,
        bound,
        holds: min as i64 <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_band_word;
    use crate::foliation::from_bennequin_surface;
    use crate::surface::build_surface;

    fn tiles_at_one_vertex(d: usize) -> FoliationComplex {
        let mut text = String::from("bindings C\nelliptic 1 + C\nelliptic 2 - C\n");
        for h in 1..=d {
            text += &format!("hyperbolic {h} - ab\nregion {h} 1 2\n");
        }
        text += "flags minimalGenus\n";
        text.parse().unwrap()
    }

    #[test]
    fn single_tile() {
        let c = tiles_at_one_vertex(1);
        let g = extended_graph(&c).unwrap();
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.fake, vec![1]);
        assert_eq!(g.valence(Vertex::Elliptic(2)), 1);
        assert_eq!(g.valence(Vertex::Fake(1)), 1);
        let r = key_lemma_check(&c).unwrap();
        assert_eq!(
            r,
            KeyLemmaResult {
                min_non_fake_valence: 1,
                bound: 2,
                holds: true
            }
        );
    }

    #[test]
    fn many_tiles_at_one_vertex() {
        for d in 1..=6 {
            let c = tiles_at_one_vertex(d);
            let g = extended_graph(&c).unwrap();
            assert_eq!(g.valence(Vertex::Elliptic(2)), d);
            let r = key_lemma_check(&c).unwrap();
            assert_eq!(r.bound, d as i64 + 1);
            assert!(r.holds);
        }
    }

    #[test]
    fn bennequin_complex_has_empty_graph() {
        let w = parse_band_word("s(1,2)^-1 s(2,3) s(1,3)^-1", 3).unwrap();
        let c = from_bennequin_surface(&build_surface(&w));
        assert_eq!(extended_graph(&c).unwrap(), ExtendedGraph::default());
        assert!(matches!(key_lemma_check(&c), Err(Error::Precondition(_))));
    }

    #[test]
    fn bb_edges_join_two_negative_points() {
        let c: FoliationComplex = "bindings C\nelliptic 1 + C\nelliptic 2 - C\nelliptic 3 - C\n\
             elliptic 4 - C\nhyperbolic 1 - bb\nhyperbolic 2 + ab\nregion 1 1 2 3\nregion 2 1 4\n\
             flags minimalGenus\n"
            .parse()
            .unwrap();
        let g = extended_graph(&c).unwrap();
        assert_eq!(g.edges.len(), 1);
        assert!(g.fake.is_empty());
        let v = g.valences();
        assert_eq!(v[&Vertex::Elliptic(4)], 0);
        assert_eq!(v[&Vertex::Elliptic(2)], 1);
        assert!(matches!(key_lemma_check(&c), Err(Error::Precondition(_))));
    }
}
