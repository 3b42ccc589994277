//! Bennequin surfaces `F_w`: one disk per strand and one twisted band per
//! letter, and the defect bookkeeping of the Bennequin inequality.

use std::fmt;

use crate::braid::{closure_profile, BandGenerator, BandWord, Sign};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Band {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
    /// Position along the binding direction; stands in for the page parameter.
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BennequinSurface {
    n: usize,
    bands: Vec<Band>,
}

impl BennequinSurface {
    pub fn new(n: usize, bands: Vec<Band>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        for b in &bands {
            BandGenerator::new(b.i, b.j, b.sign)?;
            if b.j > n {
                return Err(Error::IndexOutOfRange {
                    index: b.j,
                    strands: n,
                });
            }
        }
        if bands.windows(2).any(|p| p[0].slot >= p[1].slot) {
            return Err(Error::Malformed("band slots must strictly increase".into()));
        }
        Ok(BennequinSurface { n, bands })
    }

    pub fn disks(&self) -> usize {
        self.n
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// The boundary braid, read off in slot order.
    pub fn boundary_word(&self) -> BandWord {
        let letters = self
            .bands
            .iter()
            .map(|b| BandGenerator::new(b.i, b.j, b.sign).expect("validated"))
            .collect();
        BandWord::new(self.n, letters).expect("validated")
    }

    /// Parses the format produced by `Display`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut n = None;
        let mut bands = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad number '{s}' in '{line}'")))
            };
            match f.as_slice() {
                ["disks", k] => n = Some(num(k)?),
                ["band", i, j, s, slot] => {
                    let sign = match *s {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        _ => return Err(Error::Malformed(format!("bad sign in '{line}'"))),
                    };
                    bands.push(Band {
                        i: num(i)?,
                        j: num(j)?,
                        sign,
                        slot: num(slot)?,
                    });
                }
                _ => return Err(Error::Malformed(format!("unrecognized line '{line}'"))),
            }
        }
        let n = n.ok_or_else(|| Error::Malformed("missing 'disks' line".into()))?;
        Self::new(n, bands)
    }
}

impl fmt::Display for BennequinSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "disks {}", self.n)?;
        for b in &self.bands {
            let s = if b.sign.is_positive() { '+' } else { '-' };
            writeln!(f, "band {} {} {} {}", b.i, b.j, s, b.slot)?;
        }
        Ok(())
    }
}

pub fn build_surface(w: &BandWord) -> BennequinSurface {
    let bands = w
        .letters()
        .iter()
        .enumerate()
        .map(|(slot, g)| Band {
            i: g.i(),
            j: g.j(),
            sign: g.sign(),
            slot,
        })
        .collect();
    BennequinSurface {
        n: w.strands(),
        bands,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceStats {
    pub euler_char: i64,
    pub components: usize,
    pub boundary_components: usize,
    /// Only defined when the surface is connected.
    pub genus: Option<i64>,
    pub negative_bands: usize,
    pub positive_bands: usize,
    /// A disconnected `F_w` forces a vanishing Alexander polynomial, hence a
    /// non-fibered closure. Advisory only: nothing here computes that
    /// polynomial.
    pub non_fibered_hint: bool,
}

/// One connected piece of `F_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGenus {
    pub disks: Vec<usize>,
    pub bands: usize,
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: i64,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Disk labels (0-based) of each component root.
fn disk_roots(f: &BennequinSurface) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..f.n).collect();
    for b in &f.bands {
        let (a, c) = (find(&mut parent, b.i - 1), find(&mut parent, b.j - 1));
        if a != c {
            parent[a.max(c)] = a.min(c);
        }
    }
    (0..f.n).map(|x| find(&mut parent, x)).collect()
}

fn genus_from(euler_char: i64, boundary: usize) -> i64 {
    let twice = 2 - euler_char - boundary as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    twice / 2
}

pub fn surface_stats(f: &BennequinSurface) -> SurfaceStats {
    let roots = disk_roots(f);
    let mut distinct = roots.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let components = distinct.len();
    let euler_char = f.n as i64 - f.bands.len() as i64;
    let boundary_components = closure_profile(&f.boundary_word()).component_count;
    let negative_bands = f.bands.iter().filter(|b| !b.sign.is_positive()).count();
    SurfaceStats {
        euler_char,
        components,
        boundary_components,
        genus: (components == 1).then(|| genus_from(euler_char, boundary_components)),
        negative_bands,
        positive_bands: f.bands.len() - negative_bands,
        non_fibered_hint: components > 1,
    }
}

pub fn component_genera(f: &BennequinSurface) -> Vec<ComponentGenus> {
    let roots = disk_roots(f);
    let cycles = closure_profile(&f.boundary_word()).cycles;
    let mut out: Vec<ComponentGenus> = Vec::new();
    let mut order: Vec<usize> = roots.clone();
    order.sort_unstable();
    order.dedup();
    for r in order {
        let disks: Vec<usize> = (0..f.n).filter(|&d| roots[d] == r).map(|d| d + 1).collect();
        let bands = f.bands.iter().filter(|b| roots[b.i - 1] == r).count();
        let boundary = cycles.iter().filter(|c| roots[c[0] - 1] == r).count();
        let euler_char = disks.len() as i64 - bands as i64;
        out.push(ComponentGenus {
            genus: genus_from(euler_char, boundary),
            disks,
            bands,
            euler_char,
            boundary_components: boundary,
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub sl: i64,
    /// `-χ(𝒯) = 2g(𝒯) - 2 + |𝒯|` for the supplied genus.
    pub minus_chi: i64,
    pub defect: i64,
    pub negative_bands: usize,
    pub minimal_genus_consistent: bool,
    pub genus_of_link: u64,
    /// `g(F_w)`, when `F_w` is connected.
    pub surface_genus: Option<i64>,
}

impl DefectReport {
    /// `g(F_w) - g(𝒯)`; equals `negative_bands - defect` for connected `F_w`.
    pub fn genus_gap(&self) -> Option<i64> {
        self.surface_genus.map(|g| g - self.genus_of_link as i64)
    }
}

/// Defect of the Bennequin inequality for the closure of `w`, given its
/// topological genus (trusted external input).
pub fn defect_report(w: &BandWord, genus_of_link: u64) -> Result<DefectReport, Error> {
    let profile = closure_profile(w);
    let sl = w.self_linking();
    let minus_chi = 2 * genus_of_link as i64 - 2 + profile.component_count as i64;
    let diff = minus_chi - sl;
    if diff % 2 != 0 {
        return Err(Error::Parity(diff));
    }
    let stats = surface_stats(&build_surface(w));
    let defect = diff / 2;
    Ok(DefectReport {
        sl,
        minus_chi,
        defect,
        negative_bands: stats.negative_bands,
        minimal_genus_consistent: stats.negative_bands as i64 == defect,
        genus_of_link,
        surface_genus: stats.genus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_band_word, HIRASAWA_STOIMENOW};

    #[test]
    fn build_examples() {
        let f = build_surface(&BandWord::identity(3).unwrap());
        assert_eq!((f.disks(), f.bands().len()), (3, 0));
        let w = parse_band_word("s(2,4)^-1 s(1,4) s(2,3)^-1 s(1,3) s(2,4)^-1", 4).unwrap();
        let s = surface_stats(&build_surface(&w));
        assert_eq!((s.negative_bands, s.positive_bands), (3, 2));
        let w = parse_band_word(HIRASAWA_STOIMENOW, 4).unwrap();
        let f = build_surface(&w);
        assert_eq!(f.bands().len(), 11);
        assert_eq!(surface_stats(&f).negative_bands, 6);
    }

    #[test]
    fn hs_stats() {
        let w = parse_band_word(HIRASAWA_STOIMENOW, 4).unwrap();
        let s = surface_stats(&build_surface(&w));
        assert_eq!(s.euler_char, -7);
        assert_eq!(s.components, 1);
        assert_eq!(s.boundary_components, 1);
        assert_eq!(s.genus, Some(4));
        assert!(!s.non_fibered_hint);
    }

    #[test]
    fn crossing_chords_give_two_components() {
        let w = parse_band_word("s(1,3) s(2,4)^-1 s(1,3)^-1 s(2,4)^2", 4).unwrap();
        let f = build_surface(&w);
        let s = surface_stats(&f);
        assert_eq!(s.components, 2);
        assert_eq!(s.genus, None);
        assert!(s.non_fibered_hint);
        let parts = component_genera(&f);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].disks, vec![1, 3]);
        assert_eq!(parts[1].disks, vec![2, 4]);
        assert_eq!(parts.iter().map(|p| p.euler_char).sum::<i64>(), s.euler_char);
    }

    #[test]
    fn rotation_braid_is_an_annulus() {
        let w = parse_band_word("s(1,2) s(2,3) s(3,4) s(1,4)", 4).unwrap();
        let s = surface_stats(&build_surface(&w));
        assert_eq!((s.euler_char, s.components, s.boundary_components), (0, 1, 2));
        assert_eq!(s.genus, Some(0));
    }

    #[test]
    fn defect_examples() {
        let w = parse_band_word(HIRASAWA_STOIMENOW, 4).unwrap();
        let r = defect_report(&w, 3).unwrap();
        assert_eq!((r.sl, r.minus_chi, r.defect, r.negative_bands), (-5, 5, 5, 6));
        assert!(!r.minimal_genus_consistent);
        assert_eq!(r.genus_gap(), Some(1));
        assert_eq!(r.negative_bands as i64 - r.defect, 1);

        let w = parse_band_word("s(1,2) s(2,3) s(1,3)", 3).unwrap();
        let g = surface_stats(&build_surface(&w)).genus.unwrap() as u64;
        let r = defect_report(&w, g).unwrap();
        assert_eq!((r.defect, r.negative_bands), (0, 0));
        assert!(r.minimal_genus_consistent);

        let r = defect_report(&BandWord::identity(1).unwrap(), 0).unwrap();
        assert_eq!((r.sl, r.minus_chi, r.defect), (-1, -1, 0));
    }

    #[test]
    fn sl_and_component_count_share_parity() {
        // So the parity check in defect_report never fires on a real closure.
        for n in 1..=4 {
            for g in 0..3 {
                let w = BandWord::delta_power(n, 3).unwrap();
                assert!(defect_report(&w, g).is_ok());
                assert!(defect_report(&w.inverse(), g).is_ok());
            }
        }
    }

    #[test]
    fn serialization_round_trips() {
        let w = parse_band_word(HIRASAWA_STOIMENOW, 4).unwrap();
        let f = build_surface(&w);
        assert_eq!(BennequinSurface::parse(&f.to_string()).unwrap(), f);
        assert_eq!(f.boundary_word(), w);
        assert!(BennequinSurface::parse("disks 3\nband 1 2 + 4\nband 2 3 + 4\n").is_err());
    }

    #[test]
    fn retiming_preserves_stats() {
        let w = parse_band_word(HIRASAWA_STOIMENOW, 4).unwrap();
        let f = build_surface(&w);
        let stretched: Vec<Band> = f
            .bands()
            .iter()
            .map(|b| Band {
                slot: 3 * b.slot + 7,
                ..*b
            })
            .collect();
        let g = BennequinSurface::new(4, stretched).unwrap();
        assert_eq!(surface_stats(&f), surface_stats(&g));
    }
}
