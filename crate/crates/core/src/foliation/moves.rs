use super::complex::{FoliationComplex, RegionType};
use crate::braid::Sign;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizationKind {
    /// Removing a negative ab-tile; preserves the self-linking number.
    Positive,
    /// Removing a positive ab-tile; lowers the self-linking number by 2.
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilized {
    pub complex: FoliationComplex,
    pub kind: StabilizationKind,
    pub removed_elliptic: u32,
    pub removed_hyperbolic: u32,
}

/// Removes the ab-tile named by its hyperbolic point `region`, together with
/// its negative elliptic point `v`. The other regions at `v` trade that corner
/// for the positive corners of the removed tile, since their b-arcs to `v`
/// become a-arcs through it: ab becomes aa, bb becomes ab, bc becomes ac.
pub fn ab_stabilization(c: &FoliationComplex, region: u32) -> Result<Stabilized, Error> {
    c.ensure_valid()?;
    let r = c.region(region).ok_or(Error::UnknownRegion(region))?;
    let h = c.region_kind(r).expect("valid complex");
    if h.kind != RegionType::Ab {
        return Err(Error::NotAbTile(region));
    }
    let v = c.negative_corners(r).next().expect("valid ab-tile");
    let inherited: Vec<u32> = r.corners.iter().copied().filter(|&e| e != v).collect();
    let mut out = c.clone();
    out.elliptics.remove(&v);
    out.hyperbolics.remove(&region);
    out.regions.retain(|r| !r.hyperbolics.contains(&region));
    for r in &mut out.regions {
        if !r.corners.remove(&v) {
            continue;
        }
        r.corners.extend(inherited.iter().copied());
        for id in &r.hyperbolics {
            let p = out.hyperbolics.get_mut(id).expect("valid complex");
            p.kind = match p.kind {
                RegionType::Ab => RegionType::Aa,
                RegionType::Bb => RegionType::Ab,
                RegionType::Bc => RegionType::Ac,
                other => other,
            };
        }
    }
    debug_assert!(out.ensure_valid().is_ok());
    Ok(Stabilized {
        complex: out,
        kind: match h.sign {
            Sign::Negative => StabilizationKind::Positive,
            Sign::Positive => StabilizationKind::Negative,
        },
        removed_elliptic: v,
        removed_hyperbolic: region,
    })
}

/// Repeatedly stabilizes along the ab-tile with the smallest id until none
/// is left. On a complex without bb-tiles or c-circles every negative
/// elliptic point sits on an ab-tile, so the result is all aa.
pub fn stabilize_all_ab(c: &FoliationComplex) -> Result<(FoliationComplex, Vec<Stabilized>), Error> {
    let mut cur = c.clone();
    let mut steps = Vec::new();
    loop {
        let next = cur
            .regions
            .iter()
            .filter(|r| cur.region_kind(r).is_some_and(|h| h.kind == RegionType::Ab))
            .filter_map(|r| r.id())
            .min();
        let Some(id) = next else {
            return Ok((cur, steps));
        };
        let s = ab_stabilization(&cur, id)?;
        cur = s.complex.clone();
        steps.push(s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::euler_and_sl;

    /// A disk: one negative elliptic point shared by a negative and a
    /// positive ab-tile.
    const TWO_TILE_DISK: &str = "\
bindings C0
elliptic 1 + C0
elliptic 2 + C0
elliptic 3 - C0
hyperbolic 1 - ab
hyperbolic 2 + ab
region 1 1 3
region 2 2 3
flags essential
";

    #[test]
    fn stabilizing_along_the_negative_tile() {
        let c: FoliationComplex = TWO_TILE_DISK.parse().unwrap();
        let (chi, sl) = euler_and_sl(&c).unwrap();
        let s = ab_stabilization(&c, 1).unwrap();
        assert_eq!(s.kind, StabilizationKind::Positive);
        assert_eq!(s.removed_elliptic, 3);
        assert!(s.complex.is_bennequin());
        assert_eq!(s.complex.hyperbolics[&2].kind, RegionType::Aa);
        assert_eq!(euler_and_sl(&s.complex).unwrap(), (chi, sl));
    }

    #[test]
    fn stabilizing_along_the_positive_tile() {
        let c: FoliationComplex = TWO_TILE_DISK.parse().unwrap();
        let (chi, sl) = euler_and_sl(&c).unwrap();
        let s = ab_stabilization(&c, 2).unwrap();
        assert_eq!(s.kind, StabilizationKind::Negative);
        assert_eq!(s.complex.region(1).unwrap().corners, [1, 2].into());
        assert_eq!(euler_and_sl(&s.complex).unwrap(), (chi, sl - 2));
    }

    #[test]
    fn errors() {
        let c: FoliationComplex = "bindings C\nelliptic 1 + C\nhyperbolic 1 + aa\nregion 1 1\n"
            .parse()
            .unwrap();
        assert_eq!(ab_stabilization(&c, 1), Err(Error::NotAbTile(1)));
        assert_eq!(ab_stabilization(&c, 9), Err(Error::UnknownRegion(9)));
    }

    #[test]
    fn bb_and_bc_regions_are_retyped() {
        let c: FoliationComplex = "bindings C\nelliptic 1 + C\nelliptic 2 - C\nelliptic 3 - C\n\
             hyperbolic 1 - ab\nhyperbolic 2 - bb\nhyperbolic 3 + bc\n\
             region 1 1 2\nregion 2 1 2 3\nregion 3 1 2\n"
            .parse()
            .unwrap();
        let s = ab_stabilization(&c, 1).unwrap();
        assert_eq!(s.complex.hyperbolics[&2].kind, RegionType::Ab);
        assert_eq!(s.complex.hyperbolics[&3].kind, RegionType::Ac);
        let (done, steps) = stabilize_all_ab(&c).unwrap();
        assert_eq!(steps.len(), 2);
        assert!(done.counts().e_neg == 0);
    }
}
