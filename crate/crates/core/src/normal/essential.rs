//! Essentiality of normal spherical 2-suborbifolds.

use super::{reconstruct, NormalCoordinates};
use crate::error::{OrbError, Result};
use crate::orbtri::{singular_graph, OrbifoldTriangulation};
use crate::recognize::{discal_verdict, simplest};
use crate::simplify::DEFAULT_BUDGET;
use crate::surgery::{cap, cut_along};
use crate::twoorb::{DiscalKind, TwoOrbClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Essentiality {
    Essential,
    Inessential,
    Unknown,
}

/// One side of a sphere after cutting and capping.
#[derive(Clone, Debug)]
pub struct CappedSide {
    pub capped: OrbifoldTriangulation,
    pub simplified: OrbifoldTriangulation,
    /// Whether this side is discal; `None` when undecided within budget.
    pub discal: Option<bool>,
    /// Whether the singular component through the cap is a circle.
    pub knot: bool,
}

#[derive(Clone, Debug)]
pub struct SphereAnalysis {
    pub kind: DiscalKind,
    pub sides: Vec<CappedSide>,
    pub verdict: Essentiality,
}

pub fn discal_kind(class: TwoOrbClass) -> Option<DiscalKind> {
    match class {
        TwoOrbClass::SphericalOrdinary => Some(DiscalKind::Ordinary),
        TwoOrbClass::SphericalCyclic(p) => Some(DiscalKind::Cyclic(p)),
        TwoOrbClass::SphericalVertex(p, q, r) => Some(DiscalKind::Vertex(p, q, r)),
        _ => None,
    }
}

fn through_circle(tri: &OrbifoldTriangulation, apex: usize) -> Result<bool> {
    let g = singular_graph(tri)?;
    let skel = tri.skeleton();
    Ok(tri
        .singular_classes()
        .into_iter()
        .filter(|&c| skel.edges[c].ends.contains(&apex))
        .any(|c| g.component_of(c).is_some_and(|k| k < g.circles.len())))
}

/// Cuts along a connected spherical surface, caps both sides and decides which are discal.
pub fn analyse_sphere(tri: &OrbifoldTriangulation, coords: &NormalCoordinates, budget: usize) -> Result<SphereAnalysis> {
    let surf = reconstruct(tri, coords)?;
    let [comp] = &surf.components[..] else {
        return Err(OrbError::InvalidCoordinates("surface is not connected".into()));
    };
    if !comp.is_sphere() {
        return Err(OrbError::InvalidCoordinates("surface is not a sphere".into()));
    }
    let kind = discal_kind(comp.class)
        .ok_or_else(|| OrbError::InvalidCoordinates(format!("{:?} is not spherical", comp.class)))?;
    let mut sides = Vec::new();
    for piece in cut_along(tri, coords)? {
        let (capped, apexes) = cap(&piece)?;
        let knot = match apexes.first() {
            Some(&a) => through_circle(&capped, a)?,
            None => false,
        };
        let simplified = simplest(&capped, budget);
        let discal = discal_verdict(&simplified, kind)?;
        sides.push(CappedSide { capped, simplified, discal, knot });
    }
    let verdict = if sides.iter().any(|s| s.discal == Some(true)) {
        Essentiality::Inessential
    } else if sides.iter().all(|s| s.discal == Some(false)) {
        Essentiality::Essential
    } else {
        Essentiality::Unknown
    };
    Ok(SphereAnalysis { kind, sides, verdict })
}

/// Essential iff neither side is discal.
pub fn is_essential_sphere(tri: &OrbifoldTriangulation, coords: &NormalCoordinates) -> Result<Essentiality> {
    let surf = reconstruct(tri, coords)?;
    if surf.components.len() == 1 && surf.components[0].vertex_link.is_some() {
        return Ok(Essentiality::Inessential);
    }
    Ok(analyse_sphere(tri, coords, DEFAULT_BUDGET)?.verdict)
}
