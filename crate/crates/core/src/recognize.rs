//! Recognition of small orbifolds from invariants of a simplified triangulation.
//!
//! A triangulation is recognized only after it has been reduced to at most two
//! tetrahedra. At that size the support manifold is determined by its first
//! homology among S³, P³ and L(3,1), and singular edges are taken to be unknotted.

use crate::error::Result;
use crate::homology::{cycle_order, h1, path_chain, H1};
use crate::orbtri::{iso_signature, singular_graph, OrbifoldTriangulation};
use crate::simplify::simplify;
use crate::spine::ExceptionalKind;
use crate::twoorb::DiscalKind;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest simplified size at which recognition is attempted.
pub const RECOGNITION_TETS: usize = 2;

/// Seeds tried by [`simplest`].
pub const SIMPLIFY_TRIES: u64 = 4;

/// Topological invariants used for recognition and for grouping census entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Invariants {
    pub h1: H1,
    /// Order of each singular circle with its order in `H1` when finite, sorted.
    pub circles: Vec<(u32, Option<u64>)>,
    /// Order of each singular arc with the sorted order triples at its ends, sorted.
    pub arcs: Vec<(u32, [u32; 3], [u32; 3])>,
}

pub fn invariants(tri: &OrbifoldTriangulation) -> Result<Invariants> {
    let g = singular_graph(tri)?;
    let h = h1(tri);
    let mut circles: Vec<(u32, Option<u64>)> = g
        .circles
        .iter()
        .zip(&g.circle_forward)
        .map(|(c, f)| (tri.order(c[0]), cycle_order(tri, &path_chain(tri, c, f))))
        .collect();
    circles.sort_unstable();
    let triple = |v: usize| -> [u32; 3] {
        let mut t = [0u32; 3];
        let mut k = 0;
        for c in tri.singular_classes() {
            for end in tri.skeleton().edges[c].ends {
                if end == v && k < 3 {
                    t[k] = tri.order(c);
                    k += 1;
                }
            }
        }
        t.sort_unstable();
        t
    };
    let mut arcs: Vec<(u32, [u32; 3], [u32; 3])> = g
        .arcs
        .iter()
        .zip(&g.arc_ends)
        .map(|(a, &(x, y))| {
            let (tx, ty) = (triple(x), triple(y));
            (tri.order(a[0]), tx.min(ty), tx.max(ty))
        })
        .collect();
    arcs.sort_unstable();
    Ok(Invariants { h1: h, circles, arcs })
}

/// The smallest of several seeded simplifications, ties broken by signature.
pub fn simplest(tri: &OrbifoldTriangulation, budget: usize) -> OrbifoldTriangulation {
    let mut best: Option<(usize, String, OrbifoldTriangulation)> = None;
    for seed in 0..SIMPLIFY_TRIES {
        let s = simplify(tri, budget, &mut ChaCha8Rng::seed_from_u64(seed));
        let key = (s.tet_count(), iso_signature(&s));
        if best.as_ref().map_or(true, |(n, sig, _)| key < (*n, sig.clone())) {
            best = Some((key.0, key.1, s));
        }
        if best.as_ref().is_some_and(|b| b.0 <= 1) {
            break;
        }
    }
    best.expect("at least one try").2
}

/// Exceptional kind of a simplified triangulation, if it can be recognized.
pub fn recognize_simplified(tri: &OrbifoldTriangulation) -> Result<Option<ExceptionalKind>> {
    if tri.tet_count() > RECOGNITION_TETS {
        return Ok(None);
    }
    let inv = invariants(tri)?;
    let theta = |arcs: &[(u32, [u32; 3], [u32; 3])]| -> Option<ExceptionalKind> {
        let [a, b, c] = arcs else { return None };
        let t = a.1;
        let ok = arcs.iter().all(|x| x.1 == t && x.2 == t) && [a.0, b.0, c.0] == t;
        ok.then_some(ExceptionalKind::S3v(t[0], t[1], t[2]))
    };
    let torsion = inv.h1.order();
    Ok(match (torsion, &inv.circles[..], &inv.arcs[..]) {
        (Some(1), [], []) => Some(ExceptionalKind::S3o),
        (Some(1), [(p, _)], []) => Some(ExceptionalKind::S3c(*p)),
        (Some(1), [], arcs) => theta(arcs),
        (Some(2), [], []) => Some(ExceptionalKind::P3Fp(1)),
        (Some(2), [(p, Some(2))], []) => Some(ExceptionalKind::P3Fp(*p)),
        (Some(3), [], []) => Some(ExceptionalKind::L31Fp(1)),
        (Some(3), [(p, Some(3))], []) => Some(ExceptionalKind::L31Fp(*p)),
        _ => None,
    })
}

/// Simplifies and recognizes. Returns the simplified triangulation too.
pub fn recognize(tri: &OrbifoldTriangulation, budget: usize) -> Result<(OrbifoldTriangulation, Option<ExceptionalKind>)> {
    let s = simplest(tri, budget);
    let kind = recognize_simplified(&s)?;
    Ok((s, kind))
}

/// The spherical orbifold that a discal piece of the given kind caps off to.
pub fn capped_discal(kind: DiscalKind) -> ExceptionalKind {
    match kind {
        DiscalKind::Ordinary => ExceptionalKind::S3o,
        DiscalKind::Cyclic(p) => ExceptionalKind::S3c(p),
        DiscalKind::Vertex(p, q, r) => {
            let mut t = [p, q, r];
            t.sort_unstable();
            ExceptionalKind::S3v(t[0], t[1], t[2])
        }
    }
}

/// Whether a closed orbifold is the spherical one obtained by capping a discal piece of
/// the given kind. `None` when the invariants allow it but simplification stalled.
pub fn is_capped_discal(tri: &OrbifoldTriangulation, kind: DiscalKind, budget: usize) -> Result<Option<bool>> {
    discal_verdict(&simplest(tri, budget), kind)
}

/// [`is_capped_discal`] for a triangulation that is already simplified.
pub fn discal_verdict(simplified: &OrbifoldTriangulation, kind: DiscalKind) -> Result<Option<bool>> {
    let target = capped_discal(kind);
    let inv = invariants(simplified)?;
    let shape_ok = match target {
        ExceptionalKind::S3o => inv.circles.is_empty() && inv.arcs.is_empty(),
        ExceptionalKind::S3c(p) => inv.arcs.is_empty() && inv.circles.len() == 1 && inv.circles[0].0 == p,
        ExceptionalKind::S3v(..) => inv.circles.is_empty() && inv.arcs.len() == 3,
        _ => unreachable!("capped discal pieces are spherical"),
    };
    if !inv.h1.is_trivial() || !shape_ok {
        return Ok(Some(false));
    }
    Ok(recognize_simplified(simplified)?.map(|k| k == target))
}
