//! Dual special spines, the complexity weight of a triangulation, and the
//! closed-form complexities of the exceptional orbifolds.

use crate::error::{OrbError, Result};
use crate::orbtri::OrbifoldTriangulation;
use crate::perm::{edge_index, face_verts};
use crate::twoorb::is_admissible_triple;

/// An edge of the singular graph of the spine, dual to a face class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineEdge {
    /// Spine vertices (tetrahedra) at the two ends.
    pub ends: [usize; 2],
    /// Regions (edge classes) meeting along this edge, one per side of the dual face.
    pub regions: [usize; 3],
}

/// A 2-cell of the spine, dual to an edge class.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Region {
    /// Number of spine-edge germs on its boundary (the degree of the dual edge).
    pub boundary_length: usize,
    /// Crossings with the singular set as `(order, multiplicity)`.
    pub crossings: Vec<(u32, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpineComplex {
    pub vertex_count: usize,
    pub edges: Vec<SpineEdge>,
    /// The four edge germs at each vertex, indexed by tetrahedron face.
    pub vertex_edges: Vec<[usize; 4]>,
    pub regions: Vec<Region>,
}

/// `c(P, S(X))` split into its two contributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ComplexityWeight {
    pub vertex_count: u64,
    pub singular_contribution: u64,
}

impl ComplexityWeight {
    pub fn total(self) -> u64 {
        self.vertex_count + self.singular_contribution
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalKind {
    S3o,
    S3c(u32),
    S3v(u32, u32, u32),
    P3Fp(u32),
    L31Fp(u32),
}

impl std::fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExceptionalKind::S3o => write!(f, "S3o"),
            ExceptionalKind::S3c(p) => write!(f, "S3c({p})"),
            ExceptionalKind::S3v(p, q, r) => write!(f, "S3v({p},{q},{r})"),
            ExceptionalKind::P3Fp(p) => write!(f, "P3F({p})"),
            ExceptionalKind::L31Fp(p) => write!(f, "L31F({p})"),
        }
    }
}

impl std::str::FromStr for ExceptionalKind {
    type Err = OrbError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || OrbError::Parse { line: 1, msg: format!("unknown orbifold kind {s:?}") };
        if s == "S3o" {
            return Ok(ExceptionalKind::S3o);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<u32> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, &args[..]) {
            ("S3c", &[p]) => Ok(ExceptionalKind::S3c(p)),
            ("S3v", &[p, q, r]) => Ok(ExceptionalKind::S3v(p, q, r)),
            ("P3F", &[p]) => Ok(ExceptionalKind::P3Fp(p)),
            ("L31F", &[p]) => Ok(ExceptionalKind::L31Fp(p)),
            _ => Err(bad()),
        }
    }
}

pub fn dual_spine(tri: &OrbifoldTriangulation) -> SpineComplex {
    let skel = tri.skeleton();
    let n = tri.tet_count();
    let mut edges: Vec<Option<SpineEdge>> = vec![None; skel.face_count];
    let mut vertex_edges = vec![[0usize; 4]; n];
    for t in 0..n {
        for f in 0..4 {
            let fc = skel.face_of[t][f];
            vertex_edges[t][f] = fc;
            if edges[fc].is_none() {
                let other = tri.table().get(t, f).map_or(t, |g| g.tet);
                let [a, b, c] = face_verts(f);
                let regions = [
                    skel.edge_of[t][edge_index(a, b)],
                    skel.edge_of[t][edge_index(a, c)],
                    skel.edge_of[t][edge_index(b, c)],
                ];
                edges[fc] = Some(SpineEdge { ends: [t, other], regions });
            }
        }
    }
    let regions = skel
        .edges
        .iter()
        .map(|ec| {
            let p = tri.order(ec.id);
            Region {
                boundary_length: ec.degree,
                crossings: if p >= 2 { vec![(p, 1)] } else { vec![] },
            }
        })
        .collect();
    SpineComplex {
        vertex_count: n,
        edges: edges.into_iter().map(|e| e.expect("every face class seen")).collect(),
        vertex_edges,
        regions,
    }
}

pub fn complexity_weight(tri: &OrbifoldTriangulation) -> ComplexityWeight {
    ComplexityWeight {
        vertex_count: tri.tet_count() as u64,
        singular_contribution: tri.orders().iter().map(|&p| p as u64 - 1).sum(),
    }
}

/// Weight read off a spine: its vertices plus `(p-1)` per crossing.
pub fn spine_weight(spine: &SpineComplex) -> ComplexityWeight {
    ComplexityWeight {
        vertex_count: spine.vertex_count as u64,
        singular_contribution: spine
            .regions
            .iter()
            .flat_map(|r| r.crossings.iter())
            .map(|&(p, m)| (p as u64 - 1) * m as u64)
            .sum(),
    }
}

/// True iff every region meets the singular set at most once.
pub fn region_singularity_check(spine: &SpineComplex) -> bool {
    spine
        .regions
        .iter()
        .all(|r| r.crossings.iter().map(|&(_, m)| m).sum::<usize>() <= 1)
}

pub fn exceptional_complexity(kind: ExceptionalKind) -> Result<u64> {
    let single = |p: u32| {
        if p == 0 {
            Err(OrbError::InvalidOrder(p))
        } else {
            Ok(p as u64 - 1)
        }
    };
    match kind {
        ExceptionalKind::S3o => Ok(0),
        ExceptionalKind::S3c(p) | ExceptionalKind::P3Fp(p) | ExceptionalKind::L31Fp(p) => single(p),
        ExceptionalKind::S3v(p, q, r) => {
            if is_admissible_triple(p, q, r) {
                Ok((p + q + r) as u64 - 3)
            } else {
                Err(OrbError::InvalidOrders(p, q, r))
            }
        }
    }
}

/// Lower bound `Σ (p−1)` over the components of the singular set minus its vertices,
/// each of which meets a spine of minimal weight exactly once.
pub fn singular_lower_bound(tri: &OrbifoldTriangulation) -> Result<u64> {
    let g = crate::orbtri::singular_graph(tri)?;
    Ok(g.arcs
        .iter()
        .chain(&g.circles)
        .map(|c| tri.order(c[0]) as u64 - 1)
        .sum())
}
