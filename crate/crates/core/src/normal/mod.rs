//! Normal surfaces in triangle/quad coordinates.
//!
//! Quad type `q` separates `{0, q+1}` from the other two vertices; copies of a
//! quad are counted starting from the side that contains vertex 0.

mod dd;
pub mod essential;
pub mod layout;
mod surface;

pub use dd::vertex_solutions;
pub use essential::{is_essential_sphere, Essentiality};
pub use surface::{reconstruct, NormalSurface, SurfaceComponent};

use crate::error::{OrbError, Result};
use crate::orbtri::OrbifoldTriangulation;
use crate::perm::{edge_index, EDGE_VERTS};

/// Quad type whose vertex pairs include `{a, b}`.
pub fn quad_of(a: usize, b: usize) -> usize {
    let (x, y) = if a < b { (a, b) } else { (b, a) };
    match (x, y) {
        (0, 1) | (2, 3) => 0,
        (0, 2) | (1, 3) => 1,
        (0, 3) | (1, 2) => 2,
        _ => panic!("not a vertex pair: {a}{b}"),
    }
}

/// Whether vertex `v` lies on the side of quad type `q` that contains vertex 0.
pub fn on_zero_side(q: usize, v: usize) -> bool {
    v == 0 || v == q + 1
}

/// Whether quads of type `q` cross the tet edge `e`.
pub fn quad_crosses(q: usize, e: usize) -> bool {
    let [a, b] = EDGE_VERTS[e];
    quad_of(a, b) != q
}

/// Seven non-negative weights per tetrahedron: triangles at vertices 0..3, then quads 0..2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalCoordinates {
    data: Vec<u64>,
}

impl NormalCoordinates {
    pub fn zero(tets: usize) -> Self {
        NormalCoordinates { data: vec![0; 7 * tets] }
    }

    pub fn from_vec(data: Vec<u64>) -> Result<Self> {
        if data.len() % 7 != 0 {
            return Err(OrbError::InvalidCoordinates(format!("length {} not a multiple of 7", data.len())));
        }
        Ok(NormalCoordinates { data })
    }

    /// Rejects negative entries.
    pub fn from_signed(data: &[i64]) -> Result<Self> {
        if let Some(i) = data.iter().position(|&x| x < 0) {
            return Err(OrbError::InvalidCoordinates(format!("negative weight at index {i}")));
        }
        Self::from_vec(data.iter().map(|&x| x as u64).collect())
    }

    pub fn tets(&self) -> usize {
        self.data.len() / 7
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn tri(&self, t: usize, v: usize) -> u64 {
        self.data[7 * t + v]
    }

    pub fn quad(&self, t: usize, q: usize) -> u64 {
        self.data[7 * t + 4 + q]
    }

    pub fn set_tri(&mut self, t: usize, v: usize, x: u64) {
        self.data[7 * t + v] = x;
    }

    pub fn set_quad(&mut self, t: usize, q: usize, x: u64) {
        self.data[7 * t + 4 + q] = x;
    }

    /// The nonzero quad type and its count in tet `t`, if any.
    pub fn quad_in(&self, t: usize) -> Option<(usize, u64)> {
        (0..3).find(|&q| self.quad(t, q) > 0).map(|q| (q, self.quad(t, q)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        NormalCoordinates {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        NormalCoordinates {
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// Total number of discs.
    pub fn disc_count(&self) -> u64 {
        self.data.iter().sum()
    }

    /// At most one quad type per tetrahedron.
    pub fn quad_condition(&self) -> bool {
        (0..self.tets()).all(|t| (0..3).filter(|&q| self.quad(t, q) > 0).count() <= 1)
    }

    /// Number of points on tet edge `e` of tet `t`.
    pub fn edge_points(&self, t: usize, e: usize) -> u64 {
        let [a, b] = EDGE_VERTS[e];
        let quads: u64 = (0..3).filter(|&q| quad_crosses(q, e)).map(|q| self.quad(t, q)).sum();
        self.tri(t, a) + self.tri(t, b) + quads
    }

    /// Intersection number with each edge class.
    pub fn edge_weights(&self, tri: &OrbifoldTriangulation) -> Vec<u64> {
        tri.skeleton()
            .edges
            .iter()
            .map(|ec| {
                let (t, e) = ec.arcs[0];
                self.edge_points(t, e)
            })
            .collect()
    }

    /// Sum of edge weights, the size measure used for tie-breaking.
    pub fn weight(&self, tri: &OrbifoldTriangulation) -> u64 {
        self.edge_weights(tri).iter().sum()
    }
}

/// Matching equations as sparse rows over the `7n` coordinates, three per internal face.
pub fn matching_equations(tri: &OrbifoldTriangulation) -> Vec<Vec<(usize, i64)>> {
    let mut rows = Vec::new();
    for t in 0..tri.tet_count() {
        for f in 0..4 {
            let Some(g) = tri.table().get(t, f) else { continue };
            let f2 = g.perm.apply(f);
            if (g.tet, f2) < (t, f) {
                continue;
            }
            for v in (0..4).filter(|&v| v != f) {
                let v2 = g.perm.apply(v);
                let mut row: Vec<(usize, i64)> = Vec::new();
                let mut add = |i: usize, c: i64| match row.iter_mut().find(|(j, _)| *j == i) {
                    Some(entry) => entry.1 += c,
                    None => row.push((i, c)),
                };
                add(7 * t + v, 1);
                add(7 * t + 4 + quad_of(v, f), 1);
                add(7 * g.tet + v2, -1);
                add(7 * g.tet + 4 + quad_of(v2, f2), -1);
                row.retain(|&(_, c)| c != 0);
                rows.push(row);
            }
        }
    }
    rows
}

/// Matching equations and the quad condition.
pub fn matching_check(tri: &OrbifoldTriangulation, coords: &NormalCoordinates) -> Result<bool> {
    if coords.tets() != tri.tet_count() {
        return Err(OrbError::InvalidCoordinates(format!(
            "{} tetrahedra of coordinates for {} tetrahedra",
            coords.tets(),
            tri.tet_count()
        )));
    }
    if !coords.quad_condition() {
        return Ok(false);
    }
    let d = coords.as_slice();
    Ok(matching_equations(tri)
        .iter()
        .all(|row| row.iter().map(|&(i, c)| c * d[i] as i64).sum::<i64>() == 0))
}

/// Coordinates of the link of a vertex class: one triangle at each of its corners.
pub fn vertex_link_coords(tri: &OrbifoldTriangulation, vertex: usize) -> NormalCoordinates {
    let mut c = NormalCoordinates::zero(tri.tet_count());
    for t in 0..tri.tet_count() {
        for v in 0..4 {
            if tri.skeleton().vertex_of[t][v] == vertex {
                c.set_tri(t, v, 1);
            }
        }
    }
    c
}

/// Edge index helper re-exported for the layout code.
pub(crate) fn edge_of(a: usize, b: usize) -> usize {
    edge_index(a, b)
}
