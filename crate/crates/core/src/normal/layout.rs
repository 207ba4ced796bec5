//! How a normal surface cuts a single tetrahedron into pieces.
//!
//! Points carry local labels that are unique inside the tetrahedron and can be
//! carried across a face gluing with [`translate`].

use super::{edge_of, on_zero_side, quad_of, NormalCoordinates};
use crate::perm::{face_verts, Perm4, EDGE_VERTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceRegion {
    /// The `i`-th piece of the face counted from corner `v`; piece 0 contains `v`.
    Corner(u8, u32),
    Central,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TetRegion {
    /// Between triangles `k-1` and `k` at vertex `v`; piece 0 contains `v`.
    Corner(u8, u32),
    /// Between quads `s-1` and `s`, slot 0 on the side of vertex 0.
    Slot(u32),
    /// The middle piece when there are no quads.
    Center,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    V(u8),
    /// Point `k` on tet edge `e`, counted from its lower vertex.
    E(u8, u32),
    FaceCenter(u8, FaceRegion),
    RegionCenter(TetRegion),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiscId {
    Tri(u8, u32),
    Quad(u32),
}

#[derive(Clone, Debug)]
pub struct Disc {
    pub id: DiscId,
    /// Corners in cyclic order.
    pub polygon: Vec<Label>,
    /// Region toward the vertex for triangles, toward the vertex-0 side for quads.
    pub minus: TetRegion,
    pub plus: TetRegion,
}

#[derive(Clone, Debug)]
pub struct TetLayout {
    pub tri: [u32; 4],
    pub quad: Option<(usize, u32)>,
    pub w: [u32; 6],
}

impl TetLayout {
    pub fn new(c: &NormalCoordinates, t: usize) -> TetLayout {
        let tri = [0, 1, 2, 3].map(|v| c.tri(t, v) as u32);
        let quad = c.quad_in(t).map(|(q, n)| (q, n as u32));
        let w = [0, 1, 2, 3, 4, 5].map(|e| c.edge_points(t, e) as u32);
        TetLayout { tri, quad, w }
    }

    pub fn quad_count(&self) -> u32 {
        self.quad.map_or(0, |(_, n)| n)
    }

    /// Point `i` on the edge from `v` toward `x`, counted from `v`.
    pub fn point(&self, v: usize, x: usize, i: u32) -> Label {
        let e = edge_of(v, x);
        let k = if v < x { i } else { self.w[e] - 1 - i };
        Label::E(e as u8, k)
    }

    /// Number of normal arcs cutting off corner `v` in the face opposite `f`.
    pub fn arcs_at(&self, f: usize, v: usize) -> u32 {
        let q = match self.quad {
            Some((q, n)) if quad_of(v, f) == q => n,
            _ => 0,
        };
        self.tri[v] + q
    }

    /// The pieces of face `f` with their boundary polygons.
    pub fn face_regions(&self, f: usize) -> Vec<(FaceRegion, Vec<Label>)> {
        let corners = face_verts(f);
        let mut out = Vec::new();
        let mut central = Vec::new();
        for (k, &v) in corners.iter().enumerate() {
            let prev = corners[(k + 2) % 3];
            let next = corners[(k + 1) % 3];
            let m = self.arcs_at(f, v);
            for i in 0..m {
                let poly = if i == 0 {
                    vec![Label::V(v as u8), self.point(v, next, 0), self.point(v, prev, 0)]
                } else {
                    vec![
                        self.point(v, next, i - 1),
                        self.point(v, next, i),
                        self.point(v, prev, i),
                        self.point(v, prev, i - 1),
                    ]
                };
                out.push((FaceRegion::Corner(v as u8, i), poly));
            }
            if m == 0 {
                central.push(Label::V(v as u8));
            } else {
                central.push(self.point(v, prev, m - 1));
                central.push(self.point(v, next, m - 1));
            }
        }
        out.push((FaceRegion::Central, central));
        out
    }

    /// The tet piece that a face piece bounds.
    pub fn owner(&self, f: usize, fr: FaceRegion) -> TetRegion {
        match fr {
            FaceRegion::Corner(v, i) => {
                let v = v as usize;
                if i < self.tri[v] {
                    TetRegion::Corner(v as u8, i)
                } else {
                    let (q, n) = self.quad.expect("quad arcs need quads");
                    let j = i - self.tri[v];
                    TetRegion::Slot(if on_zero_side(q, v) { j } else { n - j })
                }
            }
            FaceRegion::Central => match self.quad {
                None => TetRegion::Center,
                Some((q, n)) => {
                    let v = (0..4).find(|&v| v != f && quad_of(v, f) == q).unwrap();
                    TetRegion::Slot(if on_zero_side(q, v) { n } else { 0 })
                }
            },
        }
    }

    /// The region beyond the last triangle at `v`.
    fn beyond_triangles(&self, v: usize) -> TetRegion {
        match self.quad {
            None => TetRegion::Center,
            Some((q, n)) => TetRegion::Slot(if on_zero_side(q, v) { 0 } else { n }),
        }
    }

    pub fn regions(&self) -> Vec<TetRegion> {
        let mut out = Vec::new();
        for v in 0..4 {
            for k in 0..self.tri[v] {
                out.push(TetRegion::Corner(v as u8, k));
            }
        }
        match self.quad {
            None => out.push(TetRegion::Center),
            Some((_, n)) => out.extend((0..=n).map(TetRegion::Slot)),
        }
        out
    }

    pub fn discs(&self) -> Vec<Disc> {
        let mut out = Vec::new();
        for v in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&x| x != v).collect();
            for k in 0..self.tri[v] {
                out.push(Disc {
                    id: DiscId::Tri(v as u8, k),
                    polygon: others.iter().map(|&x| self.point(v, x, k)).collect(),
                    minus: TetRegion::Corner(v as u8, k),
                    plus: if k + 1 < self.tri[v] {
                        TetRegion::Corner(v as u8, k + 1)
                    } else {
                        self.beyond_triangles(v)
                    },
                });
            }
        }
        if let Some((q, n)) = self.quad {
            let a = [0, q + 1];
            let b: Vec<usize> = (1..4).filter(|&x| x != q + 1).collect();
            for j in 0..n {
                let p = |x: usize, y: usize| self.point(x, y, self.tri[x] + j);
                out.push(Disc {
                    id: DiscId::Quad(j),
                    polygon: vec![p(a[0], b[0]), p(a[0], b[1]), p(a[1], b[1]), p(a[1], b[0])],
                    minus: TetRegion::Slot(j),
                    plus: TetRegion::Slot(j + 1),
                });
            }
        }
        out
    }

    /// Edge points of a disc corner lie on this tet edge.
    pub fn label_edge(label: Label) -> Option<usize> {
        match label {
            Label::E(e, _) => Some(e as usize),
            _ => None,
        }
    }
}

/// Carries a label on face `f` of one tetrahedron across the gluing `sigma`.
pub fn translate(label: Label, sigma: Perm4, src: &TetLayout, dst: &TetLayout) -> Label {
    match label {
        Label::V(v) => Label::V(sigma.apply(v as usize) as u8),
        Label::E(e, k) => {
            let [a, b] = EDGE_VERTS[e as usize];
            let from_a = k;
            debug_assert!(from_a < src.w[e as usize]);
            dst.point(sigma.apply(a), sigma.apply(b), from_a)
        }
        Label::FaceCenter(f, fr) => Label::FaceCenter(
            sigma.apply(f as usize) as u8,
            match fr {
                FaceRegion::Corner(v, i) => FaceRegion::Corner(sigma.apply(v as usize) as u8, i),
                FaceRegion::Central => FaceRegion::Central,
            },
        ),
        Label::RegionCenter(_) => panic!("region centers are interior"),
    }
}
