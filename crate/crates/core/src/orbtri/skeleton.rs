use super::GluingTable;
use crate::perm::{edge_index, EDGE_VERTS};
use crate::util::UnionFind;

/// An equivalence class of tetrahedron edges under the face gluings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    pub id: usize,
    /// `(tet, edge)` pairs in increasing order.
    pub arcs: Vec<(usize, usize)>,
    pub degree: usize,
    /// False when the class is identified with itself in reverse.
    pub valid: bool,
    /// Vertex classes at the two ends (end 0 is the low vertex of `arcs[0]`).
    pub ends: [usize; 2],
}

/// Vertex, edge and face classes of a gluing table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub vertex_of: Vec<[usize; 4]>,
    pub vertex_count: usize,
    pub edge_of: Vec<[usize; 6]>,
    /// Whether the low-to-high direction of a tet edge opposes its class direction.
    pub edge_flip: Vec<[bool; 6]>,
    pub edges: Vec<EdgeClass>,
    pub face_of: Vec<[usize; 4]>,
    pub face_count: usize,
    pub boundary_faces: usize,
    /// Link vertex (edge-end class) of the corner at vertex `v` of edge `e` in tet `t`,
    /// indexed `t * 12 + e * 2 + end` where end 0 is the low vertex.
    pub edge_end_of: Vec<usize>,
    pub edge_end_count: usize,
}

impl Skeleton {
    pub fn build(table: &GluingTable) -> Skeleton {
        let n = table.tet_count();
        let mut vuf = UnionFind::new(4 * n);
        let mut euf = UnionFind::new(6 * n);
        let mut enduf = UnionFind::new(12 * n);
        let mut fuf = UnionFind::new(4 * n);
        let mut boundary_faces = 0;
        for t in 0..n {
            for f in 0..4 {
                let Some(g) = table.get(t, f) else {
                    boundary_faces += 1;
                    continue;
                };
                let s = g.perm;
                fuf.union(4 * t + f, 4 * g.tet + s.apply(f), false);
                for v in 0..4 {
                    if v != f {
                        vuf.union(4 * t + v, 4 * g.tet + s.apply(v), false);
                    }
                }
                for (e, &[a, b]) in EDGE_VERTS.iter().enumerate() {
                    if a == f || b == f {
                        continue;
                    }
                    let (sa, sb) = (s.apply(a), s.apply(b));
                    let e2 = edge_index(sa, sb);
                    let flipped = sa > sb;
                    euf.union(6 * t + e, 6 * g.tet + e2, flipped);
                    let (end_a, end_b) = if flipped { (1, 0) } else { (0, 1) };
                    enduf.union(12 * t + 2 * e, 12 * g.tet + 2 * e2 + end_a, false);
                    enduf.union(12 * t + 2 * e + 1, 12 * g.tet + 2 * e2 + end_b, false);
                }
            }
        }
        let (vl, vertex_count) = vuf.labels();
        let (el, edge_count) = euf.labels();
        let (fl, face_count) = fuf.labels();
        let (endl, edge_end_count) = enduf.labels();

        let mut vertex_of = vec![[0; 4]; n];
        let mut edge_of = vec![[0; 6]; n];
        let mut edge_flip = vec![[false; 6]; n];
        let mut face_of = vec![[0; 4]; n];
        let mut edges: Vec<EdgeClass> = (0..edge_count)
            .map(|id| EdgeClass {
                id,
                arcs: Vec::new(),
                degree: 0,
                valid: true,
                ends: [0, 0],
            })
            .collect();
        for t in 0..n {
            for v in 0..4 {
                vertex_of[t][v] = vl[4 * t + v];
                face_of[t][v] = fl[4 * t + v];
            }
            for e in 0..6 {
                let c = el[6 * t + e];
                edge_of[t][e] = c;
                edges[c].arcs.push((t, e));
                edges[c].degree += 1;
            }
        }
        // parity relative to the first arc of each class
        for class in edges.iter_mut() {
            let (t0, e0) = class.arcs[0];
            let p0 = euf.find(6 * t0 + e0).1;
            for &(t, e) in &class.arcs {
                edge_flip[t][e] = euf.find(6 * t + e).1 ^ p0;
            }
            let [a, b] = EDGE_VERTS[e0];
            class.ends = [vl[4 * t0 + a], vl[4 * t0 + b]];
            class.valid = endl[12 * t0 + 2 * e0] != endl[12 * t0 + 2 * e0 + 1];
        }
        Skeleton {
            vertex_of,
            vertex_count,
            edge_of,
            edge_flip,
            edges,
            face_of,
            face_count,
            boundary_faces,
            edge_end_of: endl,
            edge_end_count,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex class at the given end (0 or 1) of an edge class.
    pub fn edge_end_vertex(&self, class: usize, end: usize) -> usize {
        self.edges[class].ends[end]
    }

    /// Which end (0 or 1) of its class the tet vertex `v` of tet edge `e` sits at.
    pub fn end_of_tet_vertex(&self, t: usize, e: usize, v: usize) -> usize {
        let low = EDGE_VERTS[e][0] == v;
        let base = if low { 0 } else { 1 };
        base ^ (self.edge_flip[t][e] as usize)
    }
}
