//! Decorated triangulations of closed orientable 3-orbifolds.
//!
//! A triangulation is a gluing table of tetrahedra together with a cone
//! order for every edge class. Order 1 marks a non-singular edge.

pub mod format;
mod signature;
mod singular;
mod skeleton;

pub use signature::{component_tets, from_signature, iso_signature};
pub use singular::{singular_graph, SingularGraph};
pub use skeleton::{EdgeClass, Skeleton};

use crate::error::{OrbError, Result};
use crate::perm::{Perm4, EDGE_VERTS};
use std::collections::VecDeque;

/// Face `f` of one tetrahedron is glued to face `perm(f)` of `tet`,
/// vertex `i` going to vertex `perm(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GluingTable {
    gluings: Vec<[Option<Gluing>; 4]>,
}

impl GluingTable {
    pub fn new(tets: usize) -> Self {
        GluingTable {
            gluings: vec![[None; 4]; tets],
        }
    }

    pub fn tet_count(&self) -> usize {
        self.gluings.len()
    }

    pub fn get(&self, t: usize, f: usize) -> Option<Gluing> {
        self.gluings[t][f]
    }

    pub fn add_tet(&mut self) -> usize {
        self.gluings.push([None; 4]);
        self.gluings.len() - 1
    }

    /// Glues face `f` of `t` to face `perm(f)` of `t2`, recording both directions.
    /// Overwrites any existing gluing on either face.
    pub fn join(&mut self, t: usize, f: usize, t2: usize, perm: Perm4) {
        self.unjoin(t, f);
        self.unjoin(t2, perm.apply(f));
        self.gluings[t][f] = Some(Gluing { tet: t2, perm });
        self.gluings[t2][perm.apply(f)] = Some(Gluing {
            tet: t,
            perm: perm.inverse(),
        });
    }

    /// Removes the gluing on face `(t,f)` and its partner.
    pub fn unjoin(&mut self, t: usize, f: usize) {
        if let Some(g) = self.gluings[t][f].take() {
            let f2 = g.perm.apply(f);
            if let Some(back) = self.gluings[g.tet][f2] {
                if back.tet == t && back.perm.apply(f2) == f {
                    self.gluings[g.tet][f2] = None;
                }
            }
        }
    }

    /// Sets one side of a gluing only; used by parsers and tests of malformed input.
    pub fn set_raw(&mut self, t: usize, f: usize, g: Option<Gluing>) {
        self.gluings[t][f] = g;
    }

    pub fn is_closed(&self) -> bool {
        self.gluings.iter().all(|fs| fs.iter().all(|g| g.is_some()))
    }

    /// First face whose gluing is not matched by the inverse gluing, or is a self-gluing.
    pub fn involution_failure(&self) -> Option<(usize, usize)> {
        for t in 0..self.tet_count() {
            for f in 0..4 {
                let Some(g) = self.gluings[t][f] else { continue };
                if g.tet >= self.tet_count() {
                    return Some((t, f));
                }
                let f2 = g.perm.apply(f);
                if g.tet == t && f2 == f {
                    return Some((t, f));
                }
                match self.gluings[g.tet][f2] {
                    Some(b) if b.tet == t && b.perm == g.perm.inverse() => {}
                    _ => return Some((t, f)),
                }
            }
        }
        None
    }

    /// Applies a relabeling: tet `t` becomes `tet_map[t]` with vertices permuted by `vert[t]`.
    pub fn relabel(&self, tet_map: &[usize], vert: &[Perm4]) -> GluingTable {
        let n = self.tet_count();
        let mut out = GluingTable::new(n);
        for t in 0..n {
            for f in 0..4 {
                if let Some(g) = self.gluings[t][f] {
                    let nf = vert[t].apply(f);
                    let np = vert[g.tet].compose(g.perm).compose(vert[t].inverse());
                    out.gluings[tet_map[t]][nf] = Some(Gluing {
                        tet: tet_map[g.tet],
                        perm: np,
                    });
                }
            }
        }
        out
    }

    /// Tetrahedra reachable from tet 0.
    pub fn is_connected(&self) -> bool {
        let n = self.tet_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(t) = q.pop_front() {
            for f in 0..4 {
                if let Some(g) = self.gluings[t][f] {
                    if g.tet < n && !seen[g.tet] {
                        seen[g.tet] = true;
                        count += 1;
                        q.push_back(g.tet);
                    }
                }
            }
        }
        count == n
    }
}

/// A gluing table with cone orders on its edge classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldTriangulation {
    table: GluingTable,
    orders: Vec<u32>,
    skel: Skeleton,
}

impl OrbifoldTriangulation {
    /// All edge classes non-singular.
    pub fn new(table: GluingTable) -> Self {
        let skel = Skeleton::build(&table);
        let orders = vec![1; skel.edge_count()];
        OrbifoldTriangulation { table, orders, skel }
    }

    /// Orders indexed by edge class (classes numbered by first appearance over `(tet, edge)`).
    pub fn with_orders(table: GluingTable, orders: Vec<u32>) -> Result<Self> {
        let skel = Skeleton::build(&table);
        if orders.len() != skel.edge_count() {
            return Err(OrbError::Invalid(format!(
                "{} orders given for {} edge classes",
                orders.len(),
                skel.edge_count()
            )));
        }
        if let Some(&p) = orders.iter().find(|&&p| p == 0) {
            return Err(OrbError::InvalidOrder(p));
        }
        Ok(OrbifoldTriangulation { table, orders, skel })
    }

    /// Orders given per tetrahedron edge; they must agree within each class.
    pub fn with_tet_edge_orders(table: GluingTable, orders: &[[u32; 6]]) -> Result<Self> {
        let skel = Skeleton::build(&table);
        let mut out = vec![0u32; skel.edge_count()];
        for (t, row) in orders.iter().enumerate() {
            for e in 0..6 {
                let c = skel.edge_of[t][e];
                if out[c] != 0 && out[c] != row[e] {
                    return Err(OrbError::Invalid(format!(
                        "conflicting orders {} and {} on edge class {c}",
                        out[c], row[e]
                    )));
                }
                out[c] = row[e];
            }
        }
        Self::with_orders(table, out)
    }

    pub fn table(&self) -> &GluingTable {
        &self.table
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skel
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self, class: usize) -> u32 {
        self.orders[class]
    }

    pub fn tet_edge_order(&self, t: usize, e: usize) -> u32 {
        self.orders[self.skel.edge_of[t][e]]
    }

    /// Per tet-edge orders, the form used by local rewriting.
    pub fn tet_edge_orders(&self) -> Vec<[u32; 6]> {
        (0..self.tet_count())
            .map(|t| {
                let mut row = [1; 6];
                for (e, o) in row.iter_mut().enumerate() {
                    *o = self.tet_edge_order(t, e);
                }
                row
            })
            .collect()
    }

    /// Copy with edge class `class` set to order `p`.
    pub fn with_order(&self, class: usize, p: u32) -> Self {
        let mut out = self.clone();
        out.orders[class] = p;
        out
    }

    pub fn tet_count(&self) -> usize {
        self.table.tet_count()
    }

    pub fn edge_class_count(&self) -> usize {
        self.skel.edge_count()
    }

    pub fn vertex_class_count(&self) -> usize {
        self.skel.vertex_count
    }

    pub fn face_class_count(&self) -> usize {
        self.skel.face_count
    }

    /// Edge classes of order at least 2.
    pub fn singular_classes(&self) -> Vec<usize> {
        (0..self.orders.len()).filter(|&c| self.orders[c] >= 2).collect()
    }

    /// Applies a relabeling of tetrahedra and their vertices, carrying orders along.
    pub fn relabel(&self, tet_map: &[usize], vert: &[Perm4]) -> Self {
        let table = self.table.relabel(tet_map, vert);
        let mut rows = vec![[1u32; 6]; self.tet_count()];
        for t in 0..self.tet_count() {
            for (e, &[a, b]) in EDGE_VERTS.iter().enumerate() {
                let ne = crate::perm::edge_index(vert[t].apply(a), vert[t].apply(b));
                rows[tet_map[t]][ne] = self.tet_edge_order(t, e);
            }
        }
        Self::with_tet_edge_orders(table, &rows).expect("relabeling preserves classes")
    }

    /// Orientation signs making every gluing orientation-reversing, if they exist.
    pub fn orientation(&self) -> Option<Vec<i32>> {
        let n = self.tet_count();
        let mut sign = vec![0i32; n];
        for start in 0..n {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut q = VecDeque::from([start]);
            while let Some(t) = q.pop_front() {
                for f in 0..4 {
                    let Some(g) = self.table.get(t, f) else { continue };
                    let want = -g.perm.sign() * sign[t];
                    if sign[g.tet] == 0 {
                        sign[g.tet] = want;
                        q.push_back(g.tet);
                    } else if sign[g.tet] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }
}

/// Outcome of one validation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.passed)
    }

    pub fn into_result(self) -> Result<()> {
        match self.checks.iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) if c.name == "singular-vertices" => Err(OrbError::NotAnOrbifold(c.detail.clone())),
            Some(c) => Err(OrbError::Invalid(format!("{}: {}", c.name, c.detail))),
        }
    }
}

/// Runs every structural check on `tri`. Later checks are skipped (reported failed)
/// when the gluing table itself is malformed.
pub fn validate(tri: &OrbifoldTriangulation) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let inv = tri.table.involution_failure();
    push(
        "involution",
        inv.is_none(),
        inv.map(|(t, f)| format!("tet {t} face {f}")).unwrap_or_default(),
    );
    if inv.is_some() {
        push("closed", false, "not checked".into());
        push("orientable", false, "not checked".into());
        push("edge-validity", false, "not checked".into());
        push("vertex-links", false, "not checked".into());
        push("singular-vertices", false, "not checked".into());
        return ValidationReport { checks };
    }

    let closed = tri.table.is_closed() && tri.tet_count() > 0;
    push(
        "closed",
        closed,
        if closed { String::new() } else { format!("{} unglued faces", tri.skel.boundary_faces) },
    );

    let orientable = tri.is_orientable();
    push("orientable", orientable, String::new());

    let bad_edges: Vec<usize> = tri.skel.edges.iter().filter(|e| !e.valid).map(|e| e.id).collect();
    push(
        "edge-validity",
        bad_edges.is_empty(),
        if bad_edges.is_empty() { String::new() } else { format!("edge classes {bad_edges:?} reversed") },
    );

    let mut bad_links = Vec::new();
    for v in 0..tri.vertex_class_count() {
        let link = vertex_link(tri, v);
        if !(link.closed && link.euler == 2) {
            bad_links.push(v);
        }
    }
    push(
        "vertex-links",
        bad_links.is_empty(),
        if bad_links.is_empty() {
            String::new()
        } else {
            format!("vertex classes {bad_links:?} have non-sphere links")
        },
    );

    let sg = if bad_edges.is_empty() {
        singular_graph(tri).err().map(|e| e.to_string())
    } else {
        Some("not checked".into())
    };
    push("singular-vertices", sg.is_none(), sg.unwrap_or_default());
    ValidationReport { checks }
}

/// The link of a vertex class, built from corner triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLink {
    pub vertex: usize,
    /// Corner triangles as `(tet, vertex)`.
    pub triangles: Vec<(usize, usize)>,
    /// Pairs of glued triangle sides `((tri, face), (tri, face))`, face indexing the tet face.
    pub glued_sides: Vec<((usize, usize), (usize, usize))>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub closed: bool,
    /// Genus when the link is closed and orientable.
    pub genus: Option<i64>,
}

pub fn vertex_link(tri: &OrbifoldTriangulation, vertex: usize) -> VertexLink {
    let skel = &tri.skel;
    let mut triangles = Vec::new();
    for t in 0..tri.tet_count() {
        for v in 0..4 {
            if skel.vertex_of[t][v] == vertex {
                triangles.push((t, v));
            }
        }
    }
    let index_of = |t: usize, v: usize| triangles.iter().position(|&x| x == (t, v));
    let mut glued_sides = Vec::new();
    let mut boundary_sides = 0;
    for (i, &(t, v)) in triangles.iter().enumerate() {
        for f in 0..4 {
            if f == v {
                continue;
            }
            match tri.table.get(t, f) {
                None => boundary_sides += 1,
                Some(g) => {
                    let j = index_of(g.tet, g.perm.apply(v)).expect("corner in same class");
                    let a = (i, f);
                    let b = (j, g.perm.apply(f));
                    if a < b {
                        glued_sides.push((a, b));
                    }
                }
            }
        }
    }
    let mut ends = std::collections::BTreeSet::new();
    for &(t, v) in &triangles {
        for w in 0..4 {
            if w != v {
                let e = crate::perm::edge_index(v, w);
                let end = if EDGE_VERTS[e][0] == v { 0 } else { 1 };
                ends.insert(skel.edge_end_of[12 * t + 2 * e + end]);
            }
        }
    }
    let faces = triangles.len();
    let edges = glued_sides.len() + boundary_sides;
    let vertices = ends.len();
    let euler = vertices as i64 - edges as i64 + faces as i64;
    let closed = boundary_sides == 0;
    let genus = if closed && tri.is_orientable() && euler % 2 == 0 {
        Some((2 - euler) / 2)
    } else {
        None
    };
    VertexLink {
        vertex,
        triangles,
        glued_sides,
        vertices,
        edges,
        faces,
        euler,
        closed,
        genus,
    }
}

#[cfg(test)]
mod tests;
