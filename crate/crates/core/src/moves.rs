//! Local rewriting: Pachner moves, the 2-0 edge move and edge collapses.
//!
//! Every move is phrased as [`replace_region`]: a set of tetrahedra whose vertices
//! carry point labels is replaced by new tetrahedra spanned by those labels.
//! Faces are matched by their label triples. A move is accepted only when the
//! result is a valid triangulation with the same singular shape.

use crate::orbtri::{singular_graph, validate, GluingTable, OrbifoldTriangulation};
use crate::perm::{edge_index, face_verts, Perm4, ALL_PERMS, EDGE_VERTS};
use crate::util::UnionFind;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Slot {
    Old(usize, usize),
    New(usize, usize),
}

fn sorted3(mut t: [u32; 3]) -> [u32; 3] {
    t.sort_unstable();
    t
}

/// Replaces the tetrahedra `region` (with vertex labels `labels`) by `new_tets`.
/// Returns `None` if the faces cannot be matched up consistently or the result is
/// not a valid triangulation with the same singular shape.
pub fn replace_region(
    tri: &OrbifoldTriangulation,
    region: &[usize],
    labels: &[[u32; 4]],
    new_tets: &[[u32; 4]],
) -> Option<OrbifoldTriangulation> {
    let built = rebuild(tri, region, labels, new_tets)?;
    accept(tri, built)
}

fn rebuild(
    tri: &OrbifoldTriangulation,
    region: &[usize],
    labels: &[[u32; 4]],
    new_tets: &[[u32; 4]],
) -> Option<OrbifoldTriangulation> {
    let table = tri.table();
    let n = tri.tet_count();
    let mut pos = vec![usize::MAX; n];
    for (r, &t) in region.iter().enumerate() {
        if pos[t] != usize::MAX {
            return None;
        }
        pos[t] = r;
    }
    let label = |s: Slot, v: usize| match s {
        Slot::Old(r, _) => labels[r][v],
        Slot::New(k, _) => new_tets[k][v],
    };
    let face_of = |s: Slot| match s {
        Slot::Old(_, f) | Slot::New(_, f) => f,
    };
    let triple = |s: Slot| -> Option<[u32; 3]> {
        let [a, b, c] = face_verts(face_of(s)).map(|v| label(s, v));
        (a != b && b != c && a != c).then(|| sorted3([a, b, c]))
    };
    let mut groups: HashMap<[u32; 3], Vec<Slot>> = HashMap::new();
    let mut slots = Vec::new();
    for r in 0..region.len() {
        for f in 0..4 {
            let s = Slot::Old(r, f);
            match triple(s) {
                Some(k) => {
                    groups.entry(k).or_default().push(s);
                    slots.push(s);
                }
                None => {
                    // a flattened face must be glued to another flattened face of the region
                    let g = table.get(region[r], f)?;
                    let r2 = pos[g.tet];
                    if r2 == usize::MAX || triple(Slot::Old(r2, g.perm.apply(f))).is_some() {
                        return None;
                    }
                }
            }
        }
    }
    for k in 0..new_tets.len() {
        for f in 0..4 {
            let s = Slot::New(k, f);
            groups.entry(triple(s)?).or_default().push(s);
        }
    }
    if groups.values().any(|g| g.len() != 2) {
        return None;
    }
    let partner = |s: Slot| -> Slot {
        let g = &groups[&triple(s).unwrap()];
        if g[0] == s {
            g[1]
        } else {
            g[0]
        }
    };
    // vertex map between label-matched slots
    let label_map = |a: Slot, b: Slot| -> [usize; 4] {
        let mut m = [usize::MAX; 4];
        for v in face_verts(face_of(a)) {
            let l = label(a, v);
            m[v] = face_verts(face_of(b)).into_iter().find(|&w| label(b, w) == l).unwrap();
        }
        m[face_of(a)] = face_of(b);
        m
    };
    let ext: Vec<usize> = (0..n).filter(|&t| pos[t] == usize::MAX).collect();
    let mut ext_index = vec![usize::MAX; n];
    for (i, &t) in ext.iter().enumerate() {
        ext_index[t] = i;
    }
    let total = ext.len() + new_tets.len();
    let mut out = GluingTable::new(total);
    for &t in &ext {
        for f in 0..4 {
            if let Some(g) = table.get(t, f) {
                if pos[g.tet] == usize::MAX {
                    out.join(ext_index[t], f, ext_index[g.tet], g.perm);
                }
            }
        }
    }
    let mut visited: HashSet<Slot> = HashSet::new();
    let mut done = vec![[false; 4]; total];
    // endpoints: new faces, and exterior faces glued to the region
    let mut starts: Vec<((usize, usize), Slot, [usize; 4])> = Vec::new();
    for k in 0..new_tets.len() {
        for f in 0..4 {
            starts.push(((ext.len() + k, f), Slot::New(k, f), [0, 1, 2, 3]));
        }
    }
    for r in 0..region.len() {
        for f in 0..4 {
            if let Some(g) = table.get(region[r], f) {
                if pos[g.tet] == usize::MAX && triple(Slot::Old(r, f)).is_some() {
                    let inv = g.perm.inverse();
                    starts.push(((ext_index[g.tet], g.perm.apply(f)), Slot::Old(r, f), inv.images().map(|x| x as usize)));
                }
            }
        }
    }
    let steps_limit = 4 * (region.len() + new_tets.len()) + 8;
    for (start, first, m0) in starts {
        if done[start.0][start.1] {
            continue;
        }
        let mut cur = first;
        let mut m = m0;
        let mut steps = 0;
        let end: (usize, usize);
        loop {
            steps += 1;
            if steps > steps_limit {
                return None;
            }
            if let Slot::Old(..) = cur {
                visited.insert(cur);
            }
            let b = partner(cur);
            let lm = label_map(cur, b);
            m = m.map(|x| lm[x]);
            match b {
                Slot::New(k, f) => {
                    end = (ext.len() + k, f);
                    break;
                }
                Slot::Old(r, f) => {
                    visited.insert(b);
                    let g = table.get(region[r], f)?;
                    m = m.map(|x| g.perm.apply(x));
                    if pos[g.tet] == usize::MAX {
                        end = (ext_index[g.tet], g.perm.apply(f));
                        break;
                    }
                    let next = Slot::Old(pos[g.tet], g.perm.apply(f));
                    triple(next)?;
                    cur = next;
                }
            }
        }
        if end == start || done[end.0][end.1] {
            return None;
        }
        let perm = Perm4::new(m.map(|x| x as u8))?;
        out.join(start.0, start.1, end.0, perm);
        done[start.0][start.1] = true;
        done[end.0][end.1] = true;
    }
    // remaining old slots must be faces interior to the region
    for &s in &slots {
        if visited.contains(&s) {
            continue;
        }
        let Slot::Old(r, f) = s else { unreachable!() };
        let g = table.get(region[r], f)?;
        if pos[g.tet] == usize::MAX {
            return None;
        }
        let b = partner(s);
        if b != Slot::Old(pos[g.tet], g.perm.apply(f)) {
            return None;
        }
        let lm = label_map(s, b);
        if (0..4).any(|v| lm[v] != g.perm.apply(v)) {
            return None;
        }
    }
    if !out.is_closed() && tri.table().is_closed() {
        return None;
    }
    // orders: exterior edges keep theirs, new edges inherit from the labelled region
    let mut pair_order: HashMap<(u32, u32), u32> = HashMap::new();
    for (r, &t) in region.iter().enumerate() {
        for (e, &[a, b]) in EDGE_VERTS.iter().enumerate() {
            let (la, lb) = (labels[r][a], labels[r][b]);
            if la == lb {
                continue;
            }
            let key = (la.min(lb), la.max(lb));
            let o = tri.tet_edge_order(t, e);
            if let Some(&prev) = pair_order.get(&key) {
                if prev != o {
                    return None;
                }
            }
            pair_order.insert(key, o);
        }
    }
    let mut rows: Vec<[u32; 6]> = ext.iter().map(|&t| std::array::from_fn(|e| tri.tet_edge_order(t, e))).collect();
    for t in new_tets {
        rows.push(std::array::from_fn(|e| {
            let [a, b] = EDGE_VERTS[e];
            let (la, lb) = (t[a], t[b]);
            *pair_order.get(&(la.min(lb), la.max(lb))).unwrap_or(&1)
        }));
    }
    OrbifoldTriangulation::with_tet_edge_orders(out, &rows).ok()
}

/// Circle orders, arc orders and vertex order triples, each sorted.
pub type Shape = (Vec<u32>, Vec<u32>, Vec<[u32; 3]>);

pub fn singular_shape(tri: &OrbifoldTriangulation) -> Option<Shape> {
    let g = singular_graph(tri).ok()?;
    let mut circles: Vec<u32> = g.circles.iter().map(|c| tri.order(c[0])).collect();
    let mut arcs: Vec<u32> = g.arcs.iter().map(|a| tri.order(a[0])).collect();
    let mut verts: Vec<[u32; 3]> = g
        .vertices
        .iter()
        .map(|&v| {
            let mut os: Vec<u32> = Vec::new();
            for (i, &(x, y)) in g.arc_ends.iter().enumerate() {
                for end in [x, y] {
                    if end == v {
                        os.push(tri.order(g.arcs[i][0]));
                    }
                }
            }
            os.sort_unstable();
            [os[0], os[1], os[2]]
        })
        .collect();
    circles.sort_unstable();
    arcs.sort_unstable();
    verts.sort_unstable();
    Some((circles, arcs, verts))
}

fn accept(old: &OrbifoldTriangulation, new: OrbifoldTriangulation) -> Option<OrbifoldTriangulation> {
    if !new.table().is_connected() || !validate(&new).is_valid() {
        return None;
    }
    (singular_shape(&new)? == singular_shape(old)?).then_some(new)
}

/// Tetrahedra around an edge class with labels: the edge ends get 0 and 1, the
/// link vertices 2, 3, 4, ... in cyclic order, the first tet being `(.., 2, 3)`.
pub struct Around {
    pub tets: Vec<usize>,
    pub labels: Vec<[u32; 4]>,
    /// Link points in cyclic order.
    pub cycle: Vec<u32>,
}

pub fn around_edge(tri: &OrbifoldTriangulation, class: usize) -> Option<Around> {
    let ec = &tri.skeleton().edges[class];
    let deg = ec.degree;
    let (t0, e0) = ec.arcs[0];
    let [a0, b0] = EDGE_VERTS[e0];
    let others: Vec<usize> = (0..4).filter(|&v| v != a0 && v != b0).collect();
    let (x0, y0) = (others[0], others[1]);
    let mut lab = [0u32; 4];
    lab[a0] = 0;
    lab[b0] = 1;
    lab[x0] = 2;
    lab[y0] = 3;
    let mut tets = vec![t0];
    let mut labels = vec![lab];
    let mut cycle = vec![3, 2];
    let (mut t, mut a, mut b, mut back, mut front) = (t0, a0, b0, y0, x0);
    let mut next_label = 4;
    for k in 1..=deg {
        let g = tri.table().get(t, back)?;
        let (t2, a2, b2, back2, front2) = (g.tet, g.perm.apply(a), g.perm.apply(b), g.perm.apply(front), g.perm.apply(back));
        if k == deg {
            if t2 != t0 || a2 != a0 || b2 != b0 || back2 != y0 || front2 != x0 {
                return None;
            }
            break;
        }
        let prev_front = labels.last().unwrap()[front];
        let mut l = [0u32; 4];
        l[a2] = 0;
        l[b2] = 1;
        l[back2] = prev_front;
        l[front2] = if k == deg - 1 {
            3
        } else {
            next_label += 1;
            next_label - 1
        };
        if k < deg - 1 {
            cycle.push(l[front2]);
        }
        tets.push(t2);
        labels.push(l);
        (t, a, b, back, front) = (t2, a2, b2, back2, front2);
    }
    // cycle currently reads 3, 2, 4, 5, ...; rotate so it starts at 2
    cycle.rotate_left(1);
    Some(Around { tets, labels, cycle })
}

fn distinct(ts: &[usize]) -> bool {
    let mut v = ts.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

pub fn three_two(tri: &OrbifoldTriangulation, class: usize) -> Option<OrbifoldTriangulation> {
    three_two_plan(tri, class)?.apply(tri)
}

pub(crate) fn three_two_plan(tri: &OrbifoldTriangulation, class: usize) -> Option<Plan> {
    if tri.skeleton().edges[class].degree != 3 || tri.order(class) != 1 {
        return None;
    }
    let ar = around_edge(tri, class)?;
    if !distinct(&ar.tets) {
        return None;
    }
    let [p, q, r] = [ar.cycle[0], ar.cycle[1], ar.cycle[2]];
    Some(Plan {
        region: ar.tets,
        labels: ar.labels,
        new_tets: vec![[0, p, q, r], [1, p, q, r]],
    })
}

/// Replaces the octahedron around a degree-4 edge using the other diagonal `axis` (0 or 1).
pub fn four_four(tri: &OrbifoldTriangulation, class: usize, axis: usize) -> Option<OrbifoldTriangulation> {
    if tri.skeleton().edges[class].degree != 4 || tri.order(class) != 1 {
        return None;
    }
    let ar = around_edge(tri, class)?;
    if !distinct(&ar.tets) {
        return None;
    }
    let c = &ar.cycle;
    let (p, q, r, s) = (c[axis], c[axis + 2], c[axis + 1], c[(axis + 3) % 4]);
    let new = [[p, q, 0, r], [p, q, r, 1], [p, q, 1, s], [p, q, s, 0]];
    replace_region(tri, &ar.tets, &ar.labels, &new)
}

pub fn two_three(tri: &OrbifoldTriangulation, t: usize, f: usize) -> Option<OrbifoldTriangulation> {
    two_three_plan(tri, t, f)?.apply(tri)
}

pub(crate) fn two_three_plan(tri: &OrbifoldTriangulation, t: usize, f: usize) -> Option<Plan> {
    let g = tri.table().get(t, f)?;
    if g.tet == t {
        return None;
    }
    let [a, b, c] = face_verts(f);
    let mut l0 = [0u32; 4];
    l0[a] = 0;
    l0[b] = 1;
    l0[c] = 2;
    l0[f] = 3;
    let mut l1 = [0u32; 4];
    for v in [a, b, c] {
        l1[g.perm.apply(v)] = l0[v];
    }
    l1[g.perm.apply(f)] = 4;
    Some(Plan {
        region: vec![t, g.tet],
        labels: vec![l0, l1],
        new_tets: vec![[3, 4, 0, 1], [3, 4, 1, 2], [3, 4, 2, 0]],
    })
}

pub fn one_four(tri: &OrbifoldTriangulation, t: usize) -> Option<OrbifoldTriangulation> {
    one_four_plan(t).apply(tri)
}

/// The new vertex gets label 4; new tet `k` has it in place of corner `k`.
pub(crate) fn one_four_plan(t: usize) -> Plan {
    Plan {
        region: vec![t],
        labels: vec![[0, 1, 2, 3]],
        new_tets: vec![[4, 1, 2, 3], [0, 4, 2, 3], [0, 1, 4, 3], [0, 1, 2, 4]],
    }
}

/// A move as a region with labels and its replacement.
pub(crate) struct Plan {
    pub region: Vec<usize>,
    pub labels: Vec<[u32; 4]>,
    pub new_tets: Vec<[u32; 4]>,
}

impl Plan {
    pub fn apply(&self, tri: &OrbifoldTriangulation) -> Option<OrbifoldTriangulation> {
        replace_region(tri, &self.region, &self.labels, &self.new_tets)
    }

    /// Applies the move and carries per-corner vertex marks along. Labels that do
    /// not occur in the region are new vertices and get mark `fresh`.
    pub fn apply_marked(
        &self,
        tri: &OrbifoldTriangulation,
        marks: &[[u32; 4]],
        fresh: u32,
    ) -> Option<(OrbifoldTriangulation, Vec<[u32; 4]>)> {
        let out = self.apply(tri)?;
        let mut of_label: HashMap<u32, u32> = HashMap::new();
        for (r, &t) in self.region.iter().enumerate() {
            for v in 0..4 {
                of_label.insert(self.labels[r][v], marks[t][v]);
            }
        }
        let mut new_marks: Vec<[u32; 4]> = (0..tri.tet_count())
            .filter(|t| !self.region.contains(t))
            .map(|t| marks[t])
            .collect();
        for nt in &self.new_tets {
            new_marks.push(nt.map(|l| *of_label.get(&l).unwrap_or(&fresh)));
        }
        Some((out, new_marks))
    }
}

/// Flattens the pillow around a degree-2 edge onto its equatorial disc.
pub fn two_zero_edge(tri: &OrbifoldTriangulation, class: usize) -> Option<OrbifoldTriangulation> {
    if tri.skeleton().edges[class].degree != 2 || tri.order(class) != 1 {
        return None;
    }
    let ar = around_edge(tri, class)?;
    if !distinct(&ar.tets) {
        return None;
    }
    // the two edges opposite the pillow edge must be distinct before they are merged
    let opposite = |k: usize| {
        let l = &ar.labels[k];
        let x = (0..4).find(|&v| l[v] == 2).unwrap();
        let y = (0..4).find(|&v| l[v] == 3).unwrap();
        tri.skeleton().edge_of[ar.tets[k]][crate::perm::edge_index(x, y)]
    };
    if opposite(0) == opposite(1) {
        return None;
    }
    replace_region(tri, &ar.tets, &ar.labels, &[])
}

/// Merges the tetrahedron around a degree-1 edge with its neighbour across the face
/// opposite end `end`, leaving one folded tetrahedron. The two faces of the
/// neighbour that meet along the fold are flattened onto each other.
pub fn two_one(tri: &OrbifoldTriangulation, class: usize, end: usize) -> Option<OrbifoldTriangulation> {
    let ec = &tri.skeleton().edges[class];
    if ec.degree != 1 || tri.order(class) != 1 {
        return None;
    }
    let (t, e) = ec.arcs[0];
    let [mut a, mut b] = EDGE_VERTS[e];
    if end == 1 {
        std::mem::swap(&mut a, &mut b);
    }
    let table = tri.table();
    let others: Vec<usize> = (0..4).filter(|&v| v != a && v != b).collect();
    let (x, y) = (others[0], others[1]);
    let up = table.get(t, a)?;
    let top = up.tet;
    if top == t {
        return None;
    }
    let (bb, xx, yy, zz) = (up.perm.apply(b), up.perm.apply(x), up.perm.apply(y), up.perm.apply(a));
    let n = tri.tet_count();
    let ext: Vec<usize> = (0..n).filter(|&u| u != t && u != top).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &u) in ext.iter().enumerate() {
        index[u] = i;
    }
    let nt = ext.len();
    let p = |m: [usize; 4]| Perm4::new(m.map(|v| v as u8)).unwrap();
    // where each boundary face of the region goes: a face of the new tet, or the
    // flattened partner face; new tet vertices are 0 = a, 1 = z, 2 = x, 3 = y
    let mut to_new = [(usize::MAX, 0, p([0, 1, 2, 3])); 2];
    let mut rep: HashMap<(usize, usize), (bool, usize, usize, Perm4)> = HashMap::new();
    let mut m = [0usize; 4];
    (m[a], m[b], m[x], m[y]) = (0, 1, 2, 3);
    rep.insert((t, b), (true, nt, 1, p(m)));
    to_new[1] = (t, b, p(m).inverse());
    (m[bb], m[zz], m[xx], m[yy]) = (0, 1, 2, 3);
    rep.insert((top, bb), (true, nt, 0, p(m)));
    to_new[0] = (top, bb, p(m).inverse());
    (m[zz], m[bb], m[xx], m[yy]) = (zz, bb, yy, xx);
    rep.insert((top, yy), (false, top, xx, p(m)));
    rep.insert((top, xx), (false, top, yy, p(m)));
    let mut out = GluingTable::new(nt + 1);
    for &u in &ext {
        for f in 0..4 {
            if let Some(g) = table.get(u, f) {
                if index[g.tet] != usize::MAX {
                    out.join(index[u], f, index[g.tet], g.perm);
                }
            }
        }
    }
    out.join(nt, 3, nt, p([0, 1, 3, 2]));
    // from a region face, follow replacements and old gluings until landing outside
    // or on the new tet; `m` carries the starting vertices along
    let step = |mut slot: (usize, usize), mut m: Perm4| -> Option<((usize, usize), Perm4)> {
        for _ in 0..8 {
            let &(is_new, u, f, r) = rep.get(&slot)?;
            m = r.compose(m);
            if is_new {
                return Some(((u, f), m));
            }
            let g = table.get(u, f)?;
            m = g.perm.compose(m);
            let dest = (g.tet, g.perm.apply(f));
            if index[dest.0] != usize::MAX {
                return Some(((index[dest.0], dest.1), m));
            }
            slot = dest;
        }
        None
    };
    let mut starts: Vec<((usize, usize), (usize, usize), Perm4)> = Vec::new();
    for (f, &(u, uf, inv)) in to_new.iter().enumerate() {
        let g = table.get(u, uf)?;
        starts.push(((nt, f), (g.tet, g.perm.apply(uf)), g.perm.compose(inv)));
    }
    for &u in &ext {
        for f in 0..4 {
            if let Some(g) = table.get(u, f) {
                if index[g.tet] == usize::MAX {
                    starts.push(((index[u], f), (g.tet, g.perm.apply(f)), g.perm));
                }
            }
        }
    }
    let mut done = vec![[false; 4]; nt + 1];
    done[nt][2] = true;
    done[nt][3] = true;
    for (start, slot, m) in starts {
        if done[start.0][start.1] {
            continue;
        }
        let (end, perm) = if index[slot.0] != usize::MAX {
            ((index[slot.0], slot.1), m)
        } else {
            step(slot, m)?
        };
        if end == start || done[end.0][end.1] {
            return None;
        }
        out.join(start.0, start.1, end.0, perm);
        done[start.0][start.1] = true;
        done[end.0][end.1] = true;
    }
    if !out.is_closed() {
        return None;
    }
    let mut rows: Vec<[u32; 6]> = ext.iter().map(|&u| std::array::from_fn(|k| tri.tet_edge_order(u, k))).collect();
    let o = |u: usize, p: usize, q: usize| tri.tet_edge_order(u, crate::perm::edge_index(p, q));
    let mut row = [1u32; 6];
    row[crate::perm::edge_index(0, 2)] = o(t, a, x);
    row[crate::perm::edge_index(0, 3)] = o(t, a, y);
    row[crate::perm::edge_index(1, 2)] = o(top, zz, xx);
    row[crate::perm::edge_index(1, 3)] = o(top, zz, yy);
    row[crate::perm::edge_index(2, 3)] = o(t, x, y);
    rows.push(row);
    let built = OrbifoldTriangulation::with_tet_edge_orders(out, &rows).ok()?;
    let built = accept(tri, built)?;
    (crate::homology::h1(&built) == crate::homology::h1(tri)).then_some(built)
}

/// Contracts an edge with distinct ends to a point, flattening the tetrahedra around it.
pub fn collapse_edge(tri: &OrbifoldTriangulation, class: usize) -> Option<OrbifoldTriangulation> {
    let skel = tri.skeleton();
    let ec = &skel.edges[class];
    if ec.ends[0] == ec.ends[1] {
        return None;
    }
    let ar = around_edge(tri, class)?;
    if !distinct(&ar.tets) || ar.tets.len() != ec.degree {
        return None;
    }
    let has_germ = |v: usize| {
        tri.singular_classes()
            .iter()
            .any(|&c| skel.edges[c].ends.contains(&v))
    };
    if tri.order(class) == 1 && has_germ(ec.ends[0]) && has_germ(ec.ends[1]) {
        return None;
    }
    let mut edges = UnionFind::new(skel.edge_count());
    let mut faces = UnionFind::new(skel.face_count);
    let mut orders = tri.orders().to_vec();
    for (k, &t) in ar.tets.iter().enumerate() {
        let l = &ar.labels[k];
        let u = (0..4).find(|&v| l[v] == 0).unwrap();
        let w = (0..4).find(|&v| l[v] == 1).unwrap();
        // the face shared with the next tet has third vertex labelled with the next cycle point
        let x = (0..4).find(|&v| l[v] == ar.cycle[k]).unwrap();
        let (cu, cw) = (
            skel.edge_of[t][crate::perm::edge_index(u, x)],
            skel.edge_of[t][crate::perm::edge_index(w, x)],
        );
        if edges.root(cu) == edges.root(cw) {
            return None;
        }
        edges.union(cu, cw, false);
        match (orders[cu], orders[cw]) {
            (1, p) => orders[cu] = p,
            (p, 1) => orders[cw] = p,
            _ => return None,
        }
        let (fu, fw) = (skel.face_of[t][u], skel.face_of[t][w]);
        if faces.root(fu) == faces.root(fw) {
            return None;
        }
        faces.union(fu, fw, false);
    }
    // merged classes take the singular order of either side
    let mut changed = true;
    while changed {
        changed = false;
        for c in 0..orders.len() {
            let r = edges.root(c);
            if orders[c] != orders[r] {
                let p = orders[c].max(orders[r]);
                if orders[c] != 1 && orders[r] != 1 {
                    return None;
                }
                orders[c] = p;
                orders[r] = p;
                changed = true;
            }
        }
    }
    let widened = OrbifoldTriangulation::with_orders(tri.table().clone(), orders).ok()?;
    let labels: Vec<[u32; 4]> = ar
        .labels
        .iter()
        .enumerate()
        .map(|(k, l)| l.map(|x| if x <= 1 { 0 } else { 10 + 2 * k as u32 + if x == ar.cycle[k] { 0 } else { 1 } }))
        .collect();
    let built = rebuild(&widened, &ar.tets, &labels, &[])?;
    accept(tri, built)
}


/// Barycentric subdivision. Sub-tetrahedron `24 t + σ.index()` has corners: vertex
/// `σ(0)`, the midpoint of edge `σ(0)σ(1)`, the centre of face `σ(0)σ(1)σ(2)` and the
/// centre of `t`, in that order.
pub fn barycentric(tri: &OrbifoldTriangulation) -> OrbifoldTriangulation {
    let n = tri.tet_count();
    let mut table = GluingTable::new(24 * n);
    let mut rows = vec![[1u32; 6]; 24 * n];
    for t in 0..n {
        for s in ALL_PERMS {
            let here = 24 * t + s.index();
            for k in 0..3 {
                let there = 24 * t + s.compose(Perm4::transposition(k, k + 1)).index();
                table.join(here, k, there, Perm4::IDENTITY);
            }
            if let Some(g) = tri.table().get(t, s.apply(3)) {
                table.join(here, 3, 24 * g.tet + g.perm.compose(s).index(), Perm4::IDENTITY);
            }
            rows[here][0] = tri.tet_edge_order(t, edge_index(s.apply(0), s.apply(1)));
        }
    }
    OrbifoldTriangulation::with_tet_edge_orders(table, &rows).expect("subdivision keeps orders consistent")
}

/// Pushes the singular set across face `f` of `t`. With apex `k` (a corner of the
/// face) and the opposite side `ij`: a singular `ij` is replaced by the path through
/// `k`, or a singular path through `k` is replaced by `ij`.
pub fn reroute(tri: &OrbifoldTriangulation, t: usize, f: usize, k: usize) -> Option<OrbifoldTriangulation> {
    let corners = face_verts(f);
    if !corners.contains(&k) {
        return None;
    }
    let [i, j] = <[usize; 2]>::try_from(corners.iter().copied().filter(|&v| v != k).collect::<Vec<_>>()).ok()?;
    let skel = tri.skeleton();
    let class = |a: usize, b: usize| skel.edge_of[t][edge_index(a, b)];
    let (side, left, right) = (class(i, j), class(k, i), class(k, j));
    if side == left || side == right || left == right {
        return None;
    }
    let (ps, pl, pr) = (tri.order(side), tri.order(left), tri.order(right));
    let new = if ps > 1 && pl == 1 && pr == 1 {
        tri.with_order(side, 1).with_order(left, ps).with_order(right, ps)
    } else if ps == 1 && pl > 1 && pl == pr {
        let apex = skel.vertex_of[t][k];
        let germs = tri.singular_classes().iter().map(|&c| skel.edges[c].ends.iter().filter(|&&v| v == apex).count()).sum::<usize>();
        if germs != 2 {
            return None;
        }
        tri.with_order(left, 1).with_order(right, 1).with_order(side, pl)
    } else {
        return None;
    };
    let new = accept(tri, new)?;
    (crate::homology::h1(&new) == crate::homology::h1(tri)).then_some(new)
}
