//! Connected sums built by removing a standard vertex star from each side.
//!
//! Each summand is rewritten until some vertex `w` has a star of four tetrahedra
//! whose link is an embedded tetrahedron boundary. The cone points of the link sit
//! at its corners. Removing both stars and gluing the two links realises the sum.

use crate::error::{OrbError, Result};
use crate::moves::{barycentric, one_four_plan, three_two_plan, two_three_plan, Plan};
use crate::orbtri::{singular_graph, validate, GluingTable, OrbifoldTriangulation};
use crate::perm::{edge_index, Perm4, ALL_PERMS};
use crate::simplify::{simplify, DEFAULT_BUDGET};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A triangulation whose tet corners carry vertex marks that survive local moves.
struct Marked {
    tri: OrbifoldTriangulation,
    marks: Vec<[u32; 4]>,
    next: u32,
}

impl Marked {
    fn new(tri: &OrbifoldTriangulation) -> Marked {
        let marks = tri.skeleton().vertex_of.iter().map(|r| r.map(|v| v as u32)).collect();
        Marked {
            tri: tri.clone(),
            marks,
            next: tri.vertex_class_count() as u32,
        }
    }

    fn apply(&mut self, plan: &Plan) -> Option<u32> {
        let fresh = self.next;
        let (tri, marks) = plan.apply_marked(&self.tri, &self.marks, fresh)?;
        self.tri = tri;
        self.marks = marks;
        self.next += 1;
        Some(fresh)
    }

    fn one_four(&mut self, t: usize) -> Option<u32> {
        self.apply(&one_four_plan(t))
    }

    fn star(&self, w: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, m) in self.marks.iter().enumerate() {
            for c in 0..4 {
                if m[c] == w {
                    out.push((t, c));
                }
            }
        }
        out
    }

    fn class(&self, t: usize, a: usize, b: usize) -> usize {
        self.tri.skeleton().edge_of[t][edge_index(a, b)]
    }

    /// Singular edge classes at `w` with their far marks, one entry per germ.
    fn arms(&self, w: u32) -> Vec<(usize, u32)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (t, c) in self.star(w) {
            for j in (0..4).filter(|&j| j != c) {
                let k = self.class(t, c, j);
                if self.tri.order(k) > 1 && seen.insert((k, self.marks[t][j])) {
                    out.push((k, self.marks[t][j]));
                }
            }
        }
        out
    }

    /// Puts a fresh vertex in the middle of the singular edge class `k` next to `w`.
    fn subdivide(&mut self, w: u32, k: usize) -> Option<u32> {
        let (t, i, j) = self.star(w).into_iter().find_map(|(t, c)| {
            (0..4).find(|&j| j != c && self.class(t, c, j) == k).map(|j| (t, c, j))
        })?;
        let p = self.tri.order(k);
        let n = self.tri.tet_count();
        let fresh = self.one_four(t)?;
        // new tet `n - 1 + corner` holds the new vertex at that corner
        let c = (0..4).find(|&c| c != i && c != j).unwrap();
        let tt = n - 1 + c;
        let (old, left, right) = (self.class(tt, i, j), self.class(tt, c, i), self.class(tt, c, j));
        let routed = self.tri.with_order(old, 1).with_order(left, p).with_order(right, p);
        if !validate(&routed).is_valid() {
            return None;
        }
        self.tri = routed;
        Some(fresh)
    }

    /// Makes the singular germs at `w` end at distinct fresh vertices, one class each.
    fn isolate_arms(&mut self, w: u32) -> Option<Vec<u32>> {
        let mut fresh: Vec<u32> = Vec::new();
        for _ in 0..12 {
            let arms = self.arms(w);
            let count = |m: u32| arms.iter().filter(|a| a.1 == m).count();
            match arms.iter().find(|&&(_, m)| !fresh.contains(&m) || count(m) > 1) {
                None => return Some(fresh),
                Some(&(k, _)) => fresh.push(self.subdivide(w, k)?),
            }
        }
        None
    }

    fn fresh_neighbour(&mut self, w: u32) -> Option<u32> {
        let (t, _) = *self.star(w).first()?;
        self.one_four(t)
    }

    /// Link vertices of `w` as edge classes, with far marks and link edges.
    fn link(&self, w: u32) -> Option<(BTreeMap<usize, u32>, BTreeSet<(usize, usize)>)> {
        let mut verts = BTreeMap::new();
        let mut edges = BTreeSet::new();
        for (t, c) in self.star(w) {
            if self.marks[t].iter().filter(|&&m| m == w).count() != 1 {
                return None;
            }
            let others: Vec<usize> = (0..4).filter(|&j| j != c).collect();
            let ks: Vec<usize> = others.iter().map(|&j| self.class(t, c, j)).collect();
            for (&j, &k) in others.iter().zip(&ks) {
                if let Some(&m) = verts.get(&k) {
                    if m != self.marks[t][j] {
                        return None;
                    }
                }
                verts.insert(k, self.marks[t][j]);
            }
            for a in 0..3 {
                for b in a + 1..3 {
                    edges.insert((ks[a].min(ks[b]), ks[a].max(ks[b])));
                }
            }
        }
        Some((verts, edges))
    }

    /// Shrinks the link of `w` by flips and 3-2 moves until only the vertices with
    /// marks in `keep` remain.
    fn reduce_link(&mut self, w: u32, keep: &[u32]) -> Option<()> {
        for _ in 0..400 {
            let (verts, edges) = self.link(w)?;
            let kept: Vec<usize> = verts.iter().filter(|(_, m)| keep.contains(m)).map(|(&k, _)| k).collect();
            if kept.len() != keep.len() {
                return None;
            }
            if verts.len() == keep.len() {
                return Some(());
            }
            let degrees: Vec<usize> = self.tri.skeleton().edges.iter().map(|e| e.degree).collect();
            let deg = |k: usize| degrees[k];
            let mut drop: Vec<usize> = verts.keys().copied().filter(|k| !kept.contains(k)).collect();
            drop.sort_by_key(|&k| (deg(k), k));
            let mut progressed = false;
            'cand: for &x in &drop {
                if deg(x) == 3 {
                    if let Some(plan) = three_two_plan(&self.tri, x) {
                        if self.apply(&plan).is_some() {
                            self.next -= 1;
                            progressed = true;
                            break 'cand;
                        }
                    }
                    continue;
                }
                for (t, c) in self.star(w) {
                    let js: Vec<usize> = (0..4).filter(|&j| j != c && self.class(t, c, j) == x).collect();
                    for j in js {
                        for k in (0..4).filter(|&k| k != c && k != j) {
                            let l = 6 - c - j - k;
                            let y = self.class(t, c, k);
                            let z = self.class(t, c, l);
                            let Some(g) = self.tri.table().get(t, l) else { continue };
                            let u = self.tri.skeleton().edge_of[g.tet][edge_index(g.perm.apply(c), g.perm.apply(l))];
                            if deg(y) <= 3 || z == u || edges.contains(&(z.min(u), z.max(u))) {
                                continue;
                            }
                            if let Some(plan) = two_three_plan(&self.tri, t, l) {
                                if self.apply(&plan).is_some() {
                                    self.next -= 1;
                                    progressed = true;
                                    break 'cand;
                                }
                            }
                        }
                    }
                }
            }
            if !progressed {
                return None;
            }
        }
        None
    }

    /// Star tets of `w` keyed by the sorted marks of their other corners.
    fn standard_star(&self, w: u32) -> Option<BTreeMap<[u32; 3], (usize, usize)>> {
        let mut out = BTreeMap::new();
        for (t, c) in self.star(w) {
            let mut key: Vec<u32> = (0..4).filter(|&j| j != c).map(|j| self.marks[t][j]).collect();
            key.sort_unstable();
            if key.windows(2).any(|p| p[0] == p[1]) || out.insert([key[0], key[1], key[2]], (t, c)).is_some() {
                return None;
            }
        }
        (out.len() == 4).then_some(out)
    }
}

/// A summand prepared for gluing: the centre mark and the cone order at each link corner.
struct Prepared {
    m: Marked,
    w: u32,
    corners: Vec<(u32, u32)>,
}

fn prepare(mut m: Marked, w: u32) -> Option<Prepared> {
    let arms = m.isolate_arms(w)?;
    let mut keep = arms.clone();
    while keep.len() < 4 {
        keep.push(m.fresh_neighbour(w)?);
    }
    m.reduce_link(w, &keep)?;
    m.standard_star(w)?;
    let (verts, _) = m.link(w)?;
    let corners = verts.iter().map(|(&k, &mark)| (mark, m.tri.order(k))).collect();
    Some(Prepared { m, w, corners })
}

fn prepare_ordinary(tri: &OrbifoldTriangulation) -> Option<Prepared> {
    let mut m = Marked::new(tri);
    let w = m.one_four(0)?;
    prepare(m, w)
}

fn prepare_cyclic(tri: &OrbifoldTriangulation, class: usize) -> Option<Prepared> {
    let mut m = Marked::new(tri);
    let (t, e) = tri.skeleton().edges[class].arcs[0];
    let [i, j] = crate::perm::EDGE_VERTS[e];
    let p = tri.order(class);
    let n = tri.tet_count();
    let w = m.one_four(t)?;
    let c = (0..4).find(|&c| c != i && c != j).unwrap();
    let tt = n - 1 + c;
    let (old, left, right) = (m.class(tt, i, j), m.class(tt, c, i), m.class(tt, c, j));
    let routed = m.tri.with_order(old, 1).with_order(left, p).with_order(right, p);
    if !validate(&routed).is_valid() {
        return None;
    }
    m.tri = routed;
    prepare(m, w)
}

fn prepare_vertex(tri: &OrbifoldTriangulation, vertex: usize) -> Option<Prepared> {
    prepare(Marked::new(tri), vertex as u32).or_else(|| {
        // every vertex star of the subdivision is a cone on its link
        let sub = barycentric(tri);
        let (t, c) = (0..tri.tet_count())
            .flat_map(|t| (0..4).map(move |c| (t, c)))
            .find(|&(t, c)| tri.skeleton().vertex_of[t][c] == vertex)?;
        let s = ALL_PERMS.iter().find(|s| s.apply(0) == c)?;
        let w = sub.skeleton().vertex_of[24 * t + s.index()][0];
        prepare(Marked::new(&sub), w as u32)
    })
}

/// Glues the complements of the two stars, matching link corners by `phi`.
fn glue(a: &Prepared, b: &Prepared, phi: &HashMap<u32, u32>) -> Option<OrbifoldTriangulation> {
    let sa = a.m.standard_star(a.w)?;
    let sb = b.m.standard_star(b.w)?;
    let in_a: BTreeSet<usize> = sa.values().map(|&(t, _)| t).collect();
    let in_b: BTreeSet<usize> = sb.values().map(|&(t, _)| t).collect();
    let keep_a: Vec<usize> = (0..a.m.tri.tet_count()).filter(|t| !in_a.contains(t)).collect();
    let keep_b: Vec<usize> = (0..b.m.tri.tet_count()).filter(|t| !in_b.contains(t)).collect();
    let mut idx_a = vec![usize::MAX; a.m.tri.tet_count()];
    let mut idx_b = vec![usize::MAX; b.m.tri.tet_count()];
    for (i, &t) in keep_a.iter().enumerate() {
        idx_a[t] = i;
    }
    for (i, &t) in keep_b.iter().enumerate() {
        idx_b[t] = keep_a.len() + i;
    }
    let mut out = GluingTable::new(keep_a.len() + keep_b.len());
    for (tri, keep, idx) in [(&a.m.tri, &keep_a, &idx_a), (&b.m.tri, &keep_b, &idx_b)] {
        for &t in keep {
            for f in 0..4 {
                if let Some(g) = tri.table().get(t, f) {
                    if idx[g.tet] != usize::MAX {
                        out.join(idx[t], f, idx[g.tet], g.perm);
                    }
                }
            }
        }
    }
    for (key, &(ta, ca)) in &sa {
        let mut kb: Vec<u32> = key.iter().map(|m| phi[m]).collect();
        kb.sort_unstable();
        let &(tb, cb) = sb.get(&[kb[0], kb[1], kb[2]])?;
        let ga = a.m.tri.table().get(ta, ca)?;
        let gb = b.m.tri.table().get(tb, cb)?;
        if idx_a[ga.tet] == usize::MAX || idx_b[gb.tet] == usize::MAX {
            return None;
        }
        let mut img = [0u8; 4];
        for v in 0..4 {
            let in_ta = ga.perm.inverse().apply(v);
            let target = if in_ta == ca {
                cb
            } else {
                let mark = phi[&a.m.marks[ta][in_ta]];
                (0..4).find(|&q| b.m.marks[tb][q] == mark)?
            };
            img[v] = gb.perm.apply(target) as u8;
        }
        out.join(idx_a[ga.tet], ga.perm.apply(ca), idx_b[gb.tet], Perm4::new(img)?);
    }
    if !out.is_closed() {
        return None;
    }
    let mut rows: Vec<[u32; 6]> = keep_a.iter().map(|&t| std::array::from_fn(|e| a.m.tri.tet_edge_order(t, e))).collect();
    rows.extend(keep_b.iter().map(|&t| std::array::from_fn(|e| b.m.tri.tet_edge_order(t, e))));
    let tri = OrbifoldTriangulation::with_tet_edge_orders(out, &rows).ok()?;
    validate(&tri).is_valid().then_some(tri)
}

/// Tries every order-respecting matching of link corners in a fixed order.
fn sum_prepared(a: &Prepared, b: &Prepared) -> Result<OrbifoldTriangulation> {
    let corners_b: Vec<(u32, u32)> = b.corners.clone();
    let mut perm: Vec<usize> = (0..4).collect();
    loop {
        if (0..4).all(|i| a.corners[i].1 == corners_b[perm[i]].1) {
            let phi: HashMap<u32, u32> = (0..4).map(|i| (a.corners[i].0, corners_b[perm[i]].0)).collect();
            if let Some(t) = glue(a, b, &phi) {
                let mut rng = ChaCha8Rng::seed_from_u64(0);
                return Ok(simplify(&t, DEFAULT_BUDGET, &mut rng));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Err(OrbError::Invalid("no orientable gluing of the two links".into()))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn closed_valid(tri: &OrbifoldTriangulation) -> Result<()> {
    if !tri.table().is_closed() {
        return Err(OrbError::Invalid("triangulation has boundary".into()));
    }
    validate(tri).into_result()
}

fn unprepared() -> OrbError {
    OrbError::Invalid("could not isolate a standard ball".into())
}

/// Ordinary connected sum along non-singular balls.
pub fn ordinary_sum(a: &OrbifoldTriangulation, b: &OrbifoldTriangulation) -> Result<OrbifoldTriangulation> {
    closed_valid(a)?;
    closed_valid(b)?;
    let pa = prepare_ordinary(a).ok_or_else(unprepared)?;
    let pb = prepare_ordinary(b).ok_or_else(unprepared)?;
    sum_prepared(&pa, &pb)
}

/// Cyclic connected sum splicing the singular edge classes `arc_a` and `arc_b`.
pub fn cyclic_sum(
    a: &OrbifoldTriangulation,
    arc_a: usize,
    b: &OrbifoldTriangulation,
    arc_b: usize,
) -> Result<OrbifoldTriangulation> {
    closed_valid(a)?;
    closed_valid(b)?;
    let (p, q) = (class_order(a, arc_a)?, class_order(b, arc_b)?);
    if p != q || p < 2 {
        return Err(OrbError::OrderMismatch(format!("arcs of orders {p} and {q}")));
    }
    let pa = prepare_cyclic(a, arc_a).ok_or_else(unprepared)?;
    let pb = prepare_cyclic(b, arc_b).ok_or_else(unprepared)?;
    sum_prepared(&pa, &pb)
}

/// Vertex connected sum at trivalent singular vertices with equal order triples.
pub fn vertex_sum(
    a: &OrbifoldTriangulation,
    v_a: usize,
    b: &OrbifoldTriangulation,
    v_b: usize,
) -> Result<OrbifoldTriangulation> {
    closed_valid(a)?;
    closed_valid(b)?;
    let (ta, tb) = (vertex_triple(a, v_a)?, vertex_triple(b, v_b)?);
    if ta != tb {
        return Err(OrbError::OrderMismatch(format!("vertex triples {ta:?} and {tb:?}")));
    }
    let pa = prepare_vertex(a, v_a).ok_or_else(unprepared)?;
    let pb = prepare_vertex(b, v_b).ok_or_else(unprepared)?;
    sum_prepared(&pa, &pb)
}

fn class_order(tri: &OrbifoldTriangulation, class: usize) -> Result<u32> {
    if class >= tri.edge_class_count() {
        return Err(OrbError::Invalid(format!("no edge class {class}")));
    }
    Ok(tri.order(class))
}

/// Sorted order triple at a trivalent singular vertex.
pub fn vertex_triple(tri: &OrbifoldTriangulation, vertex: usize) -> Result<[u32; 3]> {
    let g = singular_graph(tri)?;
    if !g.vertices.contains(&vertex) {
        return Err(OrbError::OrderMismatch(format!("vertex {vertex} is not a trivalent singular vertex")));
    }
    let skel = tri.skeleton();
    let mut os: Vec<u32> = Vec::new();
    for c in tri.singular_classes() {
        for end in skel.edges[c].ends {
            if end == vertex {
                os.push(tri.order(c));
            }
        }
    }
    os.sort_unstable();
    Ok([os[0], os[1], os[2]])
}

/// Whether the singular component through edge class `class` is a circle.
pub fn on_knot(tri: &OrbifoldTriangulation, class: usize) -> bool {
    singular_graph(tri).map_or(false, |g| g.circles.iter().any(|c| c.contains(&class)))
}
