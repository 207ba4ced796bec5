use super::OrbifoldTriangulation;
use crate::error::{OrbError, Result};
use crate::twoorb::is_admissible_triple;

/// Decomposition of the singular edge classes into circles and arcs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SingularGraph {
    /// Each circle as a cyclic sequence of edge classes.
    pub circles: Vec<Vec<usize>>,
    /// Each arc as a path of edge classes between vertices of the singular set.
    pub arcs: Vec<Vec<usize>>,
    /// Vertex classes at the two ends of each arc.
    pub arc_ends: Vec<(usize, usize)>,
    /// For each circle, whether each class is traversed from its end 0 to its end 1.
    pub circle_forward: Vec<Vec<bool>>,
    /// The same for arcs, starting at `arc_ends.0`.
    pub arc_forward: Vec<Vec<bool>>,
    /// Vertex classes where three singular edge germs meet.
    pub vertices: Vec<usize>,
    /// Vertex classes where a singular component passes straight through.
    pub pass_through: Vec<usize>,
}

impl SingularGraph {
    pub fn is_empty(&self) -> bool {
        self.circles.is_empty() && self.arcs.is_empty()
    }

    /// Component (circle index, or arc index offset by the circle count) containing a class.
    pub fn component_of(&self, class: usize) -> Option<usize> {
        if let Some(i) = self.circles.iter().position(|c| c.contains(&class)) {
            return Some(i);
        }
        self.arcs
            .iter()
            .position(|a| a.contains(&class))
            .map(|i| i + self.circles.len())
    }
}

/// Singular edge germs `(class, end)` at each vertex class.
pub(crate) fn germs(tri: &OrbifoldTriangulation) -> Vec<Vec<(usize, usize)>> {
    let skel = tri.skeleton();
    let mut out = vec![Vec::new(); skel.vertex_count];
    for c in tri.singular_classes() {
        for end in 0..2 {
            out[skel.edges[c].ends[end]].push((c, end));
        }
    }
    out
}

pub fn singular_graph(tri: &OrbifoldTriangulation) -> Result<SingularGraph> {
    let skel = tri.skeleton();
    let germs = germs(tri);
    let mut g = SingularGraph::default();
    for (v, gs) in germs.iter().enumerate() {
        let orders: Vec<u32> = gs.iter().map(|&(c, _)| tri.order(c)).collect();
        match gs.len() {
            0 => {}
            2 => {
                if orders[0] != orders[1] {
                    return Err(OrbError::NotAnOrbifold(format!(
                        "vertex {v}: singular edges of orders {} and {} meet",
                        orders[0], orders[1]
                    )));
                }
                g.pass_through.push(v);
            }
            3 => {
                if !is_admissible_triple(orders[0], orders[1], orders[2]) {
                    return Err(OrbError::NotAnOrbifold(format!(
                        "vertex {v}: order triple {:?} not admissible",
                        orders
                    )));
                }
                g.vertices.push(v);
            }
            k => {
                return Err(OrbError::NotAnOrbifold(format!(
                    "vertex {v}: singular valence {k}"
                )))
            }
        }
    }
    let mut used = vec![false; tri.edge_class_count()];
    let follow = |start_germ: (usize, usize), used: &mut Vec<bool>| -> (Vec<usize>, Vec<bool>, usize) {
        let (mut c, mut end) = start_germ;
        let mut path = Vec::new();
        let mut fwd = Vec::new();
        loop {
            used[c] = true;
            path.push(c);
            fwd.push(end == 0);
            let other = 1 - end;
            let cur = skel.edges[c].ends[other];
            if germs[cur].len() != 2 {
                return (path, fwd, cur);
            }
            let next = germs[cur]
                .iter()
                .copied()
                .find(|&gm| gm != (c, other))
                .expect("pass-through vertex has two germs");
            if used[next.0] {
                return (path, fwd, cur);
            }
            c = next.0;
            end = next.1;
        }
    };
    for &v in &g.vertices.clone() {
        for &germ in &germs[v] {
            if used[germ.0] {
                continue;
            }
            let (path, fwd, last) = follow(germ, &mut used);
            g.arcs.push(path);
            g.arc_forward.push(fwd);
            g.arc_ends.push((v, last));
        }
    }
    for c in tri.singular_classes() {
        if !used[c] {
            let (path, fwd, _) = follow((c, 0), &mut used);
            g.circles.push(path);
            g.circle_forward.push(fwd);
        }
    }
    Ok(g)
}
