//! Greedy reduction with random exploration when stuck.

use crate::homology::h1;
use crate::moves::{collapse_edge, four_four, one_four, reroute, three_two, two_one, two_three, two_zero_edge};
use crate::orbtri::{iso_signature, OrbifoldTriangulation};
use std::collections::{HashSet, VecDeque};
use rand::Rng;

/// Default number of moves spent on one simplification.
pub const DEFAULT_BUDGET: usize = 500;

/// One reducing move, if any applies.
pub fn reduce_once(tri: &OrbifoldTriangulation) -> Option<OrbifoldTriangulation> {
    let classes = tri.edge_class_count();
    // larger degree collapses remove more tetrahedra
    let mut by_degree: Vec<usize> = (0..classes).collect();
    by_degree.sort_by_key(|&c| std::cmp::Reverse(tri.skeleton().edges[c].degree));
    if tri.vertex_class_count() > 1 {
        if let Some(t) = by_degree.iter().find_map(|&c| collapse_edge(tri, c)) {
            return Some(t);
        }
    }
    (0..classes)
        .find_map(|c| three_two(tri, c))
        .or_else(|| (0..classes).find_map(|c| two_zero_edge(tri, c)))
        .or_else(|| (0..classes).find_map(|c| two_one(tri, c, 0).or_else(|| two_one(tri, c, 1))))
}

fn random_move<R: Rng>(tri: &OrbifoldTriangulation, rng: &mut R) -> Option<OrbifoldTriangulation> {
    let quads: Vec<usize> = (0..tri.edge_class_count())
        .filter(|&c| tri.skeleton().edges[c].degree == 4 && tri.order(c) == 1)
        .collect();
    for _ in 0..64 {
        let roll: f64 = rng.gen();
        if roll < 0.15 {
            if let Some(t) = reroute(tri, rng.gen_range(0..tri.tet_count()), rng.gen_range(0..4), rng.gen_range(0..4)) {
                return Some(t);
            }
        } else if roll < 0.3 {
            // a fresh vertex, which the next collapse may pull in a new direction
            if let Some(t) = one_four(tri, rng.gen_range(0..tri.tet_count())) {
                return Some(t);
            }
        } else if !quads.is_empty() && roll < 0.7 {
            let c = quads[rng.gen_range(0..quads.len())];
            if let Some(t) = four_four(tri, c, rng.gen_range(0..2)) {
                return Some(t);
            }
        } else {
            let t = rng.gen_range(0..tri.tet_count());
            if let Some(x) = two_three(tri, t, rng.gen_range(0..4)) {
                return Some(x);
            }
        }
    }
    None
}

/// Reduces the number of tetrahedra, spending at most `budget` moves. The result
/// has the same homology and singular shape as the input.
pub fn simplify<R: Rng>(tri: &OrbifoldTriangulation, budget: usize, rng: &mut R) -> OrbifoldTriangulation {
    let mut best = tri.clone();
    let mut moves = 0;
    'outer: while moves < budget {
        if let Some(t) = reduce_once(&best) {
            best = t;
            moves += 1;
            continue;
        }
        if best.tet_count() <= 1 {
            break;
        }
        // wander through moves that do not shrink, looking for a way down
        let mut walk = best.clone();
        while moves < budget {
            // a single move is often undone by the greedy pass
            for _ in 0..rng.gen_range(1..=3) {
                match random_move(&walk, rng) {
                    Some(t) => walk = t,
                    None => break 'outer,
                }
                moves += 1;
            }
            while moves < budget {
                match reduce_once(&walk) {
                    Some(t) => {
                        walk = t;
                        moves += 1;
                    }
                    None => break,
                }
            }
            if walk.tet_count() < best.tet_count() {
                best = walk;
                continue 'outer;
            }
            if walk.tet_count() > best.tet_count() + 3 {
                walk = best.clone();
            }
        }
    }
    if h1(&best) != h1(tri) {
        return tri.clone();
    }
    best
}

/// Every triangulation one move away: Pachner moves in both directions, 4-4 flips and
/// the reducing moves.
pub fn neighbours(tri: &OrbifoldTriangulation) -> Vec<OrbifoldTriangulation> {
    let mut out = Vec::new();
    let classes = tri.edge_class_count();
    for c in 0..classes {
        out.extend(three_two(tri, c));
        out.extend(two_zero_edge(tri, c));
        out.extend(two_one(tri, c, 0));
        out.extend(two_one(tri, c, 1));
        out.extend(collapse_edge(tri, c));
        for axis in 0..2 {
            out.extend(four_four(tri, c, axis));
        }
    }
    for t in 0..tri.tet_count() {
        for f in 0..4 {
            out.extend(two_three(tri, t, f));
            for k in 0..4 {
                out.extend(reroute(tri, t, f, k));
            }
        }
    }
    out
}

/// Breadth-first search through triangulations at most `height` tetrahedra larger
/// than the current best, visiting at most `max_nodes` signatures. Restarts from
/// every smaller triangulation it finds.
pub fn simplify_exhaustive(tri: &OrbifoldTriangulation, height: usize, max_nodes: usize) -> OrbifoldTriangulation {
    let mut best = tri.clone();
    let mut seen = HashSet::new();
    let mut visited = 0;
    'restart: loop {
        while let Some(t) = reduce_once(&best) {
            best = t;
        }
        if best.tet_count() <= 1 {
            break;
        }
        let mut queue = VecDeque::from([best.clone()]);
        seen.insert(iso_signature(&best));
        while let Some(cur) = queue.pop_front() {
            for next in neighbours(&cur) {
                if next.tet_count() < best.tet_count() {
                    best = next;
                    continue 'restart;
                }
                if next.tet_count() > best.tet_count() + height || !seen.insert(iso_signature(&next)) {
                    continue;
                }
                visited += 1;
                if visited > max_nodes {
                    break 'restart;
                }
                queue.push_back(next);
            }
        }
        break;
    }
    if h1(&best) != h1(tri) {
        return tri.clone();
    }
    best
}
