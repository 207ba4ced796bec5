//! Generation of closed orientable gluing tables and their decorations.

use crate::orbtri::{iso_signature, singular_graph, validate, GluingTable, OrbifoldTriangulation};
use crate::perm::ALL_PERMS;
use std::collections::HashSet;

/// Connected 4-regular multigraphs on `n` nodes up to isomorphism, as adjacency
/// matrices whose diagonal counts loops.
pub fn face_pairing_graphs(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut adj = vec![vec![0u8; n]; n];
    let perms = permutations(n);
    fill(0, 0, n, &mut adj, &mut |a: &Vec<Vec<u8>>| {
        if !connected(a) {
            return;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        m[p[i] * n + p[j]] = a[i][j];
                    }
                }
                m
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(a.clone());
        }
    });
    out
}

fn degree(adj: &[Vec<u8>], i: usize) -> usize {
    adj[i]
        .iter()
        .enumerate()
        .map(|(j, &m)| if j == i { 2 * m as usize } else { m as usize })
        .sum()
}

fn fill(i: usize, j: usize, n: usize, adj: &mut Vec<Vec<u8>>, emit: &mut dyn FnMut(&Vec<Vec<u8>>)) {
    if i == n {
        if (0..n).all(|k| degree(adj, k) == 4) {
            emit(adj);
        }
        return;
    }
    if j == n {
        if degree(adj, i) == 4 {
            fill(i + 1, i + 1, n, adj, emit);
        }
        return;
    }
    let room_i = 4 - degree(adj, i);
    let room_j = 4 - degree(adj, j);
    let max = if i == j { room_i / 2 } else { room_i.min(room_j) };
    for m in (0..=max).rev() {
        adj[i][j] = m as u8;
        adj[j][i] = m as u8;
        fill(i, j + 1, n, adj, emit);
    }
    adj[i][j] = 0;
    adj[j][i] = 0;
}

fn connected(adj: &[Vec<u8>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if adj[i][j] > 0 && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Face pairs realizing a pairing graph with faces handed out in increasing order.
fn standard_face_pairs(adj: &[Vec<u8>]) -> Vec<((usize, usize), (usize, usize))> {
    let n = adj.len();
    let mut next = vec![0usize; n];
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            for _ in 0..adj[i][j] {
                let a = (i, next[i]);
                next[i] += 1;
                let b = (j, next[j]);
                next[j] += 1;
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Every closed, connected gluing table on `n` tetrahedra that is orientable and
/// valid as a manifold triangulation, one per isomorphism class, in a deterministic order.
pub fn closed_tables(n: usize) -> Vec<OrbifoldTriangulation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for adj in face_pairing_graphs(n) {
        let pairs = standard_face_pairs(&adj);
        let choices: Vec<Vec<_>> = pairs
            .iter()
            .map(|&((_, f), (_, f2))| ALL_PERMS.iter().copied().filter(|p| p.apply(f) == f2).collect())
            .collect();
        // orientation signs per tet, tet 0 fixed positive
        for signs in 0..(1u32 << (n - 1)) {
            let o = |t: usize| if t == 0 || signs >> (t - 1) & 1 == 0 { 1 } else { -1 };
            let allowed: Vec<Vec<_>> = pairs
                .iter()
                .zip(&choices)
                .map(|(&((t, _), (t2, _)), ps)| {
                    ps.iter().copied().filter(|p| p.sign() == -o(t) * o(t2)).collect()
                })
                .collect();
            let mut idx = vec![0usize; pairs.len()];
            loop {
                let mut table = GluingTable::new(n);
                for (k, &((t, f), (t2, _))) in pairs.iter().enumerate() {
                    table.join(t, f, t2, allowed[k][idx[k]]);
                }
                let tri = OrbifoldTriangulation::new(table);
                if validate(&tri).is_valid() && seen.insert(iso_signature(&tri)) {
                    out.push(tri);
                }
                // odometer
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < allowed[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
    }
    out
}

/// All valid decorations of `tri` with orders at most `max_order` and complexity weight
/// at most `max_weight`.
pub fn decorations(tri: &OrbifoldTriangulation, max_order: u32, max_weight: u64) -> Vec<OrbifoldTriangulation> {
    let n = tri.tet_count() as u64;
    if n > max_weight {
        return Vec::new();
    }
    let budget = max_weight - n;
    let classes = tri.edge_class_count();
    let mut out = Vec::new();
    let mut orders = vec![1u32; classes];
    decorate(tri, 0, budget, max_order, &mut orders, &mut out);
    out
}

fn decorate(
    tri: &OrbifoldTriangulation,
    k: usize,
    budget: u64,
    max_order: u32,
    orders: &mut Vec<u32>,
    out: &mut Vec<OrbifoldTriangulation>,
) {
    if k == orders.len() {
        let dec = OrbifoldTriangulation::with_orders(tri.table().clone(), orders.clone())
            .expect("order vector sized to classes");
        if singular_graph(&dec).is_ok() {
            out.push(dec);
        }
        return;
    }
    for p in 1..=max_order {
        let cost = p as u64 - 1;
        if cost > budget {
            break;
        }
        orders[k] = p;
        decorate(tri, k + 1, budget - cost, max_order, orders, out);
    }
    orders[k] = 1;
}

/// The census stream: every valid decorated triangulation within the bounds, once per
/// signature, ordered by tetrahedron count then generation order.
pub fn enumerate(max_tets: usize, max_order: u32, max_weight: u64) -> Vec<OrbifoldTriangulation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for n in 1..=max_tets {
        if n as u64 > max_weight {
            break;
        }
        for tri in closed_tables(n) {
            for dec in decorations(&tri, max_order, max_weight) {
                if seen.insert(iso_signature(&dec)) {
                    out.push(dec);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_graph_counts() {
        assert_eq!(face_pairing_graphs(1).len(), 1);
        // four parallel edges, or two parallel edges plus a loop at each node
        assert_eq!(face_pairing_graphs(2).len(), 2);
    }
}
