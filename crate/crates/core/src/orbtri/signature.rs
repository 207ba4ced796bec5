use super::{Gluing, GluingTable, OrbifoldTriangulation};
use crate::error::{OrbError, Result};
use crate::perm::{Perm4, ALL_PERMS};
use std::collections::VecDeque;

/// Tetrahedra grouped by connected component, each list sorted.
pub fn component_tets(tri: &OrbifoldTriangulation) -> Vec<Vec<usize>> {
    let n = tri.tet_count();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut q = VecDeque::from([s]);
        while let Some(t) = q.pop_front() {
            for f in 0..4 {
                if let Some(g) = tri.table().get(t, f) {
                    if comp[g.tet] == usize::MAX {
                        comp[g.tet] = id;
                        members.push(g.tet);
                        q.push_back(g.tet);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Encoding of the component containing `start` under the canonical relabeling that
/// starts there with vertex map `p0`. Newly reached tetrahedra are labelled so the
/// gluing that reaches them reads as the identity.
fn encode(tri: &OrbifoldTriangulation, start: usize, p0: Perm4) -> Vec<u32> {
    let n = tri.tet_count();
    let mut label = vec![usize::MAX; n];
    let mut vmap = vec![Perm4::IDENTITY; n];
    let mut order = vec![start];
    label[start] = 0;
    vmap[start] = p0;
    let mut tokens = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let t = order[k];
        let inv = vmap[t].inverse();
        for nf in 0..4 {
            let f = inv.apply(nf);
            match tri.table().get(t, f) {
                None => tokens.push(0),
                Some(g) => {
                    if label[g.tet] == usize::MAX {
                        label[g.tet] = order.len();
                        vmap[g.tet] = vmap[t].compose(g.perm.inverse());
                        order.push(g.tet);
                    }
                    let np = vmap[g.tet].compose(g.perm).compose(inv);
                    tokens.push(1 + (label[g.tet] * 24 + np.index()) as u32);
                }
            }
        }
        k += 1;
    }
    // edge orders in order of first appearance under the new labeling
    let skel = tri.skeleton();
    let mut seen = vec![false; tri.edge_class_count()];
    tokens.push(u32::MAX);
    for &t in &order {
        let inv = vmap[t].inverse();
        for &[a, b] in crate::perm::EDGE_VERTS.iter() {
            let e = crate::perm::edge_index(inv.apply(a), inv.apply(b));
            let c = skel.edge_of[t][e];
            if !seen[c] {
                seen[c] = true;
                tokens.push(tri.order(c));
            }
        }
    }
    tokens.insert(0, order.len() as u32);
    tokens
}

fn render(tokens: &[u32]) -> String {
    let mut s = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            s.push('.');
        }
        if *t == u32::MAX {
            s.push('o');
        } else {
            s.push_str(&format!("{t:x}"));
        }
    }
    s
}

/// Canonical string: equal exactly when the decorated triangulations are isomorphic.
pub fn iso_signature(tri: &OrbifoldTriangulation) -> String {
    let mut parts: Vec<String> = component_tets(tri)
        .into_iter()
        .map(|comp| {
            let mut best: Option<Vec<u32>> = None;
            for &s in &comp {
                for p in ALL_PERMS {
                    let enc = encode(tri, s, p);
                    if best.as_ref().map_or(true, |b| enc < *b) {
                        best = Some(enc);
                    }
                }
            }
            render(&best.unwrap_or_default())
        })
        .collect();
    parts.sort();
    parts.join("+")
}

/// Inverse of [`iso_signature`] for connected triangulations; the result is in the
/// canonical labelling.
pub fn from_signature(sig: &str) -> Result<OrbifoldTriangulation> {
    let bad = |msg: &str| OrbError::Parse { line: 1, msg: format!("signature: {msg}") };
    if sig.contains('+') {
        return Err(bad("disconnected signatures are not decoded"));
    }
    let mut tokens = Vec::new();
    for t in sig.split('.') {
        if t == "o" {
            tokens.push(u32::MAX);
        } else {
            tokens.push(u32::from_str_radix(t, 16).map_err(|_| bad("bad token"))?);
        }
    }
    let n = *tokens.first().ok_or_else(|| bad("empty"))? as usize;
    if n == 0 || tokens.len() < 2 + 4 * n || tokens[1 + 4 * n] != u32::MAX {
        return Err(bad("wrong length"));
    }
    let mut table = GluingTable::new(n);
    for t in 0..n {
        for f in 0..4 {
            let tok = tokens[1 + 4 * t + f];
            if tok == 0 {
                continue;
            }
            let v = (tok - 1) as usize;
            let (t2, p) = (v / 24, v % 24);
            if t2 >= n {
                return Err(bad("tetrahedron out of range"));
            }
            table.set_raw(t, f, Some(Gluing { tet: t2, perm: ALL_PERMS[p] }));
        }
    }
    if let Some((tet, face)) = table.involution_failure() {
        return Err(OrbError::Involution { tet, face });
    }
    let tri = OrbifoldTriangulation::new(table);
    let orders = &tokens[2 + 4 * n..];
    if orders.len() != tri.edge_class_count() {
        return Err(bad("wrong number of orders"));
    }
    let skel = tri.skeleton();
    let mut by_class = vec![0u32; orders.len()];
    let mut k = 0;
    for t in 0..n {
        for e in 0..6 {
            let c = skel.edge_of[t][e];
            if by_class[c] == 0 {
                by_class[c] = orders[k];
                k += 1;
            }
        }
    }
    if by_class.contains(&0) {
        return Err(bad("zero order"));
    }
    OrbifoldTriangulation::with_orders(tri.table().clone(), by_class)
}
