//! First homology of the support manifold via Smith normal form.

use crate::orbtri::OrbifoldTriangulation;
use crate::perm::{edge_index, face_verts};

/// `H1 = Z^betti ⊕ Z/t1 ⊕ ... `, torsion coefficients sorted and all > 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H1 {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl H1 {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<u64> {
        (self.betti == 0).then(|| self.torsion.iter().product())
    }

    pub fn cyclic(n: u64) -> H1 {
        H1 {
            betti: 0,
            torsion: if n > 1 { vec![n] } else { vec![] },
        }
    }
}

impl std::fmt::Display for H1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 { "Z".into() } else { format!("Z^{}", self.betti) });
        }
        for t in &self.torsion {
            parts.push(format!("Z{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Nonzero diagonal entries of the Smith normal form of an integer matrix.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<u64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut r0 = 0;
    let mut c0 = 0;
    while r0 < rows && c0 < cols {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in c0..cols {
                if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(r0, pi);
        for row in m.iter_mut() {
            row.swap(c0, pj);
        }
        loop {
            let p = m[r0][c0];
            let mut dirty = false;
            for i in r0 + 1..rows {
                let q = m[i][c0] / p;
                if q != 0 {
                    for j in c0..cols {
                        m[i][j] -= q * m[r0][j];
                    }
                }
                if m[i][c0] != 0 {
                    dirty = true;
                }
            }
            for j in c0 + 1..cols {
                let q = m[r0][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(r0) {
                        row[j] -= q * row[c0];
                    }
                }
                if m[r0][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the rest of the block
                let mut fix = None;
                'scan: for i in r0 + 1..rows {
                    for j in c0 + 1..cols {
                        if m[i][j] % p != 0 {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    None => break,
                    Some(i) => {
                        for j in c0..cols {
                            m[r0][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of the pivot row/column to the pivot
            let mut best = (r0, c0);
            for i in r0..rows {
                if m[i][c0] != 0 && m[i][c0].abs() < m[best.0][best.1].abs() {
                    best = (i, c0);
                }
            }
            for j in c0..cols {
                if m[r0][j] != 0 && m[r0][j].abs() < m[best.0][best.1].abs() {
                    best = (r0, j);
                }
            }
            m.swap(r0, best.0);
            for row in m.iter_mut() {
                row.swap(c0, best.1);
            }
        }
        diag.push(m[r0][c0].unsigned_abs() as u64);
        r0 += 1;
        c0 += 1;
    }
    diag
}

/// Sign with which tet edge `(a,b)` traversed from `a` to `b` runs along its class direction.
fn edge_sign(tri: &OrbifoldTriangulation, t: usize, a: usize, b: usize) -> i128 {
    let e = edge_index(a, b);
    let mut s = if a < b { 1 } else { -1 };
    if tri.skeleton().edge_flip[t][e] {
        s = -s;
    }
    s
}

/// Face-by-edge boundary matrix.
pub fn boundary2(tri: &OrbifoldTriangulation) -> Vec<Vec<i128>> {
    let skel = tri.skeleton();
    let mut m = vec![vec![0i128; skel.edge_count()]; skel.face_count];
    let mut done = vec![false; skel.face_count];
    for t in 0..tri.tet_count() {
        for f in 0..4 {
            let fc = skel.face_of[t][f];
            if done[fc] {
                continue;
            }
            done[fc] = true;
            let [x, y, z] = face_verts(f);
            for (a, b, s) in [(y, z, 1), (x, z, -1), (x, y, 1)] {
                m[fc][skel.edge_of[t][edge_index(a, b)]] += s * edge_sign(tri, t, a, b);
            }
        }
    }
    m
}

fn rank1(tri: &OrbifoldTriangulation) -> usize {
    // rank of the edge-to-vertex boundary: vertices minus components of the 1-skeleton
    let skel = tri.skeleton();
    let mut uf = crate::util::UnionFind::new(skel.vertex_count);
    for e in &skel.edges {
        uf.union(e.ends[0], e.ends[1], false);
    }
    let (_, comps) = uf.labels();
    skel.vertex_count - comps
}

pub fn h1(tri: &OrbifoldTriangulation) -> H1 {
    let d = smith_diagonal(boundary2(tri));
    let betti = tri.edge_class_count() - rank1(tri) - d.len();
    let mut torsion: Vec<u64> = d.into_iter().filter(|&x| x > 1).collect();
    torsion.sort_unstable();
    H1 { betti, torsion }
}

/// Chain of a singular circle or arc given by classes and traversal directions.
pub fn path_chain(tri: &OrbifoldTriangulation, classes: &[usize], forward: &[bool]) -> Vec<i128> {
    let mut c = vec![0i128; tri.edge_class_count()];
    for (&k, &f) in classes.iter().zip(forward) {
        c[k] += if f { 1 } else { -1 };
    }
    c
}

/// Order of a 1-cycle in H1 when H1 is finite.
pub fn cycle_order(tri: &OrbifoldTriangulation, cycle: &[i128]) -> Option<u64> {
    let base = h1(tri);
    let total = base.order()?;
    let mut m = boundary2(tri);
    m.push(cycle.to_vec());
    let d = smith_diagonal(m);
    let quotient: u64 = d.iter().filter(|&&x| x > 1).product();
    Some(total / quotient.max(1))
}
