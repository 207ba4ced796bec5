//! Cutting along a normal surface and capping spherical boundary.
//!
//! Every piece of a tetrahedron left by the normal discs is retriangulated by
//! coning its boundary from a centre point. Face pieces with more than three
//! corners are coned from a face centre and quads are split along a fixed
//! diagonal, so both sides of a gluing see the same triangles.

use crate::error::{OrbError, Result};
use crate::normal::layout::{Label, TetLayout};
use crate::normal::{reconstruct, NormalCoordinates};
use crate::orbtri::{GluingTable, OrbifoldTriangulation};
use crate::perm::{edge_index, face_verts, Perm4, EDGE_VERTS};
use crate::twoorb::{classify, TwoOrbClass, TwoOrbifold};
use crate::util::UnionFind;
use std::collections::HashMap;

/// A small tetrahedron of the retriangulation, spanned by four labels of tet `tet`.
struct Small {
    tet: usize,
    pts: [Label; 4],
}

fn on_face(l: Label, f: usize) -> bool {
    match l {
        Label::V(v) => v as usize != f,
        Label::E(e, _) => !EDGE_VERTS[e as usize].contains(&f),
        Label::FaceCenter(g, _) => g as usize == f,
        Label::RegionCenter(_) => false,
    }
}

/// The tet edge both labels lie on, if any.
fn common_edge(a: Label, b: Label) -> Option<usize> {
    let edges = |l: Label| -> Vec<usize> {
        match l {
            Label::V(v) => (0..6).filter(|&e| EDGE_VERTS[e].contains(&(v as usize))).collect(),
            Label::E(e, _) => vec![e as usize],
            _ => vec![],
        }
    };
    let eb = edges(b);
    edges(a).into_iter().find(|e| eb.contains(e))
}

fn sorted3(mut t: [Label; 3]) -> [Label; 3] {
    t.sort();
    t
}

fn small_tets(t: usize, lay: &TetLayout) -> Vec<Small> {
    let mut out = Vec::new();
    let discs = lay.discs();
    for r in lay.regions() {
        let mut tris: Vec<[Label; 3]> = Vec::new();
        for f in 0..4 {
            for (fr, poly) in lay.face_regions(f) {
                if lay.owner(f, fr) != r {
                    continue;
                }
                if poly.len() == 3 {
                    tris.push([poly[0], poly[1], poly[2]]);
                } else {
                    let c = Label::FaceCenter(f as u8, fr);
                    for i in 0..poly.len() {
                        tris.push([c, poly[i], poly[(i + 1) % poly.len()]]);
                    }
                }
            }
        }
        for d in discs.iter().filter(|d| d.minus == r || d.plus == r) {
            let p = &d.polygon;
            if p.len() == 3 {
                tris.push([p[0], p[1], p[2]]);
            } else {
                tris.push([p[0], p[1], p[2]]);
                tris.push([p[0], p[2], p[3]]);
            }
        }
        let mut pts: Vec<Label> = tris.iter().flatten().copied().collect();
        pts.sort();
        pts.dedup();
        if tris.len() == 4 && pts.len() == 4 {
            out.push(Small {
                tet: t,
                pts: [pts[0], pts[1], pts[2], pts[3]],
            });
        } else {
            let c = Label::RegionCenter(r);
            for [a, b, d] in tris {
                out.push(Small { tet: t, pts: [c, a, b, d] });
            }
        }
    }
    out
}

/// Cuts along a connected two-sided separating normal surface. Returns the two
/// pieces, each with the surface as its boundary.
pub fn cut_along(tri: &OrbifoldTriangulation, coords: &NormalCoordinates) -> Result<Vec<OrbifoldTriangulation>> {
    let surf = reconstruct(tri, coords)?;
    if surf.components.len() != 1 {
        return Err(OrbError::InvalidCoordinates(format!(
            "expected one component, found {}",
            surf.components.len()
        )));
    }
    let comp = &surf.components[0];
    if !comp.two_sided || !comp.separating {
        return Err(OrbError::NotSeparating);
    }
    let layouts: Vec<TetLayout> = (0..tri.tet_count()).map(|t| TetLayout::new(coords, t)).collect();
    let mut smalls: Vec<Small> = Vec::new();
    for (t, lay) in layouts.iter().enumerate() {
        smalls.extend(small_tets(t, lay));
    }
    let n = smalls.len();
    let mut table = GluingTable::new(n);
    // faces inside a tetrahedron pair up by label triple
    let mut inner: HashMap<(usize, [Label; 3]), Vec<(usize, usize)>> = HashMap::new();
    let mut outer: HashMap<(usize, usize, [Label; 3]), (usize, usize)> = HashMap::new();
    for (i, s) in smalls.iter().enumerate() {
        for f in 0..4 {
            let [a, b, c] = face_verts(f).map(|v| s.pts[v]);
            let key = sorted3([a, b, c]);
            if key.iter().any(|l| matches!(l, Label::RegionCenter(_))) {
                inner.entry((s.tet, key)).or_default().push((i, f));
            } else if let Some(tf) = (0..4).find(|&tf| key.iter().all(|&l| on_face(l, tf))) {
                outer.insert((s.tet, tf, key), (i, f));
            }
        }
    }
    let glue_by_labels = |table: &mut GluingTable, (i, f): (usize, usize), (j, g): (usize, usize), map: &dyn Fn(Label) -> Label| {
        let mut img = [0u8; 4];
        for v in 0..4 {
            img[v] = if v == f {
                g as u8
            } else {
                let l = map(smalls[i].pts[v]);
                (0..4).find(|&w| smalls[j].pts[w] == l).expect("matching label") as u8
            };
        }
        table.join(i, f, j, Perm4::new(img).expect("bijective face match"));
    };
    for (_, slots) in inner.iter() {
        if slots.len() != 2 {
            return Err(OrbError::Invalid("retriangulation left an unmatched inner face".into()));
        }
        glue_by_labels(&mut table, slots[0], slots[1], &|l| l);
    }
    for (&(t, tf, key), &slot) in outer.iter() {
        let Some(g) = tri.table().get(t, tf) else { continue };
        if table.get(slot.0, slot.1).is_some() {
            continue;
        }
        let (src, dst) = (&layouts[t], &layouts[g.tet]);
        let tr = |l: Label| crate::normal::layout::translate(l, g.perm, src, dst);
        let key2 = sorted3(key.map(tr));
        let &other = outer
            .get(&(g.tet, g.perm.apply(tf), key2))
            .ok_or_else(|| OrbError::Invalid("face pieces do not match across a gluing".into()))?;
        glue_by_labels(&mut table, slot, other, &tr);
    }
    // orders: segments of original edges keep theirs
    let rows: Vec<[u32; 6]> = smalls
        .iter()
        .map(|s| {
            std::array::from_fn(|e| {
                let [a, b] = EDGE_VERTS[e];
                common_edge(s.pts[a], s.pts[b]).map_or(1, |te| tri.tet_edge_order(s.tet, te))
            })
        })
        .collect();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for f in 0..4 {
            if let Some(g) = table.get(i, f) {
                uf.union(i, g.tet, false);
            }
        }
    }
    let (label, count) = uf.labels();
    let mut pieces = Vec::new();
    for c in 0..count {
        let members: Vec<usize> = (0..n).filter(|&i| label[i] == c).collect();
        let mut index = vec![usize::MAX; n];
        for (k, &i) in members.iter().enumerate() {
            index[i] = k;
        }
        let mut sub = GluingTable::new(members.len());
        for &i in &members {
            for f in 0..4 {
                if let Some(g) = table.get(i, f) {
                    sub.join(index[i], f, index[g.tet], g.perm);
                }
            }
        }
        let sub_rows: Vec<[u32; 6]> = members.iter().map(|&i| rows[i]).collect();
        pieces.push(OrbifoldTriangulation::with_tet_edge_orders(sub, &sub_rows)?);
    }
    Ok(pieces)
}

/// A boundary surface of a triangulation with its induced 2-orbifold.
#[derive(Clone, Debug)]
pub struct BoundaryComponent {
    pub faces: Vec<(usize, usize)>,
    pub orbifold: TwoOrbifold,
    pub class: TwoOrbClass,
}

/// The boundary face across boundary edge `{i, j}` of boundary face `(t, f)`, with
/// the images of `i` and `j` there.
fn across(tri: &OrbifoldTriangulation, t: usize, f: usize, i: usize, j: usize) -> (usize, usize, usize, usize) {
    let (mut t, mut i, mut j) = (t, i, j);
    let mut from = f;
    loop {
        let next = 6 - from - i - j;
        match tri.table().get(t, next) {
            None => return (t, next, i, j),
            Some(g) => {
                let came = g.perm.apply(next);
                (t, i, j) = (g.tet, g.perm.apply(i), g.perm.apply(j));
                from = came;
            }
        }
    }
}

/// Cone order carried by each vertex class: the order of a singular edge ending there.
fn cone_order(tri: &OrbifoldTriangulation) -> Vec<u32> {
    let mut out = vec![1; tri.vertex_class_count()];
    for c in tri.singular_classes() {
        for v in tri.skeleton().edges[c].ends {
            out[v] = tri.order(c);
        }
    }
    out
}

pub fn boundary_components(tri: &OrbifoldTriangulation) -> Result<Vec<BoundaryComponent>> {
    let faces: Vec<(usize, usize)> = (0..tri.tet_count())
        .flat_map(|t| (0..4).map(move |f| (t, f)))
        .filter(|&(t, f)| tri.table().get(t, f).is_none())
        .collect();
    let index: HashMap<(usize, usize), usize> = faces.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let mut uf = UnionFind::new(faces.len());
    for (k, &(t, f)) in faces.iter().enumerate() {
        let [a, b, c] = face_verts(f);
        for (i, j) in [(a, b), (b, c), (a, c)] {
            let (t2, f2, _, _) = across(tri, t, f, i, j);
            uf.union(k, index[&(t2, f2)], false);
        }
    }
    let (label, count) = uf.labels();
    let skel = tri.skeleton();
    let orders = cone_order(tri);
    let mut out = Vec::new();
    for c in 0..count {
        let fs: Vec<(usize, usize)> = (0..faces.len()).filter(|&k| label[k] == c).map(|k| faces[k]).collect();
        let mut verts: Vec<usize> = fs
            .iter()
            .flat_map(|&(t, f)| face_verts(f).map(|v| skel.vertex_of[t][v]))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut edges: Vec<usize> = fs
            .iter()
            .flat_map(|&(t, f)| {
                let [a, b, c] = face_verts(f);
                [(a, b), (b, c), (a, c)].map(|(x, y)| skel.edge_of[t][edge_index(x, y)])
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let euler = verts.len() as i64 - edges.len() as i64 + fs.len() as i64;
        let genus = ((2 - euler) / 2).max(0) as u32;
        let orbifold = TwoOrbifold::new(genus, verts.iter().map(|&v| orders[v]).collect());
        let class = if euler % 2 != 0 { TwoOrbClass::Other } else { classify(&orbifold)? };
        out.push(BoundaryComponent { faces: fs, orbifold, class });
    }
    Ok(out)
}

/// Attaches a discal cone to every boundary component. Returns the closed result and
/// the vertex class of each new apex.
pub fn cap(piece: &OrbifoldTriangulation) -> Result<(OrbifoldTriangulation, Vec<usize>)> {
    let comps = boundary_components(piece)?;
    for c in &comps {
        if !c.class.is_spherical() {
            return Err(OrbError::CannotCap(format!("{:?} boundary", c.class)));
        }
    }
    let n = piece.tet_count();
    let faces: Vec<(usize, usize)> = comps.iter().flat_map(|c| c.faces.iter().copied()).collect();
    let cone_of: HashMap<(usize, usize), usize> = faces.iter().enumerate().map(|(k, &x)| (x, n + k)).collect();
    let mut table = GluingTable::new(n + faces.len());
    for t in 0..n {
        for f in 0..4 {
            if let Some(g) = piece.table().get(t, f) {
                table.join(t, f, g.tet, g.perm);
            }
        }
    }
    let orders = cone_order(piece);
    let skel = piece.skeleton();
    let mut rows: Vec<[u32; 6]> = piece.tet_edge_orders();
    for &(t, f) in &faces {
        let c = cone_of[&(t, f)];
        // the cone tet copies the face corners and puts the apex at corner `f`
        table.join(c, f, t, Perm4::IDENTITY);
        let mut row = [1u32; 6];
        for (e, &[a, b]) in EDGE_VERTS.iter().enumerate() {
            row[e] = if a == f {
                orders[skel.vertex_of[t][b]]
            } else if b == f {
                orders[skel.vertex_of[t][a]]
            } else {
                piece.tet_edge_order(t, e)
            };
        }
        rows.push(row);
        let [a, b, d] = face_verts(f);
        for (i, j) in [(a, b), (b, d), (a, d)] {
            let k = 6 - f - i - j;
            let (t2, f2, i2, j2) = across(piece, t, f, i, j);
            let c2 = cone_of[&(t2, f2)];
            let k2 = 6 - f2 - i2 - j2;
            let mut img = [0u8; 4];
            img[i] = i2 as u8;
            img[j] = j2 as u8;
            img[f] = f2 as u8;
            img[k] = k2 as u8;
            table.join(c, k, c2, Perm4::new(img).expect("boundary edge match"));
        }
    }
    let closed = OrbifoldTriangulation::with_tet_edge_orders(table, &rows)?;
    let mut apexes: Vec<usize> = comps
        .iter()
        .map(|c| {
            let (t, f) = c.faces[0];
            closed.skeleton().vertex_of[cone_of[&(t, f)]][f]
        })
        .collect();
    apexes.dedup();
    crate::orbtri::validate(&closed).into_result()?;
    Ok((closed, apexes))
}
