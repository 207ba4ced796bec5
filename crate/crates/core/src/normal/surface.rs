//! Rebuilding the surface from its coordinates.

use super::layout::{Disc, DiscId, Label, TetLayout, TetRegion};
use super::{matching_check, vertex_link_coords, NormalCoordinates};
use crate::error::{OrbError, Result};
use crate::orbtri::OrbifoldTriangulation;
use crate::perm::{face_verts, EDGE_VERTS};
use crate::twoorb::{classify, TwoOrbClass, TwoOrbifold};
use crate::util::UnionFind;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub coords: NormalCoordinates,
    pub euler: i64,
    pub two_sided: bool,
    /// The induced 2-orbifold; `None` for one-sided components.
    pub orbifold: Option<TwoOrbifold>,
    pub class: TwoOrbClass,
    pub separating: bool,
    /// Set when the component is the link of this vertex class.
    pub vertex_link: Option<usize>,
}

impl SurfaceComponent {
    pub fn is_sphere(&self) -> bool {
        self.two_sided && self.euler == 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSurface {
    pub coords: NormalCoordinates,
    pub components: Vec<SurfaceComponent>,
    /// Intersection number with each edge class.
    pub edge_crossings: Vec<u64>,
}

/// Disc reached by arc `i` at corner `v` of face `f`, and whether the disc's minus
/// side faces away from `v`.
pub(crate) fn disc_at(lay: &TetLayout, f: usize, v: usize, i: u32) -> (DiscId, bool) {
    let _ = f;
    if i < lay.tri[v] {
        (DiscId::Tri(v as u8, i), false)
    } else {
        let (q, n) = lay.quad.expect("quad arc");
        let j = i - lay.tri[v];
        if super::on_zero_side(q, v) {
            (DiscId::Quad(j), false)
        } else {
            (DiscId::Quad(n - 1 - j), true)
        }
    }
}

/// Dense numbering of discs, edge points and regions across the triangulation.
pub(crate) struct Indexing {
    pub layouts: Vec<TetLayout>,
    pub discs: Vec<Vec<Disc>>,
    disc_index: HashMap<(usize, DiscId), usize>,
    pub disc_owner: Vec<(usize, usize)>,
    point_base: Vec<[usize; 6]>,
    pub point_count: usize,
    region_index: HashMap<(usize, TetRegion), usize>,
    pub region_count: usize,
}

impl Indexing {
    pub fn new(tri: &OrbifoldTriangulation, c: &NormalCoordinates) -> Indexing {
        let layouts: Vec<TetLayout> = (0..tri.tet_count()).map(|t| TetLayout::new(c, t)).collect();
        let discs: Vec<Vec<Disc>> = layouts.iter().map(|l| l.discs()).collect();
        let mut disc_index = HashMap::new();
        let mut disc_owner = Vec::new();
        for (t, ds) in discs.iter().enumerate() {
            for (k, d) in ds.iter().enumerate() {
                disc_index.insert((t, d.id), disc_owner.len());
                disc_owner.push((t, k));
            }
        }
        let mut point_base = Vec::new();
        let mut point_count = 0;
        for l in &layouts {
            let mut base = [0; 6];
            for e in 0..6 {
                base[e] = point_count;
                point_count += l.w[e] as usize;
            }
            point_base.push(base);
        }
        let mut region_index = HashMap::new();
        for (t, l) in layouts.iter().enumerate() {
            for r in l.regions() {
                let n = region_index.len();
                region_index.insert((t, r), n);
            }
        }
        let region_count = region_index.len();
        Indexing {
            layouts,
            discs,
            disc_index,
            disc_owner,
            point_base,
            point_count,
            region_index,
            region_count,
        }
    }

    pub fn disc(&self, t: usize, id: DiscId) -> usize {
        self.disc_index[&(t, id)]
    }

    pub fn disc_count(&self) -> usize {
        self.disc_owner.len()
    }

    pub fn point(&self, t: usize, label: Label) -> usize {
        match label {
            Label::E(e, k) => self.point_base[t][e as usize] + k as usize,
            _ => panic!("not an edge point"),
        }
    }

    pub fn region(&self, t: usize, r: TetRegion) -> usize {
        self.region_index[&(t, r)]
    }
}

/// Each internal face once, as `(t, f, t2, sigma)`.
pub(crate) fn face_pairs(tri: &OrbifoldTriangulation) -> Vec<(usize, usize, usize, crate::perm::Perm4)> {
    let mut out = Vec::new();
    for t in 0..tri.tet_count() {
        for f in 0..4 {
            if let Some(g) = tri.table().get(t, f) {
                if (t, f) < (g.tet, g.perm.apply(f)) {
                    out.push((t, f, g.tet, g.perm));
                }
            }
        }
    }
    out
}

pub fn reconstruct(tri: &OrbifoldTriangulation, coords: &NormalCoordinates) -> Result<NormalSurface> {
    if !matching_check(tri, coords)? {
        return Err(OrbError::InvalidCoordinates("matching equations or quad condition fail".into()));
    }
    let ix = Indexing::new(tri, coords);
    let nd = ix.disc_count();
    let mut discs = UnionFind::new(nd);
    let mut one_sided_root = vec![false; nd];
    let mut conflicts = Vec::new();
    let mut points = UnionFind::new(ix.point_count);
    let mut regions = UnionFind::new(ix.region_count);
    for &(t, f, t2, s) in &face_pairs(tri) {
        let (la, lb) = (&ix.layouts[t], &ix.layouts[t2]);
        let f2 = s.apply(f);
        for v in face_verts(f) {
            for i in 0..la.arcs_at(f, v) {
                let (da, pa) = disc_at(la, f, v, i);
                let (db, pb) = disc_at(lb, f2, s.apply(v), i);
                let (a, b) = (ix.disc(t, da), ix.disc(t2, db));
                if !discs.union(a, b, pa ^ pb) {
                    conflicts.push(a);
                }
            }
        }
        for &[a, b] in EDGE_VERTS.iter() {
            if a == f || b == f {
                continue;
            }
            let e = super::edge_of(a, b);
            for k in 0..la.w[e] {
                let here = Label::E(e as u8, k);
                let there = super::layout::translate(here, s, la, lb);
                points.union(ix.point(t, here), ix.point(t2, there), false);
            }
        }
        for (fr, _) in la.face_regions(f) {
            let fr2 = match super::layout::translate(Label::FaceCenter(f as u8, fr), s, la, lb) {
                Label::FaceCenter(_, r) => r,
                _ => unreachable!(),
            };
            regions.union(ix.region(t, la.owner(f, fr)), ix.region(t2, lb.owner(f2, fr2)), false);
        }
    }
    for a in conflicts {
        let r = discs.root(a);
        one_sided_root[r] = true;
    }
    let (comp_of_disc, ncomp) = discs.labels();
    let mut comps: Vec<SurfaceComponent> = (0..ncomp)
        .map(|_| SurfaceComponent {
            coords: NormalCoordinates::zero(tri.tet_count()),
            euler: 0,
            two_sided: true,
            orbifold: None,
            class: TwoOrbClass::Other,
            separating: false,
            vertex_link: None,
        })
        .collect();
    let mut sides = vec![0i64; ncomp];
    let mut point_comp: HashMap<usize, (usize, u32)> = HashMap::new();
    for d in 0..nd {
        let c = comp_of_disc[d];
        if one_sided_root[discs.root(d)] {
            comps[c].two_sided = false;
        }
        let (t, k) = ix.disc_owner[d];
        let disc = &ix.discs[t][k];
        match disc.id {
            DiscId::Tri(v, _) => {
                let x = comps[c].coords.tri(t, v as usize);
                comps[c].coords.set_tri(t, v as usize, x + 1);
            }
            DiscId::Quad(_) => {
                let (q, _) = ix.layouts[t].quad.unwrap();
                let x = comps[c].coords.quad(t, q);
                comps[c].coords.set_quad(t, q, x + 1);
            }
        }
        comps[c].euler += 1;
        sides[c] += disc.polygon.len() as i64;
        for &l in &disc.polygon {
            let p = points.root(ix.point(t, l));
            let e = super::layout::TetLayout::label_edge(l).unwrap();
            let order = tri.tet_edge_order(t, e);
            point_comp.insert(p, (c, order));
        }
    }
    let mut cones: Vec<Vec<u32>> = vec![Vec::new(); ncomp];
    for &(c, order) in point_comp.values() {
        comps[c].euler += 1;
        cones[c].push(order);
    }
    for c in 0..ncomp {
        comps[c].euler -= sides[c] / 2;
    }
    for (c, comp) in comps.iter_mut().enumerate() {
        if comp.two_sided {
            let genus = ((2 - comp.euler) / 2).max(0) as u32;
            let orb = TwoOrbifold::new(genus, std::mem::take(&mut cones[c]));
            comp.class = classify(&orb)?;
            comp.orbifold = Some(orb);
            let mut uf = regions.clone();
            for d in 0..nd {
                if comp_of_disc[d] != c {
                    let (t, k) = ix.disc_owner[d];
                    let disc = &ix.discs[t][k];
                    uf.union(ix.region(t, disc.minus), ix.region(t, disc.plus), false);
                }
            }
            let d = comp_of_disc.iter().position(|&x| x == c).unwrap();
            let (t, k) = ix.disc_owner[d];
            let disc = &ix.discs[t][k];
            comp.separating = uf.root(ix.region(t, disc.minus)) != uf.root(ix.region(t, disc.plus));
        }
        comp.vertex_link = (0..tri.vertex_class_count()).find(|&v| vertex_link_coords(tri, v) == comp.coords);
    }
    Ok(NormalSurface {
        coords: coords.clone(),
        components: comps,
        edge_crossings: coords.edge_weights(tri),
    })
}
