//! Fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod oracle;
pub mod props;

use orbicomplex::census::enumerate;
use orbicomplex::library;
use orbicomplex::orbtri::{singular_graph, OrbifoldTriangulation};
use orbicomplex::perm::{Perm4, ALL_PERMS};
use orbicomplex::surgery::{cyclic_sum, ordinary_sum, vertex_sum};
use rand::seq::SliceRandom;
use rand::Rng;
use std::sync::OnceLock;

/// Every valid decorated triangulation with at most 3 tetrahedra, orders at most 3 and
/// weight at most 4.
pub fn pool() -> &'static [OrbifoldTriangulation] {
    static POOL: OnceLock<Vec<OrbifoldTriangulation>> = OnceLock::new();
    POOL.get_or_init(|| enumerate(3, 3, 4))
}

pub fn random_relabel<R: Rng>(tri: &OrbifoldTriangulation, rng: &mut R) -> OrbifoldTriangulation {
    let n = tri.tet_count();
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    let verts: Vec<Perm4> = (0..n).map(|_| ALL_PERMS[rng.gen_range(0..24)]).collect();
    tri.relabel(&map, &verts)
}

/// Irreducible orbifolds with known complexities.
pub fn irreducible_corpus() -> Vec<(&'static str, OrbifoldTriangulation)> {
    vec![
        ("L(4,1)", library::l41()),
        ("L(5,2)", library::l52()),
        ("L(5,1)", library::l51()),
        ("L(7,2)", library::l72()),
        ("L(8,3)", library::l83()),
        ("S3/Q8", library::q8()),
        ("P3", library::p3()),
        ("L(3,1)", library::l31()),
        ("(P3,F2)", library::p3f(2)),
        ("(L31,F3)", library::l31f(3)),
    ]
}

pub fn theta_vertex(tri: &OrbifoldTriangulation) -> usize {
    singular_graph(tri).expect("valid").vertices[0]
}

/// A composite built by ordinary and cyclic sums, with the complexities of its parts.
pub struct Composite {
    pub name: &'static str,
    pub tri: OrbifoldTriangulation,
    pub parts: Vec<u64>,
}

/// Ordinary sums and knot sums of orbifolds with complexity at most 4.
pub fn additive_composites() -> Vec<Composite> {
    let ord = |a: OrbifoldTriangulation, b: OrbifoldTriangulation| ordinary_sum(&a, &b).expect("ordinary sum");
    // the circle of p3f and l31f lies in classes 0 and 2
    let knot = |a: OrbifoldTriangulation, ca: usize, b: OrbifoldTriangulation, cb: usize| {
        cyclic_sum(&a, ca, &b, cb).expect("cyclic sum")
    };
    vec![
        Composite { name: "P3 # L31", tri: ord(library::p3(), library::l31()), parts: vec![0, 0] },
        Composite { name: "(P3,F2) # (L31,F2)", tri: ord(library::p3f(2), library::l31f(2)), parts: vec![1, 1] },
        Composite { name: "(P3,F3) # P3", tri: ord(library::p3f(3), library::p3()), parts: vec![2, 0] },
        Composite { name: "(L31,F4) # P3", tri: ord(library::l31f(4), library::p3()), parts: vec![3, 0] },
        Composite { name: "(L31,F2) # (L31,F2)", tri: ord(library::l31f(2), library::l31f(2)), parts: vec![1, 1] },
        Composite { name: "S3v(2,2,2) # P3", tri: ord(library::s3v(2, 2, 2), library::p3()), parts: vec![3, 0] },
        Composite { name: "(P3,F2) #c2 (L31,F2)", tri: knot(library::p3f(2), 0, library::l31f(2), 2), parts: vec![1, 1] },
        Composite { name: "(P3,F2) #c2 (P3,F2)", tri: knot(library::p3f(2), 0, library::p3f(2), 0), parts: vec![1, 1] },
        Composite { name: "(P3,F3) #c3 (L31,F3)", tri: knot(library::p3f(3), 0, library::l31f(3), 2), parts: vec![2, 2] },
        Composite { name: "(L31,F3) #c3 (L31,F3)", tri: knot(library::l31f(3), 2, library::l31f(3), 2), parts: vec![2, 2] },
        Composite { name: "(P3,F5) #c5 (L31,F5)", tri: knot(library::p3f(5), 0, library::l31f(5), 2), parts: vec![4, 4] },
        Composite { name: "(P3,F5) #c5 (P3,F5)", tri: knot(library::p3f(5), 0, library::p3f(5), 0), parts: vec![4, 4] },
    ]
}

/// Vertex sums of orbifolds carrying θ-graphs.
pub fn vertex_composites() -> Vec<Composite> {
    let with_theta = |a: OrbifoldTriangulation, t: OrbifoldTriangulation| ordinary_sum(&a, &t).expect("ordinary sum");
    let vsum = |a: &OrbifoldTriangulation, b: &OrbifoldTriangulation| {
        vertex_sum(a, theta_vertex(a), b, theta_vertex(b)).expect("vertex sum")
    };
    let p3t = with_theta(library::p3(), library::s3v(2, 2, 2));
    let l31t = with_theta(library::l31(), library::s3v(2, 2, 2));
    let l31t235 = with_theta(library::l31(), library::s3v(2, 3, 5));
    let p3t223 = with_theta(library::p3(), library::s3v(2, 2, 3));
    vec![
        Composite { name: "(P3 # θ222) #v (L31 # θ222)", tri: vsum(&p3t, &l31t), parts: vec![3, 3] },
        Composite { name: "(L31 # θ235) #v θ235", tri: vsum(&l31t235, &library::s3v(2, 3, 5)), parts: vec![7, 7] },
        Composite { name: "(P3 # θ223) #v (P3 # θ223)", tri: vsum(&p3t223, &p3t223), parts: vec![4, 4] },
    ]
}
