//! Small named triangulations used as seeds, fixtures and recognition targets.

use crate::orbtri::{format, OrbifoldTriangulation};

pub const S3_ONE_VERTEX: &str = "tets 1\nglue 0 0 -> 0 1 perm 1230\nglue 0 2 -> 0 3 perm 0132\n";
pub const S3_TWO_VERTEX: &str = "tets 1\nglue 0 0 -> 0 1 perm 1023\nglue 0 2 -> 0 3 perm 0132\n";
/// Two vertices joined by three edges (classes 1, 2, 3) forming a θ-graph.
pub const S3_THETA: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1023\nglue 0 2 -> 1 0 perm 3201\nglue 0 3 -> 1 1 perm 0321\nglue 1 2 -> 1 3 perm 0132\n";
pub const L41: &str = "tets 1\nglue 0 0 -> 0 1 perm 1230\nglue 0 2 -> 0 3 perm 1230\n";
pub const L52: &str = "tets 1\nglue 0 0 -> 0 1 perm 1302\nglue 0 2 -> 0 3 perm 1230\n";
/// Projective space; edge class 0 generates first homology.
pub const P3: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1302\nglue 0 2 -> 1 0 perm 2103\nglue 0 3 -> 1 1 perm 0321\nglue 1 2 -> 1 3 perm 0132\n";
/// L(3,1); edge class 2 generates first homology.
pub const L31: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1230\nglue 0 2 -> 1 0 perm 3201\nglue 0 3 -> 1 1 perm 3201\nglue 1 2 -> 1 3 perm 0132\n";
pub const L51: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1230\nglue 0 2 -> 1 0 perm 1302\nglue 0 3 -> 1 1 perm 2031\nglue 1 2 -> 1 3 perm 1230\n";
pub const L72: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1302\nglue 0 2 -> 1 0 perm 2103\nglue 0 3 -> 1 1 perm 0321\nglue 1 2 -> 1 3 perm 1230\n";
pub const L83: &str =
    "tets 2\nglue 0 0 -> 0 1 perm 1230\nglue 0 2 -> 1 0 perm 2103\nglue 0 3 -> 1 1 perm 0321\nglue 1 2 -> 1 3 perm 1230\n";
/// The quaternionic space S³/Q8.
pub const Q8: &str =
    "tets 2\nglue 0 0 -> 1 0 perm 0312\nglue 0 1 -> 1 1 perm 2130\nglue 0 2 -> 1 2 perm 3021\nglue 0 3 -> 1 3 perm 1203\n";

fn load(text: &str) -> OrbifoldTriangulation {
    format::parse(text).expect("library triangulation parses")
}

pub fn s3() -> OrbifoldTriangulation {
    load(S3_ONE_VERTEX)
}

pub fn s3_two_vertex() -> OrbifoldTriangulation {
    load(S3_TWO_VERTEX)
}

/// S³ with an unknotted singular circle of order `p` (one edge of degree 1).
pub fn s3c(p: u32) -> OrbifoldTriangulation {
    s3().with_order(0, p)
}

/// S³ with a θ-graph of orders `(p,q,r)`.
pub fn s3v(p: u32, q: u32, r: u32) -> OrbifoldTriangulation {
    let base = load(S3_THETA);
    OrbifoldTriangulation::with_orders(base.table().clone(), vec![1, p, q, r]).expect("four classes")
}

pub fn p3() -> OrbifoldTriangulation {
    load(P3)
}

pub fn l31() -> OrbifoldTriangulation {
    load(L31)
}

/// Projective space with a generating singular circle of order `p`.
pub fn p3f(p: u32) -> OrbifoldTriangulation {
    p3().with_order(0, p)
}

/// L(3,1) with a generating singular circle of order `p`.
pub fn l31f(p: u32) -> OrbifoldTriangulation {
    l31().with_order(2, p)
}

pub fn l41() -> OrbifoldTriangulation {
    load(L41)
}

pub fn l52() -> OrbifoldTriangulation {
    load(L52)
}

pub fn l51() -> OrbifoldTriangulation {
    load(L51)
}

pub fn l72() -> OrbifoldTriangulation {
    load(L72)
}

pub fn l83() -> OrbifoldTriangulation {
    load(L83)
}

pub fn q8() -> OrbifoldTriangulation {
    load(Q8)
}
