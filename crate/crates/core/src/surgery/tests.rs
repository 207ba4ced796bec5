use super::*;
use crate::library;
use crate::normal::NormalCoordinates;
use crate::orbtri::{singular_graph, validate, OrbifoldTriangulation};
use crate::recognize::recognize;
use crate::simplify::DEFAULT_BUDGET;
use crate::twoorb::TwoOrbifold;

fn expr(leaves: usize, sums: Vec<SumKind>) -> SumExpression {
    SumExpression {
        leaves: (0..leaves).map(|i| Leaf::Signature(i.to_string())).collect(),
        sums: sums.into_iter().enumerate().map(|(i, k)| (k, 0, i + 1)).collect(),
    }
}

#[test]
fn additivity_examples() {
    let knot5 = SumKind::Cyclic { p: 5, knot_involved: true };
    let arc3 = SumKind::Cyclic { p: 3, knot_involved: false };
    assert_eq!(additivity_predict(&expr(2, vec![SumKind::Ordinary]), &[3, 4]).unwrap(), 7);
    assert_eq!(additivity_predict(&expr(2, vec![knot5]), &[4, 4]).unwrap(), 4);
    assert_eq!(additivity_predict(&expr(3, vec![SumKind::Ordinary, arc3]), &[1, 1, 1]).unwrap(), 3);
    assert_eq!(
        additivity_predict(&expr(2, vec![SumKind::Vertex(2, 2, 3)]), &[4, 4]),
        Err(OrbError::UseEstimate)
    );
    assert!(additivity_predict(&expr(2, vec![SumKind::Ordinary]), &[1]).is_err());
}

#[test]
fn estimate_examples() {
    let r = |a, b| Ratio::new(a, b);
    assert_eq!(estimate_bounds(&expr(1, vec![]), &[5]).unwrap(), (r(5, 1), r(5, 1)));
    assert_eq!(estimate_bounds(&expr(2, vec![SumKind::Ordinary]), &[7, 7]).unwrap(), (r(7, 2), r(84, 1)));
    let three = expr(3, vec![SumKind::Ordinary, SumKind::Vertex(2, 2, 2)]);
    assert_eq!(estimate_bounds(&three, &[1, 1, 1]).unwrap(), (r(3, 16), r(108, 1)));
}

#[test]
fn mismatched_sums_rejected() {
    let (a, b) = (library::s3v(2, 3, 5), library::s3v(2, 3, 4));
    let va = singular_graph(&a).unwrap().vertices[0];
    let vb = singular_graph(&b).unwrap().vertices[0];
    assert!(matches!(vertex_sum(&a, va, &b, vb), Err(OrbError::OrderMismatch(_))));
    assert!(matches!(
        cyclic_sum(&library::p3f(3), 0, &library::l31f(2), 2),
        Err(OrbError::OrderMismatch(_))
    ));
}

fn link_coords(tri: &OrbifoldTriangulation, v: usize) -> NormalCoordinates {
    let mut c = NormalCoordinates::zero(tri.tet_count());
    for t in 0..tri.tet_count() {
        for x in 0..4 {
            if tri.skeleton().vertex_of[t][x] == v {
                c.set_tri(t, x, 1);
            }
        }
    }
    c
}

/// Cuts along the link of vertex `v` and returns the boundary orbifold and both recognized caps.
fn cut_link(tri: &OrbifoldTriangulation, v: usize) -> (TwoOrbifold, Vec<Option<crate::spine::ExceptionalKind>>) {
    let pieces = cut_along(tri, &link_coords(tri, v)).unwrap();
    assert_eq!(pieces.len(), 2);
    let mut bdry = None;
    let mut kinds = Vec::new();
    for p in &pieces {
        let comps = boundary_components(p).unwrap();
        assert_eq!(comps.len(), 1);
        bdry = Some(comps[0].orbifold.clone());
        let (capped, _) = cap(p).unwrap();
        assert!(validate(&capped).is_valid());
        kinds.push(recognize(&capped, DEFAULT_BUDGET).unwrap().1);
    }
    (bdry.unwrap(), kinds)
}

#[test]
fn cut_and_cap_vertex_links() {
    use crate::spine::ExceptionalKind::*;
    let (b, mut k) = cut_link(&library::s3(), 0);
    k.sort();
    assert_eq!(b.cone_orders(), &[] as &[u32]);
    assert_eq!(k, vec![Some(S3o), Some(S3o)]);

    let (b, mut k) = cut_link(&library::s3c(4), 0);
    k.sort();
    assert_eq!(b.cone_orders(), &[4, 4]);
    assert_eq!(k, vec![Some(S3c(4)), Some(S3c(4))]);

    let theta = library::s3v(2, 3, 5);
    let v = singular_graph(&theta).unwrap().vertices[0];
    let (b, k) = cut_link(&theta, v);
    assert_eq!(b.cone_orders(), &[2, 3, 5]);
    assert_eq!(k, vec![Some(S3v(2, 3, 5)), Some(S3v(2, 3, 5))]);
}

#[test]
fn split_examples() {
    let r = efficient_split(&library::l52()).unwrap();
    assert_eq!(r.summands.len(), 1);
    assert!(r.system.is_empty());

    let sum = ordinary_sum(&library::l41(), &library::l52()).unwrap();
    let r = efficient_split(&sum).unwrap();
    let mut sigs: Vec<String> = r.summands.iter().map(|s| s.signature.clone()).collect();
    sigs.sort();
    let mut want = vec![
        crate::orbtri::iso_signature(&crate::recognize::simplest(&library::l41(), DEFAULT_BUDGET)),
        crate::orbtri::iso_signature(&crate::recognize::simplest(&library::l52(), DEFAULT_BUDGET)),
    ];
    want.sort();
    assert_eq!(sigs, want);
    assert_eq!(r.expression.sums.len(), 1);
    assert_eq!(r.expression.sums[0].0, SumKind::Ordinary);
}

#[test]
fn three_summands_with_a_knot_sum() {
    let knotted = cyclic_sum(&library::p3f(5), 0, &library::l31f(5), 2).unwrap();
    let total = ordinary_sum(&knotted, &library::l41()).unwrap();
    let r = efficient_split(&total).unwrap();
    assert_eq!(r.summands.len(), 3);
    assert_eq!(r.nu().get(&5), Some(&1));
    assert!(r.nu_is_canonical());
    assert_eq!(r.system.iter().filter(|(c, _)| *c == crate::twoorb::TwoOrbClass::SphericalOrdinary).count(), 1);
}
