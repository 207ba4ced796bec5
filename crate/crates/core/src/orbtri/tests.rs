use super::*;
use crate::perm::ALL_PERMS;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn s3_one_vertex() -> OrbifoldTriangulation {
    let mut t = GluingTable::new(1);
    t.join(0, 0, 0, Perm4::parse("1023").unwrap());
    t.join(0, 2, 0, Perm4::parse("1230").unwrap());
    OrbifoldTriangulation::new(t)
}

/// Flood-fill class counting, independent of the union-find skeleton.
fn naive_counts(table: &GluingTable) -> (usize, usize, usize) {
    let n = table.tet_count();
    let closure = |start: (usize, Vec<usize>)| {
        let mut seen = vec![start.clone()];
        let mut stack = vec![start];
        while let Some((t, verts)) = stack.pop() {
            for f in 0..4 {
                if verts.contains(&f) {
                    continue;
                }
                if let Some(g) = table.get(t, f) {
                    let mut img: Vec<usize> = verts.iter().map(|&v| g.perm.apply(v)).collect();
                    img.sort_unstable();
                    let item = (g.tet, img);
                    if !seen.contains(&item) {
                        seen.push(item.clone());
                        stack.push(item);
                    }
                }
            }
        }
        seen
    };
    let count = |k: usize| {
        let mut items: Vec<(usize, Vec<usize>)> = Vec::new();
        for t in 0..n {
            let sets: Vec<Vec<usize>> = match k {
                1 => (0..4).map(|v| vec![v]).collect(),
                2 => crate::perm::EDGE_VERTS.iter().map(|e| e.to_vec()).collect(),
                _ => (0..4).map(|f| face_verts_vec(f)).collect(),
            };
            for s in sets {
                items.push((t, s));
            }
        }
        let mut classes = 0;
        let mut done: Vec<(usize, Vec<usize>)> = Vec::new();
        for it in items {
            if done.contains(&it) {
                continue;
            }
            classes += 1;
            done.extend(closure(it));
        }
        classes
    };
    (count(1), count(2), count(3))
}

fn face_verts_vec(f: usize) -> Vec<usize> {
    (0..4).filter(|&v| v != f).collect()
}

fn all_one_tet_tables() -> Vec<GluingTable> {
    let mut out = Vec::new();
    for pairing in [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]] {
        for p in ALL_PERMS.iter().filter(|p| p.apply(pairing[0].0) == pairing[0].1) {
            for q in ALL_PERMS.iter().filter(|q| q.apply(pairing[1].0) == pairing[1].1) {
                let mut t = GluingTable::new(1);
                t.join(0, pairing[0].0, 0, *p);
                t.join(0, pairing[1].0, 0, *q);
                out.push(t);
            }
        }
    }
    out
}

fn random_relabel(tri: &OrbifoldTriangulation, rng: &mut ChaCha8Rng) -> OrbifoldTriangulation {
    let n = tri.tet_count();
    let mut tet_map: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        tet_map.swap(i, rng.gen_range(0..=i));
    }
    let vert: Vec<Perm4> = (0..n).map(|_| ALL_PERMS[rng.gen_range(0..24)]).collect();
    tri.relabel(&tet_map, &vert)
}

#[test]
fn s3_one_tet_is_valid() {
    let tri = s3_one_vertex();
    let rep = validate(&tri);
    assert!(rep.is_valid(), "{rep:?}");
    assert!(tri.is_orientable());
    assert_eq!(tri.edge_class_count(), 2);
    let (v, e, f) = (tri.vertex_class_count(), tri.edge_class_count(), tri.face_class_count());
    assert_eq!(v as i64 - e as i64 + f as i64 - 1, 0);
    assert_eq!(vertex_link(&tri, 0).genus, Some(0));
}

#[test]
fn skeleton_matches_flood_fill() {
    for table in all_one_tet_tables() {
        let tri = OrbifoldTriangulation::new(table.clone());
        let (v, e, f) = naive_counts(&table);
        assert_eq!((tri.vertex_class_count(), tri.edge_class_count(), tri.face_class_count()), (v, e, f));
        if validate(&tri).is_valid() {
            assert_eq!(v as i64 - e as i64 + f as i64 - 1, 0);
        }
    }
}

#[test]
fn order_two_circle() {
    let tri = s3_one_vertex();
    let dec = tri.with_order(0, 2);
    assert!(validate(&dec).is_valid());
    let g = singular_graph(&dec).unwrap();
    assert_eq!(g.circles.len(), 1);
    assert!(g.arcs.is_empty() && g.vertices.is_empty());
    let five = tri.with_order(1, 5);
    let g = singular_graph(&five).unwrap();
    assert_eq!((g.circles.len(), g.arcs.len(), g.vertices.len()), (1, 0, 0));
    assert!(singular_graph(&tri).unwrap().is_empty());
}

#[test]
fn theta_graph() {
    let tri = format::parse(crate::library::S3_THETA).unwrap();
    assert!(validate(&tri).is_valid());
    for e in &tri.skeleton().edges[1..] {
        assert_ne!(e.ends[0], e.ends[1]);
    }
    let theta = OrbifoldTriangulation::with_orders(tri.table().clone(), vec![1, 2, 3, 5]).unwrap();
    assert!(validate(&theta).is_valid());
    let g = singular_graph(&theta).unwrap();
    assert_eq!((g.arcs.len(), g.vertices.len(), g.circles.len()), (3, 2, 0));
    let bad = OrbifoldTriangulation::with_orders(tri.table().clone(), vec![1, 2, 3, 6]).unwrap();
    assert!(matches!(singular_graph(&bad), Err(OrbError::NotAnOrbifold(_))));
    assert!(validate(&bad).failed("singular-vertices"));
}

#[test]
fn bad_valences_rejected() {
    let tri = format::parse(crate::library::S3_THETA).unwrap();
    // valence 2 with unequal orders
    let two = OrbifoldTriangulation::with_orders(tri.table().clone(), vec![1, 2, 3, 1]).unwrap();
    assert!(singular_graph(&two).is_err());
    // valence 1 at both ends of a lone arc
    let one = OrbifoldTriangulation::with_orders(tri.table().clone(), vec![1, 4, 1, 1]).unwrap();
    assert!(singular_graph(&one).is_err());
    // valence 4 from two loops through one vertex
    let two_loops = s3_one_vertex().with_order(0, 2).with_order(1, 2);
    assert!(singular_graph(&two_loops).is_err());
    let one = s3_one_vertex();
    let mut t = one.table().clone();
    t.unjoin(0, 0);
    let open = OrbifoldTriangulation::new(t);
    assert!(validate(&open).failed("closed"));
}

#[test]
fn involution_failure_reported() {
    let mut t = s3_one_vertex().table().clone();
    t.set_raw(0, 1, Some(Gluing { tet: 0, perm: Perm4::parse("1032").unwrap() }));
    let rep = validate(&OrbifoldTriangulation::new(t));
    assert!(rep.failed("involution"));
    assert!(!rep.is_valid());
}

#[test]
fn torus_link_rejected() {
    let mut t = GluingTable::new(2);
    for (f, p) in ["0132", "0132", "0321", "1023"].iter().enumerate() {
        t.join(0, f, 1, Perm4::parse(p).unwrap());
    }
    let tri = OrbifoldTriangulation::new(t);
    let link = vertex_link(&tri, 0);
    assert_eq!(link.euler, 0);
    assert_eq!(link.genus, Some(1));
    // χ by direct count: 8 corners, 12 glued sides, 4 link vertices
    assert_eq!((link.faces, link.edges, link.vertices), (8, 12, 4));
    let rep = validate(&tri);
    assert!(rep.failed("vertex-links"));
}

#[test]
fn signature_invariance_and_separation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for table in all_one_tet_tables() {
        let tri = OrbifoldTriangulation::new(table);
        if !validate(&tri).is_valid() {
            continue;
        }
        let sig = iso_signature(&tri);
        for _ in 0..100 {
            assert_eq!(iso_signature(&random_relabel(&tri, &mut rng)), sig);
        }
    }
    let base = s3_one_vertex();
    assert_ne!(iso_signature(&base.with_order(1, 3)), iso_signature(&base.with_order(1, 4)));
    let two = format::parse(crate::library::S3_THETA).unwrap();
    assert!(validate(&two).is_valid());
    assert!(crate::homology::h1(&two).is_trivial());
    assert_ne!(iso_signature(&base), iso_signature(&two));
}

#[test]
fn relabel_preserves_orders() {
    let theta = crate::library::s3v(2, 3, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = random_relabel(&theta, &mut rng);
    let mut a = theta.orders().to_vec();
    let mut b = r.orders().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
}

#[test]
fn orb_format_round_trip() {
    let theta = crate::library::s3v(2, 3, 5);
    let text = format::serialize(&theta);
    let back = format::parse(&text).unwrap();
    assert_eq!(back, theta);
    assert_eq!(format::serialize(&back), text);
    let commented = format!("# theta graph\n{}", text.replace('\n', "  # x\n"));
    assert_eq!(format::parse(&commented).unwrap(), theta);
    assert!(matches!(
        format::parse("tets 1\nglue 0 0 -> 0 1 perm 0012\n"),
        Err(OrbError::MalformedPermutation { tet: 0, face: 0 })
    ));
    assert!(matches!(
        format::parse("tets 1\nglue 0 0 -> 0 2 perm 1023\n"),
        Err(OrbError::MalformedPermutation { tet: 0, face: 0 })
    ));
}

#[test]
fn signature_decodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for tri in [crate::library::l83(), crate::library::s3v(2, 3, 4), crate::library::p3f(5)] {
        let sig = iso_signature(&tri);
        let back = from_signature(&sig).unwrap();
        assert_eq!(iso_signature(&back), sig);
        assert_eq!(iso_signature(&from_signature(&iso_signature(&random_relabel(&tri, &mut rng))).unwrap()), sig);
    }
    assert!(from_signature("2.1.2").is_err());
    assert!(from_signature("").is_err());
}
