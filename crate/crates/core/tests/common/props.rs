//! Module invariants as property checks. Each returns a one-line summary on success.

use super::{additive_composites, irreducible_corpus, pool, random_relabel};
use orbicomplex::census::{certify, examine, run_census, CensusOptions, CensusTable, Certification, OrbifoldClass};
use orbicomplex::library;
use orbicomplex::normal::{matching_check, matching_equations, reconstruct, vertex_link_coords, vertex_solutions, NormalCoordinates};
use orbicomplex::orbtri::{from_signature, iso_signature, singular_graph, validate, OrbifoldTriangulation};
use orbicomplex::recognize::{discal_verdict, invariants, recognize, simplest};
use orbicomplex::simplify::DEFAULT_BUDGET;
use orbicomplex::spine::{complexity_weight, dual_spine, exceptional_complexity, spine_weight};
use orbicomplex::surgery::{
    additivity_predict, cap, cut_along, efficient_split, efficient_split_with, estimate_bounds, ordinary_sum,
    vertex_triple, Leaf, SplitOptions, SumExpression, SumKind,
};
use orbicomplex::twoorb::{
    boundary_of_discal, classify, discal_of, is_admissible_triple, orb_euler, DiscalKind, TwoOrbClass, TwoOrbifold,
};
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

pub type Outcome = Result<String, String>;

pub const CASES: u32 = 1000;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    match runner.run(&strategy, test) {
        Ok(()) => Ok(format!("{cases} random cases")),
        Err(TestError::Fail(why, v)) => Err(format!("{why} for {v:?}")),
        Err(TestError::Abort(why)) => Err(format!("aborted: {why}")),
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pool_index() -> impl Strategy<Value = usize> {
    0..pool().len()
}

// ---- orbtri ----

pub fn euler_characteristic_vanishes() -> Outcome {
    for t in pool() {
        let chi = t.vertex_class_count() as i64 - t.edge_class_count() as i64 + t.face_class_count() as i64
            - t.tet_count() as i64;
        check(chi == 0, || format!("χ = {chi} for {}", iso_signature(t)))?;
    }
    Ok(format!("{} triangulations", pool().len()))
}

pub fn signature_relabel_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in pool() {
        let sig = iso_signature(t);
        for _ in 0..100 {
            let r = random_relabel(t, &mut rng);
            check(iso_signature(&r) == sig, || format!("relabel changed {sig}"))?;
        }
    }
    Ok(format!("{} triangulations × 100 relabelings", pool().len()))
}

pub fn singular_graph_partition() -> Outcome {
    for t in pool().iter().chain(&[library::s3v(2, 3, 5), library::p3f(4)]) {
        let g = singular_graph(t).map_err(|e| e.to_string())?;
        let mut covered: Vec<usize> = g.arcs.iter().chain(&g.circles).flatten().copied().collect();
        covered.sort_unstable();
        let n = covered.len();
        covered.dedup();
        let sig = iso_signature(t);
        check(covered.len() == n, || format!("{sig}: a class lies on two components"))?;
        check(covered == t.singular_classes(), || format!("{sig}: components miss a singular class"))?;
        for &(a, b) in &g.arc_ends {
            check(g.vertices.contains(&a) && g.vertices.contains(&b), || format!("{sig}: arc end is not a vertex"))?;
        }
        let skel = t.skeleton();
        for &c in g.circles.iter().flatten() {
            check(skel.edges[c].ends.iter().all(|v| !g.vertices.contains(v)), || {
                format!("{sig}: circle meets a vertex")
            })?;
        }
    }
    Ok(format!("{} triangulations", pool().len() + 2))
}

pub fn validate_is_deterministic() -> Outcome {
    run(CASES, (pool_index(), any::<u64>()), |(i, seed)| {
        let t = random_relabel(&pool()[i], &mut ChaCha8Rng::seed_from_u64(seed));
        let before = t.clone();
        let a = validate(&t);
        let b = validate(&t);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&t, &before);
        prop_assert!(a.is_valid());
        Ok(())
    })
}

// ---- spine ----

pub fn dual_spine_counts() -> Outcome {
    for t in pool() {
        let s = dual_spine(t);
        let sig = iso_signature(t);
        check(s.vertex_count == t.tet_count(), || format!("{sig}: vertices"))?;
        check(s.edges.len() == t.face_class_count(), || format!("{sig}: edges"))?;
        check(s.regions.len() == t.edge_class_count(), || format!("{sig}: regions"))?;
        let w = spine_weight(&s);
        check(w == complexity_weight(t), || format!("{sig}: weight"))?;
        check(w.vertex_count == t.tet_count() as u64, || format!("{sig}: vertex count"))?;
    }
    Ok(format!("{} triangulations", pool().len()))
}

pub fn weight_bounds_exceptional_complexity() -> Outcome {
    let extra = [
        library::s3c(5),
        library::s3v(2, 3, 5),
        library::s3v(2, 2, 7),
        library::p3f(4),
        library::l31f(6),
    ];
    let mut recognized = 0;
    for t in pool().iter().chain(&extra) {
        let (_, kind) = recognize(t, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        if let Some(k) = kind {
            recognized += 1;
            let c = exceptional_complexity(k).map_err(|e| e.to_string())?;
            let w = complexity_weight(t).total();
            check(w >= c, || format!("{}: weight {w} below c({k}) = {c}", iso_signature(t)))?;
        }
    }
    Ok(format!("{recognized} recognized triangulations"))
}

pub fn weight_relabel_invariance() -> Outcome {
    run(CASES, (pool_index(), any::<u64>()), |(i, seed)| {
        let t = &pool()[i];
        let r = random_relabel(t, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(complexity_weight(&r), complexity_weight(t));
        Ok(())
    })
}

/// Exact census minima of manifolds whose complexity is known.
pub fn census_minima_match_known() -> Outcome {
    let run = run_census(&CensusOptions::new(2, 1, 2), None).map_err(|e| e.to_string())?;
    let known = [
        ("S3", library::s3(), 0),
        ("P3", library::p3(), 0),
        ("L(3,1)", library::l31(), 0),
        ("L(4,1)", library::l41(), 1),
        ("L(5,2)", library::l52(), 1),
        ("L(5,1)", library::l51(), 2),
        ("L(7,2)", library::l72(), 2),
        ("L(8,3)", library::l83(), 2),
        ("S3/Q8", library::q8(), 2),
    ];
    let mut exact = 0;
    for (name, t, c) in known {
        let class = examine(&t, &SplitOptions::default()).map_err(|e| e.to_string())?.entry.class;
        let s = run.table.class(&class).ok_or_else(|| format!("{name} missing from census"))?;
        if s.complexity.upper_bound_only {
            check(s.complexity.value >= c, || format!("{name}: bound below {c}"))?;
        } else {
            exact += 1;
            check(s.complexity.value == c, || format!("{name}: {} != {c}", s.complexity.value))?;
        }
    }
    check(exact >= 8, || format!("only {exact} exact classes"))?;
    Ok(format!("{exact} exact classes of 9"))
}

// ---- twoorb ----

fn multisets(len: usize, lo: u32, hi: u32, f: &mut impl FnMut(&[u32]) -> Result<(), String>) -> Result<(), String> {
    fn go(cur: &mut Vec<u32>, len: usize, lo: u32, hi: u32, f: &mut impl FnMut(&[u32]) -> Result<(), String>) -> Result<(), String> {
        if cur.len() == len {
            return f(cur);
        }
        for p in lo..=hi {
            cur.push(p);
            go(cur, len, p, hi, f)?;
            cur.pop();
        }
        Ok(())
    }
    go(&mut Vec::new(), len, lo, hi, f)
}

pub fn bad_has_positive_euler() -> Outcome {
    let mut seen = 0u64;
    let mut bad = 0u64;
    for genus in 0..=1 {
        for len in 0..=4 {
            let hi = if len == 4 { 32 } else { 64 };
            multisets(len, 2, hi, &mut |cones| {
                let s = TwoOrbifold::new(genus, cones.to_vec());
                seen += 1;
                if classify(&s).map_err(|e| e.to_string())? == TwoOrbClass::Bad {
                    bad += 1;
                    check(orb_euler(&s) > Ratio::from_integer(0), || format!("{s:?} is bad with χ ≤ 0"))?;
                }
                Ok(())
            })?;
        }
    }
    Ok(format!("{seen} cone multisets, {bad} bad"))
}

pub fn discal_boundaries_classify() -> Outcome {
    let mut kinds = vec![DiscalKind::Ordinary];
    for p in 2..=64 {
        kinds.push(DiscalKind::Cyclic(p));
        for q in p..=64 {
            for r in q..=64 {
                if is_admissible_triple(p, q, r) {
                    kinds.push(DiscalKind::Vertex(p, q, r));
                }
            }
        }
    }
    for &k in &kinds {
        let class = classify(&boundary_of_discal(k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        check(discal_of(class) == Some(k), || format!("{k:?} bounds {class:?}"))?;
    }
    Ok(format!("{} discal kinds", kinds.len()))
}

pub fn classify_total_and_deterministic() -> Outcome {
    run(CASES, (0u32..4, prop::collection::vec(0u32..=64, 0..7)), |(genus, cones)| {
        let s = TwoOrbifold::new(genus, cones.clone());
        let a = classify(&s);
        let b = classify(&s);
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
        prop_assert_eq!(a.is_err(), cones.contains(&0));
        if let Ok(c) = a {
            if genus > 0 {
                prop_assert_eq!(c, TwoOrbClass::Other);
            }
        }
        Ok(())
    })
}

// ---- normal ----

fn solutions() -> &'static [Vec<NormalCoordinates>] {
    static SOLS: OnceLock<Vec<Vec<NormalCoordinates>>> = OnceLock::new();
    SOLS.get_or_init(|| pool().iter().map(|t| vertex_solutions(t, None).expect("vertex solutions")).collect())
}

/// `V − E + F` of the surface carried by `c`, counted from its coordinates.
fn euler_from_coords(tri: &OrbifoldTriangulation, c: &NormalCoordinates) -> i64 {
    let v: u64 = c.edge_weights(tri).iter().sum();
    let (mut tris, mut quads) = (0u64, 0u64);
    for t in 0..c.tets() {
        tris += (0..4).map(|x| c.tri(t, x)).sum::<u64>();
        quads += (0..3).map(|q| c.quad(t, q)).sum::<u64>();
    }
    v as i64 - ((3 * tris + 4 * quads) / 2) as i64 + (tris + quads) as i64
}

pub fn reconstruction_consistency() -> Outcome {
    let mut count = 0;
    for (t, sols) in pool().iter().zip(solutions()) {
        for c in sols {
            let surf = reconstruct(t, c).map_err(|e| e.to_string())?;
            let sig = iso_signature(t);
            let total = surf
                .components
                .iter()
                .fold(NormalCoordinates::zero(t.tet_count()), |acc, k| acc.add(&k.coords));
            check(&total == c, || format!("{sig}: components do not sum to {:?}", c.as_slice()))?;
            for k in &surf.components {
                let chi = euler_from_coords(t, &k.coords);
                check(chi == k.euler, || format!("{sig}: χ {} by cells, {chi} by coordinates", k.euler))?;
                if let Some(o) = &k.orbifold {
                    check(k.two_sided && 2 - 2 * o.genus as i64 == k.euler, || format!("{sig}: genus"))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} vertex solutions"))
}

pub fn matching_linearity() -> Outcome {
    run(CASES, (pool_index(), any::<usize>(), any::<usize>(), 1u64..4, 1u64..4), |(i, a, b, ka, kb)| {
        let (t, sols) = (&pool()[i], &solutions()[i]);
        prop_assume!(!sols.is_empty());
        let x = sols[a % sols.len()].scale(ka);
        let y = sols[b % sols.len()].scale(kb);
        let sum = x.add(&y);
        let d = sum.as_slice();
        for row in matching_equations(t) {
            prop_assert_eq!(row.iter().map(|&(i, c)| c * d[i] as i64).sum::<i64>(), 0);
        }
        prop_assert_eq!(matching_check(t, &sum).unwrap(), sum.quad_condition());
        if sum.quad_condition() {
            prop_assert!(reconstruct(t, &sum).is_ok());
        }
        Ok(())
    })
}

pub fn bad_suborbifold_certified() -> Outcome {
    let mut with_bad = 0;
    for (t, sols) in pool().iter().zip(solutions()) {
        let mut bad = false;
        for c in sols {
            bad |= reconstruct(t, c).map_err(|e| e.to_string())?.components.iter().any(|k| k.class == TwoOrbClass::Bad);
        }
        if bad {
            with_bad += 1;
            let cert = certify(t).map_err(|e| e.to_string())?;
            check(cert == Certification::ContainsBad, || format!("{}: {cert}", iso_signature(t)))?;
        }
    }
    check(with_bad > 0, || "no bad suborbifold met".into())?;
    Ok(format!("{with_bad} triangulations with bad vertex surfaces"))
}

pub fn singular_vertex_links() -> Outcome {
    let mut extra = vec![library::s3v(2, 3, 3), library::s3v(2, 3, 4), library::s3v(2, 3, 5)];
    extra.extend((2..=9).map(|n| library::s3v(2, 2, n)));
    extra.push(ordinary_sum(&library::p3(), &library::s3v(2, 2, 3)).map_err(|e| e.to_string())?);
    let mut count = 0;
    for t in pool().iter().chain(&extra) {
        for v in singular_graph(t).map_err(|e| e.to_string())?.vertices {
            let [p, q, r] = vertex_triple(t, v).map_err(|e| e.to_string())?;
            let surf = reconstruct(t, &vertex_link_coords(t, v)).map_err(|e| e.to_string())?;
            let [k] = &surf.components[..] else {
                return Err(format!("{}: link of {v} is disconnected", iso_signature(t)));
            };
            check(k.class == TwoOrbClass::SphericalVertex(p, q, r) && k.vertex_link == Some(v), || {
                format!("{}: link of {v} is {:?}", iso_signature(t), k.class)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} singular vertices"))
}

// ---- surgery ----

/// The census class a summand stands for.
pub fn leaf_class(leaf: &Leaf) -> OrbifoldClass {
    match leaf {
        Leaf::Exceptional(k) => OrbifoldClass::Exceptional(*k),
        Leaf::Signature(s) => OrbifoldClass::Anonymous(s.clone()),
    }
}

pub fn class_of(t: &OrbifoldTriangulation) -> Result<OrbifoldClass, String> {
    Ok(examine(t, &SplitOptions::default()).map_err(|e| e.to_string())?.entry.class)
}

/// Whether splitting `a # b` returns exactly the classes of `a` and `b`.
pub fn round_trip(a: &OrbifoldTriangulation, b: &OrbifoldTriangulation) -> Result<(), String> {
    let sum = ordinary_sum(a, b).map_err(|e| e.to_string())?;
    let r = efficient_split(&sum).map_err(|e| e.to_string())?;
    let mut got: Vec<OrbifoldClass> = r.summands.iter().map(|s| leaf_class(&s.leaf())).collect();
    let mut want = vec![class_of(a)?, class_of(b)?];
    got.sort();
    want.sort();
    check(got == want, || format!("summands {got:?}, expected {want:?}"))?;
    check(r.expression.sums.iter().map(|s| s.0).eq([SumKind::Ordinary]), || format!("sums {:?}", r.expression.sums))
}

pub fn ordinary_sum_round_trip() -> Outcome {
    let c: Vec<_> = irreducible_corpus().into_iter().map(|(_, t)| t).collect();
    for (i, j) in [(0, 1), (6, 7), (3, 8)] {
        round_trip(&c[i], &c[j])?;
    }
    Ok("3 pairs".into())
}

fn stage(k: TwoOrbClass) -> u8 {
    match k {
        TwoOrbClass::SphericalOrdinary => 0,
        TwoOrbClass::SphericalCyclic(_) => 1,
        _ => 2,
    }
}

pub fn stage_ordering() -> Outcome {
    let knotted = |p| -> Result<OrbifoldTriangulation, String> {
        orbicomplex::surgery::cyclic_sum(&library::p3f(p), 0, &library::l31f(p), 2).map_err(|e| e.to_string())
    };
    let cases = [
        ordinary_sum(&knotted(5)?, &library::l41()).map_err(|e| e.to_string())?,
        ordinary_sum(&library::l52(), &knotted(2)?).map_err(|e| e.to_string())?,
    ];
    for t in &cases {
        let r = efficient_split(t).map_err(|e| e.to_string())?;
        let stages: Vec<u8> = r.system.iter().map(|(k, _)| stage(*k)).collect();
        check(stages.windows(2).all(|w| w[0] <= w[1]), || format!("cut order {:?}", r.system))?;
        check(stages.contains(&0) && stages.contains(&1), || format!("system {:?}", r.system))?;
    }
    Ok(format!("{} mixed composites", cases.len()))
}

/// ν over `seeds` tie-break seeds; all must agree.
pub fn nu_over_seeds(t: &OrbifoldTriangulation, seeds: u64) -> Result<BTreeMap<u32, usize>, String> {
    let mut first = None;
    for seed in 0..seeds {
        let r = efficient_split_with(t, &SplitOptions { seed, ..SplitOptions::default() }).map_err(|e| e.to_string())?;
        let nu = r.nu();
        match &first {
            None => first = Some(nu),
            Some(f) => check(*f == nu, || format!("seed {seed}: ν {nu:?} differs from {f:?}"))?,
        }
    }
    Ok(first.unwrap_or_default())
}

pub fn nu_seed_invariance() -> Outcome {
    let knots: Vec<_> = additive_composites().into_iter().filter(|c| c.name.contains("#c")).take(2).collect();
    for c in &knots {
        let nu = nu_over_seeds(&c.tri, 20)?;
        check(nu.values().sum::<usize>() == 1, || format!("{}: ν {nu:?}", c.name))?;
    }
    Ok(format!("{} knot sums × 20 seeds", knots.len()))
}

/// A sum expression whose leaves carry singular circles, built so every knot sum
/// splices circles of equal order.
fn realizable_expression() -> impl Strategy<Value = (SumExpression, Vec<u64>)> {
    let leaf = (prop::collection::vec(2u32..=7, 0..3), 0u64..5);
    (prop::collection::vec(leaf, 1..7), prop::collection::vec(0u8..3, 6)).prop_map(|(leaves, choices)| {
        let cs: Vec<u64> = leaves.iter().map(|(circ, slack)| circ.iter().map(|&p| p as u64 - 1).sum::<u64>() + slack).collect();
        let mut available: Vec<u32> = leaves[0].0.clone();
        let mut expr = SumExpression {
            leaves: (0..leaves.len()).map(|i| Leaf::Signature(i.to_string())).collect(),
            sums: Vec::new(),
        };
        for (j, (circ, _)) in leaves.iter().enumerate().skip(1) {
            let shared = circ.iter().copied().find(|p| available.contains(p));
            let kind = match (choices[j - 1], shared) {
                (1, Some(p)) => {
                    // the two circles merge into one
                    let mut rest = circ.clone();
                    rest.remove(rest.iter().position(|&x| x == p).unwrap());
                    available.extend(rest);
                    SumKind::Cyclic { p, knot_involved: true }
                }
                (2, _) => {
                    available.extend(circ);
                    SumKind::Cyclic { p: 2, knot_involved: false }
                }
                _ => {
                    available.extend(circ);
                    SumKind::Ordinary
                }
            };
            expr.sums.push((kind, 0, j));
        }
        (expr, cs)
    })
}

pub fn predict_within_bounds() -> Outcome {
    run(CASES, realizable_expression(), |(expr, cs)| {
        let c = additivity_predict(&expr, &cs).unwrap();
        let (lo, hi) = estimate_bounds(&expr, &cs).unwrap();
        let c = Ratio::from_integer(c as i128);
        prop_assert!(lo <= c && c <= hi, "{} outside [{}, {}]", c, lo, hi);
        Ok(())
    })
}

pub fn cap_cut_along_vertex_links() -> Outcome {
    let mut count = 0;
    for t in pool().iter().filter(|t| t.tet_count() <= 2) {
        let inv = invariants(t).map_err(|e| e.to_string())?;
        for v in 0..t.vertex_class_count() {
            let c = vertex_link_coords(t, v);
            let surf = reconstruct(t, &c).map_err(|e| e.to_string())?;
            let kind = discal_of(surf.components[0].class).ok_or("vertex link is not spherical")?;
            let pieces = cut_along(t, &c).map_err(|e| e.to_string())?;
            check(pieces.len() == 2, || format!("{} pieces", pieces.len()))?;
            let (mut discal, mut same) = (0, 0);
            for p in &pieces {
                let (capped, _) = cap(p).map_err(|e| e.to_string())?;
                if discal_verdict(&simplest(&capped, DEFAULT_BUDGET), kind).map_err(|e| e.to_string())? == Some(true) {
                    discal += 1;
                }
                if invariants(&capped).map_err(|e| e.to_string())? == inv {
                    same += 1;
                }
            }
            check(discal >= 1 && same >= 1, || format!("{} vertex {v}: discal {discal}, equivalent {same}", iso_signature(t)))?;
            count += 1;
        }
    }
    Ok(format!("{count} vertex links"))
}

// ---- census ----

pub fn dedup_soundness() -> Outcome {
    let index: HashMap<String, usize> = pool().iter().enumerate().map(|(i, t)| (iso_signature(t), i)).collect();
    check(index.len() == pool().len(), || "census emitted a signature twice".into())?;
    run(CASES, (pool_index(), any::<u64>()), |(i, seed)| {
        let r = random_relabel(&pool()[i], &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(index.get(&iso_signature(&r)), Some(&i));
        Ok(())
    })
}

pub fn monotonicity() -> Outcome {
    let tables: Vec<CensusTable> = (1..=4)
        .map(|k| run_census(&CensusOptions::new(2, 2, k), None).map(|r| r.table))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for (k, pair) in tables.windows(2).enumerate() {
        let (small, big) = (&pair[0], &pair[1]);
        let w = k as u64 + 1;
        let low: Vec<_> = big.entries.iter().filter(|e| e.weight <= w).cloned().collect();
        check(small.entries == low, || format!("weight {w} entries are not a prefix"))?;
        for c in &small.classes {
            let d = big.class(&c.class).ok_or_else(|| format!("{} lost at weight {}", c.class, w + 1))?;
            check(d.min_weight == c.min_weight && d.members >= c.members, || format!("{} changed", c.class))?;
        }
    }
    Ok("census(2,2,k), k = 1..4".into())
}

pub struct Audit {
    pub checked: usize,
    /// Classes whose census minimum equals the prediction.
    pub equal: usize,
    pub rows: Vec<String>,
}

/// Composite classes of a bounded census against the additivity prediction. The
/// prediction never exceeds the census minimum; equality is reported, not asserted.
pub fn additivity_audit() -> Result<Audit, String> {
    let table = run_census(&CensusOptions::new(2, 3, 4), None).map_err(|e| e.to_string())?.table;
    let mut audit = Audit { checked: 0, equal: 0, rows: Vec::new() };
    for c in &table.classes {
        let OrbifoldClass::Composite(_) = &c.class else { continue };
        let rep = from_signature(&c.representative).map_err(|e| e.to_string())?;
        let ex = examine(&rep, &SplitOptions::default()).map_err(|e| e.to_string())?;
        let Some(split) = ex.split else { continue };
        if split.incomplete || split.expression.has_vertex_sums() {
            continue;
        }
        let mut cs = Vec::new();
        for s in &split.summands {
            let known = match s.kind {
                Some(k) => exceptional_complexity(k).ok(),
                None => table
                    .class(&OrbifoldClass::Anonymous(s.signature.clone()))
                    .filter(|a| !a.complexity.upper_bound_only)
                    .map(|a| a.complexity.value),
            };
            cs.push(known);
        }
        let Some(cs) = cs.into_iter().collect::<Option<Vec<u64>>>() else { continue };
        let predicted = additivity_predict(&split.expression, &cs).map_err(|e| e.to_string())?;
        check(predicted <= c.min_weight, || format!("{}: predicted {predicted} above census {}", c.class, c.min_weight))?;
        audit.checked += 1;
        if predicted == c.min_weight {
            audit.equal += 1;
        }
        audit.rows.push(format!("{}: predicted {predicted}, census minimum {}", c.class, c.min_weight));
    }
    check(audit.checked > 0, || "no fully split composite in the census".into())?;
    Ok(audit)
}

/// Every property except the additivity audit, by module.
pub fn all() -> Vec<(&'static str, fn() -> Outcome)> {
    vec![
        ("orbtri: V − E + F − T = 0", euler_characteristic_vanishes),
        ("orbtri: signature invariant under relabeling", signature_relabel_invariance),
        ("orbtri: singular graph partitions the singular classes", singular_graph_partition),
        ("orbtri: validate is deterministic and pure", validate_is_deterministic),
        ("spine: dual spine counts", dual_spine_counts),
        ("spine: weight bounds exceptional complexity", weight_bounds_exceptional_complexity),
        ("spine: weight invariant under relabeling", weight_relabel_invariance),
        ("spine: census minima of known manifolds", census_minima_match_known),
        ("twoorb: bad implies χ > 0", bad_has_positive_euler),
        ("twoorb: discal boundaries classify to their kind", discal_boundaries_classify),
        ("twoorb: classify is total and deterministic", classify_total_and_deterministic),
        ("normal: reconstruction consistency", reconstruction_consistency),
        ("normal: matching equations are linear", matching_linearity),
        ("normal: bad vertex surfaces are certified", bad_suborbifold_certified),
        ("normal: singular vertex links", singular_vertex_links),
        ("surgery: ordinary sum round trip", ordinary_sum_round_trip),
        ("surgery: ordinary spheres are cut first", stage_ordering),
        ("surgery: ν independent of the seed", nu_seed_invariance),
        ("surgery: prediction within estimate bounds", predict_within_bounds),
        ("surgery: cap and cut along vertex links", cap_cut_along_vertex_links),
        ("census: dedup soundness", dedup_soundness),
        ("census: monotone in the weight bound", monotonicity),
    ]
}
