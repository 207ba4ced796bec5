//! Desk-scale census: enumeration, certification, orbifold classes and persistence.

pub mod enumerate;
mod run;
mod store;

pub use enumerate::{closed_tables, decorations, enumerate, face_pairing_graphs};
pub use run::{run_census, CensusOptions, CensusRun};
pub use store::{checkpoint_path, load_entries, read_checkpoint, Checkpoint};

use crate::error::{OrbError, Result};
use crate::normal::{reconstruct, vertex_solutions, NormalCoordinates};
use crate::orbtri::{from_signature, iso_signature, validate, OrbifoldTriangulation};
use crate::recognize::{invariants, simplest, Invariants};
use crate::spine::{complexity_weight, exceptional_complexity, ExceptionalKind};
use crate::surgery::{efficient_split_with, Leaf, SplitOptions, SplitResult, SumExpression, SumKind};
use crate::twoorb::TwoOrbClass;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Certification {
    Irreducible,
    /// Carries the canonical form of the decomposition found.
    Reducible(String),
    ContainsBad,
    Unknown,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::Irreducible => write!(f, "irreducible"),
            Certification::Reducible(s) => write!(f, "reducible:{s}"),
            Certification::ContainsBad => write!(f, "contains-bad"),
            Certification::Unknown => write!(f, "unknown"),
        }
    }
}

impl FromStr for Certification {
    type Err = OrbError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irreducible" => Ok(Certification::Irreducible),
            "contains-bad" => Ok(Certification::ContainsBad),
            "unknown" => Ok(Certification::Unknown),
            _ => s
                .strip_prefix("reducible:")
                .map(|r| Certification::Reducible(r.to_string()))
                .ok_or_else(|| OrbError::Parse { line: 1, msg: format!("unknown certification {s:?}") }),
        }
    }
}

/// Orbifold equivalence class of a census entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbifoldClass {
    Exceptional(ExceptionalKind),
    /// Keyed by the canonical decomposition.
    Composite(String),
    /// Keyed by the signature of the simplest triangulation found.
    Anonymous(String),
}

impl fmt::Display for OrbifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbifoldClass::Exceptional(k) => write!(f, "{k}"),
            OrbifoldClass::Composite(s) => write!(f, "sum:{s}"),
            OrbifoldClass::Anonymous(s) => write!(f, "anon:{s}"),
        }
    }
}

impl FromStr for OrbifoldClass {
    type Err = OrbError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(r) = s.strip_prefix("sum:") {
            Ok(OrbifoldClass::Composite(r.to_string()))
        } else if let Some(r) = s.strip_prefix("anon:") {
            Ok(OrbifoldClass::Anonymous(r.to_string()))
        } else {
            s.parse().map(OrbifoldClass::Exceptional)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CensusEntry {
    pub signature: String,
    pub weight: u64,
    pub class: OrbifoldClass,
    pub certification: Certification,
}

impl CensusEntry {
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.signature, self.weight, self.class, self.certification)
    }

    pub fn from_line(line: &str) -> Result<CensusEntry> {
        let f: Vec<&str> = line.split('\t').collect();
        let [sig, w, class, cert] = f[..] else {
            return Err(OrbError::Parse { line: 1, msg: format!("expected 4 columns, got {}", f.len()) });
        };
        Ok(CensusEntry {
            signature: sig.to_string(),
            weight: w
                .parse()
                .map_err(|_| OrbError::Parse { line: 1, msg: format!("bad weight {w:?}") })?,
            class: class.parse()?,
            certification: cert.parse()?,
        })
    }

    pub fn triangulation(&self) -> Result<OrbifoldTriangulation> {
        from_signature(&self.signature)
    }
}

fn leaf_name(leaf: &Leaf) -> String {
    match leaf {
        Leaf::Exceptional(k) => k.to_string(),
        Leaf::Signature(s) => s.clone(),
    }
}

fn kind_name(kind: &SumKind) -> String {
    match kind {
        SumKind::Ordinary => "o".into(),
        SumKind::Cyclic { p, knot_involved: true } => format!("c{p}k"),
        SumKind::Cyclic { p, knot_involved: false } => format!("c{p}"),
        SumKind::Vertex(p, q, r) => {
            let mut t = [p, q, r];
            t.sort_unstable();
            format!("v{}-{}-{}", t[0], t[1], t[2])
        }
    }
}

/// Sorted summands and sorted sum kinds; independent of the order the spheres were cut.
pub fn canonical_decomposition(expr: &SumExpression) -> String {
    let mut leaves: Vec<String> = expr.leaves.iter().map(leaf_name).collect();
    leaves.sort();
    let mut kinds: Vec<String> = expr.sums.iter().map(|(k, _, _)| kind_name(k)).collect();
    kinds.sort();
    format!("{}/{}", leaves.join(","), kinds.join(","))
}

/// Vertex links that are bad 2-orbifolds: a single cone point, or two of different orders.
fn has_bad_vertex_link(tri: &OrbifoldTriangulation) -> bool {
    let skel = tri.skeleton();
    let mut germs: Vec<Vec<u32>> = vec![Vec::new(); tri.vertex_class_count()];
    for c in tri.singular_classes() {
        for v in skel.edges[c].ends {
            germs[v].push(tri.order(c));
        }
    }
    germs.iter().any(|g| g.len() == 1 || (g.len() == 2 && g[0] != g[1]))
}

/// Whether some vertex normal surface of `tri` has a bad component. A truncated
/// enumeration only inspects the rays found.
fn has_bad_normal_suborbifold(tri: &OrbifoldTriangulation, max_rays: Option<usize>) -> Result<bool> {
    let sols = match vertex_solutions(tri, max_rays) {
        Ok(s) => s,
        Err(OrbError::BoundExceeded { partial }) => partial
            .into_iter()
            .map(NormalCoordinates::from_vec)
            .collect::<Result<Vec<_>>>()?,
        Err(e) => return Err(e),
    };
    for c in &sols {
        if reconstruct(tri, c)?.components.iter().any(|k| k.class == TwoOrbClass::Bad) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Certification, class and the split it came from.
#[derive(Clone, Debug)]
pub struct Examined {
    pub entry: CensusEntry,
    pub split: Option<SplitResult>,
}

/// Certifies `tri` and assigns its class.
pub fn examine(tri: &OrbifoldTriangulation, opts: &SplitOptions) -> Result<Examined> {
    let signature = iso_signature(tri);
    let weight = complexity_weight(tri).total();
    let anon = |t: &OrbifoldTriangulation| OrbifoldClass::Anonymous(iso_signature(t));
    let report = validate(tri);
    if !report.is_valid() {
        let only_vertices = report.failures().iter().all(|c| c.name == "singular-vertices");
        if only_vertices && has_bad_vertex_link(tri) {
            let entry = CensusEntry {
                signature,
                weight,
                class: anon(tri),
                certification: Certification::ContainsBad,
            };
            return Ok(Examined { entry, split: None });
        }
        report.into_result()?;
    }
    if has_bad_normal_suborbifold(tri, opts.max_rays)? {
        let entry = CensusEntry {
            signature,
            weight,
            class: anon(&simplest(tri, opts.budget)),
            certification: Certification::ContainsBad,
        };
        return Ok(Examined { entry, split: None });
    }
    let (certification, class, split) = match efficient_split_with(tri, opts) {
        Ok(r) => {
            if r.summands.len() > 1 {
                let key = canonical_decomposition(&r.expression);
                (Certification::Reducible(key.clone()), OrbifoldClass::Composite(key), Some(r))
            } else {
                let s = &r.summands[0];
                let class = match s.kind {
                    Some(k) => OrbifoldClass::Exceptional(k),
                    None => OrbifoldClass::Anonymous(s.signature.clone()),
                };
                let cert = if r.incomplete { Certification::Unknown } else { Certification::Irreducible };
                (cert, class, Some(r))
            }
        }
        Err(OrbError::Rejected(m)) if m.starts_with("bad") => {
            (Certification::ContainsBad, anon(&simplest(tri, opts.budget)), None)
        }
        Err(_) => (Certification::Unknown, anon(&simplest(tri, opts.budget)), None),
    };
    let entry = CensusEntry { signature, weight, class, certification };
    Ok(Examined { entry, split })
}

/// Irreducibility certificate of a triangulation under default budgets.
pub fn certify(tri: &OrbifoldTriangulation) -> Result<Certification> {
    Ok(examine(tri, &SplitOptions::default())?.entry.certification)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CensusBounds {
    pub max_tets: usize,
    pub max_order: u32,
    pub max_weight: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinComplexity {
    pub value: u64,
    /// Set when the search bounds or the classification may hide a smaller spine.
    pub upper_bound_only: bool,
}

/// Minimal complexity of a class from its census members. Exceptional classes take the
/// closed-form value; an irreducible anonymous class is exact when every triangulation
/// of smaller weight was enumerated.
pub fn min_complexity(class: &OrbifoldClass, members: &[&CensusEntry], bounds: &CensusBounds) -> Result<MinComplexity> {
    let min_weight = members
        .iter()
        .map(|e| e.weight)
        .min()
        .ok_or_else(|| OrbError::Invalid("empty class".into()))?;
    Ok(match class {
        OrbifoldClass::Exceptional(k) => MinComplexity {
            value: exceptional_complexity(*k)?,
            upper_bound_only: false,
        },
        OrbifoldClass::Anonymous(_) => {
            let certified = members.iter().all(|e| e.certification == Certification::Irreducible);
            MinComplexity {
                value: min_weight,
                upper_bound_only: !certified || min_weight > bounds.max_tets as u64 + 1,
            }
        }
        OrbifoldClass::Composite(_) => MinComplexity {
            value: min_weight,
            upper_bound_only: true,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSummary {
    pub class: OrbifoldClass,
    pub members: usize,
    pub min_weight: u64,
    /// Signature of a member of minimal weight.
    pub representative: String,
    pub complexity: MinComplexity,
    pub irreducible: bool,
}

#[derive(Clone, Debug)]
pub struct CensusTable {
    pub bounds: CensusBounds,
    /// Sorted by weight then signature.
    pub entries: Vec<CensusEntry>,
    /// Sorted by complexity then class.
    pub classes: Vec<ClassSummary>,
}

impl CensusTable {
    pub fn from_entries(bounds: CensusBounds, mut entries: Vec<CensusEntry>) -> Result<CensusTable> {
        entries.sort_by(|a, b| (a.weight, &a.signature).cmp(&(b.weight, &b.signature)));
        entries.dedup_by(|a, b| a.signature == b.signature);
        let mut groups: BTreeMap<&OrbifoldClass, Vec<&CensusEntry>> = BTreeMap::new();
        for e in &entries {
            groups.entry(&e.class).or_default().push(e);
        }
        let mut classes = Vec::new();
        for (class, members) in &groups {
            classes.push(ClassSummary {
                class: (*class).clone(),
                members: members.len(),
                min_weight: members[0].weight,
                representative: members[0].signature.clone(),
                complexity: min_complexity(class, members, &bounds)?,
                irreducible: members.iter().all(|e| e.certification == Certification::Irreducible),
            });
        }
        flag_lookalikes(&mut classes)?;
        classes.sort_by(|a, b| (a.complexity.value, &a.class).cmp(&(b.complexity.value, &b.class)));
        Ok(CensusTable { bounds, entries, classes })
    }

    pub fn class(&self, class: &OrbifoldClass) -> Option<&ClassSummary> {
        self.classes.iter().find(|c| &c.class == class)
    }

    /// Irreducible classes of the given complexity.
    pub fn irreducible_of_complexity(&self, c: u64) -> Vec<&ClassSummary> {
        self.classes
            .iter()
            .filter(|s| s.irreducible && s.complexity.value == c)
            .collect()
    }
}

/// Anonymous classes may be fragments of a class that simplification failed to merge.
/// Such a class keeps its value only if no class with the same invariants has smaller
/// weight (or is exceptional with weight at most its own).
fn flag_lookalikes(classes: &mut [ClassSummary]) -> Result<()> {
    let mut inv: Vec<Option<Invariants>> = Vec::with_capacity(classes.len());
    for c in classes.iter() {
        let relevant = c.irreducible && !matches!(c.class, OrbifoldClass::Composite(_));
        inv.push(if relevant { Some(invariants(&from_signature(&c.representative)?)?) } else { None });
    }
    for a in 0..classes.len() {
        if !matches!(classes[a].class, OrbifoldClass::Anonymous(_)) || classes[a].complexity.upper_bound_only {
            continue;
        }
        let shadowed = (0..classes.len()).any(|b| {
            b != a
                && inv[a].is_some()
                && inv[a] == inv[b]
                && match classes[b].class {
                    OrbifoldClass::Exceptional(_) => classes[b].min_weight <= classes[a].min_weight,
                    _ => classes[b].min_weight < classes[a].min_weight,
                }
        });
        if shadowed {
            classes[a].complexity.upper_bound_only = true;
        }
    }
    Ok(())
}
