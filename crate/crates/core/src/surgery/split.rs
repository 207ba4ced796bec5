//! Efficient splitting: ordinary spheres first, then cyclic, then vertex.

use super::{Leaf, SumExpression, SumKind};
use crate::error::{OrbError, Result};
use crate::normal::essential::{analyse_sphere, Essentiality};
use crate::normal::{reconstruct, vertex_solutions, NormalCoordinates};
use crate::orbtri::{iso_signature, OrbifoldTriangulation};
use crate::recognize::{recognize_simplified, simplest};
use crate::simplify::DEFAULT_BUDGET;
use crate::spine::ExceptionalKind;
use crate::twoorb::{DiscalKind, TwoOrbClass};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug)]
pub struct SplitOptions {
    /// Seed 0 breaks weight ties lexicographically; other seeds shuffle the tied spheres.
    pub seed: u64,
    pub budget: usize,
    /// Cap on intermediate rays during vertex enumeration.
    pub max_rays: Option<usize>,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions {
            seed: 0,
            budget: DEFAULT_BUDGET,
            max_rays: Some(50_000),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    /// Simplified capped piece.
    pub tri: OrbifoldTriangulation,
    pub signature: String,
    pub kind: Option<ExceptionalKind>,
}

impl Summand {
    fn new(tri: OrbifoldTriangulation) -> Result<Summand> {
        let kind = recognize_simplified(&tri)?;
        Ok(Summand {
            signature: iso_signature(&tri),
            tri,
            kind,
        })
    }

    pub fn leaf(&self) -> Leaf {
        match self.kind {
            Some(k) => Leaf::Exceptional(k),
            None => Leaf::Signature(self.signature.clone()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitResult {
    /// Class and weight of each splitting sphere, in the order cut.
    pub system: Vec<(TwoOrbClass, u64)>,
    pub summands: Vec<Summand>,
    pub expression: SumExpression,
    /// Set when some sphere could not be classified within budget, or enumeration
    /// was cut short; the decomposition is then partial.
    pub incomplete: bool,
}

impl SplitResult {
    pub fn nu(&self) -> BTreeMap<u32, usize> {
        self.expression.nu()
    }

    /// ν is an invariant of the orbifold only when no vertex sums occur.
    pub fn nu_is_canonical(&self) -> bool {
        !self.expression.has_vertex_sums()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Stage {
    Ordinary,
    Cyclic,
    Vertex,
}

fn in_stage(class: TwoOrbClass, stage: Stage) -> bool {
    matches!(
        (class, stage),
        (TwoOrbClass::SphericalOrdinary, Stage::Ordinary)
            | (TwoOrbClass::SphericalCyclic(_), Stage::Cyclic)
            | (TwoOrbClass::SphericalVertex(..), Stage::Vertex)
    )
}

/// Non-link spheres of one stage, sorted by weight then coordinates. Rejects bad and
/// non-separating spheres.
fn candidates(
    tri: &OrbifoldTriangulation,
    stage: Stage,
    opts: &SplitOptions,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<(u64, NormalCoordinates, TwoOrbClass)>, bool)> {
    let (sols, truncated) = match vertex_solutions(tri, opts.max_rays) {
        Ok(s) => (s, false),
        Err(OrbError::BoundExceeded { partial }) => (
            partial
                .into_iter()
                .map(NormalCoordinates::from_vec)
                .collect::<Result<Vec<_>>>()?,
            true,
        ),
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for c in sols {
        let surf = reconstruct(tri, &c)?;
        for comp in &surf.components {
            if comp.class == TwoOrbClass::Bad {
                return Err(OrbError::Rejected("bad 2-suborbifold".into()));
            }
            if comp.is_sphere() && comp.class.is_spherical() && !comp.separating {
                return Err(OrbError::Rejected("non-separating spherical 2-suborbifold".into()));
            }
        }
        let [comp] = &surf.components[..] else { continue };
        // the boundary of a regular neighbourhood of a projective plane is a sphere
        let c = if !comp.two_sided && comp.euler == 1 { c.scale(2) } else { c };
        let surf = reconstruct(tri, &c)?;
        let [comp] = &surf.components[..] else { continue };
        if comp.is_sphere() && comp.vertex_link.is_none() && in_stage(comp.class, stage) {
            out.push((c.weight(tri), c.clone(), comp.class));
        }
    }
    out.sort_by(|a, b| (a.0, a.1.as_slice()).cmp(&(b.0, b.1.as_slice())));
    out.dedup_by(|a, b| a.1 == b.1);
    if opts.seed != 0 {
        let mut i = 0;
        while i < out.len() {
            let j = (i..out.len()).find(|&j| out[j].0 != out[i].0).unwrap_or(out.len());
            out[i..j].shuffle(rng);
            i = j;
        }
    }
    Ok((out, truncated))
}

pub fn efficient_split(tri: &OrbifoldTriangulation) -> Result<SplitResult> {
    efficient_split_with(tri, &SplitOptions::default())
}

pub fn efficient_split_with(tri: &OrbifoldTriangulation, opts: &SplitOptions) -> Result<SplitResult> {
    crate::orbtri::validate(tri).into_result()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pieces = vec![simplest(tri, opts.budget)];
    let mut system = Vec::new();
    let mut sums = Vec::new();
    let mut incomplete = false;
    for stage in [Stage::Ordinary, Stage::Cyclic, Stage::Vertex] {
        let mut queue: Vec<usize> = (0..pieces.len()).collect();
        while let Some(i) = queue.pop() {
            let (cands, truncated) = candidates(&pieces[i], stage, opts, &mut rng)?;
            incomplete |= truncated;
            let mut unknown = false;
            let mut cut = None;
            for (w, c, class) in cands {
                let a = analyse_sphere(&pieces[i], &c, opts.budget)?;
                match a.verdict {
                    Essentiality::Essential => {
                        cut = Some((w, class, a));
                        break;
                    }
                    Essentiality::Unknown => unknown = true,
                    Essentiality::Inessential => {}
                }
            }
            let Some((w, class, a)) = cut else {
                incomplete |= unknown;
                continue;
            };
            let kind = match a.kind {
                DiscalKind::Ordinary => SumKind::Ordinary,
                DiscalKind::Cyclic(p) => SumKind::Cyclic {
                    p,
                    knot_involved: a.sides.iter().any(|s| s.knot),
                },
                DiscalKind::Vertex(p, q, r) => SumKind::Vertex(p, q, r),
            };
            let mut sides = a.sides.into_iter();
            let (first, second) = match (sides.next(), sides.next()) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(OrbError::Invalid("cut did not produce two pieces".into())),
            };
            pieces[i] = first.simplified;
            pieces.push(second.simplified);
            let j = pieces.len() - 1;
            system.push((class, w));
            sums.push((kind, i, j));
            queue.push(i);
            queue.push(j);
        }
    }
    let summands = pieces.into_iter().map(Summand::new).collect::<Result<Vec<_>>>()?;
    let expression = SumExpression {
        leaves: summands.iter().map(Summand::leaf).collect(),
        sums,
    };
    Ok(SplitResult {
        system,
        summands,
        expression,
        incomplete,
    })
}
