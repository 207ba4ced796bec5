//! Connected sums, cutting and capping, splitting, and the additivity calculus.

mod cut;
mod split;
mod sum;

pub use cut::{boundary_components, cap, cut_along, BoundaryComponent};
pub use split::{efficient_split, efficient_split_with, SplitOptions, SplitResult, Summand};
pub use sum::{cyclic_sum, on_knot, ordinary_sum, vertex_sum, vertex_triple};

use crate::error::{OrbError, Result};
use crate::spine::ExceptionalKind;
use num_rational::Ratio;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leaf {
    Signature(String),
    Exceptional(ExceptionalKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumKind {
    Ordinary,
    /// `knot_involved` is set when one of the spliced components is a circle.
    Cyclic { p: u32, knot_involved: bool },
    Vertex(u32, u32, u32),
}

/// Leaves combined by a sequence of sums; operands index into `leaves`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SumExpression {
    pub leaves: Vec<Leaf>,
    pub sums: Vec<(SumKind, usize, usize)>,
}

impl SumExpression {
    pub fn has_vertex_sums(&self) -> bool {
        self.sums.iter().any(|(k, _, _)| matches!(k, SumKind::Vertex(..)))
    }

    /// Number of `p`-cyclic sums involving a knot, by `p`.
    pub fn nu(&self) -> std::collections::BTreeMap<u32, usize> {
        let mut out = std::collections::BTreeMap::new();
        for (k, _, _) in &self.sums {
            if let SumKind::Cyclic { p, knot_involved: true } = k {
                *out.entry(*p).or_insert(0) += 1;
            }
        }
        out
    }
}

fn check_lengths(expr: &SumExpression, complexities: &[u64]) -> Result<()> {
    if expr.leaves.is_empty() || complexities.len() != expr.leaves.len() {
        return Err(OrbError::Invalid(format!(
            "{} complexities for {} leaves",
            complexities.len(),
            expr.leaves.len()
        )));
    }
    Ok(())
}

/// `Σ c(X_i) − Σ_p ν(p)(p−1)`; defined only without vertex sums.
pub fn additivity_predict(expr: &SumExpression, complexities: &[u64]) -> Result<u64> {
    check_lengths(expr, complexities)?;
    if expr.has_vertex_sums() {
        return Err(OrbError::UseEstimate);
    }
    let total: u64 = complexities.iter().sum();
    let drop: u64 = expr.nu().iter().map(|(&p, &n)| (p as u64 - 1) * n as u64).sum();
    total
        .checked_sub(drop)
        .ok_or_else(|| OrbError::Invalid("cyclic corrections exceed the total".into()))
}

/// Lower and upper bounds `Σc / 4^(n−1)` and `6^(n−1) · Σc` for `n` leaves.
pub fn estimate_bounds(expr: &SumExpression, complexities: &[u64]) -> Result<(Ratio<i128>, Ratio<i128>)> {
    check_lengths(expr, complexities)?;
    let n = expr.leaves.len() as u32;
    let overflow = || OrbError::Invalid("bounds overflow".into());
    let total: i128 = complexities.iter().map(|&c| c as i128).sum();
    let four = 4i128.checked_pow(n - 1).ok_or_else(overflow)?;
    let six = 6i128.checked_pow(n - 1).ok_or_else(overflow)?;
    Ok((Ratio::new(total, four), Ratio::from_integer(total.checked_mul(six).ok_or_else(overflow)?)))
}

#[cfg(test)]
mod tests;
