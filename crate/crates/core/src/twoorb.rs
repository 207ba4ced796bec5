//! Closed orientable 2-orbifolds and their classification.

use crate::error::{OrbError, Result};
use num_rational::Ratio;

/// A closed orientable 2-orbifold: support genus plus cone orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoOrbifold {
    pub genus: u32,
    cone_orders: Vec<u32>,
}

impl TwoOrbifold {
    /// Cone orders are stored sorted; order 1 points are not cone points and are dropped.
    pub fn new(genus: u32, mut cone_orders: Vec<u32>) -> Self {
        cone_orders.retain(|&p| p != 1);
        cone_orders.sort_unstable();
        TwoOrbifold { genus, cone_orders }
    }

    pub fn sphere(cone_orders: Vec<u32>) -> Self {
        Self::new(0, cone_orders)
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoOrbClass {
    Bad,
    SphericalOrdinary,
    SphericalCyclic(u32),
    SphericalVertex(u32, u32, u32),
    Other,
}

impl TwoOrbClass {
    pub fn is_spherical(self) -> bool {
        matches!(
            self,
            TwoOrbClass::SphericalOrdinary | TwoOrbClass::SphericalCyclic(_) | TwoOrbClass::SphericalVertex(..)
        )
    }
}

/// The discal 3-orbifolds: ball, ball with a trivial arc, ball with a trivial Y-graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscalKind {
    Ordinary,
    Cyclic(u32),
    Vertex(u32, u32, u32),
}

/// Whether `(p,q,r)`, in any order, is `(2,2,n)` with n ≥ 2 or `(2,3,n)` with n ∈ {3,4,5}.
pub fn is_admissible_triple(p: u32, q: u32, r: u32) -> bool {
    let mut t = [p, q, r];
    t.sort_unstable();
    match t {
        [2, 2, n] => n >= 2,
        [2, 3, n] => (3..=5).contains(&n),
        _ => false,
    }
}

pub fn classify(s: &TwoOrbifold) -> Result<TwoOrbClass> {
    if let Some(&p) = s.cone_orders.iter().find(|&&p| p < 2) {
        return Err(OrbError::InvalidOrder(p));
    }
    if s.genus > 0 {
        return Ok(TwoOrbClass::Other);
    }
    Ok(match s.cone_orders[..] {
        [] => TwoOrbClass::SphericalOrdinary,
        [_] => TwoOrbClass::Bad,
        [p, q] if p == q => TwoOrbClass::SphericalCyclic(p),
        [_, _] => TwoOrbClass::Bad,
        [p, q, r] if is_admissible_triple(p, q, r) => TwoOrbClass::SphericalVertex(p, q, r),
        _ => TwoOrbClass::Other,
    })
}

/// `2 - 2g - Σ(1 - 1/p)`.
pub fn orb_euler(s: &TwoOrbifold) -> Ratio<i64> {
    let mut chi = Ratio::from_integer(2 - 2 * s.genus as i64);
    for &p in &s.cone_orders {
        chi -= Ratio::new(p as i64 - 1, p as i64);
    }
    chi
}

pub fn boundary_of_discal(kind: DiscalKind) -> Result<TwoOrbifold> {
    match kind {
        DiscalKind::Ordinary => Ok(TwoOrbifold::sphere(vec![])),
        DiscalKind::Cyclic(p) if p >= 2 => Ok(TwoOrbifold::sphere(vec![p, p])),
        DiscalKind::Cyclic(p) => Err(OrbError::InvalidOrder(p)),
        DiscalKind::Vertex(p, q, r) if is_admissible_triple(p, q, r) => Ok(TwoOrbifold::sphere(vec![p, q, r])),
        DiscalKind::Vertex(p, q, r) => Err(OrbError::InvalidOrders(p, q, r)),
    }
}

/// The discal kind a spherical class bounds.
pub fn discal_of(class: TwoOrbClass) -> Option<DiscalKind> {
    match class {
        TwoOrbClass::SphericalOrdinary => Some(DiscalKind::Ordinary),
        TwoOrbClass::SphericalCyclic(p) => Some(DiscalKind::Cyclic(p)),
        TwoOrbClass::SphericalVertex(p, q, r) => Some(DiscalKind::Vertex(p, q, r)),
        _ => None,
    }
}
