//! Complexity of closed orientable 3-orbifolds computed from decorated
//! triangulations: dual special spines, normal spherical suborbifolds,
//! connected-sum surgery and a small census.

pub mod census;
pub mod error;
pub mod homology;
pub mod library;
pub mod moves;
pub mod normal;
pub mod orbtri;
pub mod simplify;
pub mod perm;
pub mod recognize;
pub mod spine;
pub mod surgery;
pub mod twoorb;
pub mod util;

pub use error::{OrbError, Result};
