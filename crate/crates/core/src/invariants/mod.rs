//! Invariants of a linear `n x (n-1)` matrix over `k[x, y, z]` and of the
//! ideal of its maximal minors: heights of minor ideals and the chaos
//! invariant, the Jacobian dual, Rees and fiber presentation ideals,
//! birationality data and the reduction number.

mod birational;
mod chaos;
mod dual;
mod rees;
mod syzygy;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matforms::LinearMatrix;
use crate::ring::{MonomialOrder, PolyRing};

pub use birational::{
    birationality_and_inverse, depth_zero_square_check, reduction_number_report, BirationalityData,
    DepthZeroSquare, ReductionReport,
};
pub use chaos::{chaos_invariant, heights, local_profile, ChaosProfile, LocalData, LocalProfile, UniversalPrime};
pub use dual::{canonical_form, jacobian_dual, jacobian_dual_canonical, symmetric_ideal, CanonicalForm, JacobianDual};
pub use rees::{fiber_ideal, fiber_type_check, rees_ideal, FiberTypeCheck, ReesData};
pub use syzygy::{linear_syzygy_matrix, SyzygyOutcome};

/// `k[t1, ..., tn]` with degrevlex.
pub fn t_ring(n: usize, field: FieldSpec) -> Arc<PolyRing> {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    PolyRing::new(&names, MonomialOrder::Degrevlex, field).expect("t ring")
}

/// `k[x, y, z, t1, ..., tn]` with degrevlex.
pub fn xt_ring(n: usize, field: FieldSpec) -> Arc<PolyRing> {
    let mut names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    names.extend((1..=n).map(|i| format!("t{i}")));
    PolyRing::new(&names, MonomialOrder::Degrevlex, field).expect("xt ring")
}

/// Checks that `φ` is an `n x (n-1)` matrix over a ring of three variables.
pub(crate) fn check_shape(phi: &LinearMatrix) -> Result<usize> {
    let n = phi.nrows();
    if phi.ring().nvars() != 3 {
        return Err(Error::ShapeMismatch("matrix must be over k[x, y, z]".into()));
    }
    if n < 3 || phi.ncols() + 1 != n {
        return Err(Error::ShapeMismatch(format!(
            "expected n x (n-1) with n >= 3, got {} x {}",
            n,
            phi.ncols()
        )));
    }
    Ok(n)
}

#[cfg(test)]
mod tests;
