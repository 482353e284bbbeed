//! Conjugation to the block shape used for the Jacobian dual: after moving
//! a point `P` of rank `u` to `(1:0:0)`, the matrix reduces modulo `(y, z)`
//! to `diag(I_u, 0)`.

use super::points::point_of_linear_prime;
use super::{conjugate, rank_at_point, ConjugationAction, LinearMatrix};
use crate::error::{Error, Result};
use crate::linalg::ScalarMatrix;
use crate::poly::Poly;

/// True when the coefficient matrix of the first variable is
/// `diag(I_u, 0)`, i.e. `M ≡ diag(I_u, 0) · x` modulo the other variables.
pub fn is_chaos_canonical(m: &LinearMatrix, u: usize) -> bool {
    let c = m.coefficient_matrix(0);
    (0..m.nrows()).all(|i| {
        (0..m.ncols()).all(|j| {
            let want = (i == j && i < u) as i64;
            *c.get(i, j) == m.ring().field().from_int(want)
        })
    })
}

/// Canonical form of `φ` with respect to the linear prime `p` (two
/// independent linear forms in `k[x, y, z]`) whose point has rank `u`.
pub fn canonicalize_chaos_form(
    phi: &LinearMatrix,
    p: &[Poly],
    u: usize,
) -> Result<(LinearMatrix, ConjugationAction)> {
    let ring = phi.ring();
    if ring.nvars() != 3 || p.len() != 2 {
        return Err(Error::NotRationalLinear);
    }
    let field = ring.field();
    let point = point_of_linear_prime(p)?;
    let found = rank_at_point(phi, point.coords())?;
    if found != u {
        return Err(Error::RankMismatch { expected: u, found });
    }
    // coordinate change with first column P, so that x ↦ P x + ...
    let pc = point.coords().to_vec();
    let mut a = None;
    for (i, j) in [(1, 2), (0, 2), (0, 1)] {
        let mut m = ScalarMatrix::zeros(field, 3, 3);
        for (r, c) in pc.iter().enumerate() {
            m.set(r, 0, c.clone());
        }
        m.set(i, 1, field.from_int(1));
        m.set(j, 2, field.from_int(1));
        if m.is_invertible() {
            a = Some(m);
            break;
        }
    }
    let a = a.expect("a nonzero point completes to a basis");
    let n = phi.nrows();
    let c = phi.ncols();
    let moved = phi.substitute_linear(&a)?;
    let a0 = moved.coefficient_matrix(0);
    debug_assert_eq!(a0, phi.evaluate(point.coords()));

    // row operations: [A0 | I] -> [E | R] with R A0 = E in echelon form
    let mut aug = ScalarMatrix::zeros(field, n, c + n);
    for i in 0..n {
        for j in 0..c {
            aug.set(i, j, a0.get(i, j).clone());
        }
        aug.set(i, c + i, field.from_int(1));
    }
    let (reduced, pivots_all) = aug.rref();
    let pivots: Vec<usize> = pivots_all.into_iter().filter(|&j| j < c).collect();
    debug_assert_eq!(pivots.len(), u);
    let mut row_op = ScalarMatrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            row_op.set(i, j, reduced.get(i, c + j).clone());
        }
    }
    // column operations: pivot columns first, free columns cleared
    let free: Vec<usize> = (0..c).filter(|j| !pivots.contains(j)).collect();
    let mut col_op = ScalarMatrix::zeros(field, c, c);
    for (k, &pc) in pivots.iter().enumerate() {
        col_op.set(pc, k, field.from_int(1));
    }
    for (k, &fc) in free.iter().enumerate() {
        let col = u + k;
        col_op.set(fc, col, field.from_int(1));
        for (r, &pc) in pivots.iter().enumerate() {
            let e = reduced.get(r, fc);
            if !e.is_zero() {
                col_op.set(pc, col, field.neg(e));
            }
        }
    }
    let action = ConjugationAction {
        coord_change: a,
        row_op,
        col_op,
    };
    let canonical = conjugate(phi, &action)?;
    debug_assert!(is_chaos_canonical(&canonical, u));
    Ok((canonical, action))
}
