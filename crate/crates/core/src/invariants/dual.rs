use super::{check_shape, t_ring, xt_ring};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::matforms::{
    canonicalize_chaos_form, linear_prime_of_point, minors_ideal, rank_at_point, rational_points, row_times,
    ConjugationAction, LinearMatrix, ProjectivePoint,
};
use crate::poly::Poly;

/// `B` with `(t) · φ = (x y z) · B`, and the block `B'` when `φ` is in
/// canonical form.
#[derive(Clone, Debug)]
pub struct JacobianDual {
    pub b: LinearMatrix,
    pub canonical_u: Option<usize>,
    /// Rows 2 and 3 of `B`, columns `u+1 ..`.
    pub b_prime: Option<LinearMatrix>,
    /// The action taking the input matrix to the canonical one.
    pub action: Option<ConjugationAction>,
}

/// `φ` conjugated so that it reduces to `diag(I_u, 0) · x` modulo `(y, z)`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub phi: LinearMatrix,
    pub action: ConjugationAction,
    pub u: usize,
    /// The point of rank `u` that was moved to `(1:0:0)`.
    pub point: ProjectivePoint,
    pub prime: Vec<Poly>,
}

fn dual_matrix(phi: &LinearMatrix) -> Result<LinearMatrix> {
    let n = phi.nrows();
    let tr = t_ring(n, phi.ring().field());
    let rows = (0..3)
        .map(|v| {
            (0..phi.ncols())
                .map(|j| {
                    let coeffs: Vec<_> = (0..n).map(|i| phi.get(i, j).linear_coeff(v)).collect();
                    Poly::linear(&tr, &coeffs)
                })
                .collect()
        })
        .collect();
    LinearMatrix::new(&tr, rows)
}

/// Checks `(t) · φ = (x y z) · B` in `k[x, y, z, t]`.
pub fn duality_holds(phi: &LinearMatrix, b: &LinearMatrix) -> Result<bool> {
    let n = phi.nrows();
    let big = xt_ring(n, phi.ring().field());
    let t: Vec<Poly> = (0..n).map(|i| Poly::var(&big, 3 + i)).collect();
    let x: Vec<Poly> = (0..3).map(|v| Poly::var(&big, v)).collect();
    Ok(row_times(&t, phi)? == row_times(&x, b)?)
}

pub fn jacobian_dual(phi: &LinearMatrix) -> Result<JacobianDual> {
    check_shape(phi)?;
    let b = dual_matrix(phi)?;
    if !duality_holds(phi, &b)? {
        return Err(Error::Internal("Jacobian duality identity failed".into()));
    }
    Ok(JacobianDual {
        b,
        canonical_u: None,
        b_prime: None,
        action: None,
    })
}

pub fn jacobian_dual_canonical(canon: &CanonicalForm) -> Result<JacobianDual> {
    let mut jd = jacobian_dual(&canon.phi)?;
    let u = canon.u;
    let cols: Vec<usize> = (u..canon.phi.ncols()).collect();
    if cols.is_empty() {
        return Err(Error::OutOfRange(format!("u = {u} leaves no columns for B'")));
    }
    jd.b_prime = Some(jd.b.submatrix(&[1, 2], &cols)?);
    jd.canonical_u = Some(u);
    jd.action = Some(canon.action.clone());
    Ok(jd)
}

/// Canonical form at the first rational point of `V(I_(u+1)(φ))`, or `None`
/// when that scheme has no rational point.
pub fn canonical_form(phi: &LinearMatrix, u: usize) -> Result<Option<CanonicalForm>> {
    check_shape(phi)?;
    let points = rational_points(&minors_ideal(phi, u + 1)?)?;
    for point in points {
        if rank_at_point(phi, point.coords())? != u {
            continue;
        }
        let prime = linear_prime_of_point(phi.ring(), &point)?;
        let (canon, action) = canonicalize_chaos_form(phi, &prime, u)?;
        return Ok(Some(CanonicalForm {
            phi: canon,
            action,
            u,
            point,
            prime,
        }));
    }
    Ok(None)
}

/// `I_1((t) · φ)` in `k[x, y, z, t1..tn]`.
pub fn symmetric_ideal(phi: &LinearMatrix) -> Result<IdealHandle> {
    let n = check_shape(phi)?;
    let big = xt_ring(n, phi.ring().field());
    let t: Vec<Poly> = (0..n).map(|i| Poly::var(&big, 3 + i)).collect();
    IdealHandle::new(&big, row_times(&t, phi)?)
}
