//! Cohen–Macaulay test by Artinian reduction.

use serde::{Deserialize, Serialize};

use super::{hilbert_series, IdealHandle};
use crate::error::{Error, Result};
use crate::linalg::linear_coeff_matrix;
use crate::poly::Poly;
use crate::random::random_linear_forms;
use crate::ring::{MonomialOrder, PolyRing};

const MAX_ATTEMPTS: u64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CmVerdict {
    Cm,
    NotCm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmEvidence {
    pub verdict: CmVerdict,
    /// The system of parameters that was used.
    pub parameters: Vec<String>,
    /// `dim_k R/(I, θ)`.
    pub length: u64,
    pub multiplicity: i64,
    pub seed_used: u64,
    pub attempts: u64,
}

/// Decides whether `R/I` is Cohen–Macaulay: for a system of parameters `θ`
/// of linear forms, `R/I` is CM iff `length R/(I, θ) = e(R/I)`.
///
/// `θ` is drawn at random from `seed`; a draw that is not a system of
/// parameters is retried with the next seed.
pub fn artinian_cm_test(ideal: &IdealHandle, seed: u64) -> Result<CmEvidence> {
    let hs = hilbert_series(ideal)?;
    let d = hs.dim;
    if d < 1 {
        return Err(Error::OutOfRange(format!("CM test needs dim >= 1, got {d}")));
    }
    let ring = ideal.ring();
    let d = d as usize;
    for attempt in 0..MAX_ATTEMPTS {
        let s = seed.wrapping_add(attempt);
        let theta = random_linear_forms(ring, d, s);
        let Some(reduced) = reduce_by_linear_forms(ideal, &theta)? else {
            continue;
        };
        let hr = hilbert_series(&reduced)?;
        if hr.dim != 0 {
            continue;
        }
        let length = hr.multiplicity as u64;
        let verdict = if length as i64 == hs.multiplicity {
            CmVerdict::Cm
        } else {
            CmVerdict::NotCm
        };
        return Ok(CmEvidence {
            verdict,
            parameters: theta.iter().map(|t| t.to_string()).collect(),
            length,
            multiplicity: hs.multiplicity,
            seed_used: s,
            attempts: attempt + 1,
        });
    }
    Err(Error::NoSystemOfParameters(MAX_ATTEMPTS as usize))
}

/// Image of `I` in `R/(θ)`, realized as a polynomial ring in the non-pivot
/// variables. `None` when the forms are linearly dependent.
pub(crate) fn reduce_by_linear_forms(ideal: &IdealHandle, theta: &[Poly]) -> Result<Option<IdealHandle>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let field = ring.field();
    if theta.is_empty() {
        return Ok(Some(ideal.clone()));
    }
    let (rref, pivots) = linear_coeff_matrix(theta)?.rref();
    if pivots.len() < theta.len() {
        return Ok(None);
    }
    let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let names: Vec<&str> = free.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let target = PolyRing::new(&names, MonomialOrder::Degrevlex, field)?;
    let mut images: Vec<Poly> = vec![Poly::zero(&target); n];
    for (pos, &v) in free.iter().enumerate() {
        images[v] = Poly::var(&target, pos);
    }
    for (r, &p) in pivots.iter().enumerate() {
        // x_p = -sum_{free j} rref[r][j] x_j
        let mut e = Poly::zero(&target);
        for (pos, &j) in free.iter().enumerate() {
            let c = rref.get(r, j);
            if !c.is_zero() {
                e = e.add_scaled(&Poly::var(&target, pos), &field.neg(c), &crate::ring::Mono::ONE);
            }
        }
        images[p] = e;
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(IdealHandle::new(&target, gens)?))
}
