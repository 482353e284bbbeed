use serde::{Deserialize, Serialize};

use super::{check_shape, symmetric_ideal, t_ring, xt_ring};
use crate::error::{Error, Result};
use crate::groebner::{dimension_and_height, eliminate, ideal_equal, saturate, IdealHandle};
use crate::matforms::{hilbert_burch_generators, LinearMatrix};
use crate::poly::Poly;
use crate::ring::{MonomialOrder, PolyRing};

#[derive(Clone, Debug)]
pub struct ReesData {
    pub ideal: IdealHandle,
    /// Row index of the maximal minor used for the saturation.
    pub saturated_by: usize,
    /// Result of saturating by a second maximal minor and comparing, when
    /// a second nonzero minor exists.
    pub cross_check: Option<bool>,
    /// Krull dimension of `k[x, y, z, t] / J`.
    pub dim: i64,
}

/// Nonzero signed maximal minors in order of increasing length, ties by
/// row index.
fn saturation_candidates(gens: &[Poly]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    idx.sort_by_key(|&i| (gens[i].len(), i));
    idx
}

/// Saturation of `I` by `f` in `k[x, y, z, t]`, with `f` in `k[x, y, z]`.
/// `f` is split into its factors that are variables, which are handled
/// first; the remaining cofactor goes through the general route.
fn saturate_by_minor(sym: &IdealHandle, f: &Poly) -> Result<IdealHandle> {
    let big = sym.ring();
    let lifted = f.to_ring(big)?;
    let mut cur = sym.clone();
    let mut rest = lifted;
    for v in 0..3 {
        let x = Poly::var(big, v);
        let mut hit = false;
        while let Some(q) = rest.div_exact(&x)? {
            rest = q;
            hit = true;
        }
        if hit {
            cur = saturate(&cur, &x)?;
        }
    }
    if !rest.is_constant() {
        cur = saturate(&cur, &rest)?;
    }
    Ok(cur)
}

/// `J = I_1((t) · φ) : Δ^∞` for a nonzero maximal minor `Δ`.
pub fn rees_ideal(phi: &LinearMatrix) -> Result<ReesData> {
    check_shape(phi)?;
    let gens = hilbert_burch_generators(phi)?;
    let order = saturation_candidates(&gens);
    let Some(&first) = order.first() else {
        return Err(Error::AllZero);
    };
    let sym = symmetric_ideal(phi)?;
    let ideal = saturate_by_minor(&sym, &gens[first])?;
    let cross_check = match order.get(1) {
        Some(&second) => Some(ideal_equal(&ideal, &saturate_by_minor(&sym, &gens[second])?)?),
        None => None,
    };
    let dim = dimension_and_height(&ideal).0;
    Ok(ReesData {
        ideal,
        saturated_by: first,
        cross_check,
        dim,
    })
}

/// The ideal of relations among the signed maximal minors, in
/// `k[t1..tn]`: eliminate `x, y, z` from `(t_i - f_i)` with `t_i` weighted
/// by the degree of the minors.
pub fn fiber_ideal(phi: &LinearMatrix) -> Result<IdealHandle> {
    let n = check_shape(phi)?;
    let gens = hilbert_burch_generators(phi)?;
    let field = phi.ring().field();
    let d = (n - 1) as u32;
    let names = xt_ring(n, field).vars().to_vec();
    let mut weights = vec![1; 3];
    weights.extend(std::iter::repeat_n(d, n));
    let big = PolyRing::new(&names, MonomialOrder::Degrevlex, field)?.with_weights(weights);
    let mut rels = Vec::with_capacity(n);
    for (i, f) in gens.iter().enumerate() {
        rels.push(&Poly::var(&big, 3 + i) - &f.to_ring(&big)?);
    }
    let elim = eliminate(&IdealHandle::new(&big, rels)?, &[0, 1, 2])?;
    // all remaining weights are equal, so the cached basis is also the
    // reduced basis for the standard grading
    let tr = t_ring(n, field);
    let gb = elim.gens().iter().map(|g| g.to_ring(&tr)).collect::<Result<Vec<_>>>()?;
    Ok(IdealHandle::with_basis(&tr, gb))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberTypeCheck {
    pub fiber_type: bool,
    /// Normal forms of the Rees generators modulo `(I_1((t) · φ), Q)` that
    /// are not zero.
    pub nonzero_remainders: Vec<String>,
}

/// Whether `J = (I_1((t) · φ), Q)`.
pub fn fiber_type_check(phi: &LinearMatrix, fiber: &IdealHandle, rees: &IdealHandle) -> Result<FiberTypeCheck> {
    let sym = symmetric_ideal(phi)?;
    let big = sym.ring().clone();
    let q = fiber.to_ring(&big)?;
    let candidate = sym.sum(&q)?;
    let rees = rees.to_ring(&big)?;
    let mut nonzero = Vec::new();
    for g in rees.gb() {
        let r = candidate.normal_form(g)?;
        if !r.is_zero() {
            nonzero.push(r.to_string());
        }
    }
    // candidate ⊆ J always holds; confirm it rather than assume it
    let fiber_type = nonzero.is_empty() && ideal_equal(&candidate, &rees)?;
    Ok(FiberTypeCheck {
        fiber_type,
        nonzero_remainders: nonzero,
    })
}
