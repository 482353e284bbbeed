use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{artinian_cm_test, hilbert_series, intersect, saturate, CmEvidence, CmVerdict, IdealHandle};
use crate::matforms::{minor_at, minors, LinearMatrix};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BirationalityData {
    /// Largest `r` with `I_r(B) ⊄ Q`.
    pub rank_mod_fiber: usize,
    /// Columns `(j, k)` of `B` (rows of `Bᵗ`) forming the slice.
    pub slice: Option<(usize, usize)>,
    /// `g_1, g_2, g_3`: signed 2-minors of the slice, so that
    /// `g_i(f) = c · (x, y, z)_i`.
    pub inverse_quadrics: Option<Vec<String>>,
    pub common_factor: Option<String>,
    /// Whether `g_1(f)/x = g_2(f)/y = g_3(f)/z` holds exactly.
    pub inverse_identity: bool,
}

fn rank_modulo(b: &LinearMatrix, q: &IdealHandle) -> Result<usize> {
    let mut rank = 0;
    for r in 1..=b.nrows().min(b.ncols()) {
        let mut escapes = false;
        for m in minors(b, r)? {
            if !q.contains(&m.to_ring(q.ring())?) {
                escapes = true;
                break;
            }
        }
        if !escapes {
            break;
        }
        rank = r;
    }
    Ok(rank)
}

/// Rank of the Jacobian dual `B` modulo the fiber ideal `Q` and, when it is
/// 2, the quadrics defining the inverse of the map given by `gens`.
pub fn birationality_and_inverse(b: &LinearMatrix, gens: &[Poly], q: &IdealHandle) -> Result<BirationalityData> {
    let rank = rank_modulo(b, q)?;
    let mut data = BirationalityData {
        rank_mod_fiber: rank,
        slice: None,
        inverse_quadrics: None,
        common_factor: None,
        inverse_identity: false,
    };
    if rank != 2 {
        return Ok(data);
    }
    let cols = b.ncols();
    let tr = q.ring();
    let minus = tr.field().from_int(-1);
    for j in 0..cols {
        for k in j + 1..cols {
            let g = [
                minor_at(b, &[1, 2], &[j, k])?,
                minor_at(b, &[0, 2], &[j, k])?.scale(&minus),
                minor_at(b, &[0, 1], &[j, k])?,
            ];
            let mut escapes = false;
            for gi in &g {
                escapes |= !q.contains(&gi.to_ring(tr)?);
            }
            if !escapes {
                continue;
            }
            let images: Vec<Poly> = g.iter().map(|gi| gi.substitute(gens)).collect::<Result<_>>()?;
            let r = gens[0].ring();
            let common = images[0].div_exact(&Poly::var(r, 0))?;
            let holds = match &common {
                Some(c) if !c.is_zero() => (1..3).all(|v| images[v] == c * &Poly::var(r, v)),
                _ => false,
            };
            data.slice = Some((j, k));
            data.inverse_quadrics = Some(g.iter().map(|p| p.to_string()).collect());
            data.common_factor = common.map(|c| c.to_string());
            data.inverse_identity = holds;
            return Ok(data);
        }
    }
    Err(Error::NoRankTwoSlice)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthZeroSquare {
    /// `I^2 : m^∞ ≠ I^2`.
    pub holds: bool,
    /// An element of the saturation outside `I^2`.
    pub witness: Option<String>,
}

/// Compares `I^2` with its saturation by `m = (x, y, z)`, computed as the
/// intersection of the saturations by the three variables.
pub fn depth_zero_square_check(ideal: &IdealHandle) -> Result<DepthZeroSquare> {
    let sq = ideal.power(2);
    let ring = ideal.ring();
    let mut sat: Option<IdealHandle> = None;
    for v in 0..ring.nvars() {
        let s = saturate(&sq, &Poly::var(ring, v))?;
        sat = Some(match sat {
            None => s,
            Some(acc) => intersect(&acc, &s)?,
        });
    }
    let sat = sat.expect("at least one variable");
    let witness = sat.gb().iter().find(|g| !sq.contains(g)).map(|g| g.to_string());
    Ok(DepthZeroSquare {
        holds: witness.is_some(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    /// `dim k[t]/Q`.
    pub analytic_spread: i64,
    pub fiber_cm: CmVerdict,
    pub cm_evidence: CmEvidence,
    pub h_degree: usize,
    /// Degree of the h-polynomial, reported only for a CM fiber.
    pub reduction_number: Option<usize>,
    pub multiplicity: i64,
    /// For `t = 1..5`: Hilbert function equals Hilbert polynomial.
    pub hf_equals_hp: Vec<bool>,
}

pub fn reduction_number_report(fiber: &IdealHandle, seed: u64) -> Result<ReductionReport> {
    let hs = hilbert_series(fiber)?;
    let cm = artinian_cm_test(fiber, seed)?;
    let hf_equals_hp = (1..=5)
        .map(|t| hs.function_values[t] as i128 == hs.hilbert_polynomial_value(t as i64))
        .collect();
    Ok(ReductionReport {
        analytic_spread: hs.dim,
        fiber_cm: cm.verdict,
        h_degree: hs.h_degree(),
        reduction_number: (cm.verdict == CmVerdict::Cm).then(|| hs.h_degree()),
        multiplicity: hs.multiplicity,
        hf_equals_hp,
        cm_evidence: cm,
    })
}
