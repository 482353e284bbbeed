use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, intersect, IdealHandle};
use crate::invariants::{chaos_invariant, linear_syzygy_matrix, SyzygyOutcome};
use crate::matforms::{point_of_linear_prime, ProjectivePoint};
use crate::poly::Poly;
use crate::ring::PolyRing;

#[derive(Clone, Debug)]
pub struct FatPoint {
    pub prime: Vec<Poly>,
    pub point: ProjectivePoint,
    pub multiplicity: u32,
}

/// Rational points with multiplicities, sorted by decreasing multiplicity.
#[derive(Clone, Debug)]
pub struct FatPointSpec {
    ring: Arc<PolyRing>,
    points: Vec<FatPoint>,
}

impl FatPointSpec {
    pub fn new(ring: &Arc<PolyRing>, points: Vec<(Vec<Poly>, u32)>) -> Result<FatPointSpec> {
        if ring.nvars() != 3 {
            return Err(Error::ShapeMismatch("fat points live in P^2".into()));
        }
        if points.is_empty() {
            return Err(Error::OutOfRange("no points".into()));
        }
        let mut out: Vec<FatPoint> = Vec::with_capacity(points.len());
        for (prime, multiplicity) in points {
            if multiplicity == 0 {
                return Err(Error::OutOfRange("multiplicities must be at least 1".into()));
            }
            let point = point_of_linear_prime(&prime)?;
            if out.iter().any(|p| p.point == point) {
                return Err(Error::OutOfRange(format!("point {point} repeated")));
            }
            out.push(FatPoint {
                prime,
                point,
                multiplicity,
            });
        }
        out.sort_by_key(|p| std::cmp::Reverse(p.multiplicity));
        Ok(FatPointSpec {
            ring: ring.clone(),
            points: out,
        })
    }

    /// Spec read off an arrangement's multiplicity data.
    pub fn from_arrangement(a: &super::Arrangement) -> Result<FatPointSpec> {
        let ring = a.ring();
        let points = a
            .intersection_points()?
            .into_iter()
            .map(|p| Ok((crate::matforms::linear_prime_of_point(ring, &p.point)?, p.multiplicity as u32)))
            .collect::<Result<Vec<_>>>()?;
        FatPointSpec::new(ring, points)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn points(&self) -> &[FatPoint] {
        &self.points
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.points[0].multiplicity
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FatPointResult {
    pub ideal_gens: Vec<String>,
    /// Degree of the lowest-degree generators.
    pub initial_degree: u32,
    /// `I` is generated in its initial degree.
    pub equigenerated: bool,
    /// Basis of `I` in its initial degree.
    pub generators: Vec<String>,
    /// `None` when `I` is not equigenerated.
    pub linearly_presented: Option<bool>,
    pub nullity: Option<usize>,
    pub n: Option<usize>,
    pub u: Option<usize>,
    /// `n - m_1 - 1`.
    pub predicted_u: Option<usize>,
    /// Why the presentation falls outside the standing hypotheses.
    pub hypothesis_failure: Option<String>,
    #[serde(skip)]
    pub ideal: Option<IdealHandle>,
    #[serde(skip)]
    pub phi: Option<crate::matforms::LinearMatrix>,
}

impl FatPointResult {
    pub fn u_matches(&self) -> Option<bool> {
        Some(self.u? == self.predicted_u?)
    }
}

/// `I = p_1^(m_1) ∩ .. ∩ p_r^(m_r)` with a linear presentation attempt.
pub fn fat_point_ideal(spec: &FatPointSpec) -> Result<FatPointResult> {
    let ring = spec.ring();
    let mut ideal: Option<IdealHandle> = None;
    for p in spec.points() {
        let power = IdealHandle::new(ring, p.prime.clone())?.power(p.multiplicity);
        ideal = Some(match ideal {
            None => power,
            Some(acc) => intersect(&acc, &power)?,
        });
    }
    let ideal = ideal.expect("spec has points");
    let initial_degree = ideal
        .gb()
        .iter()
        .filter_map(|g| g.degree())
        .min()
        .ok_or_else(|| Error::Internal("fat point ideal is zero".into()))?;
    let low: Vec<Poly> = ideal
        .gb()
        .iter()
        .filter(|g| g.degree() == Some(initial_degree))
        .cloned()
        .collect();
    let equigenerated = ideal_equal(&IdealHandle::new(ring, low.clone())?, &ideal)?;
    let mut out = FatPointResult {
        ideal_gens: ideal.display_gens(),
        initial_degree,
        equigenerated,
        generators: low.iter().map(|g| g.to_string()).collect(),
        linearly_presented: None,
        nullity: None,
        n: None,
        u: None,
        predicted_u: None,
        hypothesis_failure: None,
        ideal: Some(ideal),
        phi: None,
    };
    if !equigenerated {
        return Ok(out);
    }
    match linear_syzygy_matrix(&low)? {
        SyzygyOutcome::NotLinearlyPresented { nullity } => {
            out.linearly_presented = Some(false);
            out.nullity = Some(nullity);
        }
        SyzygyOutcome::Presented(phi) => {
            let n = phi.nrows();
            out.linearly_presented = Some(true);
            out.nullity = Some(phi.ncols());
            out.n = Some(n);
            out.predicted_u = (n as u32).checked_sub(spec.max_multiplicity() + 1).map(|v| v as usize);
            match chaos_invariant(&phi) {
                Ok(profile) => out.u = Some(profile.u),
                Err(e @ Error::Hypothesis { .. }) => out.hypothesis_failure = Some(e.to_string()),
                Err(e) => return Err(e),
            }
            out.phi = Some(phi);
        }
    }
    Ok(out)
}

/// `s` with `sum m_i = 3(s - 1)` and `sum m_i^2 = s(s - 1)`, if any.
pub fn subhomaloidal_degree(mults: &[u64]) -> Result<Option<u64>> {
    let sum: u64 = mults.iter().sum();
    let squares: u64 = mults.iter().map(|m| m * m).sum();
    if !sum.is_multiple_of(3) {
        return Ok(None);
    }
    let s = sum / 3 + 1;
    if squares != s * (s - 1) {
        return Ok(None);
    }
    if s.is_multiple_of(2) {
        return Err(Error::Internal(format!("sub-homaloidal degree {s} is even")));
    }
    Ok(Some(s))
}
