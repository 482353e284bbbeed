use serde::{Deserialize, Serialize};

use super::check_shape;
use crate::error::{Error, Result};
use crate::groebner::dimension_and_height;
use crate::matforms::{
    hilbert_burch_generators, linear_prime_of_point, minors, minors_ideal, point_of_linear_prime, radical_contains,
    rank_at_point, rational_points, LinearMatrix, ProjectivePoint,
};
use crate::poly::Poly;

/// Local data at a rational linear prime containing `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    /// Least `t` with `I_(t+1)(φ) ⊆ p`.
    pub u_p: usize,
    /// Minimal number of generators of `I_p`.
    pub mu: usize,
    pub complete_intersection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalData {
    pub point: ProjectivePoint,
    pub prime: Vec<String>,
    #[serde(flatten)]
    pub profile: LocalProfile,
}

/// The common minimal prime of `I_t(φ)` for `u+1 <= t <= n-u-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalPrime {
    pub point: Option<ProjectivePoint>,
    pub prime: Option<Vec<String>>,
    /// Per `t` in the range: whether `rad I_t = q` was certified.
    pub single_minimal_prime: Vec<(usize, bool)>,
}

impl UniversalPrime {
    pub fn holds(&self) -> bool {
        self.point.is_some() && self.single_minimal_prime.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChaosProfile {
    /// `heights[t - 1] = ht I_t(φ)`.
    pub heights: Vec<usize>,
    pub u: usize,
    /// One entry per rational minimal prime of `I`.
    pub local: Vec<LocalData>,
    pub universal_prime: Option<UniversalPrime>,
}

impl ChaosProfile {
    /// Smallest local invariant over the rational primes found.
    pub fn min_local_u(&self) -> Option<usize> {
        self.local.iter().map(|l| l.profile.u_p).min()
    }
}

/// `ht I_t(φ)` for `t = 1 .. ncols`.
pub fn heights(phi: &LinearMatrix) -> Result<Vec<usize>> {
    (1..=phi.ncols())
        .map(|t| Ok(dimension_and_height(&minors_ideal(phi, t)?).1))
        .collect()
}

pub fn chaos_invariant(phi: &LinearMatrix) -> Result<ChaosProfile> {
    let n = check_shape(phi)?;
    let heights = heights(phi)?;
    if heights[0] != 3 {
        return Err(Error::Hypothesis {
            t: 1,
            found: heights[0],
            expected: 3,
        });
    }
    if heights[n - 2] != 2 {
        return Err(Error::Hypothesis {
            t: n - 1,
            found: heights[n - 2],
            expected: 2,
        });
    }
    // heights are non-increasing and squeezed between 2 and 3
    let u = heights.iter().take_while(|&&h| h == 3).count();
    if heights[u..].iter().any(|&h| h != 2) {
        return Err(Error::Internal(format!("height table {heights:?} is not of threshold shape")));
    }
    let ring = phi.ring();
    let ideal = minors_ideal(phi, n - 1)?;
    let mut local = Vec::new();
    for point in rational_points(&ideal)? {
        let prime = linear_prime_of_point(ring, &point)?;
        let profile = local_profile(phi, &prime)?;
        local.push(LocalData {
            point,
            prime: prime.iter().map(|p| p.to_string()).collect(),
            profile,
        });
    }
    let universal_prime = if n >= 2 * (u + 1) {
        Some(universal_prime(phi, u)?)
    } else {
        None
    };
    Ok(ChaosProfile {
        heights,
        u,
        local,
        universal_prime,
    })
}

fn universal_prime(phi: &LinearMatrix, u: usize) -> Result<UniversalPrime> {
    let n = phi.nrows();
    let range = u + 1..=n - (u + 1);
    let points = rational_points(&minors_ideal(phi, u + 1)?)?;
    if points.len() != 1 {
        return Ok(UniversalPrime {
            point: None,
            prime: None,
            single_minimal_prime: range.map(|t| (t, false)).collect(),
        });
    }
    let point = points.into_iter().next().unwrap();
    let q = linear_prime_of_point(phi.ring(), &point)?;
    let mut checks = Vec::new();
    for t in range {
        let it = minors_ideal(phi, t)?;
        // I_t ⊆ q and q ⊆ rad I_t together give rad I_t = q
        let inside = it.gens().iter().all(|g| g.eval(point.coords()).is_zero());
        let mut covers = true;
        for form in &q {
            covers &= radical_contains(&it, form)?;
        }
        checks.push((t, inside && covers));
    }
    Ok(UniversalPrime {
        prime: Some(q.iter().map(|p| p.to_string()).collect()),
        point: Some(point),
        single_minimal_prime: checks,
    })
}

/// Local invariants of `φ` at a rational linear prime `p ⊇ I`.
pub fn local_profile(phi: &LinearMatrix, p: &[Poly]) -> Result<LocalProfile> {
    let n = check_shape(phi)?;
    let point = point_of_linear_prime(p)?;
    let at = point.coords();
    if hilbert_burch_generators(phi)?.iter().any(|f| !f.eval(at).is_zero()) {
        return Err(Error::NotContained);
    }
    // a polynomial lies in the prime of a point iff it vanishes there
    let mut u_p = n - 2;
    for t in 0..n - 2 {
        if minors(phi, t + 1)?.iter().all(|m| m.eval(at).is_zero()) {
            u_p = t;
            break;
        }
    }
    let mu = n - rank_at_point(phi, at)?;
    Ok(LocalProfile {
        u_p,
        mu,
        complete_intersection: mu == 2,
    })
}
