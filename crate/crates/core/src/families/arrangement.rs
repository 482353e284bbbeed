use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{graded_piece_dimension, ideal_equal, intersect, IdealHandle, Piece};
use crate::invariants::{chaos_invariant, fiber_ideal, reduction_number_report};
use crate::linalg::linear_coeff_matrix;
use crate::matforms::{hilbert_burch_generators, linear_prime_of_point, LinearMatrix, ProjectivePoint};
use crate::poly::Poly;
use crate::ring::PolyRing;

/// Pairwise non-proportional linear forms spanning `k[x, y, z]_1`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    forms: Vec<Poly>,
}

impl Arrangement {
    pub fn new(forms: Vec<Poly>) -> Result<Arrangement> {
        let Some(first) = forms.first() else {
            return Err(Error::InvalidArrangement("no forms".into()));
        };
        if first.ring().nvars() != 3 {
            return Err(Error::InvalidArrangement("forms must live in k[x, y, z]".into()));
        }
        if let Some(f) = forms.iter().find(|f| f.is_zero() || !f.is_linear_form()) {
            return Err(Error::InvalidArrangement(format!("`{f}` is not a nonzero linear form")));
        }
        if linear_coeff_matrix(&forms)?.rank() < 3 {
            return Err(Error::InvalidArrangement("forms do not span the linear forms".into()));
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if linear_coeff_matrix(&[forms[i].clone(), forms[j].clone()])?.rank() < 2 {
                    return Err(Error::InvalidArrangement(format!(
                        "`{}` and `{}` are proportional",
                        forms[i], forms[j]
                    )));
                }
            }
        }
        Ok(Arrangement { forms })
    }

    pub fn parse(ring: &Arc<PolyRing>, forms: &[String]) -> Result<Arrangement> {
        let polys = forms
            .iter()
            .map(|s| crate::parse::parse_poly(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(polys)
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.forms[0].ring()
    }

    /// Whether some `n - 1` of the forms span only a 2-dimensional space.
    pub fn has_concurrent_hyperplane(&self) -> Result<bool> {
        for skip in 0..self.forms.len() {
            let rest: Vec<Poly> = (0..self.forms.len())
                .filter(|&j| j != skip)
                .map(|j| self.forms[j].clone())
                .collect();
            if linear_coeff_matrix(&rest)?.rank() == 2 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Intersection points of pairs of lines with the lines through each.
    pub fn intersection_points(&self) -> Result<Vec<PointMultiplicity>> {
        let field = self.ring().field();
        let mut out: Vec<PointMultiplicity> = Vec::new();
        for i in 0..self.forms.len() {
            for j in i + 1..self.forms.len() {
                let kernel = linear_coeff_matrix(&[self.forms[i].clone(), self.forms[j].clone()])?.nullspace();
                let point = ProjectivePoint::normalized(kernel[0].clone(), field)?;
                if out.iter().any(|p| p.point == point) {
                    continue;
                }
                let lines: Vec<usize> = (0..self.forms.len())
                    .filter(|&k| self.forms[k].eval(point.coords()).is_zero())
                    .collect();
                let prime = linear_prime_of_point(self.ring(), &point)?;
                out.push(PointMultiplicity {
                    multiplicity: lines.len() - 1,
                    prime: prime.iter().map(|p| p.to_string()).collect(),
                    point,
                    lines,
                });
            }
        }
        out.sort_by_key(|p| std::cmp::Reverse(p.multiplicity));
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointMultiplicity {
    pub point: ProjectivePoint,
    pub prime: Vec<String>,
    /// Indices of the forms vanishing at the point.
    pub lines: Vec<usize>,
    /// Number of lines through the point minus one.
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct ArrangementFamily {
    pub phi: LinearMatrix,
    /// `prod_{j != i} l_j` for each `i`.
    pub generators: Vec<Poly>,
    /// The signed minors of `phi` agree with the products up to scalars.
    pub minors_match: bool,
    pub points: Vec<PointMultiplicity>,
    /// `I` equals the intersection of `p^(m_p)` over the points.
    pub fat_identity: bool,
}

impl ArrangementFamily {
    pub fn ideal(&self) -> Result<IdealHandle> {
        IdealHandle::new(self.phi.ring(), self.generators.clone())
    }
}

/// Column `j` carries `l_j` in row `j` and `-l_(j+1)` in row `j + 1`.
pub fn arrangement_family(a: &Arrangement) -> Result<ArrangementFamily> {
    let ring = a.ring();
    let n = a.len();
    let field = ring.field();
    let mut rows = vec![vec![Poly::zero(ring); n - 1]; n];
    for j in 0..n - 1 {
        rows[j][j] = a.forms[j].clone();
        rows[j + 1][j] = a.forms[j + 1].scale(&field.from_int(-1));
    }
    let phi = LinearMatrix::new(ring, rows)?;
    let generators: Vec<Poly> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .fold(Poly::one(ring), |acc, j| &acc * &a.forms[j])
        })
        .collect();
    let minors = hilbert_burch_generators(&phi)?;
    let minors_match = minors
        .iter()
        .zip(&generators)
        .all(|(m, g)| !m.is_zero() && m.monic() == g.monic());
    let points = a.intersection_points()?;
    let ideal = IdealHandle::new(ring, generators.clone())?;
    let mut fat: Option<IdealHandle> = None;
    for p in &points {
        let prime = IdealHandle::new(ring, linear_prime_of_point(ring, &p.point)?)?;
        let power = prime.power(p.multiplicity as u32);
        fat = Some(match fat {
            None => power,
            Some(acc) => intersect(&acc, &power)?,
        });
    }
    let fat_identity = match fat {
        Some(f) => ideal_equal(&ideal, &f)?,
        None => false,
    };
    Ok(ArrangementFamily {
        phi,
        generators,
        minors_match,
        points,
        fat_identity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateReport {
    pub n: usize,
    /// Some `n - 1` forms span a 2-dimensional space.
    pub concurrent: bool,
    pub u: usize,
    pub reduction_number: Option<usize>,
    /// One point of multiplicity `n - 2`, all others simple.
    pub fat_shape: bool,
    /// The concurrency, `u = 1` and `r(I) <= 1` conditions agree.
    pub conditions_agree: bool,
    pub multiplicities: Vec<usize>,
    pub sum_m: usize,
    pub sum_m_squared: usize,
    /// Checked only when the conditions hold.
    pub identities_hold: Option<bool>,
    pub mu_square: Option<u64>,
    pub mu_square_expected: usize,
}

impl DegenerateReport {
    pub fn degenerate(&self) -> bool {
        self.conditions_agree && self.concurrent
    }
}

/// Computes the equivalent characterizations of a degenerate arrangement
/// independently and checks the multiplicity identities when they hold.
pub fn degenerate_arrangement_check(a: &Arrangement, seed: u64) -> Result<DegenerateReport> {
    let n = a.len();
    let concurrent = a.has_concurrent_hyperplane()?;
    let family = arrangement_family(a)?;
    let u = chaos_invariant(&family.phi)?.u;
    let fiber = fiber_ideal(&family.phi)?;
    let reduction_number = reduction_number_report(&fiber, seed)?.reduction_number;
    let multiplicities: Vec<usize> = family.points.iter().map(|p| p.multiplicity).collect();
    let fat_shape = multiplicities[0] == n - 2 && multiplicities[1..].iter().all(|&m| m == 1);
    let conditions = [concurrent, u == 1, reduction_number.is_some_and(|r| r <= 1)];
    let conditions_agree = conditions.iter().all(|&c| c == conditions[0]);
    let sum_m = multiplicities.iter().sum();
    let sum_m_squared = multiplicities.iter().map(|m| m * m).sum();
    let mu_square_expected = 3 * (n - 1);
    let (identities_hold, mu_square) = if conditions_agree && concurrent {
        let ideal = family.ideal()?;
        let mu = graded_piece_dimension(&ideal.power(2), 2 * (n as u32 - 1), Piece::Ideal)?;
        (Some(sum_m == 2 * n - 3 && sum_m_squared == n * n - 3 * n + 3), Some(mu))
    } else {
        (None, None)
    };
    Ok(DegenerateReport {
        n,
        concurrent,
        u,
        reduction_number,
        fat_shape,
        conditions_agree,
        multiplicities,
        sum_m,
        sum_m_squared,
        identities_hold,
        mu_square,
        mu_square_expected,
    })
}
