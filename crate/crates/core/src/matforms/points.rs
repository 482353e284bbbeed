//! Rational points of zero-dimensional projective schemes in the plane, and
//! the linear primes that go with them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{dimension_and_height, eliminate, saturate, IdealHandle};
use crate::linalg::{linear_coeff_matrix, ScalarMatrix};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::{MonomialOrder, PolyRing};
use crate::univariate::{binary_form_gcd, binary_form_zeros};

/// A point of projective space with normalized coordinates: over the
/// rationals, coprime integers with the first nonzero entry positive; over a
/// prime field, the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<Rat>);

impl ProjectivePoint {
    pub fn normalized(coords: Vec<Rat>, field: crate::field::FieldSpec) -> Result<ProjectivePoint> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroPoint);
        };
        if !field.is_rational() {
            let inv = field.inv(&first);
            return Ok(ProjectivePoint(coords.iter().map(|c| field.mul(c, &inv)).collect()));
        }
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = coords.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if first.is_negative() {
            g = -g;
        }
        Ok(ProjectivePoint(
            ints.into_iter().map(|v| Rat::from_bigint(v / &g)).collect(),
        ))
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn parse(s: &str) -> Option<ProjectivePoint> {
        let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        let coords = inner.split(':').map(Rat::parse).collect::<Option<Vec<_>>>()?;
        Some(ProjectivePoint(coords))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ProjectivePoint::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad point `{s}`")))
    }
}

/// Linear forms generating the ideal of a point: a basis of the forms
/// vanishing there, from the reduced echelon form.
pub fn linear_prime_of_point(ring: &std::sync::Arc<PolyRing>, point: &ProjectivePoint) -> Result<Vec<Poly>> {
    if point.0.len() != ring.nvars() {
        return Err(Error::ShapeMismatch("point dimension".into()));
    }
    let m = ScalarMatrix::from_rows(ring.field(), vec![point.0.clone()]);
    if m.rank() == 0 {
        return Err(Error::ZeroPoint);
    }
    Ok(m.nullspace()
        .iter()
        .map(|v| Poly::linear(ring, v).primitive())
        .collect())
}

/// The point cut out by `nvars - 1` independent linear forms.
pub fn point_of_linear_prime(forms: &[Poly]) -> Result<ProjectivePoint> {
    let m = linear_coeff_matrix(forms).map_err(|_| Error::NotRationalLinear)?;
    let field = forms[0].field();
    if m.rank() + 1 != m.ncols() {
        return Err(Error::NotRationalLinear);
    }
    let v = m.nullspace().remove(0);
    ProjectivePoint::normalized(v, field)
}

/// `f ∈ √I`, decided by `I : f^∞ = (1)`.
pub fn radical_contains(ideal: &IdealHandle, f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(saturate(ideal, f)?.is_unit())
}

const CENTERS: [[i64; 3]; 8] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 1],
    [1, 2, 3],
    [1, -1, 2],
    [2, 3, 5],
    [3, -2, 7],
];

/// All points of `V(J)` in the projective plane with coordinates in the
/// ground field, for a homogeneous ideal `J` of `k[x, y, z]` with
/// `dim R/J = 1`. Points defined only over an extension are not returned.
pub fn rational_points(ideal: &IdealHandle) -> Result<Vec<ProjectivePoint>> {
    let ring = ideal.ring();
    if ring.nvars() != 3 {
        return Err(Error::ShapeMismatch("rational points need three variables".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("ideal".into()));
    }
    let (dim, _) = dimension_and_height(ideal);
    if dim != 1 {
        return Err(Error::OutOfRange(format!("expected a 1-dimensional cone, got dim {dim}")));
    }
    let field = ring.field();
    let to_vec = |c: &[i64; 3]| c.iter().map(|&v| field.from_int(v)).collect::<Vec<Rat>>();
    let center = CENTERS
        .iter()
        .map(to_vec)
        .find(|o| ideal.gens().iter().any(|g| !g.eval(o).is_zero()))
        .ok_or_else(|| Error::Internal("no projection center off the scheme".into()))?;
    // complete the center to a basis with two unit vectors
    let units: Vec<Vec<Rat>> = (0..3)
        .map(|i| (0..3).map(|j| field.from_int((i == j) as i64)).collect())
        .collect();
    let (b1, b2) = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| (units[i].clone(), units[j].clone()))
        .find(|(b1, b2)| {
            ScalarMatrix::from_rows(field, vec![center.clone(), b1.clone(), b2.clone()]).rank() == 3
        })
        .expect("nonzero center");

    let lm = PolyRing::new(&["l", "m1", "m2"], MonomialOrder::Degrevlex, field)?;
    let images: Vec<Poly> = (0..3)
        .map(|i| Poly::linear(&lm, &[center[i].clone(), b1[i].clone(), b2[i].clone()]))
        .collect();
    let moved = ideal
        .gens()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    let projected = eliminate(&IdealHandle::new(&lm, moved)?, &[0])?;
    let f = binary_form_gcd(projected.gens())?;
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let line_ring = PolyRing::new(&["l", "m"], MonomialOrder::Degrevlex, field)?;
    for (beta1, beta2) in binary_form_zeros(&f, (0, 1))? {
        let dir: Vec<Rat> = (0..3)
            .map(|i| field.add(&field.mul(&beta1, &b1[i]), &field.mul(&beta2, &b2[i])))
            .collect();
        let line: Vec<Poly> = (0..3)
            .map(|i| Poly::linear(&line_ring, &[center[i].clone(), dir[i].clone()]))
            .collect();
        let restricted: Vec<Poly> = ideal
            .gens()
            .iter()
            .map(|g| g.substitute(&line))
            .collect::<Result<Vec<_>>>()?;
        if restricted.iter().all(|p| p.is_zero()) {
            return Err(Error::Internal("a whole line lies on a zero-dimensional scheme".into()));
        }
        let g = binary_form_gcd(&restricted)?;
        if g.is_constant() {
            continue;
        }
        for (lam, mu) in binary_form_zeros(&g, (0, 1))? {
            let p: Vec<Rat> = (0..3)
                .map(|i| field.add(&field.mul(&lam, &center[i]), &field.mul(&mu, &dir[i])))
                .collect();
            let p = ProjectivePoint::normalized(p, field)?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    Ok(out)
}
