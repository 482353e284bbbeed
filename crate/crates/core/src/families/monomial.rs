use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::matforms::{hilbert_burch_generators, rational_points, LinearMatrix, ProjectivePoint};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::{Mono, PolyRing};

/// A word in `{x, y}` of length at least 2 using both letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BasicEntrySequence(String);

impl BasicEntrySequence {
    pub fn new(letters: &str) -> Result<BasicEntrySequence> {
        if letters.len() < 2 {
            return Err(Error::InvalidSequence(format!("`{letters}` is shorter than 2")));
        }
        if let Some(c) = letters.chars().find(|c| !matches!(c, 'x' | 'y')) {
            return Err(Error::InvalidSequence(format!("letter `{c}` is not x or y")));
        }
        if !letters.contains('x') || !letters.contains('y') {
            return Err(Error::InvalidSequence(format!("`{letters}` must use both x and y")));
        }
        Ok(BasicEntrySequence(letters.to_string()))
    }

    pub fn letters(&self) -> &str {
        &self.0
    }

    /// Number of generators, one more than the length.
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }
}

impl TryFrom<String> for BasicEntrySequence {
    type Error = Error;

    fn try_from(s: String) -> Result<BasicEntrySequence> {
        BasicEntrySequence::new(&s)
    }
}

impl From<BasicEntrySequence> for String {
    fn from(s: BasicEntrySequence) -> String {
        s.0
    }
}

impl fmt::Display for BasicEntrySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug)]
pub struct MonomialFamily {
    pub phi: LinearMatrix,
    /// Signed maximal minors, each a monomial up to sign.
    pub generators: Vec<Poly>,
    /// Points of the minimal primes, found as rational points of `V(I)`.
    pub minimal_primes: Vec<ProjectivePoint>,
}

/// Bidiagonal matrix with `z` on the diagonal and `-c_i` below it.
pub fn monomial_family(seq: &BasicEntrySequence) -> Result<MonomialFamily> {
    monomial_family_over(seq, &PolyRing::xyz(crate::field::FieldSpec::Rational))
}

pub fn monomial_family_over(seq: &BasicEntrySequence, ring: &Arc<PolyRing>) -> Result<MonomialFamily> {
    let n = seq.n();
    let z = Poly::var(ring, 2);
    let mut rows = vec![vec![Poly::zero(ring); n - 1]; n];
    for (i, c) in seq.letters().chars().enumerate() {
        let v = if c == 'x' { 0 } else { 1 };
        rows[i][i] = z.clone();
        rows[i + 1][i] = Poly::var(ring, v).scale(&ring.field().from_int(-1));
    }
    let phi = LinearMatrix::new(ring, rows)?;
    let generators = hilbert_burch_generators(&phi)?;
    if generators.iter().any(|g| !g.is_monomial()) {
        return Err(Error::Internal("maximal minors of a bidiagonal matrix must be monomials".into()));
    }
    let minimal_primes = rational_points(&IdealHandle::new(ring, generators.clone())?)?;
    Ok(MonomialFamily {
        phi,
        generators,
        minimal_primes,
    })
}

/// `(x y^(n-2), x y^(n-3) z, .., x y^(n-r-1) z^(r-1), y^(n-r-1) z^r, .., z^(n-1))`
/// for `1 <= r <= n-1`.
pub fn lan_remark_family(ring: &Arc<PolyRing>, n: usize, r: usize) -> Result<Vec<Poly>> {
    if n < 3 || r == 0 || r >= n {
        return Err(Error::OutOfRange(format!("need n >= 3 and 1 <= r <= n-1, got n = {n}, r = {r}")));
    }
    if ring.nvars() != 3 {
        return Err(Error::ShapeMismatch("ring must be k[x, y, z]".into()));
    }
    let mono = |a: usize, b: usize, c: usize| {
        Poly::monomial(ring, Mono::from_exps(&[a as u32, b as u32, c as u32]), Rat::ONE)
    };
    let mut out: Vec<Poly> = (0..r).map(|i| mono(1, n - 2 - i, i)).collect();
    out.extend((r..n).map(|j| mono(0, n - 1 - j, j)));
    Ok(out)
}

/// Minimal monomial generators of `I R_p` where `p` is the monomial prime
/// of all variables except `inverted`: set that variable to 1 and discard
/// non-minimal monomials. Requires monomial generators.
pub fn localized_minimal_generators(gens: &[Poly], inverted: usize) -> Result<Vec<Mono>> {
    let mut monos = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if !g.is_monomial() {
            return Err(Error::Unavailable(format!("monomial localization of {g}")));
        }
        monos.push(g.lead_mono().unwrap().without_var(inverted));
    }
    monos.sort_by_key(|m| m.degree());
    monos.dedup();
    let mut minimal: Vec<Mono> = Vec::new();
    for m in monos {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    Ok(minimal)
}
