//! Hilbert series of graded quotients, from the lead-term ideal.

use serde::{Deserialize, Serialize};

use super::{monomial_dimension, IdealHandle};
use crate::error::{Error, Result};
use crate::ring::Mono;

/// Hilbert data of `R/I` for the standard grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `h(T)` with `HS(R/I) = numerator / (1 - T)^nvars`, low degree first.
    pub numerator: Vec<i64>,
    pub dim: i64,
    /// Numerator divided by `(1 - T)^(nvars - dim)`.
    pub h_polynomial: Vec<i64>,
    pub multiplicity: i64,
    /// `dim_k (R/I)_t` for `t = 0, 1, ...`.
    pub function_values: Vec<u64>,
}

impl HilbertData {
    pub fn h_degree(&self) -> usize {
        self.h_polynomial.len().saturating_sub(1)
    }

    /// Value at `t` of the Hilbert polynomial, i.e. the quasi-count obtained
    /// from the h-polynomial for all `t` (exact for large `t`).
    pub fn hilbert_polynomial_value(&self, t: i64) -> i128 {
        let d = self.dim;
        if d <= 0 {
            return 0;
        }
        self.h_polynomial
            .iter()
            .enumerate()
            .map(|(i, &h)| h as i128 * binom_poly(t - i as i64 + d - 1, d - 1))
            .sum()
    }
}

/// `C(a, b)` as a polynomial in `a` (so negative `a` is allowed).
fn binom_poly(a: i64, b: i64) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for k in 0..b {
        num *= (a - k) as i128;
        den *= (k + 1) as i128;
    }
    num / den
}

/// `C(a, b)` with the combinatorial convention `0` for `a < b`.
pub(crate) fn binom(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        0
    } else {
        binom_poly(a, b)
    }
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i128>, b: &[i128], shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        acc[i + shift] += y;
    }
}

/// Numerator `N(T)` of `HS(k[x]/M) = N(T) / (1 - T)^n` by pivot recursion:
/// `N(M) = N(M + (v)) + T * N(M : v)`.
fn numerator(gens: Vec<Mono>) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens[0].is_one() {
        return vec![0];
    }
    let masks: Vec<u32> = gens.iter().map(|m| m.support_mask()).collect();
    let mut coprime = true;
    'outer: for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                coprime = false;
                break 'outer;
            }
        }
    }
    if coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let mut f = vec![0i128; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable in the most non-linear generators
    let mut counts = [0usize; 32];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (v, c) in counts.iter_mut().enumerate() {
            if g.support_mask() & (1 << v) != 0 {
                *c += 1;
            }
        }
    }
    let v = (0..32).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let x = Mono::var(v);
    let mut plus = gens.clone();
    plus.push(x);
    let colon: Vec<Mono> = gens
        .iter()
        .map(|g| if g.exp(v) > 0 { x.quotient_of(g).unwrap() } else { *g })
        .collect();
    let mut acc = numerator(plus);
    poly_add_shifted(&mut acc, &numerator(colon), 1);
    while acc.len() > 1 && acc.last() == Some(&0) {
        acc.pop();
    }
    acc
}

fn to_i64(v: &[i128]) -> Result<Vec<i64>> {
    v.iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::Internal("Hilbert coefficient overflow".into())))
        .collect()
}

/// Hilbert series of `R/I` for homogeneous `I` (standard grading).
pub fn hilbert_series(ideal: &IdealHandle) -> Result<HilbertData> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let n = ideal.ring().nvars();
    let leads: Vec<Mono> = ideal.gb().iter().map(|g| *g.lead_mono().unwrap()).collect();
    let num = numerator(leads.clone());
    let table = 6.max(2 * n);
    if num.iter().all(|&c| c == 0) {
        return Ok(HilbertData {
            numerator: vec![0],
            dim: -1,
            h_polynomial: vec![0],
            multiplicity: 0,
            function_values: vec![0; table + 1],
        });
    }
    // divide by (1 - T) while T = 1 is a root
    let mut h = num.clone();
    let mut divisions = 0;
    while h.iter().sum::<i128>() == 0 {
        // synthetic division by (1 - T): q_k = sum_{i<=k} h_i
        let mut q = Vec::with_capacity(h.len() - 1);
        let mut run = 0i128;
        for &c in &h[..h.len() - 1] {
            run += c;
            q.push(run);
        }
        h = q;
        divisions += 1;
    }
    let dim = n as i64 - divisions;
    debug_assert_eq!(dim as usize, monomial_dimension(&leads, n));
    let multiplicity = h.iter().sum::<i128>();
    let function_values = (0..=table as i64)
        .map(|t| {
            num.iter()
                .enumerate()
                .map(|(i, &c)| c * binom(t - i as i64 + n as i64 - 1, n as i64 - 1))
                .sum::<i128>() as u64
        })
        .collect();
    Ok(HilbertData {
        numerator: to_i64(&num)?,
        dim,
        h_polynomial: to_i64(&h)?,
        multiplicity: multiplicity as i64,
        function_values,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    Ideal,
    Quotient,
}

/// `dim_k I_d` or `dim_k (R/I)_d` for homogeneous `I`, by counting the
/// degree-`d` monomials outside the lead-term ideal.
pub fn graded_piece_dimension(ideal: &IdealHandle, d: u32, piece: Piece) -> Result<u64> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let leads: Vec<Mono> = ideal.gb().iter().map(|g| *g.lead_mono().unwrap()).collect();
    let all = ideal.ring().monomials_of_degree(d);
    let standard = all
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count() as u64;
    Ok(match piece {
        Piece::Quotient => standard,
        Piece::Ideal => all.len() as u64 - standard,
    })
}
