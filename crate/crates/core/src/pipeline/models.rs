//! Determinantal model ideals for the alternating and separating monomial
//! families, written in the `t_0..t_(n-1)` indexing of the generators
//! `x^a y^b z^i` and transported to our signed generators.

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::invariants::{t_ring, xt_ring};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::PolyRing;

/// Sign of each generator's coefficient: the model relation in `t_j`
/// becomes one in `sign_j · t_j` for our generators.
pub fn generator_signs(gens: &[Poly]) -> Vec<Rat> {
    let minus = gens[0].field().from_int(-1);
    gens.iter()
        .map(|g| match g.lead_coeff() {
            Some(c) if *c == minus => minus.clone(),
            _ => Rat::ONE,
        })
        .collect()
}

fn scaled_t(ring: &Arc<PolyRing>, offset: usize, signs: &[Rat], j: usize) -> Poly {
    Poly::var(ring, offset + j).scale(&signs[j])
}

fn two_minors(top: &[Poly], bottom: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::new();
    for a in 0..top.len() {
        for b in a + 1..top.len() {
            out.push(&(&top[a] * &bottom[b]) - &(&top[b] * &bottom[a]));
        }
    }
    out
}

/// `I_2` of the 2-step catalecticant `[[t_0 .. t_(n-3)], [t_2 .. t_(n-1)]]`.
pub fn catalecticant_ideal(gens: &[Poly]) -> Result<IdealHandle> {
    let n = gens.len();
    let tr = t_ring(n, gens[0].field());
    let signs = generator_signs(gens);
    let t = |j| scaled_t(&tr, 0, &signs, j);
    let top: Vec<Poly> = (0..n - 2).map(t).collect();
    let bottom: Vec<Poly> = (2..n).map(t).collect();
    IdealHandle::new(&tr, two_minors(&top, &bottom))
}

/// `(I_2(H_1), I_2(H_2))` for the Hankel matrices on `t_0..t_r` and
/// `t_r..t_(n-1)`.
pub fn hankel_pair_ideal(gens: &[Poly], r: usize) -> Result<IdealHandle> {
    let n = gens.len();
    let tr = t_ring(n, gens[0].field());
    let signs = generator_signs(gens);
    let t = |j| scaled_t(&tr, 0, &signs, j);
    let mut rels = two_minors(&(0..r).map(t).collect::<Vec<_>>(), &(1..=r).map(t).collect::<Vec<_>>());
    rels.extend(two_minors(
        &(r..n - 1).map(t).collect::<Vec<_>>(),
        &(r + 1..n).map(t).collect::<Vec<_>>(),
    ));
    IdealHandle::new(&tr, rels)
}

/// `(I_2(S_1), I_2(S_2))` in `k[x, y, z, t]` for the scroll matrices
/// `S_1 = [[x, t_0 .. t_(r-1)], [-z, t_1 .. t_r]]` and
/// `S_2 = [[y, t_r .. t_(n-2)], [-z, t_(r+1) .. t_(n-1)]]`. The `-z`
/// convention pairs `t_j` with `(-1)^j` times the monomial generator.
pub fn scroll_pair_ideal(gens: &[Poly], r: usize) -> Result<IdealHandle> {
    let n = gens.len();
    let field = gens[0].field();
    let big = xt_ring(n, field);
    let minus = field.from_int(-1);
    let signs: Vec<Rat> = generator_signs(gens)
        .iter()
        .enumerate()
        .map(|(j, s)| if j % 2 == 1 { field.mul(s, &minus) } else { s.clone() })
        .collect();
    let t = |j| scaled_t(&big, 3, &signs, j);
    let mz = Poly::var(&big, 2).scale(&minus);
    let mut top = vec![Poly::var(&big, 0)];
    top.extend((0..r).map(t));
    let mut bottom = vec![mz.clone()];
    bottom.extend((1..=r).map(t));
    let mut rels = two_minors(&top, &bottom);
    let mut top = vec![Poly::var(&big, 1)];
    top.extend((r..n - 1).map(t));
    let mut bottom = vec![mz];
    bottom.extend((r + 1..n).map(t));
    rels.extend(two_minors(&top, &bottom));
    IdealHandle::new(&big, rels)
}

/// `t_0 t_(n-1), t_1^2, .., t_(n-2)^2`.
pub fn alternating_square_monomials(ring: &Arc<PolyRing>, n: usize) -> Vec<Poly> {
    let mut out = vec![&Poly::var(ring, 0) * &Poly::var(ring, n - 1)];
    out.extend((1..n - 1).map(|j| Poly::var(ring, j).pow(2)));
    out
}

/// `(r, s)` when the letters read `x^r y^s`.
pub fn separating_shape(letters: &str) -> Option<(usize, usize)> {
    let r = letters.chars().take_while(|&c| c == 'x').count();
    let s = letters.len() - r;
    (r >= 1 && s >= 1 && letters[r..].chars().all(|c| c == 'y')).then_some((r, s))
}

/// Letters alternate starting with `x`.
pub fn is_alternating(letters: &str) -> bool {
    letters
        .chars()
        .enumerate()
        .all(|(i, c)| c == if i % 2 == 0 { 'x' } else { 'y' })
}
