//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod cm;
mod hilbert;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Poly};
use crate::ring::{Mono, MonomialOrder, PolyRing};

pub use cm::{artinian_cm_test, CmEvidence, CmVerdict};
pub use hilbert::{graded_piece_dimension, hilbert_series, HilbertData, Piece};

/// Generators of an ideal plus a lazily computed reduced Gröbner basis in
/// the ring's order. The cache is filled at most once.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl IdealHandle {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Result<IdealHandle> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(IdealHandle {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    /// Panics if the generators live in different rings.
    pub fn from_polys(ring: &Arc<PolyRing>, gens: &[Poly]) -> IdealHandle {
        IdealHandle::new(ring, gens.to_vec()).expect("generators in the ring")
    }

    pub fn zero(ring: &Arc<PolyRing>) -> IdealHandle {
        IdealHandle::from_polys(ring, &[])
    }

    /// Trusted constructor for a list already known to be the reduced basis.
    pub(crate) fn with_basis(ring: &Arc<PolyRing>, gb: Vec<Poly>) -> IdealHandle {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        IdealHandle {
            ring: ring.clone(),
            gens: gb,
            gb: cell,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ring's order.
    pub fn gb(&self) -> &[Poly] {
        self.gb
            .get_or_init(|| buchberger::reduced_basis(&self.ring, &self.gens))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(buchberger::normal_form_terms(&self.ring, f, self.gb()))
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).expect("same ring").is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_weighted_homogeneous())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a * b;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        IdealHandle::new(&self.ring, gens)
    }

    /// `self^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> IdealHandle {
        assert!(k >= 1);
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// The same ideal in a ring with the same variable names (any order).
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<IdealHandle> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(target, gens)
    }

    /// Generators with content removed, for display.
    pub fn display_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.primitive().to_string()).collect()
    }

    /// Stable 64-bit FNV-1a digest of the printed reduced basis.
    pub fn gb_hash(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for g in self.gb() {
            for b in g.to_string().bytes().chain(std::iter::once(b';')) {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        format!("{h:016x}")
    }
}

/// Reduced Gröbner basis of `ideal` in `order`.
pub fn groebner_basis(ideal: &IdealHandle, order: MonomialOrder) -> Vec<Poly> {
    if ideal.ring.order() == order {
        return ideal.gb().to_vec();
    }
    let ring = ideal.ring.with_order(order);
    let gens: Vec<Poly> = ideal.gens.iter().map(|g| g.to_ring(&ring).expect("same variables")).collect();
    buchberger::reduced_basis(&ring, &gens)
}

pub fn normal_form(f: &Poly, ideal: &IdealHandle) -> Result<Poly> {
    ideal.normal_form(f)
}

/// Equality of ideals in rings over the same variables.
pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    if !a.ring.same_space(&b.ring) {
        return Err(Error::RingMismatch);
    }
    if same_ring(&a.ring, &b.ring) {
        return Ok(a.gb() == b.gb());
    }
    let b2 = b.to_ring(&a.ring)?;
    Ok(a.gb() == b2.gb())
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(ring: &Arc<PolyRing>, basis: &[Poly]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = buchberger::s_polynomial(ring, &basis[i], &basis[j]);
            if !buchberger::normal_form_terms(ring, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A variable name not used by `ring`, derived from `stem`.
fn fresh_name(ring: &PolyRing, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// Ring with the listed variables first, under `order`, weights carried over.
fn reordered_ring(
    ring: &PolyRing,
    first: &[usize],
    order_for: impl Fn(usize) -> MonomialOrder,
) -> Result<(Arc<PolyRing>, Vec<usize>)> {
    let n = ring.nvars();
    let mut perm: Vec<usize> = first.to_vec();
    perm.extend((0..n).filter(|i| !first.contains(i)));
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let weights: Vec<u32> = perm.iter().map(|&i| ring.weights()[i]).collect();
    let new = PolyRing::new(&names, order_for(first.len()), ring.field())?.with_weights(weights);
    let mut var_map = vec![0; n];
    for (pos, &i) in perm.iter().enumerate() {
        var_map[i] = pos;
    }
    Ok((new, var_map))
}

/// `I ∩ k[remaining variables]`, as an ideal of the ring on the remaining
/// variables (degrevlex, weights kept). The result comes with its reduced
/// Gröbner basis already cached.
pub fn eliminate(ideal: &IdealHandle, drop_vars: &[usize]) -> Result<IdealHandle> {
    let ring = &ideal.ring;
    if drop_vars.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::OutOfRange("elimination variable".into()));
    }
    let mut drop: Vec<usize> = drop_vars.to_vec();
    drop.sort_unstable();
    drop.dedup();
    let (elim_ring, var_map) = reordered_ring(ring, &drop, MonomialOrder::Block)?;
    let gens: Vec<Poly> = ideal.gens.iter().map(|g| g.map_vars(&elim_ring, &var_map)).collect();
    let k = drop.len();
    let gb = buchberger::reduced_basis(&elim_ring, &gens);
    let kept: Vec<usize> = (0..ring.nvars()).filter(|i| !drop.contains(i)).collect();
    let names: Vec<&str> = kept.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let weights: Vec<u32> = kept.iter().map(|&i| ring.weights()[i]).collect();
    let target = PolyRing::new(&names, MonomialOrder::Degrevlex, ring.field())?.with_weights(weights);
    // positions k.. of the elimination ring are the kept variables in order
    let back: Vec<usize> = (0..elim_ring.nvars()).map(|p| p.saturating_sub(k)).collect();
    let survivors: Vec<Poly> = gb
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|v| m.exp(v) == 0)))
        .map(|g| g.map_vars(&target, &back))
        .collect();
    // the second block of a block order is degrevlex, so these are already
    // the reduced basis of the elimination ideal in the target order
    let mut sorted = survivors;
    sorted.sort_by(|a, b| target.cmp(a.lead_mono().unwrap(), b.lead_mono().unwrap()));
    Ok(IdealHandle::with_basis(&target, sorted))
}

/// Image of `ideal` in a ring with one extra variable appended.
fn extend_ring(ideal: &IdealHandle, name: &str, weight: u32) -> Result<(Arc<PolyRing>, Vec<Poly>)> {
    let ring = &ideal.ring;
    let mut names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    names.push(name);
    let mut weights = ring.weights().to_vec();
    weights.push(weight);
    let big = PolyRing::new(&names, MonomialOrder::Degrevlex, ring.field())?.with_weights(weights);
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let gens = ideal.gens.iter().map(|g| g.map_vars(&big, &map)).collect();
    Ok((big, gens))
}

/// Divides every element of a basis computed in degrevlex with variable
/// `v` last by `v^k` (all of it when `full`, else at most once).
fn strip_last_var(basis: &[Poly], v: usize, full: bool) -> Vec<Poly> {
    basis
        .iter()
        .map(|g| {
            let e = g.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0);
            let e = if full { e } else { e.min(1) };
            if e == 0 {
                g.clone()
            } else {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| (Mono::var(v).pow(e).quotient_of(m).unwrap(), c.clone()))
                    .collect();
                Poly::from_terms(g.ring(), terms)
            }
        })
        .collect()
}

/// `I : v` or `I : v^∞` for a variable `v` of a weighted-homogeneous ideal,
/// by a degrevlex basis with `v` last.
fn colon_variable(ideal: &IdealHandle, v: usize, full: bool) -> Result<IdealHandle> {
    let ring = &ideal.ring;
    let n = ring.nvars();
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != v).collect();
    rest.push(v);
    let (r2, map) = reordered_ring(ring, &rest, |_| MonomialOrder::Degrevlex)?;
    let gens: Vec<Poly> = ideal.gens.iter().map(|g| g.map_vars(&r2, &map)).collect();
    let gb = buchberger::reduced_basis(&r2, &gens);
    let stripped = strip_last_var(&gb, n - 1, full);
    let inv: Vec<usize> = rest.clone();
    let back: Vec<Poly> = stripped.iter().map(|g| g.map_vars(ring, &inv)).collect();
    IdealHandle::new(ring, back)
}

/// `I : f` or `I : f^∞` for weighted-homogeneous `I` and `f`: adjoin `s`
/// of the weight of `f`, take `(I, s - f) : s` and substitute `s ↦ f`.
fn colon_by_new_variable(ideal: &IdealHandle, f: &Poly, full: bool) -> Result<IdealHandle> {
    let ring = &ideal.ring;
    let name = fresh_name(ring, "s");
    let w = f.weighted_degree().unwrap_or(1).max(1);
    let (big, mut gens) = extend_ring(ideal, &name, w)?;
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let s = Poly::var(&big, ring.nvars());
    gens.push(&s - &f.map_vars(&big, &map));
    let gb = buchberger::reduced_basis(&big, &gens);
    let stripped = strip_last_var(&gb, ring.nvars(), full);
    let mut images: Vec<Poly> = (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect();
    images.push(f.clone());
    let back = stripped
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, back)
}

/// `I : f^∞` by eliminating `w` from `(I, 1 - w f)`. Valid for any input.
pub fn saturate_rabinowitsch(ideal: &IdealHandle, f: &Poly) -> Result<IdealHandle> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let ring = &ideal.ring;
    let name = fresh_name(ring, "w");
    let (big, mut gens) = extend_ring(ideal, &name, 1)?;
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let w = Poly::var(&big, ring.nvars());
    gens.push(&Poly::one(&big) - &(&w * &f.map_vars(&big, &map)));
    let elim = eliminate(&IdealHandle::new(&big, gens)?, &[ring.nvars()])?;
    let gb: Vec<Poly> = elim.gens().iter().map(|g| g.to_ring(ring)).collect::<Result<_>>()?;
    IdealHandle::new(ring, gb)
}

/// `I : f^∞` by iterating `ideal_quotient` until the ideal stabilizes.
pub fn saturate_iterated(ideal: &IdealHandle, f: &Poly) -> Result<IdealHandle> {
    let mut cur = ideal.clone();
    loop {
        let next = ideal_quotient(&cur, f)?;
        if ideal_equal(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

fn homogeneous_pair(ideal: &IdealHandle, f: &Poly) -> bool {
    ideal.is_weighted_homogeneous() && f.is_weighted_homogeneous()
}

/// `I : f^∞`. Monomial `f` is handled one variable at a time, other
/// weighted-homogeneous input through an auxiliary variable, and anything
/// else through `saturate_rabinowitsch`.
pub fn saturate(ideal: &IdealHandle, f: &Poly) -> Result<IdealHandle> {
    if !same_ring(f.ring(), &ideal.ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if !homogeneous_pair(ideal, f) {
        return saturate_rabinowitsch(ideal, f);
    }
    if f.is_monomial() {
        let m = *f.lead_mono().unwrap();
        let mut cur = ideal.clone();
        for v in 0..ideal.ring.nvars() {
            if m.exp(v) > 0 {
                cur = colon_variable(&cur, v, true)?;
            }
        }
        return Ok(cur);
    }
    colon_by_new_variable(ideal, f, true)
}

/// `I : f`.
pub fn ideal_quotient(ideal: &IdealHandle, f: &Poly) -> Result<IdealHandle> {
    if !same_ring(f.ring(), &ideal.ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if homogeneous_pair(ideal, f) {
        if f.is_monomial() && f.lead_mono().unwrap().degree() == 1 {
            let v = f.support()[0];
            return colon_variable(ideal, v, false);
        }
        return colon_by_new_variable(ideal, f, false);
    }
    let principal = IdealHandle::from_polys(&ideal.ring, std::slice::from_ref(f));
    let meet = intersect(ideal, &principal)?;
    let gens = meet
        .gens()
        .iter()
        .map(|g| g.div_exact(f)?.ok_or_else(|| Error::Internal("intersection not divisible".into())))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(&ideal.ring, gens)
}

/// `I ∩ J` by eliminating `w` from `w I + (1 - w) J`.
pub fn intersect(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(IdealHandle::zero(&a.ring));
    }
    let ring = &a.ring;
    let name = fresh_name(ring, "w");
    let (big, ga) = extend_ring(a, &name, 1)?;
    let (_, gb) = extend_ring(b, &name, 1)?;
    let w = Poly::var(&big, ring.nvars());
    let one_minus_w = &Poly::one(&big) - &w;
    let mut gens: Vec<Poly> = ga.iter().map(|g| &w * g).collect();
    gens.extend(gb.iter().map(|g| &one_minus_w * g));
    let elim = eliminate(&IdealHandle::new(&big, gens)?, &[ring.nvars()])?;
    let out: Vec<Poly> = elim.gens().iter().map(|g| g.to_ring(ring)).collect::<Result<_>>()?;
    IdealHandle::new(ring, out)
}

/// Krull dimension of `R/I` and the height of `I`. The unit ideal reports
/// dimension `-1` and height equal to the number of variables.
pub fn dimension_and_height(ideal: &IdealHandle) -> (i64, usize) {
    let n = ideal.ring.nvars();
    if ideal.is_unit() {
        return (-1, n);
    }
    let leads: Vec<Mono> = ideal.gb().iter().map(|g| *g.lead_mono().unwrap()).collect();
    let d = monomial_dimension(&leads, n);
    (d as i64, n - d)
}

/// Largest set of variables containing the support of no generator.
pub(crate) fn monomial_dimension(leads: &[Mono], n: usize) -> usize {
    let mut masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    masks.sort_unstable();
    masks.dedup();
    let mut best = 0;
    for s in 0u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    best
}
