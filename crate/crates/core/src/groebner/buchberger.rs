//! Buchberger's algorithm with the Gebauer–Möller criteria and the sugar
//! selection strategy.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::{Mono, PolyRing};

pub(crate) type Terms = Vec<(Mono, Rat)>;

/// `a - c * q * b` for descending term lists.
pub(crate) fn sub_mul(ring: &PolyRing, a: &[(Mono, Rat)], b: &[(Mono, Rat)], c: &Rat, q: &Mono) -> Terms {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let bm = b[j].0.mul(q);
        if i == a.len() {
            out.push((bm, field.neg(&field.mul(c, &b[j].1))));
            j += 1;
            continue;
        }
        match ring.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, field.neg(&field.mul(c, &b[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.sub(&a[i].1, &field.mul(c, &b[j].1));
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_monic(field: FieldSpec, terms: &mut Terms) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = field.inv(lc);
            for (_, c) in terms.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
    }
}

/// Reducers: monic polynomials with their lead monomials and divisibility
/// masks.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a [(Mono, Rat)]>,
    leads: Vec<Mono>,
    masks: Vec<u32>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(basis: &'a [Poly]) -> Reducers<'a> {
        let mut r = Reducers {
            polys: Vec::with_capacity(basis.len()),
            leads: Vec::with_capacity(basis.len()),
            masks: Vec::with_capacity(basis.len()),
        };
        for g in basis {
            if let Some(m) = g.lead_mono() {
                r.polys.push(g.terms());
                r.leads.push(*m);
                r.masks.push(m.support_mask());
            }
        }
        r
    }

    fn find(&self, m: &Mono) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.leads.len()).find(|&k| self.masks[k] & !mask == 0 && self.leads[k].divides(m))
    }
}

/// Full reduction of `p` by monic reducers; returns the remainder.
pub(crate) fn reduce_terms(ring: &PolyRing, mut p: Terms, reducers: &Reducers<'_>) -> Terms {
    let mut i = 0;
    while i < p.len() {
        let m = p[i].0;
        match reducers.find(&m) {
            Some(k) => {
                let q = reducers.leads[k].quotient_of(&m).expect("divides");
                let c = p[i].1.clone();
                let tail = sub_mul(ring, &p[i..], reducers.polys[k], &c, &q);
                p.truncate(i);
                p.extend(tail);
            }
            None => i += 1,
        }
    }
    p
}

struct Entry {
    terms: Terms,
    lead: Mono,
    mask: u32,
    sugar: u32,
    active: bool,
}

enum Work {
    Input(Terms, u32),
    Pair(usize, usize),
}

struct Item {
    work: Work,
    lcm: Mono,
    sugar: u32,
    seq: usize,
}

struct Engine {
    ring: Arc<PolyRing>,
    basis: Vec<Entry>,
    queue: Vec<Item>,
    seq: usize,
}

impl Engine {
    fn wdeg(&self, m: &Mono) -> u32 {
        m.weighted_degree(self.ring.weights())
    }

    fn pair_item(&mut self, i: usize, j: usize) -> Item {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let lcm = a.lead.lcm(&b.lead);
        let w = self.wdeg(&lcm);
        let sugar = (a.sugar + w - self.wdeg(&a.lead)).max(b.sugar + w - self.wdeg(&b.lead));
        self.seq += 1;
        Item {
            work: Work::Pair(i.min(j), i.max(j)),
            lcm,
            sugar,
            seq: self.seq,
        }
    }

    fn pop(&mut self) -> Option<Item> {
        if self.queue.is_empty() {
            return None;
        }
        let ring = &self.ring;
        let mut best = 0;
        for k in 1..self.queue.len() {
            let (a, b) = (&self.queue[k], &self.queue[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                .then_with(|| a.seq.cmp(&b.seq));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.queue.swap_remove(best))
    }

    fn reducers(&self) -> Reducers<'_> {
        let mut r = Reducers {
            polys: Vec::new(),
            leads: Vec::new(),
            masks: Vec::new(),
        };
        for e in self.basis.iter().filter(|e| e.active) {
            r.polys.push(&e.terms);
            r.leads.push(e.lead);
            r.masks.push(e.mask);
        }
        r
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Mono) -> Terms {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let qa = a.lead.quotient_of(lcm).expect("lcm");
        let qb = b.lead.quotient_of(lcm).expect("lcm");
        let a_shift: Terms = a.terms[1..].iter().map(|(m, c)| (m.mul(&qa), c.clone())).collect();
        sub_mul(&self.ring, &a_shift, &b.terms[1..], &Rat::ONE, &qb)
    }

    /// Gebauer–Möller update after adding `h` at index `t`.
    fn update(&mut self, t: usize) {
        let h_lead = self.basis[t].lead;
        // new pairs (i, t)
        let cands: Vec<(usize, Mono, bool)> = (0..t)
            .filter(|&i| self.basis[i].active)
            .map(|i| {
                let l = self.basis[i].lead;
                (i, l.lcm(&h_lead), l.is_coprime(&h_lead))
            })
            .collect();
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        for (k, c) in cands.iter().enumerate() {
            let dominated = |other: &(usize, Mono, bool)| other.1.divides(&c.1);
            let later = cands[k + 1..].iter().any(dominated);
            let earlier = kept.iter().any(dominated);
            if c.2 || (!later && !earlier) {
                kept.push(*c);
            }
        }
        // old pairs: chain criterion
        let basis = &self.basis;
        self.queue.retain(|item| match item.work {
            Work::Input(..) => true,
            Work::Pair(i, j) => {
                !(h_lead.divides(&item.lcm)
                    && basis[i].lead.lcm(&h_lead) != item.lcm
                    && basis[j].lead.lcm(&h_lead) != item.lcm)
            }
        });
        for (i, _, coprime) in kept {
            if !coprime {
                let item = self.pair_item(i, t);
                self.queue.push(item);
            }
        }
        for i in 0..t {
            if self.basis[i].active && h_lead.divides(&self.basis[i].lead) {
                self.basis[i].active = false;
            }
        }
    }

    fn add(&mut self, mut terms: Terms, sugar: u32) {
        make_monic(self.ring.field(), &mut terms);
        let lead = terms[0].0;
        self.basis.push(Entry {
            mask: lead.support_mask(),
            lead,
            terms,
            sugar,
            active: true,
        });
        let t = self.basis.len() - 1;
        self.update(t);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the order of
/// `ring`: monic, interreduced, sorted by ascending lead monomial.
pub(crate) fn reduced_basis(ring: &Arc<PolyRing>, gens: &[Poly]) -> Vec<Poly> {
    let mut eng = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        queue: Vec::new(),
        seq: 0,
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let terms = g.terms().to_vec();
        let sugar = g.weighted_degree().unwrap_or(0);
        eng.seq += 1;
        eng.queue.push(Item {
            lcm: terms[0].0,
            work: Work::Input(terms, sugar),
            sugar,
            seq: eng.seq,
        });
    }
    while let Some(item) = eng.pop() {
        let (raw, sugar) = match item.work {
            Work::Input(t, s) => (t, s),
            Work::Pair(i, j) => (eng.spoly(i, j, &item.lcm), item.sugar),
        };
        let rem = {
            let reducers = eng.reducers();
            reduce_terms(ring, raw, &reducers)
        };
        if rem.is_empty() {
            continue;
        }
        if rem[0].0.is_one() {
            return vec![Poly::one(ring)];
        }
        eng.add(rem, sugar);
    }
    // minimal basis, then interreduce
    let mut minimal: Vec<Poly> = eng
        .basis
        .into_iter()
        .filter(|e| e.active)
        .map(|e| Poly::from_sorted_terms(ring, e.terms))
        .collect();
    minimal.sort_by(|a, b| ring.cmp(a.lead_mono().unwrap(), b.lead_mono().unwrap()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (lead, tail) = minimal[k].terms().split_first().unwrap();
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let reducers = Reducers::new(&others);
        let mut t = vec![lead.clone()];
        t.extend(reduce_terms(ring, tail.to_vec(), &reducers));
        out.push(Poly::from_sorted_terms(ring, t));
    }
    out
}

/// Remainder of `f` under full reduction by a Gröbner basis.
pub(crate) fn normal_form_terms(ring: &Arc<PolyRing>, f: &Poly, gb: &[Poly]) -> Poly {
    let reducers = Reducers::new(gb);
    let mut rem = reduce_terms(ring, f.terms().to_vec(), &reducers);
    rem.retain(|(_, c)| !c.is_zero());
    Poly::from_sorted_terms(ring, rem)
}

/// S-polynomial of two basis elements, unreduced.
pub(crate) fn s_polynomial(ring: &Arc<PolyRing>, f: &Poly, g: &Poly) -> Poly {
    let field = ring.field();
    let (fl, gl) = (f.lead_mono().unwrap(), g.lead_mono().unwrap());
    let lcm = fl.lcm(gl);
    let a = f.mul_term(&fl.quotient_of(&lcm).unwrap(), &field.inv(f.lead_coeff().unwrap()));
    let b = g.mul_term(&gl.quotient_of(&lcm).unwrap(), &field.inv(g.lead_coeff().unwrap()));
    &a - &b
}
