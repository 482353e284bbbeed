//! Polynomial rings, monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Upper bound on the number of ring variables; monomials are fixed-size
/// exponent arrays so they stay `Copy`.
pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Mono {
    pub const ONE: Mono = Mono {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Mono::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Mono) -> Option<Mono> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut m = Mono::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut m = Mono::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Mono {
        let mut m = Mono::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = u16::try_from(self.exps[i] as u32 * k).expect("exponent overflow");
        }
        m.deg = self.deg * k;
        m
    }

    /// Bitmask of the variables with nonzero exponent.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Exponent of variable `i` removed entirely.
    pub fn without_var(&self, i: usize) -> Mono {
        let mut m = *self;
        m.deg -= m.exps[i] as u32;
        m.exps[i] = 0;
        m
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        weights
            .iter()
            .zip(&self.exps)
            .map(|(w, e)| w * *e as u32)
            .sum()
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "Mono{:?}", &self.exps[..last])
    }
}

/// Global monomial orders. `Block(k)` compares the first `k` variables by
/// degrevlex and breaks ties by degrevlex on the rest; it is an elimination
/// order for the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Degrevlex,
    Lex,
    Block(usize),
}

#[inline]
fn degrevlex_range(a: &Mono, b: &Mono, lo: usize, hi: usize, w: Option<&[u32]>) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for i in lo..hi {
        let wi = w.map_or(1, |w| w[i]);
        da += wi * a.exps[i] as u32;
        db += wi * b.exps[i] as u32;
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono, nvars: usize) -> Ordering {
        self.cmp_weighted(a, b, nvars, None)
    }

    /// Degree comparisons use `weights` when given; lex ignores them.
    #[inline]
    pub fn cmp_weighted(&self, a: &Mono, b: &Mono, nvars: usize, weights: Option<&[u32]>) -> Ordering {
        match *self {
            MonomialOrder::Degrevlex if weights.is_some() => degrevlex_range(a, b, 0, nvars, weights),
            MonomialOrder::Degrevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..nvars).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps[..nvars].cmp(&b.exps[..nvars]),
            MonomialOrder::Block(k) => degrevlex_range(a, b, 0, k, weights)
                .then_with(|| degrevlex_range(a, b, k, nvars, weights)),
        }
    }
}

/// `k[vars]` with a fixed monomial order. Variable weights define the grading
/// used by the sugar strategy and by weighted homogeneity; the degree-based
/// orders compare weighted degrees first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
    field: FieldSpec,
    weights: Vec<u32>,
    unit_weights: bool,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        vars: &[S],
        order: MonomialOrder,
        field: FieldSpec,
    ) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.len() > MAX_VARS {
            return Err(Error::RingTooLarge(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::OutOfRange(format!("block split {k}")));
            }
        }
        let weights = vec![1; vars.len()];
        Ok(Arc::new(PolyRing {
            vars,
            order,
            field,
            weights,
            unit_weights: true,
        }))
    }

    /// `k[x, y, z]` with degrevlex.
    pub fn xyz(field: FieldSpec) -> Arc<PolyRing> {
        PolyRing::new(&["x", "y", "z"], MonomialOrder::Degrevlex, field).expect("valid ring")
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Arc<PolyRing> {
        assert_eq!(weights.len(), self.vars.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(PolyRing {
            unit_weights: weights.iter().all(|&w| w == 1),
            weights,
            ..self.clone()
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        if self.unit_weights {
            self.order.cmp(a, b, self.vars.len())
        } else {
            self.order.cmp_weighted(a, b, self.vars.len(), Some(&self.weights))
        }
    }

    pub fn has_unit_weights(&self) -> bool {
        self.unit_weights
    }

    /// Same variables, field and weights (the order may differ).
    pub fn same_space(&self, other: &PolyRing) -> bool {
        self.vars == other.vars && self.field == other.field
    }

    /// All monomials of total degree `d`, in descending ring order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Mono> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Mono>) {
            let n = exps.len();
            if i + 1 == n {
                exps[i] = left;
                out.push(Mono::from_exps(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Mono::ONE);
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    pub fn format_mono(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(v.clone()),
                e => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}
