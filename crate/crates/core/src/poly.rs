//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::rational::Rat;
use crate::ring::{Mono, PolyRing};

/// A polynomial with terms kept strictly descending in the ring order and
/// no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Mono, Rat)>,
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rat) -> Poly {
        Poly::monomial(ring, Mono::ONE, c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, ring.field().from_int(1))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Mono, c: Rat) -> Poly {
        let c = ring.field().from_rat(&c).expect("constant is a field element");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Poly {
        assert!(i < ring.nvars(), "variable index out of range");
        Poly::monomial(ring, Mono::var(i), Rat::ONE)
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Option<Poly> {
        ring.var_index(name).map(|i| Poly::var(ring, i))
    }

    /// Linear form `sum c_i * var_i` from a coefficient vector.
    pub fn linear(ring: &Arc<PolyRing>, coeffs: &[Rat]) -> Poly {
        assert_eq!(coeffs.len(), ring.nvars());
        Poly::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Mono::var(i), c.clone()))
                .collect(),
        )
    }

    /// Canonicalizes arbitrary terms: combines duplicates, drops zeros and
    /// maps coefficients into the field.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Mono, Rat)>) -> Poly {
        let field = ring.field();
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            let c = field.from_rat(&c).expect("coefficient must be a field element");
            let e = acc.entry(m).or_insert(Rat::ZERO);
            *e = field.add(e, &c);
        }
        Poly::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<PolyRing>, acc: HashMap<Mono, Rat>) -> Poly {
        let mut terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted descending with canonical nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Mono, Rat)>) -> Poly {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rat)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn lead_mono(&self) -> Option<&Mono> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or(Rat::ZERO)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Maximal weighted degree under the ring's grading.
    pub fn weighted_degree(&self) -> Option<u32> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.weighted_degree(w)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        let w = self.ring.weights();
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(w));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True for the zero polynomial and for nonzero linear forms.
    pub fn is_linear_form(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Indices of the variables occurring in `self`.
    pub fn support(&self) -> Vec<usize> {
        let mask = self.terms.iter().fold(0u32, |a, (m, _)| a | m.support_mask());
        (0..self.ring.nvars()).filter(|i| mask & (1 << i) != 0).collect()
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "arithmetic across different rings"
        );
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.add_scaled(other, &Rat::ONE, &Mono::ONE))
    }

    /// `self + c * m * other`, by a single merge.
    pub fn add_scaled(&self, other: &Poly, c: &Rat, m: &Mono) -> Poly {
        self.check_ring(other);
        if c.is_zero() {
            return self.clone();
        }
        let field = self.field();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, field.mul(c, &b[j].1)));
                j += 1;
                continue;
            }
            match ring.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, field.mul(c, &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        let field = self.field();
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Poly {
        let field = self.field();
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to leading coefficient 1. The zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&self.field().inv(c)),
        }
    }

    /// Canonical representative of the line through `self`: over the
    /// rationals, integer coefficients with content removed and a positive
    /// leading coefficient; over a prime field, monic.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() || !self.field().is_rational() {
            return self.monic();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            let d = c.denom();
            den = &den / num_integer::gcd(den.clone(), d.clone()) * d;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            g = num_integer::gcd(g, v);
        }
        let mut scale = Rat::from_big_parts(den, g);
        if self.lead_coeff().unwrap().is_negative() {
            scale = scale.neg();
        }
        self.scale(&scale)
    }

    /// Evaluates at a point given in field coordinates.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.field();
        let mut acc = Rat::ZERO;
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    v = field.mul(&v, p);
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Substitution homomorphism: variable `i` goes to `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ImageCountMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut acc = Poly::zero(&target);
        let field = target.field();
        for (m, c) in &self.terms {
            let c = field.from_rat(c)?;
            let mut term = Poly::constant(&target, c);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if e > 0 {
                    term = &term * &pw[e];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Moves `self` into `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for i in 0..n {
                    e[var_map[i]] += m.exp(i);
                }
                (Mono::from_exps(&e), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Moves `self` into `target`, matching variables by name. Variables
    /// that do not occur in `self` need not exist in `target`.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Poly> {
        if same_ring(&self.ring, target) {
            return Ok(Poly {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        if self.field() != target.field() && !self.field().is_rational() {
            return Err(Error::RingMismatch);
        }
        let used = self.support();
        let mut var_map = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            match target.var_index(v) {
                Some(j) => var_map.push(j),
                None if used.contains(&i) => {
                    return Err(Error::UnknownVariable {
                        name: v.clone(),
                        pos: 0,
                    })
                }
                None => var_map.push(0),
            }
        }
        Ok(self.map_vars(target, &var_map))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !same_ring(&self.ring, &divisor.ring) {
            return Err(Error::RingMismatch);
        }
        let field = self.field();
        let (lm, lc) = (&divisor.terms[0].0, &divisor.terms[0].1);
        let lc_inv = field.inv(lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            match lm.quotient_of(&m) {
                Some(q) => {
                    let qc = field.mul(&c, &lc_inv);
                    rem = rem.add_scaled(divisor, &field.neg(&qc), &q);
                    quot.push((q, qc));
                }
                None => return Ok(None),
            }
        }
        Ok(Some(Poly::from_sorted_terms(&self.ring, quot)))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Coefficient of variable `i` in a linear form.
    pub fn linear_coeff(&self, i: usize) -> Rat {
        self.coeff(&Mono::var(i))
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.add_scaled(rhs, &Rat::ONE, &Mono::ONE)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let m1 = self.field().from_int(-1);
        self.add_scaled(rhs, &m1, &Mono::ONE)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&self.field().from_int(-1))
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let field = self.field();
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = acc.entry(a.mul(b)).or_insert(Rat::ZERO);
                *e = field.add(e, &field.mul(ca, cb));
            }
        }
        Poly::from_map(&self.ring, acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            // print prime-field residues in the symmetric range
            let c = match field {
                FieldSpec::Prime(p) => {
                    let v = match c {
                        Rat::Small(v, _) => *v,
                        _ => unreachable!(),
                    };
                    if v > (p as i64) / 2 {
                        Rat::from_int(v - p as i64)
                    } else {
                        c.clone()
                    }
                }
                FieldSpec::Rational => c.clone(),
            };
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_mono(m))?;
            } else {
                write!(f, "{}*{}", abs, self.ring.format_mono(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Integer content of a rational polynomial, used for reporting sizes.
pub fn max_coeff_bits(p: &Poly) -> u64 {
    p.terms()
        .iter()
        .map(|(_, c)| c.numer().abs().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::MonomialOrder;
    use proptest::prelude::*;

    fn r3() -> Arc<PolyRing> {
        PolyRing::xyz(FieldSpec::Rational)
    }

    #[test]
    fn substitution_examples() {
        let r = r3();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let swap = [p("y"), p("x"), p("z")];
        assert_eq!(p("x*y").substitute(&swap).unwrap(), p("x*y"));
        let shift = [p("x+z"), p("y"), p("z")];
        assert_eq!(p("x^2").substitute(&shift).unwrap(), p("x^2+2*x*z+z^2"));
        assert!(matches!(
            p("x").substitute(&[p("x")]),
            Err(Error::ImageCountMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn monomial_relation_maps_to_zero() {
        let s = PolyRing::new(&["t1", "t2", "t3", "t4"], MonomialOrder::Degrevlex, FieldSpec::Rational).unwrap();
        let r = r3();
        let f = parse_poly(&s, "t1*t4 - t3^2").unwrap();
        let images: Vec<Poly> = ["y^2*z", "x*y^2", "y*z^2", "z^3"]
            .iter()
            .map(|t| parse_poly(&r, t).unwrap())
            .collect();
        assert!(f.substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn primitive_normalization() {
        let r = r3();
        let f = parse_poly(&r, "-2/3*x + 4/9*y").unwrap();
        assert_eq!(f.primitive(), parse_poly(&r, "3*x - 2*y").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = r3();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        assert_eq!(p("x^2 - y^2").div_exact(&p("x+y")).unwrap(), Some(p("x-y")));
        assert_eq!(p("x^2 + y^2").div_exact(&p("x+y")).unwrap(), None);
        assert_eq!(p("x").div_exact(&Poly::zero(&r)), Err(Error::ZeroDivisor));
    }

    fn arb_hom(deg: u32) -> impl Strategy<Value = Poly> {
        let r = r3();
        let mons = r.monomials_of_degree(deg);
        proptest::collection::vec(-5i64..=5, mons.len()).prop_map(move |cs| {
            Poly::from_terms(
                &r,
                mons.iter().zip(cs).map(|(m, c)| (*m, Rat::from_int(c))).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_hom(2), g in arb_hom(2), h in arb_hom(1)) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            if !f.is_zero() && !h.is_zero() {
                prop_assert_eq!((&f * &h).degree(), Some(3));
            }
        }
    }
}
