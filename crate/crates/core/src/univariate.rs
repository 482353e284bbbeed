//! Univariate polynomials over the coefficient field and binary forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::Mono;

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: FieldSpec,
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Rat>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::ZERO, |acc, c| f.add(&f.mul(&acc, t), c))
    }

    pub fn monic(&self) -> UPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                UPoly::new(self.field, self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect())
            }
        }
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let f = self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = f.inv(&d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::ZERO; r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = f.mul(&r[top], &lc_inv);
            if !c.is_zero() {
                let shift = top - dd;
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, dc));
                }
                q[shift] = c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(f, q), UPoly::new(f, r))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Distinct roots in the coefficient field, ascending.
    pub fn roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(Error::AllZero);
        }
        match self.field {
            FieldSpec::Rational => self.rational_roots(),
            FieldSpec::Prime(p) => {
                // brute force; the fields in use are small enough
                Ok((0..p as i64)
                    .map(Rat::from_int)
                    .filter(|t| self.eval(t).is_zero())
                    .collect())
            }
        }
    }

    fn rational_roots(&self) -> Result<Vec<Rat>> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < self.coeffs.len() && self.coeffs[start].is_zero() {
            start += 1;
        }
        if start > 0 {
            out.push(Rat::ZERO);
        }
        let rest = &self.coeffs[start..];
        if rest.len() > 1 {
            // clear denominators
            let lcm = rest
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
            let ints: Vec<BigInt> = rest
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect();
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            for p in divisors(&a0)? {
                for q in divisors(&an)? {
                    if p.gcd(&q) != BigInt::one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let cand = Rat::from_big_parts(&p * sign, q.clone());
                        if self.eval(&cand).is_zero() && !out.contains(&cand) {
                            out.push(cand);
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let Some(n) = n.to_u64() else {
        return Err(Error::Unavailable(
            "root search: coefficient too large to factor".into(),
        ));
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// The two variables a collection of forms lives in, by ring index.
fn binary_support(forms: &[Poly]) -> Result<Vec<usize>> {
    let mut vars: Vec<usize> = Vec::new();
    for f in forms {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        for v in f.support() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    if vars.len() > 2 {
        return Err(Error::TooManyVariables);
    }
    vars.sort_unstable();
    Ok(vars)
}

/// Dehomogenization `F(a, 1)` as a univariate polynomial in `a`, together
/// with the power of `b` dividing `F`.
fn dehomogenize(f: &Poly, a: usize, b: usize) -> (UPoly, u32) {
    let d = f.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::ZERO; d + 1];
    let mut b_mult = u32::MAX;
    for (m, c) in f.terms() {
        coeffs[m.exp(a) as usize] = c.clone();
        b_mult = b_mult.min(m.exp(b));
    }
    (UPoly::new(f.field(), coeffs), b_mult)
}

/// Monic gcd of binary forms sharing a ring.
pub fn binary_form_gcd(forms: &[Poly]) -> Result<Poly> {
    let nonzero: Vec<&Poly> = forms.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(Error::AllZero);
    };
    let ring = first.ring().clone();
    let owned: Vec<Poly> = nonzero.iter().map(|f| (*f).clone()).collect();
    let vars = binary_support(&owned)?;
    let field = ring.field();
    match vars.len() {
        0 => Ok(Poly::one(&ring)),
        1 => {
            let v = vars[0];
            let e = owned.iter().map(|f| f.lead_mono().unwrap().exp(v)).min().unwrap();
            Ok(Poly::monomial(&ring, Mono::var(v).pow(e), field.from_int(1)))
        }
        _ => {
            let (a, b) = (vars[0], vars[1]);
            let mut g: Option<UPoly> = None;
            let mut b_mult = u32::MAX;
            for f in &owned {
                let (u, e) = dehomogenize(f, a, b);
                b_mult = b_mult.min(e);
                g = Some(match g {
                    None => u.monic(),
                    Some(g) => g.gcd(&u),
                });
            }
            let g = g.unwrap();
            let dg = g.degree().unwrap_or(0) as u32;
            let terms = g
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let m = Mono::var(a)
                        .pow(i as u32)
                        .mul(&Mono::var(b).pow(dg - i as u32 + b_mult));
                    (m, c.clone())
                })
                .collect();
            Ok(Poly::from_terms(&ring, terms).monic())
        }
    }
}

/// Zeros in P^1 of a nonzero binary form, as coordinates `(a, b)` over the
/// pair of variables `(vars.0, vars.1)`: `(1, 0)` when `b` divides the form,
/// then `(r, 1)` for each root `r` of `F(a, 1)`.
pub fn binary_form_zeros(f: &Poly, vars: (usize, usize)) -> Result<Vec<(Rat, Rat)>> {
    if f.is_zero() {
        return Err(Error::AllZero);
    }
    let support = binary_support(std::slice::from_ref(f))?;
    if support.iter().any(|&v| v != vars.0 && v != vars.1) {
        return Err(Error::TooManyVariables);
    }
    let (u, e) = dehomogenize(f, vars.0, vars.1);
    let mut out = Vec::new();
    if e > 0 {
        out.push((Rat::ONE, Rat::ZERO));
    }
    for r in u.roots()? {
        out.push((r, Rat::ONE));
    }
    Ok(out)
}
