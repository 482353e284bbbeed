//! Coefficient fields: the rationals, or a prime field `Z/p`.
//!
//! Elements of both fields are carried as [`Rat`]. In prime mode every value
//! is a canonical residue `Rat::Small(v, 1)` with `0 <= v < p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn residue(v: &Rat, p: u64) -> i64 {
    match v {
        Rat::Small(n, 1) => n.rem_euclid(p as i64),
        _ => unreachable!("prime-field element must be a canonical residue"),
    }
}

fn pow_mod(mut b: u128, mut e: u64, p: u128) -> u128 {
    let mut acc = 1u128;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl FieldSpec {
    /// Validated prime field. Characteristic 2 is rejected since several
    /// sign conventions collapse there.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p == 2 || !is_prime(p) || p >= (1 << 62) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rational)
    }

    /// Maps a rational number into the field.
    pub fn from_rat(&self, v: &Rat) -> Result<Rat> {
        match self {
            FieldSpec::Rational => Ok(v.clone()),
            FieldSpec::Prime(p) => {
                let pb = num_bigint::BigInt::from(*p);
                let n = v.numer() % &pb;
                let d = v.denom() % &pb;
                let n: i64 = (((n + &pb) % &pb).try_into()).expect("residue fits");
                let d: i64 = (((d + &pb) % &pb).try_into()).expect("residue fits");
                if d == 0 {
                    return Err(Error::NotInvertible(v.to_string()));
                }
                let num = Rat::Small(n, 1);
                Ok(self.div(&num, &Rat::Small(d, 1)))
            }
        }
    }

    pub fn from_int(&self, v: i64) -> Rat {
        match self {
            FieldSpec::Rational => Rat::from_int(v),
            FieldSpec::Prime(p) => Rat::Small(v.rem_euclid(*p as i64), 1),
        }
    }

    pub fn add(&self, a: &Rat, b: &Rat) -> Rat {
        match self {
            FieldSpec::Rational => a.add(b),
            FieldSpec::Prime(p) => {
                let s = (residue(a, *p) as i128 + residue(b, *p) as i128) % *p as i128;
                Rat::Small(s as i64, 1)
            }
        }
    }

    pub fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Rat) -> Rat {
        match self {
            FieldSpec::Rational => a.neg(),
            FieldSpec::Prime(p) => {
                let r = residue(a, *p);
                Rat::Small(if r == 0 { 0 } else { *p as i64 - r }, 1)
            }
        }
    }

    pub fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        match self {
            FieldSpec::Rational => a.mul(b),
            FieldSpec::Prime(p) => {
                let s = (residue(a, *p) as i128 * residue(b, *p) as i128) % *p as i128;
                Rat::Small(s as i64, 1)
            }
        }
    }

    pub fn inv(&self, a: &Rat) -> Rat {
        match self {
            FieldSpec::Rational => a.inv(),
            FieldSpec::Prime(p) => {
                let r = residue(a, *p);
                assert!(r != 0, "inverse of zero");
                Rat::Small(pow_mod(r as u128, p - 2, *p as u128) as i64, 1)
            }
        }
    }

    pub fn div(&self, a: &Rat, b: &Rat) -> Rat {
        self.mul(a, &self.inv(b))
    }
}
