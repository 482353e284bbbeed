//! Seeded random choices. Everything random in the crate flows from a
//! caller-provided `u64` seed through ChaCha, so runs are reproducible.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::PolyRing;

/// Coefficients of random rational linear forms are drawn from
/// `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 1000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Rat {
    match field {
        FieldSpec::Rational => Rat::from_int(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)),
        FieldSpec::Prime(p) => Rat::from_int(rng.gen_range(0..p) as i64),
    }
}

/// `count` random linear forms in `ring`.
pub fn random_linear_forms(ring: &Arc<PolyRing>, count: usize, seed: u64) -> Vec<Poly> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let cs: Vec<Rat> = (0..ring.nvars())
                .map(|_| random_scalar(ring.field(), &mut r))
                .collect();
            Poly::linear(ring, &cs)
        })
        .collect()
}
