//! Exact commutative algebra for linearly presented height-two perfect
//! ideals in `k[x, y, z]`.

pub mod error;
pub mod families;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod matforms;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod random;
pub mod rational;
pub mod ring;
pub mod univariate;

pub use error::{Error, ErrorClass, Result};
pub use field::FieldSpec;
pub use poly::Poly;
pub use rational::Rat;
pub use ring::{Mono, MonomialOrder, PolyRing};
