//! 1-genericity of 2-row matrices of linear forms, decided over the
//! algebraic closure by a gcd of binary forms.

use serde::{Deserialize, Serialize};

use super::{all_subsets, mask_indices, minor_at, LinearMatrix};
use crate::error::{Error, Result};
use crate::linalg::ScalarMatrix;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::{MonomialOrder, PolyRing};
use crate::univariate::{binary_form_gcd, binary_form_zeros};

/// `a · M · c = 0` with `a` and `c` nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedZero {
    pub row_combination: Vec<String>,
    pub column_combination: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneGenericity {
    pub one_generic: bool,
    /// Present when a rational generalized zero exists.
    pub witness: Option<GeneralizedZero>,
    /// The gcd of the obstruction minors, as a binary form in `a1, a2`.
    pub gcd: String,
}

/// Coefficient matrix of `a1 * row0 + a2 * row1` at a fixed `(a1, a2)`:
/// one row per ring variable, one column per matrix column.
fn combination_matrix(m: &LinearMatrix, a: (&Rat, &Rat)) -> ScalarMatrix {
    let field = m.ring().field();
    let n = m.ring().nvars();
    let rows = (0..n)
        .map(|v| {
            (0..m.ncols())
                .map(|j| {
                    field.add(
                        &field.mul(a.0, &m.get(0, j).linear_coeff(v)),
                        &field.mul(a.1, &m.get(1, j).linear_coeff(v)),
                    )
                })
                .collect()
        })
        .collect();
    ScalarMatrix::from_rows(field, rows)
}

fn witness_at(m: &LinearMatrix, a: (Rat, Rat)) -> Option<GeneralizedZero> {
    let k = combination_matrix(m, (&a.0, &a.1));
    let c = k.nullspace().into_iter().next()?;
    Some(GeneralizedZero {
        row_combination: vec![a.0.to_string(), a.1.to_string()],
        column_combination: c.iter().map(|v| v.to_string()).collect(),
    })
}

/// A 2-row matrix is 1-generic iff `a · M` has k-independent entries for
/// every nonzero `a` over the algebraic closure, i.e. iff the maximal minors
/// of the symbolic coefficient matrix of `a · M` have no common zero.
pub fn one_generic_test(m: &LinearMatrix) -> Result<OneGenericity> {
    if m.nrows() != 2 {
        return Err(Error::ShapeMismatch(format!("expected 2 rows, got {}", m.nrows())));
    }
    let field = m.ring().field();
    let r = m.ncols();
    let n = m.ring().nvars();
    let one = field.from_int(1);
    if n < r {
        return Ok(OneGenericity {
            one_generic: false,
            witness: witness_at(m, (one, Rat::ZERO)),
            gcd: "0".into(),
        });
    }
    let ab = PolyRing::new(&["a1", "a2"], MonomialOrder::Degrevlex, field)?;
    let a1 = Poly::var(&ab, 0);
    let a2 = Poly::var(&ab, 1);
    let rows: Vec<Vec<Poly>> = (0..n)
        .map(|v| {
            (0..r)
                .map(|j| {
                    a1.scale(&m.get(0, j).linear_coeff(v))
                        .add_scaled(&a2, &m.get(1, j).linear_coeff(v), &crate::ring::Mono::ONE)
                })
                .collect()
        })
        .collect();
    let k = LinearMatrix::new(&ab, rows)?;
    let cols: Vec<usize> = (0..r).collect();
    let mut forms = Vec::new();
    for mask in all_subsets(n, r) {
        let f = minor_at(&k, &mask_indices(mask), &cols)?;
        if !f.is_zero() {
            forms.push(f);
        }
    }
    if forms.is_empty() {
        return Ok(OneGenericity {
            one_generic: false,
            witness: witness_at(m, (one, Rat::ZERO)),
            gcd: "0".into(),
        });
    }
    let g = binary_form_gcd(&forms)?;
    if g.is_constant() {
        return Ok(OneGenericity {
            one_generic: true,
            witness: None,
            gcd: g.to_string(),
        });
    }
    let zeros = binary_form_zeros(&g, (0, 1))?;
    // prefer the root with a2 = 0
    let witness = zeros
        .iter()
        .find(|z| z.1.is_zero())
        .or_else(|| zeros.first())
        .and_then(|z| witness_at(m, z.clone()));
    Ok(OneGenericity {
        one_generic: false,
        witness,
        gcd: g.to_string(),
    })
}
