use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, IdealHandle};
use crate::linalg::ScalarMatrix;
use crate::matforms::{minors_ideal, LinearMatrix};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::Mono;

#[derive(Clone, Debug)]
pub enum SyzygyOutcome {
    /// A linear matrix whose maximal minors generate the input ideal.
    Presented(LinearMatrix),
    /// The space of linear syzygies has dimension `nullity`, not `n - 1`,
    /// or its maximal minors do not regenerate the ideal.
    NotLinearlyPresented { nullity: usize },
}

/// Solves `sum_i a_i f_i = 0` for linear forms `a_i` and, when the solution
/// space has dimension `n - 1`, assembles it into an `n x (n-1)` matrix.
pub fn linear_syzygy_matrix(gens: &[Poly]) -> Result<SyzygyOutcome> {
    let gens: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Err(Error::AllZero);
    };
    let ring = first.ring().clone();
    let d = first.degree().unwrap();
    if gens.iter().any(|g| !g.is_homogeneous() || g.degree() != Some(d)) {
        return Err(Error::MixedDegrees);
    }
    let n = gens.len();
    if n < 2 {
        return Ok(SyzygyOutcome::NotLinearlyPresented { nullity: 0 });
    }
    let nv = ring.nvars();
    let monos: Vec<Mono> = ring.monomials_of_degree(d + 1);
    let index = |m: &Mono| monos.iter().position(|x| x == m).expect("degree d+1 monomial");
    // column (i, v) holds the coefficients of x_v f_i
    let mut data = vec![vec![Rat::ZERO; n * nv]; monos.len()];
    for (i, f) in gens.iter().enumerate() {
        for v in 0..nv {
            for (m, c) in f.terms() {
                data[index(&m.mul(&Mono::var(v)))][i * nv + v] = c.clone();
            }
        }
    }
    let kernel = ScalarMatrix::from_rows(ring.field(), data).nullspace();
    if kernel.len() + 1 != n {
        return Ok(SyzygyOutcome::NotLinearlyPresented { nullity: kernel.len() });
    }
    let rows: Vec<Vec<Poly>> = (0..n)
        .map(|i| kernel.iter().map(|k| Poly::linear(&ring, &k[i * nv..(i + 1) * nv])).collect())
        .collect();
    let phi = LinearMatrix::new(&ring, rows)?;
    let target = IdealHandle::new(&ring, gens.into_iter().cloned().collect())?;
    if !ideal_equal(&minors_ideal(&phi, n - 1)?, &target)? {
        return Ok(SyzygyOutcome::NotLinearlyPresented { nullity: kernel.len() });
    }
    Ok(SyzygyOutcome::Presented(phi))
}
