//! Matrices whose entries are linear forms.

mod canonical;
mod generic;
mod points;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg::{linear_span_basis, ScalarMatrix};
use crate::parse::parse_poly;
use crate::poly::{same_ring, Poly};
use crate::rational::Rat;
use crate::ring::PolyRing;

pub use canonical::{canonicalize_chaos_form, is_chaos_canonical};
pub use generic::{one_generic_test, GeneralizedZero, OneGenericity};
pub use points::{linear_prime_of_point, point_of_linear_prime, radical_contains, rational_points, ProjectivePoint};

#[derive(Clone, PartialEq, Eq)]
pub struct LinearMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl LinearMatrix {
    pub fn new(ring: &Arc<PolyRing>, rows: Vec<Vec<Poly>>) -> Result<LinearMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if nrows == 0 || ncols == 0 {
            return Err(Error::ShapeMismatch("matrix must be at least 1x1".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        for e in &entries {
            if !same_ring(e.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !e.is_linear_form() {
                return Err(Error::NotLinear(e.to_string()));
            }
        }
        Ok(LinearMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn parse(ring: &Arc<PolyRing>, rows: &[Vec<String>]) -> Result<LinearMatrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(ring, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearMatrix::new(ring, parsed)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_string()).collect())
            .collect()
    }

    pub fn transpose(&self) -> LinearMatrix {
        let rows = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .collect();
        LinearMatrix::new(&self.ring, rows).expect("transpose keeps shape rules")
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<LinearMatrix> {
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::OutOfRange("submatrix index".into()));
        }
        let out = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        LinearMatrix::new(&self.ring, out)
    }

    /// Entries evaluated at a point.
    pub fn evaluate(&self, point: &[Rat]) -> ScalarMatrix {
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval(point)).collect())
            .collect();
        ScalarMatrix::from_rows(self.ring.field(), rows)
    }

    /// The scalar matrix of coefficients of variable `v`.
    pub fn coefficient_matrix(&self, v: usize) -> ScalarMatrix {
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.linear_coeff(v)).collect())
            .collect();
        ScalarMatrix::from_rows(self.ring.field(), rows)
    }

    /// The same matrix over another ring with the same variable names.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<LinearMatrix> {
        let rows = self
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(|p| p.to_ring(target)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearMatrix::new(target, rows)
    }

    /// `A * self * B` for scalar matrices.
    pub fn scalar_transform(&self, left: &ScalarMatrix, right: &ScalarMatrix) -> Result<LinearMatrix> {
        if left.ncols() != self.rows || right.nrows() != self.cols {
            return Err(Error::ShapeMismatch("scalar transform".into()));
        }
        let field = self.ring.field();
        let one = crate::ring::Mono::ONE;
        let mut mid = vec![Poly::zero(&self.ring); self.rows * right.ncols()];
        for i in 0..self.rows {
            for k in 0..self.cols {
                for j in 0..right.ncols() {
                    let c = right.get(k, j);
                    if !c.is_zero() {
                        let cur = &mid[i * right.ncols() + j];
                        mid[i * right.ncols() + j] = cur.add_scaled(self.get(i, k), c, &one);
                    }
                }
            }
        }
        let mut rows = Vec::with_capacity(left.nrows());
        for i in 0..left.nrows() {
            let mut row = Vec::with_capacity(right.ncols());
            for j in 0..right.ncols() {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.rows {
                    let c = left.get(i, k);
                    if !c.is_zero() {
                        acc = acc.add_scaled(&mid[k * right.ncols() + j], &field.from_rat(c)?, &one);
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        LinearMatrix::new(&self.ring, rows)
    }

    /// Applies the substitution `x_i ↦ sum_k a[i][k] x_k` to every entry.
    pub fn substitute_linear(&self, a: &ScalarMatrix) -> Result<LinearMatrix> {
        let n = self.ring.nvars();
        if a.nrows() != n || a.ncols() != n {
            return Err(Error::ShapeMismatch("coordinate change size".into()));
        }
        let images: Vec<Poly> = (0..n).map(|i| Poly::linear(&self.ring, a.row(i))).collect();
        let rows = self
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(|p| p.substitute(&images)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearMatrix::new(&self.ring, rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

impl fmt::Debug for LinearMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Display for LinearMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Minors with memoization on (row set, column set) bitmasks.
struct MinorCache<'a> {
    m: &'a LinearMatrix,
    memo: HashMap<(u64, u64), Poly>,
}

impl MinorCache<'_> {
    fn minor(&mut self, rows: u64, cols: u64) -> Poly {
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r0 = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r0);
        let ring = self.m.ring.clone();
        let result = if rest == 0 {
            self.m.get(r0, cols.trailing_zeros() as usize).clone()
        } else {
            let mut acc = Poly::zero(&ring);
            let mut sign = 1i64;
            let mut c = cols;
            while c != 0 {
                let j = c.trailing_zeros() as usize;
                c &= c - 1;
                let e = self.m.get(r0, j).clone();
                if !e.is_zero() {
                    let sub = self.minor(rest, cols & !(1 << j));
                    if !sub.is_zero() {
                        let term = &e * &sub;
                        acc = acc.add_scaled(&term, &ring.field().from_int(sign), &crate::ring::Mono::ONE);
                    }
                }
                sign = -sign;
            }
            acc
        };
        self.memo.insert((rows, cols), result.clone());
        result
    }
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, cur | (1 << i), out);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Every `t x t` minor, rows and columns in lexicographic subset order.
pub fn minors(m: &LinearMatrix, t: usize) -> Result<Vec<Poly>> {
    if t == 0 || t > m.rows.min(m.cols) {
        return Err(Error::OutOfRange(format!("minor size {t}")));
    }
    if m.rows > 63 || m.cols > 63 {
        return Err(Error::OutOfRange("matrix too large".into()));
    }
    let mut cache = MinorCache {
        m,
        memo: HashMap::new(),
    };
    let mut out = Vec::new();
    for r in subsets(m.rows, t) {
        for c in subsets(m.cols, t) {
            out.push(cache.minor(r, c));
        }
    }
    Ok(out)
}

/// Determinant of the submatrix on the given rows and columns.
pub fn minor_at(m: &LinearMatrix, rows: &[usize], cols: &[usize]) -> Result<Poly> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::ShapeMismatch("minor indices".into()));
    }
    let sub = m.submatrix(rows, cols)?;
    let k = rows.len();
    let mut cache = MinorCache {
        m: &sub,
        memo: HashMap::new(),
    };
    Ok(cache.minor((1 << k) - 1, (1 << k) - 1))
}

/// `I_t(M)`, generated by a basis of the span of the `t x t` minors.
pub fn minors_ideal(m: &LinearMatrix, t: usize) -> Result<IdealHandle> {
    let all = minors(m, t)?;
    let nonzero: Vec<Poly> = all.into_iter().filter(|p| !p.is_zero()).collect();
    IdealHandle::new(&m.ring, linear_span_basis(&nonzero))
}

/// Signed maximal minors `f_i = (-1)^(i+1) det(φ without row i)` of an
/// `n x (n-1)` matrix, which satisfy `sum_i f_i φ_ij = 0`.
pub fn hilbert_burch_generators(phi: &LinearMatrix) -> Result<Vec<Poly>> {
    let n = phi.rows;
    if phi.cols + 1 != n {
        return Err(Error::ShapeMismatch(format!(
            "expected n x (n-1), got {} x {}",
            phi.rows, phi.cols
        )));
    }
    let mut cache = MinorCache {
        m: phi,
        memo: HashMap::new(),
    };
    let all_rows: u64 = (1 << n) - 1;
    let all_cols: u64 = (1 << phi.cols) - 1;
    let field = phi.ring.field();
    Ok((0..n)
        .map(|i| {
            let d = cache.minor(all_rows & !(1 << i), all_cols);
            if i % 2 == 0 {
                d
            } else {
                d.scale(&field.from_int(-1))
            }
        })
        .collect())
}

/// Row vector times matrix: `sum_i v_i M_ij` for each column.
pub fn row_times(v: &[Poly], m: &LinearMatrix) -> Result<Vec<Poly>> {
    if v.len() != m.rows {
        return Err(Error::ShapeMismatch("row vector length".into()));
    }
    let ring = v.first().map(|p| p.ring().clone()).unwrap_or_else(|| m.ring.clone());
    let mut out = Vec::with_capacity(m.cols);
    for j in 0..m.cols {
        let mut acc = Poly::zero(&ring);
        for (i, vi) in v.iter().enumerate() {
            let e = m.get(i, j).to_ring(&ring)?;
            acc = &acc + &(vi * &e);
        }
        out.push(acc);
    }
    Ok(out)
}

/// `GL_3 x GL_n x GL_(n-1)`: `φ ↦ row_op · φ(coord_change · x) · col_op`,
/// where `φ(A x)` substitutes `x_i ↦ sum_k A[i][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationAction {
    pub coord_change: ScalarMatrix,
    pub row_op: ScalarMatrix,
    pub col_op: ScalarMatrix,
}

impl ConjugationAction {
    pub fn identity(ring: &PolyRing, rows: usize, cols: usize) -> ConjugationAction {
        let f = ring.field();
        ConjugationAction {
            coord_change: ScalarMatrix::identity(f, ring.nvars()),
            row_op: ScalarMatrix::identity(f, rows),
            col_op: ScalarMatrix::identity(f, cols),
        }
    }

    pub fn inverse(&self) -> Result<ConjugationAction> {
        Ok(ConjugationAction {
            coord_change: self
                .coord_change
                .inverse()
                .ok_or(Error::NotInvertibleAction("coordinate change"))?,
            row_op: self.row_op.inverse().ok_or(Error::NotInvertibleAction("row operation"))?,
            col_op: self.col_op.inverse().ok_or(Error::NotInvertibleAction("column operation"))?,
        })
    }

    /// Serializable form: three lists of rows of printed scalars.
    pub fn to_strings(&self) -> ActionStrings {
        let f = |m: &ScalarMatrix| {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect()
        };
        ActionStrings {
            coord_change: f(&self.coord_change),
            row_op: f(&self.row_op),
            col_op: f(&self.col_op),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionStrings {
    pub coord_change: Vec<Vec<String>>,
    pub row_op: Vec<Vec<String>>,
    pub col_op: Vec<Vec<String>>,
}

pub fn conjugate(m: &LinearMatrix, action: &ConjugationAction) -> Result<LinearMatrix> {
    if !action.coord_change.is_invertible() {
        return Err(Error::NotInvertibleAction("coordinate change"));
    }
    if !action.row_op.is_invertible() {
        return Err(Error::NotInvertibleAction("row operation"));
    }
    if !action.col_op.is_invertible() {
        return Err(Error::NotInvertibleAction("column operation"));
    }
    m.substitute_linear(&action.coord_change)?
        .scalar_transform(&action.row_op, &action.col_op)
}

/// Rank of `M` evaluated at a point of projective space.
pub fn rank_at_point(m: &LinearMatrix, point: &[Rat]) -> Result<usize> {
    if point.len() != m.ring.nvars() {
        return Err(Error::ShapeMismatch("point dimension".into()));
    }
    if point.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroPoint);
    }
    Ok(m.evaluate(point).rank())
}

/// Structured matrices over a ring of variables `t_0, t_1, ...` given by
/// index.
#[derive(Clone, Debug)]
pub enum StructuredKind {
    /// `[[v_0 .. v_(m-3)], [v_2 .. v_(m-1)]]`.
    Catalecticant2Step,
    /// `[[v_0 .. v_(m-2)], [v_1 .. v_(m-1)]]`.
    Hankel,
    /// A Hankel block with the column `(a, b)` in front.
    ScrollBlock(Poly, Poly),
}

pub fn structured_matrix(ring: &Arc<PolyRing>, kind: &StructuredKind, vars: &[usize]) -> Result<LinearMatrix> {
    if vars.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::OutOfRange("variable index".into()));
    }
    let v = |i: usize| Poly::var(ring, vars[i]);
    let m = vars.len();
    match kind {
        StructuredKind::Catalecticant2Step => {
            if m < 3 {
                return Err(Error::OutOfRange("catalecticant needs at least 3 variables".into()));
            }
            let top = (0..m - 2).map(v).collect();
            let bottom = (2..m).map(v).collect();
            LinearMatrix::new(ring, vec![top, bottom])
        }
        StructuredKind::Hankel => {
            if m < 2 {
                return Err(Error::OutOfRange("Hankel block needs at least 2 variables".into()));
            }
            LinearMatrix::new(ring, vec![(0..m - 1).map(v).collect(), (1..m).map(v).collect()])
        }
        StructuredKind::ScrollBlock(a, b) => {
            if m < 2 {
                return Err(Error::OutOfRange("scroll block needs at least 2 variables".into()));
            }
            let mut top = vec![a.clone()];
            top.extend((0..m - 1).map(v));
            let mut bottom = vec![b.clone()];
            bottom.extend((1..m).map(v));
            LinearMatrix::new(ring, vec![top, bottom])
        }
    }
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    mask_to_indices(mask)
}

pub(crate) fn all_subsets(n: usize, k: usize) -> Vec<u64> {
    subsets(n, k)
}

#[cfg(test)]
mod tests;
