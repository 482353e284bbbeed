//! Dense matrices over the coefficient field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::rational::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl ScalarMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix {
            field,
            rows,
            cols,
            data: vec![Rat::ZERO; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.from_int(1));
        }
        m
    }

    /// Builds from integer rows, mapping entries into the field.
    pub fn from_ints(field: FieldSpec, rows: &[Vec<i64>]) -> ScalarMatrix {
        let r: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        ScalarMatrix::from_rows(field, r)
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Rat>>) -> ScalarMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        ScalarMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows
                .into_iter()
                .flatten()
                .map(|v| field.from_rat(&v).expect("field element"))
                .collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = ScalarMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Row `dst += c * row src`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Rat) {
        let f = self.field;
        for j in 0..self.cols {
            let v = f.add(self.get(dst, j), &f.mul(c, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// Column `dst += c * column src`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Rat) {
        let f = self.field;
        for i in 0..self.rows {
            let v = f.add(self.get(i, dst), &f.mul(c, self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Rat) {
        let f = self.field;
        for j in 0..self.cols {
            let v = f.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &Rat) {
        let f = self.field;
        for i in 0..self.rows {
            let v = f.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = f.neg(m.get(i, c));
                    m.add_row_multiple(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let f = self.field;
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::ZERO; self.cols];
                v[fc] = f.from_int(1);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let f = self.field;
        let mut m = self.clone();
        let mut det = f.from_int(1);
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Rat::ZERO;
            };
            if p != c {
                m.swap_rows(c, p);
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot);
            for i in c + 1..m.rows {
                if !m.get(i, c).is_zero() {
                    let factor = f.neg(&f.mul(m.get(i, c), &inv));
                    m.add_row_multiple(i, c, &factor);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<ScalarMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ScalarMatrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.from_int(1));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ScalarMatrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Coefficient matrix of linear forms: one row per form, one column per
/// ring variable.
pub fn linear_coeff_matrix(forms: &[Poly]) -> Result<ScalarMatrix> {
    let Some(first) = forms.first() else {
        return Err(Error::AllZero);
    };
    let ring = first.ring().clone();
    let mut rows = Vec::with_capacity(forms.len());
    for f in forms {
        if f.ring() != &ring && **f.ring() != *ring {
            return Err(Error::RingMismatch);
        }
        if !f.is_linear_form() {
            return Err(Error::NotLinear(f.to_string()));
        }
        rows.push((0..ring.nvars()).map(|i| f.linear_coeff(i)).collect());
    }
    Ok(ScalarMatrix::from_rows(ring.field(), rows))
}

/// A basis of the k-span of `polys`, in reduced echelon form with respect
/// to the ring's monomial order. Zero input gives an empty list.
pub fn linear_span_basis(polys: &[Poly]) -> Vec<Poly> {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut monos: Vec<crate::ring::Mono> = polys.iter().flat_map(|p| p.terms().iter().map(|t| t.0)).collect();
    monos.sort_by(|a, b| ring.cmp(b, a));
    monos.dedup();
    let index: std::collections::HashMap<crate::ring::Mono, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut m = ScalarMatrix::zeros(ring.field(), polys.len(), monos.len());
    for (i, p) in polys.iter().enumerate() {
        for (mono, c) in p.terms() {
            m.set(i, index[mono], c.clone());
        }
    }
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| {
            let terms = monos
                .iter()
                .enumerate()
                .filter(|(j, _)| !r.get(i, *j).is_zero())
                .map(|(j, mono)| (*mono, r.get(i, j).clone()))
                .collect();
            Poly::from_terms(&ring, terms)
        })
        .collect()
}
