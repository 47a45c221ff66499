use std::sync::Arc;

use super::field::{GFElement, GField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFMatrix {
    field: Arc<GField>,
    rows: usize,
    cols: usize,
    data: Vec<GFElement>,
}

impl GFMatrix {
    pub fn zeros(field: Arc<GField>, rows: usize, cols: usize) -> Self {
        GFMatrix { field, rows, cols, data: vec![GFElement::ZERO; rows * cols] }
    }

    pub fn identity(field: Arc<GField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, GFElement::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<GField>, cols: usize, rows: &[Vec<GFElement>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {} but expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(GFMatrix { field, rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Arc<GField>, rows: usize, columns: &[Vec<GFElement>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {} but expected {rows}",
                    c.len()
                )));
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Arc<GField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> GFElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: GFElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GFElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &GFMatrix) -> Result<GFMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![GFElement::ZERO; other.cols];
            for k in 0..self.cols {
                f.axpy(&mut acc, self.get(i, k), other.row(k));
            }
            out.data[i * other.cols..(i + 1) * other.cols].copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GFElement]) -> Result<Vec<GFElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(GFElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (GFMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            f.scale(&mut self.data[r * cols..(r + 1) * cols], inv);
            let pivot_row: Vec<GFElement> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if !factor.is_zero() {
                    let neg = f.neg(factor);
                    f.axpy(&mut self.data[i * cols..(i + 1) * cols], neg, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// order; each has a 1 in its free column and 0 in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<GFElement>> {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![GFElement::ZERO; self.cols];
                v[free] = GFElement::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[GFElement]) -> Result<Option<Vec<GFElement>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.field.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GFElement::ZERO; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Ok(Some(x))
    }
}

/// Solutions `x in F_q^n` of `M * x^{(p^k)} = 0`, where `x^{(p^k)}` raises
/// every coordinate to the `p^k`-th power.
///
/// The solution set is only an `F_p`-subspace in general, so the system is
/// flattened to `F_p` (each coordinate split into its `s` polynomial-basis
/// coefficients) and an `F_p`-basis is returned, embedded back into `F_q^n`.
pub fn semilinear_kernel(m: &GFMatrix, k: u32) -> Vec<Vec<GFElement>> {
    let f = m.field();
    if f.is_prime_field() {
        return m.kernel();
    }
    let s = f.s() as usize;
    let fp = Arc::new(f.prime_subfield());
    let mut flat = GFMatrix::zeros(fp, m.rows() * s, m.cols() * s);
    for j in 0..m.cols() {
        for t in 0..s {
            let twist = f.frobenius(f.basis_element(t as u32), k);
            for i in 0..m.rows() {
                let v = f.mul(m.get(i, j), twist);
                for (d, c) in f.coeffs(v).into_iter().enumerate() {
                    flat.set(i * s + d, j * s + t, GFElement(c));
                }
            }
        }
    }
    flat.kernel()
        .into_iter()
        .map(|c| {
            (0..m.cols())
                .map(|j| {
                    let digits: Vec<u32> = (0..s).map(|t| c[j * s + t].packed()).collect();
                    f.from_coeffs(&digits)
                })
                .collect()
        })
        .collect()
}
