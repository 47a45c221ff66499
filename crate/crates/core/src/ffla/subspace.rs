use std::sync::Arc;

use super::field::{GFElement, GField};
use super::matrix::GFMatrix;

/// A subspace of `F_q^n` held as a reduced row echelon basis, rows sorted
/// by pivot. Two subspaces are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Arc<GField>,
    ambient: usize,
    rows: Vec<Vec<GFElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Arc<GField>, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Arc<GField>, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![GFElement::ZERO; ambient];
                v[i] = GFElement::ONE;
                v
            })
            .collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span<I>(field: Arc<GField>, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<GFElement>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Arc<GField> {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<GFElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the projection onto this subspace along the pivot
    /// coordinates; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &mut [GFElement]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                f.axpy(v, f.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[GFElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates with respect to `basis()`, if `v` lies in the subspace.
    pub fn coords(&self, v: &[GFElement]) -> Option<Vec<GFElement>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Coordinates read off the pivot positions without a membership test.
    pub fn coords_unchecked(&self, v: &[GFElement]) -> Vec<GFElement> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    pub fn combine(&self, coeffs: &[GFElement]) -> Vec<GFElement> {
        let mut out = vec![GFElement::ZERO; self.ambient];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            self.field.axpy(&mut out, c, row);
        }
        out
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<GFElement>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let f = self.field.clone();
        let inv = f.inv(v[pc]);
        f.scale(&mut v, inv);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                f.axpy(row, f.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Linear functionals (as vectors under the standard pairing) vanishing
    /// on this subspace.
    pub fn annihilator(&self) -> Vec<Vec<GFElement>> {
        if self.rows.is_empty() {
            return Subspace::full(self.field.clone(), self.ambient).rows;
        }
        GFMatrix::from_rows(self.field.clone(), self.ambient, &self.rows)
            .expect("rows have ambient length")
            .kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field.clone(), self.ambient);
        }
        let f = &self.field;
        let funcs = other.annihilator();
        if funcs.is_empty() {
            return self.clone();
        }
        // rows: functionals, columns: basis vectors of self
        let mut m = GFMatrix::zeros(f.clone(), funcs.len(), self.dim());
        for (i, phi) in funcs.iter().enumerate() {
            for (j, u) in self.rows.iter().enumerate() {
                let val = phi
                    .iter()
                    .zip(u)
                    .fold(GFElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                m.set(i, j, val);
            }
        }
        Subspace::span(f.clone(), self.ambient, m.kernel().iter().map(|c| self.combine(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_reduced_form() {
        let f = Arc::new(GField::prime(5));
        let e = |n| f.from_int(n);
        let mut s = Subspace::zero(f.clone(), 3);
        assert!(s.insert(vec![e(0), e(2), e(4)]));
        assert!(s.insert(vec![e(1), e(1), e(0)]));
        assert!(!s.insert(vec![e(2), e(4), e(4)]));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.basis()[0][1], GFElement::ZERO);
        assert_eq!(s.coords(&[e(3), e(4), e(2)]).map(|c| c.len()), Some(2));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let f = Arc::new(GField::prime(3));
        let unit = |i: usize| {
            let mut v = vec![GFElement::ZERO; 3];
            v[i] = GFElement::ONE;
            v
        };
        let xy = Subspace::span(f.clone(), 3, [unit(0), unit(1)]);
        let yz = Subspace::span(f.clone(), 3, [unit(1), unit(2)]);
        let y = xy.intersect(&yz);
        assert_eq!(y, Subspace::span(f, 3, [unit(1)]));
        assert_eq!(xy.sum(&yz).dim(), 3);
    }
}
