use std::fmt::Write as _;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ffla::{GFElement, GField, GFMatrix, Subspace};
use crate::group::FiniteGroup;

/// Coordinates of an algebra element with respect to the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElement(pub Vec<GFElement>);

impl Deref for AlgElement {
    type Target = [GFElement];

    fn deref(&self) -> &[GFElement] {
        &self.0
    }
}

impl From<Vec<GFElement>> for AlgElement {
    fn from(v: Vec<GFElement>) -> Self {
        AlgElement(v)
    }
}

/// A finite-dimensional associative algebra given by structure constants
/// `b_i b_j = sum_k c_{ijk} b_k`, stored sparsely per pair `(i, j)`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    field: Arc<GField>,
    dim: usize,
    labels: Vec<String>,
    offsets: Vec<u32>,
    entries: Vec<(u32, GFElement)>,
    unit: Vec<GFElement>,
    commutative: bool,
    integral: bool,
    pub(super) radical: OnceLock<Subspace>,
    pub(super) chain: OnceLock<Vec<Subspace>>,
}

impl StructureAlgebra {
    /// `products[i * dim + j]` lists the nonzero `(k, c_{ijk})`.
    pub fn new(
        field: Arc<GField>,
        labels: Vec<String>,
        products: Vec<Vec<(usize, GFElement)>>,
        unit: Vec<GFElement>,
    ) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} products for dimension {dim}",
                products.len()
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit of length {} for dimension {dim}", unit.len())));
        }
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for mut row in products {
            row.sort_unstable_by_key(|&(k, _)| k);
            let mut merged: Vec<(u32, GFElement)> = Vec::with_capacity(row.len());
            for (k, c) in row {
                if k >= dim {
                    return Err(Error::DimensionMismatch(format!("basis index {k} >= {dim}")));
                }
                match merged.last_mut() {
                    Some((k0, c0)) if *k0 as usize == k => *c0 = field.add(*c0, c),
                    _ => merged.push((k as u32, c)),
                }
            }
            entries.extend(merged.into_iter().filter(|(_, c)| !c.is_zero()));
            offsets.push(entries.len() as u32);
        }
        let mut alg = StructureAlgebra {
            field,
            dim,
            labels,
            offsets,
            entries,
            unit,
            commutative: false,
            integral: false,
            radical: OnceLock::new(),
            chain: OnceLock::new(),
        };
        alg.commutative = (0..dim).all(|i| (0..i).all(|j| alg.product(i, j) == alg.product(j, i)));
        Ok(alg)
    }

    /// Dense constructor: `c[i][j][k] = c_{ijk}`.
    pub fn from_dense(
        field: Arc<GField>,
        labels: Vec<String>,
        c: &[Vec<Vec<GFElement>>],
        unit: Vec<GFElement>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = c.get(i).and_then(|r| r.get(j)).ok_or_else(|| {
                    Error::DimensionMismatch(format!("missing product ({i}, {j})"))
                })?;
                products.push(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k, c)).collect());
            }
        }
        Self::new(field, labels, products, unit)
    }

    /// `F[G]` on the group-element basis.
    pub fn group_algebra(field: Arc<GField>, g: &FiniteGroup) -> Self {
        let n = g.order();
        let labels = g.elements().iter().map(|x| x.to_string()).collect();
        let products = (0..n * n).map(|ij| vec![(g.mul(ij / n, ij % n), GFElement::ONE)]).collect();
        let mut unit = vec![GFElement::ZERO; n];
        unit[0] = GFElement::ONE;
        let mut alg = Self::new(field, labels, products, unit).expect("group tables are well formed");
        alg.integral = true;
        alg
    }

    /// `F[x]/(x^n)` on the basis `1, x, ..., x^{n-1}`.
    pub fn truncated_polynomial(field: Arc<GField>, n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        let products = (0..n * n)
            .map(|ij| {
                let k = ij / n + ij % n;
                if k < n {
                    vec![(k, GFElement::ONE)]
                } else {
                    vec![]
                }
            })
            .collect();
        let mut unit = vec![GFElement::ZERO; n];
        unit[0] = GFElement::ONE;
        let mut alg = Self::new(field, labels, products, unit).expect("well formed");
        alg.integral = true;
        alg
    }

    /// `F^n` with componentwise product.
    pub fn diagonal(field: Arc<GField>, n: usize) -> Self {
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        let products = (0..n * n)
            .map(|ij| if ij / n == ij % n { vec![(ij / n, GFElement::ONE)] } else { vec![] })
            .collect();
        let mut alg = Self::new(field, labels, products, vec![GFElement::ONE; n]).expect("well formed");
        alg.integral = true;
        alg
    }

    /// Marks the structure constants as the reductions of an associative
    /// `Z`-form whose constants are all 0 or 1 (e.g. a group basis).
    pub fn with_integral_form(mut self) -> Result<Self> {
        if self.entries.iter().any(|&(_, c)| c != GFElement::ONE) {
            return Err(Error::Contract("integral form needs 0/1 structure constants".into()));
        }
        self.integral = true;
        Ok(self)
    }

    pub fn field(&self) -> &Arc<GField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[GFElement] {
        &self.unit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Nonzero `(k, c_{ijk})` for the product `b_i b_j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(u32, GFElement)] {
        let ij = i * self.dim + j;
        &self.entries[self.offsets[ij] as usize..self.offsets[ij + 1] as usize]
    }

    pub fn zero(&self) -> Vec<GFElement> {
        vec![GFElement::ZERO; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<GFElement> {
        let mut v = self.zero();
        v[i] = GFElement::ONE;
        v
    }

    pub fn mul(&self, x: &[GFElement], y: &[GFElement]) -> Vec<GFElement> {
        let f = &self.field;
        let mut out = self.zero();
        let ynz: Vec<usize> = (0..self.dim).filter(|&j| !y[j].is_zero()).collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ynz {
                let a = f.mul(xi, y[j]);
                for &(k, c) in self.product(i, j) {
                    let k = k as usize;
                    out[k] = f.add(out[k], f.mul(a, c));
                }
            }
        }
        out
    }

    /// `x * b_j`
    pub fn mul_basis_right(&self, x: &[GFElement], j: usize) -> Vec<GFElement> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(k, c) in self.product(i, j) {
                let k = k as usize;
                out[k] = f.add(out[k], f.mul(xi, c));
            }
        }
        out
    }

    /// `b_i * y`
    pub fn mul_basis_left(&self, i: usize, y: &[GFElement]) -> Vec<GFElement> {
        let f = &self.field;
        let mut out = self.zero();
        for (j, &yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for &(k, c) in self.product(i, j) {
                let k = k as usize;
                out[k] = f.add(out[k], f.mul(yj, c));
            }
        }
        out
    }

    pub fn add(&self, x: &[GFElement], y: &[GFElement]) -> Vec<GFElement> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[GFElement], y: &[GFElement]) -> Vec<GFElement> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, x: &[GFElement], a: GFElement) -> Vec<GFElement> {
        x.iter().map(|&v| self.field.mul(v, a)).collect()
    }

    pub fn pow(&self, x: &[GFElement], mut e: u64) -> Vec<GFElement> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_zero_vec(x: &[GFElement]) -> bool {
        x.iter().all(|c| c.is_zero())
    }

    /// Associativity on all basis triples up to dimension 60; above that on
    /// the triples drawn from an evenly spaced set of 60 basis indices. Also
    /// checks the unit law on every basis element.
    pub fn check_algebra(&self) -> Result<()> {
        let n = self.dim;
        let sample: Vec<usize> = if n <= 60 { (0..n).collect() } else { (0..60).map(|t| t * n / 60).collect() };
        for &i in &sample {
            for &j in &sample {
                let bij = self.mul_basis_right(&self.basis_vector(i), j);
                for &k in &sample {
                    let left = self.mul_basis_right(&bij, k);
                    let right = self.mul_basis_left(i, &self.mul_basis_right(&self.basis_vector(j), k));
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::UnitLaw(i));
            }
        }
        Ok(())
    }

    /// `{z : z b_i = b_i z for all i}`
    pub fn center(&self) -> Subspace {
        if self.commutative {
            return Subspace::full(self.field.clone(), self.dim);
        }
        let n = self.dim;
        let mut constraints = Subspace::zero(self.field.clone(), n);
        for i in 0..n {
            // column j of (R_{b_i} - L_{b_i}) is b_j b_i - b_i b_j
            let cols: Vec<Vec<GFElement>> = (0..n)
                .map(|j| {
                    let bj = self.basis_vector(j);
                    self.sub(&self.mul_basis_right(&bj, i), &self.mul_basis_left(i, &bj))
                })
                .collect();
            for r in 0..n {
                constraints.insert(cols.iter().map(|c| c[r]).collect());
            }
            if constraints.dim() == n {
                break;
            }
        }
        let annihilated = GFMatrix::from_rows(self.field.clone(), n, constraints.basis())
            .expect("rows have length n")
            .kernel();
        Subspace::span(self.field.clone(), n, annihilated)
    }

    /// The algebra with basis the (reduced echelon) basis of `space`, which
    /// must be closed under multiplication and contain `unit`.
    pub fn subalgebra_on(&self, space: &Subspace, unit: &[GFElement]) -> Result<StructureAlgebra> {
        let basis = space.basis();
        let unit_coords = space
            .coords(unit)
            .ok_or_else(|| Error::NotClosed("the unit lies outside the subspace".into()))?;
        let m = basis.len();
        let mut products = Vec::with_capacity(m * m);
        for (a, u) in basis.iter().enumerate() {
            for (b, v) in basis.iter().enumerate() {
                let w = self.mul(u, v);
                let c = space
                    .coords(&w)
                    .ok_or_else(|| Error::NotClosed(format!("product of basis vectors {a} and {b} leaves the subspace")))?;
                products.push(c.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let labels = (0..m).map(|i| format!("v{i}")).collect();
        let alg = StructureAlgebra::new(self.field.clone(), labels, products, unit_coords)?;
        alg.check_algebra()?;
        Ok(alg)
    }

    /// The subalgebra generated by `gens` (and the unit).
    pub fn subalgebra_span(&self, gens: &[Vec<GFElement>]) -> Result<StructureAlgebra> {
        let mut space = Subspace::span(self.field.clone(), self.dim, [self.unit.clone()]);
        let mut frontier: Vec<Vec<GFElement>> = vec![self.unit.clone()];
        for g in gens {
            if space.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        let mut all = frontier.clone();
        while let Some(v) = frontier.pop() {
            let snapshot = all.clone();
            for u in &snapshot {
                for w in [self.mul(u, &v), self.mul(&v, u)] {
                    if space.insert(w.clone()) {
                        frontier.push(w.clone());
                        all.push(w);
                    }
                }
            }
        }
        self.subalgebra_on(&space, &self.unit)
    }

    /// `e A e` with unit `e`.
    pub fn corner(&self, e: &[GFElement]) -> Result<StructureAlgebra> {
        if self.mul(e, e) != e {
            return Err(Error::NotIdempotent);
        }
        let space = Subspace::span(
            self.field.clone(),
            self.dim,
            (0..self.dim).map(|i| {
                let eb = self.mul_basis_right(e, i);
                if self.commutative {
                    eb
                } else {
                    self.mul(&eb, e)
                }
            }),
        );
        self.subalgebra_on(&space, e)
    }

    /// `A / I` on the images of the non-pivot basis vectors of `ideal`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<StructureAlgebra> {
        let n = self.dim;
        for (t, u) in ideal.basis().iter().enumerate() {
            for i in 0..n {
                if !ideal.contains(&self.mul_basis_right(u, i)) || !ideal.contains(&self.mul_basis_left(i, u)) {
                    return Err(Error::NotClosed(format!(
                        "ideal basis vector {t} times basis element {i} leaves the ideal"
                    )));
                }
            }
        }
        let mut is_pivot = vec![false; n];
        for &c in ideal.pivots() {
            is_pivot[c] = true;
        }
        let reps: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let project = |mut v: Vec<GFElement>| {
            ideal.reduce(&mut v);
            reps.iter().map(|&c| v[c]).collect::<Vec<_>>()
        };
        let mut products = Vec::with_capacity(reps.len() * reps.len());
        for &a in &reps {
            for &b in &reps {
                let w = project(self.mul_basis_right(&self.basis_vector(a), b));
                products.push(w.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let labels = reps.iter().map(|&c| format!("[{}]", self.labels[c])).collect();
        let alg = StructureAlgebra::new(self.field.clone(), labels, products, project(self.unit.clone()))?;
        alg.check_algebra()?;
        Ok(alg)
    }

    /// Plain-text listing of the basis and nonzero structure constants.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let f = &self.field;
        let _ = writeln!(s, "algebra of dimension {} over F_{}", self.dim, f.q());
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "b{i} = {l}");
        }
        let unit: Vec<String> = self.unit.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "unit = [{}]", unit.join(", "));
        for i in 0..self.dim {
            for j in 0..self.dim {
                let terms = self.product(i, j);
                if terms.is_empty() {
                    continue;
                }
                let rhs: Vec<String> = terms.iter().map(|(k, c)| format!("{c}*b{k}")).collect();
                let _ = writeln!(s, "b{i}*b{j} = {}", rhs.join(" + "));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::make_field;

    #[test]
    fn dual_numbers_check() {
        let f = make_field(3, 1).unwrap();
        let a = StructureAlgebra::truncated_polynomial(f, 2);
        assert!(a.check_algebra().is_ok());
        assert!(a.is_commutative());
    }

    #[test]
    fn flipped_constant_is_reported() {
        let f = make_field(3, 1).unwrap();
        let n = 3;
        let mut c = vec![vec![vec![GFElement::ZERO; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    c[i][j][i + j] = GFElement::ONE;
                }
            }
        }
        // x * x = 2 x^2, but x^2 * 1 is still x^2
        c[1][1][2] = f.from_int(2);
        let mut unit = vec![GFElement::ZERO; n];
        unit[0] = GFElement::ONE;
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        let a = StructureAlgebra::from_dense(f, labels, &c, unit).unwrap();
        assert!(a.check_algebra().is_ok(), "still associative: a rescaling");
        // break it: x * x^2 = 1 while x^2 * x = 0, so (x x) x != x (x x)
        let mut c2 = c.clone();
        c2[1][2][0] = GFElement::ONE;
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        let unit = a.unit().to_vec();
        let bad = StructureAlgebra::from_dense(a.field().clone(), labels, &c2, unit).unwrap();
        assert_eq!(bad.check_algebra(), Err(Error::NotAssociative(1, 1, 1)));
    }

    #[test]
    fn quotient_of_truncated_polynomial() {
        let f = make_field(5, 1).unwrap();
        let a = StructureAlgebra::truncated_polynomial(f.clone(), 4);
        let i = Subspace::span(f.clone(), 4, [a.basis_vector(2), a.basis_vector(3)]);
        let q = a.quotient(&i).unwrap();
        assert_eq!(q.dim(), 2);
        let x = q.basis_vector(1);
        assert!(StructureAlgebra::is_zero_vec(&q.mul(&x, &x)));
        let bad = Subspace::span(f, 4, [a.basis_vector(1)]);
        assert!(a.quotient(&bad).is_err());
    }

    #[test]
    fn corner_of_diagonal() {
        let f = make_field(3, 1).unwrap();
        let a = StructureAlgebra::diagonal(f, 2);
        let c = a.corner(&a.basis_vector(0)).unwrap();
        assert_eq!(c.dim(), 1);
        let two_e0 = a.add(&a.basis_vector(0), &a.basis_vector(0));
        assert!(matches!(a.corner(&two_e0), Err(Error::NotIdempotent)));
    }

    #[test]
    fn group_algebra_center_is_spanned_by_class_sums() {
        let f = make_field(3, 1).unwrap();
        let g = crate::group::symmetric(3).unwrap();
        let a = StructureAlgebra::group_algebra(f.clone(), &g);
        assert!(!a.is_commutative());
        let z = a.center();
        assert_eq!(z.dim(), 3);
        for c in g.conjugacy_classes() {
            let mut v = a.zero();
            for &x in &c.members {
                v[x] = GFElement::ONE;
            }
            assert!(z.contains(&v));
        }
        let za = a.subalgebra_on(&z, a.unit()).unwrap();
        assert!(za.is_commutative());
    }

    #[test]
    fn dump_is_deterministic() {
        let f = make_field(2, 1).unwrap();
        let a = StructureAlgebra::truncated_polynomial(f, 2);
        let d = a.dump();
        assert_eq!(d, a.dump());
        assert!(d.contains("b0*b1 = 1*b1"));
        assert!(!d.contains("b1*b1"));
    }
}
