//! Random structure-constant algebras with known radical data, shared by
//! the oracle tests and the acceptance runner.
#![allow(dead_code)]

use std::sync::Arc;

use blockloewy::algebra::StructureAlgebra;
use blockloewy::ffla::{GFElement, GFMatrix, GField};
use rand::Rng;

pub type Table = Vec<Vec<Vec<GFElement>>>;

/// Direct factors with a known Loewy layer sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Field,
    /// `F[x]/(x^k)`.
    Truncated(usize),
    /// `F[x, y]/(x^2, xy, y^2)`.
    SquareZero,
    /// `F_{q^2}` viewed over `F_q`.
    Quadratic,
    /// Upper triangular 2x2 matrices.
    Triangular,
}

impl Component {
    pub fn dim(self) -> usize {
        match self {
            Component::Field => 1,
            Component::Truncated(k) => k,
            Component::SquareZero | Component::Triangular => 3,
            Component::Quadratic => 2,
        }
    }

    pub fn codims(self) -> Vec<usize> {
        match self {
            Component::Field => vec![1],
            Component::Truncated(k) => vec![1; k],
            Component::SquareZero => vec![1, 2],
            Component::Quadratic => vec![2],
            Component::Triangular => vec![2, 1],
        }
    }

    pub fn is_commutative(self) -> bool {
        self != Component::Triangular
    }

    pub fn is_local(self) -> bool {
        self != Component::Triangular
    }

    fn table(self, f: &GField) -> Table {
        let n = self.dim();
        let mut t = vec![vec![vec![GFElement::ZERO; n]; n]; n];
        match self {
            Component::Field => t[0][0][0] = GFElement::ONE,
            Component::Truncated(k) => {
                for i in 0..k {
                    for j in 0..k - i {
                        t[i][j][i + j] = GFElement::ONE;
                    }
                }
            }
            Component::SquareZero => {
                for i in 0..3 {
                    t[0][i][i] = GFElement::ONE;
                    t[i][0][i] = GFElement::ONE;
                }
            }
            Component::Quadratic => {
                // w^2 = -a w - b for x^2 + a x + b without roots
                let (a, b) = irreducible_quadratic(f);
                t[0][0][0] = GFElement::ONE;
                t[0][1][1] = GFElement::ONE;
                t[1][0][1] = GFElement::ONE;
                t[1][1] = vec![f.neg(b), f.neg(a)];
            }
            Component::Triangular => {
                // basis e11, e12, e22
                t[0][0][0] = GFElement::ONE;
                t[0][1][1] = GFElement::ONE;
                t[1][2][1] = GFElement::ONE;
                t[2][2][2] = GFElement::ONE;
            }
        }
        t
    }

    fn unit(self) -> Vec<GFElement> {
        match self {
            Component::Triangular => vec![GFElement::ONE, GFElement::ZERO, GFElement::ONE],
            c => {
                let mut u = vec![GFElement::ZERO; c.dim()];
                u[0] = GFElement::ONE;
                u
            }
        }
    }
}

pub fn irreducible_quadratic(f: &GField) -> (GFElement, GFElement) {
    for a in f.elements() {
        for b in f.elements() {
            if f.elements().all(|x| !f.add(f.add(f.mul(x, x), f.mul(a, x)), b).is_zero()) {
                return (a, b);
            }
        }
    }
    unreachable!("every finite field has an irreducible quadratic")
}

/// A product of components in a scrambled basis, with its expected layers.
pub struct RandomAlgebra {
    pub algebra: StructureAlgebra,
    pub components: Vec<Component>,
}

impl RandomAlgebra {
    pub fn expected_codims(&self) -> Vec<usize> {
        let ll = self.components.iter().map(|c| c.codims().len()).max().unwrap_or(0);
        (0..ll).map(|n| self.components.iter().map(|c| c.codims().get(n).copied().unwrap_or(0)).sum()).collect()
    }

    pub fn expected_radical_dim(&self) -> usize {
        self.algebra.dim() - self.expected_codims().first().copied().unwrap_or(0)
    }

    pub fn is_commutative(&self) -> bool {
        self.components.iter().all(|c| c.is_commutative())
    }
}

fn random_element<R: Rng>(f: &GField, rng: &mut R) -> GFElement {
    f.from_packed(rng.gen_range(0..f.q()) as u32)
}

pub fn random_invertible<R: Rng>(f: &Arc<GField>, n: usize, rng: &mut R) -> GFMatrix {
    loop {
        let rows: Vec<Vec<GFElement>> = (0..n).map(|_| (0..n).map(|_| random_element(f, rng)).collect()).collect();
        let m = GFMatrix::from_rows(f.clone(), n, &rows).unwrap();
        if m.rank() == n {
            return m;
        }
    }
}

/// Rewrites a table in the basis given by the columns of `p`.
pub fn change_basis(f: &Arc<GField>, t: &Table, unit: &[GFElement], p: &GFMatrix) -> (Table, Vec<GFElement>) {
    let n = t.len();
    let col = |j: usize| (0..n).map(|i| p.get(i, j)).collect::<Vec<_>>();
    let mul = |x: &[GFElement], y: &[GFElement]| {
        let mut out = vec![GFElement::ZERO; n];
        for i in 0..n {
            for j in 0..n {
                let c = f.mul(x[i], y[j]);
                if !c.is_zero() {
                    f.axpy(&mut out, c, &t[i][j]);
                }
            }
        }
        out
    };
    let solve = |v: &[GFElement]| p.solve(v).unwrap().expect("invertible");
    let cols: Vec<Vec<GFElement>> = (0..n).map(col).collect();
    let table = (0..n).map(|i| (0..n).map(|j| solve(&mul(&cols[i], &cols[j]))).collect()).collect();
    (table, solve(unit))
}

pub fn product_table(f: &GField, comps: &[Component]) -> (Table, Vec<GFElement>) {
    let n: usize = comps.iter().map(|c| c.dim()).sum();
    let mut t = vec![vec![vec![GFElement::ZERO; n]; n]; n];
    let mut unit = vec![GFElement::ZERO; n];
    let mut off = 0;
    for c in comps {
        let ct = c.table(f);
        let d = c.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    t[off + i][off + j][off + k] = ct[i][j][k];
                }
            }
        }
        unit[off..off + d].copy_from_slice(&c.unit());
        off += d;
    }
    (t, unit)
}

pub fn build(f: &Arc<GField>, t: &Table, unit: Vec<GFElement>) -> StructureAlgebra {
    let labels = (0..t.len()).map(|i| format!("b{i}")).collect();
    StructureAlgebra::from_dense(f.clone(), labels, t, unit).unwrap()
}

/// Random components of total dimension `1..=max_dim` in a random basis.
pub fn random_algebra<R: Rng>(f: &Arc<GField>, max_dim: usize, commutative: bool, rng: &mut R) -> RandomAlgebra {
    let target = rng.gen_range(1..=max_dim);
    let mut comps = Vec::new();
    let mut used = 0;
    while used < target {
        let room = target - used;
        let c = match rng.gen_range(0..5) {
            0 => Component::Field,
            1 => Component::Truncated(rng.gen_range(1..=room)),
            2 if room >= 3 => Component::SquareZero,
            3 if room >= 2 => Component::Quadratic,
            4 if room >= 3 && !commutative => Component::Triangular,
            _ => Component::Field,
        };
        used += c.dim();
        comps.push(c);
    }
    let (t, unit) = product_table(f, &comps);
    let p = random_invertible(f, t.len(), rng);
    let (t, unit) = change_basis(f, &t, &unit, &p);
    RandomAlgebra { algebra: build(f, &t, unit), components: comps }
}

/// Every element of `a`, as coordinate vectors.
pub fn all_elements(a: &StructureAlgebra) -> impl Iterator<Item = Vec<GFElement>> + '_ {
    let f = a.field().clone();
    let q = f.q();
    let n = a.dim();
    (0..q.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = f.from_packed((code % q) as u32);
                code /= q;
                c
            })
            .collect()
    })
}

/// Nilpotent elements found by exhaustive enumeration (`x^dim = 0`).
pub fn nilpotent_elements(a: &StructureAlgebra) -> Vec<Vec<GFElement>> {
    let n = a.dim() as u64;
    all_elements(a).filter(|x| StructureAlgebra::is_zero_vec(&a.pow(x, n))).collect()
}
