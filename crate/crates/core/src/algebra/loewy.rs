use serde::{Deserialize, Serialize};

use super::structure::StructureAlgebra;
use crate::ffla::{GFElement, GFMatrix, Subspace};

/// Dimensions of the radical powers `J^0 = A, J^1, ..., J^{LL} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoewyProfile {
    pub dims: Vec<usize>,
    pub loewy_length: usize,
    /// `c(n) = dim J^{n-1} - dim J^n` for `n = 1..=LL`.
    pub codims: Vec<usize>,
}

impl LoewyProfile {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        let codims = dims.windows(2).map(|w| w[0] - w[1]).collect();
        LoewyProfile { loewy_length: dims.len() - 1, dims, codims }
    }

    /// `c(n)`, zero beyond the Loewy length.
    pub fn c(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        self.codims.get(n - 1).copied().unwrap_or(0)
    }
}

impl StructureAlgebra {
    /// `J^0, J^1, ...` ending with the zero space, computed once.
    pub fn radical_powers(&self) -> &[Subspace] {
        self.chain.get_or_init(|| {
            let f = self.field().clone();
            let n = self.dim();
            let j = self.radical().clone();
            let mut chain = vec![Subspace::full(f.clone(), n)];
            if n == 0 {
                return chain;
            }
            let gens = if self.is_commutative() {
                self.ideal_generators(&j)
            } else {
                j.basis().to_vec()
            };
            let mut cur = j;
            while !cur.is_zero() {
                let next = Subspace::span(
                    f.clone(),
                    n,
                    cur.basis().iter().flat_map(|u| gens.iter().map(move |s| self.mul(u, s))),
                );
                chain.push(cur);
                cur = next;
            }
            chain.push(cur);
            chain
        })
    }

    /// A small set `S` with `J = sum_s A s` (commutative case), chosen
    /// greedily from the echelon basis.
    fn ideal_generators(&self, j: &Subspace) -> Vec<Vec<GFElement>> {
        let mut ideal = Subspace::zero(self.field().clone(), self.dim());
        let mut gens = Vec::new();
        for v in j.basis() {
            if ideal.contains(v) {
                continue;
            }
            for k in 0..self.dim() {
                ideal.insert(self.mul_basis_left(k, v));
            }
            gens.push(v.clone());
            if ideal.dim() == j.dim() {
                break;
            }
        }
        gens
    }

    pub fn loewy_profile(&self) -> LoewyProfile {
        LoewyProfile::from_dims(self.radical_powers().iter().map(|s| s.dim()).collect())
    }

    /// `{a : aJ = Ja = 0}`
    pub fn socle(&self) -> Subspace {
        let f = self.field().clone();
        let n = self.dim();
        let mut constraints = Subspace::zero(f.clone(), n);
        for u in self.radical().basis() {
            let mut sides = vec![(0..n).map(|i| self.mul_basis_left(i, u)).collect::<Vec<_>>()];
            if !self.is_commutative() {
                sides.push((0..n).map(|i| self.mul_basis_right(u, i)).collect());
            }
            for cols in sides {
                for r in 0..n {
                    constraints.insert(cols.iter().map(|c| c[r]).collect());
                }
            }
            if constraints.dim() == n {
                break;
            }
        }
        let kernel = GFMatrix::from_rows(f.clone(), n, constraints.basis())
            .expect("rows have length n")
            .kernel();
        Subspace::span(f, n, kernel)
    }

    /// Local with residue field `F`: `dim A / J(A) = 1`.
    pub fn is_local(&self) -> bool {
        self.dim() > 0 && self.dim() - self.radical().dim() == 1
    }

    /// For local algebras: every Loewy layer has dimension at most 1.
    pub fn is_uniserial_local(&self) -> bool {
        self.is_local() && self.loewy_profile().codims.iter().all(|&c| c <= 1)
    }
}
