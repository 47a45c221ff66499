use std::sync::{Arc, OnceLock};

use crate::algebra::StructureAlgebra;
use crate::error::Result;
use crate::ffla::{make_field, GFElement, GField, GFMatrix, Subspace};
use crate::group::{ConjugacyClass, FiniteGroup, GroupRef};

/// Default bound on `|G|` for computations in the full group algebra.
pub const DEFAULT_FULL_ALGEBRA_CAP: usize = 600;

/// `s` such that `F_{p^s}` contains the `m`-th roots of unity, `m` the
/// `p'`-part of the exponent of `G`.
pub fn splitting_degree(g: &FiniteGroup, p: u32) -> u32 {
    let mut m = g.exponent();
    while m % p as u64 == 0 {
        m /= p as u64;
    }
    if m == 1 {
        return 1;
    }
    let mut s = 1;
    let mut acc = p as u64 % m;
    while acc != 1 {
        acc = acc * (p as u64) % m;
        s += 1;
    }
    s
}

/// `F G` and `Z(F G)` for a fixed prime.
#[derive(Debug)]
pub struct GroupAlgebraCtx {
    group: GroupRef,
    p: u32,
    field: Arc<GField>,
    defects: Vec<u32>,
    /// `constants[i * k + j]` lists `(l, a_{ijl})` with
    /// `a_{ijl} = #{(u, v) in C_i x C_j : uv = z_l}`, nonzero only, by `l`.
    constants: Vec<Vec<(u32, u32)>>,
    center: StructureAlgebra,
    full_cap: usize,
    full: OnceLock<Option<StructureAlgebra>>,
    reynolds: OnceLock<Option<Subspace>>,
}

impl GroupAlgebraCtx {
    /// Context over `F_{p^s}` with `s = splitting_degree(G, p)`.
    pub fn build(group: GroupRef, p: u32) -> Result<Self> {
        let s = splitting_degree(&group, p);
        let field = make_field(p, s)?;
        Self::build_with_field(group, field, DEFAULT_FULL_ALGEBRA_CAP)
    }

    pub fn build_with_field(group: GroupRef, field: Arc<GField>, full_cap: usize) -> Result<Self> {
        let p = field.p();
        let classes = group.conjugacy_classes();
        let k = classes.len();
        let mut constants: Vec<Vec<(u32, u32)>> = vec![Vec::new(); k * k];
        for (l, cl) in classes.iter().enumerate() {
            let z = cl.representative;
            for u in 0..group.order() {
                let v = group.mul(group.inv(u), z);
                let entry = &mut constants[group.class_of(u) * k + group.class_of(v)];
                match entry.last_mut() {
                    Some((last, c)) if *last == l as u32 => *c += 1,
                    _ => entry.push((l as u32, 1)),
                }
            }
        }
        let products = constants
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(_, c)| c % p != 0)
                    .map(|&(l, c)| (l as usize, field.from_int((c % p) as i64)))
                    .collect()
            })
            .collect();
        let labels = classes.iter().map(|c| format!("K{}", group.element(c.representative))).collect();
        let mut unit = vec![GFElement::ZERO; k];
        unit[0] = GFElement::ONE;
        let center = StructureAlgebra::new(field.clone(), labels, products, unit)?;
        let defects = classes.iter().map(|c| c.defect(p)).collect();
        Ok(GroupAlgebraCtx {
            group,
            p,
            field,
            defects,
            constants,
            center,
            full_cap,
            full: OnceLock::new(),
            reynolds: OnceLock::new(),
        })
    }

    pub fn with_full_algebra_cap(mut self, cap: usize) -> Self {
        self.full_cap = cap;
        self.full = OnceLock::new();
        self.reynolds = OnceLock::new();
        self
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &Arc<GField> {
        &self.field
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        self.group.conjugacy_classes()
    }

    pub fn class_count(&self) -> usize {
        self.classes().len()
    }

    /// `nu_p(|C_G(x)|)` per class.
    pub fn class_defects(&self) -> &[u32] {
        &self.defects
    }

    pub fn p_regular_classes(&self) -> Vec<usize> {
        let p = self.p as u64;
        (0..self.class_count())
            .filter(|&i| self.group.is_p_regular(self.classes()[i].representative, p))
            .collect()
    }

    /// Exact class multiplication coefficient `a_{ijl}`.
    pub fn class_constant(&self, i: usize, j: usize, l: usize) -> u32 {
        let row = &self.constants[i * self.class_count() + j];
        row.binary_search_by_key(&(l as u32), |&(l, _)| l).map_or(0, |pos| row[pos].1)
    }

    /// Nonzero `(l, a_{ijl})`, sorted by `l`.
    pub fn class_constants(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.constants[i * self.class_count() + j]
    }

    /// `Z(FG)` on the class-sum basis.
    pub fn center(&self) -> &StructureAlgebra {
        &self.center
    }

    pub fn full_algebra_cap(&self) -> usize {
        self.full_cap
    }

    /// `FG` on the group basis, if `|G|` is within the cap.
    pub fn full_algebra(&self) -> Option<&StructureAlgebra> {
        self.full
            .get_or_init(|| {
                (self.group.order() <= self.full_cap)
                    .then(|| StructureAlgebra::group_algebra(self.field.clone(), &self.group))
            })
            .as_ref()
    }

    /// A class-coordinate vector as an element of `FG`.
    pub fn class_vector_to_group(&self, z: &[GFElement]) -> Vec<GFElement> {
        let mut out = vec![GFElement::ZERO; self.group.order()];
        for (c, &v) in self.classes().iter().zip(z) {
            for &x in &c.members {
                out[x] = v;
            }
        }
        out
    }

    /// Reynolds ideal `Z(FG) ∩ soc(FG) = {z in Z(FG) : z J(FG) = 0}` in
    /// class coordinates; `None` above the full-algebra cap.
    pub fn reynolds_ideal(&self) -> Option<&Subspace> {
        self.reynolds
            .get_or_init(|| {
                let fg = self.full_algebra()?;
                let f = &self.field;
                let g = &self.group;
                let n = g.order();
                let k = self.class_count();
                let mut constraints = Subspace::zero(f.clone(), k);
                for u in fg.radical().basis() {
                    // column i: C_i * u
                    let cols: Vec<Vec<GFElement>> = self
                        .classes()
                        .iter()
                        .map(|c| {
                            let mut out = vec![GFElement::ZERO; n];
                            for &x in &c.members {
                                for (y, &uy) in u.iter().enumerate() {
                                    if !uy.is_zero() {
                                        let xy = g.mul(x, y);
                                        out[xy] = f.add(out[xy], uy);
                                    }
                                }
                            }
                            out
                        })
                        .collect();
                    for r in 0..n {
                        constraints.insert(cols.iter().map(|c| c[r]).collect());
                    }
                    if constraints.dim() == k {
                        break;
                    }
                }
                let kernel = GFMatrix::from_rows(f.clone(), k, constraints.basis())
                    .expect("rows have length k")
                    .kernel();
                Some(Subspace::span(f.clone(), k, kernel))
            })
            .as_ref()
    }
}
