use super::structure::{AlgElement, StructureAlgebra};
use crate::error::{Error, Result};
use crate::ffla::{split_roots, GFElement, GFMatrix, Subspace};

/// Orthogonal primitive central idempotents summing to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentDecomposition {
    pub idempotents: Vec<AlgElement>,
}

impl IdempotentDecomposition {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// `e^2 = e`, `e_i e_j = 0` for `i != j`, `sum e_i = 1`.
    pub fn verify(&self, a: &StructureAlgebra) -> Result<()> {
        let mut total = a.zero();
        for (i, e) in self.idempotents.iter().enumerate() {
            if a.mul(e, e) != e.0 {
                return Err(Error::Consistency(format!("idempotent {i} does not square to itself")));
            }
            for (j, e2) in self.idempotents.iter().enumerate().skip(i + 1) {
                if !StructureAlgebra::is_zero_vec(&a.mul(e, e2)) {
                    return Err(Error::Consistency(format!("idempotents {i} and {j} are not orthogonal")));
                }
            }
            total = a.add(&total, e);
        }
        if total != a.unit() {
            return Err(Error::Consistency("idempotents do not sum to 1".into()));
        }
        Ok(())
    }
}

impl StructureAlgebra {
    /// Primitive idempotents of the center.
    ///
    /// Splits the Frobenius-fixed part of `Z/J(Z)` (a product of copies of
    /// `F_q`) by eigenvalues, then lifts along the radical by `e -> e^q`.
    /// With `demand_split`, a residue field larger than `F_q` is an error
    /// carrying the degree over `F_p` that would split it.
    pub fn primitive_central_idempotents(&self, demand_split: bool) -> Result<IdempotentDecomposition> {
        if !self.is_commutative() {
            let z = self.center();
            let za = self.subalgebra_on(&z, self.unit())?;
            let dec = za.primitive_central_idempotents(demand_split)?;
            let idempotents = dec.idempotents.iter().map(|e| AlgElement(z.combine(e))).collect();
            let out = IdempotentDecomposition { idempotents };
            out.verify(self)?;
            return Ok(out);
        }
        let f = self.field().clone();
        let q = f.q();
        let j = self.radical();
        let quot = self.quotient(j)?;
        let m = quot.dim();
        // Frobenius x -> x^q is F_q-linear on the quotient
        let frob_cols: Vec<Vec<GFElement>> = (0..m).map(|i| quot.pow(&quot.basis_vector(i), q)).collect();
        let mut shifted = GFMatrix::from_columns(f.clone(), m, &frob_cols)?;
        for i in 0..m {
            shifted.set(i, i, f.sub(shifted.get(i, i), GFElement::ONE));
        }
        let fixed = Subspace::span(f.clone(), m, shifted.kernel());
        if demand_split && fixed.dim() < m {
            let frob = GFMatrix::from_columns(f.clone(), m, &frob_cols)?;
            let id = GFMatrix::identity(f.clone(), m);
            let mut power = frob.clone();
            let mut t = 1u32;
            while power != id {
                power = power.mul(&frob)?;
                t += 1;
            }
            return Err(Error::FieldTooSmall { required_degree: f.s() * t });
        }
        let residue = split_fixed_space(&quot, &fixed)?;
        let mut reps = Vec::with_capacity(m);
        let mut is_pivot = vec![false; self.dim()];
        for &c in j.pivots() {
            is_pivot[c] = true;
        }
        reps.extend((0..self.dim()).filter(|&c| !is_pivot[c]));
        let mut idempotents = Vec::with_capacity(residue.len());
        for e_bar in residue {
            let mut e = self.zero();
            for (c, &v) in reps.iter().zip(&e_bar) {
                e[*c] = v;
            }
            let mut rounds = 0;
            loop {
                let sq = self.mul(&e, &e);
                if sq == e {
                    break;
                }
                e = self.pow(&e, q);
                rounds += 1;
                if rounds > 64 {
                    return Err(Error::Consistency("idempotent lifting did not stabilize".into()));
                }
            }
            idempotents.push(AlgElement(e));
        }
        idempotents.sort_by(|a, b| a.0.cmp(&b.0));
        let out = IdempotentDecomposition { idempotents };
        out.verify(self)?;
        Ok(out)
    }
}

/// Minimal polynomial of `x` inside the algebra `eQ` with unit `e`, as
/// monic coefficients `c_0..c_{k-1}, 1`.
fn minimal_polynomial(q: &StructureAlgebra, e: &[GFElement], x: &[GFElement]) -> Vec<GFElement> {
    let f = q.field();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = q.mul(powers.last().expect("nonempty"), x);
        let m = GFMatrix::from_columns(f.clone(), q.dim(), &powers).expect("columns match");
        if let Some(c) = m.solve(&next).expect("shapes match") {
            let mut poly: Vec<GFElement> = c.iter().map(|&v| f.neg(v)).collect();
            poly.push(GFElement::ONE);
            return poly;
        }
        powers.push(next);
    }
}

/// Splits `1` into primitive idempotents of the subalgebra `fixed` of the
/// semisimple commutative algebra `q`.
fn split_fixed_space(q: &StructureAlgebra, fixed: &Subspace) -> Result<Vec<Vec<GFElement>>> {
    let f = q.field();
    let r = fixed.dim();
    let mut parts: Vec<Vec<GFElement>> = vec![q.unit().to_vec()];
    for v in fixed.basis() {
        if parts.len() == r {
            break;
        }
        let mut next = Vec::new();
        for e in &parts {
            let x = q.mul(v, e);
            let poly = minimal_polynomial(q, e, &x);
            let roots = split_roots(f, &poly)
                .ok_or_else(|| Error::Consistency("fixed-space element is not split semisimple".into()))?;
            if roots.len() == 1 {
                next.push(e.clone());
                continue;
            }
            for &lam in &roots {
                let mut piece = e.clone();
                for &mu in roots.iter().filter(|&&mu| mu != lam) {
                    let factor = q.sub(&x, &q.scale(e, mu));
                    piece = q.scale(&q.mul(&piece, &factor), f.inv(f.sub(lam, mu)));
                }
                next.push(piece);
            }
        }
        parts = next;
    }
    if parts.len() != r {
        return Err(Error::Consistency(format!("found {} idempotents, expected {r}", parts.len())));
    }
    Ok(parts)
}
