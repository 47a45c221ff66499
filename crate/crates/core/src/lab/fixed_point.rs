use std::sync::Arc;

use crate::algebra::{AlgElement, StructureAlgebra};
use crate::error::{Error, Result};
use crate::ffla::{GFElement, GField};
use crate::group::{abelian_type, AbelianType, Subgroup};

/// `|Z(D)|` up to which `LL(F[Z(D)])` is computed rather than taken from
/// the closed form.
pub const DIRECT_LAMBDA_LIMIT: usize = 256;

/// `LL(F[A])` for an abelian `p`-group `A` of type `(p^{a_1}, ..., p^{a_r})`:
/// `p^{a_1} + ... + p^{a_r} - r + 1`.
pub fn lambda_of_abelian_type(t: &AbelianType) -> u64 {
    t.factors().iter().sum::<u64>() + 1 - t.rank() as u64
}

/// `F[Z(D)]^N` on the basis of `N`-orbit sums.
#[derive(Clone, Debug)]
pub struct FixedPointAlgebra {
    pub algebra: StructureAlgebra,
    pub center: Subgroup,
    pub center_type: AbelianType,
    /// Parent-group element indices; orbit 0 is `{1}`.
    pub orbits: Vec<Vec<usize>>,
    /// `LL(F[Z(D)])` computed from the group algebra, if small enough.
    pub lambda_direct: Option<usize>,
    pub lambda_formula: usize,
}

impl FixedPointAlgebra {
    /// `Z(D)` under conjugation by `n`, which must normalize `D`.
    pub fn build(field: Arc<GField>, d: &Subgroup, n: &Subgroup) -> Result<Self> {
        let g = d.parent().clone();
        let p = field.p() as u64;
        let center = d.center();
        let center_type = abelian_type(&center, p)?;

        let mut orbit_of = vec![usize::MAX; g.order()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for &z in center.elements() {
            if orbit_of[z] != usize::MAX {
                continue;
            }
            let idx = orbits.len();
            orbit_of[z] = idx;
            let mut orbit = vec![z];
            let mut head = 0;
            while head < orbit.len() {
                let u = orbit[head];
                head += 1;
                for &t in n.generators() {
                    let v = g.conj(u, t);
                    if !center.contains(v) {
                        return Err(Error::Contract("acting group does not normalize Z(D)".into()));
                    }
                    if orbit_of[v] == usize::MAX {
                        orbit_of[v] = idx;
                        orbit.push(v);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }

        // O_i O_j = sum_l #{(u, v) in O_i x O_j : uv = min O_l} O_l
        let k = orbits.len();
        let mut counts: Vec<Vec<(usize, u64)>> = vec![Vec::new(); k * k];
        for (l, o) in orbits.iter().enumerate() {
            let target = o[0];
            for &u in center.elements() {
                let v = g.mul(g.inv(u), target);
                let row = &mut counts[orbit_of[u] * k + orbit_of[v]];
                match row.last_mut() {
                    Some((last, c)) if *last == l => *c += 1,
                    _ => row.push((l, 1)),
                }
            }
        }
        let products = counts
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .filter(|&(_, c)| c % p != 0)
                    .map(|(l, c)| (l, field.from_int((c % p) as i64)))
                    .collect()
            })
            .collect();
        let labels = orbits.iter().map(|o| format!("O{}", g.element(o[0]))).collect();
        let mut unit = vec![GFElement::ZERO; k];
        unit[0] = GFElement::ONE;
        let algebra = StructureAlgebra::new(field.clone(), labels, products, unit)?;

        let lambda_formula = lambda_of_abelian_type(&center_type) as usize;
        let lambda_direct = (center.order() <= DIRECT_LAMBDA_LIMIT)
            .then(|| -> Result<usize> {
                let (zg, _) = center.to_group("Z(D)")?;
                Ok(StructureAlgebra::group_algebra(field.clone(), &zg).loewy_profile().loewy_length)
            })
            .transpose()?;
        Ok(FixedPointAlgebra { algebra, center, center_type, orbits, lambda_direct, lambda_formula })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn loewy_length(&self) -> usize {
        self.algebra.loewy_profile().loewy_length
    }

    /// `LL(F[Z(D)])`, preferring the direct computation.
    pub fn lambda(&self) -> usize {
        self.lambda_direct.unwrap_or(self.lambda_formula)
    }
}

/// `a = |O| 1 - sum_{u in O} u` for the orbit `O` of a maximal-order
/// element of `Z(D)`, with `t = 1 + p + ... + p^{m-1}`.
#[derive(Clone, Debug)]
pub struct WitnessElement {
    /// Index into [`FixedPointAlgebra::orbits`].
    pub orbit: usize,
    pub orbit_size: usize,
    pub element: AlgElement,
    pub m: u32,
    pub t: u64,
}

impl WitnessElement {
    /// `a^t` in the fixed-point algebra.
    pub fn power(&self, fpa: &FixedPointAlgebra) -> Vec<GFElement> {
        fpa.algebra.pow(&self.element, self.t)
    }
}

/// Picks the least element index of maximal order in `Z(D)`.
pub fn witness_element(fpa: &FixedPointAlgebra) -> Result<WitnessElement> {
    let g = fpa.center.parent();
    let p = fpa.algebra.field().p() as u64;
    let m = fpa.center_type.m();
    if m == 0 {
        return Err(Error::Contract("witness needs a nontrivial Z(D)".into()));
    }
    let top = p.pow(m);
    let x = fpa
        .center
        .elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == top)
        .ok_or_else(|| Error::Consistency("no element of maximal order".into()))?;
    let orbit = fpa.orbits.iter().position(|o| o.binary_search(&x).is_ok()).expect("orbits cover Z(D)");
    let f = fpa.algebra.field();
    let size = fpa.orbits[orbit].len();
    let mut a = fpa.algebra.zero();
    a[0] = f.from_int(size as i64);
    a[orbit] = f.sub(a[orbit], GFElement::ONE);
    let t = (0..m).map(|i| p.pow(i)).sum();
    Ok(WitnessElement { orbit, orbit_size: size, element: AlgElement(a), m, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::make_field;
    use crate::group::{cyclic, modular_group, symmetric, sylow_subgroup, GroupRef};

    fn sylow(g: &GroupRef, p: u64) -> Subgroup {
        sylow_subgroup(&Subgroup::whole(g), p)
    }

    #[test]
    fn lambda_formula_values() {
        assert_eq!(lambda_of_abelian_type(&AbelianType::new(3, vec![1])), 3);
        assert_eq!(lambda_of_abelian_type(&AbelianType::new(2, vec![2])), 4);
        assert_eq!(lambda_of_abelian_type(&AbelianType::new(2, vec![1, 1])), 3);
        assert_eq!(lambda_of_abelian_type(&AbelianType::new(5, vec![])), 1);
    }

    #[test]
    fn s3_inversion_action() {
        let g = symmetric(3).unwrap();
        let d = sylow(&g, 3);
        let fpa = FixedPointAlgebra::build(make_field(3, 1).unwrap(), &d, &Subgroup::whole(&g)).unwrap();
        assert_eq!(fpa.dim(), 2);
        assert_eq!(fpa.orbits[0], vec![0]);
        assert_eq!(fpa.orbits[1].len(), 2);
        assert_eq!(fpa.loewy_length(), 2);
        assert_eq!((fpa.lambda_direct, fpa.lambda_formula), (Some(3), 3));
        let w = witness_element(&fpa).unwrap();
        assert_eq!((w.orbit_size, w.m, w.t), (2, 1, 1));
        let f = fpa.algebra.field();
        assert_eq!(w.element.0, vec![f.from_int(2), f.from_int(-1)]);
    }

    #[test]
    fn trivial_action_gives_the_group_algebra() {
        let g = cyclic(4).unwrap();
        let d = Subgroup::whole(&g);
        let fpa = FixedPointAlgebra::build(make_field(2, 1).unwrap(), &d, &d).unwrap();
        assert_eq!(fpa.dim(), 4);
        assert_eq!(fpa.loewy_length(), 4);
        let w = witness_element(&fpa).unwrap();
        assert_eq!((w.orbit_size, w.t), (1, 3));
        assert!(!StructureAlgebra::is_zero_vec(&w.power(&fpa)));
    }

    #[test]
    fn modular_group_center_is_fixed() {
        let g = modular_group(2, 4).unwrap();
        let d = Subgroup::whole(&g);
        let fpa = FixedPointAlgebra::build(make_field(2, 1).unwrap(), &d, &d).unwrap();
        assert_eq!(fpa.center.order(), 4);
        assert!(fpa.center.is_cyclic());
        assert_eq!(fpa.dim(), 4);
        assert_eq!(fpa.loewy_length(), 4);
    }

    /// The fixed-point algebra equals the span of orbit sums inside `F[Z(D)]`.
    #[test]
    fn structure_constants_match_group_algebra() {
        let g = crate::group::cyclic_semidirect(7, 3).unwrap();
        let d = sylow(&g, 7);
        let f = make_field(7, 1).unwrap();
        let fpa = FixedPointAlgebra::build(f.clone(), &d, &Subgroup::whole(&g)).unwrap();
        let (zg, embed) = fpa.center.to_group("Z").unwrap();
        let full = StructureAlgebra::group_algebra(f.clone(), &zg);
        let local = |x: usize| embed.iter().position(|&y| y == x).unwrap();
        let lift = |v: &[GFElement]| {
            let mut out = full.zero();
            for (o, &c) in fpa.orbits.iter().zip(v) {
                for &x in o {
                    out[local(x)] = c;
                }
            }
            out
        };
        for i in 0..fpa.dim() {
            for j in 0..fpa.dim() {
                let a = fpa.algebra.basis_vector(i);
                let b = fpa.algebra.basis_vector(j);
                assert_eq!(lift(&fpa.algebra.mul(&a, &b)), full.mul(&lift(&a), &lift(&b)));
            }
        }
    }
}
