use std::sync::Arc;

use super::finite::{nu, FiniteGroup, GroupRef};
use crate::error::{Error, Result};

/// A subgroup of an enumerated group, held as a sorted set of element
/// indices of the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<usize>,
    member: Vec<bool>,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn whole(g: &GroupRef) -> Self {
        Self::generated_by(g, g.generator_indices())
    }

    pub fn trivial(g: &GroupRef) -> Self {
        Self::generated_by(g, &[])
    }

    /// The subgroup generated by the given element indices.
    pub fn generated_by(g: &GroupRef, gens: &[usize]) -> Self {
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut elements = vec![0];
        close(g, &mut elements, &mut member, gens, 0);
        elements.sort_unstable();
        Subgroup { parent: g.clone(), elements, member, gens: gens.to_vec() }
    }

    /// Wraps a set already known to be a subgroup, choosing generators
    /// greedily in index order.
    pub fn from_elements(g: &GroupRef, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        let mut target = vec![false; g.order()];
        for &x in &elems {
            if x >= g.order() {
                return Err(Error::NotClosed(format!("index {x} outside the group")));
            }
            target[x] = true;
        }
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut elements = vec![0];
        let mut gens = Vec::new();
        for &x in &elems {
            if member[x] {
                continue;
            }
            gens.push(x);
            let old = elements.len();
            // new products can arise from every old element, so rescan all
            close(g, &mut elements, &mut member, &gens, 0);
            if elements.len() == old {
                unreachable!("adding a non-member always grows the closure");
            }
            if let Some(&bad) = elements.iter().find(|&&y| !target[y]) {
                return Err(Error::NotClosed(format!(
                    "element {bad} is generated but not in the given set"
                )));
            }
        }
        if elements.len() != elems.len() {
            return Err(Error::NotClosed("set does not contain the identity".into()));
        }
        elements.sort_unstable();
        Ok(Subgroup { parent: g.clone(), elements, member, gens })
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements.iter().any(|&x| self.parent.element_order(x) == n)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order() as u64;
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generator_indices()
            .iter()
            .all(|&t| self.gens.iter().all(|&h| self.contains(g.conj(h, t))))
    }

    pub fn center(&self) -> Subgroup {
        let g = &self.parent;
        let elems = self
            .elements
            .iter()
            .copied()
            .filter(|&z| self.gens.iter().all(|&h| g.commute(z, h)))
            .collect();
        Subgroup::from_elements(g, elems).expect("the center is a subgroup")
    }

    /// `t^-1 H t`
    pub fn conjugate(&self, t: usize) -> Subgroup {
        let g = &self.parent;
        let gens: Vec<usize> = self.gens.iter().map(|&h| g.conj(h, t)).collect();
        Subgroup::generated_by(g, &gens)
    }

    /// The subgroup as a group in its own right, with the map from its
    /// element indices to those of the parent.
    pub fn to_group(&self, name: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        let g = &self.parent;
        let gens = self.gens.iter().map(|&x| g.element(x).clone()).collect();
        let h = FiniteGroup::from_generators(g.degree(), gens, name)?;
        let embed = h
            .elements()
            .iter()
            .map(|x| g.index_of(x).expect("subgroup elements lie in the parent"))
            .collect();
        Ok((h, embed))
    }
}

/// Extends `elements` to the closure under right multiplication by `gens`,
/// scanning from position `from`.
fn close(g: &FiniteGroup, elements: &mut Vec<usize>, member: &mut [bool], gens: &[usize], from: usize) {
    let mut head = from;
    while head < elements.len() {
        let x = elements[head];
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                elements.push(y);
            }
        }
        head += 1;
    }
}

pub fn centralizer(g: &GroupRef, x: usize) -> Subgroup {
    let elems = (0..g.order()).filter(|&y| g.commute(x, y)).collect();
    Subgroup::from_elements(g, elems).expect("centralizers are subgroups")
}

/// `C_G(H)`
pub fn centralizer_of(g: &GroupRef, h: &Subgroup) -> Subgroup {
    let elems = (0..g.order())
        .filter(|&y| h.generators().iter().all(|&x| g.commute(x, y)))
        .collect();
    Subgroup::from_elements(g, elems).expect("centralizers are subgroups")
}

pub fn normalizer(g: &GroupRef, h: &Subgroup) -> Subgroup {
    let elems = (0..g.order())
        .filter(|&t| h.generators().iter().all(|&x| h.contains(g.conj(x, t))))
        .collect();
    Subgroup::from_elements(g, elems).expect("normalizers are subgroups")
}

/// A Sylow `p`-subgroup of `h`: start from the trivial group and repeatedly
/// adjoin the least `p`-element of `h` outside the current subgroup that
/// normalizes it.
pub fn sylow_subgroup(h: &Subgroup, p: u64) -> Subgroup {
    let g = h.parent().clone();
    let target = p.pow(nu(h.order() as u64, p));
    let is_p_elt = |x: usize| {
        let o = g.element_order(x);
        o > 1 && o.is_power_of(p)
    };
    let mut cur = Subgroup::trivial(&g);
    while (cur.order() as u64) < target {
        let next = h.elements().iter().copied().find(|&x| {
            !cur.contains(x)
                && is_p_elt(x)
                && cur.generators().iter().all(|&c| cur.contains(g.conj(c, x)))
        });
        let x = next.expect("a p-subgroup below Sylow order has a normalizing p-element");
        let mut gens = cur.generators().to_vec();
        gens.push(x);
        cur = Subgroup::generated_by(&g, &gens);
    }
    cur
}

trait PowerOf {
    fn is_power_of(self, p: u64) -> bool;
}

impl PowerOf for u64 {
    fn is_power_of(mut self, p: u64) -> bool {
        while self % p == 0 {
            self /= p;
        }
        self == 1
    }
}

/// Invariant factors `p^{a_1} >= ... >= p^{a_r}` of an abelian `p`-group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct AbelianType {
    pub p: u64,
    /// `a_1 >= ... >= a_r >= 1`
    pub exponents: Vec<u32>,
}

impl AbelianType {
    pub fn new(p: u64, mut exponents: Vec<u32>) -> Self {
        exponents.retain(|&a| a > 0);
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        AbelianType { p, exponents }
    }

    pub fn factors(&self) -> Vec<u64> {
        self.exponents.iter().map(|&a| self.p.pow(a)).collect()
    }

    /// `m` with `p^m` the exponent; 0 for the trivial group.
    pub fn m(&self) -> u32 {
        self.exponents.first().copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn order(&self) -> u64 {
        self.factors().iter().product()
    }

    pub fn is_elementary(&self) -> bool {
        self.m() <= 1
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }
}

/// Type of an abelian `p`-group, from the census `#{x : x^{p^k} = 1}`.
pub fn abelian_type(h: &Subgroup, p: u64) -> Result<AbelianType> {
    if !h.is_abelian() {
        return Err(Error::Contract("abelian_type needs an abelian group".into()));
    }
    if !h.is_p_group(p) {
        return Err(Error::Contract(format!("abelian_type needs a {p}-group, got order {}", h.order())));
    }
    let g = h.parent();
    let orders: Vec<u32> = h.elements().iter().map(|&x| nu(g.element_order(x), p)).collect();
    let max = orders.iter().copied().max().unwrap_or(0);
    // log_p of #{x : ord(x) | p^k}
    let log_census: Vec<u32> = (0..=max)
        .map(|k| nu(orders.iter().filter(|&&o| o <= k).count() as u64, p))
        .collect();
    // r_k = #{i : a_i >= k} = log N_k - log N_{k-1}
    let mut exponents = Vec::new();
    let count_at_least = |k: usize| log_census[k] - log_census[k - 1];
    for k in 1..=max as usize {
        let here = count_at_least(k);
        let above = if k < max as usize { count_at_least(k + 1) } else { 0 };
        for _ in 0..(here - above) {
            exponents.push(k as u32);
        }
    }
    Ok(AbelianType::new(p, exponents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::Perm;

    fn grp(deg: usize, gens: &[&str]) -> GroupRef {
        let gens = gens.iter().map(|c| Perm::parse_cycles(deg, c).unwrap()).collect();
        Arc::new(FiniteGroup::from_generators(deg, gens, "G").unwrap())
    }

    #[test]
    fn s3_subgroups() {
        let g = grp(3, &["(0 1 2)", "(0 1)"]);
        let t = g.index_of(&Perm::parse_cycles(3, "(0 1)").unwrap()).unwrap();
        assert_eq!(centralizer(&g, t).order(), 2);
        let r = g.index_of(&Perm::parse_cycles(3, "(0 1 2)").unwrap()).unwrap();
        let c3 = Subgroup::generated_by(&g, &[r]);
        assert_eq!(normalizer(&g, &c3).order(), 6);
        assert!(c3.is_normal());
        let syl = sylow_subgroup(&Subgroup::whole(&g), 3);
        assert_eq!(syl, c3);
        assert_eq!(Subgroup::whole(&g).center().order(), 1);
    }

    #[test]
    fn sylow_two_of_s4_is_dihedral_of_order_eight() {
        let g = grp(4, &["(0 1 2 3)", "(0 1)"]);
        let p = sylow_subgroup(&Subgroup::whole(&g), 2);
        assert_eq!(p.order(), 8);
        assert!(!p.is_abelian());
        // dihedral of order 8: five involutions, two elements of order 4
        let inv = p.elements().iter().filter(|&&x| g.element_order(x) == 2).count();
        assert_eq!(inv, 5);
        // oracle: no 2-subgroup of order 16 exists, and every element of
        // 2-power order lies in some conjugate of p
        let conjugates: Vec<Subgroup> = (0..g.order()).map(|t| p.conjugate(t)).collect();
        for x in 0..g.order() {
            if g.element_order(x).is_power_of(2) {
                assert!(conjugates.iter().any(|c| c.contains(x)));
            }
        }
    }

    #[test]
    fn abelian_types() {
        let c4 = grp(4, &["(0 1 2 3)"]);
        let t = abelian_type(&Subgroup::whole(&c4), 2).unwrap();
        assert_eq!((t.factors(), t.m(), t.rank()), (vec![4], 2, 1));
        let v4 = grp(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let t = abelian_type(&Subgroup::whole(&v4), 2).unwrap();
        assert_eq!((t.factors(), t.m(), t.rank()), (vec![2, 2], 1, 2));
        let c2c4 = grp(6, &["(0 1)", "(2 3 4 5)"]);
        let t = abelian_type(&Subgroup::whole(&c2c4), 2).unwrap();
        assert_eq!(t.factors(), vec![4, 2]);
        let s3 = grp(3, &["(0 1 2)", "(0 1)"]);
        assert!(abelian_type(&Subgroup::whole(&s3), 3).is_err());
        assert!(abelian_type(&Subgroup::whole(&c4), 3).is_err());
    }

    #[test]
    fn from_elements_rejects_non_subgroups() {
        let g = grp(3, &["(0 1 2)", "(0 1)"]);
        assert!(Subgroup::from_elements(&g, vec![0, 1, 2]).is_err());
        assert!(Subgroup::from_elements(&g, vec![1]).is_err());
    }
}
