//! Concrete constructors for the groups the suite runs on.

use std::sync::Arc;

use super::finite::{FiniteGroup, GroupRef};
use super::perm::{gcd, Perm};
use crate::error::{Error, Result};

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Perm> {
    Perm::from_cycles(degree, &[points.into_iter().collect()])
}

fn build(degree: usize, gens: Vec<Perm>, name: String) -> Result<GroupRef> {
    FiniteGroup::from_generators(degree, gens, name).map(Arc::new)
}

pub fn cyclic(n: usize) -> Result<GroupRef> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let gens = if n == 1 { vec![] } else { vec![cycle_on(n, 0..n)?] };
    build(n, gens, format!("C{n}"))
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(orders: &[usize]) -> Result<GroupRef> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::InvalidArgument(format!("bad abelian factors {orders:?}")));
    }
    let degree: usize = orders.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &n in orders {
        if n > 1 {
            gens.push(cycle_on(degree, offset..offset + n)?);
        }
        offset += n;
    }
    let name = orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x");
    build(degree, gens, name)
}

/// Dihedral group of the given order (so `dihedral(10)` is `D10`).
pub fn dihedral(order: usize) -> Result<GroupRef> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::InvalidArgument(format!("dihedral order {order} must be even and >= 4")));
    }
    let m = order / 2;
    let name = format!("D{order}");
    if m == 2 {
        let a = Perm::parse_cycles(4, "(0 1)(2 3)")?;
        let b = Perm::parse_cycles(4, "(0 2)(1 3)")?;
        return build(4, vec![a, b], name);
    }
    let rot = cycle_on(m, 0..m)?;
    let refl = Perm::new((0..m).map(|i| (m - i) % m).collect())?;
    build(m, vec![rot, refl], name)
}

pub fn symmetric(n: usize) -> Result<GroupRef> {
    if n == 0 {
        return Err(Error::InvalidArgument("symmetric group on 0 points".into()));
    }
    let gens = if n == 1 {
        vec![]
    } else if n == 2 {
        vec![cycle_on(2, 0..2)?]
    } else {
        vec![cycle_on(n, 0..n)?, cycle_on(n, 0..2)?]
    };
    build(n, gens, format!("S{n}"))
}

/// `M_{p^d} = <x, y | x^{p^{d-1}} = y^p = 1, y^-1 x y = x^{1+p^{d-2}}>` in its
/// right regular representation on the normal forms `x^a y^b`.
pub fn modular_group(p: usize, d: u32) -> Result<GroupRef> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("modular group needs d >= 3, got {d}")));
    }
    if !crate::ffla::is_prime(p as u64) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let n = p.pow(d - 1);
    let order = n * p;
    if order > u16::MAX as usize {
        return Err(Error::GroupTooLarge { cap: u16::MAX as usize });
    }
    let r = 1 + p.pow(d - 2);
    // y^-b x y^b = x^(r^b), so moving x^c left past y^b gives x^(c s^b), s = r^-1
    let s = (1..n).find(|&s| (s * r) % n == 1).expect("r is a unit mod p^(d-1)");
    let mut s_pow = vec![1usize; p];
    for b in 1..p {
        s_pow[b] = s_pow[b - 1] * s % n;
    }
    let idx = |a: usize, b: usize| a + n * b;
    let mul = |(a, b): (usize, usize), (c, e): (usize, usize)| ((a + c * s_pow[b]) % n, (b + e) % p);
    let right = |g: (usize, usize)| {
        let mut images = vec![0usize; order];
        for b in 0..p {
            for a in 0..n {
                let (a2, b2) = mul((a, b), g);
                images[idx(a, b)] = idx(a2, b2);
            }
        }
        Perm::new(images)
    };
    build(order, vec![right((1, 0))?, right((0, 1))?], format!("M{order}"))
}

/// `P ⋊ H` where `h p h^-1 = action[g](p)` for the `g`-th generator `h` of
/// `H`; each action map is given on element indices of `P`.
///
/// Realized in the right regular representation on pairs `(p, h)`.
pub fn semidirect(
    pgrp: &FiniteGroup,
    hgrp: &FiniteGroup,
    action: &[Vec<usize>],
    name: impl Into<String>,
) -> Result<GroupRef> {
    let (np, nh) = (pgrp.order(), hgrp.order());
    let hgens = hgrp.generator_indices();
    if action.len() != hgens.len() {
        return Err(Error::Construction(format!(
            "{} action maps for {} generators",
            action.len(),
            hgens.len()
        )));
    }
    for phi in action {
        if phi.len() != np {
            return Err(Error::Construction("action map has the wrong length".into()));
        }
        let mut seen = vec![false; np];
        for &y in phi {
            if y >= np || std::mem::replace(&mut seen[y], true) {
                return Err(Error::Construction("action map is not a bijection".into()));
            }
        }
        for a in 0..np {
            for b in 0..np {
                if phi[pgrp.mul(a, b)] != pgrp.mul(phi[a], phi[b]) {
                    return Err(Error::Construction(format!(
                        "action map is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
    }
    // phi_{wg} = phi_w after phi_g, filled in element order of H
    let mut phis: Vec<Option<Vec<usize>>> = vec![None; nh];
    phis[0] = Some((0..np).collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        for (gi, &g) in hgens.iter().enumerate() {
            let wg = hgrp.mul(w, g);
            let pw = phis[w].as_ref().expect("queued elements have maps");
            let composed: Vec<usize> = action[gi].iter().map(|&x| pw[x]).collect();
            match &phis[wg] {
                Some(existing) if *existing != composed => {
                    return Err(Error::Construction(
                        "action does not define a homomorphism".into(),
                    ))
                }
                Some(_) => {}
                None => {
                    phis[wg] = Some(composed);
                    queue.push(wg);
                }
            }
        }
    }
    let phis: Vec<Vec<usize>> = phis.into_iter().map(|m| m.expect("H is generated")).collect();
    let degree = np * nh;
    if degree > super::perm::MAX_DEGREE {
        return Err(Error::GroupTooLarge { cap: super::perm::MAX_DEGREE });
    }
    // (p, h)(q, k) = (p phi_h(q), hk)
    let right = |q: usize, k: usize| {
        let mut images = vec![0usize; degree];
        for p in 0..np {
            for h in 0..nh {
                images[p * nh + h] = pgrp.mul(p, phis[h][q]) * nh + hgrp.mul(h, k);
            }
        }
        Perm::new(images)
    };
    let mut gens = Vec::new();
    for &q in pgrp.generator_indices() {
        gens.push(right(q, 0)?);
    }
    for &k in hgens {
        gens.push(right(0, k)?);
    }
    build(degree, gens, name.into())
}

/// `C_n ⋊ C_k` with the generator of `C_k` acting by `x -> x^a`, where `k`
/// is the multiplicative order of `a` mod `n`.
pub fn cyclic_semidirect(n: usize, a: usize) -> Result<GroupRef> {
    if n < 2 || gcd(a as u64, n as u64) != 1 {
        return Err(Error::InvalidArgument(format!("{a} is not a unit mod {n}")));
    }
    let a = a % n;
    let k = (1..=n).find(|&k| mod_pow(a, k, n) == 1).expect("units have finite order");
    let pgrp = cyclic(n)?;
    let hgrp = cyclic(k)?;
    let gen = pgrp.generator_indices()[0];
    let action: Vec<Vec<usize>> = if k == 1 {
        vec![]
    } else {
        // P's elements are powers of its generator; map x^i to x^(a i)
        let mut log = vec![0usize; n];
        for i in 0..n {
            log[pgrp.pow(gen, i as u64)] = i;
        }
        vec![(0..n).map(|x| pgrp.pow(gen, (a * log[x] % n) as u64)).collect()]
    };
    semidirect(&pgrp, &hgrp, &action, format!("C{n}:C{k}"))
}

pub(crate) fn mod_pow(mut b: usize, mut e: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroup::{abelian_type, Subgroup};

    /// Class count by conjugating every element by every element.
    fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..n)
                .map(|t| {
                    let (pt, px) = (g.element(t), g.element(x));
                    g.index_of(&pt.inverse().compose(px).compose(pt)).unwrap()
                })
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            sizes.push(orbit.len());
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn modular_sixteen() {
        let g = modular_group(2, 4).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(brute_class_sizes(&g).len(), 10);
        assert_eq!(g.conjugacy_classes().len(), 10);
        // y^-1 x y = x^5
        let (x, y) = (g.generator_indices()[0], g.generator_indices()[1]);
        assert_eq!(g.conj(x, y), g.pow(x, 5));
        assert_eq!(g.element_order(x), 8);
        assert_eq!(g.element_order(y), 2);
        let z = Subgroup::whole(&g).center();
        assert_eq!(z.order(), 4);
        assert!(z.is_cyclic());
        assert_eq!(abelian_type(&z, 2).unwrap().factors(), vec![4]);
    }

    #[test]
    fn modular_relation_for_odd_prime() {
        let g = modular_group(3, 4).unwrap();
        assert_eq!(g.order(), 81);
        let (x, y) = (g.generator_indices()[0], g.generator_indices()[1]);
        assert_eq!(g.conj(x, y), g.pow(x, 10));
        let z = Subgroup::whole(&g).center();
        assert_eq!(z.order(), 9);
        assert!(z.is_cyclic());
    }

    #[test]
    fn dihedral_ten() {
        let g = dihedral(10).unwrap();
        assert_eq!(g.order(), 10);
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 5]);
        assert_eq!(brute_class_sizes(&g), vec![1, 2, 2, 5]);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert!(dihedral(4).unwrap().is_abelian());
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn semidirect_products() {
        let f20 = cyclic_semidirect(5, 2).unwrap();
        assert_eq!(f20.order(), 20);
        assert_eq!(brute_class_sizes(&f20), vec![1, 4, 5, 5, 5]);
        let s3 = cyclic_semidirect(3, 2).unwrap();
        assert_eq!(brute_class_sizes(&s3), vec![1, 2, 3]);
        let c7 = cyclic_semidirect(7, 1).unwrap();
        assert!(c7.is_abelian());
        assert_eq!(c7.order(), 7);
    }

    #[test]
    fn semidirect_rejects_non_automorphisms() {
        let p = cyclic(5).unwrap();
        let h = cyclic(2).unwrap();
        let swap01: Vec<usize> = (0..5).map(|i| match i { 0 => 1, 1 => 0, x => x }).collect();
        assert!(semidirect(&p, &h, &[swap01], "bad").is_err());
        // x -> x^2 has order 4, not compatible with C2
        let gen = p.generator_indices()[0];
        let sq: Vec<usize> = (0..5).map(|x| p.mul(x, x)).collect();
        assert_eq!(sq[gen], p.pow(gen, 2));
        assert!(semidirect(&p, &h, &[sq], "bad").is_err());
    }

    #[test]
    fn small_constructors() {
        assert_eq!(cyclic(4).unwrap().order(), 4);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(4).unwrap().conjugacy_classes().len(), 5);
        assert_eq!(abelian(&[2, 4]).unwrap().order(), 8);
    }

    #[test]
    fn class_equation_holds() {
        for g in [symmetric(5).unwrap(), modular_group(2, 5).unwrap(), cyclic_semidirect(13, 3).unwrap()] {
            let n = g.order();
            let total: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
            assert_eq!(total, n);
            for c in g.conjugacy_classes() {
                assert_eq!(n % c.size(), 0);
                assert_eq!(c.size() * c.centralizer_order, n);
            }
        }
    }
}
