//! The Frobenius group `F_p^2 ⋊ (H × X)` with `H` the binary octahedral
//! group of order 48 and `X` the scalars of order `(p-1)/22`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::finite::{FiniteGroup, GroupRef};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::ffla::{is_prime, prime_divisors};

/// 2x2 matrix over `F_p`, row-major.
pub type Mat2 = [u64; 4];

fn mat_mul(a: &Mat2, b: &Mat2, p: u64) -> Mat2 {
    [
        (a[0] * b[0] + a[1] * b[2]) % p,
        (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p,
        (a[2] * b[1] + a[3] * b[3]) % p,
    ]
}

fn mat_scale(a: &Mat2, c: u64, p: u64) -> Mat2 {
    a.map(|x| x * c % p)
}

fn mat_add(a: &Mat2, b: &Mat2, p: u64) -> Mat2 {
    [(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p, (a[3] + b[3]) % p]
}

/// `det(M - I)`; zero iff `M` fixes a nonzero vector.
fn det_minus_identity(m: &Mat2, p: u64) -> u64 {
    let a = (m[0] + p - 1) % p;
    let d = (m[3] + p - 1) % p;
    (a * d % p + p - m[1] * m[2] % p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    (0..p).find(|&x| x * x % p == a % p)
}

fn primitive_root(p: u64) -> u64 {
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&r| qs.iter().all(|&q| pow_mod(r, (p - 1) / q, p) != 1))
        .expect("F_p^* is cyclic")
}

/// Closure of a set of invertible matrices under multiplication.
pub fn matrix_closure(gens: &[Mat2], p: u64, cap: usize) -> Result<Vec<Mat2>> {
    let id: Mat2 = [1, 0, 0, 1];
    let mut elems = vec![id];
    let mut seen: HashSet<Mat2> = HashSet::from([id]);
    let mut head = 0;
    while head < elems.len() {
        for g in gens {
            let y = mat_mul(&elems[head], g, p);
            if seen.insert(y) {
                if elems.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                elems.push(y);
            }
        }
        head += 1;
    }
    Ok(elems)
}

#[derive(Debug, Clone)]
pub struct FrobeniusGroup {
    pub p: u64,
    /// `(p-1)/22`
    pub x: u64,
    /// Which double cover of `S4` was used for `H`.
    pub cover: &'static str,
    /// Generators of `H × X`: two for `H`, then the scalar generating `X`.
    pub complement_generators: Vec<Mat2>,
    /// All `48x` elements of `H × X`.
    pub complement: Vec<Mat2>,
    pub group: GroupRef,
}

impl FrobeniusGroup {
    /// Orbits of the complement on the nonzero vectors of `F_p^2`.
    pub fn nonzero_orbit_count(&self) -> usize {
        let p = self.p;
        let n = (p * p) as usize;
        let mut seen = vec![false; n];
        let mut count = 0;
        for v in 1..n {
            if seen[v] {
                continue;
            }
            count += 1;
            let (v0, v1) = (v as u64 % p, v as u64 / p);
            for m in &self.complement {
                let w0 = (m[0] * v0 + m[1] * v1) % p;
                let w1 = (m[2] * v0 + m[3] * v1) % p;
                seen[(w0 + p * w1) as usize] = true;
            }
        }
        count
    }

    /// The complement as a permutation group on the `p^2` vectors.
    pub fn complement_group(&self) -> Result<GroupRef> {
        let gens = self
            .complement_generators
            .iter()
            .map(|m| matrix_perm(m, self.p))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_generators((self.p * self.p) as usize, gens, "HxX").map(Arc::new)
    }
}

fn matrix_perm(m: &Mat2, p: u64) -> Result<Perm> {
    let n = (p * p) as usize;
    Perm::new(
        (0..n)
            .map(|v| {
                let (v0, v1) = (v as u64 % p, v as u64 / p);
                let w0 = (m[0] * v0 + m[1] * v1) % p;
                let w1 = (m[2] * v0 + m[3] * v1) % p;
                (w0 + p * w1) as usize
            })
            .collect(),
    )
}

/// Builds the group for a prime `p ≡ 23 (mod 264)`, checking that `H × X`
/// acts freely on the nonzero vectors.
pub fn large_frobenius_group(p: u64) -> Result<FrobeniusGroup> {
    if !is_prime(p) || p % 264 != 23 {
        return Err(Error::InvalidArgument(format!("need a prime p ≡ 23 mod 264, got {p}")));
    }
    if p * p > super::perm::MAX_DEGREE as u64 {
        return Err(Error::GroupTooLarge { cap: super::perm::MAX_DEGREE });
    }
    let x = (p - 1) / 22;
    let neg = |a: u64| (p - a % p) % p;
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&(a, b)| (a * a + b * b + 1) % p == 0)
        .ok_or_else(|| Error::Construction(format!("-1 is not a sum of two squares mod {p}")))?;
    let one: Mat2 = [1, 0, 0, 1];
    let qi: Mat2 = [0, neg(1), 1, 0];
    let qj: Mat2 = [a, b, b, neg(a)];
    let qk = mat_mul(&qi, &qj, p);
    let half = pow_mod(2, p - 2, p);
    let sum = [one, qi, qj, qk].iter().fold([0; 4], |acc, m| mat_add(&acc, m, p));
    let s = mat_scale(&sum, half, p);
    let root2 = sqrt_mod(2, p)
        .ok_or_else(|| Error::Construction(format!("2 is not a square mod {p}")))?;
    let t = mat_scale(&mat_add(&one, &qi, p), pow_mod(root2, p - 2, p), p);
    let h = matrix_closure(&[s, t], p, 1000)?;
    if h.len() != 48 {
        return Err(Error::Construction(format!("cover has order {} instead of 48", h.len())));
    }
    let w = pow_mod(primitive_root(p), 22, p);
    let omega: Mat2 = [w, 0, 0, w];
    let gens = vec![s, t, omega];
    let complement = matrix_closure(&gens, p, 48 * x as usize + 1)?;
    if complement.len() as u64 != 48 * x {
        return Err(Error::Construction(format!(
            "complement has order {} instead of {}",
            complement.len(),
            48 * x
        )));
    }
    for m in &complement {
        if *m != one && det_minus_identity(m, p) == 0 {
            return Err(Error::Construction(format!("{m:?} fixes a nonzero vector")));
        }
    }
    let degree = (p * p) as usize;
    let translate = Perm::new((0..degree).map(|v| (v / p as usize) * p as usize + (v + 1) % p as usize).collect())?;
    let mut perm_gens = vec![translate];
    for m in &gens {
        perm_gens.push(matrix_perm(m, p)?);
    }
    let group = Arc::new(FiniteGroup::from_generators(
        degree,
        perm_gens,
        format!("FHK{p}"),
    )?);
    let expected = p * p * 48 * x;
    if group.order() as u64 != expected {
        return Err(Error::Construction(format!(
            "group has order {} instead of {expected}",
            group.order()
        )));
    }
    Ok(FrobeniusGroup {
        p,
        x,
        cover: "binary octahedral",
        complement_generators: gens,
        complement,
        group,
    })
}

/// Orbit partition of matrices by conjugation, used to cross-check class
/// counts of the complement without building it as a permutation group.
pub fn matrix_class_count(elems: &[Mat2], p: u64) -> usize {
    let index: HashMap<Mat2, usize> = elems.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let inverses: Vec<Mat2> = elems
        .iter()
        .map(|m| {
            let det = (m[0] * m[3] % p + p - m[1] * m[2] % p) % p;
            let di = pow_mod(det, p - 2, p);
            [m[3] * di % p, (p - m[1]) % p * di % p, (p - m[2]) % p * di % p, m[0] * di % p]
        })
        .collect();
    let mut seen = vec![false; elems.len()];
    let mut count = 0;
    for i in 0..elems.len() {
        if seen[i] {
            continue;
        }
        count += 1;
        for (t, ti) in elems.iter().zip(&inverses) {
            let c = mat_mul(&mat_mul(ti, &elems[i], p), t, p);
            seen[index[&c]] = true;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_primes() {
        assert!(large_frobenius_group(7).is_err());
        assert!(large_frobenius_group(287).is_err());
    }

    #[test]
    fn fixed_point_test_matches_direct_scan() {
        let p = 7;
        for m in [[1, 1, 0, 1], [2, 0, 0, 4], [0, 6, 1, 0], [3, 0, 0, 3]] {
            let direct = (1..p * p).any(|v| {
                let (v0, v1) = (v % p, v / p);
                (m[0] * v0 + m[1] * v1) % p == v0 && (m[2] * v0 + m[3] * v1) % p == v1
            });
            assert_eq!(direct, det_minus_identity(&m, p) == 0, "{m:?}");
        }
    }

    #[test]
    fn binary_octahedral_has_eight_classes() {
        // k(2.S4^-) = 8; also one involution (the central -1)
        let p = 23;
        let g = large_frobenius_group(p).unwrap();
        assert_eq!(g.group.order(), 25392);
        assert_eq!(g.x, 1);
        assert_eq!(matrix_class_count(&g.complement, p), 8);
        let involutions = g
            .complement
            .iter()
            .filter(|m| **m != [1, 0, 0, 1] && mat_mul(m, m, p) == [1, 0, 0, 1])
            .count();
        assert_eq!(involutions, 1);
        // free action: every orbit on nonzero vectors is regular
        assert_eq!(g.nonzero_orbit_count() * 48, (p * p - 1) as usize);
    }
}
