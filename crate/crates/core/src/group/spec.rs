//! Textual group descriptors.
//!
//! ```text
//! C n          cyclic of order n
//! D n          dihedral of order n (n even, n >= 4)
//! S n          symmetric on n points
//! M p d        modular p-group of order p^d (d >= 3)
//! FHK p        Frobenius group F_p^2 ⋊ (2.S4 x C_{(p-1)/22}), p ≡ 23 mod 264
//! X n1 n2 ...  direct product of cyclic groups
//! CS n a       C_n ⋊ C_k, generator acting by x -> x^a
//! perm:deg:g1;g2;...   generators in 0-based cycle notation
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::catalog;
use super::finite::{FiniteGroup, GroupRef};
use super::frobenius::large_frobenius_group;
use super::perm::Perm;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Modular { p: usize, d: u32 },
    Frobenius(u64),
    Abelian(Vec<usize>),
    CyclicSemidirect { n: usize, a: usize },
    Perm { degree: usize, gens: Vec<Perm> },
}

fn invalid(spec: &str, reason: impl Into<String>) -> Error {
    Error::InvalidSpec { spec: spec.to_string(), reason: reason.into() }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if let Some(rest) = text.strip_prefix("perm:") {
            let (deg, gens) = rest
                .split_once(':')
                .ok_or_else(|| invalid(s, "expected perm:<degree>:<gens>"))?;
            let degree: usize = deg.trim().parse().map_err(|_| invalid(s, "bad degree"))?;
            if degree == 0 || degree > super::perm::MAX_DEGREE {
                return Err(invalid(s, "degree out of range"));
            }
            let gens = gens
                .split(';')
                .filter(|g| !g.trim().is_empty())
                .map(|g| Perm::parse_cycles(degree, g).map_err(|e| invalid(s, e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Perm { degree, gens });
        }
        let mut words = text.split_whitespace();
        let head = words.next().ok_or_else(|| invalid(s, "empty spec"))?;
        let args: Vec<u64> = words
            .map(|w| w.parse::<u64>().map_err(|_| invalid(s, format!("{w:?} is not a number"))))
            .collect::<Result<_>>()?;
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(invalid(s, format!("{head} takes {n} argument(s)")))
            }
        };
        let spec = match head {
            "C" => {
                arity(1)?;
                GroupSpec::Cyclic(args[0] as usize)
            }
            "D" => {
                arity(1)?;
                GroupSpec::Dihedral(args[0] as usize)
            }
            "S" => {
                arity(1)?;
                GroupSpec::Symmetric(args[0] as usize)
            }
            "M" => {
                arity(2)?;
                GroupSpec::Modular { p: args[0] as usize, d: args[1] as u32 }
            }
            "FHK" => {
                arity(1)?;
                GroupSpec::Frobenius(args[0])
            }
            "X" => {
                if args.is_empty() {
                    return Err(invalid(s, "X needs at least one factor"));
                }
                GroupSpec::Abelian(args.iter().map(|&n| n as usize).collect())
            }
            "CS" => {
                arity(2)?;
                GroupSpec::CyclicSemidirect { n: args[0] as usize, a: args[1] as usize }
            }
            other => return Err(invalid(s, format!("unknown family {other:?}"))),
        };
        spec.validate().map_err(|e| match e {
            Error::InvalidArgument(reason) => invalid(s, reason),
            e => e,
        })?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C {n}"),
            GroupSpec::Dihedral(n) => write!(f, "D {n}"),
            GroupSpec::Symmetric(n) => write!(f, "S {n}"),
            GroupSpec::Modular { p, d } => write!(f, "M {p} {d}"),
            GroupSpec::Frobenius(p) => write!(f, "FHK {p}"),
            GroupSpec::Abelian(ns) => {
                write!(f, "X")?;
                for n in ns {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
            GroupSpec::CyclicSemidirect { n, a } => write!(f, "CS {n} {a}"),
            GroupSpec::Perm { degree, gens } => {
                let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "perm:{degree}:{}", gens.join(";"))
            }
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl GroupSpec {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        match self {
            GroupSpec::Cyclic(0) | GroupSpec::Symmetric(0) => bad("order must be positive".into()),
            GroupSpec::Dihedral(n) if *n < 4 || n % 2 == 1 => {
                bad(format!("dihedral order {n} must be even and >= 4"))
            }
            GroupSpec::Symmetric(n) if *n > 8 => bad(format!("S{n} is too large")),
            GroupSpec::Modular { p, d } if !crate::ffla::is_prime(*p as u64) || *d < 3 => {
                bad(format!("M {p} {d} needs a prime and d >= 3"))
            }
            GroupSpec::Frobenius(p) if !crate::ffla::is_prime(*p) || p % 264 != 23 => {
                bad(format!("FHK needs a prime ≡ 23 mod 264, got {p}"))
            }
            GroupSpec::Abelian(ns) if ns.contains(&0) => bad("factors must be positive".into()),
            GroupSpec::CyclicSemidirect { n, a }
                if *n < 2 || super::perm::gcd(*n as u64, *a as u64) != 1 =>
            {
                bad(format!("{a} is not a unit mod {n}"))
            }
            _ => Ok(()),
        }
    }

    /// Group order from the family's formula, without building the group.
    pub fn expected_order(&self) -> Option<u64> {
        Some(match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => *n as u64,
            GroupSpec::Symmetric(n) => (1..=*n as u64).product(),
            GroupSpec::Modular { p, d } => (*p as u64).pow(*d),
            GroupSpec::Frobenius(p) => p * p * 48 * ((p - 1) / 22),
            GroupSpec::Abelian(ns) => ns.iter().map(|&n| n as u64).product(),
            GroupSpec::CyclicSemidirect { n, a } => {
                let k = (1..=*n).find(|&k| catalog::mod_pow(*a, k, *n) == 1)?;
                (*n * k) as u64
            }
            GroupSpec::Perm { .. } => return None,
        })
    }

    pub fn build(&self) -> Result<GroupRef> {
        self.build_capped(super::finite::DEFAULT_ORDER_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<GroupRef> {
        if let Some(n) = self.expected_order() {
            if n > cap as u64 {
                return Err(Error::GroupTooLarge { cap });
            }
        }
        let g = match self {
            GroupSpec::Cyclic(n) => catalog::cyclic(*n)?,
            GroupSpec::Dihedral(n) => catalog::dihedral(*n)?,
            GroupSpec::Symmetric(n) => catalog::symmetric(*n)?,
            GroupSpec::Modular { p, d } => catalog::modular_group(*p, *d)?,
            GroupSpec::Frobenius(p) => large_frobenius_group(*p)?.group,
            GroupSpec::Abelian(ns) => catalog::abelian(ns)?,
            GroupSpec::CyclicSemidirect { n, a } => catalog::cyclic_semidirect(*n, *a)?,
            GroupSpec::Perm { degree, gens } => std::sync::Arc::new(
                FiniteGroup::from_generators_capped(*degree, gens.clone(), self.to_string(), cap)?,
            ),
        };
        Ok(g)
    }
}

/// The built-in verification catalog, in a fixed order. `FHK 23` is only
/// included when `large` is set.
pub fn default_catalog(large: bool) -> Vec<GroupSpec> {
    let mut specs: Vec<&str> = vec![
        "C 2", "C 3", "C 4", "C 5", "C 6", "C 7", "C 8", "C 9", "C 10", "C 11", "C 12", "C 13",
        "C 16", "C 25", "C 27",
        "X 2 2", "X 2 4", "X 3 3", "X 2 2 2", "X 4 4", "X 2 8",
        "D 6", "D 8", "D 10", "D 12", "D 14", "D 16", "D 18", "D 20",
        "S 3", "S 4", "S 5",
        "M 2 4", "M 3 4", "M 2 5",
        "CS 5 2", "CS 7 2", "CS 7 3", "CS 9 2", "CS 11 3", "CS 13 3",
        "perm:4:(0 1 2);(0 1)(2 3)",
        "perm:8:(0 1 3 6)(2 5 7 4);(0 2 3 7)(1 4 6 5)",
    ];
    if large {
        specs.push("FHK 23");
    }
    specs.into_iter().map(|s| s.parse().expect("catalog specs are valid")).collect()
}
