//! Exact arithmetic over `F_{p^s}` and the linear algebra built on it.

mod field;
mod matrix;
pub(crate) mod poly;
mod roots;
mod subspace;

pub use field::{is_prime, prime_divisors, GFElement, GField};
pub use matrix::{semilinear_kernel, GFMatrix};
pub use roots::split_roots;
pub use subspace::Subspace;

use std::sync::Arc;

use crate::error::Result;

/// `F_{p^s}`, with the smallest monic irreducible modulus of degree `s`.
pub fn make_field(p: u32, s: u32) -> Result<Arc<GField>> {
    GField::new(p, s).map(Arc::new)
}

/// Reinterprets `F_p`-coordinates `(c_{i,0..s})` as a vector over `F_q`.
pub fn from_prime_coords(field: &GField, flat: &[GFElement]) -> Vec<GFElement> {
    let s = field.s() as usize;
    flat.chunks(s)
        .map(|chunk| {
            let digits: Vec<u32> = chunk.iter().map(|c| c.packed()).collect();
            field.from_coeffs(&digits)
        })
        .collect()
}

/// Splits each coordinate over `F_q` into its `s` coefficients over `F_p`.
pub fn to_prime_coords(field: &GField, v: &[GFElement]) -> Vec<GFElement> {
    let mut out = Vec::with_capacity(v.len() * field.s() as usize);
    for &x in v {
        out.extend(field.coeffs(x).into_iter().map(GFElement));
    }
    out
}
