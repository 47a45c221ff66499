//! Jacobson radical.
//!
//! Commutative algebras: the nilradical is the kernel of `a -> a^{p^K}` with
//! `p^K >= dim`, a `p^K`-semilinear map.
//!
//! General algebras: the trace-function layering over `F_p`. With `x~` an
//! integer lift of the left-regular matrix of `x` and
//! `g_i(x) = (Tr(x~^{p^i}) mod p^{i+1}) / p^i`, set `I_{-1} = A` and
//! `I_i = {x in I_{i-1} : g_i(xy) = 0 for all y}`; then `I_l = J(A)` for
//! `l = floor(log_p N)`, `N` the `F_p`-dimension. Each `g_i` is `F_p`-linear
//! on `I_{i-1}`, so it is evaluated on a basis only.

use std::sync::Arc;

use super::structure::StructureAlgebra;
use crate::ffla::{from_prime_coords, semilinear_kernel, to_prime_coords, GFElement, GField, GFMatrix, Subspace};

impl StructureAlgebra {
    /// `J(A)`, computed once.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| {
            if self.is_commutative() {
                commutative_radical(self)
            } else {
                trace_radical(self)
            }
        })
    }
}

/// Kernel of the Frobenius-power map; valid for commutative algebras only.
pub fn commutative_radical(a: &StructureAlgebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    if n == 0 {
        return Subspace::zero(f.clone(), 0);
    }
    let p = f.p() as u64;
    let mut k = 0u32;
    let mut pk = 1u64;
    while pk < n as u64 {
        pk *= p;
        k += 1;
    }
    // column i is b_i^{p^K}
    let cols: Vec<Vec<GFElement>> = (0..n).map(|i| a.pow(&a.basis_vector(i), pk)).collect();
    let m = GFMatrix::from_columns(f.clone(), n, &cols).expect("columns have length n");
    Subspace::span(f.clone(), n, semilinear_kernel(&m, k))
}

enum Mode<'a> {
    /// 0/1 structure constants of an associative `Z`-form; works on the
    /// basis `b_i` over `F_p`.
    Integral { trace: Vec<u64> },
    /// Restriction of scalars to the `F_p`-basis `w^t b_i`.
    Restricted { field: &'a GField },
}

struct FpView<'a> {
    alg: &'a StructureAlgebra,
    p: u64,
    n: usize,
    mode: Mode<'a>,
}

impl FpView<'_> {
    fn to_f(&self, v: &[u32]) -> Vec<GFElement> {
        match &self.mode {
            Mode::Integral { .. } => v.iter().map(|&c| GFElement(c)).collect(),
            Mode::Restricted { field } => {
                let flat: Vec<GFElement> = v.iter().map(|&c| GFElement(c)).collect();
                from_prime_coords(field, &flat)
            }
        }
    }

    fn from_f(&self, v: &[GFElement]) -> Vec<u32> {
        match &self.mode {
            Mode::Integral { .. } => v.iter().map(|c| c.packed()).collect(),
            Mode::Restricted { field } => to_prime_coords(field, v).iter().map(|c| c.packed()).collect(),
        }
    }

    /// `x * e_c` for the `c`-th `F_p`-basis vector.
    fn mul_basis(&self, x: &[u32], c: usize) -> Vec<u32> {
        match &self.mode {
            Mode::Integral { .. } => {
                let mut out = vec![0u64; self.n];
                for (i, &xi) in x.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for &(k, _) in self.alg.product(i, c) {
                        out[k as usize] += xi as u64;
                    }
                }
                out.into_iter().map(|v| (v % self.p) as u32).collect()
            }
            Mode::Restricted { field } => {
                let s = field.s() as usize;
                let mut e = vec![GFElement::ZERO; self.alg.dim()];
                e[c / s] = field.basis_element((c % s) as u32);
                let prod = self.alg.mul(&self.to_f(x), &e);
                self.from_f(&prod)
            }
        }
    }

    /// `Tr(x~^{p^i}) mod p^{i+1}`
    fn trace_power(&self, x: &[u32], i: u32) -> u64 {
        let m = self.p.pow(i + 1);
        let e = self.p.pow(i);
        match &self.mode {
            Mode::Integral { trace } => {
                let y = self.int_pow(x, e, m);
                y.iter().zip(trace).fold(0, |acc, (&a, &t)| (acc + a * t) % m)
            }
            Mode::Restricted { .. } => {
                let n = self.n;
                let mut mat = vec![0u64; n * n];
                for c in 0..n {
                    for (r, v) in self.mul_basis(x, c).into_iter().enumerate() {
                        mat[r * n + c] = v as u64;
                    }
                }
                let pw = mat_pow(&mat, n, e, m);
                (0..n).fold(0, |acc, r| (acc + pw[r * n + r]) % m)
            }
        }
    }

    fn int_mul(&self, x: &[u64], y: &[u64], m: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        let ynz: Vec<usize> = (0..self.n).filter(|&j| y[j] != 0).collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &j in &ynz {
                let a = xi * y[j] % m;
                for &(k, _) in self.alg.product(i, j) {
                    out[k as usize] += a;
                }
            }
            // keep partial sums bounded
            if out.iter().any(|&v| v > u64::MAX / 4) {
                out.iter_mut().for_each(|v| *v %= m);
            }
        }
        out.into_iter().map(|v| v % m).collect()
    }

    fn int_pow(&self, x: &[u32], mut e: u64, m: u64) -> Vec<u64> {
        let mut base: Vec<u64> = x.iter().map(|&c| c as u64 % m).collect();
        let mut acc: Option<Vec<u64>> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => self.int_mul(&a, &base, m),
                });
            }
            e >>= 1;
            if e > 0 {
                base = self.int_mul(&base, &base, m);
            }
        }
        acc.expect("exponent is positive")
    }
}

fn mat_mul(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + aik * b[k * n + j]) % m;
            }
        }
    }
    out
}

fn mat_pow(a: &[u64], n: usize, mut e: u64, m: u64) -> Vec<u64> {
    let mut acc: Option<Vec<u64>> = None;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(x) => mat_mul(&x, &base, n, m),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base, n, m);
        }
    }
    acc.expect("exponent is positive")
}

/// The trace-function radical; valid for every algebra.
pub fn trace_radical(a: &StructureAlgebra) -> Subspace {
    let f = a.field();
    let p = f.p() as u64;
    let integral = a.is_integral();
    let mode = if integral {
        let trace = (0..a.dim())
            .map(|i| (0..a.dim()).filter(|&j| a.product(i, j).iter().any(|&(k, _)| k as usize == j)).count() as u64)
            .collect();
        Mode::Integral { trace }
    } else {
        Mode::Restricted { field: f }
    };
    let n = if integral { a.dim() } else { a.dim() * f.s() as usize };
    let view = FpView { alg: a, p, n, mode };
    let fp = Arc::new(GField::prime(f.p()));
    if n == 0 {
        return Subspace::zero(f.clone(), a.dim());
    }
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let mut layer = Subspace::full(fp.clone(), n);
    for i in 0..=l {
        let pi = p.pow(i);
        let basis: Vec<Vec<u32>> = layer.basis().iter().map(|v| v.iter().map(|c| c.packed()).collect()).collect();
        let gvals: Vec<u64> = basis
            .iter()
            .map(|x| {
                let t = view.trace_power(x, i);
                debug_assert_eq!(t % pi, 0, "trace not divisible by p^i on I_(i-1)");
                t / pi
            })
            .collect();
        if gvals.iter().all(|&g| g == 0) {
            continue;
        }
        let pivots = layer.pivots().to_vec();
        let phi = |y: &[u32]| -> u64 {
            pivots.iter().zip(&gvals).fold(0, |acc, (&pc, &g)| (acc + y[pc] as u64 * g) % p)
        };
        let mut m = GFMatrix::zeros(fp.clone(), n, basis.len());
        for c in 0..n {
            for (j, x) in basis.iter().enumerate() {
                m.set(c, j, GFElement(phi(&view.mul_basis(x, c)) as u32));
            }
        }
        let kernel = m.kernel();
        layer = Subspace::span(fp.clone(), n, kernel.iter().map(|k| layer.combine(k)));
        if layer.is_zero() {
            break;
        }
    }
    Subspace::span(
        f.clone(),
        a.dim(),
        layer.basis().iter().map(|v| view.to_f(&v.iter().map(|c| c.packed()).collect::<Vec<_>>())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::make_field;

    #[test]
    fn truncated_polynomial_radical() {
        for p in [2, 3, 5] {
            let f = make_field(p, 1).unwrap();
            let a = StructureAlgebra::truncated_polynomial(f, p as usize);
            assert_eq!(a.radical().dim(), p as usize - 1);
            assert!(!a.radical().contains(&a.basis_vector(0)));
            assert_eq!(&trace_radical(&a), a.radical());
        }
    }

    #[test]
    fn semisimple_has_zero_radical() {
        let f = make_field(2, 2).unwrap();
        let a = StructureAlgebra::diagonal(f, 2);
        assert!(a.radical().is_zero());
        assert!(trace_radical(&a).is_zero());
    }

    /// Upper triangular 2x2 matrices: radical is the strictly upper part.
    fn upper_triangular(f: Arc<GField>) -> StructureAlgebra {
        // basis e11, e12, e22
        let o = GFElement::ONE;
        let products = vec![
            vec![(0, o)], vec![(1, o)], vec![],
            vec![], vec![], vec![(1, o)],
            vec![], vec![], vec![(2, o)],
        ];
        let labels = ["e11", "e12", "e22"].iter().map(|s| s.to_string()).collect();
        StructureAlgebra::new(f, labels, products, vec![o, GFElement::ZERO, o]).unwrap()
    }

    #[test]
    fn noncommutative_radical() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let f = make_field(p, s).unwrap();
            let a = upper_triangular(f.clone());
            assert!(!a.is_commutative());
            a.check_algebra().unwrap();
            let j = a.radical();
            assert_eq!(j, &Subspace::span(f.clone(), 3, [a.basis_vector(1)]));
            let integral = upper_triangular(f.clone()).with_integral_form().unwrap();
            assert_eq!(&trace_radical(&integral), j);
        }
    }

    #[test]
    fn group_algebra_of_s3_in_characteristic_three() {
        let f = make_field(3, 1).unwrap();
        let g = crate::group::symmetric(3).unwrap();
        let a = StructureAlgebra::group_algebra(f.clone(), &g);
        // FS3 = two blocks? no: one block with two simple modules of dim 1;
        // dim J = 6 - 2 = 4
        assert_eq!(a.radical().dim(), 4);
        // restriction of scalars agrees with the integral path
        let plain = StructureAlgebra::new(
            f.clone(),
            a.labels().to_vec(),
            (0..36).map(|ij| a.product(ij / 6, ij % 6).iter().map(|&(k, c)| (k as usize, c)).collect()).collect(),
            a.unit().to_vec(),
        )
        .unwrap();
        assert!(!plain.is_integral());
        assert_eq!(&trace_radical(&plain), a.radical());
    }
}
