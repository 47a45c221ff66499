use std::fmt;

use super::poly;
use crate::error::{Error, Result};

/// An element of `F_{p^s}`.
///
/// The coefficient vector `(c_0, ..., c_{s-1})` of the residue polynomial is
/// packed base `p`: the value is `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`. For a
/// prime field this is just the residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GFElement(pub(crate) u32);

impl GFElement {
    pub const ZERO: GFElement = GFElement(0);
    pub const ONE: GFElement = GFElement(1);

    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fields with at most this many elements get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug)]
struct LogTables {
    /// `exp[i] = g^i`, doubled so sums of two logs index directly.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `one_plus[k] = 1 + g^k` (Zech table).
    one_plus: Vec<u32>,
}

/// The finite field `F_{p^s} = F_p[x]/(modulus)`.
#[derive(Clone, Debug)]
pub struct GField {
    p: u32,
    s: u32,
    q: u64,
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

impl PartialEq for GField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}
impl Eq for GField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl GField {
    /// `F_{p^s}` with the smallest monic irreducible modulus of degree `s`,
    /// ordering candidates by their packed lower coefficients.
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if s == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        let q = (p as u64)
            .checked_pow(s)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{s} does not fit in 32 bits")))?;
        if s == 1 {
            return Ok(Self::prime(p));
        }
        let tail_count = q;
        let mut modulus = None;
        for code in 0..tail_count {
            let mut f = unpack(code as u32, p, s);
            f.push(1);
            if f[0] != 0 && poly::is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("irreducible polynomials exist in every degree");
        let mut field = GField { p, s, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn prime(p: u32) -> Self {
        assert!(is_prime(p as u64), "{p} is not prime");
        GField { p, s: 1, q: p as u64, modulus: vec![0, 1], tables: None }
    }

    pub fn prime_subfield(&self) -> GField {
        GField::prime(self.p)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.s == 1
    }

    /// Monic modulus, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> GFElement {
        GFElement::ZERO
    }

    pub fn one(&self) -> GFElement {
        GFElement::ONE
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> GFElement {
        GFElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_packed(&self, v: u32) -> GFElement {
        assert!((v as u64) < self.q, "packed value out of range");
        GFElement(v)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> GFElement {
        assert!(coeffs.len() <= self.s as usize);
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p as u64 + (c % self.p) as u64;
        }
        GFElement(v as u32)
    }

    pub fn coeffs(&self, a: GFElement) -> Vec<u32> {
        unpack(a.0, self.p, self.s)
    }

    /// `x^t`, the `t`-th element of the polynomial basis over `F_p`.
    pub fn basis_element(&self, t: u32) -> GFElement {
        assert!(t < self.s);
        GFElement(self.p.pow(t))
    }

    pub fn elements(&self) -> impl Iterator<Item = GFElement> {
        (0..self.q).map(|v| GFElement(v as u32))
    }

    #[inline]
    pub fn add(&self, a: GFElement, b: GFElement) -> GFElement {
        if self.s == 1 {
            let t = a.0 as u64 + b.0 as u64;
            let p = self.p as u64;
            return GFElement(if t >= p { (t - p) as u32 } else { t as u32 });
        }
        if self.p == 2 {
            return GFElement(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => {
                let n = (self.q - 1) as u32;
                let la = t.log[a.0 as usize];
                let lb = t.log[b.0 as usize];
                let k = if lb >= la { lb - la } else { lb + n - la };
                let w = t.one_plus[k as usize];
                if w == 0 {
                    GFElement::ZERO
                } else {
                    GFElement(t.exp[(la + t.log[w as usize]) as usize])
                }
            }
            None => self.add_digits(a, b),
        }
    }

    fn add_digits(&self, a: GFElement, b: GFElement) -> GFElement {
        let p = self.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.s {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        GFElement(out as u32)
    }

    #[inline]
    pub fn neg(&self, a: GFElement) -> GFElement {
        if a.0 == 0 {
            return a;
        }
        if self.s == 1 {
            return GFElement(self.p - a.0);
        }
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self.coeffs(a).into_iter().map(|c| (self.p - c) % self.p).collect();
        self.from_coeffs(&c)
    }

    #[inline]
    pub fn sub(&self, a: GFElement, b: GFElement) -> GFElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: GFElement, b: GFElement) -> GFElement {
        if self.s == 1 {
            return GFElement((a.0 as u64 * b.0 as u64 % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return GFElement::ZERO;
        }
        match &self.tables {
            Some(t) => GFElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_schoolbook(a, b),
        }
    }

    fn mul_schoolbook(&self, a: GFElement, b: GFElement) -> GFElement {
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let r = poly::rem(&prod, &self.modulus, self.p);
        self.from_coeffs(&r)
    }

    pub fn pow(&self, a: GFElement, e: u64) -> GFElement {
        if e == 0 {
            return GFElement::ONE;
        }
        if a.0 == 0 {
            return GFElement::ZERO;
        }
        if let Some(t) = &self.tables {
            let n = self.q - 1;
            let idx = (t.log[a.0 as usize] as u64 * (e % n)) % n;
            return GFElement(t.exp[idx as usize]);
        }
        let mut acc = GFElement::ONE;
        let mut b = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: GFElement) -> GFElement {
        assert!(a.0 != 0, "inverse of zero");
        if let Some(t) = &self.tables {
            let n = (self.q - 1) as u32;
            let l = t.log[a.0 as usize];
            return GFElement(t.exp[((n - l) % n) as usize]);
        }
        self.pow(a, self.q - 2)
    }

    pub fn div(&self, a: GFElement, b: GFElement) -> GFElement {
        self.mul(a, self.inv(b))
    }

    /// `a^{p^k}`.
    pub fn frobenius(&self, a: GFElement, k: u32) -> GFElement {
        let k = k % self.s;
        if k == 0 {
            return a;
        }
        self.pow(a, (self.p as u64).pow(k))
    }

    /// `y += a * x`.
    #[inline]
    pub fn axpy(&self, y: &mut [GFElement], a: GFElement, x: &[GFElement]) {
        debug_assert_eq!(y.len(), x.len());
        if a.0 == 0 {
            return;
        }
        if self.s == 1 {
            let p = self.p as u64;
            let a = a.0 as u64;
            for (yi, xi) in y.iter_mut().zip(x) {
                if xi.0 != 0 {
                    yi.0 = ((yi.0 as u64 + a * xi.0 as u64) % p) as u32;
                }
            }
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi.0 != 0 {
                *yi = self.add(*yi, self.mul(a, xi));
            }
        }
    }

    pub fn scale(&self, x: &mut [GFElement], a: GFElement) {
        for xi in x.iter_mut() {
            *xi = self.mul(*xi, a);
        }
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.q - 1) as usize;
        let factors = prime_divisors(n as u64);
        let generator = (2..self.q as u32)
            .map(GFElement)
            .find(|&g| {
                factors.iter().all(|&r| self.pow_schoolbook(g, n as u64 / r) != GFElement::ONE)
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = GFElement::ONE;
        for i in 0..n {
            exp[i] = cur.0;
            exp[i + n] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_schoolbook(cur, generator);
        }
        let one_plus = (0..n).map(|k| self.add_digits(GFElement::ONE, GFElement(exp[k])).0).collect();
        LogTables { exp, log, one_plus }
    }

    fn pow_schoolbook(&self, a: GFElement, mut e: u64) -> GFElement {
        let mut acc = GFElement::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, b);
            }
            b = self.mul_schoolbook(b, b);
            e >>= 1;
        }
        acc
    }
}

fn unpack(mut v: u32, p: u32, s: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(s as usize);
    for _ in 0..s {
        out.push(v % p);
        v /= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_f3() {
        let f = GField::new(3, 1).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.mul(f.from_int(2), f.from_int(2)), GFElement::ONE);
        assert_eq!(f.from_int(-1), f.from_int(2));
    }

    #[test]
    fn f4_modulus_is_the_unique_irreducible_quadratic() {
        let f = GField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f16_modulus_matches_exhaustive_scan() {
        // Oracle: a monic quartic over F2 is irreducible iff no monic
        // polynomial of degree 1 or 2 divides it.
        let mut divisors: Vec<Vec<u32>> = Vec::new();
        for deg in 1..=2usize {
            for code in 0..(1u32 << deg) {
                let mut d: Vec<u32> = (0..deg).map(|i| (code >> i) & 1).collect();
                d.push(1);
                divisors.push(d);
            }
        }
        let first = (0u32..16)
            .map(|code| {
                let mut f: Vec<u32> = (0..4).map(|i| (code >> i) & 1).collect();
                f.push(1);
                f
            })
            .find(|f| divisors.iter().all(|d| !poly::rem(f, d, 2).is_empty()))
            .unwrap();
        assert_eq!(first, vec![1, 1, 0, 0, 1]);
        assert_eq!(GField::new(2, 4).unwrap().modulus(), first.as_slice());
    }

    #[test]
    fn frobenius_has_order_s() {
        for (p, s) in [(2, 3), (3, 2), (5, 2), (2, 5)] {
            let f = GField::new(p, s).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius(a, s), a);
            }
            let moved = f.elements().any(|a| f.frobenius(a, 1) != a);
            assert!(moved);
        }
    }

    #[test]
    fn large_extension_without_tables_agrees_with_tables() {
        // 3^11 > 2^16 forces the schoolbook path.
        let big = GField::new(3, 11).unwrap();
        assert!(big.tables.is_none());
        let a = big.from_coeffs(&[1, 2, 0, 1]);
        let b = big.from_coeffs(&[0, 1, 1, 0, 0, 2]);
        let ab = big.mul(a, b);
        assert_eq!(big.mul(ab, big.inv(b)), a);
        assert_eq!(big.pow(a, big.q() - 1), GFElement::ONE);
    }

    fn field_strategy() -> impl Strategy<Value = (u32, u32)> {
        prop_oneof![
            Just((2, 1)),
            Just((7, 1)),
            Just((2, 3)),
            Just((3, 2)),
            Just((5, 2)),
            Just((23, 2)),
            Just((3, 4)),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms((p, s) in field_strategy(), xa in any::<u32>(), xb in any::<u32>(), xc in any::<u32>()) {
            let f = GField::new(p, s).unwrap();
            let q = f.q() as u32;
            let (a, b, c) = (GFElement(xa % q), GFElement(xb % q), GFElement(xc % q));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), GFElement::ZERO);
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a)), GFElement::ONE);
            }
            prop_assert_eq!(f.pow(a, f.q()), a);
        }
    }
}
