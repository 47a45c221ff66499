//! Dense polynomials over a prime field, coefficients stored low degree first.
//!
//! Only what the field constructor needs: products, remainders, gcd and
//! modular powers.

pub(crate) type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, (p - 2) as u64, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u64, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64 % m;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let m = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % m;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo `b` (b nonzero).
pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let m = p as u64;
    let lead_inv = inv_mod(*b.last().unwrap(), p) as u64;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = *r.last().unwrap() as u64 * lead_inv % m;
        for (j, &c) in b.iter().enumerate() {
            let sub = factor * c as u64 % m;
            r[shift + j] = ((r[shift + j] as u64 + m - sub) % m) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = *a.get(i).unwrap_or(&0);
            let y = *b.get(i).unwrap_or(&0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

pub(crate) fn powmod(base: &[u32], mut exp: u64, modulus: &[u32], p: u32) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    let x: Poly = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..deg / 2 {
        xp = powmod(&xp, p as u64, f, p);
        let g = gcd(f, &sub(&xp, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
