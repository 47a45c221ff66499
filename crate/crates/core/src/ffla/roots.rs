use super::field::{GFElement, GField};

/// Below this field size roots are found by scanning the field.
const SCAN_LIMIT: u64 = 1 << 10;

type Poly = Vec<GFElement>;

fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn monic(f: &GField, a: Poly) -> Poly {
    let inv = f.inv(*a.last().expect("nonzero polynomial"));
    a.into_iter().map(|c| f.mul(c, inv)).collect()
}

fn rem(f: &GField, a: &[GFElement], b: &[GFElement]) -> Poly {
    let mut r = trim(a.to_vec());
    let lead = f.inv(*b.last().expect("nonzero divisor"));
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = f.mul(*r.last().unwrap(), lead);
        for (j, &c) in b.iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(factor, c));
        }
        r = trim(r);
    }
    r
}

fn mul_mod(f: &GField, a: &[GFElement], b: &[GFElement], m: &[GFElement]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GFElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if !x.is_zero() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    rem(f, &out, m)
}

fn pow_mod(f: &GField, a: &[GFElement], mut e: u64, m: &[GFElement]) -> Poly {
    let mut acc = rem(f, &[GFElement::ONE], m);
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &base, m);
        }
        base = mul_mod(f, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn gcd(f: &GField, a: Poly, b: Poly) -> Poly {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn eval(f: &GField, poly: &[GFElement], x: GFElement) -> GFElement {
    poly.iter().rev().fold(GFElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Roots of `poly` (coefficients low degree first) when it is a product of
/// distinct linear factors over `F_q`; `None` otherwise.
///
/// Large fields use trace splitting: for an `F_p`-basis `beta` of `F_q`,
/// `h = prod_c gcd(h, Tr(beta X) - c)`, and distinct roots are separated by
/// some `beta`.
pub fn split_roots(f: &GField, poly: &[GFElement]) -> Option<Vec<GFElement>> {
    let poly = monic(f, trim(poly.to_vec()));
    let deg = poly.len() - 1;
    let mut roots: Vec<GFElement> = if f.q() <= SCAN_LIMIT {
        f.elements().filter(|&t| eval(f, &poly, t).is_zero()).collect()
    } else {
        let mut parts = vec![poly.clone()];
        for t in 0..f.s() {
            if parts.iter().all(|h| h.len() <= 2) {
                break;
            }
            let beta = f.basis_element(t);
            let mut next = Vec::new();
            for h in parts {
                if h.len() <= 2 {
                    next.push(h);
                    continue;
                }
                let x = rem(f, &[GFElement::ZERO, beta], &h);
                let mut tr = Vec::new();
                let mut term = x;
                for _ in 0..f.s() {
                    let n = tr.len().max(term.len());
                    tr = (0..n)
                        .map(|i| f.add(*tr.get(i).unwrap_or(&GFElement::ZERO), *term.get(i).unwrap_or(&GFElement::ZERO)))
                        .collect();
                    term = pow_mod(f, &term, f.p() as u64, &h);
                }
                let mut covered = 0;
                for c in 0..f.p() {
                    let mut shifted = tr.clone();
                    if shifted.is_empty() {
                        shifted.push(GFElement::ZERO);
                    }
                    shifted[0] = f.sub(shifted[0], f.from_int(c as i64));
                    let g = gcd(f, h.clone(), trim(shifted));
                    if g.len() > 1 {
                        covered += g.len() - 1;
                        next.push(g);
                    }
                }
                if covered != h.len() - 1 {
                    return None;
                }
            }
            parts = next;
        }
        if parts.iter().any(|h| h.len() != 2) {
            return None;
        }
        parts.iter().map(|h| f.neg(h[0])).collect()
    };
    roots.sort();
    roots.dedup();
    (roots.len() == deg).then_some(roots)
}
