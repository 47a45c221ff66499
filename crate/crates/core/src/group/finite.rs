use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::perm::{lcm, Perm};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 50_000;

/// Groups at most this large get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// A conjugacy class of a [`FiniteGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element index in the class.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub centralizer_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `nu_p(|C_G(x)|)`.
    pub fn defect(&self, p: u32) -> u32 {
        nu(self.centralizer_order as u64, p as u64)
    }
}

pub(crate) fn nu(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// A permutation group with every element enumerated.
///
/// Element 0 is the identity; the rest appear in breadth-first order over
/// the generators (each dequeued element is multiplied on the right by the
/// generators in the order given).
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    gen_index: Vec<usize>,
    /// `right_gen[g][x] = x * generators[g]`
    right_gen: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: OnceLock<ClassData>,
}

pub type GroupRef = Arc<FiniteGroup>;

impl FiniteGroup {
    pub fn from_generators(degree: usize, gens: Vec<Perm>, name: impl Into<String>) -> Result<Self> {
        Self::from_generators_capped(degree, gens, name, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        gens: Vec<Perm>,
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPerm(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut right_gen: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let y = elements[head].compose(g);
                let yi = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::GroupTooLarge { cap });
                        }
                        let i = elements.len() as u32;
                        index.insert(y.clone(), i);
                        elements.push(y);
                        i
                    }
                };
                right_gen[gi].push(yi);
            }
            head += 1;
        }
        let n = elements.len();
        let gen_index = gens.iter().map(|g| index[g] as usize).collect();
        let inverse = elements.iter().map(|x| index[&x.inverse()]).collect();
        let orders = elements.iter().map(|x| x.order() as u32).collect();
        let mut group = FiniteGroup {
            name: name.into(),
            degree,
            generators: gens,
            elements,
            index,
            gen_index,
            right_gen,
            inverse,
            orders,
            table: None,
            classes: OnceLock::new(),
        };
        if n <= TABLE_LIMIT {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    /// Fills the table column by column: with `y = w * g` for the BFS parent
    /// `w` of `y`, `x * y = (x * w) * g`.
    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut parent = vec![(0u32, 0usize); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        for w in 0..n {
            for (gi, col) in self.right_gen.iter().enumerate() {
                let y = col[w] as usize;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (w as u32, gi);
                }
            }
        }
        let mut t = vec![0u32; n * n];
        for x in 0..n {
            t[x * n] = x as u32;
        }
        // BFS order guarantees parents precede children
        for y in 1..n {
            let (w, gi) = parent[y];
            let col = &self.right_gen[gi];
            for x in 0..n {
                t[x * n + y] = col[t[x * n + w as usize] as usize];
            }
        }
        t
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_index
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g^-1 x g`
    pub fn conj(&self, x: usize, g: usize) -> usize {
        if self.table.is_some() {
            return self.mul(self.mul(self.inv(g), x), g);
        }
        let (px, pg) = (&self.elements[x], &self.elements[g]);
        let mut images = vec![0usize; self.degree];
        for i in 0..self.degree {
            images[pg.image(i)] = pg.image(px.image(i));
        }
        let y = Perm::new(images).expect("conjugate of a permutation is a permutation");
        self.index[&y] as usize
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let k0 = self.orders[a] as u64;
        k %= k0;
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o as u64))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_index;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut orbits: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = orbits.len() as u32;
                class_of[start] = id;
                let mut orbit = vec![start];
                let mut head = 0;
                while head < orbit.len() {
                    let x = orbit[head];
                    for &g in &self.gen_index {
                        let y = self.conj(x, g);
                        if class_of[y] == u32::MAX {
                            class_of[y] = id;
                            orbit.push(y);
                        }
                    }
                    head += 1;
                }
                orbit.sort_unstable();
                orbits.push(orbit);
            }
            // orbits are discovered in order of least member already
            let mut order: Vec<usize> = (0..orbits.len()).collect();
            order.sort_by_key(|&i| (orbits[i].len(), orbits[i][0]));
            let mut classes = Vec::with_capacity(orbits.len());
            for (new, &old) in order.iter().enumerate() {
                for &x in &orbits[old] {
                    class_of[x] = new as u32;
                }
                let members = std::mem::take(&mut orbits[old]);
                classes.push(ConjugacyClass {
                    representative: members[0],
                    centralizer_order: n / members.len(),
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Classes sorted by size, then by least member.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_data().class_of[x] as usize
    }

    /// The `p'`-part and `p`-part of `x`, as `(x_p', x_p)`.
    pub fn p_decompose(&self, x: usize, p: u64) -> (usize, usize) {
        let o = self.element_order(x);
        let mut pp = 1;
        while (o / pp) % p == 0 {
            pp *= p;
        }
        let q = o / pp;
        if q == 1 {
            return (0, x);
        }
        if pp == 1 {
            return (x, 0);
        }
        // a*pp + b*q = 1; x_p = x^(a*pp), x_p' = x^(b*q)
        let a = inv_mod(pp % q, q);
        let e_reg = (a * pp) % o;
        let e_p = (o + 1 - e_reg) % o;
        (self.pow(x, e_reg), self.pow(x, e_p))
    }

    pub fn is_p_regular(&self, x: usize, p: u64) -> bool {
        self.element_order(x) % p != 0
    }

    #[cfg(test)]
    pub(crate) fn without_table(mut self) -> Self {
        self.table = None;
        self
    }
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u64
}
