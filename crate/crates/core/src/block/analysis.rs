use std::sync::Arc;

use super::ctx::GroupAlgebraCtx;
use crate::algebra::{AlgElement, LoewyProfile, StructureAlgebra};
use crate::error::{Error, Result};
use crate::ffla::{GFElement, Subspace};
use crate::group::{abelian_type, centralizer, centralizer_of, normalizer, sylow_subgroup, AbelianType, Subgroup};

/// A `p`-block of `G`: a primitive idempotent of `Z(FG)` with its central
/// character.
#[derive(Clone, Debug)]
pub struct Block {
    pub index: usize,
    /// Class-sum coordinates.
    pub idempotent: AlgElement,
    /// `lambda_B(C_i^)` for each class, where `C_i^ e_B = lambda e_B + nilpotent`.
    pub central_character: Vec<GFElement>,
    pub principal: bool,
    /// `k(B) = dim Z(B)`.
    pub k: usize,
    /// `Z(B) = Z(FG) e_B` with unit `e_B`.
    pub center: StructureAlgebra,
}

/// Blocks of `G`, principal block first, then in the order of their
/// idempotents' coordinate vectors.
pub fn blocks(ctx: &GroupAlgebraCtx) -> Result<Vec<Block>> {
    let z = ctx.center();
    let f = ctx.field();
    let dec = z.primitive_central_idempotents(true)?;
    let trivial: Vec<GFElement> = ctx.classes().iter().map(|c| f.from_int(c.size() as i64)).collect();
    let mut out = Vec::with_capacity(dec.len());
    for e in dec.idempotents {
        let center = z.corner(&e)?;
        let k = center.dim();
        let central_character = central_character(z, &e)?;
        let principal = central_character == trivial;
        out.push(Block { index: 0, idempotent: e, central_character, principal, k, center });
    }
    out.sort_by_key(|b| !b.principal);
    if out.iter().filter(|b| b.principal).count() != 1 {
        return Err(Error::Consistency("expected exactly one principal block".into()));
    }
    for (i, b) in out.iter_mut().enumerate() {
        b.index = i;
    }
    for b in &out {
        check_multiplicative(ctx, &b.central_character)?;
    }
    Ok(out)
}

/// Reads off `lambda` from `C^ e = lambda e (mod J(Z(FG)))`.
fn central_character(z: &StructureAlgebra, e: &[GFElement]) -> Result<Vec<GFElement>> {
    let f = z.field();
    let j = z.radical();
    let mut e_bar = e.to_vec();
    j.reduce(&mut e_bar);
    let c = e_bar.iter().position(|v| !v.is_zero()).ok_or(Error::NotIdempotent)?;
    (0..z.dim())
        .map(|i| {
            let mut y = z.mul_basis_left(i, e);
            j.reduce(&mut y);
            let mu = f.div(y[c], e_bar[c]);
            if y != z.scale(&e_bar, mu) {
                return Err(Error::Consistency(format!("block algebra is not local at class {i}")));
            }
            Ok(mu)
        })
        .collect()
}

fn check_multiplicative(ctx: &GroupAlgebraCtx, lam: &[GFElement]) -> Result<()> {
    let f = ctx.field();
    let k = ctx.class_count();
    for i in 0..k {
        for j in 0..k {
            let lhs = ctx
                .class_constants(i, j)
                .iter()
                .fold(GFElement::ZERO, |acc, &(l, a)| f.add(acc, f.mul(f.from_int(a as i64), lam[l as usize])));
            if lhs != f.mul(lam[i], lam[j]) {
                return Err(Error::Consistency(format!("central character not multiplicative at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// `d(B)`, the least defect of a class with `lambda_B != 0`, together with
/// the `p`-regular classes attaining it.
pub fn block_defect(ctx: &GroupAlgebraCtx, b: &Block) -> Result<(u32, Vec<usize>)> {
    let defects = ctx.class_defects();
    let support = || (0..ctx.class_count()).filter(|&i| !b.central_character[i].is_zero());
    let d = support()
        .map(|i| defects[i])
        .min()
        .ok_or_else(|| Error::Consistency("central character vanishes identically".into()))?;
    let regular = ctx.p_regular_classes();
    let classes: Vec<usize> = support().filter(|i| defects[*i] == d && regular.contains(i)).collect();
    if classes.is_empty() {
        return Err(Error::Consistency(format!("block {} has no p-regular class of defect {d}", b.index)));
    }
    Ok((d, classes))
}

/// A Sylow `p`-subgroup of `C_G(x)`, `x` the representative of the first
/// defect class.
pub fn defect_group(ctx: &GroupAlgebraCtx, b: &Block) -> Result<Subgroup> {
    let (d, classes) = block_defect(ctx, b)?;
    let g = ctx.group();
    let x = ctx.classes()[classes[0]].representative;
    let dg = sylow_subgroup(&centralizer(g, x), ctx.p() as u64);
    if dg.order() as u64 != (ctx.p() as u64).pow(d) {
        return Err(Error::Consistency(format!("defect group has order {}, expected p^{d}", dg.order())));
    }
    Ok(dg)
}

/// `Br_D : Z(FG) -> Z(F[D C_G(D)])`, `C^ -> sum of C ∩ C_G(D)`.
#[derive(Debug)]
pub struct BrauerMap {
    /// `H = D C_G(D)` inside `G`.
    pub local_group: Subgroup,
    pub local: GroupAlgebraCtx,
    /// Element indices of `H` to those of `G`.
    pub embed: Vec<usize>,
    /// For each class of `G`, the `H`-classes making up `C ∩ C_G(D)`.
    pub images: Vec<Vec<usize>>,
}

impl BrauerMap {
    pub fn apply(&self, z: &[GFElement]) -> Vec<GFElement> {
        let f = self.local.field();
        let mut out = vec![GFElement::ZERO; self.local.class_count()];
        for (img, &v) in self.images.iter().zip(z) {
            for &h in img {
                out[h] = f.add(out[h], v);
            }
        }
        out
    }
}

pub fn brauer_map(ctx: &GroupAlgebraCtx, d: &Subgroup) -> Result<BrauerMap> {
    let g = ctx.group();
    let c = centralizer_of(g, d);
    let mut gens = d.generators().to_vec();
    gens.extend_from_slice(c.generators());
    let local_group = Subgroup::generated_by(g, &gens);
    let (hg, embed) = local_group.to_group(format!("DC_G(D) in {}", g.name()))?;
    let hg = Arc::new(hg);
    let local = GroupAlgebraCtx::build_with_field(hg.clone(), ctx.field().clone(), ctx.full_algebra_cap())?;
    let mut images = vec![Vec::new(); ctx.class_count()];
    for (hk, cls) in hg.conjugacy_classes().iter().enumerate() {
        let x = embed[cls.representative];
        if c.contains(x) {
            images[g.class_of(x)].push(hk);
        }
    }
    Ok(BrauerMap { local_group, local, embed, images })
}

/// A root `b` of `B` in `D C_G(D)` and its stabilizer in `N_G(D)`.
#[derive(Debug)]
pub struct RootBlock {
    pub brauer: BrauerMap,
    /// Index into `blocks(&brauer.local)`.
    pub root_index: usize,
    pub root: Block,
    pub normalizer: Subgroup,
    /// `N_G(D, b)`
    pub stabilizer: Subgroup,
    /// `e(B) = |N_G(D, b) : D C_G(D)|`
    pub inertial_index: usize,
}

pub fn root_block_and_inertia(ctx: &GroupAlgebraCtx, b: &Block, d: &Subgroup) -> Result<RootBlock> {
    let g = ctx.group();
    let brauer = brauer_map(ctx, d)?;
    let f = ctx.field();
    let local_blocks = blocks(&brauer.local)?;
    let class_sums = (0..ctx.class_count()).map(|i| brauer.apply(&ctx.center().basis_vector(i)));
    let images: Vec<Vec<GFElement>> = class_sums.collect();
    let root_index = local_blocks
        .iter()
        .position(|lb| {
            images.iter().zip(&b.central_character).all(|(img, &want)| {
                let got = img
                    .iter()
                    .zip(&lb.central_character)
                    .fold(GFElement::ZERO, |acc, (&c, &l)| f.add(acc, f.mul(c, l)));
                got == want
            })
        })
        .ok_or_else(|| Error::Consistency(format!("no root block found for block {}", b.index)))?;
    let root = local_blocks[root_index].clone();

    let hg = brauer.local.group();
    let mut to_local = vec![usize::MAX; g.order()];
    for (h, &x) in brauer.embed.iter().enumerate() {
        to_local[x] = h;
    }
    let normalizer = normalizer(g, d);
    let hclasses = hg.conjugacy_classes();
    // right action b -> s^-1 b s of each generator on the blocks of H:
    // lambda_{b^s}(K) = lambda_b(s K s^-1)
    let gen_actions: Vec<(usize, Vec<usize>)> = normalizer
        .generators()
        .iter()
        .map(|&s| {
            let sinv = g.inv(s);
            let moved: Vec<usize> = hclasses
                .iter()
                .map(|cls| hg.class_of(to_local[g.conj(brauer.embed[cls.representative], sinv)]))
                .collect();
            let perm = local_blocks
                .iter()
                .map(|lb| {
                    let image: Vec<GFElement> = moved.iter().map(|&k| lb.central_character[k]).collect();
                    local_blocks
                        .iter()
                        .position(|other| other.central_character == image)
                        .ok_or_else(|| Error::Consistency("conjugate of a block is not a block".into()))
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok((s, perm))
        })
        .collect::<Result<_>>()?;
    // walk N_G(D) by right multiplication, tracking b^n
    let mut image = vec![usize::MAX; g.order()];
    image[g.identity()] = root_index;
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (s, perm) in &gen_actions {
            let y = g.mul(x, *s);
            if image[y] == usize::MAX {
                image[y] = perm[image[x]];
                queue.push(y);
            }
        }
    }
    let stab: Vec<usize> = queue.into_iter().filter(|&x| image[x] == root_index).collect();
    let stabilizer = Subgroup::from_elements(g, stab)?;
    let h = brauer.local_group.order();
    if stabilizer.order() % h != 0 {
        return Err(Error::Consistency("inertial subgroup does not contain D C_G(D)".into()));
    }
    let inertial_index = stabilizer.order() / h;
    if inertial_index as u64 % ctx.p() as u64 == 0 {
        return Err(Error::Consistency(format!("inertial index {inertial_index} divisible by p")));
    }
    Ok(RootBlock { brauer, root_index, root, normalizer, stabilizer, inertial_index })
}

/// `l(B) = dim e_B (Z(FG) ∩ soc(FG))`; `None` above the full-algebra cap.
pub fn l_of_block(ctx: &GroupAlgebraCtx, b: &Block) -> Option<usize> {
    let r = ctx.reynolds_ideal()?;
    let z = ctx.center();
    let span = Subspace::span(z.field().clone(), z.dim(), r.basis().iter().map(|v| z.mul(&b.idempotent, v)));
    Some(span.dim())
}

/// Everything computed for one block.
#[derive(Debug)]
pub struct BlockAnalysis {
    pub block: Block,
    pub loewy: LoewyProfile,
    pub defect: u32,
    pub defect_classes: Vec<usize>,
    pub defect_group: Subgroup,
    /// Isomorphism type of `D` when abelian.
    pub defect_type: Option<AbelianType>,
    pub root: RootBlock,
    pub l: Option<usize>,
}

impl BlockAnalysis {
    pub fn k(&self) -> usize {
        self.block.k
    }

    pub fn e(&self) -> usize {
        self.root.inertial_index
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy.loewy_length
    }
}

/// Runs every block computation and the global consistency checks
/// (`sum k(B) = k(G)`, `sum l(B) = #p-regular classes`, `d = 0 <=> k = 1`).
pub fn analyze_blocks(ctx: &GroupAlgebraCtx) -> Result<Vec<BlockAnalysis>> {
    let p = ctx.p() as u64;
    let mut out = Vec::new();
    for block in blocks(ctx)? {
        let (defect, defect_classes) = block_defect(ctx, &block)?;
        let defect_group = defect_group(ctx, &block)?;
        let defect_type = if defect_group.is_abelian() { Some(abelian_type(&defect_group, p)?) } else { None };
        let root = root_block_and_inertia(ctx, &block, &defect_group)?;
        let l = l_of_block(ctx, &block);
        if (defect == 0) != (block.k == 1) {
            return Err(Error::Consistency(format!("block {}: d = {defect} but k = {}", block.index, block.k)));
        }
        let loewy = block.center.loewy_profile();
        out.push(BlockAnalysis { block, loewy, defect, defect_classes, defect_group, defect_type, root, l });
    }
    let total_k: usize = out.iter().map(|a| a.k()).sum();
    if total_k != ctx.class_count() {
        return Err(Error::Consistency(format!("sum k(B) = {total_k}, k(G) = {}", ctx.class_count())));
    }
    if out.iter().all(|a| a.l.is_some()) {
        let total_l: usize = out.iter().filter_map(|a| a.l).sum();
        let regular = ctx.p_regular_classes().len();
        if total_l != regular {
            return Err(Error::Consistency(format!("sum l(B) = {total_l}, p-regular classes = {regular}")));
        }
    }
    Ok(out)
}
