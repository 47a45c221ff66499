use crate::block::{analyze_blocks, splitting_degree, BlockAnalysis, GroupAlgebraCtx};
use crate::error::Result;
use crate::ffla::make_field;
use crate::group::{GroupRef, GroupSpec};

use super::fixed_point::FixedPointAlgebra;
use super::report::BlockSummary;

/// Root blocks are taken over this subgroup of `N_G(D)`.
pub const ROOT_BASE: &str = "D*C_G(D)";

/// A group at a prime with all blocks analyzed.
#[derive(Debug)]
pub struct InstanceAnalysis {
    pub spec: GroupSpec,
    pub ctx: GroupAlgebraCtx,
    pub blocks: Vec<BlockAnalysis>,
    /// `F[Z(D)]^{N_G(D, b)}` per block.
    pub fixed: Vec<FixedPointAlgebra>,
}

impl InstanceAnalysis {
    pub fn new(spec: GroupSpec, group: GroupRef, p: u32, full_algebra_cap: usize) -> Result<Self> {
        let field = make_field(p, splitting_degree(&group, p))?;
        let ctx = GroupAlgebraCtx::build_with_field(group, field.clone(), full_algebra_cap)?;
        let blocks = analyze_blocks(&ctx)?;
        let fixed = blocks
            .iter()
            .map(|a| FixedPointAlgebra::build(field.clone(), &a.defect_group, &a.root.stabilizer))
            .collect::<Result<_>>()?;
        Ok(InstanceAnalysis { spec, ctx, blocks, fixed })
    }

    pub fn build(spec: &GroupSpec, p: u32, full_algebra_cap: usize) -> Result<Self> {
        Self::new(spec.clone(), spec.build()?, p, full_algebra_cap)
    }

    pub fn label(&self) -> String {
        self.spec.to_string()
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn summaries(&self) -> Vec<BlockSummary> {
        self.blocks
            .iter()
            .zip(&self.fixed)
            .map(|(a, fpa)| BlockSummary {
                index: a.block.index,
                principal: a.block.principal,
                defect: a.defect,
                defect_group_order: a.defect_group.order() as u64,
                defect_group_cyclic: a.defect_group.is_cyclic(),
                center_type: fpa.center_type.factors(),
                m: fpa.center_type.m(),
                r: fpa.center_type.rank(),
                e: a.e(),
                k: a.k(),
                l: a.l,
                loewy_length: a.loewy_length(),
                codims: a.loewy.codims.clone(),
                fixed_point_loewy_length: fpa.loewy_length(),
                lambda: fpa.lambda(),
            })
            .collect()
    }
}
