//! Blocks of group algebras: central characters, defect groups, Brauer
//! correspondents and inertial indices.

mod analysis;
mod ctx;

pub use analysis::{
    analyze_blocks, block_defect, blocks, brauer_map, defect_group, l_of_block, root_block_and_inertia, Block,
    BlockAnalysis, BrauerMap, RootBlock,
};
pub use ctx::{splitting_degree, GroupAlgebraCtx, DEFAULT_FULL_ALGEBRA_CAP};
