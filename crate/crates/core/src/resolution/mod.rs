//! Resolutions by `add(C)`-precovers and the Ext groups they compute.
//!
//! Free resolutions are the case `C = A`; injective coresolutions are obtained by duality.

mod classical;
mod complex;
mod engine;
mod split;
mod term;

pub use classical::{
    ext_dim, ext_dims, free_base, free_cover, free_resolution, injective_coresolution, inj_dim,
    is_projective, proj_dim, syzygy,
};
pub use complex::{hom_cohomology, total_hom_complex, ChainComplex, Coresolution};
pub use engine::{ApproxBase, Precover, PrecoverStrategy, Resolution, ResolutionKind, Stage};
pub use split::find_section;
pub use term::{postcompose_blocks, precompose_blocks, BlockHom, HomCache, Term};
