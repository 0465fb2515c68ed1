//! Algebras by structure constants, modules as representations, and exactness primitives.

#[allow(clippy::module_inception)]
mod algebra;
mod map;
mod module;

pub use algebra::{validate_algebra, Algebra, AlgebraReport, AlgebraViolation};
pub use map::{
    cokernel, direct_sum_maps, dual_map, hstack_maps, image, kernel, pullback, pushout,
    quotient_by_submodule, submodule, vstack_maps, ModuleMap, ShortExactSequence,
};
pub use module::{
    direct_sum, dual_module, power, regular_module, reinterpret, validate_module, zero_module,
    Module, ModuleViolation,
};
