use std::sync::Arc;

use super::complex::{hom_cohomology, Coresolution};
use super::engine::{ApproxBase, PrecoverStrategy, Resolution, ResolutionKind};
use super::split::find_section;
use crate::algebra::{direct_sum, dual_module, regular_module, Algebra, Module, ModuleMap};
use crate::linalg::FMatrix;
use crate::{Dim, Result};

/// `A^{dim m} -> m` sending the unit of copy `i` to the basis vector `e_i`.
pub fn free_cover(m: &Module) -> ModuleMap {
    let a = m.algebra();
    let n = a.dim();
    let reg = regular_module(a);
    let parts = vec![&reg; m.dim()];
    let src = direct_sum(a, &parts);
    let mut mat = FMatrix::zeros(m.field(), m.dim(), n * m.dim());
    for i in 0..m.dim() {
        for j in 0..n {
            // a_j . e_i is column i of ρ_j
            for r in 0..m.dim() {
                mat.set(r, i * n + j, m.act(j).get(r, i));
            }
        }
    }
    ModuleMap::new_unchecked(src, m.clone(), mat)
}

/// The witness data for free resolutions over `a`.
pub fn free_base(a: &Arc<Algebra>) -> Result<ApproxBase> {
    ApproxBase::new(&regular_module(a))
}

/// A projective resolution through stage `length`, terminating where a syzygy is projective.
pub fn free_resolution(m: &Module, length: usize) -> Result<Resolution> {
    let base = free_base(m.algebra())?;
    Resolution::build(&base, m, length, ResolutionKind::Free, PrecoverStrategy::Reduced)
}

/// Whether the free cover of `m` splits.
pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(find_section(&free_cover(m))?.is_some())
}

/// `Ω^j m`, the `j`-th syzygy in a projective resolution.
pub fn syzygy(m: &Module, j: usize) -> Result<Module> {
    if j == 0 {
        return Ok(m.clone());
    }
    free_resolution(m, j - 1)?.syzygy(j)
}

pub fn proj_dim(m: &Module, cutoff: usize) -> Result<Dim> {
    let res = free_resolution(m, cutoff)?;
    Ok(match res.length() {
        Some(n) if n <= cutoff => Dim::Finite(n),
        _ => Dim::AboveCutoff,
    })
}

/// Projective dimension of the dual over the opposite algebra.
pub fn inj_dim(m: &Module, cutoff: usize) -> Result<Dim> {
    let op = Arc::new(m.algebra().opposite());
    proj_dim(&dual_module(m, &op), cutoff)
}

/// An injective coresolution of `n` through degree `length`, dual to a projective resolution of
/// `Dn` over the opposite algebra.
pub fn injective_coresolution(n: &Module, length: usize) -> Result<Coresolution> {
    let op = Arc::new(n.algebra().opposite());
    let res = free_resolution(&dual_module(n, &op), length)?;
    Coresolution::from_dual(&res, n)
}

/// `dim Ext^i(m, n)` for `i = 0..=max`.
pub fn ext_dims(m: &Module, n: &Module, max: usize) -> Result<Vec<usize>> {
    if !m.same_algebra(n) {
        return Err(crate::Error::AlgebraMismatch);
    }
    let res = free_resolution(m, max + 1)?;
    hom_cohomology(&res, n, max)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    Ok(ext_dims(m, n, i)?[i])
}
