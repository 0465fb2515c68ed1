use crate::algebra::ModuleMap;
use crate::hom::hom_space;
use crate::linalg::FMatrix;
use crate::Result;

/// A module map `σ` with `π σ = id`, if one exists.
///
/// `σ` ranges over `Hom(target, source)`; since `π σ` is a module map it equals the identity as
/// soon as it fixes a generating set, so only generators are constrained.
pub fn find_section(pi: &ModuleMap) -> Result<Option<ModuleMap>> {
    let (src, tgt) = (pi.source(), pi.target());
    let f = src.field();
    if tgt.is_zero() {
        return Ok(Some(ModuleMap::zero(tgt, src)));
    }
    if !pi.is_epic() {
        return Ok(None);
    }
    let hom = hom_space(tgt, src)?;
    let gens = tgt.generators();
    let rows = gens.len() * tgt.dim();
    let mut sys = FMatrix::zeros(f, rows, hom.dim());
    for k in 0..hom.dim() {
        let comp = pi.matrix().mul(&hom.basis_matrix(k));
        for (g, v) in gens.iter().enumerate() {
            for (r, x) in comp.mul_vec(v).into_iter().enumerate() {
                sys.set(g * tgt.dim() + r, k, x);
            }
        }
    }
    let rhs: Vec<u32> = gens.iter().flatten().copied().collect();
    let rhs = FMatrix::column(f, &rhs);
    let Some(x) = sys.solve_right(&rhs)? else {
        return Ok(None);
    };
    let sigma = hom.combine(&x.col_vec(0));
    Ok(Some(ModuleMap::new_unchecked(tgt.clone(), src.clone(), sigma)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, regular_module, ModuleMap};
    use crate::corpus;
    use std::sync::Arc;

    #[test]
    fn projection_from_a_sum_splits() {
        let e = corpus::entry("r3").unwrap();
        let r = regular_module(&e.algebra);
        let omega = e.module("omega").unwrap().clone();
        let sum = direct_sum(&e.algebra, &[&r, &omega]);
        let f = e.algebra.field();
        let mut p = FMatrix::zeros(f, 3, 6);
        p.set_block(0, 3, &FMatrix::identity(f, 3));
        let pi = ModuleMap::new(sum, omega, p).unwrap();
        let sigma = find_section(&pi).unwrap().unwrap();
        assert!(pi.compose(&sigma).unwrap().matrix().is_identity());
    }

    #[test]
    fn augmentation_of_dual_numbers_does_not_split() {
        let a = Arc::new(corpus::truncated_poly(2));
        let k = corpus::residue_field(&a);
        let f = a.field();
        let eps = ModuleMap::new(regular_module(&a), k, FMatrix::from_rows(f, &[[1, 0]])).unwrap();
        assert!(find_section(&eps).unwrap().is_none());
    }
}
