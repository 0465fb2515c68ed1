use serde::Serialize;

use super::hom_space;
use crate::algebra::{regular_module, Module, ModuleMap};
use crate::linalg::FMatrix;
use crate::resolution::ext_dims;
use crate::{Error, Result};

/// `C ⊗_A M` for commutative `A`, as a quotient of `C ⊗_F M`.
///
/// The pair `(p, q)` of basis indices sits at `p * dim M + q`; `pure_tensor` is the quotient
/// projection and `lift` a linear section of it.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub result: Module,
    pub pure_tensor: FMatrix,
    pub lift: FMatrix,
    left: Module,
    right: Module,
}

impl TensorModule {
    pub fn left(&self) -> &Module {
        &self.left
    }
    pub fn right(&self) -> &Module {
        &self.right
    }
}

pub fn tensor_over_algebra(c: &Module, m: &Module) -> Result<TensorModule> {
    if !c.same_algebra(m) {
        return Err(Error::AlgebraMismatch);
    }
    let a = c.algebra();
    if !a.is_commutative() {
        return Err(Error::NotCommutative("tensor product"));
    }
    let f = a.field();
    let (cd, md) = (c.dim(), m.dim());
    let (ic, im) = (FMatrix::identity(f, cd), FMatrix::identity(f, md));
    let action: Vec<FMatrix> = c.actions().iter().map(|x| x.kron(&im)).collect();
    let free = Module::from_parts(a.clone(), cd * md, action);
    let relations: Vec<FMatrix> = a
        .generators()
        .iter()
        .map(|&g| c.act(g).kron(&im).sub(&ic.kron(m.act(g))))
        .collect();
    let w = if relations.is_empty() || cd * md == 0 {
        crate::linalg::Subspace::zero(f, cd * md)
    } else {
        let refs: Vec<&FMatrix> = relations.iter().collect();
        FMatrix::hstack(&refs).image_basis()
    };
    debug_assert!(free.is_stable(&w));
    Ok(TensorModule {
        result: free.quotient_module(&w),
        pure_tensor: w.quotient_projection(),
        lift: w.quotient_lift(),
        left: c.clone(),
        right: m.clone(),
    })
}

/// `C ⊗ f: C ⊗ M -> C ⊗ M'` between precomputed tensor products.
pub fn tensor_map(src: &TensorModule, tgt: &TensorModule, f: &ModuleMap) -> Result<ModuleMap> {
    if src.left != tgt.left || &src.right != f.source() || &tgt.right != f.target() {
        return Err(Error::Endpoints("tensor_map: tensor products do not match the map"));
    }
    let fld = f.source().field();
    let mid = FMatrix::identity(fld, src.left.dim()).kron(f.matrix());
    let m = tgt.pure_tensor.mul(&mid).mul(&src.lift);
    ModuleMap::new(src.result.clone(), tgt.result.clone(), m)
}

/// `m -> Hom(c, c ⊗ m)`, sending `y` to `x -> x ⊗ y`.
pub fn unit_map(c: &Module, m: &Module) -> Result<ModuleMap> {
    let t = tensor_over_algebra(c, m)?;
    let h = hom_space(c, &t.result)?;
    let g = h.as_module()?;
    let f = c.field();
    let (cd, md) = (c.dim(), m.dim());
    let mut out = FMatrix::zeros(f, h.dim(), md);
    for q in 0..md {
        let mut x = FMatrix::zeros(f, t.result.dim(), cd);
        for p in 0..cd {
            for r in 0..t.result.dim() {
                x.set(r, p, t.pure_tensor.get(r, p * md + q));
            }
        }
        for (r, v) in h.coordinates_unchecked(&x).into_iter().enumerate() {
            out.set(r, q, v);
        }
    }
    ModuleMap::new(m.clone(), g, out)
}

/// `c ⊗ Hom(c, n) -> n`, evaluation `x ⊗ f -> f(x)`.
pub fn counit_map(c: &Module, n: &Module) -> Result<ModuleMap> {
    let h = hom_space(c, n)?;
    let g = h.as_module()?;
    let t = tensor_over_algebra(c, &g)?;
    let f = c.field();
    let (cd, hd) = (c.dim(), h.dim());
    let mut e = FMatrix::zeros(f, n.dim(), cd * hd);
    for j in 0..hd {
        let fj = h.basis_matrix(j);
        for p in 0..cd {
            for r in 0..n.dim() {
                e.set(r, p * hd + j, fj.get(r, p));
            }
        }
    }
    ModuleMap::new(t.result.clone(), n.clone(), e.mul(&t.lift))
}

/// `A -> Hom(c, c)`, `r -> (x -> r x)`.
pub fn homothety(c: &Module) -> Result<ModuleMap> {
    let a = c.algebra();
    let h = hom_space(c, c)?;
    let g = h.as_module()?;
    let f = a.field();
    let mut out = FMatrix::zeros(f, h.dim(), a.dim());
    for i in 0..a.dim() {
        for (r, v) in h.coordinates_unchecked(c.act(i)).into_iter().enumerate() {
            out.set(r, i, v);
        }
    }
    ModuleMap::new(regular_module(a), g, out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidualizingReport {
    pub cutoff: usize,
    pub homothety_bijective: bool,
    /// `dim Ext^i(C, C)` for `i = 1..=cutoff`.
    pub self_ext: Vec<usize>,
    /// Least degree with nonvanishing self-extensions, if any.
    pub witness_degree: Option<usize>,
    pub semidualizing: bool,
}

/// Bijective homothety and vanishing of `Ext^{1..cutoff}(c, c)`.
pub fn is_semidualizing(c: &Module, cutoff: usize) -> Result<SemidualizingReport> {
    let homothety_bijective = homothety(c)?.is_iso();
    let ext = ext_dims(c, c, cutoff)?;
    let self_ext = ext[1..].to_vec();
    let witness_degree = self_ext.iter().position(|&d| d != 0).map(|i| i + 1);
    Ok(SemidualizingReport {
        cutoff,
        homothety_bijective,
        self_ext,
        witness_degree,
        semidualizing: homothety_bijective && witness_degree.is_none(),
    })
}
