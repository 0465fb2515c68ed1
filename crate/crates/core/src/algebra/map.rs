use std::fmt;
use std::sync::Arc;

use super::module::{direct_sum, dual_module};
use super::{Algebra, Module};
use crate::linalg::{FMatrix, Subspace};
use crate::{Error, Result};

/// An intertwining linear map; `matrix` is `target.dim x source.dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: Module,
    target: Module,
    matrix: FMatrix,
}

impl ModuleMap {
    /// Checks shape, algebra agreement and intertwining.
    pub fn new(source: Module, target: Module, matrix: FMatrix) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape(format!(
                "map matrix is {:?}, expected {}x{}",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        if let Some(i) = map.intertwining_failure() {
            return Err(Error::NotIntertwining(i));
        }
        Ok(map)
    }

    /// For maps that intertwine by construction. Intertwining is still asserted in debug builds.
    pub(crate) fn new_unchecked(source: Module, target: Module, matrix: FMatrix) -> Self {
        debug_assert_eq!(matrix.shape(), (target.dim(), source.dim()));
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        debug_assert_eq!(map.intertwining_failure(), None, "{map:?}");
        map
    }

    pub fn identity(m: &Module) -> Self {
        Self::new_unchecked(m.clone(), m.clone(), FMatrix::identity(m.field(), m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        Self::new_unchecked(
            source.clone(),
            target.clone(),
            FMatrix::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    pub fn source(&self) -> &Module {
        &self.source
    }
    pub fn target(&self) -> &Module {
        &self.target
    }
    pub fn matrix(&self) -> &FMatrix {
        &self.matrix
    }

    /// First basis element whose action the map fails to intertwine.
    pub fn intertwining_failure(&self) -> Option<usize> {
        (0..self.source.algebra().dim()).find(|&i| {
            self.matrix.mul(self.source.act(i)) != self.target.act(i).mul(&self.matrix)
        })
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMap) -> Result<ModuleMap> {
        if g.target != self.source {
            return Err(Error::Endpoints("compose: target of the inner map is not the source of the outer"));
        }
        Ok(Self::new_unchecked(
            g.source.clone(),
            self.target.clone(),
            self.matrix.mul(&g.matrix),
        ))
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Endpoints("add: maps have different endpoints"));
        }
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix),
        ))
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(s))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
    pub fn is_monic(&self) -> bool {
        self.rank() == self.source.dim()
    }
    pub fn is_epic(&self) -> bool {
        self.rank() == self.target.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_monic()
    }

    /// Same matrix, reread between modules with identical actions.
    pub fn with_endpoints(&self, source: &Module, target: &Module) -> Result<ModuleMap> {
        if source != &self.source || target != &self.target {
            return Err(Error::Endpoints("with_endpoints: action matrices differ"));
        }
        Ok(Self::new_unchecked(source.clone(), target.clone(), self.matrix.clone()))
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap({} -> {}, {:?})",
            self.source.dim(),
            self.target.dim(),
            self.matrix
        )
    }
}

/// The map `(f_1, ..., f_k): M_1 ⊕ ... ⊕ M_k -> N`.
pub fn hstack_maps(algebra: &Arc<Algebra>, target: &Module, maps: &[&ModuleMap]) -> ModuleMap {
    let sources: Vec<&Module> = maps.iter().map(|m| m.source()).collect();
    let source = direct_sum(algebra, &sources);
    let matrix = if maps.is_empty() {
        FMatrix::zeros(algebra.field(), target.dim(), 0)
    } else {
        let ms: Vec<&FMatrix> = maps.iter().map(|m| m.matrix()).collect();
        FMatrix::hstack(&ms)
    };
    ModuleMap::new_unchecked(source, target.clone(), matrix)
}

/// The map `(f_1; ...; f_k): M -> N_1 ⊕ ... ⊕ N_k`.
pub fn vstack_maps(algebra: &Arc<Algebra>, source: &Module, maps: &[&ModuleMap]) -> ModuleMap {
    let targets: Vec<&Module> = maps.iter().map(|m| m.target()).collect();
    let target = direct_sum(algebra, &targets);
    let matrix = if maps.is_empty() {
        FMatrix::zeros(algebra.field(), 0, source.dim())
    } else {
        let ms: Vec<&FMatrix> = maps.iter().map(|m| m.matrix()).collect();
        FMatrix::vstack(&ms)
    };
    ModuleMap::new_unchecked(source.clone(), target, matrix)
}

pub fn direct_sum_maps(algebra: &Arc<Algebra>, maps: &[&ModuleMap]) -> ModuleMap {
    let sources: Vec<&Module> = maps.iter().map(|m| m.source()).collect();
    let targets: Vec<&Module> = maps.iter().map(|m| m.target()).collect();
    let ms: Vec<&FMatrix> = maps.iter().map(|m| m.matrix()).collect();
    ModuleMap::new_unchecked(
        direct_sum(algebra, &sources),
        direct_sum(algebra, &targets),
        FMatrix::block_diag(algebra.field(), &ms),
    )
}

/// Submodule on a stable subspace with its inclusion.
pub fn submodule(m: &Module, w: &Subspace) -> Result<(Module, ModuleMap)> {
    if w.ambient_dim() != m.dim() || !m.is_stable(w) {
        return Err(Error::InvalidModule("subspace is not stable under the action".into()));
    }
    let sub = m.restrict(w);
    let incl = ModuleMap::new_unchecked(sub.clone(), m.clone(), w.basis().transpose());
    Ok((sub, incl))
}

/// Quotient by a stable subspace with its projection.
pub fn quotient_by_submodule(m: &Module, w: &Subspace) -> Result<(Module, ModuleMap)> {
    if w.ambient_dim() != m.dim() || !m.is_stable(w) {
        return Err(Error::InvalidModule("subspace is not stable under the action".into()));
    }
    let q = m.quotient_module(w);
    let proj = ModuleMap::new_unchecked(m.clone(), q.clone(), w.quotient_projection());
    Ok((q, proj))
}

pub fn kernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let w = f.matrix().kernel_basis();
    let k = f.source().restrict(&w);
    let incl = ModuleMap::new_unchecked(k.clone(), f.source().clone(), w.basis().transpose());
    (k, incl)
}

/// Image with its inclusion and the corestriction `source -> image`.
pub fn image(f: &ModuleMap) -> (Module, ModuleMap, ModuleMap) {
    let w = f.matrix().image_basis();
    let im = f.target().restrict(&w);
    let incl = ModuleMap::new_unchecked(im.clone(), f.target().clone(), w.basis().transpose());
    let co = ModuleMap::new_unchecked(
        f.source().clone(),
        im.clone(),
        f.matrix().select_rows(w.pivots()),
    );
    (im, incl, co)
}

pub fn cokernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let w = f.matrix().image_basis();
    let q = f.target().quotient_module(&w);
    let proj = ModuleMap::new_unchecked(f.target().clone(), q.clone(), w.quotient_projection());
    (q, proj)
}

/// Pushout of `B <- A -> C` as the cokernel of `(f, -g): A -> B ⊕ C`.
pub fn pushout(f: &ModuleMap, g: &ModuleMap) -> Result<(Module, ModuleMap, ModuleMap)> {
    if f.source() != g.source() {
        return Err(Error::Endpoints("pushout: maps must share their source"));
    }
    let alg = f.source().algebra();
    let ng = g.scale(f.source().field().neg(1));
    let fg = vstack_maps(alg, f.source(), &[f, &ng]);
    let (p, proj) = cokernel(&fg);
    let (b, c) = (f.target().dim(), g.target().dim());
    let q = proj.matrix();
    let ib = ModuleMap::new_unchecked(f.target().clone(), p.clone(), q.submatrix(0..p.dim(), 0..b));
    let ic = ModuleMap::new_unchecked(g.target().clone(), p.clone(), q.submatrix(0..p.dim(), b..b + c));
    Ok((p, ib, ic))
}

/// Pullback of `B -> D <- C` as the kernel of `(f, -g): B ⊕ C -> D`.
pub fn pullback(f: &ModuleMap, g: &ModuleMap) -> Result<(Module, ModuleMap, ModuleMap)> {
    if f.target() != g.target() {
        return Err(Error::Endpoints("pullback: maps must share their target"));
    }
    let alg = f.target().algebra();
    let ng = g.scale(f.target().field().neg(1));
    let fg = hstack_maps(alg, f.target(), &[f, &ng]);
    let (p, incl) = kernel(&fg);
    let (b, c) = (f.source().dim(), g.source().dim());
    let i = incl.matrix();
    let pb = ModuleMap::new_unchecked(p.clone(), f.source().clone(), i.submatrix(0..b, 0..p.dim()));
    let pc = ModuleMap::new_unchecked(p.clone(), g.source().clone(), i.submatrix(b..b + c, 0..p.dim()));
    Ok((p, pb, pc))
}

/// Transpose of `f: M -> N` as a map `DN -> DM` over the opposite algebra.
pub fn dual_map(f: &ModuleMap, dn: &Module, dm: &Module) -> Result<ModuleMap> {
    if dn.dim() != f.target().dim() || dm.dim() != f.source().dim() {
        return Err(Error::Endpoints("dual_map: duals do not match the map's endpoints"));
    }
    ModuleMap::new(dn.clone(), dm.clone(), f.matrix().transpose())
}

/// A short exact sequence `0 -> A -> B -> C -> 0`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSequence {
    left: ModuleMap,
    right: ModuleMap,
}

impl ShortExactSequence {
    pub fn new(left: ModuleMap, right: ModuleMap) -> Result<Self> {
        if left.target() != right.source() {
            return Err(Error::Endpoints("short exact sequence: middle terms differ"));
        }
        if !left.is_monic() {
            return Err(Error::NotExact("left map is not monic".into()));
        }
        if !right.is_epic() {
            return Err(Error::NotExact("right map is not epic".into()));
        }
        if left.matrix().image_basis() != right.matrix().kernel_basis() {
            return Err(Error::NotExact("image of the left map differs from the kernel of the right map".into()));
        }
        Ok(ShortExactSequence { left, right })
    }

    pub fn left(&self) -> &ModuleMap {
        &self.left
    }
    pub fn right(&self) -> &ModuleMap {
        &self.right
    }

    /// `0 -> A -> A ⊕ C -> C -> 0` with the canonical maps.
    pub fn split(a: &Module, c: &Module) -> Self {
        let alg = a.algebra();
        let f = a.field();
        let mid = direct_sum(alg, &[a, c]);
        let (da, dc) = (a.dim(), c.dim());
        let mut i = FMatrix::zeros(f, da + dc, da);
        i.set_block(0, 0, &FMatrix::identity(f, da));
        let mut p = FMatrix::zeros(f, dc, da + dc);
        p.set_block(0, da, &FMatrix::identity(f, dc));
        ShortExactSequence {
            left: ModuleMap::new_unchecked(a.clone(), mid.clone(), i),
            right: ModuleMap::new_unchecked(mid, c.clone(), p),
        }
    }

    /// The dual sequence `0 -> DC -> DB -> DA -> 0` over the opposite algebra.
    pub fn dual(&self, opposite: &Arc<Algebra>) -> Result<Self> {
        let da = dual_module(self.left.source(), opposite);
        let db = dual_module(self.left.target(), opposite);
        let dc = dual_module(self.right.target(), opposite);
        let left = dual_map(&self.right, &dc, &db)?;
        let right = dual_map(&self.left, &db, &da)?;
        Self::new(left, right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular_module, zero_module};
    use crate::corpus;

    fn r1() -> Arc<Algebra> {
        Arc::new(corpus::truncated_poly(2))
    }

    fn augmentation(a: &Arc<Algebra>) -> ModuleMap {
        let r = regular_module(a);
        let k = corpus::residue_field(a);
        let mut m = FMatrix::zeros(a.field(), 1, a.dim());
        m.set(0, 0, 1);
        ModuleMap::new(r, k, m).unwrap()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let a = r1();
        let r = regular_module(&a);
        assert_eq!(kernel(&ModuleMap::identity(&r)).0.dim(), 0);
        let (k, incl) = kernel(&ModuleMap::zero(&r, &r));
        assert_eq!(k, r);
        assert!(incl.matrix().is_identity());
    }

    #[test]
    fn kernel_of_augmentation_is_k() {
        let a = r1();
        let eps = augmentation(&a);
        let (k, incl) = kernel(&eps);
        assert_eq!(k.dim(), 1);
        assert!(k.act(1).is_zero());
        assert!(eps.compose(&incl).unwrap().is_zero());
        assert!(incl.is_monic());
    }

    #[test]
    fn cokernel_of_socle_inclusion_is_k() {
        let a = r1();
        let eps = augmentation(&a);
        let (_, incl) = kernel(&eps);
        let (q, proj) = cokernel(&incl);
        assert_eq!(q.dim(), 1);
        assert!(q.act(1).is_zero());
        assert!(proj.compose(&incl).unwrap().is_zero());
        assert_eq!(cokernel(&eps).0.dim(), 0);
    }

    #[test]
    fn rank_nullity_for_image() {
        let a = r1();
        let eps = augmentation(&a);
        let (im, incl, co) = image(&eps);
        assert_eq!(im.dim() + kernel(&eps).0.dim(), eps.source().dim());
        assert_eq!(incl.compose(&co).unwrap(), eps);
    }

    #[test]
    fn pushout_of_identities_and_zero_maps() {
        let a = r1();
        let r = regular_module(&a);
        let id = ModuleMap::identity(&r);
        assert_eq!(pushout(&id, &id).unwrap().0.dim(), 2);
        let z = zero_module(&a);
        let k = corpus::residue_field(&a);
        let (p, _, _) = pushout(&ModuleMap::zero(&z, &r), &ModuleMap::zero(&z, &k)).unwrap();
        assert_eq!(p.dim(), 3);
    }

    #[test]
    fn pullback_of_two_augmentations_has_dim_three() {
        let a = r1();
        let eps = augmentation(&a);
        let (p, pb, pc) = pullback(&eps, &eps).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(eps.compose(&pb).unwrap(), eps.compose(&pc).unwrap());
    }

    #[test]
    fn mismatched_endpoints_are_errors() {
        let a = r1();
        let eps = augmentation(&a);
        let r = regular_module(&a);
        assert!(pushout(&eps, &ModuleMap::identity(eps.target())).is_err());
        assert!(pullback(&eps, &ModuleMap::identity(&r)).is_err());
    }

    #[test]
    fn dual_of_exact_sequence_is_exact() {
        let a = r1();
        let eps = augmentation(&a);
        let (_, incl) = kernel(&eps);
        let ses = ShortExactSequence::new(incl, eps).unwrap();
        let opp = Arc::new(a.opposite());
        let d = ses.dual(&opp).unwrap();
        assert_eq!(d.left().source().dim(), 1);
    }

    #[test]
    fn non_intertwining_matrix_is_rejected() {
        let a = r1();
        let r = regular_module(&a);
        let k = corpus::residue_field(&a);
        let bad = FMatrix::from_rows(a.field(), &[[0, 1]]);
        assert_eq!(ModuleMap::new(r, k, bad).unwrap_err(), Error::NotIntertwining(1));
    }
}
