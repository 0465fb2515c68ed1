//! Approximations by `add(C)` and `prod(C)`: precovers, proper and coproper resolutions,
//! relative dimensions, relative Ext and the three-way balance comparison.

mod class;

use std::sync::Arc;

use serde::Serialize;

pub use class::{ApproxClass, ClassKind};

use crate::algebra::{dual_module, image, kernel, regular_module, Algebra, Module, ModuleMap};
use crate::resolution::{
    find_section, hom_cohomology, total_hom_complex, ApproxBase, Coresolution, PrecoverStrategy,
    Resolution, ResolutionKind,
};
use crate::{Dim, Error, Result};

/// Strategy used by resolutions unless a caller asks otherwise.
pub const DEFAULT_STRATEGY: PrecoverStrategy = PrecoverStrategy::Reduced;

pub(crate) fn in_add_base(base: &ApproxBase, m: &Module) -> Result<bool> {
    let pc = base.precover(m, PrecoverStrategy::Canonical)?;
    if !pc.map.is_epic() {
        return Ok(false);
    }
    Ok(find_section(&pc.map)?.is_some())
}

/// `C^h -> m` with `h = dim Hom(C, m)`, the components running over a basis of `Hom(C, m)`.
pub fn canonical_precover(cls: &ApproxClass, m: &Module) -> Result<ModuleMap> {
    cls.require_kind(ClassKind::Add)?;
    Ok(cls.base().precover(m, PrecoverStrategy::Canonical)?.map)
}

/// Whether `m` is a summand of a finite sum of copies of the witness.
pub fn in_add(cls: &ApproxClass, m: &Module) -> Result<bool> {
    cls.require_kind(ClassKind::Add)?;
    in_add_base(cls.base(), m)
}

/// The canonical precover corestricted to its image, an epic precover of the image.
pub fn image_restricted_precover(cls: &ApproxClass, m: &Module) -> Result<ModuleMap> {
    let phi = canonical_precover(cls, m)?;
    let (_, _, co) = image(&phi);
    Ok(co)
}

/// A proper resolution with its kernels and per-stage certificates.
#[derive(Clone, Debug)]
pub struct ProperResolution {
    pub resolution: Resolution,
    /// `K_j = ker(Y_j -> Ω^j)` for every non-terminal computed stage; `K_j = Ω^{j+1}`.
    pub kernels: Vec<Module>,
    /// Whether `Hom(C, Y_j) -> Hom(C, Ω^j)` was re-checked surjective.
    pub precover_certified: Vec<bool>,
    pub exactness_profile: Vec<bool>,
}

impl ProperResolution {
    pub fn all_certified(&self) -> bool {
        self.precover_certified.iter().all(|&b| b)
    }
}

fn build_proper(
    base: &ApproxBase,
    m: &Module,
    length: usize,
    kind: ResolutionKind,
    strategy: PrecoverStrategy,
) -> Result<ProperResolution> {
    let resolution = Resolution::build(base, m, length, kind, strategy)?;
    let mut kernels = Vec::new();
    let mut precover_certified = Vec::new();
    for (j, s) in resolution.stages().iter().enumerate() {
        let phi = ModuleMap::new_unchecked(s.term.module().clone(), s.syzygy.clone(), s.map.clone());
        precover_certified.push(base.is_precover(&phi)?);
        if !s.terminal {
            kernels.push(resolution.syzygy(j + 1)?);
        }
    }
    let exactness_profile = resolution.exactness_profile();
    Ok(ProperResolution {
        resolution,
        kernels,
        precover_certified,
        exactness_profile,
    })
}

/// Stages `0..=length` of the proper `add(C)`-resolution of `m`.
pub fn proper_left_resolution(
    cls: &ApproxClass,
    m: &Module,
    length: usize,
    strategy: PrecoverStrategy,
) -> Result<ProperResolution> {
    cls.require_kind(ClassKind::Add)?;
    build_proper(cls.base(), m, length, ResolutionKind::AddC, strategy)
}

/// Proper and exact dimensions read off one resolution.
///
/// Terminal at `n` means `Hom(C, Ω^n)` is projective over `End(C)`, which is exactly when a proper
/// resolution of length `n` exists. The exact dimension is `n` when moreover stages `0..=n` are
/// epic and stage `n` is an isomorphism; otherwise no exact resolution exists at all.
fn dims_of(res: &Resolution, cutoff: usize) -> (Dim, Dim) {
    match res.terminal_stage() {
        Some(n) if n <= cutoff => {
            let exact = res.exact_through() == Some(n);
            (Dim::Finite(n), if exact { Dim::Finite(n) } else { Dim::AboveCutoff })
        }
        _ => (Dim::AboveCutoff, Dim::AboveCutoff),
    }
}

/// `(l_dim, e_l_dim)` of `m` with respect to a certified add-class.
pub fn left_dims(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<(Dim, Dim)> {
    cls.require_kind(ClassKind::Add)?;
    cls.require_certificate(cutoff)?;
    let res = Resolution::build(cls.base(), m, cutoff, ResolutionKind::AddC, DEFAULT_STRATEGY)?;
    Ok(dims_of(&res, cutoff))
}

pub fn l_dim(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<Dim> {
    Ok(left_dims(cls, m, cutoff)?.0)
}

pub fn e_l_dim(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<Dim> {
    Ok(left_dims(cls, m, cutoff)?.1)
}

/// `dim Ext^i_X(m, n)` for `i = 0..=max`, from the proper resolution of `m`.
pub fn relative_ext(cls: &ApproxClass, m: &Module, n: &Module, max: usize) -> Result<Vec<usize>> {
    cls.require_kind(ClassKind::Add)?;
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let res = Resolution::build(cls.base(), m, max + 1, ResolutionKind::AddC, DEFAULT_STRATEGY)?;
    hom_cohomology(&res, n, max)
}

/// A coproper `prod(C)`-coresolution, stored with the proper resolution it dualizes.
#[derive(Clone, Debug)]
pub struct CoproperResolution {
    /// Proper `add(DC)`-resolution of `Dm` over the opposite algebra.
    pub dual: ProperResolution,
    pub coresolution: Coresolution,
}

pub fn coproper_right_resolution(
    cls: &ApproxClass,
    m: &Module,
    length: usize,
    strategy: PrecoverStrategy,
) -> Result<CoproperResolution> {
    cls.require_kind(ClassKind::Prod)?;
    let dm = cls.to_working(m);
    let dual = build_proper(cls.base(), &dm, length, ResolutionKind::ProdC, strategy)?;
    let coresolution = Coresolution::from_dual(&dual.resolution, m)?;
    Ok(CoproperResolution { dual, coresolution })
}

/// `(r_dim, e_r_dim)` of `m` with respect to a certified prod-class.
pub fn right_dims(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<(Dim, Dim)> {
    cls.require_kind(ClassKind::Prod)?;
    cls.require_certificate(cutoff)?;
    let dm = cls.to_working(m);
    let res = Resolution::build(cls.base(), &dm, cutoff, ResolutionKind::ProdC, DEFAULT_STRATEGY)?;
    Ok(dims_of(&res, cutoff))
}

pub fn r_dim(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<Dim> {
    Ok(right_dims(cls, m, cutoff)?.0)
}

pub fn e_r_dim(cls: &ApproxClass, m: &Module, cutoff: usize) -> Result<Dim> {
    Ok(right_dims(cls, m, cutoff)?.1)
}

/// `dim Ext^i_Y(m, n) = H^i Hom(m, Y^•)` for `i = 0..=max`, with `Y` coproper over `n`.
///
/// Computed as `H^i Hom(Y'_•, Dm)` for the proper resolution `Y'` of `Dn` on the opposite side.
pub fn relative_ext_coproper(cls: &ApproxClass, m: &Module, n: &Module, max: usize) -> Result<Vec<usize>> {
    cls.require_kind(ClassKind::Prod)?;
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let (dm, dn) = (cls.to_working(m), cls.to_working(n));
    let res = Resolution::build(cls.base(), &dn, max + 1, ResolutionKind::ProdC, DEFAULT_STRATEGY)?;
    hom_cohomology(&res, &dm, max)
}

/// `add(A)`: the finitely generated projectives, certified through `cutoff`.
pub fn projective_class(a: &Arc<Algebra>, cutoff: usize) -> Result<ApproxClass> {
    ApproxClass::certified_add(&regular_module(a), cutoff)
}

/// `prod(D(A_A))`: the finitely generated injectives, certified through `cutoff`.
pub fn injective_class(a: &Arc<Algebra>, cutoff: usize) -> Result<ApproxClass> {
    let op = Arc::new(a.opposite());
    ApproxClass::certified_prod(&dual_module(&regular_module(&op), a), cutoff)
}

/// One degree of a balance comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceRow {
    pub degree: usize,
    /// Through the proper resolution of the first argument.
    pub left: usize,
    /// Through the coproper resolution of the second argument.
    pub right: usize,
    /// Through the total complex of the Hom bicomplex.
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub rows: Vec<BalanceRow>,
    pub balanced: bool,
}

/// Relative Ext of `(m, n)` computed three ways in degrees `0..=max`.
pub fn balance_report(
    x: &ApproxClass,
    y: &ApproxClass,
    m: &Module,
    n: &Module,
    max: usize,
) -> Result<BalanceReport> {
    x.require_kind(ClassKind::Add)?;
    y.require_kind(ClassKind::Prod)?;
    let left = relative_ext(x, m, n, max)?;
    let right = relative_ext_coproper(y, m, n, max)?;
    let e = Resolution::build(x.base(), m, max + 1, ResolutionKind::AddC, DEFAULT_STRATEGY)?;
    let f = coproper_right_resolution(y, n, max + 1, DEFAULT_STRATEGY)?;
    let total = total_hom_complex(&e, &f.coresolution, max)?;
    let rows: Vec<BalanceRow> = (0..=max)
        .map(|i| BalanceRow {
            degree: i,
            left: left[i],
            right: right[i],
            total: total[i],
        })
        .collect();
    let balanced = rows.iter().all(|r| r.left == r.right && r.right == r.total);
    Ok(BalanceReport { rows, balanced })
}

/// For two epic precovers `φ: P -> m`, `ψ: Q -> m`: whether `dim ker φ + dim Q = dim ker ψ + dim P`.
///
/// `None` when either precover fails to be epic.
pub fn schanuel_consistent(phi: &ModuleMap, psi: &ModuleMap) -> Option<bool> {
    if !phi.is_epic() || !psi.is_epic() {
        return None;
    }
    let (kp, _) = kernel(phi);
    let (kq, _) = kernel(psi);
    Some(kp.dim() + psi.source().dim() == kq.dim() + phi.source().dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, regular_module};
    use crate::corpus;
    use crate::resolution::{ext_dims, free_cover, proj_dim};

    fn r3() -> corpus::CorpusEntry {
        corpus::entry("r3").unwrap()
    }

    #[test]
    fn canonical_precover_by_regular_is_epic() {
        for e in corpus::all() {
            let cls = ApproxClass::add(&regular_module(&e.algebra)).unwrap();
            for (name, m) in &e.modules {
                let phi = canonical_precover(&cls, m).unwrap();
                assert!(phi.is_epic(), "{}/{name}", e.key);
                assert_eq!(phi.source().dim(), e.algebra.dim() * m.dim());
            }
        }
    }

    #[test]
    fn omega_precover_of_k_is_epic() {
        let e = r3();
        let omega = e.module("omega").unwrap();
        let cls = ApproxClass::add(omega).unwrap();
        let k = e.module("k").unwrap();
        let phi = canonical_precover(&cls, k).unwrap();
        assert!(phi.is_epic());
        assert!(cls.base().is_precover(&phi).unwrap());
    }

    #[test]
    fn membership() {
        let e = r3();
        let omega = e.module("omega").unwrap();
        let cls = ApproxClass::add(omega).unwrap();
        assert!(in_add(&cls, omega).unwrap());
        assert!(in_add(&cls, &direct_sum(&e.algebra, &[omega, omega])).unwrap());
        assert!(!in_add(&cls, e.module("k").unwrap()).unwrap());
        let r1 = corpus::entry("r1").unwrap();
        let free = ApproxClass::add(&regular_module(&r1.algebra)).unwrap();
        assert!(!in_add(&free, r1.module("k").unwrap()).unwrap());
    }

    #[test]
    fn image_restriction_on_a_two_block_algebra() {
        let e = corpus::entry("f2xf2").unwrap();
        let (s1, s2) = (e.module("s1").unwrap(), e.module("s2").unwrap());
        let cls = ApproxClass::add(s1).unwrap();
        let m = direct_sum(&e.algebra, &[s1, s2]);
        let phi = canonical_precover(&cls, &m).unwrap();
        assert!(!phi.is_epic());
        let co = image_restricted_precover(&cls, &m).unwrap();
        assert!(co.is_epic());
        assert_eq!(co.target().dim(), 1);
        assert!(cls.base().is_precover(&co).unwrap());
    }

    #[test]
    fn dimensions_need_a_certificate() {
        let e = corpus::entry("r1").unwrap();
        let k = e.module("k").unwrap();
        let cls = ApproxClass::add(k).unwrap().certify(3).unwrap();
        assert!(cls.self_orthogonal_cutoff().is_none());
        assert!(matches!(l_dim(&cls, k, 3), Err(Error::NotSelfOrthogonal)));
    }

    #[test]
    fn free_class_dimensions_are_projective_dimensions() {
        for e in corpus::all() {
            let cls = ApproxClass::certified_add(&regular_module(&e.algebra), 6).unwrap();
            for (name, m) in &e.modules {
                let (l, ex) = left_dims(&cls, m, 6).unwrap();
                let pd = proj_dim(m, 6).unwrap();
                assert_eq!((l, ex), (pd, pd), "{}/{name}", e.key);
            }
        }
    }

    #[test]
    fn omega_dimensions_over_r3() {
        let e = r3();
        let omega = e.module("omega").unwrap();
        let cls = ApproxClass::certified_add(omega, 6).unwrap();
        assert_eq!(left_dims(&cls, omega, 6).unwrap(), (Dim::Finite(0), Dim::Finite(0)));
        let reg = e.module("regular").unwrap();
        let (l, ex) = left_dims(&cls, reg, 6).unwrap();
        assert_eq!(l, ex);
    }

    #[test]
    fn proper_resolution_kernels_match_recomputation() {
        let e = r3();
        let cls = ApproxClass::add(e.module("omega").unwrap()).unwrap();
        let pr = proper_left_resolution(&cls, e.module("k").unwrap(), 3, PrecoverStrategy::Reduced).unwrap();
        assert!(pr.all_certified());
        for (j, k) in pr.kernels.iter().enumerate() {
            let s = &pr.resolution.stages()[j];
            let phi = ModuleMap::new_unchecked(s.term.module().clone(), s.syzygy.clone(), s.map.clone());
            let (again, _) = kernel(&phi);
            assert_eq!(&again, k);
        }
    }

    #[test]
    fn free_relative_ext_is_classical() {
        for key in ["r1", "r3", "t2"] {
            let e = corpus::entry(key).unwrap();
            let cls = ApproxClass::add(&regular_module(&e.algebra)).unwrap();
            for (_, m) in &e.modules {
                for (_, n) in &e.modules {
                    assert_eq!(relative_ext(&cls, m, n, 3).unwrap(), ext_dims(m, n, 3).unwrap());
                }
            }
        }
    }

    #[test]
    fn injective_class_gives_injective_dimension() {
        let e = corpus::entry("t2").unwrap();
        let op = std::sync::Arc::new(e.algebra.opposite());
        let dr = crate::algebra::dual_module(&regular_module(&op), &e.algebra);
        let cls = ApproxClass::certified_prod(&dr, 6).unwrap();
        for (name, m) in &e.modules {
            let (r, er) = right_dims(&cls, m, 6).unwrap();
            let id = crate::resolution::inj_dim(m, 6).unwrap();
            assert_eq!((r, er), (id, id), "{name}");
        }
    }

    #[test]
    fn schanuel_on_two_precovers() {
        let e = r3();
        let cls = ApproxClass::add(e.module("omega").unwrap()).unwrap();
        for (_, m) in &e.modules {
            let phi = cls.base().precover(m, PrecoverStrategy::Canonical).unwrap().map;
            let psi = cls.base().precover(m, PrecoverStrategy::Reduced).unwrap().map;
            if let Some(ok) = schanuel_consistent(&phi, &psi) {
                assert!(ok);
            }
        }
        let k = e.module("k").unwrap();
        let fc = free_cover(k);
        assert_eq!(schanuel_consistent(&fc, &fc), Some(true));
    }
}
