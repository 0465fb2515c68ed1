use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::split::find_section;
use super::term::Term;
use crate::algebra::{hstack_maps, kernel, Algebra, Module, ModuleMap};
use crate::hom::{hom_space, HomSpace};
use crate::linalg::{EchelonBuilder, FMatrix};
use crate::{Error, Result};

/// Endomorphism rings larger than this many elements are not enumerated.
const MAX_END_ELEMENTS: u64 = 1 << 16;

/// How each stage chooses its `add(C)`-precover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrecoverStrategy {
    /// All `dim Hom(C, M)` basis maps.
    Canonical,
    /// A generating set of `Hom(C, M)` over `End(C)`; minimal when `End(C)` is local.
    Reduced,
}

/// Everything about a witness module `C` that precovers by `add(C)` need.
pub struct ApproxBase {
    c: Module,
    end: HomSpace,
    local: bool,
    /// Radical of `End(C)` as matrices, when `End(C)` is local.
    radical: Vec<FMatrix>,
    end_op: OnceLock<Arc<Algebra>>,
}

impl std::fmt::Debug for ApproxBase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ApproxBase({:?}, End dim {}, local {})", self.c, self.end.dim(), self.local)
    }
}

fn is_nilpotent(x: &FMatrix) -> bool {
    let n = x.rows();
    let mut p = x.clone();
    let mut k = 1;
    while k < n {
        p = p.mul(&p);
        k *= 2;
    }
    p.is_zero()
}

impl ApproxBase {
    pub fn new(c: &Module) -> Result<Self> {
        let end = hom_space(c, c)?;
        let e = end.dim();
        let p = u64::from(c.field().p());
        // beyond the enumeration limit locality is not decided and the general path is used
        let count = (0..e).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&x| x <= MAX_END_ELEMENTS));
        let f = c.field();
        let mut local = c.dim() > 0 && count.is_some();
        let mut nil = EchelonBuilder::new(f, e);
        let mut coeffs = vec![0u32; e];
        for _ in 0..count.unwrap_or(0) {
            let x = end.combine(&coeffs);
            if is_nilpotent(&x) {
                nil.insert(coeffs.clone());
            } else if x.rank() != c.dim() {
                local = false;
                break;
            }
            // odometer over F_p^e
            for d in coeffs.iter_mut() {
                *d += 1;
                if *d == f.p() {
                    *d = 0;
                } else {
                    break;
                }
            }
        }
        let radical = if local {
            let j = nil.into_subspace();
            (0..j.dim()).map(|i| end.combine(j.vector(i))).collect()
        } else {
            Vec::new()
        };
        Ok(ApproxBase {
            c: c.clone(),
            end,
            local,
            radical,
            end_op: OnceLock::new(),
        })
    }

    pub fn witness(&self) -> &Module {
        &self.c
    }
    pub fn is_local(&self) -> bool {
        self.local
    }
    pub fn end(&self) -> &HomSpace {
        &self.end
    }
    pub fn radical_dim(&self) -> usize {
        self.radical.len()
    }
    /// Basis of the radical of a local `End(C)`; empty otherwise.
    pub fn radical(&self) -> &[FMatrix] {
        &self.radical
    }

    /// `End(C)^op`, whose left modules are right `End(C)`-modules; basis = `End(C)` basis.
    pub fn end_op_algebra(&self) -> &Arc<Algebra> {
        self.end_op.get_or_init(|| {
            let e = self.end.dim();
            let mut c = vec![0; e * e * e];
            for i in 0..e {
                for j in 0..e {
                    // e_i *op e_j = e_j ∘ e_i
                    let prod = self.end.basis_matrix(j).mul(&self.end.basis_matrix(i));
                    for (k, x) in self.end.coordinates_unchecked(&prod).into_iter().enumerate() {
                        c[(i * e + j) * e + k] = x;
                    }
                }
            }
            let unit = self
                .end
                .coordinates_unchecked(&FMatrix::identity(self.c.field(), self.c.dim()));
            Arc::new(
                Algebra::new("End^op", self.c.field(), e, c, unit).expect("composition table"),
            )
        })
    }

    /// `Hom(C, m)` as a left `End(C)^op`-module, `e . h = h ∘ e`.
    pub fn hom_as_end_module(&self, h: &HomSpace) -> Module {
        let f = self.c.field();
        let d = h.dim();
        let action = (0..self.end.dim())
            .map(|i| {
                let ei = self.end.basis_matrix(i);
                let mut m = FMatrix::zeros(f, d, d);
                for j in 0..d {
                    let img = h.basis_matrix(j).mul(&ei);
                    for (r, x) in h.coordinates_unchecked(&img).into_iter().enumerate() {
                        m.set(r, j, x);
                    }
                }
                m
            })
            .collect();
        Module::from_parts(self.end_op_algebra().clone(), d, action)
    }

    /// An `add(C)`-precover `C^r -> m`.
    pub fn precover(&self, m: &Module, strategy: PrecoverStrategy) -> Result<Precover> {
        let h = hom_space(&self.c, m)?;
        let d = h.dim();
        let chosen: Vec<usize> = match strategy {
            PrecoverStrategy::Canonical => (0..d).collect(),
            PrecoverStrategy::Reduced => {
                let mut span = EchelonBuilder::new(m.field(), d);
                for i in 0..d {
                    let hi = h.basis_matrix(i);
                    for j in &self.radical {
                        span.insert(h.coordinates_unchecked(&hi.mul(j)));
                    }
                }
                let mut chosen = Vec::new();
                for i in 0..d {
                    let mut e = vec![0; d];
                    e[i] = 1;
                    if span.contains(&e) {
                        continue;
                    }
                    chosen.push(i);
                    let hi = h.basis_matrix(i);
                    for k in 0..self.end.dim() {
                        span.insert(h.coordinates_unchecked(&hi.mul(&self.end.basis_matrix(k))));
                    }
                }
                chosen
            }
        };
        let comps: Vec<ModuleMap> = chosen.iter().map(|&i| h.basis_map(i)).collect();
        let refs: Vec<&ModuleMap> = comps.iter().collect();
        let term = Term::power(&self.c, chosen.len());
        let stacked = hstack_maps(m.algebra(), m, &refs);
        let map = ModuleMap::new_unchecked(term.module().clone(), m.clone(), stacked.matrix().clone());
        Ok(Precover {
            term,
            map,
            chosen,
            hom: h,
        })
    }

    /// Whether `Hom(C, φ)` is surjective for a map `φ: X -> m`.
    pub fn is_precover(&self, phi: &ModuleMap) -> Result<bool> {
        let target = hom_space(&self.c, phi.target())?;
        let source = hom_space(&self.c, phi.source())?;
        let m = crate::hom::postcompose_matrix(phi, &source, &target);
        Ok(m.rank() == target.dim())
    }

    /// When `Hom(C, m)` is projective over `End(C)`, the `add(C)`-object `X` and map `X -> m`
    /// inducing `Hom(C, X) ≅ Hom(C, m)`, obtained from the given precover.
    pub fn hom_projective_cover(&self, pc: &Precover, strategy: PrecoverStrategy) -> Result<Option<(Term, ModuleMap)>> {
        let r = pc.chosen.len();
        let e = self.end.dim();
        if r * e == pc.hom.dim() {
            return Ok(Some((pc.term.clone(), pc.map.clone())));
        }
        if self.local && strategy == PrecoverStrategy::Reduced {
            return Ok(None);
        }
        // Split Hom(C, C^r) -> Hom(C, m) as right End(C)-modules.
        let f = self.c.field();
        let cd = self.c.dim();
        let hm = self.hom_as_end_module(&pc.hom);
        // basis element (t, k) of Hom(C, C^r) is ι_t e_k, at index t*e + k
        let p_dim = r * e;
        let action = (0..e)
            .map(|i| {
                let mut m = FMatrix::zeros(f, p_dim, p_dim);
                for t in 0..r {
                    for k in 0..e {
                        let prod = self.end.basis_matrix(k).mul(&self.end.basis_matrix(i));
                        for (l, x) in self.end.coordinates_unchecked(&prod).into_iter().enumerate() {
                            m.set(t * e + l, t * e + k, x);
                        }
                    }
                }
                m
            })
            .collect();
        let pm = Module::from_parts(self.end_op_algebra().clone(), p_dim, action);
        let mut pi = FMatrix::zeros(f, pc.hom.dim(), p_dim);
        for t in 0..r {
            let phi_t = pc.hom.basis_matrix(pc.chosen[t]);
            for k in 0..e {
                let img = phi_t.mul(&self.end.basis_matrix(k));
                for (row, x) in pc.hom.coordinates_unchecked(&img).into_iter().enumerate() {
                    pi.set(row, t * e + k, x);
                }
            }
        }
        let pi = ModuleMap::new(pm.clone(), hm, pi)?;
        let Some(sigma) = find_section(&pi)? else {
            return Ok(None);
        };
        // ε = σ ∘ Hom(C, φ) as an endomorphism of C^r: column block t is σ(φ_t)
        let total = pc.term.dim();
        let mut eps = FMatrix::zeros(f, total, total);
        for t in 0..r {
            let mut coords = vec![0; pc.hom.dim()];
            coords[pc.chosen[t]] = 1;
            let s = sigma.matrix().mul_vec(&coords);
            // s is in the (t', k) basis of Hom(C, C^r)
            let mut block = FMatrix::zeros(f, total, cd);
            for tp in 0..r {
                for k in 0..e {
                    let x = s[tp * e + k];
                    if x != 0 {
                        let ek = self.end.basis_matrix(k).scale(x);
                        let cur = block.submatrix(pc.term.range(tp), 0..cd).add(&ek);
                        block.set_block(pc.term.range(tp).start, 0, &cur);
                    }
                }
            }
            eps.set_block(0, pc.term.range(t).start, &block);
        }
        let cr = pc.term.module();
        let eps = ModuleMap::new(cr.clone(), cr.clone(), eps)?;
        let (x, incl, _) = crate::algebra::image(&eps);
        let map = pc.map.compose(&incl)?;
        Ok(Some((Term::single(&x), map)))
    }
}

/// A precover `C^r -> m` together with `Hom(C, m)` and the basis maps it uses.
#[derive(Clone, Debug)]
pub struct Precover {
    pub term: Term,
    pub map: ModuleMap,
    /// Indices into the basis of `hom` of the components of `map`.
    pub chosen: Vec<usize>,
    pub hom: HomSpace,
}

/// One stage `Y_j -> Ω^j` of a resolution.
#[derive(Clone, Debug)]
pub struct Stage {
    pub term: Term,
    /// `dim Ω^j x dim Y_j`.
    pub map: FMatrix,
    pub syzygy: Module,
    pub epic: bool,
    pub monic: bool,
    pub terminal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionKind {
    Free,
    AddC,
    ProdC,
}

/// A proper `add(C)`-resolution `... -> Y_1 -> Y_0 -> M`, built stage by stage.
///
/// `Ω^0 = M`, `φ_j: Y_j -> Ω^j` is a precover and `Ω^{j+1} = ker φ_j` unless stage `j` is
/// terminal, in which case every later term is zero. A stage is terminal when `Hom(C, Ω^j)`
/// is projective over `End(C)`, i.e. some `add(C)`-object maps onto it Hom-isomorphically.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub witness: Module,
    pub target: Module,
    pub strategy: PrecoverStrategy,
    stages: Vec<Stage>,
    /// Inclusion `Ω^{j+1} -> Y_j`, `dim Y_j x dim Ω^{j+1}`, for non-terminal stages.
    inclusions: Vec<FMatrix>,
    /// `Ω^{len}` when the last stage is not terminal.
    frontier: Option<Module>,
    max_stage: usize,
}

impl Resolution {
    /// Builds stages `0..=max_stage`, stopping early at a terminal stage.
    pub fn build(
        base: &ApproxBase,
        m: &Module,
        max_stage: usize,
        kind: ResolutionKind,
        strategy: PrecoverStrategy,
    ) -> Result<Self> {
        let mut res = Resolution {
            kind,
            witness: base.witness().clone(),
            target: m.clone(),
            strategy,
            stages: Vec::new(),
            inclusions: Vec::new(),
            frontier: Some(m.clone()),
            max_stage: 0,
        };
        res.extend(base, max_stage)?;
        Ok(res)
    }

    /// Computes further stages up to `max_stage`.
    pub fn extend(&mut self, base: &ApproxBase, max_stage: usize) -> Result<()> {
        self.max_stage = self.max_stage.max(max_stage);
        while self.stages.len() <= max_stage {
            let Some(omega) = self.frontier.take() else {
                break;
            };
            let pc = base.precover(&omega, self.strategy)?;
            if let Some((term, map)) = base.hom_projective_cover(&pc, self.strategy)? {
                let rank = map.rank();
                self.stages.push(Stage {
                    epic: rank == omega.dim(),
                    monic: rank == term.dim(),
                    terminal: true,
                    map: map.matrix().clone(),
                    term,
                    syzygy: omega,
                });
                break;
            }
            let rank = pc.map.rank();
            let (k, incl) = kernel(&pc.map);
            self.stages.push(Stage {
                epic: rank == omega.dim(),
                monic: rank == pc.term.dim(),
                terminal: false,
                map: pc.map.matrix().clone(),
                term: pc.term,
                syzygy: omega,
            });
            self.inclusions.push(incl.matrix().clone());
            self.frontier = Some(k);
        }
        Ok(())
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// Highest stage index requested so far.
    pub fn computed_through(&self) -> usize {
        self.max_stage
    }

    /// Index of the terminal stage, if reached.
    pub fn terminal_stage(&self) -> Option<usize> {
        self.stages.last().filter(|s| s.terminal).map(|_| self.stages.len() - 1)
    }

    /// Whether term `j` is known (computed or forced zero after termination).
    pub fn has_term(&self, j: usize) -> bool {
        j < self.stages.len() || self.terminal_stage().is_some()
    }

    pub fn term(&self, j: usize) -> Result<Term> {
        if j < self.stages.len() {
            Ok(self.stages[j].term.clone())
        } else if self.terminal_stage().is_some() {
            Ok(Term::zero(self.target.algebra()))
        } else {
            Err(Error::ResolutionTooShort {
                needed: j,
                available: self.stages.len().saturating_sub(1),
            })
        }
    }

    /// `Ω^j`; zero beyond a terminal stage.
    pub fn syzygy(&self, j: usize) -> Result<Module> {
        if j < self.stages.len() {
            return Ok(self.stages[j].syzygy.clone());
        }
        if self.terminal_stage().is_some() {
            return Ok(crate::algebra::zero_module(self.target.algebra()));
        }
        match &self.frontier {
            Some(k) if j == self.stages.len() => Ok(k.clone()),
            _ => Err(Error::ResolutionTooShort {
                needed: j,
                available: self.stages.len(),
            }),
        }
    }

    /// Inclusion `Ω^{j+1} -> Y_j` for a non-terminal stage `j`.
    pub fn syzygy_inclusion(&self, j: usize) -> Option<&FMatrix> {
        self.inclusions.get(j)
    }

    /// Differential `d_j: Y_j -> Y_{j-1}` for `j >= 1`, as a `dim Y_{j-1} x dim Y_j` matrix.
    pub fn differential(&self, j: usize) -> Result<FMatrix> {
        assert!(j >= 1);
        let f = self.target.field();
        let src = self.term(j)?;
        let tgt = self.term(j - 1)?;
        if j < self.stages.len() {
            Ok(self.inclusions[j - 1].mul(&self.stages[j].map))
        } else {
            Ok(FMatrix::zeros(f, tgt.dim(), src.dim()))
        }
    }

    /// Augmentation `Y_0 -> M`.
    pub fn augmentation(&self) -> ModuleMap {
        let s = &self.stages[0];
        ModuleMap::new_unchecked(s.term.module().clone(), self.target.clone(), s.map.clone())
    }

    /// Least `n` with a terminal stage at `n`.
    pub fn length(&self) -> Option<usize> {
        self.terminal_stage()
    }

    /// Whether the augmented complex is exact at `Ω^j` and `Y_j` for all `j <= n`
    /// (the last only when `n` is terminal).
    pub fn exact_through(&self) -> Option<usize> {
        let mut last = None;
        for (j, s) in self.stages.iter().enumerate() {
            if !s.epic {
                break;
            }
            if s.terminal && !s.monic {
                break;
            }
            last = Some(j);
        }
        last
    }

    pub fn exactness_profile(&self) -> Vec<bool> {
        self.stages
            .iter()
            .map(|s| s.epic && (!s.terminal || s.monic))
            .collect()
    }
}
