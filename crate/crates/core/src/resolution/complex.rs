use std::collections::HashMap;
use std::sync::Arc;

use super::engine::Resolution;
use super::term::{postcompose_blocks, precompose_blocks, BlockHom, HomCache, Term};
use crate::algebra::{dual_module, Algebra, Module, ModuleMap};
use crate::linalg::FMatrix;
use crate::{Error, Result};

/// `X_len -> ... -> X_1 -> X_0` with `d_i: X_i -> X_{i-1}` stored at index `i - 1`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    modules: Vec<Module>,
    differentials: Vec<ModuleMap>,
}

impl ChainComplex {
    /// Checks endpoints and `d_i ∘ d_{i+1} = 0`.
    pub fn new(modules: Vec<Module>, differentials: Vec<ModuleMap>) -> Result<Self> {
        if modules.is_empty() || differentials.len() + 1 != modules.len() {
            return Err(Error::Shape(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.source() != &modules[i + 1] || d.target() != &modules[i] {
                return Err(Error::Endpoints("differential does not match its degrees"));
            }
        }
        for i in 1..differentials.len() {
            if !differentials[i - 1].matrix().mul(differentials[i].matrix()).is_zero() {
                return Err(Error::NotComplex(i));
            }
        }
        Ok(ChainComplex {
            modules,
            differentials,
        })
    }

    pub fn len(&self) -> usize {
        self.modules.len() - 1
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    pub fn module(&self, i: usize) -> &Module {
        &self.modules[i]
    }
    pub fn modules(&self) -> &[Module] {
        &self.modules
    }
    /// `d_i` for `1 <= i <= len`.
    pub fn differential(&self, i: usize) -> &ModuleMap {
        &self.differentials[i - 1]
    }

    /// Dimensions of the homology `ker d_i / im d_{i+1}` in degrees `0..len` (top degree excluded).
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| {
                let out = if i == 0 { 0 } else { self.differential(i).rank() };
                self.modules[i].dim() - out - self.differential(i + 1).rank()
            })
            .collect()
    }
}

impl Resolution {
    /// The deleted complex `Y_n -> ... -> Y_0`.
    pub fn complex(&self, n: usize) -> Result<ChainComplex> {
        let modules = (0..=n)
            .map(|j| self.term(j).map(|t| t.module().clone()))
            .collect::<Result<Vec<_>>>()?;
        let differentials = (1..=n)
            .map(|j| {
                let d = self.differential(j)?;
                Ok(ModuleMap::new_unchecked(modules[j].clone(), modules[j - 1].clone(), d))
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(modules, differentials)
    }
}

/// A right resolution `N -> F^0 -> F^1 -> ...` obtained by dualizing a left resolution of
/// `DN` over the opposite algebra.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub source: Module,
    terms: Vec<Term>,
    /// `∂^q: F^q -> F^{q+1}`, `dim F^{q+1} x dim F^q`.
    codifferentials: Vec<FMatrix>,
    /// `N -> F^0`.
    coaugmentation: FMatrix,
    terminal: bool,
}

impl Coresolution {
    /// Dualizes `res` (a resolution of `DN` over `A^op`) into a coresolution of `n` over `A`.
    pub fn from_dual(res: &Resolution, n: &Module) -> Result<Self> {
        let algebra: &Arc<Algebra> = n.algebra();
        if res.target.dim() != n.dim() || res.target.algebra().opposite() != **algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut duals: HashMap<usize, Module> = HashMap::new();
        let stages = res.stages();
        let mut terms = Vec::with_capacity(stages.len());
        for s in stages {
            let pieces = s
                .term
                .pieces()
                .iter()
                .map(|p| {
                    duals
                        .entry(p.key())
                        .or_insert_with(|| dual_module(p, algebra))
                        .clone()
                })
                .collect();
            terms.push(Term::new(algebra, pieces));
        }
        let mut codifferentials = Vec::new();
        for j in 1..stages.len() {
            codifferentials.push(res.differential(j)?.transpose());
        }
        let coaugmentation = stages
            .first()
            .map(|s| s.map.transpose())
            .unwrap_or_else(|| FMatrix::zeros(n.field(), 0, n.dim()));
        Ok(Coresolution {
            source: n.clone(),
            terms,
            codifferentials,
            coaugmentation,
            terminal: res.terminal_stage().is_some(),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.source.algebra()
    }

    /// Whether `F^q` is known.
    pub fn has_term(&self, q: usize) -> bool {
        q < self.terms.len() || self.terminal
    }

    pub fn term(&self, q: usize) -> Result<Term> {
        if q < self.terms.len() {
            Ok(self.terms[q].clone())
        } else if self.terminal {
            Ok(Term::zero(self.algebra()))
        } else {
            Err(Error::ResolutionTooShort {
                needed: q,
                available: self.terms.len().saturating_sub(1),
            })
        }
    }

    /// `∂^q: F^q -> F^{q+1}`.
    pub fn codifferential(&self, q: usize) -> Result<FMatrix> {
        if q < self.codifferentials.len() {
            return Ok(self.codifferentials[q].clone());
        }
        let (a, b) = (self.term(q)?, self.term(q + 1)?);
        Ok(FMatrix::zeros(self.source.field(), b.dim(), a.dim()))
    }

    pub fn coaugmentation(&self) -> ModuleMap {
        let f0 = self.term(0).expect("degree 0 always present");
        ModuleMap::new_unchecked(self.source.clone(), f0.module().clone(), self.coaugmentation.clone())
    }
}

/// `dim H^i` of `Hom(Y_•, n)` for `i = 0..=max`, with `Y` the deleted complex of `res`.
pub fn hom_cohomology(res: &Resolution, n: &Module, max: usize) -> Result<Vec<usize>> {
    let mut cache = HomCache::new();
    let target = Term::single(n);
    let homs = (0..=max + 1)
        .map(|j| BlockHom::new(&res.term(j)?, &target, &mut cache))
        .collect::<Result<Vec<_>>>()?;
    // rank of δ_j: Hom(Y_{j-1}, n) -> Hom(Y_j, n), for j = 1..=max+1
    let mut ranks = vec![0; max + 2];
    for j in 1..=max + 1 {
        if homs[j - 1].dim() > 0 && homs[j].dim() > 0 {
            ranks[j] = precompose_blocks(&homs[j - 1], &homs[j], &res.differential(j)?).rank();
        }
    }
    Ok((0..=max)
        .map(|i| homs[i].dim() - ranks[i + 1] - ranks[i])
        .collect())
}

/// Dimensions of `H^n Tot(Hom(E, F))` for `n = 0..=max`, where `E` resolves `M` on the left and
/// `F` resolves `N` on the right. `Tot^n = ⊕_{p+q=n} Hom(E_p, F^q)`, `D = δ_h + (-1)^p δ_v`.
pub fn total_hom_complex(e: &Resolution, f: &Coresolution, max: usize) -> Result<Vec<usize>> {
    let field = e.target.field();
    let mut cache = HomCache::new();
    let mut blocks: HashMap<(usize, usize), BlockHom> = HashMap::new();
    for p in 0..=max + 1 {
        for q in 0..=max + 1 - p {
            blocks.insert((p, q), BlockHom::new(&e.term(p)?, &f.term(q)?, &mut cache)?);
        }
    }
    // offsets of (p, q) inside Tot^{p+q}
    let offsets = |n: usize| -> (Vec<usize>, usize) {
        let mut acc = 0;
        let mut out = Vec::with_capacity(n + 1);
        for p in 0..=n {
            out.push(acc);
            acc += blocks[&(p, n - p)].dim();
        }
        (out, acc)
    };
    let mut ranks = vec![0; max + 2];
    for n in 0..=max {
        let (src_off, src_dim) = offsets(n);
        let (tgt_off, tgt_dim) = offsets(n + 1);
        if src_dim == 0 || tgt_dim == 0 {
            continue;
        }
        let mut d = FMatrix::zeros(field, tgt_dim, src_dim);
        for p in 0..=n {
            let q = n - p;
            let from = &blocks[&(p, q)];
            if from.dim() == 0 {
                continue;
            }
            let to_h = &blocks[&(p + 1, q)];
            if to_h.dim() > 0 {
                let h = precompose_blocks(from, to_h, &e.differential(p + 1)?);
                d.set_block(tgt_off[p + 1], src_off[p], &h);
            }
            let to_v = &blocks[&(p, q + 1)];
            if to_v.dim() > 0 {
                let mut v = postcompose_blocks(from, to_v, &f.codifferential(q)?);
                if p % 2 == 1 {
                    v = v.neg();
                }
                d.set_block(tgt_off[p], src_off[p], &v);
            }
        }
        ranks[n + 1] = d.rank();
    }
    Ok((0..=max).map(|n| offsets(n).1 - ranks[n + 1] - ranks[n]).collect())
}
