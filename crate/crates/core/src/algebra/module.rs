use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::Algebra;
use crate::linalg::{EchelonBuilder, FMatrix, FieldSpec, Subspace};
use crate::{Error, Result};

struct ModuleData {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<FMatrix>,
}

/// A finite-dimensional left module, given by one action matrix per algebra basis element.
///
/// Cheap to clone; clones share storage and compare equal by pointer first.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

/// One violated module axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum ModuleViolation {
    Unit,
    Multiplicativity { i: usize, j: usize },
}

impl Module {
    /// Builds and validates a module.
    pub fn new(algebra: Arc<Algebra>, action: Vec<FMatrix>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, action)?;
        if let Some(v) = validate_module(&m).first() {
            return Err(Error::InvalidModule(format!("{v:?}")));
        }
        Ok(m)
    }

    /// Checks shapes only. Callers are responsible for the module axioms.
    pub fn new_unchecked(algebra: Arc<Algebra>, action: Vec<FMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "expected {} action matrices, found {}",
                algebra.dim(),
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |a| a.rows());
        for (i, a) in action.iter().enumerate() {
            if a.shape() != (dim, dim) {
                return Err(Error::Shape(format!(
                    "action matrix {i} has shape {:?}, expected {dim}x{dim}",
                    a.shape()
                )));
            }
            if a.field() != algebra.field() {
                return Err(Error::Shape(format!("action matrix {i} lives over another field")));
            }
        }
        Ok(Self::from_parts(algebra, dim, action))
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dim: usize, action: Vec<FMatrix>) -> Self {
        Module(Arc::new(ModuleData {
            algebra,
            dim,
            action,
        }))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }
    pub fn field(&self) -> FieldSpec {
        self.0.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }
    /// Action matrix of the `i`-th algebra basis element.
    pub fn act(&self, i: usize) -> &FMatrix {
        &self.0.action[i]
    }
    pub fn actions(&self) -> &[FMatrix] {
        &self.0.action
    }

    /// Action matrix of an arbitrary algebra element given in coordinates.
    pub fn act_element(&self, a: &[u32]) -> FMatrix {
        let mut out = FMatrix::zeros(self.field(), self.dim(), self.dim());
        for (i, &s) in a.iter().enumerate() {
            if s != 0 {
                out.add_scaled_assign(s, self.act(i));
            }
        }
        out
    }

    /// Identity key for caches; equal for clones.
    pub(crate) fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra()) || self.algebra() == other.algebra()
    }

    /// Whether the subspace is closed under the action.
    pub fn is_stable(&self, w: &Subspace) -> bool {
        self.0
            .action
            .iter()
            .all(|a| (0..w.dim()).all(|r| w.contains(&a.mul_vec(w.vector(r)))))
    }

    /// Smallest submodule containing the given vectors.
    pub fn submodule_generated(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut builder = EchelonBuilder::new(self.field(), self.dim());
        for v in vectors {
            self.close_orbit(&mut builder, v.clone());
        }
        builder.into_subspace()
    }

    /// Inserts `v` and everything the algebra generators carry it to.
    fn close_orbit(&self, builder: &mut EchelonBuilder, v: Vec<u32>) {
        let gens = self.algebra().generators();
        let mut queue = Vec::new();
        if builder.insert(v.clone()) {
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = self.act(g).mul_vec(&v);
                if builder.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }

    /// A generating set chosen greedily among the standard basis vectors.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        let mut builder = EchelonBuilder::new(self.field(), self.dim());
        for i in 0..self.dim() {
            if builder.dim() == self.dim() {
                break;
            }
            let mut e = vec![0; self.dim()];
            e[i] = 1;
            if !builder.contains(&e) {
                gens.push(e.clone());
                self.close_orbit(&mut builder, e);
            }
        }
        gens
    }

    /// Induced module on a stable subspace, in the coordinates of its RREF basis.
    pub fn restrict(&self, w: &Subspace) -> Module {
        let k = w.dim();
        let bt = w.basis().transpose();
        let action = self
            .0
            .action
            .iter()
            .map(|a| {
                a.mul(&bt).select_rows(w.pivots())
            })
            .collect();
        Module::from_parts(self.algebra().clone(), k, action)
    }

    /// Induced module on the quotient by a stable subspace, in complement coordinates.
    pub fn quotient_module(&self, w: &Subspace) -> Module {
        let q = w.quotient_projection();
        let l = w.quotient_lift();
        let action = self.0.action.iter().map(|a| q.mul(a).mul(&l)).collect();
        Module::from_parts(self.algebra().clone(), q.rows(), action)
    }
}

/// Module equality: same algebra and identical action matrices.
impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.dim() == other.dim()
                && self.same_algebra(other)
                && self.0.action == other.0.action)
    }
}
impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {})", self.dim(), self.algebra().name())
    }
}

/// Checks the unit law and multiplicativity of the action.
pub fn validate_module(m: &Module) -> Vec<ModuleViolation> {
    let a = m.algebra();
    let n = a.dim();
    let mut out = Vec::new();
    if !m.act_element(a.unit()).is_identity() {
        out.push(ModuleViolation::Unit);
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = m.act(i).mul(m.act(j));
            let coeffs: Vec<u32> = (0..n).map(|k| a.c(i, j, k)).collect();
            if lhs != m.act_element(&coeffs) {
                out.push(ModuleViolation::Multiplicativity { i, j });
            }
        }
    }
    out
}

/// The algebra acting on itself by left multiplication.
pub fn regular_module(a: &Arc<Algebra>) -> Module {
    let action = (0..a.dim()).map(|i| a.left_mult(i).clone()).collect();
    Module::from_parts(a.clone(), a.dim(), action)
}

pub fn zero_module(a: &Arc<Algebra>) -> Module {
    let f = a.field();
    let action = (0..a.dim()).map(|_| FMatrix::zeros(f, 0, 0)).collect();
    Module::from_parts(a.clone(), 0, action)
}

/// Block-diagonal sum; the summands occupy consecutive coordinate ranges in order.
pub fn direct_sum(a: &Arc<Algebra>, parts: &[&Module]) -> Module {
    let f = a.field();
    let dim = parts.iter().map(|m| m.dim()).sum();
    let action = (0..a.dim())
        .map(|i| {
            let blocks: Vec<&FMatrix> = parts.iter().map(|m| m.act(i)).collect();
            FMatrix::block_diag(f, &blocks)
        })
        .collect();
    Module::from_parts(a.clone(), dim, action)
}

/// `s` copies of `m`.
pub fn power(m: &Module, s: usize) -> Module {
    let parts = vec![m; s];
    direct_sum(m.algebra(), &parts)
}

/// The vector-space dual, a left module over the opposite algebra via transposes.
pub fn dual_module(m: &Module, opposite: &Arc<Algebra>) -> Module {
    debug_assert!(opposite.as_ref() == &m.algebra().opposite());
    let action = m.actions().iter().map(FMatrix::transpose).collect();
    Module::from_parts(opposite.clone(), m.dim(), action)
}

/// Reinterprets `m` over a structurally equal algebra (used to read duals of modules
/// over commutative algebras back over the original algebra).
pub fn reinterpret(m: &Module, algebra: &Arc<Algebra>) -> Result<Module> {
    if m.algebra().as_ref() != algebra.as_ref() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(Module::from_parts(algebra.clone(), m.dim(), m.actions().to_vec()))
}
