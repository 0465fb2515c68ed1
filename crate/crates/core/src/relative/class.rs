use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{dual_module, Algebra, Module};
use crate::resolution::{ext_dims, ApproxBase};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// Summands of finite sums of copies of the witness.
    Add,
    /// Summands of finite products of copies of the witness.
    Prod,
}

/// `add(C)` or `prod(C)` for a witness `C`.
///
/// A product class is handled as `add(DC)` over the opposite algebra: every construction is
/// done on duals there and dualized back. `base` always refers to that working side.
#[derive(Debug)]
pub struct ApproxClass {
    kind: ClassKind,
    witness: Module,
    opposite: Option<Arc<Algebra>>,
    base: ApproxBase,
    self_orthogonal_cutoff: Option<usize>,
}

impl ApproxClass {
    pub fn add(c: &Module) -> Result<Self> {
        Ok(ApproxClass {
            kind: ClassKind::Add,
            witness: c.clone(),
            opposite: None,
            base: ApproxBase::new(c)?,
            self_orthogonal_cutoff: None,
        })
    }

    pub fn prod(c: &Module) -> Result<Self> {
        let op = Arc::new(c.algebra().opposite());
        let dc = dual_module(c, &op);
        Ok(ApproxClass {
            kind: ClassKind::Prod,
            witness: c.clone(),
            base: ApproxBase::new(&dc)?,
            opposite: Some(op),
            self_orthogonal_cutoff: None,
        })
    }

    /// Records `cutoff` as certified when `Ext^i(C, C) = 0` for `1 <= i <= cutoff`.
    ///
    /// For a product class the check runs on `DC`, which has the same self-extensions.
    pub fn certify(mut self, cutoff: usize) -> Result<Self> {
        let w = self.base.witness();
        let ext = ext_dims(w, w, cutoff)?;
        if ext[1..].iter().all(|&d| d == 0) {
            self.self_orthogonal_cutoff = Some(cutoff);
        }
        Ok(self)
    }

    /// Certified add-class in one step.
    pub fn certified_add(c: &Module, cutoff: usize) -> Result<Self> {
        Self::add(c)?.certify(cutoff)
    }

    pub fn certified_prod(c: &Module, cutoff: usize) -> Result<Self> {
        Self::prod(c)?.certify(cutoff)
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }
    pub fn witness(&self) -> &Module {
        &self.witness
    }
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.witness.algebra()
    }
    pub fn base(&self) -> &ApproxBase {
        &self.base
    }
    pub fn self_orthogonal_cutoff(&self) -> Option<usize> {
        self.self_orthogonal_cutoff
    }

    pub(crate) fn require_kind(&self, kind: ClassKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("expected a {kind:?} class, got {:?}", self.kind)))
        }
    }

    /// Fails unless self-orthogonality is certified through `cutoff`.
    pub(crate) fn require_certificate(&self, cutoff: usize) -> Result<()> {
        match self.self_orthogonal_cutoff {
            Some(c) if c >= cutoff => Ok(()),
            _ => Err(Error::NotSelfOrthogonal),
        }
    }

    /// A module over the class's algebra moved to the working side.
    pub(crate) fn to_working(&self, m: &Module) -> Module {
        match &self.opposite {
            None => m.clone(),
            Some(op) => dual_module(m, op),
        }
    }

    /// Membership in the class, by a split epic canonical precover on the working side.
    pub fn contains(&self, m: &Module) -> Result<bool> {
        super::in_add_base(&self.base, &self.to_working(m))
    }

    /// Short label such as `add(omega)`.
    pub fn label(&self, witness_name: &str) -> String {
        match self.kind {
            ClassKind::Add => format!("add({witness_name})"),
            ClassKind::Prod => format!("prod({witness_name})"),
        }
    }
}
