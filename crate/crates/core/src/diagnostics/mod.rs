//! Executable checks of hypotheses and theorems on concrete instances.
//!
//! Every check returns a [`TheoremReport`]; a failing assertion carries a serialized witness
//! that replays the verdict through the underlying operations.

mod checks;
mod enumerate;
mod family;
pub mod suites;

use serde::Serialize;
use serde_json::{json, Value};

pub use checks::{
    build_mapping_cone, check_c_purity, check_faithfulness_equivalences, check_gen_c, check_global_dim,
    check_hom_faithful, check_strongly_ep, check_tensor_hom_dims, end_tabulation, hom_exactness,
    EndTabulation, PerpTester, TensorHomContext,
};
pub use enumerate::{check_pure_submodules, submodules, ENUMERATION_MAX_DIM};
pub use family::{augmented_complex, test_family};

use crate::algebra::{Module, ModuleMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// A property or equality that does not hold, reported as data rather than as an error.
    Finding,
    /// A contradiction with a proved statement under certified hypotheses.
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub claim: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub instance: String,
    pub assertions: Vec<Assertion>,
    pub overall: Verdict,
}

impl TheoremReport {
    pub fn new(theorem_id: impl Into<String>, instance: impl Into<String>) -> Self {
        TheoremReport {
            theorem_id: theorem_id.into(),
            instance: instance.into(),
            assertions: Vec::new(),
            overall: Verdict::Pass,
        }
    }

    pub fn push(&mut self, claim: impl Into<String>, verdict: Verdict, witness: Option<Value>) {
        self.overall = self.overall.max(verdict);
        self.assertions.push(Assertion {
            claim: claim.into(),
            verdict,
            witness,
        });
    }

    pub fn pass(&mut self, claim: impl Into<String>) {
        self.push(claim, Verdict::Pass, None);
    }

    /// `Pass` when `ok`, otherwise `otherwise` with the witness.
    pub fn check(&mut self, claim: impl Into<String>, ok: bool, otherwise: Verdict, witness: impl FnOnce() -> Value) {
        if ok {
            self.pass(claim);
        } else {
            self.push(claim, otherwise, Some(witness()));
        }
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.assertions.iter().filter(|a| a.verdict == verdict).count()
    }
}

/// Replayable description of a module: its action matrices as nested rows.
pub fn module_witness(m: &Module) -> Value {
    let action: Vec<Vec<Vec<u32>>> = m
        .actions()
        .iter()
        .map(|a| (0..a.rows()).map(|r| a.row(r).to_vec()).collect())
        .collect();
    json!({
        "algebra": m.algebra().name(),
        "p": m.field().p(),
        "dim": m.dim(),
        "action": action,
    })
}

pub fn map_witness(f: &ModuleMap) -> Value {
    let mat = f.matrix();
    let rows: Vec<Vec<u32>> = (0..mat.rows()).map(|r| mat.row(r).to_vec()).collect();
    json!({
        "source": module_witness(f.source()),
        "target": module_witness(f.target()),
        "matrix": rows,
    })
}
