//! Commands that run against a resolved instance, each producing one output section.

use anyhow::{anyhow, bail, Context, Result};
use relhom_core::diagnostics::suites::{Scope, Suite, EXT_DEGREE};
use relhom_core::diagnostics::{check_c_purity, check_hom_faithful, submodules, test_family, Verdict};
use relhom_core::hom::is_semidualizing;
use relhom_core::relative::{left_dims, relative_ext, relative_ext_coproper, right_dims, ClassKind};
use relhom_core::resolution::ext_dims;
use relhom_core::{algebra::submodule, ApproxClass, Module};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::instance::{Instance, NamedClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Semidualizing,
    HomFaithful,
    SelfOrthogonal,
    Purity,
}

impl Task {
    pub fn default_max() -> usize {
        EXT_DEGREE
    }
}

fn default_max() -> usize {
    EXT_DEGREE
}

/// One unit of work; instance files list these under `tasks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    /// Relative dimensions of a module.
    Dim { class: String, module: String },
    /// Classical Ext dimensions in degrees `0..=max`.
    Ext {
        m: String,
        n: String,
        #[serde(default = "default_max")]
        max: usize,
    },
    /// Relative Ext dimensions in degrees `0..=max`.
    Relext {
        class: String,
        m: String,
        n: String,
        #[serde(default = "default_max")]
        max: usize,
    },
    Check {
        property: Property,
        c: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<String>,
        /// Generators of a submodule of `m`, for the purity check.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<Vec<i64>>>,
    },
    /// A named suite, over the built-in corpus or restricted to one witness.
    Verify {
        suite: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        c: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<String>,
    },
}

/// Output of one task.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub title: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<String>,
    pub result: Value,
}

impl Section {
    fn new(title: String, verdict: Verdict, result: Value) -> Self {
        Section {
            title,
            verdict,
            elapsed: None,
            result,
        }
    }
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}

pub fn parse_suite(name: &str) -> Result<Suite, String> {
    Suite::from_name(name).ok_or_else(|| format!("unknown suite {name:?}; expected one of {}", suite_names()))
}

impl Task {
    /// Resolves every reference, reporting the offending field.
    pub fn check_references(&self, inst: &Instance) -> Result<(), (&'static str, String)> {
        let module = |field, r: &str| inst.module_index(r).map(|_| ()).map_err(|e| (field, e));
        let class = |r: &str| inst.class(r).map(|_| ()).map_err(|e| ("class", e));
        match self {
            Task::Dim { class: c, module: m } => {
                class(c)?;
                module("module", m)
            }
            Task::Ext { m, n, .. } => {
                module("m", m)?;
                module("n", n)
            }
            Task::Relext { class: c, m, n, .. } => {
                class(c)?;
                module("m", m)?;
                module("n", n)
            }
            Task::Check { c, m, .. } => {
                module("c", c)?;
                m.as_deref().map_or(Ok(()), |m| module("m", m))
            }
            Task::Verify { suite, c, m } => {
                parse_suite(suite).map_err(|e| ("suite", e))?;
                if c.is_none() && m.is_some() {
                    return Err(("m", "a module restriction needs a witness c".into()));
                }
                c.as_deref().map_or(Ok(()), |c| module("c", c))?;
                m.as_deref().map_or(Ok(()), |m| module("m", m))
            }
        }
    }

    pub fn title(&self) -> String {
        match self {
            Task::Dim { class, module } => format!("dim {class} {module}"),
            Task::Ext { m, n, .. } => format!("ext {m} {n}"),
            Task::Relext { class, m, n, .. } => format!("relext {class} {m} {n}"),
            Task::Check { property, c, m, .. } => {
                let name = property_name(*property);
                match m {
                    Some(m) => format!("check {name} {c} {m}"),
                    None => format!("check {name} {c}"),
                }
            }
            Task::Verify { suite, c, m } => match (c, m) {
                (Some(c), Some(m)) => format!("verify {suite} {c} {m}"),
                (Some(c), None) => format!("verify {suite} {c}"),
                _ => format!("verify {suite}"),
            },
        }
    }

    pub fn execute(&self, inst: &Instance, cutoff: usize) -> Result<Section> {
        let title = self.title();
        let module = |r: &str| -> Result<(String, Module)> {
            let i = inst.module_index(r).map_err(|e| anyhow!(e))?;
            Ok((inst.qualified(i), inst.modules[i].module.clone()))
        };
        let class = |r: &str| -> Result<(NamedClass, ApproxClass)> {
            let c = inst.class(r).map_err(|e| anyhow!(e))?;
            let w = &inst.modules[c.witness].module;
            let cls = match c.kind {
                ClassKind::Add => ApproxClass::certified_add(w, cutoff)?,
                ClassKind::Prod => ApproxClass::certified_prod(w, cutoff)?,
            };
            Ok((c, cls))
        };
        match self {
            Task::Dim { class: cr, module: mr } => {
                let (c, cls) = class(cr)?;
                let (mn, m) = module(mr)?;
                same_algebra(cls.witness(), &m)?;
                let certified = || format!("{cr} is not certified self-orthogonal through degree {cutoff}");
                let result = match c.kind {
                    ClassKind::Add => {
                        let (l, e) = left_dims(&cls, &m, cutoff).with_context(certified)?;
                        json!({ "class": cr, "module": mn, "cutoff": cutoff, "l_dim": l, "e_l_dim": e })
                    }
                    ClassKind::Prod => {
                        let (r, e) = right_dims(&cls, &m, cutoff).with_context(certified)?;
                        json!({ "class": cr, "module": mn, "cutoff": cutoff, "r_dim": r, "e_r_dim": e })
                    }
                };
                Ok(Section::new(title, Verdict::Pass, result))
            }
            Task::Ext { m, n, max } => {
                let (mn, m) = module(m)?;
                let (nn, n) = module(n)?;
                same_algebra(&m, &n)?;
                let ext = ext_dims(&m, &n, *max)?;
                Ok(Section::new(title, Verdict::Pass, json!({ "m": mn, "n": nn, "ext": ext })))
            }
            Task::Relext { class: cr, m, n, max } => {
                let (c, cls) = class(cr)?;
                let (mn, m) = module(m)?;
                let (nn, n) = module(n)?;
                same_algebra(cls.witness(), &m)?;
                same_algebra(&m, &n)?;
                let ext = match c.kind {
                    ClassKind::Add => relative_ext(&cls, &m, &n, *max)?,
                    ClassKind::Prod => relative_ext_coproper(&cls, &m, &n, *max)?,
                };
                let result = json!({ "class": cr, "m": mn, "n": nn, "relative_ext": ext });
                Ok(Section::new(title, Verdict::Pass, result))
            }
            Task::Check { property, c, m, generators } => {
                let (cn, c) = module(c)?;
                let algebra = &inst.modules[inst.module_index(&cn).map_err(|e| anyhow!(e))?].algebra;
                check(title, *property, (&cn, &c), m.as_deref().map(module).transpose()?, generators.as_deref(), inst, algebra, cutoff)
            }
            Task::Verify { suite, c, m } => {
                let suite = parse_suite(suite).map_err(|e| anyhow!(e))?;
                let reports = match c {
                    None => suite.run(cutoff)?,
                    Some(cr) => {
                        let i = inst.module_index(cr).map_err(|e| anyhow!(e))?;
                        let w = &inst.modules[i];
                        let modules = match m {
                            Some(mr) => {
                                let (_, mm) = module(mr)?;
                                same_algebra(&w.module, &mm)?;
                                let name = mr.rsplit('/').next().unwrap_or(mr).to_string();
                                vec![(name, mm)]
                            }
                            None => inst.modules_over(&w.algebra),
                        };
                        let scope = Scope {
                            algebra: &w.algebra,
                            witness_name: &w.name,
                            witness: &w.module,
                            modules: &modules,
                        };
                        suite.run_scope(&scope, cutoff)?
                    }
                };
                let verdict = reports.iter().map(|r| r.overall).max().unwrap_or(Verdict::Pass);
                Ok(Section::new(title, verdict, serde_json::to_value(reports)?))
            }
        }
    }
}

pub fn property_name(p: Property) -> &'static str {
    match p {
        Property::Semidualizing => "semidualizing",
        Property::HomFaithful => "hom-faithful",
        Property::SelfOrthogonal => "self-orthogonal",
        Property::Purity => "purity",
    }
}

fn same_algebra(a: &Module, b: &Module) -> Result<()> {
    if !a.same_algebra(b) {
        bail!("modules live over different algebras ({} and {})", a.algebra().name(), b.algebra().name());
    }
    Ok(())
}

fn verdict_of(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Finding
    }
}

#[allow(clippy::too_many_arguments)]
fn check(
    title: String,
    property: Property,
    (cn, c): (&str, &Module),
    m: Option<(String, Module)>,
    generators: Option<&[Vec<i64>]>,
    inst: &Instance,
    algebra: &str,
    cutoff: usize,
) -> Result<Section> {
    match property {
        Property::Semidualizing => {
            let rep = is_semidualizing(c, cutoff)?;
            let verdict = verdict_of(rep.semidualizing);
            Ok(Section::new(title, verdict, json!({ "c": cn, "report": rep })))
        }
        Property::SelfOrthogonal => {
            let ext = ext_dims(c, c, cutoff)?;
            let self_ext = &ext[1..];
            let ok = self_ext.iter().all(|&d| d == 0);
            let result = json!({ "c": cn, "cutoff": cutoff, "self_ext": self_ext, "self_orthogonal": ok });
            Ok(Section::new(title, verdict_of(ok), result))
        }
        Property::HomFaithful => {
            let family = test_family(&inst.modules_over(algebra))?;
            let rep = check_hom_faithful(&ApproxClass::add(c)?, &family)?;
            Ok(Section::new(title, rep.overall, serde_json::to_value(rep)?))
        }
        Property::Purity => {
            let (mn, m) = m.context("the purity check needs a module m")?;
            same_algebra(c, &m)?;
            let f = m.field();
            match generators {
                Some(gens) => {
                    let mut vectors = Vec::new();
                    for g in gens {
                        if g.len() != m.dim() {
                            bail!("generator {g:?} has {} entries, expected {}", g.len(), m.dim());
                        }
                        let v = g.iter().map(|&x| f.reduce(x)).collect();
                        vectors.push(v);
                    }
                    let w = m.submodule_generated(&vectors);
                    let (_, incl) = submodule(&m, &w)?;
                    let pure = check_c_purity(c, &incl)?;
                    let result = json!({ "c": cn, "m": mn, "submodule_dim": w.dim(), "pure": pure });
                    Ok(Section::new(title, verdict_of(pure), result))
                }
                None => {
                    let subs = submodules(&m)?;
                    let mut pure = Vec::new();
                    for w in &subs {
                        let (_, incl) = submodule(&m, w)?;
                        if check_c_purity(c, &incl)? {
                            let basis: Vec<Vec<u32>> = (0..w.dim()).map(|i| w.vector(i).to_vec()).collect();
                            pure.push(basis);
                        }
                    }
                    let result = json!({ "c": cn, "m": mn, "submodules": subs.len(), "pure_submodules": pure });
                    Ok(Section::new(title, Verdict::Pass, result))
                }
            }
        }
    }
}
