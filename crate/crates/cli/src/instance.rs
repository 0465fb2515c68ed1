//! Instance files: JSON descriptions of algebras, modules, classes and tasks.

use std::fmt;
use std::sync::Arc;

use relhom_core::algebra::{validate_algebra, validate_module, Algebra, Module};
use relhom_core::corpus;
use relhom_core::relative::ClassKind;
use relhom_core::{FMatrix, FieldSpec};
use serde::{Deserialize, Serialize};

use crate::task::Task;

/// Largest algebra or module dimension accepted from an instance file.
pub const MAX_INPUT_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    /// Field characteristic for every algebra that does not declare its own.
    pub p: u32,
    pub algebras: Vec<AlgebraSpec>,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<ClassSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<Task>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub dim: usize,
    /// `c[(i * dim + j) * dim + k]` is the coefficient of `e_k` in `e_i e_j`.
    pub constants: Vec<i64>,
    pub unit: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub algebra: String,
    /// One square matrix per algebra basis element, as rows.
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    pub name: String,
    pub kind: KindSpec,
    pub witness: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindSpec {
    Add,
    Prod,
}

impl From<KindSpec> for ClassKind {
    fn from(k: KindSpec) -> Self {
        match k {
            KindSpec::Add => ClassKind::Add,
            KindSpec::Prod => ClassKind::Prod,
        }
    }
}

/// A schema or validation error located by a JSON pointer.
#[derive(Debug)]
pub struct InputError {
    pub pointer: String,
    pub message: String,
}

impl InputError {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InputError {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "input error at {at}: {}", self.message)
    }
}

impl std::error::Error for InputError {}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

pub fn parse(text: &str) -> Result<InstanceFile, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer_of(e.path());
        InputError::new(pointer, e.into_inner().to_string())
    })
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub algebra: String,
    pub name: String,
    pub module: Module,
}

#[derive(Clone, Debug)]
pub struct NamedClass {
    pub name: String,
    pub kind: ClassKind,
    pub witness: usize,
}

/// An instance whose references all resolve and whose objects all validate.
#[derive(Clone, Debug)]
pub struct Instance {
    pub algebras: Vec<(String, Arc<Algebra>)>,
    pub modules: Vec<NamedModule>,
    pub classes: Vec<NamedClass>,
    pub tasks: Vec<Task>,
}

fn reduce(p: u32, x: i64, at: &str) -> Result<u32, InputError> {
    if x < 0 || x >= i64::from(p) {
        return Err(InputError::new(at, format!("entry {x} outside [0, {p})")));
    }
    Ok(x as u32)
}

fn matrix(f: FieldSpec, rows: &[Vec<i64>], at: &str) -> Result<FMatrix, InputError> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut data = Vec::with_capacity(rows.len() * cols);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(InputError::new(format!("{at}/{r}"), format!("expected {cols} entries, found {}", row.len())));
        }
        for (c, &x) in row.iter().enumerate() {
            data.push(reduce(f.p(), x, &format!("{at}/{r}/{c}"))?);
        }
    }
    FMatrix::from_vec(f, rows.len(), cols, data).map_err(|e| InputError::new(at, e.to_string()))
}

fn duplicate<'a>(names: impl Iterator<Item = &'a str>) -> Option<(usize, &'a str)> {
    let mut seen = std::collections::BTreeSet::new();
    names.enumerate().find(|(_, n)| !seen.insert(*n))
}

impl InstanceFile {
    pub fn resolve(&self) -> Result<Instance, InputError> {
        let mut algebras = Vec::new();
        if let Some((i, n)) = duplicate(self.algebras.iter().map(|a| a.name.as_str())) {
            return Err(InputError::new(format!("/algebras/{i}/name"), format!("duplicate algebra {n:?}")));
        }
        for (i, a) in self.algebras.iter().enumerate() {
            let at = format!("/algebras/{i}");
            let p = a.p.unwrap_or(self.p);
            let f = FieldSpec::new(p).map_err(|e| {
                let field = if a.p.is_some() { format!("{at}/p") } else { "/p".into() };
                InputError::new(field, e.to_string())
            })?;
            if a.dim == 0 || a.dim > MAX_INPUT_DIM {
                return Err(InputError::new(format!("{at}/dim"), format!("dimension must lie in 1..={MAX_INPUT_DIM}")));
            }
            let n3 = a.dim.pow(3);
            if a.constants.len() != n3 {
                return Err(InputError::new(
                    format!("{at}/constants"),
                    format!("expected {n3} entries, found {}", a.constants.len()),
                ));
            }
            if a.unit.len() != a.dim {
                return Err(InputError::new(
                    format!("{at}/unit"),
                    format!("expected {} entries, found {}", a.dim, a.unit.len()),
                ));
            }
            let constants = a
                .constants
                .iter()
                .enumerate()
                .map(|(k, &x)| reduce(p, x, &format!("{at}/constants/{k}")))
                .collect::<Result<Vec<_>, _>>()?;
            let unit = a
                .unit
                .iter()
                .enumerate()
                .map(|(k, &x)| reduce(p, x, &format!("{at}/unit/{k}")))
                .collect::<Result<Vec<_>, _>>()?;
            let alg = Algebra::new(a.name.clone(), f, a.dim, constants, unit)
                .map_err(|e| InputError::new(&at, e.to_string()))?;
            let report = validate_algebra(&alg);
            if let Some(v) = report.violations.first() {
                return Err(InputError::new(&at, format!("not an associative unital algebra: {v:?}")));
            }
            algebras.push((a.name.clone(), Arc::new(alg)));
        }

        let mut modules = Vec::new();
        for (i, m) in self.modules.iter().enumerate() {
            let at = format!("/modules/{i}");
            let Some((_, a)) = algebras.iter().find(|(n, _)| n == &m.algebra) else {
                return Err(InputError::new(format!("{at}/algebra"), format!("unknown algebra {:?}", m.algebra)));
            };
            if modules.iter().any(|x: &NamedModule| x.algebra == m.algebra && x.name == m.name) {
                return Err(InputError::new(
                    format!("{at}/name"),
                    format!("duplicate module {:?} over {:?}", m.name, m.algebra),
                ));
            }
            if m.action.len() != a.dim() {
                return Err(InputError::new(
                    format!("{at}/action"),
                    format!("expected {} action matrices, found {}", a.dim(), m.action.len()),
                ));
            }
            let action = m
                .action
                .iter()
                .enumerate()
                .map(|(k, rows)| matrix(a.field(), rows, &format!("{at}/action/{k}")))
                .collect::<Result<Vec<_>, _>>()?;
            let dim = action.first().map_or(0, FMatrix::rows);
            if dim > MAX_INPUT_DIM {
                return Err(InputError::new(format!("{at}/action"), format!("dimension exceeds {MAX_INPUT_DIM}")));
            }
            for (k, x) in action.iter().enumerate() {
                if x.shape() != (dim, dim) {
                    return Err(InputError::new(
                        format!("{at}/action/{k}"),
                        format!("expected a {dim}x{dim} matrix, found {}x{}", x.rows(), x.cols()),
                    ));
                }
            }
            let module = Module::new_unchecked(a.clone(), action).map_err(|e| InputError::new(&at, e.to_string()))?;
            if let Some(v) = validate_module(&module).first() {
                return Err(InputError::new(format!("{at}/action"), format!("not a module: {v:?}")));
            }
            modules.push(NamedModule {
                algebra: m.algebra.clone(),
                name: m.name.clone(),
                module,
            });
        }

        let mut instance = Instance {
            algebras,
            modules,
            classes: Vec::new(),
            tasks: self.tasks.clone(),
        };
        if let Some((i, n)) = duplicate(self.classes.iter().map(|c| c.name.as_str())) {
            return Err(InputError::new(format!("/classes/{i}/name"), format!("duplicate class {n:?}")));
        }
        for (i, c) in self.classes.iter().enumerate() {
            let witness = instance
                .module_index(&c.witness)
                .map_err(|msg| InputError::new(format!("/classes/{i}/witness"), msg))?;
            instance.classes.push(NamedClass {
                name: c.name.clone(),
                kind: c.kind.into(),
                witness,
            });
        }
        for (i, t) in self.tasks.iter().enumerate() {
            t.check_references(&instance)
                .map_err(|(field, msg)| InputError::new(format!("/tasks/{i}/{field}"), msg))?;
        }
        Ok(instance)
    }
}

impl Instance {
    /// Resolves `name` or `algebra/name`; a bare name must be unambiguous.
    pub fn module_index(&self, reference: &str) -> Result<usize, String> {
        let hits: Vec<usize> = match reference.split_once('/') {
            Some((a, n)) => self.modules.iter().enumerate().filter(|(_, m)| m.algebra == a && m.name == n).map(|(i, _)| i).collect(),
            None => self.modules.iter().enumerate().filter(|(_, m)| m.name == reference).map(|(i, _)| i).collect(),
        };
        match hits.as_slice() {
            [i] => Ok(*i),
            [] => Err(format!("unknown module {reference:?}")),
            _ => {
                let options: Vec<String> = hits.iter().map(|&i| self.qualified(i)).collect();
                Err(format!("ambiguous module {reference:?}; use one of {}", options.join(", ")))
            }
        }
    }

    pub fn module(&self, reference: &str) -> Result<&NamedModule, String> {
        Ok(&self.modules[self.module_index(reference)?])
    }

    pub fn qualified(&self, i: usize) -> String {
        format!("{}/{}", self.modules[i].algebra, self.modules[i].name)
    }

    /// A class by name, or inline as `add:<module>` / `prod:<module>`.
    pub fn class(&self, reference: &str) -> Result<NamedClass, String> {
        if let Some(c) = self.classes.iter().find(|c| c.name == reference) {
            return Ok(c.clone());
        }
        let (kind, witness) = match reference.split_once(':') {
            Some(("add", w)) => (ClassKind::Add, w),
            Some(("prod", w)) => (ClassKind::Prod, w),
            _ => return Err(format!("unknown class {reference:?}; expected a class name, add:<module> or prod:<module>")),
        };
        Ok(NamedClass {
            name: reference.to_string(),
            kind,
            witness: self.module_index(witness)?,
        })
    }

    /// The named modules over one algebra, in file order.
    pub fn modules_over(&self, algebra: &str) -> Vec<(String, Module)> {
        self.modules
            .iter()
            .filter(|m| m.algebra == algebra)
            .map(|m| (m.name.clone(), m.module.clone()))
            .collect()
    }
}

fn rows_of(m: &FMatrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|&x| i64::from(x)).collect()).collect()
}

/// The built-in corpus as an instance file: one algebra per corpus key, fields other than `F_2`
/// declared per algebra.
pub fn corpus_file() -> InstanceFile {
    let mut file = InstanceFile {
        p: 2,
        algebras: Vec::new(),
        modules: Vec::new(),
        classes: Vec::new(),
        tasks: Vec::new(),
    };
    for e in corpus::all() {
        file.algebras.push(algebra_spec(e.key, &e.algebra, 2));
        for (name, m) in &e.modules {
            file.modules.push(ModuleSpec {
                name: name.clone(),
                algebra: e.key.to_string(),
                action: m.actions().iter().map(rows_of).collect(),
            });
        }
    }
    file
}

/// One corpus algebra with its modules, over its own field.
pub fn corpus_entry_file(key: &str) -> Option<InstanceFile> {
    let e = corpus::entry(key)?;
    let p = e.algebra.field().p();
    let mut spec = algebra_spec(e.key, &e.algebra, p);
    spec.p = None;
    Some(InstanceFile {
        p,
        algebras: vec![spec],
        modules: e
            .modules
            .iter()
            .map(|(name, m)| ModuleSpec {
                name: name.clone(),
                algebra: e.key.to_string(),
                action: m.actions().iter().map(rows_of).collect(),
            })
            .collect(),
        classes: Vec::new(),
        tasks: Vec::new(),
    })
}

fn algebra_spec(key: &str, a: &Algebra, default_p: u32) -> AlgebraSpec {
    let p = a.field().p();
    AlgebraSpec {
        name: key.to_string(),
        p: (p != default_p).then_some(p),
        dim: a.dim(),
        constants: a.constants().iter().map(|&x| i64::from(x)).collect(),
        unit: a.unit().iter().map(|&x| i64::from(x)).collect(),
    }
}
