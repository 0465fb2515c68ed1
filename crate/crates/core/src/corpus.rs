//! The shipped example algebras and modules.
//!
//! Keys: `f2`, `f3`, `f5` (prime fields), `r1` = F2[x]/(x^2), `r2` = F2[x]/(x^3),
//! `r3` = F2[x,y]/(x^2,xy,y^2), `f2xf2` (two simple blocks), `t2` (upper-triangular 2x2).

use std::sync::Arc;

use crate::algebra::{dual_module, regular_module, reinterpret, Algebra, Module};
use crate::linalg::{FMatrix, FieldSpec, Subspace};

fn f2() -> FieldSpec {
    FieldSpec::new(2).expect("2 is prime")
}

fn table(n: usize, products: &[(usize, usize, usize)]) -> Vec<u32> {
    let mut c = vec![0; n * n * n];
    for &(i, j, k) in products {
        c[(i * n + j) * n + k] = 1;
    }
    c
}

pub fn field_algebra(f: FieldSpec) -> Algebra {
    Algebra::new(format!("F{}", f.p()), f, 1, vec![1], vec![1]).expect("well-formed")
}

/// `F2[x]/(x^n)` in the basis `1, x, ..., x^(n-1)`.
pub fn truncated_poly(n: usize) -> Algebra {
    let products: Vec<_> = (0..n)
        .flat_map(|i| (0..n).filter(move |j| i + j < n).map(move |j| (i, j, i + j)))
        .collect();
    let mut unit = vec![0; n];
    unit[0] = 1;
    Algebra::new(format!("F2[x]/(x^{n})"), f2(), n, table(n, &products), unit).expect("well-formed")
}

/// `F2[x,y]/(x^2, xy, y^2)` in the basis `1, x, y`.
pub fn r3() -> Algebra {
    let products = [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (2, 0, 2)];
    Algebra::new("F2[x,y]/(x^2,xy,y^2)", f2(), 3, table(3, &products), vec![1, 0, 0])
        .expect("well-formed")
}

/// `F2 x F2` in the basis of primitive idempotents `e1, e2`.
pub fn split_semisimple() -> Algebra {
    Algebra::new("F2xF2", f2(), 2, table(2, &[(0, 0, 0), (1, 1, 1)]), vec![1, 1]).expect("well-formed")
}

/// Upper-triangular 2x2 matrices over F2 in the basis `e11, e12, e22`.
pub fn upper_triangular() -> Algebra {
    let products = [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)];
    Algebra::new("T2(F2)", f2(), 3, table(3, &products), vec![1, 0, 1]).expect("well-formed")
}

pub fn algebras_f2() -> Vec<Algebra> {
    vec![
        field_algebra(f2()),
        truncated_poly(2),
        truncated_poly(3),
        r3(),
        split_semisimple(),
        upper_triangular(),
    ]
}

/// The simple top of a local algebra whose basis is the unit followed by a radical basis.
pub fn residue_field(a: &Arc<Algebra>) -> Module {
    let f = a.field();
    let action = (0..a.dim())
        .map(|i| FMatrix::from_vec(f, 1, 1, vec![u32::from(i == 0)]).expect("1x1"))
        .collect();
    Module::new(a.clone(), action).expect("residue field of a local algebra")
}

fn span(f: FieldSpec, n: usize, vs: &[&[u32]]) -> Subspace {
    let vs: Vec<Vec<u32>> = vs.iter().map(|v| v.to_vec()).collect();
    Subspace::from_vectors(f, n, &vs)
}

/// One-dimensional module on which basis element `i` acts by `values[i]`.
fn character(a: &Arc<Algebra>, values: &[u32]) -> Module {
    let f = a.field();
    let action = values
        .iter()
        .map(|&v| FMatrix::from_vec(f, 1, 1, vec![v]).expect("1x1"))
        .collect();
    Module::new(a.clone(), action).expect("valid character")
}

/// An algebra of the corpus together with its named modules.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub key: &'static str,
    pub algebra: Arc<Algebra>,
    pub modules: Vec<(String, Module)>,
}

impl CorpusEntry {
    pub fn module(&self, name: &str) -> Option<&Module> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

pub const KEYS: [&str; 8] = ["f2", "f3", "f5", "r1", "r2", "r3", "f2xf2", "t2"];

pub fn entry(key: &str) -> Option<CorpusEntry> {
    let (key, algebra): (&'static str, Algebra) = match key {
        "f2" => ("f2", field_algebra(f2())),
        "f3" => ("f3", field_algebra(FieldSpec::new(3).expect("prime"))),
        "f5" => ("f5", field_algebra(FieldSpec::new(5).expect("prime"))),
        "r1" => ("r1", truncated_poly(2)),
        "r2" => ("r2", truncated_poly(3)),
        "r3" => ("r3", r3()),
        "f2xf2" => ("f2xf2", split_semisimple()),
        "t2" => ("t2", upper_triangular()),
        _ => return None,
    };
    let a = Arc::new(algebra);
    let f = a.field();
    let reg = regular_module(&a);
    let mut modules = vec![("regular".to_string(), reg.clone())];
    let mut add = |name: &str, m: Module| modules.push((name.to_string(), m));
    match key {
        "r1" => add("k", residue_field(&a)),
        "r2" => {
            add("k", residue_field(&a));
            add("quot_x2", reg.quotient_module(&span(f, 3, &[&[0, 0, 1]])));
        }
        "r3" => {
            add("k", residue_field(&a));
            let omega = dual_module(&reg, &Arc::new(a.opposite()));
            add("omega", reinterpret(&omega, &a).expect("commutative"));
            add("max_ideal", reg.restrict(&span(f, 3, &[&[0, 1, 0], &[0, 0, 1]])));
            add("quot_x", reg.quotient_module(&span(f, 3, &[&[0, 1, 0]])));
        }
        "f2xf2" => {
            add("s1", character(&a, &[1, 0]));
            add("s2", character(&a, &[0, 1]));
        }
        "t2" => {
            add("p1", character(&a, &[1, 0, 0]));
            let p2 = span(f, 3, &[&[0, 1, 0], &[0, 0, 1]]);
            add("p2", reg.restrict(&p2));
            add("s2", character(&a, &[0, 0, 1]));
        }
        _ => {}
    }
    Some(CorpusEntry {
        key,
        algebra: a,
        modules,
    })
}

pub fn all() -> Vec<CorpusEntry> {
    KEYS.iter().filter_map(|k| entry(k)).collect()
}

/// Named modules of one corpus algebra. Panics on an unknown key.
pub fn modules_of(key: &str) -> Vec<(String, Module)> {
    entry(key).unwrap_or_else(|| panic!("unknown corpus key {key}")).modules
}

/// A single corpus module. Panics on unknown names.
pub fn module(key: &str, name: &str) -> Module {
    entry(key)
        .and_then(|e| e.module(name).cloned())
        .unwrap_or_else(|| panic!("unknown corpus module {key}/{name}"))
}
