#![allow(dead_code)]

use proptest::prelude::*;
use relhom_core::algebra::{direct_sum, Module};
use relhom_core::{corpus, FMatrix, FieldSpec, Subspace};

pub fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

/// A matrix over `F_2`, `F_3` or `F_5` with up to 8 rows and columns.
pub fn small_matrix() -> impl Strategy<Value = FMatrix> {
    (prop_oneof![Just(2u32), Just(3), Just(5)], 1usize..=8, 1usize..=8).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |data| FMatrix::from_vec(field(p), r, c, data).unwrap())
    })
}

/// Number of module maps `m -> n`, by testing every matrix for the intertwining relations.
pub fn brute_force_hom_count(m: &Module, n: &Module) -> u64 {
    let f = m.field();
    let p = f.p() as u64;
    let (s, t) = (m.dim(), n.dim());
    let cells = s * t;
    let total = p.pow(cells as u32);
    let mut count = 0;
    let mut data = vec![0u32; cells];
    for code in 0..total {
        let mut c = code;
        for x in data.iter_mut() {
            *x = (c % p) as u32;
            c /= p;
        }
        let x = FMatrix::from_vec(f, t, s, data.clone()).unwrap();
        if (0..m.algebra().dim()).all(|i| x.mul(m.act(i)) == n.act(i).mul(&x)) {
            count += 1;
        }
    }
    count
}

/// Every corpus module together with its algebra key and name.
pub fn corpus_modules() -> Vec<(String, Module)> {
    corpus::all()
        .into_iter()
        .flat_map(|e| {
            let key = e.key;
            e.modules.into_iter().map(move |(n, m)| (format!("{key}/{n}"), m))
        })
        .collect()
}

/// Pairs of corpus modules over the same algebra.
pub fn corpus_pairs() -> Vec<(String, Module, Module)> {
    let mut out = Vec::new();
    for e in corpus::all() {
        for (a, m) in &e.modules {
            for (b, n) in &e.modules {
                out.push((format!("{}/{a},{b}", e.key), m.clone(), n.clone()));
            }
        }
    }
    out
}

/// Quotient of a corpus module, or of a sum of two, by the submodule generated by a vector.
pub fn derived_module(entry: usize, i: usize, j: usize, sum: bool, seed: Vec<u32>) -> Module {
    let all = corpus::all();
    let e = &all[entry % all.len()];
    let a = &e.modules[i % e.modules.len()].1;
    let m = if sum {
        let b = &e.modules[j % e.modules.len()].1;
        direct_sum(&e.algebra, &[a, b])
    } else {
        a.clone()
    };
    let f = m.field();
    let v: Vec<u32> = (0..m.dim()).map(|k| seed.get(k).copied().unwrap_or(0) % f.p()).collect();
    let w = m.submodule_generated(&[v]);
    if w.dim() == m.dim() {
        return m;
    }
    m.quotient_module(&w)
}

pub fn subspace_of(f: FieldSpec, n: usize, vs: &[Vec<u32>]) -> Subspace {
    Subspace::from_vectors(f, n, vs)
}
