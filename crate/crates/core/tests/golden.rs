//! Frozen values, each confirmed by an oracle that shares no code with the resolution engine.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use relhom_core::algebra::{direct_sum, power, regular_module, Module};
use relhom_core::hom::is_semidualizing;
use relhom_core::resolution::ext_dims;
use relhom_core::{corpus, FMatrix};

/// All intertwining matrices `p -> n`, by enumeration.
fn hom_set(p: &Module, n: &Module) -> Vec<FMatrix> {
    let f = p.field();
    let (s, t) = (p.dim(), n.dim());
    let mut out = Vec::new();
    for code in 0u64..(1 << (s * t)) {
        let data: Vec<u32> = (0..s * t).map(|b| ((code >> b) & 1) as u32).collect();
        let x = FMatrix::from_vec(f, t, s, data).unwrap();
        if (0..p.algebra().dim()).all(|i| x.mul(p.act(i)) == n.act(i).mul(&x)) {
            out.push(x);
        }
    }
    out
}

/// `log_2 |cocycles / coboundaries|` of `Hom(P_*, n)` over `F_2`, with `ds[i]: P_{i+1} -> P_i`.
fn ext_by_enumeration(ps: &[Module], ds: &[FMatrix], n: &Module) -> Vec<usize> {
    let homs: Vec<Vec<FMatrix>> = ps[..ds.len()].iter().map(|p| hom_set(p, n)).collect();
    (0..ds.len())
        .map(|i| {
            let cocycles = homs[i].iter().filter(|f| f.mul(&ds[i]).is_zero()).count();
            let coboundaries: BTreeSet<Vec<u32>> = if i == 0 {
                [vec![0; n.dim() * ps[0].dim()]].into()
            } else {
                homs[i - 1].iter().map(|g| g.mul(&ds[i - 1]).data().to_vec()).collect()
            };
            (cocycles / coboundaries.len()).trailing_zeros() as usize
        })
        .collect()
}

/// `d: R^{2r} -> R^r` over a commutative algebra: generator `2j + s` maps to `a_s e_j`.
fn radical_differential(a: &Arc<relhom_core::Algebra>, r: usize, gens: &[usize]) -> FMatrix {
    let d = a.dim();
    let k = gens.len();
    let mut m = FMatrix::zeros(a.field(), r * d, k * r * d);
    for j in 0..r {
        for (s, &g) in gens.iter().enumerate() {
            m.set_block(j * d, (k * j + s) * d, a.left_mult(g));
        }
    }
    m
}

#[test]
fn self_ext_of_residue_field_of_dual_numbers() {
    // R --x--> R --x--> R -> k is periodic; every induced map on Hom(-, k) vanishes
    let a = corpus::entry("r1").unwrap().algebra;
    let k = corpus::residue_field(&a);
    let r = regular_module(&a);
    let ps = vec![r.clone(); 5];
    let ds = vec![a.left_mult(1).clone(); 4];
    let oracle = ext_by_enumeration(&ps, &ds, &k);
    assert_eq!(oracle, vec![1, 1, 1, 1]);
    assert_eq!(ext_dims(&k, &k, 6).unwrap(), vec![1; 7]);
}

#[test]
fn self_ext_of_residue_field_of_radical_square_zero_algebra() {
    // minimal resolution has P_i = R^(2^i); degrees 0..=2 are enumerated, the rest frozen
    let a = corpus::entry("r3").unwrap().algebra;
    let k = corpus::residue_field(&a);
    let r = regular_module(&a);
    let ps: Vec<Module> = (0..4).map(|i| power(&r, 1 << i)).collect();
    let ds: Vec<FMatrix> = (0..3).map(|i| radical_differential(&a, 1 << i, &[1, 2])).collect();
    for (i, d) in ds.iter().enumerate() {
        assert!(Module::new(a.clone(), ps[i + 1].actions().to_vec()).is_ok());
        assert!((0..3).all(|g| d.mul(ps[i + 1].act(g)) == ps[i].act(g).mul(d)));
        if i > 0 {
            assert!(ds[i - 1].mul(d).is_zero());
        }
    }
    assert_eq!(ext_by_enumeration(&ps, &ds, &k), vec![1, 2, 4]);
    assert_eq!(ext_dims(&k, &k, 4).unwrap(), vec![1, 2, 4, 8, 16]);
}

#[test]
fn canonical_module_of_radical_square_zero_algebra_is_semidualizing() {
    let omega = corpus::module("r3", "omega");
    let rep = is_semidualizing(&omega, 6).unwrap();
    assert!(rep.homothety_bijective);
    assert_eq!(rep.self_ext, vec![0; 6]);
    assert!(rep.semidualizing);

    let k = corpus::module("r3", "k");
    let rep = is_semidualizing(&k, 3).unwrap();
    assert!(!rep.semidualizing);
    assert_eq!(rep.witness_degree, Some(1));
}

#[test]
fn ext_between_simples_of_triangular_algebra() {
    // P1 = S1 is simple projective and 0 -> P1 -> P2 -> S2 -> 0
    let e = corpus::entry("t2").unwrap();
    let p1 = e.module("p1").unwrap();
    let s2 = e.module("s2").unwrap();
    let p2 = e.module("p2").unwrap();
    let ps = vec![p2.clone(), p1.clone(), direct_sum(&e.algebra, &[])];
    let incl = FMatrix::from_rows(e.algebra.field(), &[[1i64], [0]]);
    let ds = vec![incl, FMatrix::zeros(e.algebra.field(), 1, 0)];
    let oracle = ext_by_enumeration(&ps, &ds, p1);
    assert_eq!(oracle, vec![0, 1]);
    assert_eq!(ext_dims(s2, p1, 3).unwrap(), vec![0, 1, 0, 0]);
}
