mod common;

use common::derived_module;
use proptest::prelude::*;
use relhom_core::algebra::{cokernel, image, kernel, power, regular_module};
use relhom_core::hom::{hom_module, hom_space, tensor_over_algebra};
use relhom_core::resolution::ext_dims;
use relhom_core::{corpus, ShortExactSequence};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_image_cokernel_dimensions(
        entry in 0usize..8, i in 0usize..5, j in 0usize..5, sum in any::<bool>(),
        seed in prop::collection::vec(0u32..5, 6), pick in 0usize..64,
    ) {
        let m = derived_module(entry, i, j, sum, seed.clone());
        let n = derived_module(entry, j, i, false, seed);
        let h = hom_space(&m, &n).unwrap();
        prop_assume!(h.dim() > 0);
        let f = h.basis_map(pick % h.dim());
        let (k, incl) = kernel(&f);
        let (im, _, co) = image(&f);
        let (q, proj) = cokernel(&f);
        prop_assert_eq!(m.dim(), k.dim() + im.dim());
        prop_assert_eq!(n.dim(), im.dim() + q.dim());
        prop_assert!(incl.intertwining_failure().is_none());
        prop_assert!(proj.intertwining_failure().is_none());
        prop_assert!(ShortExactSequence::new(incl, co).is_ok());
    }

    #[test]
    fn hom_from_regular_evaluates_at_unit(entry in 0usize..8, i in 0usize..5, j in 0usize..5, sum in any::<bool>(), seed in prop::collection::vec(0u32..5, 6)) {
        let m = derived_module(entry, i, j, sum, seed);
        let r = regular_module(m.algebra());
        prop_assert_eq!(hom_space(&r, &m).unwrap().dim(), m.dim());
    }
}

#[test]
fn tensor_hom_adjunction_on_commutative_corpus_triples() {
    for e in corpus::all().into_iter().filter(|e| e.algebra.is_commutative()) {
        for (_, c) in &e.modules {
            for (_, m) in &e.modules {
                let t = tensor_over_algebra(c, m).unwrap();
                for (_, n) in &e.modules {
                    let lhs = hom_space(&t.result, n).unwrap().dim();
                    let rhs = hom_space(m, &hom_module(c, n).unwrap()).unwrap().dim();
                    assert_eq!(lhs, rhs, "{}", e.key);
                }
            }
        }
    }
}

#[test]
fn self_extensions_are_additive_in_powers() {
    for e in corpus::all() {
        for (name, c) in &e.modules {
            let base = ext_dims(c, c, 3).unwrap();
            for s in 1..=4 {
                let got = ext_dims(c, &power(c, s), 3).unwrap();
                let want: Vec<usize> = base.iter().map(|d| s * d).collect();
                assert_eq!(got, want, "{}/{name} s={s}", e.key);
            }
        }
    }
}
