mod common;

use std::sync::Arc;

use common::derived_module;
use proptest::prelude::*;
use relhom_core::algebra::{direct_sum, dual_module, reinterpret};
use relhom_core::resolution::{ext_dims, free_resolution, syzygy};

const DEGREES: usize = 4;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ext_is_symmetric_under_duality(
        entry in 0usize..8, i in 0usize..5, j in 0usize..5,
        s1 in prop::collection::vec(0u32..5, 6), s2 in prop::collection::vec(0u32..5, 6),
    ) {
        let m = derived_module(entry, i, j, false, s1);
        let n = derived_module(entry, j, i, false, s2);
        let op = Arc::new(m.algebra().opposite());
        let dm = dual_module(&m, &op);
        let dn = dual_module(&n, &op);
        prop_assert_eq!(ext_dims(&m, &n, DEGREES).unwrap(), ext_dims(&dn, &dm, DEGREES).unwrap());
    }

    #[test]
    fn dimension_shifting(
        entry in 0usize..8, i in 0usize..5, j in 0usize..5, sum in any::<bool>(),
        s1 in prop::collection::vec(0u32..5, 6),
    ) {
        let m = derived_module(entry, i, j, sum, s1);
        let n = derived_module(entry, j, i, false, vec![]);
        let omega = syzygy(&m, 1).unwrap();
        let e = ext_dims(&m, &n, DEGREES).unwrap();
        let shifted = ext_dims(&omega, &n, DEGREES - 1).unwrap();
        prop_assert_eq!(&e[2..], &shifted[1..]);
    }

    #[test]
    fn ext_is_additive(
        entry in 0usize..8, i in 0usize..5, j in 0usize..5, k in 0usize..5,
        s1 in prop::collection::vec(0u32..5, 6),
    ) {
        let m1 = derived_module(entry, i, 0, false, s1);
        let m2 = derived_module(entry, j, 0, false, vec![]);
        let n = derived_module(entry, k, 0, false, vec![]);
        let sum = direct_sum(m1.algebra(), &[&m1, &m2]);
        let a = ext_dims(&m1, &n, DEGREES - 1).unwrap();
        let b = ext_dims(&m2, &n, DEGREES - 1).unwrap();
        let s = ext_dims(&sum, &n, DEGREES - 1).unwrap();
        let total: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(s, total);
    }

    #[test]
    fn double_dual_is_the_identity(entry in 0usize..8, i in 0usize..5, s1 in prop::collection::vec(0u32..5, 6)) {
        let m = derived_module(entry, i, 0, false, s1);
        let a = m.algebra().clone();
        let op = Arc::new(a.opposite());
        let opop = Arc::new(op.opposite());
        let back = reinterpret(&dual_module(&dual_module(&m, &op), &opop), &a).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn resolutions_are_exact_where_computed(entry in 0usize..8, i in 0usize..5, j in 0usize..5, s1 in prop::collection::vec(0u32..5, 6)) {
        let m = derived_module(entry, i, j, true, s1);
        let res = free_resolution(&m, 3).unwrap();
        let through = res.exact_through();
        prop_assert!(through.is_some());
    }
}
