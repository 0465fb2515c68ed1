mod common;

use common::{brute_force_hom_count, corpus_pairs, derived_module};
use proptest::prelude::*;
use relhom_core::hom::hom_space;

#[test]
fn hom_dimensions_match_enumeration_on_corpus_pairs() {
    let mut checked = 0;
    for (name, m, n) in corpus_pairs() {
        let cells = (m.dim() * n.dim()) as u32;
        if u64::from(m.field().p()).pow(cells) > 1 << 20 {
            continue;
        }
        let count = brute_force_hom_count(&m, &n);
        let d = hom_space(&m, &n).unwrap().dim() as u32;
        assert_eq!(count, u64::from(m.field().p()).pow(d), "{name}");
        checked += 1;
    }
    eprintln!("{checked} pairs enumerated");
    assert!(checked >= 40);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_dimension_matches_enumeration_on_derived_modules(
        entry in 0usize..8, i in 0usize..5, j in 0usize..5, k in 0usize..5, sum in any::<bool>(),
        seed in prop::collection::vec(0u32..5, 6),
    ) {
        let m = derived_module(entry, i, j, sum, seed.clone());
        let n = derived_module(entry, k, i, false, seed.into_iter().rev().collect());
        let cells = (m.dim() * n.dim()) as u32;
        prop_assume!(u64::from(m.field().p()).pow(cells) <= 1 << 18);
        let d = hom_space(&m, &n).unwrap().dim() as u32;
        prop_assert_eq!(brute_force_hom_count(&m, &n), u64::from(m.field().p()).pow(d));
    }
}
