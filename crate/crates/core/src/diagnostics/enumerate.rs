use std::collections::BTreeMap;

use serde_json::json;

use super::checks::check_c_purity;
use super::{module_witness, TheoremReport, Verdict};
use crate::algebra::{quotient_by_submodule, submodule, Module};
use crate::linalg::Subspace;
use crate::relative::{e_l_dim, in_add, ApproxClass};
use crate::resolution::find_section;
use crate::{Dim, Error, Result};

/// Largest module whose submodule lattice is enumerated.
pub const ENUMERATION_MAX_DIM: usize = 6;

/// All submodules of a module over `F_2`, ordered by dimension and then by echelon basis.
///
/// Every submodule is a chain of cyclic extensions of 0, so closing `{0}` under `S -> S + A v`
/// for all vectors `v` reaches each one.
pub fn submodules(m: &Module) -> Result<Vec<Subspace>> {
    let f = m.field();
    if f.p() != 2 {
        return Err(Error::TooLarge("submodule enumeration runs over F_2 only".into()));
    }
    let d = m.dim();
    if d > ENUMERATION_MAX_DIM {
        return Err(Error::TooLarge(format!("dimension {d} exceeds {ENUMERATION_MAX_DIM}")));
    }
    let key = |s: &Subspace| (s.dim(), s.basis().data().to_vec());
    let vectors: Vec<Vec<u32>> = (1u32..(1 << d))
        .map(|bits| (0..d).map(|i| (bits >> i) & 1).collect())
        .collect();
    let mut found: BTreeMap<(usize, Vec<u32>), Subspace> = BTreeMap::new();
    let zero = Subspace::zero(f, d);
    found.insert(key(&zero), zero.clone());
    let mut queue = vec![zero];
    while let Some(s) = queue.pop() {
        for v in &vectors {
            if s.contains(v) {
                continue;
            }
            let t = s.sum(&m.submodule_generated(std::slice::from_ref(v)));
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(key(&t)) {
                slot.insert(t.clone());
                queue.push(t);
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Enumerates the `C`-pure submodules of `n` and tests the two characterizations: every pure
/// submodule splits exactly when the relative global dimension of the generated family is 0,
/// and every pure submodule lies in `add(C)` exactly when it is at most 1.
///
/// The family is the set of quotients of `n` by its pure submodules; each lies in `Gen[C]`.
pub fn check_pure_submodules(c: &Module, n: &Module, cutoff: usize) -> Result<TheoremReport> {
    let subs = submodules(n)?;
    let cls = ApproxClass::certified_add(c, cutoff)?;
    if cls.self_orthogonal_cutoff().is_none() {
        return Err(Error::NotSelfOrthogonal);
    }
    let mut rep = TheoremReport::new(
        "pure-submodules",
        format!("{}-dimensional module with {} submodules", n.dim(), subs.len()),
    );
    if !in_add(&cls, n)? {
        rep.pass("vacuous: the module is not in add(C)");
        return Ok(rep);
    }

    let mut pure = 0;
    let mut non_summand = None;
    let mut non_member = None;
    let mut sup = Dim::Finite(0);
    let mut worst = None;
    for (idx, s) in subs.iter().enumerate() {
        let (sm, incl) = submodule(n, s)?;
        if !check_c_purity(c, &incl)? {
            continue;
        }
        pure += 1;
        let (q, pi) = quotient_by_submodule(n, s)?;
        if non_summand.is_none() && find_section(&pi)?.is_none() {
            non_summand = Some(idx);
        }
        if non_member.is_none() && !in_add(&cls, &sm)? {
            non_member = Some(idx);
        }
        let d = e_l_dim(&cls, &q, cutoff)?;
        if d > sup {
            sup = d;
            worst = Some(idx);
        }
    }
    rep.push(
        format!("{pure} pure submodules, relative global dimension of their quotients {sup}"),
        Verdict::Pass,
        Some(json!({ "pure": pure, "supremum": sup })),
    );

    let witness = |idx: Option<usize>| {
        let w = idx.or(worst).map(|i| {
            let (sm, _) = submodule(n, &subs[i]).expect("enumerated submodule");
            module_witness(&sm)
        });
        json!({ "module": module_witness(n), "submodule": w, "supremum": sup })
    };
    let all_split = non_summand.is_none();
    rep.check(
        "every pure submodule splits iff the relative global dimension is 0",
        all_split == (sup == Dim::Finite(0)),
        Verdict::Fail,
        || witness(non_summand),
    );
    let all_members = non_member.is_none();
    rep.check(
        "every pure submodule is in add(C) iff the relative global dimension is at most 1",
        all_members == (sup <= Dim::Finite(1)),
        Verdict::Fail,
        || witness(non_member),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::direct_sum;
    use crate::corpus;

    /// Stable subspaces by brute force over every subset of vectors' spans.
    fn brute_force_count(m: &Module) -> usize {
        let d = m.dim();
        let f = m.field();
        let mut seen = std::collections::BTreeSet::new();
        let vectors: Vec<Vec<u32>> = (0u32..(1 << d))
            .map(|bits| (0..d).map(|i| (bits >> i) & 1).collect())
            .collect();
        // every subspace of F_2^d with d <= 3 is spanned by at most 3 vectors
        for a in &vectors {
            for b in &vectors {
                for c in &vectors {
                    let s = Subspace::from_vectors(f, d, &[a.clone(), b.clone(), c.clone()]);
                    if m.is_stable(&s) {
                        seen.insert(s.basis().data().to_vec());
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn submodule_counts_match_brute_force() {
        for (key, name) in [("r3", "omega"), ("r3", "regular"), ("r2", "regular"), ("t2", "regular"), ("f2xf2", "regular")] {
            let m = corpus::module(key, name);
            assert_eq!(submodules(&m).unwrap().len(), brute_force_count(&m), "{key}/{name}");
        }
    }

    #[test]
    fn uniserial_and_semisimple_lattices() {
        // F_2[x]/(x^3) is uniserial: 0 < (x^2) < (x) < R
        assert_eq!(submodules(&corpus::module("r2", "regular")).unwrap().len(), 4);
        // F_2 x F_2 is a sum of two non-isomorphic simples
        assert_eq!(submodules(&corpus::module("f2xf2", "regular")).unwrap().len(), 4);
    }

    #[test]
    fn enumeration_limits() {
        let e = corpus::entry("r3").unwrap();
        let reg = e.module("regular").unwrap();
        let big = direct_sum(&e.algebra, &[reg, reg, e.module("k").unwrap()]);
        assert!(matches!(submodules(&big), Err(Error::TooLarge(_))));
        assert!(matches!(submodules(&corpus::module("f3", "regular")), Err(Error::TooLarge(_))));
    }

    #[test]
    fn pure_submodules_of_the_witness() {
        let omega = corpus::module("r3", "omega");
        let rep = check_pure_submodules(&omega, &omega, 4).unwrap();
        assert_ne!(rep.overall, Verdict::Fail, "{rep:#?}");

        let e = corpus::entry("f2xf2").unwrap();
        let reg = e.module("regular").unwrap();
        let rep = check_pure_submodules(reg, reg, 4).unwrap();
        assert_eq!(rep.overall, Verdict::Pass, "{rep:#?}");
        assert!(rep.assertions[0].claim.ends_with(" 0"));
    }

    #[test]
    fn pure_submodules_outside_the_class_are_vacuous() {
        let e = corpus::entry("r3").unwrap();
        let rep = check_pure_submodules(e.module("omega").unwrap(), e.module("k").unwrap(), 4).unwrap();
        assert!(rep.assertions[0].claim.starts_with("vacuous"));
    }
}
