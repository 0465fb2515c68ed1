use crate::algebra::{cokernel, Module, ModuleMap};
use crate::hom::hom_space;
use crate::resolution::{free_resolution, ChainComplex, Resolution};
use crate::Result;

/// `X_{n+1} -> ... -> X_1 -> M` with `X_{j+1} = Y_j`: the resolution through stage `n`
/// followed by its augmentation, `M` in degree 0.
pub fn augmented_complex(res: &Resolution, n: usize) -> Result<ChainComplex> {
    let deleted = res.complex(n)?;
    let mut modules = vec![res.target.clone()];
    modules.extend(deleted.modules().iter().cloned());
    let mut differentials = vec![res.augmentation()];
    differentials.extend((1..=n).map(|j| deleted.differential(j).clone()));
    ChainComplex::new(modules, differentials)
}

/// Largest module admitted into a test family.
const FAMILY_MAX_DIM: usize = 8;

/// Named modules extended by first and second syzygies and by cokernels of the Hom basis maps
/// between the given modules; exact duplicates are dropped and the order is deterministic.
pub fn test_family(modules: &[(String, Module)]) -> Result<Vec<(String, Module)>> {
    let mut out: Vec<(String, Module)> = Vec::new();
    let push = |name: String, m: Module, out: &mut Vec<(String, Module)>| {
        if m.dim() <= FAMILY_MAX_DIM && !out.iter().any(|(_, x)| x == &m) {
            out.push((name, m));
        }
    };
    for (name, m) in modules {
        push(name.clone(), m.clone(), &mut out);
    }
    for (name, m) in modules {
        let res = free_resolution(m, 1)?;
        for j in 1..=2 {
            if res.terminal_stage().is_some_and(|t| t < j) {
                break;
            }
            push(format!("syz{j}({name})"), res.syzygy(j)?, &mut out);
        }
    }
    for (sn, s) in modules {
        for (tn, t) in modules {
            let h = hom_space(s, t)?;
            for (k, f) in h.basis_maps().into_iter().enumerate() {
                let (q, _) = cokernel(&f);
                push(format!("coker({sn}->{tn}#{k})"), q, &mut out);
            }
        }
    }
    Ok(out)
}

/// A family member's augmented complex is exact, including injectivity at the top.
pub(crate) fn is_exact(cx: &ChainComplex) -> bool {
    cx.homology_dims().iter().all(|&d| d == 0) && cx.differential(cx.len()).is_monic()
}

pub(crate) fn map_of(res: &Resolution, j: usize) -> ModuleMap {
    let s = &res.stages()[j];
    ModuleMap::new_unchecked(s.term.module().clone(), s.syzygy.clone(), s.map.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn augmented_free_resolution_of_projective_is_exact() {
        let e = corpus::entry("t2").unwrap();
        let res = free_resolution(e.module("s2").unwrap(), 3).unwrap();
        assert_eq!(res.terminal_stage(), Some(1));
        let cx = augmented_complex(&res, 1).unwrap();
        assert!(is_exact(&cx));
    }

    #[test]
    fn truncated_augmented_complex_is_not_closed_at_the_top() {
        let k = corpus::module("r1", "k");
        let res = free_resolution(&k, 3).unwrap();
        let cx = augmented_complex(&res, 2).unwrap();
        assert_eq!(cx.homology_dims(), vec![0, 0, 0]);
        assert!(!is_exact(&cx));
    }

    #[test]
    fn family_contains_inputs_first_and_has_no_duplicates() {
        let mods = corpus::modules_of("r3");
        let fam = test_family(&mods).unwrap();
        for (i, (n, _)) in mods.iter().enumerate() {
            assert_eq!(&fam[i].0, n);
        }
        for i in 0..fam.len() {
            for j in 0..i {
                assert_ne!(fam[i].1, fam[j].1);
            }
        }
        assert!(fam.len() > mods.len());
        assert_eq!(fam, test_family(&mods).unwrap());
    }
}
