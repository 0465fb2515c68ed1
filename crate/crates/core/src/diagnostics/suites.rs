//! Corpus-wide runs of the checks, one report per algebra and class.

use std::sync::Arc;

use serde_json::json;

use super::checks::{
    check_faithfulness_equivalences, check_gen_c, check_global_dim, check_hom_faithful, check_strongly_ep,
    end_tabulation, TensorHomContext,
};
use super::enumerate::{check_pure_submodules, ENUMERATION_MAX_DIM};
use super::family::{augmented_complex, test_family};
use super::{module_witness, TheoremReport, Verdict};
use crate::algebra::{dual_module, reinterpret, Module, ModuleMap, ShortExactSequence};
use crate::corpus::{self, CorpusEntry};
use crate::hom::{counit_map, hom_module, is_semidualizing, tensor_over_algebra};
use crate::relative::{
    balance_report, e_l_dim, in_add, injective_class, l_dim, projective_class, relative_ext,
    relative_ext_coproper, ApproxClass, DEFAULT_STRATEGY,
};
use crate::resolution::{
    ext_dims, hom_cohomology, ChainComplex, PrecoverStrategy, Resolution, ResolutionKind,
};
use crate::{Dim, Result};

/// Highest degree compared by the Ext suites.
pub const EXT_DEGREE: usize = 4;
/// Largest proper dimension probed by the relative Ext vanishing suite.
pub const VANISHING_MAX_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ExactResolutions,
    TensorHomDimensions,
    RelativeExtVanishing,
    FaithfulnessEquivalences,
    Balance,
    GlobalDimension,
    AdjointExt,
    PureSubmodules,
    StronglyEp,
    HomFaithful,
    EndTabulation,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::ExactResolutions,
        Suite::TensorHomDimensions,
        Suite::RelativeExtVanishing,
        Suite::FaithfulnessEquivalences,
        Suite::Balance,
        Suite::GlobalDimension,
        Suite::AdjointExt,
        Suite::PureSubmodules,
        Suite::StronglyEp,
        Suite::HomFaithful,
        Suite::EndTabulation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExactResolutions => "exact-resolutions",
            Suite::TensorHomDimensions => "tensor-hom-dimensions",
            Suite::RelativeExtVanishing => "relative-ext-vanishing",
            Suite::FaithfulnessEquivalences => "hom-faithful-equivalences",
            Suite::Balance => "balance",
            Suite::GlobalDimension => "relative-global-dimension",
            Suite::AdjointExt => "adjoint-ext",
            Suite::PureSubmodules => "pure-submodules",
            Suite::StronglyEp => "strongly-ep",
            Suite::HomFaithful => "hom-faithful",
            Suite::EndTabulation => "end-tabulation",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn run(self, cutoff: usize) -> Result<Vec<TheoremReport>> {
        match self {
            Suite::ExactResolutions => exact_resolutions(cutoff),
            Suite::TensorHomDimensions => tensor_hom_dimensions(cutoff),
            Suite::RelativeExtVanishing => relative_ext_vanishing(cutoff),
            Suite::FaithfulnessEquivalences => faithfulness_equivalences(cutoff),
            Suite::Balance => balance(cutoff),
            Suite::GlobalDimension => global_dimension(cutoff),
            Suite::AdjointExt => adjoint_ext(cutoff),
            Suite::PureSubmodules => pure_submodules(cutoff),
            Suite::StronglyEp => strongly_ep(cutoff),
            Suite::HomFaithful => hom_faithful(cutoff),
            Suite::EndTabulation => end_tabulations(cutoff),
        }
    }
}

/// A class witness together with the modules of its algebra.
#[derive(Clone, Copy, Debug)]
pub struct Scope<'a> {
    /// Short name of the algebra, used in report instances.
    pub algebra: &'a str,
    pub witness_name: &'a str,
    pub witness: &'a Module,
    pub modules: &'a [(String, Module)],
}

impl Scope<'_> {
    fn label(&self) -> String {
        format!("{}: add({})", self.algebra, self.witness_name)
    }

    /// `add(C)` with its certificate, or a report recording that the hypotheses fail.
    fn certified(&self, suite: Suite, cutoff: usize) -> Result<std::result::Result<ApproxClass, TheoremReport>> {
        let cls = ApproxClass::certified_add(self.witness, cutoff)?;
        if cls.self_orthogonal_cutoff().is_some() {
            return Ok(Ok(cls));
        }
        let mut rep = TheoremReport::new(suite.name(), self.label());
        rep.push(
            format!("hypotheses: C is not self-orthogonal through degree {cutoff}"),
            Verdict::Finding,
            Some(module_witness(self.witness)),
        );
        Ok(Err(rep))
    }
}

impl Suite {
    /// Runs the suite for one witness over the given modules.
    pub fn run_scope(self, scope: &Scope, cutoff: usize) -> Result<Vec<TheoremReport>> {
        if self == Suite::TensorHomDimensions {
            return tensor_hom_scope(scope, cutoff);
        }
        if self == Suite::AdjointExt {
            return adjoint_ext_scope(scope, cutoff);
        }
        if self == Suite::Balance {
            let a = scope.witness.algebra();
            return Ok(vec![
                balance_classical(scope.algebra, a, scope.modules, cutoff)?,
                balance_witness(scope, cutoff)?,
            ]);
        }
        if self == Suite::StronglyEp {
            let family = test_family(scope.modules)?;
            return Ok(vec![strongly_ep_scope(scope, &family, cutoff)?]);
        }
        let cls = match scope.certified(self, cutoff)? {
            Ok(cls) => cls,
            Err(rep) => return Ok(vec![rep]),
        };
        let family = || test_family(scope.modules);
        Ok(match self {
            Suite::ExactResolutions => vec![exact_resolutions_for(scope, &cls, cutoff)?],
            Suite::RelativeExtVanishing => vec![relative_ext_vanishing_for(scope, &cls, &family()?, cutoff)?],
            Suite::FaithfulnessEquivalences => {
                let mut rep = check_faithfulness_equivalences(&cls, &family()?, cutoff)?;
                rep.instance = format!("{}, {}", scope.label(), rep.instance);
                vec![rep]
            }
            Suite::GlobalDimension => {
                let gen = generated_family(&cls, &family()?)?;
                let mut rep = check_global_dim(&cls, &gen, cutoff)?;
                rep.instance = format!("{}, generated family, {}", scope.label(), rep.instance);
                vec![rep]
            }
            Suite::PureSubmodules => pure_submodules_for(scope, &cls, cutoff)?,
            Suite::HomFaithful => {
                let mut rep = check_hom_faithful(&cls, &family()?)?;
                rep.instance = format!("{}, {}", scope.label(), rep.instance);
                vec![rep]
            }
            Suite::EndTabulation => {
                let gen = generated_family(&cls, &family()?)?;
                let tab = end_tabulation(&cls, &gen, cutoff)?;
                let mut rep = TheoremReport::new(Suite::EndTabulation.name(), scope.label());
                rep.push("tabulated", Verdict::Pass, Some(json!(tab)));
                vec![rep]
            }
            Suite::TensorHomDimensions | Suite::AdjointExt | Suite::Balance | Suite::StronglyEp => {
                unreachable!("handled above")
            }
        })
    }
}

/// `add(C)` for every nonzero corpus module `C` of the entry that certifies self-orthogonal.
pub fn certified_classes(e: &CorpusEntry, cutoff: usize) -> Result<Vec<(String, ApproxClass)>> {
    let mut out = Vec::new();
    for (name, c) in &e.modules {
        if c.is_zero() {
            continue;
        }
        let cls = ApproxClass::certified_add(c, cutoff)?;
        if cls.self_orthogonal_cutoff().is_some() {
            out.push((name.clone(), cls));
        }
    }
    Ok(out)
}

/// Runs `f` on the scope of every certified corpus class.
fn per_certified_class(
    cutoff: usize,
    mut f: impl FnMut(&Scope, &ApproxClass, &[(String, Module)]) -> Result<Vec<TheoremReport>>,
) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for e in corpus::all() {
        let family = test_family(&e.modules)?;
        for (cn, cls) in certified_classes(&e, cutoff)? {
            let scope = Scope {
                algebra: e.key,
                witness_name: &cn,
                witness: cls.witness(),
                modules: &e.modules,
            };
            out.extend(f(&scope, &cls, &family)?);
        }
    }
    Ok(out)
}

fn exact_resolutions_for(scope: &Scope, cls: &ApproxClass, cutoff: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(Suite::ExactResolutions.name(), scope.label());
    for (mn, m) in scope.modules {
        let Dim::Finite(n) = e_l_dim(cls, m, cutoff)? else {
            continue;
        };
        let canon = Resolution::build(cls.base(), m, n, ResolutionKind::AddC, PrecoverStrategy::Canonical)?;
        let exact = n == 0 || augmented_complex(&canon, n - 1)?.homology_dims().iter().all(|&d| d == 0);
        let kn = canon.syzygy(n)?;
        let member = in_add(cls, &kn)?;
        rep.check(
            format!("{mn}: exact dimension {n}; canonical resolution exact with kernel in the class"),
            exact && member,
            Verdict::Fail,
            || json!({ "module": module_witness(m), "n": n, "exact": exact, "kernel_in_class": member }),
        );
    }
    if rep.assertions.is_empty() {
        rep.pass("no module of finite exact dimension");
    }
    Ok(rep)
}

/// A module of finite exact dimension `n` has a canonical resolution that is exact through `n`
/// with `n`-th kernel in the class.
pub fn exact_resolutions(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, _| Ok(vec![exact_resolutions_for(scope, cls, cutoff)?]))
}

/// The witnesses for the tensor-Hom equalities: `ω` over `R₃` and every commutative algebra over
/// itself.
pub fn tensor_hom_instances() -> Vec<(CorpusEntry, String)> {
    let mut out = Vec::new();
    for e in corpus::all() {
        if e.algebra.is_commutative() {
            out.push((e.clone(), "regular".to_string()));
        }
        if e.key == "r3" {
            out.push((e, "omega".to_string()));
        }
    }
    out
}

fn tensor_hom_scope(scope: &Scope, cutoff: usize) -> Result<Vec<TheoremReport>> {
    let ctx = TensorHomContext::new(scope.witness, cutoff)?;
    scope
        .modules
        .iter()
        .map(|(mn, m)| ctx.check(m, &format!("{}: C = {}, M = {mn}", scope.algebra, scope.witness_name)))
        .collect()
}

pub fn tensor_hom_dimensions(cutoff: usize) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for (e, cn) in tensor_hom_instances() {
        let scope = Scope {
            algebra: e.key,
            witness_name: &cn,
            witness: e.module(&cn).expect("corpus witness"),
            modules: &e.modules,
        };
        out.extend(tensor_hom_scope(&scope, cutoff)?);
    }
    Ok(out)
}

fn relative_ext_vanishing_for(
    scope: &Scope,
    cls: &ApproxClass,
    family: &[(String, Module)],
    cutoff: usize,
) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(Suite::RelativeExtVanishing.name(), scope.label());
    if check_hom_faithful(cls, family)?.overall != Verdict::Pass {
        rep.pass("skipped: the class is not Hom-faithful on the test family");
        return Ok(rep);
    }
    for (mn, m) in scope.modules {
        let n = match l_dim(cls, m, cutoff)? {
            Dim::Finite(n) if n <= VANISHING_MAX_DIM => n,
            _ => continue,
        };
        let res = Resolution::build(cls.base(), m, n + 2, ResolutionKind::AddC, DEFAULT_STRATEGY)?;
        let mut nonzero = Vec::new();
        for (nn, x) in family {
            if hom_cohomology(&res, x, n + 1)?[n + 1] != 0 {
                nonzero.push(nn.clone());
            }
        }
        rep.check(
            format!("{mn}: proper dimension {n}, Ext^{} vanishes on the family", n + 1),
            nonzero.is_empty(),
            Verdict::Fail,
            || json!({ "module": module_witness(m), "nonvanishing_against": nonzero }),
        );
        if n >= 1 {
            let k = res.syzygy(n)?;
            let d = hom_cohomology(&res, &k, n)?[n];
            rep.check(
                format!("{mn}: Ext^{n} against the {n}-th syzygy is nonzero"),
                d != 0,
                Verdict::Fail,
                || json!({ "module": module_witness(m), "syzygy": module_witness(&k) }),
            );
        }
    }
    if rep.assertions.is_empty() {
        rep.pass("no module of small finite proper dimension");
    }
    Ok(rep)
}

/// For a Hom-faithful class and a module of proper dimension `n`, relative `Ext^{n+1}` vanishes
/// on the test family and `Ext^n` against the `n`-th syzygy does not.
pub fn relative_ext_vanishing(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, family| {
        Ok(vec![relative_ext_vanishing_for(scope, cls, family, cutoff)?])
    })
}

pub fn faithfulness_equivalences(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, family| {
        let mut rep = check_faithfulness_equivalences(cls, family, cutoff)?;
        rep.instance = format!("{}, {}", scope.label(), rep.instance);
        Ok(vec![rep])
    })
}

/// The Bass class of a commutative witness: modules whose counit `C ⊗ Hom(C, M) -> M` is an
/// isomorphism.
fn in_bass_class(c: &Module, m: &Module) -> Result<bool> {
    Ok(counit_map(c, m)?.is_iso())
}

/// Projectives against injectives on every pair; any mismatch is a failure.
fn balance_classical(
    label: &str,
    a: &Arc<crate::Algebra>,
    modules: &[(String, Module)],
    cutoff: usize,
) -> Result<TheoremReport> {
    let x = projective_class(a, cutoff)?;
    let y = injective_class(a, cutoff)?;
    let mut rep = TheoremReport::new(Suite::Balance.name(), format!("{label}: projectives, injectives"));
    for (mn, m) in modules {
        for (nn, n) in modules {
            let b = balance_report(&x, &y, m, n, EXT_DEGREE)?;
            rep.check(format!("({mn}, {nn}) balanced"), b.balanced, Verdict::Fail, || json!(b));
        }
    }
    Ok(rep)
}

/// `add(C)` against `prod(C)` on every pair. Balance is guaranteed only on the Bass class of a
/// semidualizing commutative witness; a mismatch there is a failure, elsewhere a finding.
fn balance_witness(scope: &Scope, cutoff: usize) -> Result<TheoremReport> {
    let c = scope.witness;
    let x = ApproxClass::certified_add(c, cutoff)?;
    let y = ApproxClass::certified_prod(c, cutoff)?;
    let sd = c.algebra().is_commutative() && is_semidualizing(c, cutoff)?.semidualizing;
    let mut rep = TheoremReport::new(
        Suite::Balance.name(),
        format!("{}: add({w}), prod({w})", scope.algebra, w = scope.witness_name),
    );
    for (mn, m) in scope.modules {
        for (nn, n) in scope.modules {
            let b = balance_report(&x, &y, m, n, EXT_DEGREE)?;
            let guaranteed = sd && in_bass_class(c, m)? && in_bass_class(c, n)?;
            let otherwise = if guaranteed { Verdict::Fail } else { Verdict::Finding };
            rep.check(format!("({mn}, {nn}) balanced"), b.balanced, otherwise, || {
                json!({ "rows": b.rows, "both_in_bass_class": guaranteed })
            });
        }
    }
    Ok(rep)
}

/// Three-way balance for projectives against injectives on every corpus pair, then for
/// `add(ω)` against `prod(ω)` on every `R₃` pair.
pub fn balance(cutoff: usize) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for e in corpus::all() {
        out.push(balance_classical(e.key, &e.algebra, &e.modules, cutoff)?);
    }
    let e = corpus::entry("r3").expect("corpus");
    let scope = Scope {
        algebra: e.key,
        witness_name: "omega",
        witness: e.module("omega").expect("corpus"),
        modules: &e.modules,
    };
    out.push(balance_witness(&scope, cutoff)?);
    Ok(out)
}

/// Members of the test family generated by the witness.
pub fn generated_family(cls: &ApproxClass, family: &[(String, Module)]) -> Result<Vec<(String, Module)>> {
    let mut out = Vec::new();
    for (n, m) in family {
        if check_gen_c(cls.witness(), m)? {
            out.push((n.clone(), m.clone()));
        }
    }
    Ok(out)
}

pub fn global_dimension(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, family| {
        let gen = generated_family(cls, family)?;
        let mut rep = check_global_dim(cls, &gen, cutoff)?;
        rep.instance = format!("{}, generated family, {}", scope.label(), rep.instance);
        Ok(vec![rep])
    })
}

/// `I_C`, the products of `Hom(C, E)` for injective `E`, as `prod(DC)`.
pub fn omega_injective_class(c: &Module, cutoff: usize) -> Result<ApproxClass> {
    let a = c.algebra();
    let d = reinterpret(&dual_module(c, &Arc::new(a.opposite())), a)?;
    ApproxClass::certified_prod(&d, cutoff)
}

/// Relative Ext over `add(C)` and `I_C` against classical Ext of `Hom(C, -)` and `C ⊗ -`.
fn adjoint_ext_scope(scope: &Scope, cutoff: usize) -> Result<Vec<TheoremReport>> {
    let c = scope.witness;
    let w = scope.witness_name;
    let mut rep = TheoremReport::new(Suite::AdjointExt.name(), format!("{}: add({w}), I_{w}", scope.algebra));
    // the guard also rejects non-commutative witnesses before the tensor products below
    if let Err(err) = TensorHomContext::new(c, cutoff) {
        rep.push(format!("hypotheses: {err}"), Verdict::Finding, Some(module_witness(c)));
        return Ok(vec![rep]);
    }
    let x = ApproxClass::certified_add(c, cutoff)?;
    let y = omega_injective_class(c, cutoff)?;
    let modules = scope.modules;
    let homs = modules.iter().map(|(_, m)| hom_module(c, m)).collect::<Result<Vec<_>>>()?;
    let tensors = modules
        .iter()
        .map(|(_, m)| tensor_over_algebra(c, m).map(|t| t.result))
        .collect::<Result<Vec<_>>>()?;
    for (i, (mn, m)) in modules.iter().enumerate() {
        for (j, (nn, n)) in modules.iter().enumerate() {
            let rel = relative_ext(&x, m, n, EXT_DEGREE)?;
            let classical = ext_dims(&homs[i], &homs[j], EXT_DEGREE)?;
            rep.check(
                format!("({mn}, {nn}): add({w})-Ext = Ext(Hom({w}, M), Hom({w}, N))"),
                rel == classical,
                Verdict::Fail,
                || json!({ "relative": rel, "classical": classical }),
            );
            let rel = relative_ext_coproper(&y, m, n, EXT_DEGREE)?;
            let classical = ext_dims(&tensors[i], &tensors[j], EXT_DEGREE)?;
            rep.check(
                format!("({mn}, {nn}): I_{w}-Ext = Ext({w} ⊗ M, {w} ⊗ N)"),
                rel == classical,
                Verdict::Fail,
                || json!({ "relative": rel, "classical": classical }),
            );
        }
    }
    Ok(vec![rep])
}

pub fn adjoint_ext(cutoff: usize) -> Result<Vec<TheoremReport>> {
    let e = corpus::entry("r3").expect("corpus");
    let scope = Scope {
        algebra: e.key,
        witness_name: "omega",
        witness: e.module("omega").expect("corpus"),
        modules: &e.modules,
    };
    adjoint_ext_scope(&scope, cutoff)
}

fn pure_submodules_for(scope: &Scope, cls: &ApproxClass, cutoff: usize) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    if cls.algebra().field().p() != 2 {
        let mut rep = TheoremReport::new(Suite::PureSubmodules.name(), scope.label());
        rep.pass("skipped: submodule enumeration runs over F_2 only");
        return Ok(vec![rep]);
    }
    for (mn, m) in scope.modules {
        if m.dim() > ENUMERATION_MAX_DIM || !in_add(cls, m)? {
            continue;
        }
        let mut rep = check_pure_submodules(cls.witness(), m, cutoff)?;
        rep.instance = format!("{}, N = {mn}, {}", scope.label(), rep.instance);
        out.push(rep);
    }
    Ok(out)
}

pub fn pure_submodules(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, _| {
        if cls.algebra().field().p() != 2 {
            return Ok(Vec::new());
        }
        pure_submodules_for(scope, cls, cutoff)
    })
}

/// `0 -> C -> C ⊕ C -> C -> 0` as an augmented complex.
fn split_resolution(c: &Module) -> Result<ChainComplex> {
    let ses = ShortExactSequence::split(c, c);
    ChainComplex::new(
        vec![c.clone(), ses.left().target().clone(), c.clone()],
        vec![ses.right().clone(), ses.left().clone()],
    )
}

/// Finite exact resolutions by the class: exact proper resolutions of test family members and
/// a split sequence of witness copies. An uncertified class gets only the identity complex.
fn strongly_ep_scope(scope: &Scope, family: &[(String, Module)], cutoff: usize) -> Result<TheoremReport> {
    let cn = scope.witness_name;
    let cls = ApproxClass::certified_add(scope.witness, cutoff)?;
    let c = cls.witness();
    let complexes = if cls.self_orthogonal_cutoff().is_some() {
        let mut complexes = vec![(format!("split({cn})"), split_resolution(c)?)];
        for (mn, m) in family {
            if let Dim::Finite(n) = e_l_dim(&cls, m, cutoff)? {
                let res = Resolution::build(cls.base(), m, n, ResolutionKind::AddC, DEFAULT_STRATEGY)?;
                complexes.push((format!("resolution({mn})"), augmented_complex(&res, n)?));
            }
        }
        complexes
    } else {
        let id = ModuleMap::identity(c);
        vec![(format!("identity({cn})"), ChainComplex::new(vec![c.clone(), c.clone()], vec![id])?)]
    };
    let mut rep = check_strongly_ep(&cls, &complexes)?;
    rep.instance = scope.label();
    Ok(rep)
}

/// Every certified corpus class, plus the uncertified `add(k)` over `R₁` as a control.
pub fn strongly_ep(cutoff: usize) -> Result<Vec<TheoremReport>> {
    let mut out = per_certified_class(cutoff, |scope, _, family| Ok(vec![strongly_ep_scope(scope, family, cutoff)?]))?;
    let e = corpus::entry("r1").expect("corpus");
    let scope = Scope {
        algebra: e.key,
        witness_name: "k",
        witness: e.module("k").expect("corpus"),
        modules: &e.modules,
    };
    let r1_end = out.iter().rposition(|r| r.instance.starts_with("r1:")).map_or(out.len(), |i| i + 1);
    out.insert(r1_end, strongly_ep_scope(&scope, &test_family(&e.modules)?, cutoff)?);
    Ok(out)
}

pub fn hom_faithful(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, family| {
        let mut rep = check_hom_faithful(cls, family)?;
        rep.instance = format!("{}, {}", scope.label(), rep.instance);
        Ok(vec![rep])
    })
}

/// `End(C)` beside the relative global dimension of the generated family; no verdict.
pub fn end_tabulations(cutoff: usize) -> Result<Vec<TheoremReport>> {
    per_certified_class(cutoff, |scope, cls, family| {
        let gen = generated_family(cls, family)?;
        let tab = end_tabulation(cls, &gen, cutoff)?;
        let mut rep = TheoremReport::new(Suite::EndTabulation.name(), scope.label());
        rep.push("tabulated", Verdict::Pass, Some(json!(tab)));
        Ok(vec![rep])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn certified_classes_over_r3_are_regular_and_omega() {
        let e = corpus::entry("r3").unwrap();
        let names: Vec<String> = certified_classes(&e, 6).unwrap().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, vec!["regular", "omega"]);
    }

    #[test]
    fn split_resolution_is_exact() {
        let c = corpus::module("r3", "omega");
        let cx = split_resolution(&c).unwrap();
        assert!(super::super::family::is_exact(&cx));
    }
}
