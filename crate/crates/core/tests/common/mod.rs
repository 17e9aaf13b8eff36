//! Fixtures, a brute-force semantics oracle and the checks shared by the
//! example, property and acceptance test targets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use abaplus::aa::aa_extensions;
use abaplus::attacks::attacks;
use abaplus::compliance::{
    check_axiom_consistency, check_axiom_negation, check_contraposition, check_principle,
    check_wcp, Complement, Principle, Status,
};
use abaplus::generate::{random_framework, random_paf, random_total_preorder, rng, GenConfig};
use abaplus::related::{
    argument_order, build_arguments, defeat_graph, dung_normal_graph, p_aba_extensions,
    p_aba_order, paf_to_abaplus, paf_view, repair_paf, ArgumentPrinciple,
};
use abaplus::{
    assumption_conclusions, closure, conclusions, derivation_oracle, parse_document,
    parse_framework, plus_attacks, support_families, tainted_derivable, AssumptionSet, Error,
    Framework, LanguagePreference, Limits, Mode, Reasoner, SemanticsName,
};

pub const F_Z: &str = "\
assumption alpha
assumption beta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
";

pub const F_PLUS_Z: &str = "\
assumption alpha
assumption beta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
pref alpha < beta
";

pub const F_D: &str = "\
assumption alpha
assumption beta
assumption delta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
rule beta <- delta
";

pub const F_PLUS_C: &str = "\
assumption alpha
assumption beta
assumption gamma
contrary alpha stay
contrary beta leave
rule leave <- alpha gamma
rule stay <- beta gamma
pref alpha < beta
pref alpha < gamma
";

pub const NO_COMPLETE: &str = "\
assumption alpha
assumption beta
assumption gamma
contrary beta beta_bar
rule beta_bar <- alpha gamma
pref alpha < beta
pref beta <= gamma
pref gamma <= beta
";

pub const THREE_CYCLE: &str = "\
assumption alpha
assumption beta
assumption gamma
contrary alpha alpha_bar
contrary beta beta_bar
contrary gamma gamma_bar
rule beta_bar <- alpha
rule gamma_bar <- beta
rule alpha_bar <- gamma
pref gamma < beta
pref beta < alpha
lpref gamma < beta
lpref beta < alpha
";

pub const FOUR_CYCLE: &str = "\
assumption alpha
assumption beta
assumption gamma
assumption delta
contrary alpha alpha_bar
contrary beta beta_bar
contrary gamma gamma_bar
contrary delta delta_bar
rule alpha_bar <- delta
rule beta_bar <- alpha
rule gamma_bar <- beta
rule delta_bar <- gamma
rule gamma_bar <- delta
pref delta < alpha
pref gamma < beta
lpref delta < alpha
lpref gamma < beta
";

pub const CLASSICAL: &str = "\
assumption alpha
contrary alpha p
rule p <-
rule ~p <-
";

pub const ARGUMENT_VIEWS: &str = "\
assumption epsilon
assumption beta
assumption beta2
assumption alpha
contrary epsilon epsilon_bar
contrary beta beta_bar
contrary beta2 beta2_bar
contrary alpha alpha_bar
rule epsilon_bar <- beta beta2
rule beta_bar <- epsilon beta2
rule beta2_bar <- epsilon beta
rule beta_bar <- beta
rule beta2_bar <- beta2
rule alpha_bar <- beta beta2
rule beta_bar <- alpha beta2
rule beta2_bar <- alpha beta
pref beta < epsilon
";

/// Outcome of one named check: `Err` carries a re-checkable witness.
pub type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn fw(text: &str) -> Framework {
    parse_framework(text).expect("fixture parses")
}

pub fn sets(f: &Framework, names: &[&[&str]]) -> Vec<AssumptionSet> {
    let mut v: Vec<AssumptionSet> = names.iter().map(|n| f.set(n).unwrap()).collect();
    v.sort();
    v
}

pub fn show(f: &Framework, v: &[AssumptionSet]) -> String {
    let parts: Vec<String> = v.iter().map(|&s| format!("{{{}}}", f.set_names(s).join(","))).collect();
    format!("[{}]", parts.join(" "))
}

fn names_of(f: &Framework, s: &BTreeSet<abaplus::SentenceId>) -> BTreeSet<String> {
    s.iter().map(|&x| f.name(x).to_owned()).collect()
}

fn tokens(v: &[&str]) -> BTreeSet<String> {
    v.iter().map(|s| (*s).to_owned()).collect()
}

pub fn expect_exts(
    f: &Framework,
    r: &Reasoner<'_>,
    sem: SemanticsName,
    mode: Mode,
    want: &[&[&str]],
) -> Result<(), String> {
    let got = r.extensions(sem, mode).map_err(|e| e.to_string())?.extensions;
    let want = sets(f, want);
    ensure!(
        got == want,
        "{sem} ({}) gave {} expected {}",
        mode.as_str(),
        show(f, &got),
        show(f, &want)
    );
    Ok(())
}

const FIVE: [SemanticsName; 5] = [
    SemanticsName::Complete,
    SemanticsName::Preferred,
    SemanticsName::Stable,
    SemanticsName::WellFounded,
    SemanticsName::Ideal,
];

fn unique_everywhere(f: &Framework, r: &Reasoner<'_>, want: &[&str], cn: &[&str]) -> Result<(), String> {
    for sem in FIVE {
        expect_exts(f, r, sem, Mode::PreferenceAware, &[want])?;
        let rep = r.extensions(sem, Mode::PreferenceAware).unwrap();
        ensure!(
            names_of(f, &rep.conclusions[0]) == tokens(cn),
            "{sem} conclusions {:?}",
            names_of(f, &rep.conclusions[0])
        );
    }
    Ok(())
}

// ---------------------------------------------------------------- criterion 1

pub fn golden_f_z() -> Check {
    let f = fw(F_Z);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    for mode in [Mode::Plain, Mode::PreferenceAware] {
        expect_exts(&f, &r, SemanticsName::Preferred, mode, &[&["alpha"], &["beta"]])?;
        expect_exts(&f, &r, SemanticsName::Stable, mode, &[&["alpha"], &["beta"]])?;
        expect_exts(&f, &r, SemanticsName::WellFounded, mode, &[&[]])?;
        expect_exts(&f, &r, SemanticsName::Ideal, mode, &[&[]])?;
        expect_exts(&f, &r, SemanticsName::Complete, mode, &[&[], &["alpha"], &["beta"]])?;
    }
    let wf = r.extensions(SemanticsName::WellFounded, Mode::Plain).unwrap();
    ensure!(wf.name == "grounded", "flat well-founded reported as {}", wf.name);
    Ok("F_Z: preferred/stable {α},{β}; grounded/ideal ∅; complete ∅,{α},{β}".into())
}

pub fn golden_f_plus_z() -> Check {
    let f = fw(F_PLUS_Z);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    unique_everywhere(&f, &r, &["beta"], &["beta", "stay"])?;
    expect_exts(&f, &r, SemanticsName::Admissible, Mode::PreferenceAware, &[&[], &["beta"]])?;
    ensure!(r.grounded_fixpoint().unwrap() == f.set(&["beta"]).unwrap(), "grounded fixpoint");
    Ok("F⁺_Z: unique {β} under five semantics, Cn = {β, stay}".into())
}

pub fn golden_f_d() -> Check {
    let f = fw(F_D);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    let m = Mode::Plain;
    expect_exts(&f, &r, SemanticsName::Stable, m, &[&["beta", "delta"]])?;
    expect_exts(&f, &r, SemanticsName::Preferred, m, &[&["alpha"], &["beta", "delta"]])?;
    expect_exts(&f, &r, SemanticsName::Complete, m, &[&["beta", "delta"]])?;
    expect_exts(&f, &r, SemanticsName::Ideal, m, &[&[]])?;
    expect_exts(
        &f,
        &r,
        SemanticsName::Admissible,
        m,
        &[&[], &["alpha"], &["beta"], &["beta", "delta"]],
    )?;
    Ok("F_D: stable {β,δ}; preferred {α},{β,δ}; complete {β,δ}; ideal ∅".into())
}

/// Well-founded of F_D is the intersection of its complete extensions, of
/// which {β,δ} is the only one. The expected ∅ does not follow.
pub fn golden_f_d_well_founded() -> (String, Vec<AssumptionSet>) {
    let f = fw(F_D);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    let got = r.extensions(SemanticsName::WellFounded, Mode::Plain).unwrap().extensions;
    (show(&f, &got), got)
}

pub fn golden_f_plus_d() -> Check {
    let f = fw(&format!("{F_D}pref alpha < beta\n"));
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    unique_everywhere(&f, &r, &["beta", "delta"], &["beta", "delta", "stay"])?;
    let wf = r.extensions(SemanticsName::WellFounded, Mode::PreferenceAware).unwrap();
    ensure!(wf.name == "well_founded", "non-flat report named {}", wf.name);
    Ok("F⁺_D: unique {β,δ}, Cn = {β,δ,stay}".into())
}

pub fn golden_f_plus_c() -> Check {
    let f = fw(F_PLUS_C);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    unique_everywhere(&f, &r, &["beta", "gamma"], &["beta", "gamma", "stay"])?;
    Ok("F⁺_C: unique {β,γ}, Cn = {β,γ,stay}".into())
}

pub fn golden_no_complete() -> Check {
    let f = fw(NO_COMPLETE);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    let m = Mode::PreferenceAware;
    let complete = r.extensions(SemanticsName::Complete, m).unwrap();
    ensure!(!complete.exists && complete.extensions.is_empty(), "complete exists");
    let wf = r.extensions(SemanticsName::WellFounded, m).unwrap();
    ensure!(!wf.exists, "well-founded exists without complete extensions");
    let preferred = r.extensions(SemanticsName::Preferred, m).unwrap().extensions;
    ensure!(preferred.contains(&f.set(&["alpha", "beta"]).unwrap()), "preferred {}", show(&f, &preferred));
    expect_exts(&f, &r, SemanticsName::Ideal, m, &[&["beta"]])?;
    ensure!(!r.is_conflict_free(f.all_assumptions(), m), "{{α,β,γ}} conflict-free");
    let fam = support_families(&f, 4096).unwrap();
    let wcp = check_wcp(&f, &fam);
    ensure!(wcp.status == Status::Violated, "WCP {}", wcp.status);
    for sem in [SemanticsName::Preferred, SemanticsName::Ideal] {
        let v = check_principle(&r, Principle::MaximalElements, sem).unwrap();
        ensure!(v.status == Status::Violated, "maximal elements under {sem}: {}", v.status);
    }
    Ok(format!(
        "no-complete: no <-complete; preferred {}; ideal {{β}}; WCP and Principle 3 violated",
        show(&f, &preferred)
    ))
}

pub fn golden_three_cycle() -> Check {
    let f = fw(THREE_CYCLE);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    expect_exts(&f, &r, SemanticsName::Stable, Mode::Plain, &[])?;
    expect_exts(&f, &r, SemanticsName::Complete, Mode::Plain, &[&[]])?;
    for sem in FIVE {
        expect_exts(&f, &r, sem, Mode::PreferenceAware, &[&["alpha"]])?;
    }
    ensure!(r.grounded_fixpoint().unwrap() == f.set(&["alpha"]).unwrap(), "grounded fixpoint");
    Ok("3-cycle: plain no stable, complete {∅}; ABA⁺ unique {α}".into())
}

pub fn golden_four_cycle() -> Check {
    let (f, lp) = parse_document(FOUR_CYCLE).unwrap();
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    expect_exts(&f, &r, SemanticsName::Stable, Mode::Plain, &[&["alpha", "gamma"], &["beta", "delta"]])?;
    for sem in [SemanticsName::Stable, SemanticsName::Preferred, SemanticsName::Ideal, SemanticsName::WellFounded] {
        expect_exts(&f, &r, sem, Mode::PreferenceAware, &[&["alpha", "gamma"]])?;
    }
    let stable = p_aba_extensions(&r, &lp, SemanticsName::Stable).unwrap().extensions;
    ensure!(
        stable == sets(&f, &[&["alpha", "gamma"], &["beta", "delta"]]),
        "stable P-extensions {}",
        show(&f, &stable)
    );
    for sem in [SemanticsName::WellFounded, SemanticsName::Ideal] {
        let p = p_aba_extensions(&r, &lp, sem).unwrap().extensions;
        ensure!(p == vec![AssumptionSet::EMPTY], "{sem} P-extensions {}", show(&f, &p));
    }
    Ok("4-assumption: plain stable {α,γ},{β,δ}; ABA⁺ unique {α,γ}; P-extensions both / ∅".into())
}

pub fn golden_classical() -> Check {
    let f = fw(CLASSICAL);
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    for sem in SemanticsName::ALL {
        let rep = r.extensions(sem, Mode::PreferenceAware).unwrap();
        if sem == SemanticsName::Admissible {
            continue;
        }
        ensure!(rep.extensions == vec![AssumptionSet::EMPTY], "{sem}: {}", show(&f, &rep.extensions));
        ensure!(names_of(&f, &rep.conclusions[0]) == tokens(&["p", "~p"]), "Cn(∅)");
        let v = check_principle(&r, Principle::ClassicalConsistency, sem).unwrap();
        ensure!(v.status == Status::Violated, "classical consistency under {sem}");
    }
    let fam = support_families(&f, 4096).unwrap();
    let v = check_axiom_consistency(&f, &fam, Complement);
    ensure!(v.status == Status::Violated, "axiom of consistency {}", v.status);
    Ok("classical: unique ∅ with Cn = {p,~p}; axiom of consistency and classical consistency violated".into())
}

pub fn criterion_1() -> Vec<(&'static str, Check)> {
    vec![
        ("F_Z", golden_f_z()),
        ("F+_Z", golden_f_plus_z()),
        ("F_D", golden_f_d()),
        ("F+_D", golden_f_plus_d()),
        ("F+_C", golden_f_plus_c()),
        ("no-complete", golden_no_complete()),
        ("3-cycle", golden_three_cycle()),
        ("4-assumption", golden_four_cycle()),
        ("classical-consistency", golden_classical()),
    ]
}

// ---------------------------------------------------------------- criterion 2

pub const ARGUMENT_VIEW_ARGUMENTS: [&str; 12] = [
    "{epsilon}|-epsilon",
    "{beta}|-beta",
    "{beta2}|-beta2",
    "{alpha}|-alpha",
    "{beta,beta2}|-epsilon_bar",
    "{epsilon,beta2}|-beta_bar",
    "{epsilon,beta}|-beta2_bar",
    "{beta}|-beta_bar",
    "{beta2}|-beta2_bar",
    "{beta,beta2}|-alpha_bar",
    "{beta2,alpha}|-beta_bar",
    "{beta,alpha}|-beta2_bar",
];

fn complete_names(g: &abaplus::AAGraph) -> Result<Vec<Vec<String>>, String> {
    let exts = aa_extensions(g, SemanticsName::Complete, 1 << 20).map_err(|e| e.to_string())?;
    Ok(exts
        .into_iter()
        .map(|s| s.iter().map(|i| g.name(i).to_owned()).collect())
        .collect())
}

pub fn argument_view_cluster() -> Vec<(&'static str, Check)> {
    let f = fw(ARGUMENT_VIEWS);
    let fam = support_families(&f, 4096).unwrap();
    let r = Reasoner::new(&f, Limits::default()).unwrap();
    let (args, graph) = build_arguments(&f, &fam).unwrap();
    let e = vec![vec!["{epsilon}|-epsilon".to_owned()]];
    let empty: Vec<Vec<String>> = vec![vec![]];
    let mut out = Vec::new();

    out.push(("ABA+ complete", (|| {
        expect_exts(&f, &r, SemanticsName::Complete, Mode::PreferenceAware, &[&["epsilon", "alpha"]])?;
        ensure!(
            r.defends(f.set(&["epsilon"]).unwrap(), f.set(&["alpha"]).unwrap(), Mode::PreferenceAware),
            "{{ε}} does not defend {{α}}"
        );
        Ok("ABA⁺ unique <-complete {ε,α}".to_owned())
    })()));

    out.push(("arguments", (|| {
        let ids: BTreeSet<String> = args.iter().map(|a| a.id(&f)).collect();
        let want: BTreeSet<String> = ARGUMENT_VIEW_ARGUMENTS.iter().map(|s| (*s).to_owned()).collect();
        ensure!(ids == want, "arguments {ids:?}");
        let plain = complete_names(&graph)?;
        ensure!(plain == empty, "plain AA complete {plain:?}");
        Ok("12 arguments; plain AA complete ∅".to_owned())
    })()));

    out.push(("orderings", (|| {
        let x = f.set(&["beta", "beta2"]).unwrap();
        let eps = f.set(&["epsilon"]).unwrap();
        ensure!(argument_order(ArgumentPrinciple::Eli, x, eps, f.pref()).strictly_less, "X ⊀_Eli E");
        ensure!(argument_order(ArgumentPrinciple::DEli, x, eps, f.pref()).strictly_less, "X ⊀_DEli E");
        ensure!(!argument_order(ArgumentPrinciple::Dem, x, eps, f.pref()).strictly_less, "X ≺_Dem E");
        ensure!(!argument_order(ArgumentPrinciple::Dem, x, eps, f.pref()).leq, "X ≼_Dem E");
        Ok("X_ē ≺ E under Eli and DEli, not under Dem".to_owned())
    })()));

    for (label, principle, want) in [
        ("PAF-Eli", ArgumentPrinciple::Eli, &e),
        ("PAF-DEli", ArgumentPrinciple::DEli, &e),
    ] {
        let got = paf_view(&f, &args, &graph, principle).map_err(|e| e.to_string()).and_then(|g| complete_names(&g));
        out.push((label, match got {
            Ok(g) if &g == want => Ok(format!("{label} complete {g:?}")),
            Ok(g) => Err(format!("{label} complete {g:?}")),
            Err(e) => Err(e),
        }));
    }
    for (label, principle, want) in [
        ("ASPIC-Eli", ArgumentPrinciple::Eli, &e),
        ("ASPIC-DEli", ArgumentPrinciple::DEli, &e),
        ("ASPIC-Dem", ArgumentPrinciple::Dem, &empty),
    ] {
        let got = defeat_graph(&f, &args, principle).map_err(|e| e.to_string()).and_then(|g| complete_names(&g));
        out.push((label, match got {
            Ok(g) if &g == want => Ok(format!("{label} complete {g:?}")),
            Ok(g) => Err(format!("{label} complete {g:?}")),
            Err(e) => Err(e),
        }));
    }
    out.push(("PAF-Dem grounded", (|| {
        let g = paf_view(&f, &args, &graph, ArgumentPrinciple::Dem).map_err(|e| e.to_string())?;
        let grounded = aa_extensions(&g, SemanticsName::WellFounded, 1 << 20).unwrap();
        ensure!(grounded == vec![AssumptionSet::EMPTY], "grounded {grounded:?}");
        let e_idx = g.index("{epsilon}|-epsilon").unwrap();
        let x_idx = g.index("{beta,beta2}|-epsilon_bar").unwrap();
        ensure!(g.has_edge(x_idx, e_idx), "X_ē does not defeat E under Dem");
        Ok("X_ē defeats E; grounded ∅".to_owned())
    })()));
    out.push(("ASPIC-Dem = attacks", (|| {
        let dem = defeat_graph(&f, &args, ArgumentPrinciple::Dem).unwrap();
        ensure!(dem.edges() == graph.edges(), "Dem defeats differ from attacks");
        Ok("Dem defeat = attack".to_owned())
    })()));
    out.push(("Dung normal", (|| {
        let normal = dung_normal_graph(&f, &args).unwrap();
        let eli = defeat_graph(&f, &args, ArgumentPrinciple::Eli).unwrap();
        ensure!(normal.edges() == eli.edges(), "normal attacks differ from Eli defeats");
        let c = complete_names(&normal)?;
        ensure!(c == e, "normal-attack complete {c:?}");
        Ok("Dung normal attack = Eli defeat, complete {E}".to_owned())
    })()));
    out
}

/// Complete extensions of the Dem-repaired PAF of the argument-view fixture.
/// Besides the attack on E, the attack {β}⊢β̄ on {ε,β}⊢β̄′ is reversed
/// ({β} ≺_Dem {ε,β} since β < ε), which yields a second complete
/// extension next to ∅.
pub fn paf_dem_complete() -> Vec<Vec<String>> {
    let f = fw(ARGUMENT_VIEWS);
    let fam = support_families(&f, 4096).unwrap();
    let (args, graph) = build_arguments(&f, &fam).unwrap();
    let g = paf_view(&f, &args, &graph, ArgumentPrinciple::Dem).unwrap();
    complete_names(&g).unwrap()
}

pub const PAF_DEM_SECOND: [&str; 5] = [
    "{epsilon}|-epsilon",
    "{beta}|-beta",
    "{alpha}|-alpha",
    "{epsilon,beta}|-beta2_bar",
    "{beta,alpha}|-beta2_bar",
];

pub fn paf_dem_reversal() -> bool {
    let f = fw(ARGUMENT_VIEWS);
    let lesser = f.set(&["beta"]).unwrap();
    let greater = f.set(&["epsilon", "beta"]).unwrap();
    argument_order(ArgumentPrinciple::Dem, lesser, greater, f.pref()).strictly_less
        && !argument_order(ArgumentPrinciple::Eli, lesser, greater, f.pref()).strictly_less
        && !argument_order(ArgumentPrinciple::DEli, lesser, greater, f.pref()).strictly_less
}

// ---------------------------------------------------------------- oracle

/// Extensions computed straight from the definitions, using the direct
/// attack predicates over a full table of subset pairs.
#[derive(Debug, PartialEq, Eq)]
pub struct NaiveCatalogue {
    pub admissible: Vec<AssumptionSet>,
    pub complete: Vec<AssumptionSet>,
    pub preferred: Vec<AssumptionSet>,
    pub stable: Vec<AssumptionSet>,
    pub well_founded: Vec<AssumptionSet>,
    pub ideal: Vec<AssumptionSet>,
}

impl NaiveCatalogue {
    pub fn get(&self, sem: SemanticsName) -> &[AssumptionSet] {
        match sem {
            SemanticsName::Admissible => &self.admissible,
            SemanticsName::Complete => &self.complete,
            SemanticsName::Preferred => &self.preferred,
            SemanticsName::Stable => &self.stable,
            SemanticsName::WellFounded => &self.well_founded,
            SemanticsName::Ideal => &self.ideal,
        }
    }
}

pub struct Naive<'f> {
    pub f: &'f Framework,
    size: usize,
    table: Vec<bool>,
    closed: Vec<AssumptionSet>,
}

fn maximal(v: &[AssumptionSet]) -> Vec<AssumptionSet> {
    v.iter()
        .copied()
        .filter(|&s| !v.iter().any(|&t| t != s && s.is_subset(t)))
        .collect()
}

impl<'f> Naive<'f> {
    pub fn new(f: &'f Framework, mode: Mode) -> Self {
        let size = 1usize << f.assumption_count();
        let all: Vec<AssumptionSet> = f.all_assumptions().subsets().collect();
        let mut table = vec![false; size * size];
        for &a in &all {
            for &b in &all {
                table[a.bits() as usize * size + b.bits() as usize] = attacks(f, mode, a, b);
            }
        }
        let closed = all.iter().copied().filter(|&e| closure(f, e) == e).collect();
        Naive { f, size, table, closed }
    }

    pub fn attacks(&self, a: AssumptionSet, b: AssumptionSet) -> bool {
        self.table[a.bits() as usize * self.size + b.bits() as usize]
    }

    pub fn defends(&self, e: AssumptionSet, a: AssumptionSet) -> bool {
        self.closed.iter().all(|&b| !self.attacks(b, a) || self.attacks(e, b))
    }

    pub fn defends_pointwise(&self, e: AssumptionSet, a: AssumptionSet) -> bool {
        a.iter().all(|x| self.defends(e, AssumptionSet::singleton(x)))
    }

    pub fn catalogue(&self) -> NaiveCatalogue {
        let all = self.f.all_assumptions();
        let cf: Vec<AssumptionSet> = self.closed.iter().copied().filter(|&e| !self.attacks(e, e)).collect();
        let admissible: Vec<AssumptionSet> = cf.iter().copied().filter(|&e| self.defends(e, e)).collect();
        let complete: Vec<AssumptionSet> = admissible
            .iter()
            .copied()
            .filter(|&e| all.subsets().all(|a| !self.defends(e, a) || a.is_subset(e)))
            .collect();
        let stable = cf
            .iter()
            .copied()
            .filter(|&e| (all - e).iter().all(|b| self.attacks(e, AssumptionSet::singleton(b))))
            .collect();
        let preferred = maximal(&admissible);
        let well_founded = complete.iter().copied().reduce(|x, y| x & y).into_iter().collect();
        let common = preferred.iter().fold(all, |acc, &p| acc & p);
        let inside: Vec<AssumptionSet> = admissible.iter().copied().filter(|e| e.is_subset(common)).collect();
        let ideal = maximal(&inside);
        NaiveCatalogue {
            admissible,
            complete,
            preferred,
            stable,
            well_founded,
            ideal,
        }
    }
}

// ---------------------------------------------------------------- corpora

pub const CORPUS: usize = 240;

pub fn corpus(seed: u64, cfg: &GenConfig, count: usize) -> Vec<Framework> {
    let mut r = rng(seed);
    (0..count).map(|_| random_framework(&mut r, cfg)).collect()
}

fn small(max: usize) -> GenConfig {
    GenConfig {
        assumptions: 1..=max,
        ..GenConfig::default()
    }
}

/// Flat frameworks satisfying Weak Contraposition, drawn until `count`
/// are found. Returns the frameworks and the number of draws.
pub fn flat_wcp_corpus(seed: u64, count: usize, total: bool) -> (Vec<Framework>, usize) {
    let cfg = GenConfig {
        assumptions: 1..=5,
        rules: 0..=6,
        max_body: 2,
        ..GenConfig::default().flat()
    };
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut draws = 0;
    while out.len() < count && draws < 200 * count {
        draws += 1;
        let mut f = random_framework(&mut r, &cfg);
        if total {
            f = f.with_preorder(random_total_preorder(&mut r, f.assumption_count()));
        }
        let fam = support_families(&f, 4096).unwrap();
        if check_wcp(&f, &fam).status == Status::Holds {
            out.push(f);
        }
    }
    (out, draws)
}

// ---------------------------------------------------------------- criterion 3

pub fn prop_conservative_extension() -> Check {
    let cfg = small(6).without_preferences();
    let frameworks = corpus(101, &cfg, CORPUS);
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        for sem in SemanticsName::ALL {
            let plain = r.extensions(sem, Mode::Plain).unwrap();
            let plus = r.extensions(sem, Mode::PreferenceAware).unwrap();
            ensure!(
                plain.extensions == plus.extensions && plain.exists == plus.exists,
                "{sem} differs on\n{}",
                abaplus::render(f)
            );
        }
    }
    Ok(format!("{} frameworks, |A| ≤ 6, all six semantics", frameworks.len()))
}

pub fn prop_attack_properties() -> Check {
    let frameworks = corpus(102, &small(5), CORPUS);
    let mut pairs = 0usize;
    for f in &frameworks {
        let all: Vec<AssumptionSet> = f.all_assumptions().subsets().collect();
        let n = all.len();
        let plain: Vec<bool> = all.iter().flat_map(|&a| all.iter().map(move |&b| abaplus::aba_attacks(f, a, b))).collect();
        let plus: Vec<bool> = all.iter().flat_map(|&a| all.iter().map(move |&b| plus_attacks(f, a, b).any())).collect();
        let at = |t: &[bool], a: AssumptionSet, b: AssumptionSet| t[a.bits() as usize * n + b.bits() as usize];
        for &a in &all {
            ensure!(
                at(&plain, a, a) == at(&plus, a, a),
                "conflict-freeness transfer fails for {} on\n{}",
                show(f, &[a]),
                abaplus::render(f)
            );
            for &b in &all {
                pairs += 1;
                if at(&plain, a, b) {
                    ensure!(at(&plus, a, b) || at(&plus, b, a), "preservation ⤳ ⇒ ⤳< fails for {} → {}", show(f, &[a]), show(f, &[b]));
                }
                if at(&plus, a, b) {
                    ensure!(at(&plain, a, b) || at(&plain, b, a), "preservation ⤳< ⇒ ⤳ fails for {} → {}", show(f, &[a]), show(f, &[b]));
                    for &a2 in &all {
                        if a.is_subset(a2) {
                            for &b2 in &all {
                                if b.is_subset(b2) {
                                    ensure!(
                                        at(&plus, a2, b2),
                                        "monotonicity fails: {} → {} but not {} → {}\n{}",
                                        show(f, &[a]),
                                        show(f, &[b]),
                                        show(f, &[a2]),
                                        show(f, &[b2]),
                                        abaplus::render(f)
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} frameworks, |A| ≤ 5, {pairs} subset pairs exhaustively", frameworks.len()))
}

pub fn prop_semantics_relationships() -> Check {
    let frameworks = corpus(103, &small(6), CORPUS);
    let m = Mode::PreferenceAware;
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        let get = |s| r.extensions(s, m).unwrap().extensions;
        let adm = get(SemanticsName::Admissible);
        let pref = get(SemanticsName::Preferred);
        let comp = get(SemanticsName::Complete);
        let stab = get(SemanticsName::Stable);
        let wf = get(SemanticsName::WellFounded);
        let ideal = get(SemanticsName::Ideal);
        let ctx = || abaplus::render(f);
        for a in &adm {
            ensure!(pref.iter().any(|p| a.is_subset(*p)), "(i) {} in no preferred\n{}", show(f, &[*a]), ctx());
        }
        for s in &stab {
            ensure!(pref.contains(s), "(ii) stable {} not preferred\n{}", show(f, &[*s]), ctx());
            ensure!(comp.contains(s), "(iii) stable {} not complete\n{}", show(f, &[*s]), ctx());
            for w in &wf {
                ensure!(w.is_subset(*s), "(iv) well-founded ⊄ stable\n{}", ctx());
            }
        }
        let common = pref.iter().fold(f.all_assumptions(), |acc, &p| acc & p);
        if !pref.is_empty() && r.is_admissible(common, m) {
            ensure!(ideal == vec![common], "(v) admissible ∩preferred {} not ideal\n{}", show(f, &[common]), ctx());
        }
        for i in &ideal {
            for a in &adm {
                ensure!(!r.attacks(m, *a, *i), "(vi) admissible {} attacks ideal {}\n{}", show(f, &[*a]), show(f, &[*i]), ctx());
            }
        }
        if r.is_closed(AssumptionSet::EMPTY) {
            ensure!(!pref.is_empty() && !ideal.is_empty(), "(vii) no preferred/ideal\n{}", ctx());
        }
    }
    Ok(format!("{} frameworks, |A| ≤ 6, (i)–(vii)", frameworks.len()))
}

pub fn prop_flat_wcp() -> Check {
    let (frameworks, draws) = flat_wcp_corpus(104, CORPUS, false);
    ensure!(frameworks.len() >= 200, "only {} flat WCP frameworks in {draws} draws", frameworks.len());
    let m = Mode::PreferenceAware;
    let mut growth_cases = 0usize;
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        let ctx = || abaplus::render(f);
        let get = |s| r.extensions(s, m).unwrap().extensions;
        let pref = get(SemanticsName::Preferred);
        let comp = get(SemanticsName::Complete);
        ensure!(!pref.is_empty(), "(i) no preferred\n{}", ctx());
        for p in &pref {
            ensure!(comp.contains(p), "(ii) preferred {} not complete\n{}", show(f, &[*p]), ctx());
        }
        ensure!(!comp.is_empty(), "(iii) no complete\n{}", ctx());
        let g = r.grounded_fixpoint().unwrap();
        let minimal: Vec<&AssumptionSet> = comp.iter().filter(|c| !comp.iter().any(|d| d != *c && d.is_subset(**c))).collect();
        ensure!(minimal == vec![&g], "(iv) fixpoint {} vs minimal complete\n{}", show(f, &[g]), ctx());
        ensure!(get(SemanticsName::WellFounded) == vec![g], "(iv) fixpoint differs from enumeration\n{}", ctx());
        let ideal = get(SemanticsName::Ideal);
        ensure!(ideal.len() == 1 && comp.contains(&ideal[0]), "(v) ideal {}\n{}", show(f, &ideal), ctx());

        // growing an admissible set by a defended assumption
        for s in get(SemanticsName::Admissible) {
            let defended = r.defended_assumptions(s, m);
            for a in defended.iter() {
                let grown = s.with(a);
                ensure!(r.is_admissible(grown, m), "growth: {} ∪ {{{a}}} not admissible\n{}", show(f, &[s]), ctx());
                for a2 in defended.iter() {
                    growth_cases += 1;
                    ensure!(
                        r.defends(grown, AssumptionSet::singleton(a2), m),
                        "growth: {} loses defence of {a2}\n{}",
                        show(f, &[grown]),
                        ctx()
                    );
                }
            }
        }
    }
    Ok(format!(
        "{} flat WCP frameworks ({draws} draws); existence, preferred ⊆ complete, least complete = fixpoint, unique ideal; {growth_cases} admissible-growth cases",
        frameworks.len()
    ))
}

pub fn prop_total_order_maximal_elements() -> Check {
    let (frameworks, draws) = flat_wcp_corpus(105, CORPUS, true);
    ensure!(frameworks.len() >= 200, "only {} total-order WCP frameworks in {draws} draws", frameworks.len());
    let mut applicable = 0;
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        for sem in [SemanticsName::Preferred, SemanticsName::Ideal] {
            let v = check_principle(&r, Principle::MaximalElements, sem).unwrap();
            ensure!(v.status != Status::Violated, "maximal elements violated under {sem}\n{}", abaplus::render(f));
            if v.status == Status::Holds {
                applicable += 1;
            }
        }
    }
    Ok(format!("{} flat WCP frameworks with total ≤; {applicable} applicable checks", frameworks.len()))
}

pub fn prop_paf_round_trip() -> Check {
    let mut r = rng(106);
    let mut edge_pairs = 0;
    for _ in 0..CORPUS {
        let p = random_paf(&mut r, 1..=6, 0.25, 0.25);
        let g = repair_paf(&p).unwrap();
        let f = paf_to_abaplus(&p).unwrap();
        let ctx = || abaplus::related::render_paf(&p);
        for a in 0..p.len() {
            for b in 0..p.len() {
                edge_pairs += 1;
                let lhs = g.has_edge(a, b);
                let rhs = plus_attacks(&f, AssumptionSet::singleton(a), AssumptionSet::singleton(b)).any();
                ensure!(lhs == rhs, "repair and ABA⁺ attack disagree on {a} → {b}\n{}", ctx());
            }
        }
        let reasoner = Reasoner::new(&f, Limits::default()).unwrap();
        for sem in SemanticsName::ALL {
            let aa = aa_extensions(&g, sem, 1 << 20).unwrap();
            let plus = reasoner.extensions(sem, Mode::PreferenceAware).unwrap().extensions;
            ensure!(aa == plus, "{sem}: repaired {:?} vs image {:?}\n{}", aa, plus, ctx());
        }
    }
    Ok(format!("{CORPUS} PAFs, |args| ≤ 6, six semantics; {edge_pairs} singleton attack pairs"))
}

pub fn prop_pointwise_defence() -> Check {
    let frameworks = corpus(107, &small(5), CORPUS);
    let mut divergent = 0;
    for f in &frameworks {
        let ctx = || abaplus::render(f);
        for mode in [Mode::Plain, Mode::PreferenceAware] {
            let naive = Naive::new(f, mode);
            for e in f.all_assumptions().subsets() {
                for a in f.all_assumptions().subsets() {
                    let set = naive.defends(e, a);
                    let point = naive.defends_pointwise(e, a);
                    match mode {
                        Mode::Plain => ensure!(set == point, "plain defence differs for {} / {}\n{}", show(f, &[e]), show(f, &[a]), ctx()),
                        Mode::PreferenceAware => {
                            ensure!(!set || point, "set-level defence without pointwise for {} / {}\n{}", show(f, &[e]), show(f, &[a]), ctx());
                            divergent += usize::from(point && !set);
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} frameworks, |A| ≤ 5: plain set ⇔ pointwise; ABA⁺ set ⇒ pointwise ({divergent} reverse-attack divergences)",
        frameworks.len()
    ))
}

pub fn prop_enumeration_matches_oracle() -> Check {
    let frameworks = corpus(108, &small(5), CORPUS);
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        for mode in [Mode::Plain, Mode::PreferenceAware] {
            let naive = Naive::new(f, mode).catalogue();
            for sem in SemanticsName::ALL {
                let got = r.extensions(sem, mode).unwrap().extensions;
                ensure!(
                    got == naive.get(sem),
                    "{sem} ({}) engine {} vs definition {}\n{}",
                    mode.as_str(),
                    show(f, &got),
                    show(f, naive.get(sem)),
                    abaplus::render(f)
                );
            }
        }
    }
    Ok(format!("{} frameworks, |A| ≤ 5, both modes, six semantics", frameworks.len()))
}

/// Enough depth for every minimal deduction tree: along a root-to-leaf path
/// no (sentence, subtree support) pair need repeat.
pub fn oracle_depth(f: &Framework) -> usize {
    (f.language_len() * (f.assumption_count() + 1) + 1).max(8)
}

pub fn prop_supports_match_oracle() -> Check {
    let cfg = GenConfig {
        assumptions: 1..=6,
        rules: 0..=10,
        ..GenConfig::default()
    };
    let frameworks = corpus(109, &cfg, CORPUS);
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        for phi in f.sentences() {
            let oracle = derivation_oracle(f, phi, oracle_depth(f), 2_000_000).map_err(|e| e.to_string())?;
            let got: BTreeSet<AssumptionSet> = fam.of(phi).iter().copied().collect();
            ensure!(got == oracle, "family({}) {:?} vs oracle {:?}\n{}", f.name(phi), got, oracle, abaplus::render(f));
            let shallow = derivation_oracle(f, phi, 8, 2_000_000).map_err(|e| e.to_string())?;
            ensure!(shallow.is_subset(&got), "depth-8 oracle exceeds family\n{}", abaplus::render(f));
        }
    }
    Ok(format!("{} frameworks, |A| ≤ 6, ≤ 10 rules", frameworks.len()))
}

pub fn prop_tainted_matches_scan() -> Check {
    let frameworks = corpus(110, &small(5), CORPUS);
    let mut queries = 0;
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        for base in f.all_assumptions().subsets() {
            for taint in base.subsets() {
                for phi in f.sentences() {
                    queries += 1;
                    let scan = fam.of(phi).iter().any(|s| s.is_subset(base) && s.intersects(taint));
                    ensure!(
                        tainted_derivable(f, base, taint, phi) == scan,
                        "tainted({}, {}, {}) disagrees\n{}",
                        show(f, &[base]),
                        show(f, &[taint]),
                        f.name(phi),
                        abaplus::render(f)
                    );
                }
            }
        }
    }
    Ok(format!("{} frameworks, {queries} queries", frameworks.len()))
}

pub fn criterion_3() -> Vec<(&'static str, Check)> {
    vec![
        ("conservative extension", prop_conservative_extension()),
        ("attack properties", prop_attack_properties()),
        ("relationship among semantics", prop_semantics_relationships()),
        ("flat + WCP", prop_flat_wcp()),
        ("maximal elements under total ≤", prop_total_order_maximal_elements()),
        ("PAF round trip", prop_paf_round_trip()),
        ("pointwise defence", prop_pointwise_defence()),
        ("enumeration vs definitions", prop_enumeration_matches_oracle()),
        ("supports vs oracle", prop_supports_match_oracle()),
        ("tainted vs scan", prop_tainted_matches_scan()),
    ]
}

// ---------------------------------------------------------------- other suites

pub fn prop_deduction_laws() -> Check {
    let frameworks = corpus(111, &small(6), CORPUS);
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        let ctx = || abaplus::render(f);
        let mut flat_by_definition = true;
        for e in f.all_assumptions().subsets() {
            let cn = assumption_conclusions(f, e);
            ensure!(conclusions(f, &cn) == cn, "Cn not idempotent on {}\n{}", show(f, &[e]), ctx());
            for x in f.all_assumptions().iter() {
                ensure!(cn.is_subset(&assumption_conclusions(f, e.with(x))), "Cn not monotone\n{}", ctx());
            }
            for phi in f.sentences() {
                ensure!(cn.contains(&phi) == fam.supported_within(phi, e), "Cn vs family for {}\n{}", f.name(phi), ctx());
            }
            flat_by_definition &= closure(f, e) == e;
        }
        ensure!(f.is_flat() == flat_by_definition, "flatness shortcut wrong\n{}", ctx());
    }
    Ok(format!("{} frameworks, |A| ≤ 6", frameworks.len()))
}

pub fn prop_normal_flag_filter() -> Check {
    let frameworks = corpus(112, &small(5), CORPUS);
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        for a in f.all_assumptions().subsets() {
            for b in f.all_assumptions().subsets() {
                let scan = b.iter().any(|beta| {
                    fam.of(f.contrary(beta))
                        .iter()
                        .any(|s| s.is_subset(a) && !s.intersects(f.strictly_below(beta)))
                });
                ensure!(plus_attacks(f, a, b).normal == scan, "normal flag differs\n{}", abaplus::render(f));
            }
        }
    }
    Ok(format!("{} frameworks", frameworks.len()))
}

pub fn prop_aa_encoding() -> Check {
    let cfg = GenConfig {
        assumptions: 1..=5,
        rules: 0..=6,
        max_body: 2,
        ..GenConfig::default().flat()
    };
    let frameworks = corpus(113, &cfg, CORPUS);
    let mut skipped = 0;
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        let (args, graph) = match build_arguments(f, &fam) {
            Ok(x) => x,
            Err(Error::Capacity { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        let r = Reasoner::new(f, Limits::default()).unwrap();
        for sem in SemanticsName::ALL {
            let mut images: Vec<AssumptionSet> = aa_extensions(&graph, sem, 1 << 20)
                .unwrap()
                .into_iter()
                .map(|x| x.iter().fold(AssumptionSet::EMPTY, |acc, i| acc | args[i].support))
                .collect();
            images.sort();
            images.dedup();
            let direct = r.extensions(sem, Mode::Plain).unwrap().extensions;
            ensure!(images == direct, "{sem}: AA images {} vs ABA {}\n{}", show(f, &images), show(f, &direct), abaplus::render(f));
        }
    }
    Ok(format!("{} flat frameworks ({skipped} skipped: argument graph over 64 nodes)", frameworks.len() - skipped))
}

pub fn prop_compliance() -> Check {
    let frameworks = corpus(114, &small(5), CORPUS);
    let mut classical_checks = 0;
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        let r = Reasoner::new(f, Limits::default()).unwrap();
        let ctx = || abaplus::render(f);
        let wcp = check_wcp(f, &fam);
        let cp = check_contraposition(f, &fam);
        if cp.status == Status::Holds {
            ensure!(wcp.status == Status::Holds, "contraposition without WCP\n{}", ctx());
        }
        for v in [&wcp, &cp] {
            for w in &v.witnesses {
                let abaplus::Witness::ContraryDeduction { support, assumption } = *w else {
                    return Err(format!("unexpected witness {w:?}"));
                };
                ensure!(fam.of(f.contrary(assumption)).contains(&support), "witness is not a deduction\n{}", ctx());
            }
        }
        let axioms = check_axiom_consistency(f, &fam, Complement).status == Status::Holds
            && check_axiom_negation(f, &fam, Complement).status == Status::Holds;
        for sem in SemanticsName::ALL {
            for p in [Principle::ConflictPreservation, Principle::EmptyPreferences, Principle::RationalityPostulates] {
                let v = check_principle(&r, p, sem).unwrap();
                ensure!(v.status == Status::Holds, "{} under {sem}: {:?}\n{}", p.as_str(), v.witnesses, ctx());
            }
            if axioms {
                classical_checks += 1;
                let v = check_principle(&r, Principle::ClassicalConsistency, sem).unwrap();
                ensure!(v.status == Status::Holds, "both axioms hold but classical consistency fails under {sem}\n{}", ctx());
            }
        }
    }
    Ok(format!("{} frameworks; {classical_checks} classical-consistency checks under both axioms", frameworks.len()))
}

pub fn prop_p_aba_order() -> Check {
    let frameworks = corpus(115, &small(5).without_preferences(), CORPUS);
    let mut r2 = rng(116);
    for f in &frameworks {
        let r = Reasoner::new(f, Limits::default()).unwrap();
        let sentences: Vec<abaplus::SentenceId> = f.sentences().collect();
        let pairs: Vec<_> = (0..3)
            .map(|_| {
                use rand::seq::SliceRandom;
                (*sentences.choose(&mut r2).unwrap(), *sentences.choose(&mut r2).unwrap())
            })
            .collect();
        let lp = LanguagePreference::new(f, &pairs, &[]).unwrap();
        for sem in [SemanticsName::Complete, SemanticsName::Preferred, SemanticsName::Stable] {
            let exts = r.extensions(sem, Mode::Plain).unwrap().extensions;
            let rel = p_aba_order(f, &lp, &exts);
            let n = exts.len();
            for i in 0..n {
                ensure!(rel[i][i], "⊑ not reflexive");
                for j in 0..n {
                    for k in 0..n {
                        ensure!(!(rel[i][j] && rel[j][k]) || rel[i][k], "⊑ not transitive");
                    }
                }
            }
            let empty = p_aba_extensions(&r, &LanguagePreference::empty(f), sem).unwrap().extensions;
            ensure!(empty == exts, "empty ≼ changes {sem} extensions");
        }
    }
    Ok(format!("{} frameworks", frameworks.len()))
}

pub fn prop_normal_attack_is_eli_defeat() -> Check {
    let cfg = GenConfig {
        assumptions: 1..=5,
        rules: 0..=6,
        max_body: 2,
        ..GenConfig::default().flat()
    };
    let frameworks = corpus(117, &cfg, CORPUS);
    let mut compared = 0;
    for f in &frameworks {
        let fam = support_families(f, 4096).unwrap();
        let Ok((args, _)) = build_arguments(f, &fam) else { continue };
        let normal = dung_normal_graph(f, &args).unwrap();
        let eli = defeat_graph(f, &args, ArgumentPrinciple::Eli).unwrap();
        ensure!(normal.edges() == eli.edges(), "normal attack ≠ Eli defeat\n{}", abaplus::render(f));
        compared += 1;
    }
    ensure!(compared >= 200, "only {compared} frameworks compared");
    Ok(format!("{compared} flat frameworks, |A| ≤ 5"))
}
