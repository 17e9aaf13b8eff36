//! Extension enumeration for plain ABA and ABA⁺.
//!
//! Candidates are the closed subsets of A, visited in bitmask order. Attacks
//! are compiled into witness patterns (see [`AttackIndex`]); a set `e`
//! defends `a` iff `e` attacks `Cl(p)` for every pattern `(p, q)` with
//! `q ⊆ a`, because `Cl(p)` is the least closed attacker carrying that
//! pattern and counter-attacks are monotone in the target.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::attacks::{AttackIndex, Mode};
use crate::deduction::{assumption_conclusions, closure, support_families, SupportFamily};
use crate::error::{Error, Result};
use crate::framework::{AssumptionSet, Framework, Limits, SentenceId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsName {
    Admissible,
    Preferred,
    Complete,
    Stable,
    WellFounded,
    Ideal,
}

impl SemanticsName {
    pub const ALL: [SemanticsName; 6] = [
        SemanticsName::Admissible,
        SemanticsName::Preferred,
        SemanticsName::Complete,
        SemanticsName::Stable,
        SemanticsName::WellFounded,
        SemanticsName::Ideal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsName::Admissible => "admissible",
            SemanticsName::Preferred => "preferred",
            SemanticsName::Complete => "complete",
            SemanticsName::Stable => "stable",
            SemanticsName::WellFounded => "well_founded",
            SemanticsName::Ideal => "ideal",
        }
    }

    /// Well-founded is reported as grounded for flat frameworks.
    pub fn display_name(self, flat: bool) -> &'static str {
        match self {
            SemanticsName::WellFounded if flat => "grounded",
            other => other.as_str(),
        }
    }
}

impl fmt::Display for SemanticsName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "admissible" => SemanticsName::Admissible,
            "preferred" => SemanticsName::Preferred,
            "complete" => SemanticsName::Complete,
            "stable" => SemanticsName::Stable,
            "well_founded" | "well-founded" | "grounded" => SemanticsName::WellFounded,
            "ideal" => SemanticsName::Ideal,
            other => return Err(Error::input(None, format!("unknown semantics `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub semantics: SemanticsName,
    pub mode: Mode,
    /// Name as reported, `grounded` for flat well-founded reports.
    pub name: &'static str,
    /// Sorted by bitmask.
    pub extensions: Vec<AssumptionSet>,
    /// `conclusions[i]` = Cn(`extensions[i]`).
    pub conclusions: Vec<BTreeSet<SentenceId>>,
    pub exists: bool,
    /// Remarks such as a well-founded set that is not closed.
    pub advisories: Vec<String>,
}

/// Every extension of one mode, computed in a single pass.
#[derive(Clone, Debug, Default)]
struct Catalogue {
    admissible: Vec<AssumptionSet>,
    complete: Vec<AssumptionSet>,
    preferred: Vec<AssumptionSet>,
    stable: Vec<AssumptionSet>,
    well_founded: Option<AssumptionSet>,
    ideal: Vec<AssumptionSet>,
}

/// Attack patterns plus, per pattern `i`, the least closed attacker `Cl(p_i)`
/// and the patterns able to counter-attack it.
#[derive(Debug)]
struct Compiled {
    index: AttackIndex,
    attacker_closures: Vec<AssumptionSet>,
    counters: Vec<Vec<u64>>,
}

impl Compiled {
    fn new(f: &Framework, families: &SupportFamily, mode: Mode) -> Self {
        let index = AttackIndex::build(f, families, mode);
        let patterns = index.patterns();
        let words = patterns.len().div_ceil(64);
        let attacker_closures: Vec<AssumptionSet> =
            patterns.iter().map(|&(p, _)| closure(f, p)).collect();
        let counters = attacker_closures
            .iter()
            .map(|&c| {
                let mut bits = vec![0u64; words];
                for (j, &(_, q)) in patterns.iter().enumerate() {
                    if q.is_subset(c) {
                        bits[j / 64] |= 1 << (j % 64);
                    }
                }
                bits
            })
            .collect();
        Compiled {
            index,
            attacker_closures,
            counters,
        }
    }

    fn patterns(&self) -> &[(AssumptionSet, AssumptionSet)] {
        self.index.patterns()
    }

    /// Patterns whose attacking side lies inside `e`.
    fn active(&self, e: AssumptionSet) -> Vec<u64> {
        let mut bits = vec![0u64; self.patterns().len().div_ceil(64)];
        for (j, &(p, _)) in self.patterns().iter().enumerate() {
            if p.is_subset(e) {
                bits[j / 64] |= 1 << (j % 64);
            }
        }
        bits
    }

    fn countered(&self, i: usize, active: &[u64]) -> bool {
        self.counters[i].iter().zip(active).any(|(c, a)| c & a != 0)
    }

    fn attacks_with(&self, active: &[u64], target: AssumptionSet) -> bool {
        self.patterns()
            .iter()
            .enumerate()
            .any(|(j, &(_, q))| active[j / 64] >> (j % 64) & 1 == 1 && q.is_subset(target))
    }

    fn defends_with(&self, active: &[u64], target: AssumptionSet) -> bool {
        self.patterns()
            .iter()
            .enumerate()
            .all(|(i, &(_, q))| !q.is_subset(target) || self.countered(i, active))
    }
}

/// Analysis context over one framework: support families and compiled
/// attack relations, with extension catalogues computed on first use.
pub struct Reasoner<'f> {
    framework: &'f Framework,
    limits: Limits,
    families: SupportFamily,
    plain: Compiled,
    plus: Compiled,
    catalogues: [OnceLock<Result<Catalogue>>; 2],
}

impl<'f> Reasoner<'f> {
    pub fn new(framework: &'f Framework, limits: Limits) -> Result<Self> {
        let families = support_families(framework, limits.support_cap)?;
        let plain = Compiled::new(framework, &families, Mode::Plain);
        let plus = Compiled::new(framework, &families, Mode::PreferenceAware);
        Ok(Reasoner {
            framework,
            limits,
            families,
            plain,
            plus,
            catalogues: [OnceLock::new(), OnceLock::new()],
        })
    }

    pub fn framework(&self) -> &'f Framework {
        self.framework
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn families(&self) -> &SupportFamily {
        &self.families
    }

    pub fn attack_index(&self, mode: Mode) -> &AttackIndex {
        &self.compiled(mode).index
    }

    fn compiled(&self, mode: Mode) -> &Compiled {
        match mode {
            Mode::Plain => &self.plain,
            Mode::PreferenceAware => &self.plus,
        }
    }

    pub fn attacks(&self, mode: Mode, a: AssumptionSet, b: AssumptionSet) -> bool {
        self.compiled(mode).index.attacks(a, b)
    }

    pub fn is_conflict_free(&self, e: AssumptionSet, mode: Mode) -> bool {
        !self.attacks(mode, e, e)
    }

    /// Whether `e` counter-attacks every closed attacker of `a`.
    pub fn defends(&self, e: AssumptionSet, a: AssumptionSet, mode: Mode) -> bool {
        let c = self.compiled(mode);
        c.defends_with(&c.active(e), a)
    }

    /// Closed attackers of `a` that `e` leaves unanswered, as least closed
    /// representatives.
    pub fn undefended_attackers(&self, e: AssumptionSet, a: AssumptionSet, mode: Mode) -> Vec<AssumptionSet> {
        let c = self.compiled(mode);
        let active = c.active(e);
        let mut out: Vec<AssumptionSet> = c
            .patterns()
            .iter()
            .enumerate()
            .filter(|&(i, &(_, q))| q.is_subset(a) && !c.countered(i, &active))
            .map(|(i, _)| c.attacker_closures[i])
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_closed(&self, e: AssumptionSet) -> bool {
        closure(self.framework, e) == e
    }

    pub fn is_admissible(&self, e: AssumptionSet, mode: Mode) -> bool {
        self.is_closed(e) && self.is_conflict_free(e, mode) && self.defends(e, e, mode)
    }

    /// Singletons `{α}` defended by `e`.
    pub fn defended_assumptions(&self, e: AssumptionSet, mode: Mode) -> AssumptionSet {
        let c = self.compiled(mode);
        let active = c.active(e);
        (0..self.framework.assumption_count())
            .filter(|&a| c.defends_with(&active, AssumptionSet::singleton(a)))
            .collect()
    }

    fn check_cap(&self) -> Result<()> {
        let n = self.framework.assumption_count();
        if n > self.limits.assumption_cap {
            Err(Error::capacity(
                format!("assumption count {n} for subset enumeration"),
                self.limits.assumption_cap,
            ))
        } else {
            Ok(())
        }
    }

    fn catalogue(&self, mode: Mode) -> Result<&Catalogue> {
        let slot = match mode {
            Mode::Plain => &self.catalogues[0],
            Mode::PreferenceAware => &self.catalogues[1],
        };
        slot.get_or_init(|| self.enumerate(mode))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn enumerate(&self, mode: Mode) -> Result<Catalogue> {
        self.check_cap()?;
        let f = self.framework;
        let c = self.compiled(mode);
        let universe = f.all_assumptions();
        let mut cat = Catalogue::default();

        for e in universe.subsets() {
            if closure(f, e) != e {
                continue;
            }
            let active = c.active(e);
            if c.attacks_with(&active, e) {
                continue;
            }
            let outside = universe - e;
            if outside
                .iter()
                .all(|b| c.attacks_with(&active, AssumptionSet::singleton(b)))
            {
                cat.stable.push(e);
            }
            if !c.defends_with(&active, e) {
                continue;
            }
            cat.admissible.push(e);
            let defends_outside = outside
                .iter()
                .any(|a| c.defends_with(&active, AssumptionSet::singleton(a)));
            if !defends_outside {
                cat.complete.push(e);
            }
        }

        cat.preferred = maximal(&cat.admissible);
        cat.well_founded = cat.complete.iter().copied().reduce(|x, y| x & y);
        let common = cat
            .preferred
            .iter()
            .copied()
            .fold(universe, |acc, p| acc & p);
        let inside: Vec<AssumptionSet> = cat
            .admissible
            .iter()
            .copied()
            .filter(|e| e.is_subset(common))
            .collect();
        cat.ideal = maximal(&inside);
        Ok(cat)
    }

    pub fn extensions(&self, semantics: SemanticsName, mode: Mode) -> Result<ExtensionReport> {
        let cat = self.catalogue(mode)?;
        let f = self.framework;
        let mut advisories = Vec::new();
        let extensions = match semantics {
            SemanticsName::Admissible => cat.admissible.clone(),
            SemanticsName::Preferred => cat.preferred.clone(),
            SemanticsName::Complete => cat.complete.clone(),
            SemanticsName::Stable => cat.stable.clone(),
            SemanticsName::Ideal => cat.ideal.clone(),
            SemanticsName::WellFounded => match cat.well_founded {
                Some(w) => {
                    if !self.is_closed(w) {
                        advisories.push("well-founded set is not closed".to_owned());
                    } else if !self.is_admissible(w, mode) {
                        advisories.push("well-founded set is not admissible".to_owned());
                    }
                    vec![w]
                }
                None => {
                    advisories
                        .push("no complete extension exists, so no well-founded set".to_owned());
                    Vec::new()
                }
            },
        };
        if semantics == SemanticsName::Ideal && extensions.len() > 1 {
            advisories.push("ideal extension is not unique".to_owned());
        }
        let conclusions = extensions
            .iter()
            .map(|&e| assumption_conclusions(f, e))
            .collect();
        Ok(ExtensionReport {
            semantics,
            mode,
            name: semantics.display_name(f.is_flat()),
            exists: !extensions.is_empty(),
            extensions,
            conclusions,
            advisories,
        })
    }

    /// Least fixed point of `x ↦ {α : x <-defends {α}}` from ∅.
    pub fn grounded_fixpoint(&self) -> Result<AssumptionSet> {
        if let Some(a) = self.framework.first_non_flat() {
            return Err(Error::NotFlat(
                self.framework.name(self.framework.assumption(a)).to_owned(),
            ));
        }
        let mut current = AssumptionSet::EMPTY;
        loop {
            let next = self.defended_assumptions(current, Mode::PreferenceAware);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }
}

/// ⊆-maximal members of `sets`.
pub(crate) fn maximal(sets: &[AssumptionSet]) -> Vec<AssumptionSet> {
    let mut by_size = sets.to_vec();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut found: Vec<AssumptionSet> = Vec::new();
    for s in by_size {
        if !found.iter().any(|m| s.is_subset(*m)) {
            found.push(s);
        }
    }
    found.sort();
    found
}
