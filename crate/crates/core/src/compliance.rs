//! Axiom and principle checkers. Every violation carries witnesses that can
//! be re-checked against the underlying predicates.

use std::collections::BTreeSet;
use std::fmt;

use crate::attacks::{aba_attacks, Mode};
use crate::deduction::{assumption_conclusions, conclusions, SupportFamily};
use crate::error::Result;
use crate::framework::{AssumptionSet, Framework, SentenceId, NEGATION_PREFIX};
use crate::semantics::{Reasoner, SemanticsName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `support ⊢ sentence`.
    Deduction {
        support: AssumptionSet,
        sentence: SentenceId,
    },
    /// `support ⊢ contrary(assumption)` lacking the required contraposed
    /// deduction.
    ContraryDeduction {
        support: AssumptionSet,
        assumption: usize,
    },
    /// `{attacker} ⤳ {target}` while both lie in `extension`.
    Attack {
        attacker: usize,
        target: usize,
        extension: AssumptionSet,
    },
    /// An extension that the comparison semantics does not produce.
    Extension { extension: AssumptionSet },
    /// An extension missing required assumptions.
    Missing {
        extension: AssumptionSet,
        missing: AssumptionSet,
    },
    /// Both sentences belong to the conclusions of `extension`.
    Clash {
        extension: AssumptionSet,
        sentence: SentenceId,
        other: SentenceId,
    },
    /// Cn(Cn(E)) contains a sentence beyond Cn(E).
    NotClosed {
        extension: AssumptionSet,
        sentence: SentenceId,
    },
    /// Two assumptions not related by ≤ either way.
    Incomparable { left: usize, right: usize },
}

impl Witness {
    pub fn describe(&self, f: &Framework) -> String {
        let set = |s: AssumptionSet| format!("{{{}}}", f.set_names(s).join(","));
        let asm = |i: usize| f.name(f.assumption(i)).to_owned();
        match *self {
            Witness::Deduction { support, sentence } => {
                format!("{} |- {}", set(support), f.name(sentence))
            }
            Witness::ContraryDeduction { support, assumption } => format!(
                "{} |- {} (contrary of {})",
                set(support),
                f.name(f.contrary(assumption)),
                asm(assumption)
            ),
            Witness::Attack {
                attacker,
                target,
                extension,
            } => format!(
                "{{{}}} attacks {{{}}} inside {}",
                asm(attacker),
                asm(target),
                set(extension)
            ),
            Witness::Extension { extension } => format!("extension {}", set(extension)),
            Witness::Missing { extension, missing } => {
                format!("extension {} misses {}", set(extension), set(missing))
            }
            Witness::Clash {
                extension,
                sentence,
                other,
            } => format!(
                "Cn({}) contains both {} and {}",
                set(extension),
                f.name(sentence),
                f.name(other)
            ),
            Witness::NotClosed {
                extension,
                sentence,
            } => format!("Cn(Cn({})) adds {}", set(extension), f.name(sentence)),
            Witness::Incomparable { left, right } => {
                format!("{} and {} are incomparable", asm(left), asm(right))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub subject: &'static str,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

impl Verdict {
    fn from_witnesses(subject: &'static str, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Holds
        } else {
            Status::Violated
        };
        Verdict {
            subject,
            status,
            witnesses,
            notes: String::new(),
        }
    }

    fn not_applicable(subject: &'static str, witnesses: Vec<Witness>, notes: impl Into<String>) -> Self {
        Verdict {
            subject,
            status: Status::NotApplicable,
            witnesses,
            notes: notes.into(),
        }
    }

    fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }
}

/// Classical complement on tokens: `−t = ~t` and `−~t = t`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Complement;

impl Complement {
    pub fn token(self, name: &str) -> String {
        match name.strip_prefix(NEGATION_PREFIX) {
            Some(rest) => rest.to_owned(),
            None => format!("{NEGATION_PREFIX}{name}"),
        }
    }

    /// The complement of `s`, if it belongs to the language.
    pub fn of(self, f: &Framework, s: SentenceId) -> Option<SentenceId> {
        f.sentence(&self.token(f.name(s)))
    }
}

/// Whether `support ⊢ contrary(alpha)` can be contraposed onto `alpha`:
/// some support of `contrary(alpha)` lies in `(support ∖ {alpha}) ∪ {beta}`.
fn contraposes(f: &Framework, fam: &SupportFamily, support: AssumptionSet, alpha: usize, beta: usize) -> bool {
    fam.supported_within(f.contrary(alpha), support.without(alpha).with(beta))
}

/// Deductions `S ⊢ contrary(β)` as `(S, β)`.
fn contrary_deductions<'a>(
    f: &'a Framework,
    fam: &'a SupportFamily,
) -> impl Iterator<Item = (AssumptionSet, usize)> + 'a {
    (0..f.assumption_count()).flat_map(move |beta| fam.of(f.contrary(beta)).iter().map(move |&s| (s, beta)))
}

pub fn check_wcp(f: &Framework, fam: &SupportFamily) -> Verdict {
    let witnesses = contrary_deductions(f, fam)
        .filter(|&(s, beta)| {
            let lesser: AssumptionSet = s & f.strictly_below(beta);
            if lesser.is_empty() {
                return false;
            }
            let minimal = lesser
                .iter()
                .filter(|&a| !lesser.iter().any(|b| f.less(b, a)));
            !minimal.into_iter().any(|a| contraposes(f, fam, s, a, beta))
        })
        .map(|(support, assumption)| Witness::ContraryDeduction { support, assumption })
        .collect();
    Verdict::from_witnesses("weak_contraposition", witnesses)
}

pub fn check_contraposition(f: &Framework, fam: &SupportFamily) -> Verdict {
    let witnesses = contrary_deductions(f, fam)
        .filter(|&(s, beta)| !s.iter().all(|a| contraposes(f, fam, s, a, beta)))
        .map(|(support, assumption)| Witness::ContraryDeduction { support, assumption })
        .collect();
    Verdict::from_witnesses("contraposition", witnesses)
}

pub fn check_axiom_consistency(f: &Framework, fam: &SupportFamily, c: Complement) -> Verdict {
    let mut witnesses = Vec::new();
    for phi in f.sentences() {
        let Some(neg) = c.of(f, phi) else { continue };
        // report each complementary pair once
        if phi < neg && fam.of(phi).contains(&AssumptionSet::EMPTY) && fam.of(neg).contains(&AssumptionSet::EMPTY) {
            witnesses.push(Witness::Deduction {
                support: AssumptionSet::EMPTY,
                sentence: phi,
            });
        }
    }
    Verdict::from_witnesses("axiom_consistency", witnesses)
}

pub fn check_axiom_negation(f: &Framework, fam: &SupportFamily, c: Complement) -> Verdict {
    let mut witnesses = Vec::new();
    for (phi, s) in fam.iter() {
        if s.is_empty() {
            continue;
        }
        let wanted = c.token(f.name(phi));
        if !s.iter().any(|a| f.name(f.contrary(a)) == wanted) {
            witnesses.push(Witness::Deduction {
                support: s,
                sentence: phi,
            });
        }
    }
    Verdict::from_witnesses("axiom_negation", witnesses)
}

/// The properties an ABA⁺ semantics is expected to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Principle {
    ConflictPreservation = 1,
    EmptyPreferences = 2,
    MaximalElements = 3,
    RationalityPostulates = 4,
    ClassicalConsistency = 5,
}

impl Principle {
    pub const ALL: [Principle; 5] = [
        Principle::ConflictPreservation,
        Principle::EmptyPreferences,
        Principle::MaximalElements,
        Principle::RationalityPostulates,
        Principle::ClassicalConsistency,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Principle::ALL.into_iter().find(|p| p.number() == n)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Principle::ConflictPreservation => "conflict_preservation",
            Principle::EmptyPreferences => "empty_preferences",
            Principle::MaximalElements => "maximal_elements",
            Principle::RationalityPostulates => "rationality_postulates",
            Principle::ClassicalConsistency => "classical_consistency",
        }
    }
}

/// Some `ψ ∈ s` with `contrary(ψ) ∈ s`, as (ψ, contrary(ψ)).
pub fn direct_conflict(f: &Framework, s: &BTreeSet<SentenceId>) -> Option<(SentenceId, SentenceId)> {
    s.iter().find_map(|&psi| {
        let a = f.assumption_index(psi)?;
        let c = f.contrary(a);
        s.contains(&c).then_some((psi, c))
    })
}

pub fn is_directly_consistent(f: &Framework, e: AssumptionSet) -> bool {
    let sentences = e.iter().map(|a| f.assumption(a)).collect();
    direct_conflict(f, &sentences).is_none()
}

pub fn is_indirectly_consistent(f: &Framework, e: AssumptionSet) -> bool {
    direct_conflict(f, &assumption_conclusions(f, e)).is_none()
}

/// Some `φ` with both `φ` and `−φ` in `s`.
pub fn classical_conflict(f: &Framework, s: &BTreeSet<SentenceId>, c: Complement) -> Option<(SentenceId, SentenceId)> {
    s.iter().find_map(|&phi| {
        let neg = c.of(f, phi)?;
        (phi < neg && s.contains(&neg)).then_some((phi, neg))
    })
}

pub fn check_principle(r: &Reasoner<'_>, which: Principle, sem: SemanticsName) -> Result<Verdict> {
    let f = r.framework();
    let subject = which.as_str();
    let report = r.extensions(sem, Mode::PreferenceAware)?;
    let exts = &report.extensions;
    match which {
        Principle::ConflictPreservation => {
            let mut witnesses = Vec::new();
            for &e in exts {
                for a in e.iter() {
                    for b in e.iter() {
                        if aba_attacks(f, AssumptionSet::singleton(a), AssumptionSet::singleton(b)) {
                            witnesses.push(Witness::Attack {
                                attacker: a,
                                target: b,
                                extension: e,
                            });
                        }
                    }
                }
            }
            Ok(Verdict::from_witnesses(subject, witnesses))
        }
        Principle::EmptyPreferences => {
            let stripped = f.without_preferences();
            let sr = Reasoner::new(&stripped, r.limits())?;
            let plus = sr.extensions(sem, Mode::PreferenceAware)?.extensions;
            let plain = sr.extensions(sem, Mode::Plain)?.extensions;
            let witnesses = plus
                .into_iter()
                .filter(|e| !plain.contains(e))
                .map(|extension| Witness::Extension { extension })
                .collect();
            Ok(Verdict::from_witnesses(subject, witnesses)
                .with_notes("evaluated on the framework with its preferences removed"))
        }
        Principle::MaximalElements => {
            if let Some((left, right)) = f.pref().incomparable_pair() {
                return Ok(Verdict::not_applicable(
                    subject,
                    vec![Witness::Incomparable { left, right }],
                    "the preference ordering is not total",
                ));
            }
            let n = f.assumption_count();
            let m: AssumptionSet = (0..n).filter(|&a| !(0..n).any(|b| f.less(a, b))).collect();
            if !r.is_closed(m) {
                return Ok(Verdict::not_applicable(
                    subject,
                    vec![Witness::Extension { extension: m }],
                    "the set of maximal assumptions is not closed",
                ));
            }
            if !r.is_conflict_free(m, Mode::PreferenceAware) {
                return Ok(Verdict::not_applicable(
                    subject,
                    vec![Witness::Extension { extension: m }],
                    "the set of maximal assumptions is not conflict-free",
                ));
            }
            let witnesses = exts
                .iter()
                .filter(|e| !m.is_subset(**e))
                .map(|&extension| Witness::Missing {
                    extension,
                    missing: m - extension,
                })
                .collect();
            Ok(Verdict::from_witnesses(subject, witnesses))
        }
        Principle::RationalityPostulates => check_postulates(r, sem),
        Principle::ClassicalConsistency => {
            let witnesses = exts
                .iter()
                .zip(&report.conclusions)
                .filter_map(|(&extension, cn)| {
                    classical_conflict(f, cn, Complement).map(|(sentence, other)| Witness::Clash {
                        extension,
                        sentence,
                        other,
                    })
                })
                .collect();
            Ok(Verdict::from_witnesses(subject, witnesses))
        }
    }
}

/// Closure, direct consistency and indirect consistency of every extension.
pub fn check_postulates(r: &Reasoner<'_>, sem: SemanticsName) -> Result<Verdict> {
    let f = r.framework();
    let report = r.extensions(sem, Mode::PreferenceAware)?;
    let mut witnesses = Vec::new();
    for (&extension, cn) in report.extensions.iter().zip(&report.conclusions) {
        if let Some(&sentence) = conclusions(f, cn).difference(cn).next() {
            witnesses.push(Witness::NotClosed { extension, sentence });
        }
        let members = extension.iter().map(|a| f.assumption(a)).collect();
        for set in [&members, cn] {
            if let Some((sentence, other)) = direct_conflict(f, set) {
                witnesses.push(Witness::Clash {
                    extension,
                    sentence,
                    other,
                });
            }
        }
    }
    Ok(Verdict::from_witnesses("rationality_postulates", witnesses))
}
