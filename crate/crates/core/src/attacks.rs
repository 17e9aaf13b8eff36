//! Attacks between assumption sets: plain ⤳ and preference-aware ⤳<.
//!
//! `A ⤳< B` holds by a *normal* attack when some subset of `A` deduces the
//! contrary of a `β ∈ B` without using anything strictly below `β`, and by a
//! *reverse* attack when some subset of `B` deduces the contrary of an
//! `α ∈ A` using something strictly below `α`. The two are decided
//! independently; a pair may carry both.

use crate::deduction::{derives, tainted_derivable, SupportFamily};
use crate::framework::{AssumptionSet, Framework};

/// Which attack relation an analysis uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// ⤳, preferences ignored.
    Plain,
    /// ⤳<.
    PreferenceAware,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Plain => "plain",
            Mode::PreferenceAware => "plus",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AttackFlags {
    pub normal: bool,
    pub reverse: bool,
}

impl AttackFlags {
    pub fn any(self) -> bool {
        self.normal || self.reverse
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttackEdge {
    pub attacker: AssumptionSet,
    pub target: AssumptionSet,
    pub plain: bool,
    pub normal: bool,
    pub reverse: bool,
}

/// `a ⤳ b`: some `β ∈ b` has its contrary in Cn(a).
pub fn aba_attacks(f: &Framework, a: AssumptionSet, b: AssumptionSet) -> bool {
    b.iter().any(|beta| derives(f, a, f.contrary(beta)))
}

/// Normal and reverse components of `a ⤳< b`.
pub fn plus_attacks(f: &Framework, a: AssumptionSet, b: AssumptionSet) -> AttackFlags {
    // a deduction avoiding assumptions below β lives inside the filtered set
    let normal = b
        .iter()
        .any(|beta| derives(f, a - f.strictly_below(beta), f.contrary(beta)));
    let reverse = a.iter().any(|alpha| {
        tainted_derivable(f, b, b & f.strictly_below(alpha), f.contrary(alpha))
    });
    AttackFlags { normal, reverse }
}

pub fn attack_edge(f: &Framework, a: AssumptionSet, b: AssumptionSet) -> AttackEdge {
    let flags = plus_attacks(f, a, b);
    AttackEdge {
        attacker: a,
        target: b,
        plain: aba_attacks(f, a, b),
        normal: flags.normal,
        reverse: flags.reverse,
    }
}

pub fn attacks(f: &Framework, mode: Mode, a: AssumptionSet, b: AssumptionSet) -> bool {
    match mode {
        Mode::Plain => aba_attacks(f, a, b),
        Mode::PreferenceAware => plus_attacks(f, a, b).any(),
    }
}

/// An attack relation compiled into witness patterns: `x` attacks `y` iff
/// some pattern `(p, q)` has `p ⊆ x` and `q ⊆ y`.
///
/// Plain and normal attacks contribute `(S, {β})` for supports `S` of
/// `contrary(β)`; reverse attacks contribute `({α}, S)` for supports `S` of
/// `contrary(α)` meeting the assumptions below `α`. Dominated patterns are
/// dropped.
#[derive(Clone, Debug)]
pub struct AttackIndex {
    patterns: Vec<(AssumptionSet, AssumptionSet)>,
}

impl AttackIndex {
    pub fn build(f: &Framework, families: &SupportFamily, mode: Mode) -> Self {
        let mut raw = Vec::new();
        for beta in 0..f.assumption_count() {
            let below = f.strictly_below(beta);
            for &s in families.of(f.contrary(beta)) {
                match mode {
                    Mode::Plain => raw.push((s, AssumptionSet::singleton(beta))),
                    Mode::PreferenceAware => {
                        if s.intersects(below) {
                            raw.push((AssumptionSet::singleton(beta), s));
                        } else {
                            raw.push((s, AssumptionSet::singleton(beta)));
                        }
                    }
                }
            }
        }
        raw.sort_by_key(|(p, q)| (p.len() + q.len(), p.bits(), q.bits()));
        raw.dedup();
        let mut patterns: Vec<(AssumptionSet, AssumptionSet)> = Vec::new();
        for (p, q) in raw {
            if !patterns
                .iter()
                .any(|&(p2, q2)| p2.is_subset(p) && q2.is_subset(q))
            {
                patterns.push((p, q));
            }
        }
        AttackIndex { patterns }
    }

    pub fn patterns(&self) -> &[(AssumptionSet, AssumptionSet)] {
        &self.patterns
    }

    pub fn attacks(&self, x: AssumptionSet, y: AssumptionSet) -> bool {
        self.patterns
            .iter()
            .any(|&(p, q)| p.is_subset(x) && q.is_subset(y))
    }
}
