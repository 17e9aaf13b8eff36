//! Sentences, rules, preference preorders and the immutable framework value.
//!
//! A [`Framework`] is the tuple (language, rules, assumptions, contrary, ≤).
//! Sentences are interned: every distinct token maps to one [`SentenceId`].
//! Assumptions are numbered in declaration order and sets of them are
//! bitmasks ([`AssumptionSet`]), so a framework holds at most
//! [`MAX_ASSUMPTIONS`] assumptions.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Hard limit imposed by the 64-bit assumption-set representation.
pub const MAX_ASSUMPTIONS: usize = 64;

/// Prefix of the contraries synthesized for assumptions without a
/// `contrary` declaration.
pub const CONTRARY_PREFIX: &str = "_contrary_";

/// Token reserved for the ⊤ leaf of empty-bodied rules.
pub const TOP: &str = "⊤";

/// Prefix marking the classical complement of a token.
pub const NEGATION_PREFIX: char = '~';

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SentenceId(u32);

impl SentenceId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        SentenceId(i as u32)
    }
}

/// A set of assumptions, bit `i` standing for the `i`-th declared assumption.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssumptionSet(u64);

impl AssumptionSet {
    pub const EMPTY: AssumptionSet = AssumptionSet(0);

    pub fn from_bits(bits: u64) -> Self {
        AssumptionSet(bits)
    }

    pub fn singleton(index: usize) -> Self {
        AssumptionSet(1 << index)
    }

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            AssumptionSet(u64::MAX)
        } else {
            AssumptionSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        AssumptionSet(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Self {
        AssumptionSet(self.0 & !(1 << index))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: AssumptionSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: AssumptionSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Member indices in ascending (declaration) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = AssumptionSet> {
        let universe = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == universe {
                None
            } else {
                Some((current | !universe).wrapping_add(1) & universe)
            };
            Some(AssumptionSet(current))
        })
    }
}

impl BitOr for AssumptionSet {
    type Output = AssumptionSet;
    fn bitor(self, rhs: Self) -> Self {
        AssumptionSet(self.0 | rhs.0)
    }
}

impl BitAnd for AssumptionSet {
    type Output = AssumptionSet;
    fn bitand(self, rhs: Self) -> Self {
        AssumptionSet(self.0 & rhs.0)
    }
}

impl Sub for AssumptionSet {
    type Output = AssumptionSet;
    fn sub(self, rhs: Self) -> Self {
        AssumptionSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for AssumptionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(AssumptionSet::EMPTY, |acc, i| acc.with(i))
    }
}

impl fmt::Debug for AssumptionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: SentenceId,
    /// Body in written order; empty for `head ← ⊤`.
    pub body: Vec<SentenceId>,
}

/// A transitive relation ≤ over `0..len` together with its strict part.
///
/// Reflexivity is not required: `a ≤ a` holds only if it was declared or
/// forced by transitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    leq: Vec<Vec<bool>>,
}

impl Preorder {
    pub fn empty(len: usize) -> Self {
        Preorder {
            leq: vec![vec![false; len]; len],
        }
    }

    /// Transitive closure of `leq_pairs ∪ strict_pairs`. Every strict pair
    /// `(a, b)` must remain strict after closing, otherwise the offending
    /// pair is returned as the error.
    pub fn from_pairs(
        len: usize,
        leq_pairs: &[(usize, usize)],
        strict_pairs: &[(usize, usize)],
    ) -> std::result::Result<Self, (usize, usize)> {
        let mut leq = vec![vec![false; len]; len];
        for &(a, b) in leq_pairs.iter().chain(strict_pairs) {
            leq[a][b] = true;
        }
        // Warshall
        #[allow(clippy::needless_range_loop)]
        for k in 0..len {
            for i in 0..len {
                if leq[i][k] {
                    for j in 0..len {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        let order = Preorder { leq };
        match strict_pairs.iter().find(|&&(a, b)| !order.less(a, b)) {
            Some(&pair) => Err(pair),
            None => Ok(order),
        }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.iter().all(|row| row.iter().all(|&x| !x))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// `a < b` iff `a ≤ b` and not `b ≤ a`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] && !self.leq[b][a]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.leq.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x)
                .map(move |(b, _)| (a, b))
        })
    }

    /// First pair of distinct elements comparable in neither direction.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !self.leq[a][b] && !self.leq[b][a])
    }
}

/// Size limits shared by all analyses. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest |A| for which subsets are enumerated.
    pub assumption_cap: usize,
    /// Largest number of exact supports kept per sentence.
    pub support_cap: usize,
    /// Work budget for the brute-force derivation oracle.
    pub oracle_budget: usize,
    /// Largest number of conflict-free sets enumerated in an AA graph.
    pub aa_enumeration_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            assumption_cap: 16,
            support_cap: 4096,
            oracle_budget: 2_000_000,
            aa_enumeration_cap: 1 << 20,
        }
    }
}

/// An ABA⁺ framework. A plain ABA framework is one whose preorder is empty.
#[derive(Clone, Debug)]
pub struct Framework {
    names: Vec<String>,
    lookup: HashMap<String, SentenceId>,
    rules: Vec<Rule>,
    assumptions: Vec<SentenceId>,
    assumption_of: Vec<Option<usize>>,
    contraries: Vec<SentenceId>,
    pref: Preorder,
    below: Vec<AssumptionSet>,
    // rule indices keyed by sentence, bodies deduplicated
    rules_by_body: Vec<Vec<usize>>,
    rules_by_head: Vec<Vec<usize>>,
    distinct_body_len: Vec<usize>,
}

impl Framework {
    pub fn builder() -> FrameworkBuilder {
        FrameworkBuilder::default()
    }

    pub fn language_len(&self) -> usize {
        self.names.len()
    }

    pub fn sentences(&self) -> impl Iterator<Item = SentenceId> {
        (0..self.names.len()).map(SentenceId::from_index)
    }

    pub fn name(&self, s: SentenceId) -> &str {
        &self.names[s.index()]
    }

    pub fn sentence(&self, name: &str) -> Option<SentenceId> {
        self.lookup.get(name).copied()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn assumption_count(&self) -> usize {
        self.assumptions.len()
    }

    pub fn all_assumptions(&self) -> AssumptionSet {
        AssumptionSet::full(self.assumptions.len())
    }

    /// Sentence of the `i`-th assumption.
    pub fn assumption(&self, i: usize) -> SentenceId {
        self.assumptions[i]
    }

    pub fn assumption_index(&self, s: SentenceId) -> Option<usize> {
        self.assumption_of[s.index()]
    }

    /// Index of the assumption called `name`.
    pub fn assumption_named(&self, name: &str) -> Option<usize> {
        self.sentence(name).and_then(|s| self.assumption_index(s))
    }

    pub fn contrary(&self, i: usize) -> SentenceId {
        self.contraries[i]
    }

    pub fn pref(&self) -> &Preorder {
        &self.pref
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.pref.less(a, b)
    }

    /// `{x : x < i}`.
    pub fn strictly_below(&self, i: usize) -> AssumptionSet {
        self.below[i]
    }

    /// Builds a set from assumption names; unknown names are an error.
    pub fn set(&self, names: &[&str]) -> Result<AssumptionSet> {
        names
            .iter()
            .map(|n| {
                self.assumption_named(n)
                    .ok_or_else(|| Error::input(None, format!("`{n}` is not an assumption")))
            })
            .collect()
    }

    /// Member names in declaration order.
    pub fn set_names(&self, set: AssumptionSet) -> Vec<&str> {
        set.iter().map(|i| self.name(self.assumptions[i])).collect()
    }

    /// Same framework with the preorder replaced.
    pub fn with_preorder(&self, pref: Preorder) -> Framework {
        assert_eq!(pref.len(), self.assumptions.len());
        let below = compute_below(&pref);
        Framework {
            pref,
            below,
            ..self.clone()
        }
    }

    /// The underlying plain ABA framework (empty preorder).
    pub fn without_preferences(&self) -> Framework {
        self.with_preorder(Preorder::empty(self.assumptions.len()))
    }

    pub fn is_flat(&self) -> bool {
        self.first_non_flat().is_none()
    }

    /// An assumption deducible from the other assumptions, if any. By
    /// monotonicity this is exactly a witness that some set is not closed.
    pub fn first_non_flat(&self) -> Option<usize> {
        let all = self.all_assumptions();
        (0..self.assumptions.len())
            .filter(|&i| !self.rules_by_head(self.assumption(i)).is_empty())
            .find(|&i| crate::deduction::derives(self, all.without(i), self.assumption(i)))
    }

    pub(crate) fn rules_by_body(&self, s: SentenceId) -> &[usize] {
        &self.rules_by_body[s.index()]
    }

    pub(crate) fn rules_by_head(&self, s: SentenceId) -> &[usize] {
        &self.rules_by_head[s.index()]
    }

    pub(crate) fn distinct_body_len(&self, rule: usize) -> usize {
        self.distinct_body_len[rule]
    }
}

fn compute_below(pref: &Preorder) -> Vec<AssumptionSet> {
    (0..pref.len())
        .map(|b| (0..pref.len()).filter(|&a| pref.less(a, b)).collect())
        .collect()
}

pub(crate) fn validate_token(token: &str) -> std::result::Result<(), String> {
    if token.is_empty() {
        Err("empty sentence token".into())
    } else if token.chars().any(char::is_whitespace) {
        Err(format!("token `{token}` contains whitespace"))
    } else if token == TOP {
        Err(format!("`{TOP}` is reserved"))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PrefKind {
    Leq,
    Less,
}

/// Incremental construction of a [`Framework`].
///
/// Calls chain; the first problem is remembered and reported by
/// [`FrameworkBuilder::build`].
#[derive(Default, Debug)]
pub struct FrameworkBuilder {
    names: Vec<String>,
    lookup: HashMap<String, SentenceId>,
    assumptions: Vec<SentenceId>,
    contraries: HashMap<SentenceId, SentenceId>,
    rules: Vec<(Rule, Option<usize>)>,
    prefs: Vec<(String, String, PrefKind, Option<usize>)>,
    line: Option<usize>,
    error: Option<Error>,
}

impl FrameworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Attaches a source line to subsequent declarations for error messages.
    pub fn at_line(&mut self, line: usize) -> &mut Self {
        self.line = Some(line);
        self
    }

    fn fail(&mut self, message: String) {
        if self.error.is_none() {
            self.error = Some(Error::input(self.line, message));
        }
    }

    fn intern(&mut self, name: &str) -> Option<SentenceId> {
        if let Err(e) = validate_token(name) {
            self.fail(e);
            return None;
        }
        if let Some(&id) = self.lookup.get(name) {
            return Some(id);
        }
        let id = SentenceId::from_index(self.names.len());
        self.names.push(name.to_owned());
        self.lookup.insert(name.to_owned(), id);
        Some(id)
    }

    pub fn assumption(&mut self, name: &str) -> &mut Self {
        if name.starts_with(CONTRARY_PREFIX) {
            self.fail(format!("`{name}` uses the reserved prefix `{CONTRARY_PREFIX}`"));
            return self;
        }
        if let Some(id) = self.intern(name) {
            if self.assumptions.contains(&id) {
                self.fail(format!("assumption `{name}` declared twice"));
            } else if self.assumptions.len() == MAX_ASSUMPTIONS {
                self.fail(format!("more than {MAX_ASSUMPTIONS} assumptions"));
            } else {
                self.assumptions.push(id);
            }
        }
        self
    }

    pub fn contrary(&mut self, assumption: &str, sentence: &str) -> &mut Self {
        let Some(a) = self.lookup.get(assumption).copied() else {
            self.fail(format!("contrary given for undeclared assumption `{assumption}`"));
            return self;
        };
        if !self.assumptions.contains(&a) {
            self.fail(format!("contrary given for non-assumption `{assumption}`"));
            return self;
        }
        if self.contraries.contains_key(&a) {
            self.fail(format!("contrary of `{assumption}` declared twice"));
            return self;
        }
        if sentence.starts_with(CONTRARY_PREFIX) {
            self.fail(format!("`{sentence}` uses the reserved prefix `{CONTRARY_PREFIX}`"));
            return self;
        }
        if let Some(s) = self.intern(sentence) {
            self.contraries.insert(a, s);
        }
        self
    }

    pub fn rule<'a, I>(&mut self, head: &str, body: I) -> &mut Self
    where
        I: IntoIterator<Item = &'a str>,
    {
        let Some(head) = self.intern(head) else {
            return self;
        };
        let mut ids = Vec::new();
        for b in body {
            if b == TOP {
                continue;
            }
            match self.intern(b) {
                Some(id) => ids.push(id),
                None => return self,
            }
        }
        let line = self.line;
        self.rules.push((Rule { head, body: ids }, line));
        self
    }

    /// Declares `lesser ≤ greater`.
    pub fn prefer_leq(&mut self, lesser: &str, greater: &str) -> &mut Self {
        let line = self.line;
        self.prefs
            .push((lesser.into(), greater.into(), PrefKind::Leq, line));
        self
    }

    /// Declares `lesser < greater`: asserts `lesser ≤ greater` and requires
    /// `greater ≤ lesser` to stay underivable after transitive closure.
    pub fn prefer_less(&mut self, lesser: &str, greater: &str) -> &mut Self {
        let line = self.line;
        self.prefs
            .push((lesser.into(), greater.into(), PrefKind::Less, line));
        self
    }

    pub fn build(&mut self) -> Result<Framework> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        if self.assumptions.is_empty() {
            return Err(Error::input(None, "a framework needs at least one assumption"));
        }
        let mut names = std::mem::take(&mut self.names);
        let mut lookup = std::mem::take(&mut self.lookup);
        let assumptions = std::mem::take(&mut self.assumptions);
        let n = assumptions.len();

        let mut contraries = Vec::with_capacity(n);
        for &a in &assumptions {
            let c = match self.contraries.get(&a) {
                Some(&c) => c,
                None => {
                    // may already be interned by a rule mentioning it
                    let name = format!("{CONTRARY_PREFIX}{}", names[a.index()]);
                    match lookup.get(&name) {
                        Some(&id) => id,
                        None => {
                            let id = SentenceId::from_index(names.len());
                            names.push(name.clone());
                            lookup.insert(name, id);
                            id
                        }
                    }
                }
            };
            contraries.push(c);
        }

        // reserved tokens in rules must name a synthesized contrary
        for (rule, line) in &self.rules {
            for &s in std::iter::once(&rule.head).chain(&rule.body) {
                let name = &names[s.index()];
                if let Some(target) = name.strip_prefix(CONTRARY_PREFIX) {
                    let ok = lookup
                        .get(target)
                        .is_some_and(|t| assumptions.contains(t) && !self.contraries.contains_key(t));
                    if !ok {
                        return Err(Error::input(
                            *line,
                            format!("rule mentions undeclared reserved token `{name}`"),
                        ));
                    }
                }
            }
        }

        let mut assumption_of = vec![None; names.len()];
        for (i, a) in assumptions.iter().enumerate() {
            assumption_of[a.index()] = Some(i);
        }

        let mut leq_pairs = Vec::new();
        let mut strict_pairs = Vec::new();
        let mut strict_lines = Vec::new();
        for (a, b, kind, line) in &self.prefs {
            let resolve = |name: &str| {
                lookup
                    .get(name)
                    .and_then(|s| assumption_of[s.index()])
                    .ok_or_else(|| {
                        Error::input(*line, format!("preference mentions non-assumption `{name}`"))
                    })
            };
            let pair = (resolve(a)?, resolve(b)?);
            match kind {
                PrefKind::Leq => leq_pairs.push(pair),
                PrefKind::Less => {
                    strict_pairs.push(pair);
                    strict_lines.push(*line);
                }
            }
        }
        let pref = Preorder::from_pairs(n, &leq_pairs, &strict_pairs).map_err(|(a, b)| {
            let line = strict_pairs
                .iter()
                .position(|&p| p == (a, b))
                .and_then(|i| strict_lines[i]);
            Error::input(
                line,
                format!(
                    "strict preference {} < {} collapses: {} <= {} follows by transitivity",
                    names[assumptions[a].index()],
                    names[assumptions[b].index()],
                    names[assumptions[b].index()],
                    names[assumptions[a].index()],
                ),
            )
        })?;

        let rules: Vec<Rule> = self.rules.drain(..).map(|(r, _)| r).collect();
        let mut rules_by_body = vec![Vec::new(); names.len()];
        let mut rules_by_head = vec![Vec::new(); names.len()];
        let mut distinct_body_len = Vec::with_capacity(rules.len());
        for (i, r) in rules.iter().enumerate() {
            rules_by_head[r.head.index()].push(i);
            let mut body = r.body.clone();
            body.sort();
            body.dedup();
            for b in &body {
                rules_by_body[b.index()].push(i);
            }
            distinct_body_len.push(body.len());
        }

        let below = compute_below(&pref);
        Ok(Framework {
            names,
            lookup,
            rules,
            assumptions,
            assumption_of,
            contraries,
            pref,
            below,
            rules_by_body,
            rules_by_head,
            distinct_body_len,
        })
    }
}
