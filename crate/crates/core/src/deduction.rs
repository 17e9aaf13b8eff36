//! Deductions: conclusions (Cn), closure (Cl), exact support families and
//! tainted derivability.
//!
//! The support of a deduction tree is exactly its set of assumption-labelled
//! leaves. Trees are finite, so cyclic rules never add supports.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::framework::{AssumptionSet, Framework, SentenceId};

/// Forward chaining from `seeds` to the least fixed point.
pub(crate) fn saturate(f: &Framework, seeds: impl IntoIterator<Item = SentenceId>) -> Vec<bool> {
    let mut derived = vec![false; f.language_len()];
    let mut pending: Vec<usize> = (0..f.rules().len()).map(|r| f.distinct_body_len(r)).collect();
    let mut queue: Vec<SentenceId> = Vec::new();
    for s in seeds {
        if !derived[s.index()] {
            derived[s.index()] = true;
            queue.push(s);
        }
    }
    for (r, rule) in f.rules().iter().enumerate() {
        if pending[r] == 0 && !derived[rule.head.index()] {
            derived[rule.head.index()] = true;
            queue.push(rule.head);
        }
    }
    while let Some(s) = queue.pop() {
        for &r in f.rules_by_body(s) {
            pending[r] -= 1;
            let head = f.rules()[r].head;
            if pending[r] == 0 && !derived[head.index()] {
                derived[head.index()] = true;
                queue.push(head);
            }
        }
    }
    derived
}

fn assumption_seeds(f: &Framework, e: AssumptionSet) -> impl Iterator<Item = SentenceId> + '_ {
    e.iter().map(|i| f.assumption(i))
}

/// Cn(E): every sentence with a deduction supported by a subset of `e`.
pub fn conclusions(f: &Framework, e: &BTreeSet<SentenceId>) -> BTreeSet<SentenceId> {
    let derived = saturate(f, e.iter().copied());
    f.sentences().filter(|s| derived[s.index()]).collect()
}

/// Cn of a set of assumptions.
pub fn assumption_conclusions(f: &Framework, e: AssumptionSet) -> BTreeSet<SentenceId> {
    let derived = saturate(f, assumption_seeds(f, e));
    f.sentences().filter(|s| derived[s.index()]).collect()
}

/// Whether `phi ∈ Cn(e)`.
pub fn derives(f: &Framework, e: AssumptionSet, phi: SentenceId) -> bool {
    saturate(f, assumption_seeds(f, e))[phi.index()]
}

/// Cl(E) = Cn(E) ∩ A.
pub fn closure(f: &Framework, e: AssumptionSet) -> AssumptionSet {
    let derived = saturate(f, assumption_seeds(f, e));
    (0..f.assumption_count())
        .filter(|&i| derived[f.assumption(i).index()])
        .collect()
}

pub fn is_closed(f: &Framework, e: AssumptionSet) -> bool {
    closure(f, e) == e
}

/// Whether some deduction of `phi` has all assumption leaves in `base` and
/// at least one leaf in `taint`.
///
/// Two layers: sentences derivable from `base`, and among them those with a
/// tree touching `taint`. No supports are materialized.
pub fn tainted_derivable(
    f: &Framework,
    base: AssumptionSet,
    taint: AssumptionSet,
    phi: SentenceId,
) -> bool {
    let taint = taint & base;
    if taint.is_empty() {
        return false;
    }
    let plain = saturate(f, assumption_seeds(f, base));
    if !plain[phi.index()] {
        return false;
    }
    let mut tainted = vec![false; f.language_len()];
    for i in taint.iter() {
        tainted[f.assumption(i).index()] = true;
    }
    loop {
        let mut changed = false;
        for rule in f.rules() {
            if tainted[rule.head.index()] {
                continue;
            }
            if rule.body.iter().all(|b| plain[b.index()])
                && rule.body.iter().any(|b| tainted[b.index()])
            {
                tainted[rule.head.index()] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    tainted[phi.index()]
}

/// For every sentence, the set of exact supports of its deduction trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    per_sentence: Vec<Vec<AssumptionSet>>,
}

impl SupportFamily {
    /// Supports of `phi`, sorted by bitmask.
    pub fn of(&self, phi: SentenceId) -> &[AssumptionSet] {
        &self.per_sentence[phi.index()]
    }

    pub fn derivable(&self, phi: SentenceId) -> bool {
        !self.per_sentence[phi.index()].is_empty()
    }

    /// Whether some support of `phi` lies inside `within`.
    pub fn supported_within(&self, phi: SentenceId, within: AssumptionSet) -> bool {
        self.of(phi).iter().any(|s| s.is_subset(within))
    }

    /// Every (sentence, support) pair.
    pub fn iter(&self) -> impl Iterator<Item = (SentenceId, AssumptionSet)> + '_ {
        self.per_sentence.iter().enumerate().flat_map(|(i, fam)| {
            fam.iter().map(move |&s| (SentenceId::from_index(i), s))
        })
    }

    pub fn total(&self) -> usize {
        self.per_sentence.iter().map(Vec::len).sum()
    }
}

/// Unions `x ∪ y` over `left × right`, deduplicated.
fn product(left: &BTreeSet<AssumptionSet>, right: &BTreeSet<AssumptionSet>) -> BTreeSet<AssumptionSet> {
    left.iter()
        .flat_map(|&x| right.iter().map(move |&y| x | y))
        .collect()
}

/// Least fixed point over (sentence, support) pairs: an assumption supports
/// itself, and a rule contributes every union of one support per body member.
pub fn support_families(f: &Framework, cap: usize) -> Result<SupportFamily> {
    let mut fam: Vec<BTreeSet<AssumptionSet>> = vec![BTreeSet::new(); f.language_len()];
    for i in 0..f.assumption_count() {
        fam[f.assumption(i).index()].insert(AssumptionSet::singleton(i));
    }
    let unit: BTreeSet<AssumptionSet> = [AssumptionSet::EMPTY].into();
    loop {
        let mut changed = false;
        for rule in f.rules() {
            let mut combos = unit.clone();
            for b in &rule.body {
                if combos.is_empty() {
                    break;
                }
                combos = product(&combos, &fam[b.index()]);
                if combos.len() > cap {
                    return Err(Error::capacity(
                        format!("support combinations for `{}`", f.name(rule.head)),
                        cap,
                    ));
                }
            }
            let target = &mut fam[rule.head.index()];
            for c in combos {
                changed |= target.insert(c);
            }
            if target.len() > cap {
                return Err(Error::capacity(
                    format!("support family of `{}`", f.name(rule.head)),
                    cap,
                ));
            }
        }
        if !changed {
            break;
        }
    }
    Ok(SupportFamily {
        per_sentence: fam.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}

/// Brute-force enumeration of the leaf sets of all deduction trees for `phi`
/// of depth at most `depth_cap` (a single leaf has depth 1).
///
/// Expands trees top-down by depth, independently of [`support_families`];
/// used to validate it.
pub fn derivation_oracle(
    f: &Framework,
    phi: SentenceId,
    depth_cap: usize,
    budget: usize,
) -> Result<BTreeSet<AssumptionSet>> {
    assert!(depth_cap >= 1, "depth cap must be positive");
    let mut oracle = Oracle {
        f,
        memo: HashMap::new(),
        budget,
        spent: 0,
    };
    oracle.trees(phi, depth_cap).map(|s| (*s).clone())
}

struct Oracle<'a> {
    f: &'a Framework,
    memo: HashMap<(SentenceId, usize), Rc<BTreeSet<AssumptionSet>>>,
    budget: usize,
    spent: usize,
}

impl Oracle<'_> {
    fn charge(&mut self, amount: usize) -> Result<()> {
        self.spent += amount;
        if self.spent > self.budget {
            Err(Error::capacity("derivation oracle work", self.budget))
        } else {
            Ok(())
        }
    }

    fn trees(&mut self, phi: SentenceId, depth: usize) -> Result<Rc<BTreeSet<AssumptionSet>>> {
        if let Some(hit) = self.memo.get(&(phi, depth)) {
            return Ok(hit.clone());
        }
        self.charge(1)?;
        let f = self.f;
        let mut out = BTreeSet::new();
        if let Some(i) = f.assumption_index(phi) {
            out.insert(AssumptionSet::singleton(i));
        }
        if depth > 1 {
            for &r in f.rules_by_head(phi) {
                let mut partial: BTreeSet<AssumptionSet> = [AssumptionSet::EMPTY].into();
                for &child in &f.rules()[r].body {
                    let sub = self.trees(child, depth - 1)?;
                    self.charge(partial.len() * sub.len())?;
                    partial = product(&partial, &sub);
                    if partial.is_empty() {
                        break;
                    }
                }
                out.extend(partial);
            }
        }
        let out = Rc::new(out);
        self.memo.insert((phi, depth), out.clone());
        Ok(out)
    }
}
