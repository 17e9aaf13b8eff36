//! Finite abstract argumentation frameworks and their Dung semantics.

use crate::error::{Error, Result};
use crate::framework::{AssumptionSet, MAX_ASSUMPTIONS};
use crate::semantics::{maximal, SemanticsName};

/// A set of node indices; bit `i` is node `i`.
pub type NodeSet = AssumptionSet;

/// Nodes are opaque names; edges are attacks or defeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AAGraph {
    names: Vec<String>,
    attackers: Vec<NodeSet>,
    targets: Vec<NodeSet>,
}

impl AAGraph {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_ASSUMPTIONS {
            return Err(Error::capacity(
                format!("argument graph with {} nodes", names.len()),
                MAX_ASSUMPTIONS,
            ));
        }
        let n = names.len();
        Ok(AAGraph {
            names,
            attackers: vec![NodeSet::EMPTY; n],
            targets: vec![NodeSet::EMPTY; n],
        })
    }

    pub fn from_edges(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::new(names)?;
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        self.targets[from] = self.targets[from].with(to);
        self.attackers[to] = self.attackers[to].with(from);
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.len())
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.targets[from].contains(to)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.targets[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn attackers_of(&self, i: usize) -> NodeSet {
        self.attackers[i]
    }

    /// Nodes attacked by some member of `s`.
    pub fn attacked_by(&self, s: NodeSet) -> NodeSet {
        s.iter().fold(NodeSet::EMPTY, |acc, a| acc | self.targets[a])
    }

    pub fn is_conflict_free(&self, s: NodeSet) -> bool {
        !self.attacked_by(s).intersects(s)
    }

    /// Nodes all of whose attackers are attacked by `s`.
    pub fn defended_by(&self, s: NodeSet) -> NodeSet {
        let hit = self.attacked_by(s);
        (0..self.len())
            .filter(|&a| self.attackers[a].is_subset(hit))
            .collect()
    }

    pub fn is_admissible(&self, s: NodeSet) -> bool {
        self.is_conflict_free(s) && s.is_subset(self.defended_by(s))
    }

    pub fn grounded(&self) -> NodeSet {
        let mut current = NodeSet::EMPTY;
        loop {
            let next = self.defended_by(current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn conflict_free_sets(&self, cap: usize) -> Result<Vec<NodeSet>> {
        let mut out = Vec::new();
        self.extend_cf(0, NodeSet::EMPTY, cap, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn extend_cf(&self, i: usize, chosen: NodeSet, cap: usize, out: &mut Vec<NodeSet>) -> Result<()> {
        if i == self.len() {
            if out.len() >= cap {
                return Err(Error::capacity("conflict-free sets of the argument graph", cap));
            }
            out.push(chosen);
            return Ok(());
        }
        self.extend_cf(i + 1, chosen, cap, out)?;
        let clash = self.targets[i] | self.attackers[i];
        if !clash.contains(i) && !clash.intersects(chosen) {
            self.extend_cf(i + 1, chosen.with(i), cap, out)?;
        }
        Ok(())
    }
}

/// Extensions of `g` under `sem`, sorted by bitmask. At most `cap`
/// conflict-free sets are examined.
pub fn aa_extensions(g: &AAGraph, sem: SemanticsName, cap: usize) -> Result<Vec<NodeSet>> {
    if sem == SemanticsName::WellFounded {
        return Ok(vec![g.grounded()]);
    }
    let cf = g.conflict_free_sets(cap)?;
    if sem == SemanticsName::Stable {
        let all = g.nodes();
        return Ok(cf
            .into_iter()
            .filter(|&s| (all - s).is_subset(g.attacked_by(s)))
            .collect());
    }
    let admissible: Vec<NodeSet> = cf
        .into_iter()
        .filter(|&s| s.is_subset(g.defended_by(s)))
        .collect();
    Ok(match sem {
        SemanticsName::Admissible => admissible,
        SemanticsName::Complete => admissible
            .into_iter()
            .filter(|&s| g.defended_by(s) == s)
            .collect(),
        SemanticsName::Preferred => maximal(&admissible),
        SemanticsName::Ideal => {
            let common = maximal(&admissible)
                .into_iter()
                .fold(g.nodes(), |acc, p| acc & p);
            let inside: Vec<NodeSet> = admissible
                .into_iter()
                .filter(|s| s.is_subset(common))
                .collect();
            maximal(&inside)
        }
        SemanticsName::Stable | SemanticsName::WellFounded => unreachable!(),
    })
}
