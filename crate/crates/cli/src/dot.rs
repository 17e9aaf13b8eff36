//! Attack graphs over assumption sets, rendered as DOT or JSON.
//!
//! Solid edges are normal attacks, dashed edges reverse attacks; a pair
//! carrying both is drawn once with a double arrowhead and `both=true`.

use std::fmt::Write;

use abaplus::{
    aba_attacks, plus_attacks, support_families, AssumptionSet, Error, Framework, Limits, Mode,
    Result,
};
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    /// Sets occurring as supports, plus singletons.
    Supports,
    /// Every subset of the assumptions.
    All,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Supports => "supports",
            Scope::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub normal: bool,
    pub reverse: bool,
}

impl Edge {
    pub fn kind(&self) -> &'static str {
        match (self.normal, self.reverse) {
            (true, true) => "both",
            (false, true) => "reverse",
            _ => "normal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AttackGraphView {
    pub mode: Mode,
    pub scope: Scope,
    /// Ordered by size, then bitmask.
    pub nodes: Vec<AssumptionSet>,
    pub edges: Vec<Edge>,
}

/// Builds the attack graph among the selected nodes. `include_trivial`
/// keeps ∅ and the full assumption set, which are omitted by default.
pub fn attack_graph(
    f: &Framework,
    scope: Scope,
    mode: Mode,
    include_trivial: bool,
    limits: Limits,
) -> Result<AttackGraphView> {
    let all = f.all_assumptions();
    let mut nodes: Vec<AssumptionSet> = match scope {
        Scope::All => {
            if f.assumption_count() > limits.assumption_cap {
                return Err(Error::Capacity {
                    what: format!("DOT export of all {} assumption subsets", f.assumption_count()),
                    cap: limits.assumption_cap,
                });
            }
            all.subsets().collect()
        }
        Scope::Supports => {
            let fam = support_families(f, limits.support_cap)?;
            let mut v: Vec<AssumptionSet> = fam.iter().map(|(_, s)| s).collect();
            v.extend(all.iter().map(AssumptionSet::singleton));
            v
        }
    };
    if !include_trivial {
        nodes.retain(|&s| !s.is_empty() && s != all);
    }
    nodes.sort_by_key(|s| (s.len(), s.bits()));
    nodes.dedup();

    let mut edges = Vec::new();
    for (i, &a) in nodes.iter().enumerate() {
        for (j, &b) in nodes.iter().enumerate() {
            let (normal, reverse) = match mode {
                Mode::Plain => (aba_attacks(f, a, b), false),
                Mode::PreferenceAware => {
                    let flags = plus_attacks(f, a, b);
                    (flags.normal, flags.reverse)
                }
            };
            if normal || reverse {
                edges.push(Edge { from: i, to: j, normal, reverse });
            }
        }
    }
    Ok(AttackGraphView { mode, scope, nodes, edges })
}

fn label(f: &Framework, s: AssumptionSet) -> String {
    format!("{{{}}}", f.set_names(s).join(","))
}

pub fn render_dot(f: &Framework, g: &AttackGraphView) -> String {
    let mut out = String::new();
    writeln!(out, "digraph attacks {{").unwrap();
    writeln!(out, "  // mode={} scope={}", g.mode.as_str(), g.scope.as_str()).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, &s) in g.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", label(f, s)).unwrap();
    }
    for e in &g.edges {
        let attrs = match e.kind() {
            "both" => "style=solid, arrowhead=normalnormal, both=true",
            "reverse" => "style=dashed",
            _ => "style=solid",
        };
        writeln!(out, "  n{} -> n{} [{attrs}];", e.from, e.to).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(f: &Framework, g: &AttackGraphView) -> Value {
    let tokens = |s: AssumptionSet| crate::report::tokens(f, s);
    json!({
        "mode": g.mode.as_str(),
        "scope": g.scope.as_str(),
        "nodes": g.nodes.iter().map(|&s| tokens(s)).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({
            "from": tokens(g.nodes[e.from]),
            "to": tokens(g.nodes[e.to]),
            "kind": e.kind(),
            "normal": e.normal,
            "reverse": e.reverse,
        })).collect::<Vec<_>>(),
    })
}

/// DOT text for `f` with default node selection.
pub fn export_dot(f: &Framework, scope: Scope, mode: Mode, limits: Limits) -> Result<String> {
    attack_graph(f, scope, mode, false, limits).map(|g| render_dot(f, &g))
}
