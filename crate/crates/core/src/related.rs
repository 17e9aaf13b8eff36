//! Neighbouring formalisms: preference-based AA frameworks (PAFs), p_ABA
//! and argument-level views of flat frameworks under Elitist, Democratic
//! and Disjoint Elitist comparison.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::aa::AAGraph;
use crate::attacks::Mode;
use crate::deduction::{assumption_conclusions, SupportFamily};
use crate::error::{Error, Result};
use crate::framework::{validate_token, AssumptionSet, Framework, Preorder, SentenceId, CONTRARY_PREFIX};
use crate::parse::{parse_order, tokenize};
use crate::semantics::{ExtensionReport, Reasoner, SemanticsName};

/// A preorder ≼ over the whole language, as used by p_ABA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguagePreference {
    order: Preorder,
}

impl LanguagePreference {
    pub fn empty(f: &Framework) -> Self {
        LanguagePreference {
            order: Preorder::empty(f.language_len()),
        }
    }

    /// Transitive closure of the given pairs; a strict pair that collapses
    /// is returned as the error.
    pub fn new(
        f: &Framework,
        leq: &[(SentenceId, SentenceId)],
        strict: &[(SentenceId, SentenceId)],
    ) -> std::result::Result<Self, (SentenceId, SentenceId)> {
        let idx = |v: &[(SentenceId, SentenceId)]| -> Vec<(usize, usize)> {
            v.iter().map(|(a, b)| (a.index(), b.index())).collect()
        };
        Preorder::from_pairs(f.language_len(), &idx(leq), &idx(strict))
            .map(|order| LanguagePreference { order })
            .map_err(|(a, b)| (SentenceId::from_index(a), SentenceId::from_index(b)))
    }

    pub fn leq(&self, s: SentenceId, t: SentenceId) -> bool {
        self.order.leq(s.index(), t.index())
    }

    pub fn less(&self, s: SentenceId, t: SentenceId) -> bool {
        self.order.less(s.index(), t.index())
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (SentenceId, SentenceId)> + '_ {
        self.order
            .pairs()
            .map(|(a, b)| (SentenceId::from_index(a), SentenceId::from_index(b)))
    }
}

/// An AA framework with a preorder ≼ over its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Paf {
    names: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    pref: Preorder,
}

impl Paf {
    pub fn new(names: Vec<String>, attacks: impl IntoIterator<Item = (usize, usize)>, pref: Preorder) -> Self {
        assert_eq!(names.len(), pref.len(), "preorder must range over the arguments");
        Paf {
            names,
            attacks: attacks.into_iter().collect(),
            pref,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn attacks(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub fn pref(&self) -> &Preorder {
        &self.pref
    }
}

/// Parses `arg <name>`, `att <src> <dst>` and `pref` lines.
pub fn parse_paf(text: &str) -> Result<Paf> {
    let lines: Vec<(usize, Vec<&str>)> = tokenize(text).collect();
    let mut names: Vec<String> = Vec::new();
    for (line, tokens) in &lines {
        if tokens[0] == "arg" {
            let [name] = &tokens[1..] else {
                return Err(Error::input(Some(*line), "expected `arg <name>`"));
            };
            validate_token(name)
                .and_then(|()| reserved_clash(name))
                .map_err(|m| Error::input(Some(*line), m))?;
            if names.iter().any(|n| n == name) {
                return Err(Error::input(Some(*line), format!("argument `{name}` declared twice")));
            }
            names.push((*name).to_owned());
        }
    }
    let mut attacks = BTreeSet::new();
    let mut leq = Vec::new();
    let mut strict = Vec::new();
    let mut strict_lines = Vec::new();
    for (line, tokens) in &lines {
        let line = *line;
        let find = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::input(Some(line), format!("unknown argument `{name}`")))
        };
        match (tokens[0], &tokens[1..]) {
            ("arg", _) => {}
            ("att", [a, b]) => {
                attacks.insert((find(a)?, find(b)?));
            }
            ("att", _) => return Err(Error::input(Some(line), "expected `att <src> <dst>`")),
            ("pref", args) => {
                let (a, is_strict, b) = parse_order(line, args)?;
                let pair = (find(a)?, find(b)?);
                if is_strict {
                    strict.push(pair);
                    strict_lines.push(line);
                } else {
                    leq.push(pair);
                }
            }
            (keyword, _) => {
                return Err(Error::input(Some(line), format!("unknown declaration `{keyword}`")))
            }
        }
    }
    let pref = Preorder::from_pairs(names.len(), &leq, &strict).map_err(|(a, b)| {
        let line = strict.iter().position(|&p| p == (a, b)).map(|i| strict_lines[i]);
        Error::input(
            line,
            format!("strict preference {} < {} collapses after transitive closure", names[a], names[b]),
        )
    })?;
    Ok(Paf::new(names, attacks, pref))
}

fn reserved_clash(name: &str) -> std::result::Result<(), String> {
    if name.starts_with(CONTRARY_PREFIX) {
        Err(format!("argument `{name}` clashes with the reserved `{CONTRARY_PREFIX}` prefix"))
    } else {
        Ok(())
    }
}

pub fn render_paf(p: &Paf) -> String {
    let mut out = String::new();
    for n in &p.names {
        writeln!(out, "arg {n}").unwrap();
    }
    for &(a, b) in &p.attacks {
        writeln!(out, "att {} {}", p.names[a], p.names[b]).unwrap();
    }
    for (a, b) in p.pref.pairs() {
        writeln!(out, "pref {} <= {}", p.names[a], p.names[b]).unwrap();
    }
    out
}

/// Defeats from attacks: `a ⇀ b` iff `a` attacks `b` and `a ⊀ b`, or `b`
/// attacks `a` and `b ≺ a`.
pub fn repair_with(
    names: Vec<String>,
    attacks: &BTreeSet<(usize, usize)>,
    strictly_less: impl Fn(usize, usize) -> bool,
) -> Result<AAGraph> {
    let mut g = AAGraph::new(names)?;
    for &(a, b) in attacks {
        if strictly_less(a, b) {
            g.add_edge(b, a);
        } else {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

pub fn repair_paf(p: &Paf) -> Result<AAGraph> {
    repair_with(p.names.clone(), &p.attacks, |a, b| p.pref.less(a, b))
}

/// The ABA⁺ image of a PAF: arguments become assumptions with fresh
/// contraries, each attack `a ⤳ b` becomes `contrary(b) ← a`, and ≤ = ≼.
pub fn paf_to_abaplus(p: &Paf) -> Result<Framework> {
    let mut b = Framework::builder();
    for n in &p.names {
        reserved_clash(n).map_err(|m| Error::input(None, m))?;
        b.assumption(n);
    }
    for &(x, y) in &p.attacks {
        let head = format!("{CONTRARY_PREFIX}{}", p.names[y]);
        b.rule(&head, [p.names[x].as_str()]);
    }
    for (x, y) in p.pref.pairs() {
        b.prefer_leq(&p.names[x], &p.names[y]);
    }
    b.build()
}

/// A deduction `support ⊢ conclusion` of a flat framework, viewed as an
/// argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructuredArgument {
    pub support: AssumptionSet,
    pub conclusion: SentenceId,
}

impl StructuredArgument {
    /// Canonical identifier `{a,b}|-c`, support in declaration order.
    pub fn id(&self, f: &Framework) -> String {
        format!("{{{}}}|-{}", f.set_names(self.support).join(","), f.name(self.conclusion))
    }
}

/// One argument per (support, conclusion) pair, with `a` attacking `b` iff
/// the conclusion of `a` is the contrary of a premise of `b`.
pub fn build_arguments(f: &Framework, fam: &SupportFamily) -> Result<(Vec<StructuredArgument>, AAGraph)> {
    if let Some(a) = f.first_non_flat() {
        return Err(Error::NotFlat(f.name(f.assumption(a)).to_owned()));
    }
    let args: Vec<StructuredArgument> = fam
        .iter()
        .map(|(conclusion, support)| StructuredArgument { support, conclusion })
        .collect();
    let names = args.iter().map(|a| a.id(f)).collect();
    let edges = attack_sites(f, &args).into_iter().map(|(a, b, _)| (a, b));
    Ok((args.clone(), AAGraph::from_edges(names, edges)?))
}

/// Triples `(a, b, β)`: `a` attacks `b` on premise `β`.
fn attack_sites(f: &Framework, args: &[StructuredArgument]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in args.iter().enumerate() {
        for (j, b) in args.iter().enumerate() {
            for beta in b.support.iter() {
                if f.contrary(beta) == a.conclusion {
                    out.push((i, j, beta));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArgumentPrinciple {
    Eli,
    DEli,
    Dem,
}

impl ArgumentPrinciple {
    pub const ALL: [ArgumentPrinciple; 3] = [ArgumentPrinciple::Eli, ArgumentPrinciple::Dem, ArgumentPrinciple::DEli];

    pub fn as_str(self) -> &'static str {
        match self {
            ArgumentPrinciple::Eli => "eli",
            ArgumentPrinciple::DEli => "deli",
            ArgumentPrinciple::Dem => "dem",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrderFlags {
    pub strictly_less: bool,
    pub leq: bool,
}

fn elitist(a: AssumptionSet, b: AssumptionSet, pref: &Preorder) -> OrderFlags {
    OrderFlags {
        strictly_less: a.iter().any(|x| b.iter().all(|y| pref.less(x, y))),
        leq: a.iter().any(|x| b.iter().all(|y| pref.leq(x, y))),
    }
}

/// Compares premise sets `a` and `b`. A set without premises is never
/// strictly below anything, and every non-empty set is strictly below it.
pub fn argument_order(principle: ArgumentPrinciple, a: AssumptionSet, b: AssumptionSet, pref: &Preorder) -> OrderFlags {
    let mut flags = match principle {
        ArgumentPrinciple::Eli => elitist(a, b, pref),
        ArgumentPrinciple::DEli => elitist(a - b, b - a, pref),
        ArgumentPrinciple::Dem => {
            let dem = |x: AssumptionSet, y: AssumptionSet| x.iter().all(|p| y.iter().any(|q| pref.leq(p, q)));
            let leq = dem(a, b);
            OrderFlags {
                strictly_less: leq && !dem(b, a),
                leq,
            }
        }
    };
    if a.is_empty() {
        flags.strictly_less = false;
    } else if b.is_empty() {
        flags.strictly_less = true;
    }
    flags
}

fn argument_names(f: &Framework, args: &[StructuredArgument]) -> Vec<String> {
    args.iter().map(|a| a.id(f)).collect()
}

/// The PAF instantiated by a flat framework: its argument graph repaired
/// under the lifted argument ordering.
pub fn paf_view(f: &Framework, args: &[StructuredArgument], graph: &AAGraph, principle: ArgumentPrinciple) -> Result<AAGraph> {
    let attacks: BTreeSet<(usize, usize)> = graph.edges().into_iter().collect();
    repair_with(argument_names(f, args), &attacks, |a, b| {
        argument_order(principle, args[a].support, args[b].support, f.pref()).strictly_less
    })
}

/// Premise attacks that succeed as defeats: `a` defeats `b` on `β` iff `a`
/// is not strictly below the premise argument `{β} ⊢ β`.
pub fn defeat_graph(f: &Framework, args: &[StructuredArgument], principle: ArgumentPrinciple) -> Result<AAGraph> {
    let edges = attack_sites(f, args)
        .into_iter()
        .filter(|&(a, _, beta)| {
            !argument_order(principle, args[a].support, AssumptionSet::singleton(beta), f.pref()).strictly_less
        })
        .map(|(a, b, _)| (a, b));
    AAGraph::from_edges(argument_names(f, args), edges)
}

/// `a` normal-attacks `b` iff it attacks a premise `β` of `b` and no premise
/// of `a` is strictly below `β`.
pub fn dung_normal_graph(f: &Framework, args: &[StructuredArgument]) -> Result<AAGraph> {
    let edges = attack_sites(f, args)
        .into_iter()
        .filter(|&(a, _, beta)| !args[a].support.iter().any(|alpha| f.less(alpha, beta)))
        .map(|(a, b, _)| (a, b));
    AAGraph::from_edges(argument_names(f, args), edges)
}

/// Conclusions of an argument extension.
pub fn argument_conclusions(args: &[StructuredArgument], ext: AssumptionSet) -> BTreeSet<SentenceId> {
    ext.iter().map(|i| args[i].conclusion).collect()
}

fn p_aba_base(lp: &LanguagePreference, cn: &BTreeSet<SentenceId>, cn2: &BTreeSet<SentenceId>) -> bool {
    let lost: Vec<SentenceId> = cn.difference(cn2).copied().collect();
    cn2.difference(cn).any(|&phi| {
        lost.iter().any(|&psi| lp.leq(psi, phi)) && !lost.iter().any(|&chi| lp.less(phi, chi))
    })
}

/// The relation ⊑ over `family`, closed reflexively and transitively;
/// entry `[i][j]` is `family[i] ⊑ family[j]`.
pub fn p_aba_order(f: &Framework, lp: &LanguagePreference, family: &[AssumptionSet]) -> Vec<Vec<bool>> {
    let cns: Vec<BTreeSet<SentenceId>> = family.iter().map(|&e| assumption_conclusions(f, e)).collect();
    let n = family.len();
    let mut rel: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i == j || p_aba_base(lp, &cns[i], &cns[j])).collect())
        .collect();
    // Warshall
    #[allow(clippy::needless_range_loop)]
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    rel
}

/// Whether `e1 ⊑ e2` within the extension family `family`.
pub fn p_aba_prefers(
    f: &Framework,
    lp: &LanguagePreference,
    family: &[AssumptionSet],
    e1: AssumptionSet,
    e2: AssumptionSet,
) -> bool {
    let mut all: Vec<AssumptionSet> = family.to_vec();
    for e in [e1, e2] {
        if !all.contains(&e) {
            all.push(e);
        }
    }
    let pos = |e| all.iter().position(|&x| x == e).unwrap();
    p_aba_order(f, lp, &all)[pos(e1)][pos(e2)]
}

/// Plain σ extensions that are ⊑-maximal (P-extensions).
pub fn p_aba_extensions(r: &Reasoner<'_>, lp: &LanguagePreference, sem: SemanticsName) -> Result<ExtensionReport> {
    let mut report = r.extensions(sem, Mode::Plain)?;
    let rel = p_aba_order(r.framework(), lp, &report.extensions);
    let n = report.extensions.len();
    let keep: Vec<bool> = (0..n).map(|i| (0..n).all(|j| !rel[i][j] || rel[j][i])).collect();
    let mut it = keep.iter();
    report.extensions.retain(|_| *it.next().unwrap());
    let mut it = keep.iter();
    report.conclusions.retain(|_| *it.next().unwrap());
    report.exists = !report.extensions.is_empty();
    Ok(report)
}
