//! Command-line front end for the `abaplus` engine.
//!
//! [`RunConfig`] is the parsed command line; [`render`] produces the report
//! text and [`run`] writes it out and maps failures to exit codes:
//! 0 success, 1 usage, 2 parse error, 3 cap exceeded.

pub mod dot;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use abaplus::related::{
    build_arguments, defeat_graph, dung_normal_graph, p_aba_extensions, paf_to_abaplus, paf_view,
    parse_paf, repair_paf, ArgumentPrinciple, StructuredArgument,
};
use abaplus::compliance::{
    check_axiom_consistency, check_axiom_negation, check_contraposition, check_principle, check_wcp,
};
use abaplus::{
    aa_extensions, closure, parse_document, render as render_framework, AAGraph,
    Complement, Error, Framework, Limits, Mode, Principle, Reasoner, SemanticsName,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::dot::Scope;
use crate::report::{brace, extension_json, extension_text, to_json, tokens, verdict_json, verdict_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(name = "abaplus", version, about = "Assumption-based argumentation with preferences")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Largest assumption count for subset enumeration.
    #[arg(long, global = true, default_value_t = 16, value_parser = positive)]
    pub assumption_cap: usize,

    /// Largest number of supports per sentence.
    #[arg(long, global = true, default_value_t = 4096, value_parser = positive)]
    pub support_cap: usize,

    /// Output format; `dot` only applies to the `dot` subcommand.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Parse a framework and report its size, flatness and closed sets.
    Check { input: PathBuf },
    /// Compute extensions.
    Semantics {
        input: PathBuf,
        /// Semantics to compute (repeatable, comma-separated); all by default.
        #[arg(long, short = 's', value_delimiter = ',', value_parser = semantics_name)]
        semantics: Vec<SemanticsName>,
        #[arg(long, value_enum, default_value = "plus")]
        mode: ModeSelection,
    },
    /// Check Weak Contraposition, Contraposition and the two classical axioms.
    Axioms { input: PathBuf },
    /// Check Principles 1–5 under the selected semantics.
    Principles {
        input: PathBuf,
        #[arg(long, short = 's', value_delimiter = ',', value_parser = semantics_name)]
        semantics: Vec<SemanticsName>,
        /// Principle numbers (repeatable, comma-separated); all by default.
        #[arg(long, short = 'p', value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=5))]
        principle: Vec<u8>,
    },
    /// Translate a preference-based argumentation framework into ABA+.
    TranslatePaf { input: PathBuf },
    /// Side-by-side extensions under ABA+, ABA and the argument-level views.
    Compare {
        input: PathBuf,
        /// Semantics to compare; complete by default.
        #[arg(long, short = 's', value_delimiter = ',', value_parser = semantics_name)]
        semantics: Vec<SemanticsName>,
    },
    /// Export the attack graph between assumption sets.
    Dot {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "supports")]
        scope: Scope,
        #[arg(long, value_enum, default_value = "plus")]
        mode: ModeSelection,
        /// Keep the empty set and the set of all assumptions.
        #[arg(long)]
        include_trivial: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeSelection {
    Plain,
    Plus,
    Both,
}

impl ModeSelection {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeSelection::Plain => vec![Mode::Plain],
            ModeSelection::Plus => vec![Mode::PreferenceAware],
            ModeSelection::Both => vec![Mode::Plain, Mode::PreferenceAware],
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn semantics_name(s: &str) -> Result<SemanticsName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code and a message carrying file/line context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    fn from_core(path: &Path, e: Error) -> Self {
        let code = match e {
            Error::Input { .. } => EXIT_PARSE,
            Error::Capacity { .. } => EXIT_CAP,
            Error::NotFlat(_) => EXIT_USAGE,
        };
        let message = match &e {
            Error::Input { line: Some(l), message } => format!("{}:{l}: {message}", path.display()),
            _ => format!("{}: {e}", path.display()),
        };
        CliError { code, message }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

type CliResult<T> = Result<T, CliError>;

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            assumption_cap: self.assumption_cap,
            support_cap: self.support_cap,
            ..Limits::default()
        }
    }

    fn format(&self) -> CliResult<Format> {
        let is_dot = matches!(self.command, Command::Dot { .. });
        match (self.format, is_dot) {
            (None, true) => Ok(Format::Dot),
            (None, false) => Ok(Format::Text),
            (Some(Format::Dot), false) => Err(CliError::usage("--format dot only applies to the dot subcommand")),
            (Some(f), _) => Ok(f),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// Runs the command and returns the rendered report.
pub fn render(config: &RunConfig) -> CliResult<String> {
    let format = config.format()?;
    let limits = config.limits();
    match &config.command {
        Command::Check { input } => with_framework(input, |f, _| check(f, limits, format)),
        Command::Semantics { input, semantics, mode } => {
            with_framework(input, |f, _| semantics_report(f, limits, semantics, *mode, format))
        }
        Command::Axioms { input } => with_framework(input, |f, _| axioms(f, limits, format)),
        Command::Principles { input, semantics, principle } => {
            with_framework(input, |f, _| principles(f, limits, semantics, principle, format))
        }
        Command::TranslatePaf { input } => translate_paf(input, format),
        Command::Compare { input, semantics } => {
            with_framework(input, |f, lp| compare(f, lp, limits, semantics, format))
        }
        Command::Dot { input, scope, mode, include_trivial } => {
            let mode = match mode {
                ModeSelection::Plain => Mode::Plain,
                ModeSelection::Plus => Mode::PreferenceAware,
                ModeSelection::Both => return Err(CliError::usage("dot takes --mode plain or --mode plus")),
            };
            with_framework(input, |f, _| {
                let g = dot::attack_graph(f, *scope, mode, *include_trivial, limits)?;
                Ok(match format {
                    Format::Json => to_json(&dot::graph_json(f, &g)),
                    _ => dot::render_dot(f, &g),
                })
            })
        }
    }
}

/// Runs the command, writes the report and returns the exit code.
pub fn run(config: &RunConfig) -> i32 {
    let result = render(config).and_then(|text| match &config.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

fn with_framework(
    path: &Path,
    body: impl FnOnce(&Framework, &abaplus::LanguagePreference) -> abaplus::Result<String>,
) -> CliResult<String> {
    let text = read(path)?;
    let (f, lp) = parse_document(&text).map_err(|e| CliError::from_core(path, e))?;
    body(&f, &lp).map_err(|e| CliError::from_core(path, e))
}

fn selected(semantics: &[SemanticsName], default: &[SemanticsName]) -> Vec<SemanticsName> {
    let mut v = if semantics.is_empty() { default.to_vec() } else { semantics.to_vec() };
    let mut seen = Vec::new();
    v.retain(|s| {
        let fresh = !seen.contains(s);
        seen.push(*s);
        fresh
    });
    v
}

fn check(f: &Framework, limits: Limits, format: Format) -> abaplus::Result<String> {
    let n = f.assumption_count();
    let fam = abaplus::support_families(f, limits.support_cap)?;
    let closed = (n <= limits.assumption_cap)
        .then(|| f.all_assumptions().subsets().filter(|&e| closure(f, e) == e).count());
    let non_flat = f.first_non_flat().map(|a| f.name(f.assumption(a)).to_owned());
    let strict = f.pref().pairs().filter(|&(a, b)| f.less(a, b)).count();
    let incomparable = f
        .pref()
        .incomparable_pair()
        .map(|(a, b)| [f.name(f.assumption(a)).to_owned(), f.name(f.assumption(b)).to_owned()]);
    Ok(match format {
        Format::Json => to_json(&json!({
            "sentences": f.language_len(),
            "assumptions": n,
            "rules": f.rules().len(),
            "preference_pairs": f.pref().pairs().count(),
            "strict_preference_pairs": strict,
            "incomparable": incomparable,
            "flat": non_flat.is_none(),
            "non_flat_witness": non_flat,
            "closed_sets": closed,
            "supports": fam.total(),
        })),
        _ => {
            let mut out = format!(
                "sentences: {}\nassumptions: {n}\nrules: {}\npreference pairs: {} ({strict} strict)\n",
                f.language_len(),
                f.rules().len(),
                f.pref().pairs().count()
            );
            match &non_flat {
                None => out.push_str("flat: yes\n"),
                Some(a) => out.push_str(&format!("flat: no ({a} is deducible from other assumptions)\n")),
            }
            if let Some([a, b]) = &incomparable {
                out.push_str(&format!("incomparable: {a}, {b}\n"));
            }
            match closed {
                Some(c) => out.push_str(&format!("closed sets: {c} of {}\n", 1u128 << n)),
                None => out.push_str("closed sets: not counted (above assumption cap)\n"),
            }
            out.push_str(&format!("supports: {}\n", fam.total()));
            out
        }
    })
}

fn semantics_report(
    f: &Framework,
    limits: Limits,
    semantics: &[SemanticsName],
    mode: ModeSelection,
    format: Format,
) -> abaplus::Result<String> {
    let r = Reasoner::new(f, limits)?;
    let mut reports = Vec::new();
    for sem in selected(semantics, &SemanticsName::ALL) {
        for m in mode.modes() {
            reports.push(r.extensions(sem, m)?);
        }
    }
    Ok(match format {
        Format::Json => {
            let mut values: Vec<Value> = reports.iter().map(|rep| extension_json(f, rep)).collect();
            to_json(&if values.len() == 1 { values.remove(0) } else { Value::Array(values) })
        }
        _ => reports.iter().map(|rep| extension_text(f, rep)).collect(),
    })
}

fn axioms(f: &Framework, limits: Limits, format: Format) -> abaplus::Result<String> {
    let fam = abaplus::support_families(f, limits.support_cap)?;
    let verdicts = [
        check_wcp(f, &fam),
        check_contraposition(f, &fam),
        check_axiom_consistency(f, &fam, Complement),
        check_axiom_negation(f, &fam, Complement),
    ];
    Ok(match format {
        Format::Json => to_json(&Value::Array(verdicts.iter().map(|v| verdict_json(f, v)).collect())),
        _ => verdicts.iter().map(|v| verdict_text(f, v.subject, v)).collect(),
    })
}

fn principles(
    f: &Framework,
    limits: Limits,
    semantics: &[SemanticsName],
    numbers: &[u8],
    format: Format,
) -> abaplus::Result<String> {
    let r = Reasoner::new(f, limits)?;
    let chosen: Vec<Principle> = if numbers.is_empty() {
        Principle::ALL.to_vec()
    } else {
        Principle::ALL.into_iter().filter(|p| numbers.contains(&p.number())).collect()
    };
    let mut json_rows = Vec::new();
    let mut text = String::new();
    for p in chosen {
        for sem in selected(semantics, &SemanticsName::ALL) {
            let v = check_principle(&r, p, sem)?;
            let mut row = verdict_json(f, &v);
            row["principle"] = json!(p.number());
            row["semantics"] = json!(sem.as_str());
            json_rows.push(row);
            text.push_str(&verdict_text(f, &format!("principle {} {} [{}]", p.number(), p.as_str(), sem), &v));
        }
    }
    Ok(match format {
        Format::Json => to_json(&Value::Array(json_rows)),
        _ => text,
    })
}

fn translate_paf(path: &Path, format: Format) -> CliResult<String> {
    let text = read(path)?;
    let wrap = |e| CliError::from_core(path, e);
    let p = parse_paf(&text).map_err(wrap)?;
    let f = paf_to_abaplus(&p).map_err(wrap)?;
    let rendered = render_framework(&f);
    Ok(match format {
        Format::Json => {
            let g = repair_paf(&p).map_err(wrap)?;
            to_json(&json!({
                "framework": rendered,
                "repaired_attacks": g.edges().into_iter()
                    .map(|(a, b)| [g.name(a), g.name(b)])
                    .collect::<Vec<_>>(),
            }))
        }
        _ => rendered,
    })
}

/// Column order of `compare`.
pub const COMPARE_COLUMNS: [&str; 10] = [
    "abaplus",
    "aba",
    "paf-eli",
    "paf-dem",
    "paf-deli",
    "aspic-eli",
    "aspic-dem",
    "aspic-deli",
    "dung-normal",
    "p-aba",
];

enum Column {
    Sets(Vec<Vec<String>>),
    NotApplicable(String),
}

fn argument_extensions(
    g: &AAGraph,
    args: &[StructuredArgument],
    f: &Framework,
    sem: SemanticsName,
    cap: usize,
) -> abaplus::Result<Vec<Vec<String>>> {
    let mut out: Vec<Vec<String>> = aa_extensions(g, sem, cap)?
        .into_iter()
        .map(|s| {
            let mut ids: Vec<String> = s.iter().map(|i| args[i].id(f)).collect();
            ids.sort();
            ids
        })
        .collect();
    out.sort();
    Ok(out)
}

fn assumption_extensions(f: &Framework, exts: &[abaplus::AssumptionSet]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = exts.iter().map(|&e| tokens(f, e)).collect();
    out.sort();
    out
}

fn compare_columns(
    f: &Framework,
    lp: &abaplus::LanguagePreference,
    r: &Reasoner<'_>,
    sem: SemanticsName,
) -> abaplus::Result<Vec<(&'static str, Column)>> {
    let cap = r.limits().aa_enumeration_cap;
    let mut cols = vec![
        ("abaplus", Column::Sets(assumption_extensions(f, &r.extensions(sem, Mode::PreferenceAware)?.extensions))),
        ("aba", Column::Sets(assumption_extensions(f, &r.extensions(sem, Mode::Plain)?.extensions))),
    ];
    // argument views need a flat framework and at most 64 arguments
    let built = match build_arguments(f, r.families()) {
        Ok(x) => Ok(x),
        Err(e @ Error::NotFlat(_)) => Err(e.to_string()),
        Err(Error::Capacity { what, cap }) => Err(format!("{what} exceeds {cap} arguments")),
        Err(e) => return Err(e),
    };
    let views: [(&'static str, Option<(bool, ArgumentPrinciple)>); 7] = [
        ("paf-eli", Some((true, ArgumentPrinciple::Eli))),
        ("paf-dem", Some((true, ArgumentPrinciple::Dem))),
        ("paf-deli", Some((true, ArgumentPrinciple::DEli))),
        ("aspic-eli", Some((false, ArgumentPrinciple::Eli))),
        ("aspic-dem", Some((false, ArgumentPrinciple::Dem))),
        ("aspic-deli", Some((false, ArgumentPrinciple::DEli))),
        ("dung-normal", None),
    ];
    for (name, view) in views {
        let col = match &built {
            Err(reason) => Column::NotApplicable(reason.clone()),
            Ok((args, graph)) => {
                let g = match view {
                    Some((true, p)) => paf_view(f, args, graph, p)?,
                    Some((false, p)) => defeat_graph(f, args, p)?,
                    None => dung_normal_graph(f, args)?,
                };
                Column::Sets(argument_extensions(&g, args, f, sem, cap)?)
            }
        };
        cols.push((name, col));
    }
    cols.push(("p-aba", Column::Sets(assumption_extensions(f, &p_aba_extensions(r, lp, sem)?.extensions))));
    Ok(cols)
}

fn compare(
    f: &Framework,
    lp: &abaplus::LanguagePreference,
    limits: Limits,
    semantics: &[SemanticsName],
    format: Format,
) -> abaplus::Result<String> {
    let r = Reasoner::new(f, limits)?;
    let mut json_rows = Vec::new();
    let mut text = String::new();
    for sem in selected(semantics, &[SemanticsName::Complete]) {
        let cols = compare_columns(f, lp, &r, sem)?;
        let mut columns = Map::new();
        let mut notes = Map::new();
        text.push_str(&format!("{}\n", sem.display_name(f.is_flat())));
        for (name, col) in cols {
            match col {
                Column::Sets(sets) => {
                    let shown = if sets.is_empty() {
                        "none".to_owned()
                    } else {
                        sets.iter().map(|s| brace(s)).collect::<Vec<_>>().join("  ")
                    };
                    text.push_str(&format!("  {name:<12} {shown}\n"));
                    columns.insert(name.into(), json!(sets));
                }
                Column::NotApplicable(reason) => {
                    text.push_str(&format!("  {name:<12} not applicable ({reason})\n"));
                    columns.insert(name.into(), json!("not_applicable"));
                    notes.insert(name.into(), json!(reason));
                }
            }
        }
        json_rows.push(json!({"semantics": sem.as_str(), "columns": columns, "notes": notes}));
    }
    Ok(match format {
        Format::Json => to_json(&if json_rows.len() == 1 { json_rows.remove(0) } else { Value::Array(json_rows) }),
        _ => text,
    })
}
