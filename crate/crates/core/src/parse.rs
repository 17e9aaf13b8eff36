//! Line-oriented framework and rendering back to text.
//!
//! ```text
//! # comment
//! assumption alpha
//! contrary alpha stay
//! rule leave <- alpha
//! rule fact <-
//! pref alpha < beta
//! pref beta <= gamma
//! lpref leave <= stay
//! ```
//!
//! `assumption` lines may appear anywhere; the remaining declarations are
//! resolved after all assumptions are known.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::framework::{Framework, FrameworkBuilder, CONTRARY_PREFIX};
use crate::related::LanguagePreference;

/// Splits `text` into (line number, tokens), dropping comments and blanks.
pub(crate) fn tokenize(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// Parses `pref`-style operands: `<a> <= <b>` or `<a> < <b>`.
pub(crate) fn parse_order<'a>(line: usize, args: &[&'a str]) -> Result<(&'a str, bool, &'a str)> {
    match args {
        [a, "<=", b] => Ok((a, false, b)),
        [a, "<", b] => Ok((a, true, b)),
        _ => Err(Error::input(
            Some(line),
            "expected `<a> <= <b>` or `<a> < <b>`",
        )),
    }
}

/// Parses a framework file, ignoring `lpref` lines beyond syntax checks.
pub fn parse_framework(text: &str) -> Result<Framework> {
    parse_document(text).map(|(f, _)| f)
}

/// Parses a framework file together with its language preference.
pub fn parse_document(text: &str) -> Result<(Framework, LanguagePreference)> {
    let lines: Vec<(usize, Vec<&str>)> = tokenize(text).collect();
    let mut builder = FrameworkBuilder::new();
    for (line, tokens) in &lines {
        if tokens[0] == "assumption" {
            match &tokens[1..] {
                [name] => {
                    builder.at_line(*line).assumption(name);
                }
                _ => return Err(Error::input(Some(*line), "expected `assumption <name>`")),
            }
        }
    }
    let mut lprefs = Vec::new();
    for (line, tokens) in &lines {
        let line = *line;
        builder.at_line(line);
        match (tokens[0], &tokens[1..]) {
            ("assumption", _) => {}
            ("contrary", [a, s]) => {
                builder.contrary(a, s);
            }
            ("contrary", _) => {
                return Err(Error::input(Some(line), "expected `contrary <assumption> <sentence>`"))
            }
            ("rule", [head, "<-", body @ ..]) => {
                builder.rule(head, body.iter().copied());
            }
            ("rule", _) => {
                return Err(Error::input(Some(line), "expected `rule <head> <- [<body> ...]`"))
            }
            ("pref", args) => {
                let (a, strict, b) = parse_order(line, args)?;
                if strict {
                    builder.prefer_less(a, b);
                } else {
                    builder.prefer_leq(a, b);
                }
            }
            ("lpref", args) => lprefs.push((line, parse_order(line, args)?)),
            (keyword, _) => {
                return Err(Error::input(Some(line), format!("unknown declaration `{keyword}`")))
            }
        }
    }
    let framework = builder.build()?;

    let mut leq = Vec::new();
    let mut strict = Vec::new();
    for (line, (a, is_strict, b)) in &lprefs {
        let resolve = |name: &str| {
            framework.sentence(name).ok_or_else(|| {
                Error::input(Some(*line), format!("lpref mentions unknown sentence `{name}`"))
            })
        };
        let pair = (resolve(a)?, resolve(b)?);
        if *is_strict {
            strict.push(pair);
        } else {
            leq.push(pair);
        }
    }
    let lpref = LanguagePreference::new(&framework, &leq, &strict).map_err(|(a, b)| {
        let line = lprefs
            .iter()
            .find(|(_, (x, s, y))| *s && *x == framework.name(a) && *y == framework.name(b))
            .map(|(l, _)| *l);
        Error::input(
            line,
            format!(
                "strict lpref {} < {} collapses after transitive closure",
                framework.name(a),
                framework.name(b)
            ),
        )
    })?;
    Ok((framework, lpref))
}

/// Canonical text form: assumptions, explicit contraries, rules, then the
/// closed preorder as `<=` pairs.
pub fn render(f: &Framework) -> String {
    render_document(f, None)
}

pub fn render_document(f: &Framework, lpref: Option<&LanguagePreference>) -> String {
    let mut out = String::new();
    for i in 0..f.assumption_count() {
        writeln!(out, "assumption {}", f.name(f.assumption(i))).unwrap();
    }
    for i in 0..f.assumption_count() {
        let c = f.name(f.contrary(i));
        let synthesized = c
            .strip_prefix(CONTRARY_PREFIX)
            .is_some_and(|rest| rest == f.name(f.assumption(i)));
        if !synthesized {
            writeln!(out, "contrary {} {}", f.name(f.assumption(i)), c).unwrap();
        }
    }
    for r in f.rules() {
        write!(out, "rule {} <-", f.name(r.head)).unwrap();
        for b in &r.body {
            write!(out, " {}", f.name(*b)).unwrap();
        }
        out.push('\n');
    }
    for (a, b) in f.pref().pairs() {
        writeln!(
            out,
            "pref {} <= {}",
            f.name(f.assumption(a)),
            f.name(f.assumption(b))
        )
        .unwrap();
    }
    if let Some(lp) = lpref {
        for (s, t) in lp.pairs() {
            writeln!(out, "lpref {} <= {}", f.name(s), f.name(t)).unwrap();
        }
    }
    out
}
