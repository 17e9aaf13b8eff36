//! Text and JSON renderings of analysis results.
//!
//! Sets are rendered as sorted token lists; lists of sets are sorted
//! lexicographically, so identical input yields byte-identical output.

use std::collections::BTreeSet;

use abaplus::{
    AssumptionSet, ExtensionReport, Framework, SentenceId, Verdict, Witness,
};
use serde_json::{json, Value};

pub fn tokens(f: &Framework, s: AssumptionSet) -> Vec<String> {
    let mut v: Vec<String> = f.set_names(s).into_iter().map(str::to_owned).collect();
    v.sort();
    v
}

pub fn sentence_tokens(f: &Framework, s: &BTreeSet<SentenceId>) -> Vec<String> {
    let mut v: Vec<String> = s.iter().map(|&x| f.name(x).to_owned()).collect();
    v.sort();
    v
}

pub fn brace(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

/// Extension and conclusion token lists, sorted together by extension.
pub fn sorted_extensions(f: &Framework, r: &ExtensionReport) -> Vec<(Vec<String>, Vec<String>)> {
    let mut rows: Vec<_> = r
        .extensions
        .iter()
        .zip(&r.conclusions)
        .map(|(&e, c)| (tokens(f, e), sentence_tokens(f, c)))
        .collect();
    rows.sort();
    rows
}

pub fn extension_json(f: &Framework, r: &ExtensionReport) -> Value {
    let rows = sorted_extensions(f, r);
    json!({
        "semantics": r.semantics.as_str(),
        "name": r.name,
        "mode": r.mode.as_str(),
        "exists": r.exists,
        "extensions": rows.iter().map(|(e, _)| e).collect::<Vec<_>>(),
        "conclusions": rows.iter().map(|(_, c)| c).collect::<Vec<_>>(),
        "advisories": r.advisories,
    })
}

pub fn extension_text(f: &Framework, r: &ExtensionReport) -> String {
    let rows = sorted_extensions(f, r);
    let mut out = format!(
        "{} ({}): {} extension{}\n",
        r.name,
        r.mode.as_str(),
        rows.len(),
        if rows.len() == 1 { "" } else { "s" }
    );
    for (e, c) in &rows {
        out.push_str(&format!("  {}  conclusions {}\n", brace(e), brace(c)));
    }
    for a in &r.advisories {
        out.push_str(&format!("  note: {a}\n"));
    }
    out
}

pub fn witness_json(f: &Framework, w: &Witness) -> Value {
    let set = |s: AssumptionSet| tokens(f, s);
    let asm = |i: usize| f.name(f.assumption(i)).to_owned();
    let mut v = match *w {
        Witness::Deduction { support, sentence } => {
            json!({"kind": "deduction", "support": set(support), "sentence": f.name(sentence)})
        }
        Witness::ContraryDeduction { support, assumption } => json!({
            "kind": "contrary_deduction",
            "support": set(support),
            "assumption": asm(assumption),
            "contrary": f.name(f.contrary(assumption)),
        }),
        Witness::Attack { attacker, target, extension } => json!({
            "kind": "attack",
            "attacker": asm(attacker),
            "target": asm(target),
            "extension": set(extension),
        }),
        Witness::Extension { extension } => json!({"kind": "extension", "extension": set(extension)}),
        Witness::Missing { extension, missing } => {
            json!({"kind": "missing", "extension": set(extension), "missing": set(missing)})
        }
        Witness::Clash { extension, sentence, other } => json!({
            "kind": "clash",
            "extension": set(extension),
            "sentence": f.name(sentence),
            "other": f.name(other),
        }),
        Witness::NotClosed { extension, sentence } => {
            json!({"kind": "not_closed", "extension": set(extension), "sentence": f.name(sentence)})
        }
        Witness::Incomparable { left, right } => {
            json!({"kind": "incomparable", "left": asm(left), "right": asm(right)})
        }
    };
    v["text"] = Value::String(w.describe(f));
    v
}

pub fn verdict_json(f: &Framework, v: &Verdict) -> Value {
    json!({
        "subject": v.subject,
        "status": v.status.as_str(),
        "witnesses": v.witnesses.iter().map(|w| witness_json(f, w)).collect::<Vec<_>>(),
        "notes": v.notes,
    })
}

pub fn verdict_text(f: &Framework, heading: &str, v: &Verdict) -> String {
    let mut out = format!("{heading}: {}\n", v.status);
    for w in &v.witnesses {
        out.push_str(&format!("  witness: {}\n", w.describe(f)));
    }
    if !v.notes.is_empty() {
        out.push_str(&format!("  note: {}\n", v.notes));
    }
    out
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
