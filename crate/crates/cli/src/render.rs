//! Aligned-text rendering of output documents.

use std::fmt::Write;

use serde_json::Value;

use crate::Document;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_report(v: &Value) -> bool {
    v.get("theorem_id").is_some() && v.get("assertions").is_some()
}

/// Witnesses shorter than this are shown inline.
const INLINE_WITNESS: usize = 72;

fn report(out: &mut String, r: &Value) {
    let _ = writeln!(out, "  {:<8} {}  [{}]", scalar(&r["overall"]), scalar(&r["theorem_id"]), scalar(&r["instance"]));
    for a in r["assertions"].as_array().into_iter().flatten() {
        let mut line = format!("    {:<8} {}", scalar(&a["verdict"]), scalar(&a["claim"]));
        if let Some(w) = a.get("witness") {
            let w = w.to_string();
            if w.len() <= INLINE_WITNESS {
                let _ = write!(line, "  {w}");
            }
        }
        let _ = writeln!(out, "{line}");
    }
}

/// An array of flat objects as an aligned table with a header row.
fn table(out: &mut String, rows: &[Value]) -> bool {
    let Some(keys) = rows.first().and_then(Value::as_object).map(|o| o.keys().cloned().collect::<Vec<_>>()) else {
        return false;
    };
    let flat = rows.iter().all(|r| {
        r.as_object()
            .is_some_and(|o| o.keys().eq(keys.iter()) && o.values().all(|x| !x.is_object() && !x.is_array()))
    });
    if !flat {
        return false;
    }
    let cells: Vec<Vec<String>> = rows.iter().map(|r| keys.iter().map(|k| scalar(&r[k])).collect()).collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].chars().count()).chain([k.len()]).max().unwrap_or(0))
        .collect();
    let line = |xs: &[String]| {
        let padded: Vec<String> = xs.iter().zip(&widths).map(|(x, w)| format!("{x:<w$}")).collect();
        format!("    {}", padded.join("  ").trim_end())
    };
    let _ = writeln!(out, "{}", line(&keys));
    for c in &cells {
        let _ = writeln!(out, "{}", line(c));
    }
    true
}

fn object(out: &mut String, v: &Value) {
    let Some(map) = v.as_object() else {
        let _ = writeln!(out, "  {}", scalar(v));
        return;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, x) in map {
        if is_report(x) {
            report(out, x);
        } else if x.as_array().is_some_and(|rows| !rows.is_empty() && rows.iter().all(Value::is_object)) {
            let _ = writeln!(out, "  {k}");
            table(out, x.as_array().expect("checked"));
        } else {
            let _ = writeln!(out, "  {k:<width$}  {}", scalar(x));
        }
    }
}

pub fn text(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "relhom {}  (cutoff {})", doc.command, doc.cutoff);
    for s in &doc.sections {
        let _ = write!(out, "\n== {} ==  {}", s.title, scalar(&serde_json::to_value(s.verdict).unwrap_or_default()));
        if let Some(e) = &s.elapsed {
            let _ = write!(out, "  ({e})");
        }
        out.push('\n');
        match &s.result {
            Value::Array(items) => {
                for x in items {
                    if is_report(x) {
                        report(&mut out, x);
                    } else {
                        object(&mut out, x);
                    }
                }
            }
            v if is_report(v) => report(&mut out, v),
            v => object(&mut out, v),
        }
    }
    let _ = writeln!(out, "\noverall: {}", scalar(&serde_json::to_value(doc.overall).unwrap_or_default()));
    out
}
