//! Text rendering of report values: scalars inline, maps of records and
//! lists of records as aligned tables, everything else as nested blocks.

use std::fmt::Write;

use serde_json::{Map, Value};

/// Columns left out of text tables; the JSON output carries them.
const TABLE_HIDDEN: [&str; 5] = ["records", "data", "statement", "checks", "failures"];

pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            if let Some(cmd) = m.get("command") {
                let fmt = m.get("format").map(cell).unwrap_or_default();
                writeln!(out, "{fmt}  {}", command_line(cmd)).unwrap();
            }
            let rest: Vec<(&String, &Value)> = m
                .iter()
                .filter(|(k, _)| *k != "format" && *k != "command")
                .collect();
            object(&mut out, &rest, 0);
        }
        other => writeln!(out, "{}", cell(other)).unwrap(),
    }
    out
}

fn command_line(cmd: &Value) -> String {
    let mut s = cell(&cmd["name"]);
    if let Value::Object(args) = &cmd["args"] {
        for (k, v) in args {
            if !v.is_null() && v.as_array().is_none_or(|a| !a.is_empty()) {
                write!(s, " {k}={}", cell(v)).unwrap();
            }
        }
    }
    s
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Fits on one line: a scalar, a list of scalars, or a small map of those.
fn inline(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(is_scalar),
        Value::Object(m) => {
            m.len() <= 4
                && m.values()
                    .all(|x| is_scalar(x) || x.as_array().is_some_and(|a| a.iter().all(is_scalar)))
        }
        _ => true,
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(is_scalar) => {
            let parts: Vec<String> = a.iter().map(cell).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) if inline(v) => {
            let parts: Vec<String> = m.iter().map(|(k, x)| format!("{k}={}", cell(x))).collect();
            parts.join(" ")
        }
        other => other.to_string(),
    }
}

fn pad(indent: usize) -> String {
    " ".repeat(indent)
}

fn object(out: &mut String, entries: &[(&String, &Value)], indent: usize) {
    let has_records = entries.iter().any(|(k, _)| *k == "records");
    let width = entries
        .iter()
        .filter(|(_, v)| inline(v))
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let p = pad(indent);
    for (k, v) in entries {
        if *k == "failures" && has_records {
            continue;
        }
        if inline(v) {
            writeln!(out, "{p}{k:<width$}  {}", cell(v)).unwrap();
        } else if let Some((rows, key_col)) = table_rows(v) {
            writeln!(out, "{p}{k}:").unwrap();
            let hidden: &[&str] = if *k == "records" {
                &["data"]
            } else {
                &TABLE_HIDDEN
            };
            table(out, &rows, key_col, hidden, indent + 2);
            if *k == "theorems" {
                notes(out, &rows, indent);
            }
        } else if let Value::Object(m) = v {
            writeln!(out, "{p}{k}:").unwrap();
            let sub: Vec<(&String, &Value)> = m.iter().collect();
            object(out, &sub, indent + 2);
        } else {
            writeln!(out, "{p}{k}:").unwrap();
            for x in v.as_array().into_iter().flatten() {
                writeln!(out, "{p}  - {}", cell(x)).unwrap();
            }
        }
    }
}

/// Rows of a map of records (keyed by name) or a list of records.
fn table_rows(v: &Value) -> Option<(Vec<(Option<&String>, &Map<String, Value>)>, bool)> {
    match v {
        Value::Object(m) if !m.is_empty() && m.values().all(Value::is_object) => Some((
            m.iter()
                .map(|(k, x)| (Some(k), x.as_object().unwrap()))
                .collect(),
            true,
        )),
        Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object) => Some((
            a.iter().map(|x| (None, x.as_object().unwrap())).collect(),
            false,
        )),
        _ => None,
    }
}

fn table(
    out: &mut String,
    rows: &[(Option<&String>, &Map<String, Value>)],
    key_col: bool,
    hidden: &[&str],
    indent: usize,
) {
    let mut cols: Vec<&str> = Vec::new();
    for (_, r) in rows {
        for k in r.keys() {
            if !hidden.contains(&k.as_str()) && !cols.contains(&k.as_str()) {
                cols.push(k);
            }
        }
    }
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut head: Vec<String> = Vec::new();
    if key_col {
        head.push("name".into());
    }
    head.extend(cols.iter().map(|c| c.to_string()));
    grid.push(head);
    for (name, r) in rows {
        let mut line = Vec::new();
        if key_col {
            line.push(name.cloned().unwrap_or_default());
        }
        line.extend(cols.iter().map(|c| r.get(*c).map(cell).unwrap_or_default()));
        grid.push(line);
    }
    write_grid(out, &grid, indent);
}

fn write_grid(out: &mut String, grid: &[Vec<String>], indent: usize) {
    let ncols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|i| {
            grid.iter()
                .filter_map(|r| r.get(i))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let p = pad(indent);
    for row in grid {
        let mut line = p.clone();
        for (i, c) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(c);
            } else {
                let w = widths[i];
                write!(line, "{c:<w$}  ").unwrap();
            }
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
}

/// Failing and finding instances of a suite, one line each.
fn notes(out: &mut String, rows: &[(Option<&String>, &Map<String, Value>)], indent: usize) {
    let mut grid = vec![vec![
        "id".to_string(),
        "outcome".into(),
        "instance".into(),
        "note".into(),
    ]];
    for (_, t) in rows {
        let id = t.get("id").map(cell).unwrap_or_default();
        for r in t
            .get("records")
            .and_then(Value::as_array)
            .into_iter()
            .flatten()
        {
            let outcome = cell(&r["outcome"]);
            if outcome == "fail" || outcome == "finding" {
                grid.push(vec![
                    id.clone(),
                    outcome,
                    cell(&r["instance"]),
                    r.get("note").map(cell).unwrap_or_default(),
                ]);
            }
        }
    }
    if grid.len() > 1 {
        writeln!(out, "{}notes:", pad(indent)).unwrap();
        write_grid(out, &grid, indent + 2);
    }
}
