//! Plain-text rendering of the JSON output for `--output table`.

use std::fmt::Write;

use serde_json::Value;

/// One-line form of a value, if it has one: scalars, arrays of scalars and
/// objects whose members are all scalars.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => None,
                _ => inline(x),
            })
            .collect::<Option<Vec<_>>>()
            .map(|xs| xs.join(", ")),
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) => None,
                _ => inline(x).map(|s| format!("{k}={s}")),
            })
            .collect::<Option<Vec<_>>>()
            .map(|xs| xs.join(" ")),
    }
}

/// Rows sharing one key set whose cells all inline become a grid.
fn grid(items: &[Value]) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let first = items.first()?.as_object()?;
    let keys: Vec<String> = first.keys().cloned().collect();
    let mut rows = Vec::with_capacity(items.len());
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        let row = keys
            .iter()
            .map(|k| obj.get(k).and_then(inline))
            .collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    Some((keys, rows))
}

fn write_grid(out: &mut String, pad: &str, keys: &[String], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..keys.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([keys[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let mut s = String::from(pad);
        for (i, c) in cells.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}", w = widths[i]);
        }
        s.trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(keys));
    for r in rows {
        let _ = writeln!(out, "{}", line(r));
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            let width = m.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, x) in m {
                match (x, inline(x)) {
                    (Value::Object(_), _) | (_, None) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, x, depth + 1);
                    }
                    (_, Some(s)) => {
                        let _ = writeln!(out, "{pad}{k:<width$}  {s}");
                    }
                }
            }
        }
        Value::Array(items) => match grid(items) {
            Some((keys, rows)) => write_grid(out, &pad, &keys, &rows),
            None => {
                for (i, x) in items.iter().enumerate() {
                    match inline(x) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}[{i}] {s}");
                        }
                        None => {
                            let _ = writeln!(out, "{pad}[{i}]");
                            write_value(out, x, depth + 1);
                        }
                    }
                }
            }
        },
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other).unwrap_or_default());
        }
    }
}

pub fn table(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.truncate(out.trim_end().len());
    out
}
