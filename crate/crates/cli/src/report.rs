//! Reports: a list of records, each rendered as a block of `key=value` lines
//! in text mode or as one JSON object per line.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    JsonLines,
}

/// One result object. `kind` becomes the `record` field in JSON; `grid` lines
/// are text-only renderings of data already present in the fields.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub kind: &'static str,
    pub fields: Vec<(&'static str, Value)>,
    pub grid: Vec<String>,
}

impl Record {
    pub fn new(kind: &'static str) -> Self {
        Record {
            kind,
            fields: Vec::new(),
            grid: Vec::new(),
        }
    }

    pub fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn ser(self, key: &'static str, value: &impl serde::Serialize) -> Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.field(key, v)
    }

    pub fn grid(mut self, lines: Vec<String>) -> Self {
        self.grid = lines;
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("record".into(), Value::String(self.kind.into()));
        for (k, v) in &self.fields {
            map.insert((*k).into(), v.clone());
        }
        Value::Object(map)
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(text_value).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    for r in records {
        match format {
            Format::JsonLines => {
                let _ = writeln!(out, "{}", r.to_json());
            }
            Format::Text => {
                let _ = writeln!(out, "{}", r.kind);
                for (k, v) in &r.fields {
                    let _ = writeln!(out, "  {k}={}", text_value(v));
                }
                for line in &r.grid {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
    }
    out
}

/// A Cayley table as text rows.
pub fn table_lines(rows: &[Vec<usize>]) -> Vec<String> {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|x| format!("{x:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

/// An eggbox: rows are R-classes, columns L-classes, cells H-classes; `*`
/// marks a cell holding an idempotent.
pub fn eggbox_lines(cells: &[Vec<Vec<usize>>], idempotents: &[usize]) -> Vec<String> {
    let text: Vec<Vec<String>> = cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| {
                    let star = if cell.iter().any(|x| idempotents.contains(x)) {
                        "*"
                    } else {
                        ""
                    };
                    let body = cell
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("{star}{body}")
                })
                .collect()
        })
        .collect();
    let ncols = text.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            text.iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let rule = format!(
        "+{}+",
        widths
            .iter()
            .map(|w| "-".repeat(w + 2))
            .collect::<Vec<_>>()
            .join("+")
    );
    let mut out = vec![rule.clone()];
    for row in &text {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!(" {s}{} ", " ".repeat(w - s.chars().count())))
            .collect();
        out.push(format!("|{}|", cells.join("|")));
        out.push(rule.clone());
    }
    out
}
