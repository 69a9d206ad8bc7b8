use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::Result;

/// Shortest round-trip scientific representation, e.g. `7.2973525693e-3`.
/// Negative zero is written as `0e0`.
pub fn format_number(x: f64) -> String {
    format!("{:e}", x + 0.0)
}

pub struct Table {
    pub comment: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(comment: String, columns: Vec<&'static str>) -> Self {
        Self { comment, columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("# ");
        out.push_str(&self.comment);
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"comment", "meta", "columns", "rows", ...extra}`; NaN cells become null.
    pub fn to_json(&self, meta: Value, extra: Map<String, Value>) -> Result<String> {
        let mut doc = Map::new();
        doc.insert("comment".into(), json!(self.comment));
        doc.insert("meta".into(), meta);
        doc.insert("columns".into(), json!(self.columns));
        doc.insert("rows".into(), json!(self.rows));
        doc.extend(extra);
        let mut s = serde_json::to_string_pretty(&Value::Object(doc))?;
        s.push('\n');
        Ok(s)
    }
}

pub fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

pub fn to_json_string(value: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
