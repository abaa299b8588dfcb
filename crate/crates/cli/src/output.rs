//! JSON lines, or a plain aligned table for reading in a terminal.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::Format;

pub struct Sink {
    format: Format,
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Self { format }
    }

    /// A single object.
    pub fn one<T: Serialize>(&self, item: &T) -> anyhow::Result<()> {
        let value = serde_json::to_value(item)?;
        let mut out = io::stdout().lock();
        match self.format {
            Format::Json => writeln!(out, "{value}")?,
            Format::Table => {
                let fields = as_object(&value);
                let width = fields.keys().map(String::len).max().unwrap_or(0);
                for (key, v) in &fields {
                    writeln!(out, "{key:<width$}  {}", cell(v))?;
                }
            }
        }
        Ok(())
    }

    /// Homogeneous rows, one line each.
    pub fn many<T: Serialize>(&self, items: &[T]) -> anyhow::Result<()> {
        let mut out = io::stdout().lock();
        if self.format == Format::Json {
            for item in items {
                writeln!(out, "{}", serde_json::to_string(item)?)?;
            }
            return Ok(());
        }
        let rows: Vec<Value> = items.iter().map(serde_json::to_value).collect::<Result<_, _>>()?;
        // Columns in first-seen order across all rows, since optional fields are skipped.
        let mut columns: Vec<String> = Vec::new();
        for row in &rows {
            for key in as_object(row).keys() {
                if !columns.contains(key) {
                    columns.push(key.clone());
                }
            }
        }
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|row| {
                let obj = as_object(row);
                columns.iter().map(|c| obj.get(c).map(cell).unwrap_or_default()).collect()
            })
            .collect();
        let widths: Vec<usize> = columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |fields: &[String]| {
            fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(&columns))?;
        for row in &cells {
            writeln!(out, "{}", line(row))?;
        }
        Ok(())
    }

    /// Closing line of a stream.
    pub fn summary<T: Serialize>(&self, summary: &T) -> anyhow::Result<()> {
        match self.format {
            Format::Json => {
                let mut wrapped = Map::new();
                wrapped.insert("summary".into(), serde_json::to_value(summary)?);
                writeln!(io::stdout().lock(), "{}", Value::Object(wrapped))?;
                Ok(())
            }
            Format::Table => {
                writeln!(io::stdout().lock(), "--")?;
                self.one(summary)
            }
        }
    }
}

fn as_object(value: &Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m.clone(),
        other => Map::from_iter([("value".to_string(), other.clone())]),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
