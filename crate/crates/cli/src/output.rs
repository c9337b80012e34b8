use std::io::{self, IsTerminal, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn resolve(requested: Option<OutputFormat>) -> OutputFormat {
        requested.unwrap_or_else(|| {
            if io::stdout().is_terminal() {
                OutputFormat::Text
            } else {
                OutputFormat::Json
            }
        })
    }
}

/// Rows sharing one column list. Every command puts `index` and `graph6`
/// first and `error` last; absent values are JSON null.
pub struct Table {
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Table {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    /// Appends a row from `(column, value)` pairs; unnamed columns stay null.
    pub fn push(&mut self, fields: Vec<(&str, Value)>) {
        let mut row = vec![Value::Null; self.columns.len()];
        for (key, value) in fields {
            let slot = self
                .columns
                .iter()
                .position(|c| *c == key)
                .unwrap_or_else(|| panic!("unknown column {key}"));
            row[slot] = value;
        }
        self.rows.push(row);
    }

    pub fn write(&self, format: OutputFormat, out: &mut impl Write) -> io::Result<()> {
        match format {
            OutputFormat::Json => {
                for row in &self.rows {
                    let record: Map<String, Value> = self
                        .columns
                        .iter()
                        .map(|c| c.to_string())
                        .zip(row.iter().cloned())
                        .collect();
                    serde_json::to_writer(&mut *out, &record)?;
                    writeln!(out)?;
                }
                Ok(())
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(cell))?;
                }
                w.flush()
            }
            OutputFormat::Text => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|row| row.iter().map(cell).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.columns[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |fields: Vec<&str>, out: &mut dyn Write| {
                    let padded: Vec<String> = fields
                        .iter()
                        .zip(&widths)
                        .map(|(f, w)| format!("{f:<w$}"))
                        .collect();
                    writeln!(out, "{}", padded.join("  ").trim_end())
                };
                line(self.columns.to_vec(), out)?;
                for row in &cells {
                    line(row.iter().map(String::as_str).collect(), out)?;
                }
                Ok(())
            }
        }
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => format!("{:.3}", n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
