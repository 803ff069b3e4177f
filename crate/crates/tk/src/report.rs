//! Command reports and their json/csv/text renderings.

use std::collections::BTreeMap;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub results: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            params: BTreeMap::new(),
            passed: true,
            results: BTreeMap::new(),
            table: None,
            counterexample: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    /// Record a failure; the first counterexample wins.
    pub fn fail(&mut self, counterexample: impl Into<String>) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample.into());
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some(t) => {
                w.write_record(&t.columns)?;
                for row in &t.rows {
                    w.write_record(row.iter().map(cell))?;
                }
            }
            None => {
                w.write_record(["key", "value"])?;
                w.write_record(["passed", &self.passed.to_string()])?;
                for (k, v) in &self.results {
                    w.write_record([k.as_str(), &cell(v)])?;
                }
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn render_text(&self) -> String {
        let mut s = self.command.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(" --{k} {}", cell(v)));
        }
        s.push('\n');
        for (k, v) in &self.results {
            s.push_str(&format!("{k}: {}\n", cell(v)));
        }
        if let Some(t) = &self.table {
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(cell).collect())
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r.get(c).map_or(0, String::len))
                        .chain([t.columns[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                row.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            s.push_str(&line(&t.columns));
            s.push('\n');
            for r in &cells {
                s.push_str(&line(r));
                s.push('\n');
            }
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("counterexample: {c}\n"));
        }
        s.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
