//! Command results and their pretty, JSON and CSV renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_traits::ToPrimitive;
use schurq_core::Rational;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Json,
    Csv,
}

/// Outcome of a command; `passed` is false only for checks that failed.
#[derive(Clone, Debug)]
pub struct Report {
    pub passed: bool,
    pub pretty: String,
    pub json: Value,
    pub table: Table,
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => {
                let mut s = self.pretty.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                for row in std::iter::once(&self.table.header).chain(&self.table.rows) {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    let _ = writeln!(s, "{}", cells.join(","));
                }
                s
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Exact rationals travel as `"p/q"` strings.
pub fn rational_json(r: &Rational) -> Value {
    json!(r.to_string())
}

/// Decimal approximation for CSV columns.
pub fn decimal(r: &Rational) -> String {
    r.to_f64().map_or_else(|| "nan".into(), float)
}

/// Shortest round-tripping form, so output is byte-stable.
pub fn float(x: f64) -> String {
    format!("{x:e}")
}

pub fn pass_fail(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurq_core::exactring::rat;

    #[test]
    fn renderings() {
        let mut table = Table::new(&["key", "value"]);
        table.push(vec!["a,b".into(), "1/2".into()]);
        let r = Report { passed: true, pretty: "hello".into(), json: json!({"v": rational_json(&rat(1, 2))}), table };
        assert_eq!(r.render(Format::Pretty), "hello\n");
        assert_eq!(r.render(Format::Json), "{\n  \"v\": \"1/2\"\n}\n");
        assert_eq!(r.render(Format::Csv), "key,value\n\"a,b\",1/2\n");
        assert_eq!(decimal(&rat(1, 24)), "4.1666666666666664e-2");
    }
}
