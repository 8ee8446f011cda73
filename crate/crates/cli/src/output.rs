//! Rendering of tables and verification reports. Big integers are always
//! printed as exact decimal strings.

use std::io::{self, Write};

use clap::ValueEnum;
use comtuples::verify::CheckReport;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Table {
    pub title: String,
    pub params: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn write(&self, out: &mut impl Write, format: Format) -> io::Result<()> {
        match format {
            Format::Text => {
                writeln!(out, "# {}", self.title)?;
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| {
                        self.rows
                            .iter()
                            .map(|r| r[c].len())
                            .chain([self.columns[c].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(cell, w)| format!("{cell:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(self.columns.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join(","))?;
                }
                Ok(())
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (col, cell) in self.columns.iter().zip(row) {
                            // n stays a JSON number, values stay strings
                            let v = if *col == "n" {
                                json!(cell.parse::<u64>().expect("row index"))
                            } else {
                                json!(cell)
                            };
                            obj.insert(col.to_string(), v);
                        }
                        Value::Object(obj)
                    })
                    .collect();
                write_json(out, &json!({ "params": self.params, "rows": rows }))
            }
        }
    }
}

fn write_json(out: &mut impl Write, v: &Value) -> io::Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(io::Error::other)?;
    writeln!(out, "{text}")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One report is written as a single JSON object, several as an array.
pub fn write_reports(out: &mut impl Write, reports: &[CheckReport], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let v = if let [single] = reports {
                serde_json::to_value(single)
            } else {
                serde_json::to_value(reports)
            }
            .map_err(io::Error::other)?;
            write_json(out, &v)
        }
        Format::Csv => {
            writeln!(out, "suite,params,lhs,rhs,pass")?;
            for r in reports {
                for row in &r.rows {
                    let params = serde_json::to_string(&row.params).map_err(io::Error::other)?;
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.suite,
                        csv_field(&params),
                        csv_field(&row.lhs),
                        csv_field(&row.rhs),
                        row.pass
                    )?;
                }
            }
            Ok(())
        }
        Format::Text => {
            for r in reports {
                let failed = r.failures().count();
                let params = serde_json::to_string(&r.params).map_err(io::Error::other)?;
                writeln!(
                    out,
                    "{:<11} {}  {} rows, {} failed  {}",
                    r.suite,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.rows.len(),
                    failed,
                    params
                )?;
                for row in r.failures() {
                    let p = serde_json::to_string(&row.params).map_err(io::Error::other)?;
                    writeln!(out, "    mismatch {p}: {} != {}", row.lhs, row.rhs)?;
                }
            }
            let all = reports.iter().all(|r| r.pass);
            writeln!(out, "overall: {}", if all { "PASS" } else { "FAIL" })
        }
    }
}
