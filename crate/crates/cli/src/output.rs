//! Rendering of command results as plain text, CSV, markdown or JSON.

use std::io;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

/// One scalar answer with the inputs that produced it.
#[derive(Clone, Debug)]
pub struct ValueReport {
    pub inputs: Vec<(String, Value)>,
    pub method: String,
    pub value: f64,
    pub residual: Option<f64>,
    pub decimals: usize,
}

/// Rows of pre-formatted cells; an empty cell means "not available".
#[derive(Clone, Debug)]
pub struct TableReport {
    pub inputs: Vec<(String, Value)>,
    pub method: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Largest absolute residual over the rows, where one is defined.
    pub residual: Option<f64>,
}

#[derive(Clone, Debug)]
pub enum Report {
    Value(ValueReport),
    Table(TableReport),
}

pub fn fixed(x: f64, decimals: usize) -> String {
    format!("{x:.decimals$}")
}

pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

/// Residuals are printed in scientific notation so that tiny values survive.
fn residual_cell(r: Option<f64>) -> String {
    r.map(|r| format!("{r:.3e}")).unwrap_or_default()
}

fn cell_json(s: &str) -> Value {
    if s.is_empty() {
        return Value::Null;
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => json!(x),
        _ => json!(s),
    }
}

fn input_map(inputs: &[(String, Value)]) -> Value {
    Value::Object(inputs.iter().cloned().collect::<Map<_, _>>())
}

fn input_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn render(&self, format: Option<Format>) -> io::Result<String> {
        match (self, format) {
            (Report::Value(v), None) => Ok(format!("{}\n", fixed(v.value, v.decimals))),
            (Report::Value(v), Some(f)) => {
                let mut columns: Vec<String> = v.inputs.iter().map(|(k, _)| k.clone()).collect();
                columns.extend(["method", "value", "residual"].map(String::from));
                let mut row: Vec<String> = v.inputs.iter().map(|(_, x)| input_cell(x)).collect();
                row.extend([v.method.clone(), fixed(v.value, v.decimals), residual_cell(v.residual)]);
                match f {
                    Format::Csv => csv_string(&columns, &[row]),
                    Format::Markdown => Ok(markdown(&columns, &[row])),
                    Format::Json => Ok(pretty(&json!({
                        "inputs": input_map(&v.inputs),
                        "method": v.method,
                        "value": cell_json(&fixed(v.value, v.decimals)),
                        "residual": v.residual,
                    }))),
                }
            }
            (Report::Table(t), None | Some(Format::Csv)) => csv_string(&t.columns, &t.rows),
            (Report::Table(t), Some(Format::Markdown)) => Ok(markdown(&t.columns, &t.rows)),
            (Report::Table(t), Some(Format::Json)) => {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|r| {
                        Value::Object(t.columns.iter().cloned().zip(r.iter().map(|c| cell_json(c))).collect())
                    })
                    .collect();
                Ok(pretty(&json!({
                    "inputs": input_map(&t.inputs),
                    "method": t.method,
                    "value": rows,
                    "residual": t.residual,
                })))
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn markdown(columns: &[String], rows: &[Vec<String>]) -> String {
    let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
    let mut out = line(columns);
    out.push_str(&format!("|{}\n", "---|".repeat(columns.len())));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn csv_string(columns: &[String], rows: &[Vec<String>]) -> io::Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(columns)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 strings"))
}

/// Parsed CSV: header row and data rows.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}

/// Reads the CSV dialect written by this tool.
pub fn read_csv(text: &str) -> csv::Result<CsvTable> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header = r.headers()?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
        .collect::<csv::Result<_>>()?;
    Ok(CsvTable { header, rows })
}
