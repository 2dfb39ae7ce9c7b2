//! Report assembly and the three output formats.
//!
//! Machine formats carry 15 significant digits, tables 6. Every report
//! embeds its schema string, e.g. `dunkl.spectrum.v1`.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: &str = "v1";

/// Significant digits in JSON and CSV.
pub const MACHINE_DIGITS: usize = 15;
/// Significant digits in text tables.
pub const TABLE_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
    Null,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(i64::from(x))
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        i64::try_from(x).map(Cell::Int).unwrap_or_else(|_| Cell::Text(x.to_string()))
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::from(x as u64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_owned())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Null, Into::into)
    }
}

impl From<[f64; 3]> for Cell {
    fn from(x: [f64; 3]) -> Self {
        Cell::Text(x.iter().map(|v| fmt_machine(*v)).collect::<Vec<_>>().join(","))
    }
}

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().expect("formatted float parses")
}

/// Shortest decimal form of `x` rounded to 15 significant digits.
pub fn fmt_machine(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round_sig(x, MACHINE_DIGITS);
    if r == 0.0 {
        return "0".into();
    }
    let mag = r.abs();
    if (1e-5..1e15).contains(&mag) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// `x` with `digits` significant digits, fixed or scientific by magnitude.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return fmt_machine(x);
    }
    if x == 0.0 {
        return "0".into();
    }
    let r = round_sig(x, digits);
    let exp = r.abs().log10().floor() as i32;
    if (-4..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{r:.decimals$}")
    } else {
        format!("{:.*e}", digits - 1, r)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Overall verdict for commands that check something.
    pub passed: Option<bool>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self { command, params: Vec::new(), columns, rows: Vec::new(), passed: None, notes: Vec::new() }
    }

    pub fn param(&mut self, key: &'static str, value: impl Into<Cell>) -> &mut Self {
        self.params.push((key, value.into()));
        self
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn schema(&self) -> String {
        format!("dunkl.{}.{}", self.command, SCHEMA_VERSION)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    pub fn to_json_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema".into(), Value::String(self.schema()));
        obj.insert("command".into(), Value::String(self.command.into()));
        obj.insert("params".into(), Value::Object(self.params.iter().map(|(k, v)| ((*k).to_owned(), json_cell(v))).collect()));
        let rows = self
            .rows
            .iter()
            .map(|row| Value::Object(self.columns.iter().zip(row).map(|(k, v)| ((*k).to_owned(), json_cell(v))).collect()))
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        if let Some(p) = self.passed {
            obj.insert("passed".into(), Value::Bool(p));
        }
        obj.insert("notes".into(), Value::Array(self.notes.iter().cloned().map(Value::String).collect()));
        Value::Object(obj)
    }

    fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("JSON values serialize");
        s.push('\n');
        s
    }

    fn to_csv(&self) -> String {
        let mut out = format!("# schema={}\n", self.schema());
        for n in &self.notes {
            let _ = writeln!(out, "# note: {n}");
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(csv_cell)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input"));
        out
    }

    fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.schema());
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", table_cell(v))).collect();
        if !params.is_empty() {
            let _ = writeln!(out, "{}", params.join("  "));
        }
        if self.rows.is_empty() {
            let _ = writeln!(out, "(no rows)");
        } else {
            let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(table_cell).collect()).collect();
            let widths: Vec<usize> = self
                .columns
                .iter()
                .enumerate()
                .map(|(j, c)| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0).max(c.chars().count()))
                .collect();
            let numeric: Vec<bool> = (0..self.columns.len())
                .map(|j| self.rows.iter().all(|r| matches!(r[j], Cell::Int(_) | Cell::Real(_) | Cell::Null)))
                .collect();
            let line = |fields: &[String]| -> String {
                let parts: Vec<String> = fields
                    .iter()
                    .enumerate()
                    .map(|(j, f)| if numeric[j] { format!("{f:>w$}", w = widths[j]) } else { format!("{f:<w$}", w = widths[j]) })
                    .collect();
                parts.join("  ").trim_end().to_owned()
            };
            let header: Vec<String> = self.columns.iter().map(|c| (*c).to_owned()).collect();
            let _ = writeln!(out, "{}", line(&header));
            let _ = writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some(p) = self.passed {
            let _ = writeln!(out, "{}", if p { "PASS" } else { "FAIL" });
        }
        out
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Int(i) => Value::Number((*i).into()),
        Cell::Real(x) => Number::from_f64(round_sig(*x, MACHINE_DIGITS)).map_or(Value::Null, Value::Number),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Null => Value::Null,
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Int(i) => i.to_string(),
        Cell::Real(x) => fmt_machine(*x),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Null => String::new(),
    }
}

fn table_cell(c: &Cell) -> String {
    match c {
        Cell::Real(x) => fmt_sig(*x, TABLE_DIGITS),
        Cell::Null => "-".into(),
        other => csv_cell(other),
    }
}
