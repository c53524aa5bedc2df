//! Tabular output as CSV or JSON with byte-stable formatting.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Number, Value as Json};

use crate::error::{CliError, Result};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    /// An integer of any size, written as a decimal string in JSON.
    Big(String),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    pub fn float_opt(x: Option<f64>) -> Cell {
        x.map_or(Cell::Empty, Cell::Float)
    }

    fn to_csv_field(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Float(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Cell::Int(v) => Json::from(*v),
            Cell::Big(s) | Cell::Text(s) => Json::String(s.clone()),
            Cell::Float(x) => Number::from_f64(*x).map_or_else(|| Json::String(format_float(*x)), Json::Number),
            Cell::Bool(b) => Json::Bool(*b),
            Cell::Empty => Json::Null,
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        i64::try_from(v).map_or_else(|_| Cell::Big(v.to_string()), Cell::Int)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::from(v as u64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&num_bigint::BigUint> for Cell {
    fn from(v: &num_bigint::BigUint) -> Self {
        Cell::Big(v.to_string())
    }
}

/// Floats with 17 significant digits; non-finite values as `inf`, `-inf`, `NaN`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format `{s}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// A table with a fixed column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width differs from header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json()),
        }
    }

    /// CSV with a header row and LF line endings.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::to_csv_field))?;
        }
        let bytes = writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }

    /// `{"columns": [...], "rows": [{...}, ...]}` with keys sorted inside each row.
    pub fn to_json(&self) -> String {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                let obj: BTreeMap<&str, Json> =
                    self.columns.iter().map(String::as_str).zip(row.iter().map(Cell::to_json)).collect();
                Json::Object(obj.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
            })
            .collect();
        let mut top = Map::new();
        top.insert("columns".into(), Json::from(self.columns.clone()));
        top.insert("rows".into(), Json::Array(rows));
        let mut out = serde_json::to_string_pretty(&Json::Object(top)).expect("JSON serialization cannot fail");
        out.push('\n');
        out
    }

    /// Reads CSV back as text cells.
    pub fn parse_csv(text: &str) -> Result<Vec<BTreeMap<String, String>>> {
        let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        reader
            .records()
            .map(|rec| {
                let rec = rec?;
                Ok(header.iter().cloned().zip(rec.iter().map(str::to_string)).collect())
            })
            .collect()
    }

    /// Reads JSON back as text cells, using the CSV spelling of each value.
    pub fn parse_json(text: &str) -> Result<Vec<BTreeMap<String, String>>> {
        let value: Json = serde_json::from_str(text)?;
        let rows = value.get("rows").and_then(Json::as_array).ok_or_else(|| CliError::Usage("missing rows".into()))?;
        rows.iter()
            .map(|row| {
                let obj = row.as_object().ok_or_else(|| CliError::Usage("row is not an object".into()))?;
                Ok(obj
                    .iter()
                    .map(|(k, v)| {
                        let text = match v {
                            Json::Null => String::new(),
                            Json::String(s) => s.clone(),
                            Json::Number(n) if n.is_f64() => format_float(n.as_f64().unwrap_or(f64::NAN)),
                            other => other.to_string(),
                        };
                        (k.clone(), text)
                    })
                    .collect())
            })
            .collect()
    }
}
