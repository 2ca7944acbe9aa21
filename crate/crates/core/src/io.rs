//! Flat-file formats: headerless polygon CSV and headed result tables.
//!
//! Reals are written with 17 significant digits (`{:.16e}`), which round-trips
//! every finite `f64` exactly and is read natively by gnuplot.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::error::GeometryError;
use crate::geometry::{Point2, Polygon};

#[derive(Debug, Error)]
pub enum CsvError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Formats a real with 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses `x,y` lines. Blank lines are skipped; anything else must be two reals.
pub fn parse_points(text: &str) -> Result<Vec<Point2>, CsvError> {
    let mut pts = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let malformed = |message: String| CsvError::Malformed {
            line: k + 1,
            message,
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(malformed(format!(
                "expected 2 fields, found {}",
                fields.len()
            )));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| malformed(format!("bad number {s:?}: {e}")))
        };
        pts.push(Point2::new(parse(fields[0])?, parse(fields[1])?));
    }
    Ok(pts)
}

pub fn parse_polygon(text: &str) -> Result<Polygon, CsvError> {
    Ok(Polygon::new(parse_points(text)?)?)
}

pub fn polygon_to_csv(poly: &Polygon) -> String {
    let mut out = String::new();
    for p in poly.vertices() {
        let _ = writeln!(out, "{},{}", fmt_real(p.x), fmt_real(p.y));
    }
    out
}

pub fn read_polygon(path: &Path) -> Result<Polygon, CsvError> {
    let text = std::fs::read_to_string(path).map_err(|source| CsvError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_polygon(&text)
}

/// A cell of a result table.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => fmt_real(*x),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

/// Columnar output with a header row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row arity must match header");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Reals in column `name`, skipping non-real cells.
    pub fn column(&self, name: &str) -> Vec<f64> {
        let Some(k) = self.header.iter().position(|h| h == name) else {
            return Vec::new();
        };
        self.rows
            .iter()
            .filter_map(|r| match r[k] {
                Cell::Real(x) => Some(x),
                Cell::Int(i) => Some(i as f64),
                Cell::Text(_) => None,
            })
            .collect()
    }
}
