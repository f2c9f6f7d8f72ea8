//! CSV point I/O and SVG overlay plots.

mod svg;

pub use svg::emit_svg;

use std::fmt::Display;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::chain::Polyline;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which CSV columns hold coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Columns {
    #[default]
    All,
    /// Zero-based column indices, in coordinate order.
    Select(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvSchema {
    delimiter: u8,
    pub has_header: bool,
    pub columns: Columns,
}

impl Default for CsvSchema {
    fn default() -> Self {
        CsvSchema {
            delimiter: b',',
            has_header: false,
            columns: Columns::All,
        }
    }
}

impl CsvSchema {
    /// Sets the field delimiter. It must be a single ASCII character that
    /// cannot appear inside a formatted number.
    pub fn with_delimiter(mut self, delimiter: char) -> Result<Self> {
        let ok = delimiter.is_ascii()
            && !delimiter.is_ascii_alphanumeric()
            && !matches!(delimiter, '.' | '-' | '+' | '/' | '"' | '\n' | '\r');
        if !ok {
            return Err(Error::invalid(format!("unusable delimiter {delimiter:?}")));
        }
        self.delimiter = delimiter as u8;
        Ok(self)
    }

    pub fn with_header(mut self, has_header: bool) -> Self {
        self.has_header = has_header;
        self
    }

    pub fn with_columns(mut self, columns: Columns) -> Self {
        self.columns = columns;
        self
    }

    pub fn delimiter(&self) -> char {
        self.delimiter as char
    }
}

/// Reads one point per CSV row, in file order.
///
/// Parse errors carry the 1-based line number and 1-based column of the
/// offending field.
pub fn read_points<T, R>(source: R, schema: &CsvSchema) -> Result<Polyline<T>>
where
    T: Scalar + FromStr,
    R: Read,
{
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(schema.delimiter)
        .has_headers(schema.has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);

    let mut coords = Vec::new();
    let mut dim = None;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let row = e.position().map_or(0, |p| p.line());
            Error::Parse {
                row,
                column: 0,
                message: e.to_string(),
            }
        })?;
        let row = record.position().map_or(0, |p| p.line());
        let indices: Vec<usize> = match &schema.columns {
            Columns::All => (0..record.len()).collect(),
            Columns::Select(cols) => cols.clone(),
        };
        match dim {
            None => dim = Some(indices.len()),
            Some(d) if d != indices.len() => {
                return Err(Error::Parse {
                    row,
                    column: 0,
                    message: format!("expected {d} coordinates, found {}", indices.len()),
                })
            }
            Some(_) => {}
        }
        for col in indices {
            let field = record.get(col).ok_or_else(|| Error::Parse {
                row,
                column: col + 1,
                message: "missing field".into(),
            })?;
            let value = field
                .parse::<T>()
                .ok()
                .filter(Scalar::is_finite_value)
                .ok_or_else(|| Error::Parse {
                    row,
                    column: col + 1,
                    message: format!("{field:?} is not a finite number"),
                })?;
            coords.push(value);
        }
    }

    match dim {
        Some(d) if d > 0 => Polyline::from_flat(coords, d),
        Some(_) => Err(Error::invalid("rows contain no coordinates")),
        None => Err(Error::invalid("polyline needs at least 2 points, got 0")),
    }
}

/// Writes one row per point with LF line endings.
///
/// Floats are printed in their shortest round-trip form, so reading the
/// output back reproduces every coordinate bit for bit.
pub fn write_points<T, W>(p: &Polyline<T>, schema: &CsvSchema, mut sink: W) -> Result<()>
where
    T: Display,
    W: Write,
{
    let delim = schema.delimiter as char;
    let mut line = String::new();
    if schema.has_header {
        for a in 0..p.dim() {
            if a > 0 {
                line.push(delim);
            }
            line.push_str(&format!("x{a}"));
        }
        line.push('\n');
        sink.write_all(line.as_bytes())?;
    }
    for point in p.points() {
        line.clear();
        for (a, c) in point.iter().enumerate() {
            if a > 0 {
                line.push(delim);
            }
            line.push_str(&c.to_string());
        }
        line.push('\n');
        sink.write_all(line.as_bytes())?;
    }
    Ok(())
}
