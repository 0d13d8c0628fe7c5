//! Table renderings: aligned text, CSV and JSON.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::table::CoefficientRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
pub enum Format {
    #[default]
    Pretty,
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "J,M,m1,m2,exact,value";

pub fn render(records: &[CoefficientRecord], format: Format) -> Result<String> {
    match format {
        Format::Pretty => Ok(render_pretty(records)),
        Format::Csv => render_csv(records),
        Format::Json => render_json(records),
    }
}

pub fn render_pretty(records: &[CoefficientRecord]) -> String {
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.j.to_string(),
                r.m.to_string(),
                r.m1.to_string(),
                r.m2.to_string(),
                r.exact.to_string(),
                r.value.clone(),
            ]
        })
        .collect();
    let header = ["J", "M", "m1", "m2", "exact", "value"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: [&str; 6]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            // quantum numbers and values right-aligned, the exact form left-aligned
            if i == 4 {
                s.push_str(&format!("{cell:<w$}"));
            } else {
                s.push_str(&format!("{cell:>w$}"));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for row in &rows {
        out.push_str(&line([
            &row[0], &row[1], &row[2], &row[3], &row[4], &row[5],
        ]));
    }
    out
}

pub fn render_csv(records: &[CoefficientRecord]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        writer.serialize(r)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn render_json(records: &[CoefficientRecord]) -> Result<String> {
    Ok(serde_json::to_string_pretty(records)? + "\n")
}

pub fn parse_csv(text: &str) -> Result<Vec<CoefficientRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|r| r.map_err(Into::into))
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<CoefficientRecord>> {
    Ok(serde_json::from_str(text)?)
}
