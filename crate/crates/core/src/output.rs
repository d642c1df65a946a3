//! Machine-readable records emitted by the command-line front end.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::expectation::ExpectationTriangle;
use crate::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
    pub metadata: Metadata,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub label: String,
    /// Lossless integer or `numerator/denominator` text.
    pub value: String,
    /// Rounded rendering; approximate by construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_decimal: Option<String>,
    /// Set for statistical summaries, where `value` is only the exact
    /// spelling of the rounded decimal.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub approximate: bool,
}

impl ResultEntry {
    pub fn exact(&self) -> Result<ExactRational> {
        self.value
            .parse()
            .map_err(|_| Error::Domain(format!("{:?} is not an exact rational", self.value)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Default for Metadata {
    fn default() -> Self {
        Metadata {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            rng_id: None,
            seed: None,
        }
    }
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            metadata: Metadata::default(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Appends an exact value, rendered to `digits` fractional digits when asked.
    pub fn push(&mut self, label: impl Into<String>, value: &ExactRational, digits: Option<u32>) {
        self.results.push(ResultEntry {
            label: label.into(),
            value: value.to_string(),
            approx_decimal: digits.map(|d| Decimal::from_rational(value, d).to_string()),
            approximate: false,
        });
    }

    /// Appends a decimal summary; its exact rational spelling becomes the value.
    pub fn push_decimal(&mut self, label: impl Into<String>, value: &Decimal) {
        self.results.push(ResultEntry {
            label: label.into(),
            value: value.to_rational().to_string(),
            approx_decimal: Some(value.to_string()),
            approximate: true,
        });
    }

    pub fn get(&self, label: &str) -> Option<&ResultEntry> {
        self.results.iter().find(|r| r.label == label)
    }

    pub fn write_json<W: Write>(&self, out: W) -> io::Result<()> {
        let mut out = out;
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("bad output record: {e}")))
    }

    /// `label,value,approx_decimal,approximate` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["label", "value", "approx_decimal", "approximate"])?;
        for r in &self.results {
            let flag = if r.approximate { "true" } else { "false" };
            writer.write_record([&r.label, &r.value, r.approx_decimal.as_deref().unwrap_or(""), flag])?;
        }
        writer.flush()
    }

    pub fn write_table<W: Write>(&self, mut out: W) -> io::Result<()> {
        let width = self.results.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.results {
            match &r.approx_decimal {
                Some(d) if r.approximate => writeln!(out, "{:<width$}  ≈{d}", r.label)?,
                Some(d) => writeln!(out, "{:<width$}  {}  (≈{d})", r.label, r.value)?,
                None => writeln!(out, "{:<width$}  {}", r.label, r.value)?,
            }
        }
        if let Some(rng) = &self.metadata.rng_id {
            writeln!(out, "rng: {rng}, seed {}", self.metadata.seed.unwrap_or_default())?;
        }
        Ok(())
    }
}

/// Reads [`OutputRecord::write_csv`] rows back.
pub fn read_csv_entries(text: &str) -> Result<Vec<ResultEntry>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|row| {
            let row = row.map_err(|e| Error::Domain(format!("bad csv: {e}")))?;
            Ok(ResultEntry {
                label: row[0].to_string(),
                value: row[1].to_string(),
                approx_decimal: Some(row[2].to_string()).filter(|d| !d.is_empty()),
                approximate: &row[3] == "true",
            })
        })
        .collect()
}

pub fn triangle_label(n: usize, m: usize) -> String {
    format!("S({n},{m})")
}

/// Triangle as CSV with header `n,m,value`.
pub fn write_triangle_csv<W: Write>(table: &ExpectationTriangle, out: W) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["n", "m", "value"])?;
    for (n, m, v) in table.entries() {
        writer.write_record([n.to_string(), m.to_string(), v.to_string()])?;
    }
    writer.flush()
}

pub fn triangle_record(table: &ExpectationTriangle, digits: Option<u32>) -> OutputRecord {
    let mut record = OutputRecord::new("triangle").param("n_max", table.n_max());
    for (n, m, v) in table.entries() {
        record.push(triangle_label(n, m), v, digits);
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expectation::triangle;

    fn rat(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p.into(), q.into())
    }

    #[test]
    fn json_roundtrip_preserves_exact_values() {
        let mut record = OutputRecord::new("expect").param("n", 10);
        record.push("expected_total", &rat(58537, 512), Some(5));
        record.push("integer", &rat(12, 1), None);
        let mut buf = Vec::new();
        record.write_json(&mut buf).unwrap();
        let back = OutputRecord::from_json(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back, record);
        assert_eq!(back.get("expected_total").unwrap().exact().unwrap(), rat(58537, 512));
        assert_eq!(back.get("integer").unwrap().value, "12");
    }

    #[test]
    fn csv_and_json_agree() {
        let table = triangle(6);
        let record = triangle_record(&table, Some(3));
        let mut buf = Vec::new();
        record.write_csv(&mut buf).unwrap();
        let rows = read_csv_entries(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(rows, record.results);
    }

    #[test]
    fn triangle_csv_header() {
        let mut buf = Vec::new();
        write_triangle_csv(&triangle(2), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "n,m,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,3/2\n2,2,1\n");
    }

    #[test]
    fn table_marks_decimals_as_approximate() {
        let mut record = OutputRecord::new("expect");
        record.push("expected_total", &rat(7, 2), Some(1));
        let mut buf = Vec::new();
        record.write_table(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "expected_total  7/2  (≈3.5)\n");
    }
}
