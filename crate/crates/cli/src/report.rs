//! Rendering of command results as JSON, CSV or text.
//!
//! JSON objects go through `serde_json::Map`, which keeps keys sorted, so
//! identical inputs give byte-identical output. Rationals are strings.

use ckalg_core::ck_matrix::GeneratorLabel;
use ckalg_core::cohomology::TwoCochain;
use ckalg_core::lie::LieAlgebra;
use ckalg_core::scalars::Rational;
use serde_json::{json, Value};

use crate::config::Format;
use crate::CliError;

/// Everything a command produced, in all three formats.
pub struct Report {
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub text: String,
    /// Printed to stderr for CSV output, so the table stays clean.
    pub summary: Option<String>,
    /// Whether every check passed.
    pub ok: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(CliError::io)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).map_err(CliError::io)?;
                for row in &self.csv_rows {
                    w.write_record(row).map_err(CliError::io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::io(e.into_error()))?;
                String::from_utf8(bytes).map_err(CliError::io)
            }
            Format::Text => Ok(self.text.clone()),
        }
    }
}

pub fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn label(alg: &LieAlgebra, i: usize) -> GeneratorLabel {
    alg.label(i)
}

/// `{pairs: [{i, j, label_i, label_j, c}]}`.
pub fn cochain_json(alg: &LieAlgebra, xi: &TwoCochain) -> Value {
    let pairs: Vec<Value> = xi
        .entries()
        .map(|(&(i, j), c)| {
            json!({
                "i": i,
                "j": j,
                "label_i": label(alg, i).to_string(),
                "label_j": label(alg, j).to_string(),
                "c": rat(c),
            })
        })
        .collect();
    json!({ "pairs": pairs })
}

/// `c1 X + c2 Y` with unit coefficients elided.
pub fn combination_text(terms: &[(GeneratorLabel, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (l, c)) in terms.iter().enumerate() {
        let neg = c.signum() < 0;
        let mag = c.abs();
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if !mag.is_one() {
            s.push_str(&format!("{mag} "));
        }
        s.push_str(&l.to_string());
    }
    s
}
