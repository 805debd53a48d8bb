//! Deterministic number formatting and table emission.
//!
//! Numbers are rounded to the configured count of significant digits, then
//! printed in their shortest round-tripping decimal form. CSV uses `.` as
//! the decimal separator, `,` as the field separator, LF line endings, and
//! always carries a header row, so identical invocations produce
//! byte-identical files.

use std::io::Write;
use std::path::Path;

/// Round to `precision` significant digits.
fn round_sig(v: f64, precision: usize) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{:.*e}", precision.saturating_sub(1), v)
        .parse()
        .unwrap_or(v)
}

/// Shortest decimal representation of `v` rounded to `precision`
/// significant digits. Plain notation in a readable magnitude window,
/// scientific outside it.
pub fn fmt_num(v: f64, precision: usize) -> String {
    let r = round_sig(v, precision);
    if r == 0.0 {
        return "0".to_string();
    }
    if !r.is_finite() {
        return r.to_string();
    }
    let mag = r.abs();
    if (1e-5..1e16).contains(&mag) {
        // Display already prints the shortest string that parses back
        format!("{r}")
    } else {
        let s = format!("{:.*e}", precision.saturating_sub(1), r);
        // trim trailing zeros in the mantissa: "8.26000000000e11" -> "8.26e11"
        match s.split_once('e') {
            Some((mantissa, exp)) => {
                let trimmed = if mantissa.contains('.') {
                    mantissa.trim_end_matches('0').trim_end_matches('.')
                } else {
                    mantissa
                };
                format!("{trimmed}e{exp}")
            }
            None => s,
        }
    }
}

/// Same rounding, as a JSON number.
pub fn json_num(v: f64, precision: usize) -> serde_json::Value {
    serde_json::Number::from_f64(round_sig(v, precision))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub enum Output {
    Csv(Table),
    Json(serde_json::Value),
}

impl Output {
    fn render(&self) -> String {
        match self {
            Output::Csv(table) => table.to_csv(),
            Output::Json(value) => {
                let mut s = serde_json::to_string_pretty(value).expect("valid json");
                s.push('\n');
                s
            }
        }
    }

    pub fn write(&self, out: Option<&Path>) -> std::io::Result<()> {
        let text = self.render();
        match out {
            Some(path) => std::fs::write(path, text),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes())
            }
        }
    }
}
