//! Report rendering: one tabular model, three output forms.
//!
//! CSV carries the payload only (header + rows) so identical scenarios
//! produce byte-identical files; JSON adds a metadata object (tool
//! version, scenario digest, timestamp); text is the human form with
//! the metadata in a footer. Numbers are printed with six significant
//! digits everywhere.

use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Ledger,
    Sweep,
    Coverage,
    Mask,
    Antenna,
}

impl ReportKind {
    fn name(&self) -> &'static str {
        match self {
            ReportKind::Ledger => "ledger",
            ReportKind::Sweep => "sweep",
            ReportKind::Coverage => "coverage",
            ReportKind::Mask => "mask",
            ReportKind::Antenna => "antenna",
        }
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Number(f64),
    /// An absent value (for example an unevaluable sweep row).
    Missing,
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Number(x) => fmt_sig(*x),
            Cell::Missing => String::new(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Text(s) => serde_json::Value::String(s.clone()),
            Cell::Number(x) => serde_json::json!(x),
            Cell::Missing => serde_json::Value::Null,
            Cell::Bool(b) => serde_json::Value::Bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        match x {
            Some(v) => Cell::Number(v),
            None => Cell::Missing,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub kind: ReportKind,
    pub scenario_digest: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Free-form summary lines shown in text mode.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(kind: ReportKind, digest: &str, columns: Vec<&'static str>) -> Self {
        Report {
            kind,
            scenario_digest: digest.to_string(),
            columns,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let rendered: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&rendered.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (col, cell) in self.columns.iter().zip(row) {
                    obj.insert(col.to_string(), cell.json());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({
            "kind": self.kind.name(),
            "metadata": {
                "tool_version": env!("CARGO_PKG_VERSION"),
                "scenario_digest": self.scenario_digest,
                "timestamp_unix": timestamp,
            },
            "notes": self.notes,
            "rows": rows,
        });
        serde_json::to_string_pretty(&doc).expect("report serialisation cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::render).collect())
            .collect();
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        for (i, col) in self.columns.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{:<width$}", col, width = widths[i]));
        }
        out.push('\n');
        for (r, row) in rendered.iter().enumerate() {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                // numbers read better right-aligned
                if matches!(self.rows[r][i], Cell::Number(_)) {
                    out.push_str(&format!("{:>width$}", cell, width = widths[i]));
                } else {
                    out.push_str(&format!("{:<width$}", cell, width = widths[i]));
                }
            }
            out.push('\n');
        }
        for note in &self.notes {
            out.push('\n');
            out.push_str(note);
            out.push('\n');
        }
        out.push_str(&format!(
            "\n# {} v{}  scenario {}\n",
            self.kind.name(),
            env!("CARGO_PKG_VERSION"),
            &self.scenario_digest[..16.min(self.scenario_digest.len())]
        ));
        out
    }
}

/// Format with six significant digits, plain decimal notation.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}
