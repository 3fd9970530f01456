//! Tabular output shared by every data command.

use std::io::Write;

use schroder_core::report::{CheckValue, VerificationReport};
use serde_json::{json, Value};

use crate::error::LabResult;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    /// Floats carry 17 significant digits; `-0` prints as `0`.
    pub fn render(&self) -> String {
        match self {
            Cell::Float(v) => format!("{:.16e}", v + 0.0),
            Cell::Int(v) => v.to_string(),
            Cell::Text(t) => t.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(v) if v.is_finite() => json!(v),
            Cell::Float(_) | Cell::Empty => Value::Null,
            Cell::Int(v) => json!(v),
            Cell::Text(t) => json!(t),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Header row, comma separated, LF line endings.
    pub fn write_csv<W: Write>(&self, out: W) -> LabResult<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    /// `{"columns": [...], "rows": [[...], ...]}`; empty cells are `null`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
            .collect();
        json!({ "columns": self.columns, "rows": rows })
    }
}

/// One row per check, for CSV output of a report.
pub fn report_table(report: &VerificationReport) -> Table {
    let mut t = Table::new(["check", "expected", "computed", "tolerance", "pass"]);
    let cell = |v: &CheckValue| match v {
        CheckValue::Number(x) => Cell::Float(*x),
        CheckValue::Text(s) => Cell::Text(s.clone()),
    };
    for c in &report.checks {
        t.push(vec![
            Cell::Text(c.check.clone()),
            cell(&c.expected),
            cell(&c.computed),
            Cell::Float(c.tolerance),
            Cell::Text(c.pass.to_string()),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["x", "y"]);
        t.push(vec![Cell::Float(0.625), Cell::Empty]);
        t.push(vec![Cell::Int(3), Cell::Text("-4/3".into())]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,y\n6.2500000000000000e-1,\n3,-4/3\n");
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new(["x"]);
        t.push(vec![Cell::Float(f64::NAN)]);
        assert_eq!(t.to_json(), json!({"columns": ["x"], "rows": [[null]]}));
    }
}
