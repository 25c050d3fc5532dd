//! The `Report` envelope and its two renderings.

use lietame::exactalg::fmt_rational;
use lietame::Rational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `{"num": "-3", "den": "2"}`.
pub fn rational(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rationals(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational).collect())
}

/// Aligned text table; `right` marks right-aligned columns.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub right: Vec<bool>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[(&str, bool)]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|(h, _)| h.to_string()).collect(),
            right: headers.iter().map(|(_, r)| *r).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let ncol = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let mut out = String::new();
            for i in 0..ncol {
                if i > 0 {
                    out.push_str("  ");
                }
                let pad = width[i] - cells[i].chars().count();
                if self.right[i] {
                    out.push_str(&" ".repeat(pad));
                    out.push_str(&cells[i]);
                } else {
                    out.push_str(&cells[i]);
                    if i + 1 < ncol {
                        out.push_str(&" ".repeat(pad));
                    }
                }
            }
            out.trim_end().to_string()
        };
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        out.push_str(&line(&self.headers));
        out.push('\n');
        let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&rule.join("  "));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

pub fn q(q: &Rational) -> String {
    fmt_rational(q)
}

pub fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn qlist(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_rational).collect();
    format!("[{}]", parts.join(","))
}

/// What a command produces: the report, and the tables shown in text mode.
pub struct Output {
    pub report: Report,
    pub tables: Vec<Table>,
    /// Extra `key: value` lines printed after the tables.
    pub notes: Vec<String>,
    /// Set when the command itself found a failure to report (exit code 3).
    pub failed: bool,
}

impl Output {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&t.render());
        }
        if !self.notes.is_empty() {
            if !self.tables.is_empty() {
                out.push('\n');
            }
            for n in &self.notes {
                out.push_str(n);
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lietame::exactalg::rat;

    #[test]
    fn rational_encoding() {
        assert_eq!(rational(&rat(-3, 2)), json!({"num": "-3", "den": "2"}));
        assert_eq!(rational(&rat(4, 2)), json!({"num": "2", "den": "1"}));
    }

    #[test]
    fn round_trip() {
        let r = Report::new("strata", json!({"type": "A1"}), json!({"strata": []}));
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn right_alignment() {
        let mut t = Table::new("", &[("name", false), ("codim", true)]);
        t.row(vec!["a".into(), "8".into()]);
        t.row(vec!["bb".into(), "12".into()]);
        let s = t.render();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[2], "a         8");
        assert_eq!(lines[3], "bb       12");
    }
}
