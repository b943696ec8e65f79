//! Uniform rendering of command results as text, csv or json.

use serde_json::{Map, Value};

use super::Format;

#[derive(Clone, Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn table(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.headers = headers.iter().map(|h| h.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.clone());
        }
        if !self.headers.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|r| {
                    let mut row = Map::new();
                    for (h, c) in self.headers.iter().zip(r) {
                        row.insert(h.clone(), Value::String(c.clone()));
                    }
                    Value::Object(row)
                })
                .collect();
            obj.insert("rows".into(), Value::Array(rows));
        }
        Value::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        if self.headers.is_empty() {
            w.write_record(["key", "value"]).expect("csv");
            for (k, v) in &self.fields {
                w.write_record([k.as_str(), &text_value(v)]).expect("csv");
            }
        } else {
            w.write_record(&self.headers).expect("csv");
            for r in &self.rows {
                w.write_record(r).expect("csv");
            }
        }
        String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            if is_nested(v) {
                // Structured duplicates of the text fields or the table.
                continue;
            }
            let s = text_value(v);
            if s.contains('\n') {
                out.push_str(&format!("{k}:\n{s}\n"));
            } else {
                out.push_str(&format!("{k}: {s}\n"));
            }
        }
        if !self.headers.is_empty() {
            let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
            for r in &self.rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(&self.headers));
            for r in &self.rows {
                out.push_str(&line(r));
            }
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_nested(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().any(|i| i.is_array()))
}
