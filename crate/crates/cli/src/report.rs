//! Rendering of command results as JSON, CSV or text.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// A tabular view of a result, for CSV output.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub command: &'static str,
    /// Every effective parameter, defaults included.
    pub params: Map<String, Value>,
    pub result: Value,
    pub table: Option<Table>,
    pub text: String,
    /// False when the run found a violated expectation.
    pub ok: bool,
}

/// Converts to a `Value`, dropping wall-clock fields so output is reproducible.
pub fn to_value<T: Serialize>(x: &T) -> Value {
    let mut v = serde_json::to_value(x).expect("report types serialize");
    strip_timing(&mut v);
    v
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(xs) => xs.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// `key,value` rows for results without a natural table.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<Vec<String>>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, rows);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        other => rows.push(vec![prefix.to_string(), scalar_text(other)]),
    }
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> Vec<u8> {
        match format {
            OutputFormat::Json => {
                let mut doc = Map::new();
                doc.insert("command".into(), Value::from(self.command));
                doc.insert("params".into(), Value::Object(self.params.clone()));
                doc.insert("result".into(), self.result.clone());
                doc.insert("ok".into(), Value::from(self.ok));
                let mut out = serde_json::to_vec_pretty(&Value::Object(doc)).expect("json");
                out.push(b'\n');
                out
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some(t) => {
                        w.write_record(&t.headers).expect("in-memory write");
                        for row in &t.rows {
                            w.write_record(row).expect("in-memory write");
                        }
                    }
                    None => {
                        let mut rows = Vec::new();
                        flatten("", &self.result, &mut rows);
                        w.write_record(["key", "value"]).expect("in-memory write");
                        for row in rows {
                            w.write_record(row).expect("in-memory write");
                        }
                    }
                }
                w.into_inner().expect("in-memory flush")
            }
            OutputFormat::Text => {
                let mut out = format!("# fermat {}\n", self.command);
                for (k, v) in &self.params {
                    out.push_str(&format!("# {k} = {}\n", scalar_text(v)));
                }
                out.push_str(&self.text);
                if !out.ends_with('\n') {
                    out.push('\n');
                }
                out.push_str(if self.ok {
                    "status: ok\n"
                } else {
                    "status: expectation violated\n"
                });
                out.into_bytes()
            }
        }
    }

    pub fn write_to(
        &self,
        format: OutputFormat,
        path: Option<&std::path::Path>,
    ) -> std::io::Result<()> {
        let bytes = self.render(format);
        match path {
            Some(p) => std::fs::write(p, bytes),
            None => std::io::stdout().lock().write_all(&bytes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn report(result: Value) -> Report {
        Report {
            command: "demo",
            params: json!({"z": 1, "a": "3/2"}).as_object().unwrap().clone(),
            result,
            table: None,
            text: "body".into(),
            ok: true,
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let out =
            String::from_utf8(report(json!({"b": 1, "a": 2})).render(OutputFormat::Json)).unwrap();
        let a = out.find("\"a\": 2").unwrap();
        let b = out.find("\"b\": 1").unwrap();
        assert!(a < b);
        assert!(out.find("\"command\"").unwrap() < out.find("\"params\"").unwrap());
    }

    #[test]
    fn csv_falls_back_to_key_value() {
        let out = report(json!({"x": {"y": [true, "1/2"]}})).render(OutputFormat::Csv);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "key,value\nx.y[0],true\nx.y[1],1/2\n"
        );
    }

    #[test]
    fn timing_is_stripped() {
        let v = to_value(&json!({"elapsed_ms": 4, "inner": [{"elapsed_ms": 1, "k": 2}]}));
        assert_eq!(v, json!({"inner": [{"k": 2}]}));
    }
}
