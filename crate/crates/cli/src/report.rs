//! Reports as JSON values. Object keys come out sorted, so equal inputs give
//! byte-identical documents.

use dircat::exactlin::Field;
use dircat::modcat::{Pd, Representation};
use dircat::strata::FiltrationWitness;
use serde_json::{json, Map, Value};

use crate::module_format::serialize_module;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// What a command produced and the exit code it asks for.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub headline: String,
    pub report: Value,
    pub code: i32,
    /// Text mode prints only the headline.
    pub brief: bool,
}

impl Outcome {
    pub fn new(headline: String, report: Value, code: i32) -> Self {
        Outcome {
            headline,
            report,
            code,
            brief: false,
        }
    }

    pub fn brief(mut self) -> Self {
        self.brief = true;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{}\n", self.headline);
                if !self.brief {
                    render_text(&self.report, 0, &mut s);
                }
                s
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array() && scalar(i).is_some()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(item, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, depth + 1, out);
                    }
                }
            }
        }
        Value::String(s) => {
            for line in s.lines() {
                out.push_str(&format!("{pad}{line}\n"));
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn pd_value(pd: Pd) -> Value {
    match pd {
        Pd::Finite(n) => json!(n),
        Pd::AtLeast(n) => json!(format!(">={n}")),
    }
}

pub fn module_value<F: Field>(m: &Representation<F>) -> Value {
    json!({
        "dims": m.dims(),
        "total_dim": m.total_dim(),
        "file": serialize_module(m),
    })
}

pub fn filtration_value<F: Field>(w: &FiltrationWitness<F>, names: &[String]) -> Value {
    let layers: Vec<Value> = w
        .layers
        .iter()
        .map(|l| json!({"vertex": names[l.vertex], "multiplicity": l.multiplicity}))
        .collect();
    let mut obj = Map::new();
    obj.insert("succeeded".into(), json!(w.succeeded()));
    obj.insert("layers".into(), Value::Array(layers));
    if let Some(fail) = &w.failure {
        obj.insert(
            "failure".into(),
            json!({
                "stage": names[fail.stage],
                "reason": fail.reason,
                "remainder": module_value(&fail.remainder),
            }),
        );
    }
    Value::Object(obj)
}
