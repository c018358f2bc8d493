use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Output of one invocation. Maps serialize with sorted keys.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub result: Value,
    pub warnings: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

impl Report {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command.join(" "));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input: {d}\n"));
        }
        render(&self.result, "", &mut out);
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_array))
}

fn render(v: &Value, indent: &str, out: &mut String) {
    let Value::Object(map) = v else {
        out.push_str(&format!("{indent}{}\n", scalar(v)));
        return;
    };
    for (key, val) in map {
        match val {
            Value::Object(_) => {
                out.push_str(&format!("{indent}{key}:\n"));
                render(val, &format!("{indent}  "), out);
            }
            Value::Array(rows) if is_matrix(val) => {
                out.push_str(&format!("{indent}{key}:\n"));
                for row in rows {
                    let cells: Vec<String> = row.as_array().unwrap().iter().map(scalar).collect();
                    out.push_str(&format!("{indent}  [{}]\n", cells.join(", ")));
                }
            }
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str(&format!("{indent}{key}:\n"));
                for item in items {
                    out.push_str(&format!("{indent}  -\n"));
                    render(item, &format!("{indent}    "), out);
                }
            }
            Value::Array(items) => {
                let cells: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{indent}{key}: [{}]\n", cells.join(", ")));
            }
            _ => out.push_str(&format!("{indent}{key}: {}\n", scalar(val))),
        }
    }
}
