use serde_json::{Map, Value};

/// Ordered facts, printed as `key=value` lines or as JSON.
#[derive(Debug, Default)]
pub struct ReportDocument {
    facts: Map<String, Value>,
}

impl ReportDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.facts.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.facts).expect("report serializes")
    }

    /// Nested objects flatten to dotted keys; arrays of scalars join with spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.facts {
            flatten(k, v, &mut out);
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn flatten(key: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&format!("{key}.{k}"), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{key}={}\n", parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{key}.{i}"), x, out);
            }
        }
        _ => out.push_str(&format!("{key}={}\n", scalar(v))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattening() {
        let mut r = ReportDocument::new();
        r.push("b", 2);
        r.push("a", json!({"x": [1, 2], "y": "z"}));
        assert_eq!(r.to_text(), "b=2\na.x=1 2\na.y=z\n");
    }
}
