//! Structured results: a JSON tree with stable key order plus a text view
//! rendered from the same tree.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One verified statement. Observations are recorded but do not decide
/// the overall verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub required: bool,
    pub detail: String,
}

impl Check {
    pub fn required(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            required: true,
            detail: detail.into(),
        }
    }

    pub fn observation(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            required: false,
            detail: detail.into(),
        }
    }

    pub fn ok(&self) -> bool {
        self.passed || !self.required
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line: Option<usize>,
    pub value: Value,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        line: Option<usize>,
        value: Value,
        checks: Vec<Check>,
    ) {
        self.entries.push(Entry {
            label: label.into(),
            line,
            value,
            checks,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.entries.iter().flat_map(|e| e.checks.iter())
    }

    /// Whether every required check passed.
    pub fn all_passed(&self) -> bool {
        self.checks().all(Check::ok)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e.line {
                Some(l) => out.push_str(&format!("[{}] line {l}\n", e.label)),
                None => out.push_str(&format!("[{}]\n", e.label)),
            }
            render_value(&e.value, 1, &mut out);
            for c in &e.checks {
                let mark = match (c.passed, c.required) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL",
                    (false, false) => "NOTE",
                };
                out.push_str(&format!("  {mark} {}: {}\n", c.name, c.detail));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(item, depth + 1, out);
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
                        render_value(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn observations_do_not_fail_the_report() {
        let mut r = Report::new();
        r.push(
            "x",
            None,
            json!(1),
            vec![Check::observation("sym", false, "ranks differ")],
        );
        assert!(r.all_passed());
        r.push(
            "y",
            Some(3),
            json!(2),
            vec![Check::required("chain", false, "")],
        );
        assert!(!r.all_passed());
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new();
        r.push("v", None, json!({"zeta": 1, "alpha": [1, 2]}), vec![]);
        let text = r.render_text();
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert!(r.to_json().find("alpha").unwrap() < r.to_json().find("zeta").unwrap());
    }
}
