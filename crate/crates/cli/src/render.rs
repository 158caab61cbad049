//! Text mode: one `path = value` line per JSON leaf.
//!
//! Values are JSON literals and paths use `.key` and `[index]`, so the text
//! can be parsed back into the exact JSON document with [`parse_text`].

use serde_json::{Map, Value};

pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let child = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(&child, x, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), x, out);
            }
        }
        leaf => {
            out.push_str(path);
            out.push_str(" = ");
            out.push_str(&leaf.to_string());
            out.push('\n');
        }
    }
}

enum Step {
    Key(String),
    Index(usize),
}

fn parse_path(path: &str) -> Option<Vec<Step>> {
    let mut steps = Vec::new();
    for part in path.split('.') {
        let (key, rest) = part.split_at(part.find('[').unwrap_or(part.len()));
        if key.is_empty() && steps.is_empty() && !rest.is_empty() {
            return None;
        }
        if !key.is_empty() {
            steps.push(Step::Key(key.to_string()));
        }
        let mut rest = rest;
        while let Some(tail) = rest.strip_prefix('[') {
            let close = tail.find(']')?;
            steps.push(Step::Index(tail[..close].parse().ok()?));
            rest = &tail[close + 1..];
        }
        if !rest.is_empty() {
            return None;
        }
    }
    Some(steps)
}

fn insert(slot: &mut Value, steps: &[Step], leaf: Value) -> Option<()> {
    let Some((first, rest)) = steps.split_first() else {
        *slot = leaf;
        return Some(());
    };
    match first {
        Step::Key(k) => {
            if slot.is_null() {
                *slot = Value::Object(Map::new());
            }
            let map = slot.as_object_mut()?;
            insert(map.entry(k.clone()).or_insert(Value::Null), rest, leaf)
        }
        Step::Index(i) => {
            if slot.is_null() {
                *slot = Value::Array(Vec::new());
            }
            let items = slot.as_array_mut()?;
            match *i {
                i if i < items.len() => insert(&mut items[i], rest, leaf),
                i if i == items.len() => {
                    items.push(Value::Null);
                    insert(&mut items[i], rest, leaf)
                }
                _ => None,
            }
        }
    }
}

/// Inverse of [`render_text`].
pub fn parse_text(text: &str) -> Option<Value> {
    let mut root = Value::Null;
    for line in text.lines() {
        let (path, literal) = line.split_once(" = ")?;
        let leaf: Value = serde_json::from_str(literal).ok()?;
        insert(&mut root, &parse_path(path)?, leaf)?;
    }
    Some(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let v = json!({
            "count": 2,
            "classes": [{"label": "trivial", "group": {"variant": "G2", "form": "split"}}, {"label": 3}],
            "empty": [],
            "none": null,
            "nested": [[1, 2], []],
            "text": "a = b [0]",
        });
        let text = render_text(&v);
        assert!(text.contains("classes[0].group.variant = \"G2\"\n"));
        assert_eq!(parse_text(&text).unwrap(), v);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_text("no separator").is_none());
        assert!(parse_text("a[3] = 1").is_none());
    }
}
