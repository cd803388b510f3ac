//! Plain-text rendering of a JSON report. Numbers are printed with the same
//! formatter as the JSON output, so both formats carry identical values.

use serde_json::{Map, Value};
use talex_core::polyring::{MPoly, XYPoly};

fn as_complex(m: &Map<String, Value>) -> Option<String> {
    if m.len() != 2 {
        return None;
    }
    let (re, im) = (m.get("re")?, m.get("im")?);
    if !re.is_number() || !im.is_number() {
        return None;
    }
    Some(format!("{re} {} {}i", if im.as_f64()? < 0.0 { "-" } else { "+" }, im.to_string().trim_start_matches('-')))
}

/// Polynomial objects render in their human-readable form.
pub fn as_polynomial(v: &Value) -> Option<String> {
    let m = v.as_object()?;
    if m.len() != 2 || !m.contains_key("vars") || !m.contains_key("terms") {
        return None;
    }
    if let Ok(p) = serde_json::from_value::<XYPoly>(v.clone()) {
        return Some(p.to_string());
    }
    serde_json::from_value::<MPoly>(v.clone()).ok().map(|p| p.to_string())
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) => as_complex(m).or_else(|| as_polynomial(v)),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a
                .iter()
                .map(|x| match x {
                    Value::Object(_) | Value::Array(_) => None,
                    other => scalar(other),
                })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
    }
}

fn write(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write(out, x, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write(&mut out, v, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_layout() {
        let v = json!({"a": 1, "b": {"re": 0.5, "im": -2.0}, "c": [1, 2], "d": [{"e": true}]});
        assert_eq!(to_text(&v), "a: 1\nb: 0.5 - 2.0i\nc: [1, 2]\nd:\n  -\n    e: true\n");
    }

    #[test]
    fn polynomials_render_readably() {
        let p = XYPoly::from_i64(&[(1, 2, 0), (-1, 0, 1)]);
        let v = json!({ "phi": serde_json::to_value(&p).unwrap() });
        assert_eq!(to_text(&v), format!("phi: {p}\n"));
    }
}
