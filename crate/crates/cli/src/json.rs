//! Pretty JSON with arrays of scalars kept on one line.

use serde_json::Value;

fn is_scalar(v: &Value) -> bool {
    !v.is_array() && !v.is_object()
}

fn write(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(xs) => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                out.push_str(&pad(indent + 1));
                write(out, x, indent + 1);
            }
            out.push('\n');
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push('{');
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write(out, x, indent + 1);
            }
            out.push('\n');
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&serde_json::to_string(other).expect("scalars serialize")),
    }
}

/// Serializes with a trailing newline.
pub fn pretty(v: &impl serde::Serialize) -> String {
    let value = serde_json::to_value(v).expect("serializable");
    let mut out = String::new();
    write(&mut out, &value, 0);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn scalar_arrays_stay_inline_and_text_parses_back() {
        let v = json!({ "a": [1, 2, 3], "b": [[1, 0], [0, 1]], "c": {}, "d": [] });
        let s = pretty(&v);
        assert!(s.contains("\"a\": [1,2,3]"));
        assert!(s.contains("    [1,0],\n"));
        assert_eq!(serde_json::from_str::<Value>(&s).unwrap(), v);
    }
}
