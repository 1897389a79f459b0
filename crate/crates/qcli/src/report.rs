//! Deterministic JSON report rendering for the qblocks binary.

use serde_json::{json, Value};

/// Single-line envelope. Object keys are alphabetized by the serializer, so
/// identical invocations produce byte-identical output.
pub fn compact(command: &str, inputs: Value, results: Value, warnings: Vec<String>) -> String {
    let mut line = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": env!("CARGO_PKG_VERSION"),
        "warnings": warnings,
    })
    .to_string();
    line.push('\n');
    line
}

/// Multi-line envelope for table reports: one line per named row, row bodies
/// compact, rows in index order rather than key order.
pub fn tabular(
    command: &str,
    inputs: &Value,
    scalars: &[(&str, Value)],
    tables: &[(&str, &[(String, String)])],
    warnings: &[String],
) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"command\": {},\n", Value::from(command)));
    out.push_str(&format!("  \"inputs\": {inputs},\n"));
    out.push_str("  \"results\": {\n");
    let total = scalars.len() + tables.len();
    let mut item = 0;
    for (key, value) in scalars {
        item += 1;
        let comma = if item < total { "," } else { "" };
        out.push_str(&format!("    \"{key}\": {value}{comma}\n"));
    }
    for (key, rows) in tables {
        item += 1;
        let comma = if item < total { "," } else { "" };
        out.push_str(&format!("    \"{key}\": {{\n"));
        for (i, (label, body)) in rows.iter().enumerate() {
            let row_comma = if i + 1 < rows.len() { "," } else { "" };
            out.push_str(&format!("      {}: {body}{row_comma}\n", Value::from(label.as_str())));
        }
        out.push_str(&format!("    }}{comma}\n"));
    }
    out.push_str("  },\n");
    out.push_str(&format!("  \"version\": {},\n", Value::from(env!("CARGO_PKG_VERSION"))));
    out.push_str(&format!("  \"warnings\": {}\n", json!(warnings)));
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_is_one_alphabetized_line() {
        let line = compact("demo", json!({"b": 1, "a": 2}), json!({"z": 0}), Vec::new());
        assert!(line.ends_with('\n'));
        assert_eq!(line.matches('\n').count(), 1);
        let a = line.find("\"a\":").unwrap();
        let b = line.find("\"b\":").unwrap();
        assert!(a < b, "inputs keys are alphabetized");
        assert!(line.starts_with("{\"command\":\"demo\""));
    }

    #[test]
    fn tabular_keeps_row_order_and_compact_bodies() {
        let rows = vec![
            ("P(0)".to_string(), "{\"C\":4,\"L1\":2,\"L2\":2}".to_string()),
            ("P(1)".to_string(), "{\"C\":2}".to_string()),
        ];
        let text = tabular(
            "projectives",
            &json!({"algebra": "sq"}),
            &[("display", Value::from(2))],
            &[("projectives", &rows)],
            &[],
        );
        assert!(text.contains("\"P(0)\": {\"C\":4,\"L1\":2,\"L2\":2},\n"));
        assert!(text.contains("\"P(1)\": {\"C\":2}\n"));
        assert!(text.find("P(0)").unwrap() < text.find("P(1)").unwrap());
    }
}
