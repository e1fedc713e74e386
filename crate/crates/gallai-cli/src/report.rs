//! Output rendering shared by the subcommands: minimal CSV and a one-key
//! JSON envelope.

use chrono::{SecondsFormat, Utc};
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Current UTC time in RFC 3339 form with second resolution.
pub fn timestamp() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Wraps a payload as `{"<command>": payload, "timestamp": "..."}` — the
/// envelope every `--format json` output uses.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert(command.to_string(), payload);
    map.insert("timestamp".to_string(), Value::String(timestamp()));
    Value::Object(map)
}

/// Pretty-printed JSON envelope, ready to print.
pub fn render_json(command: &str, payload: Value) -> String {
    serde_json::to_string_pretty(&envelope(command, payload))
        .expect("JSON trees built from strings and integers serialize")
}

fn escape_csv(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One CSV record (no trailing newline).
pub fn csv_line(fields: &[String]) -> String {
    fields.iter().map(|field| escape_csv(field)).collect::<Vec<_>>().join(",")
}

/// Header plus rows, one record per line, trailing newline included.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&csv_line(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_quotes_only_what_needs_quoting() {
        let line = csv_line(&[
            "plain".to_string(),
            "with, comma".to_string(),
            "with \"quote\"".to_string(),
        ]);
        assert_eq!(line, "plain,\"with, comma\",\"with \"\"quote\"\"\"");
    }

    #[test]
    fn csv_tables_end_with_a_newline_per_record() {
        let table = render_csv(&["a", "b"], &[vec!["1".to_string(), "2".to_string()]]);
        assert_eq!(table, "a,b\n1,2\n");
    }

    #[test]
    fn json_envelope_keys_are_the_command_and_a_timestamp() {
        let value = envelope("count", json!({"n": 4}));
        let object = value.as_object().unwrap();
        assert_eq!(object.len(), 2);
        assert_eq!(object["count"]["n"], 4);
        let stamp = object["timestamp"].as_str().unwrap();
        chrono::DateTime::parse_from_rfc3339(stamp).expect("well-formed timestamp");
    }
}
