//! Artifact formatting. Every artifact embeds the tool version, the
//! full run configuration, and the master seed, so a run can be
//! reproduced from the file alone.

use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON artifact for single results.
pub fn json_artifact(config: Value, seed: Option<u64>, result: Value) -> String {
    let mut top = json!({
        "version": VERSION,
        "config": config,
        "result": result,
    });
    if let Some(seed) = seed {
        top["seed"] = json!(seed);
    }
    let mut s = serde_json::to_string_pretty(&top).expect("json encodes");
    s.push('\n');
    s
}

/// CSV artifact for tables: provenance as leading comment lines, then a
/// header row and the data rows.
pub fn csv_artifact(config: &Value, seed: Option<u64>, header: &str, rows: &[String]) -> String {
    let mut s = format!("# rdv-cli {VERSION}\n# config: {config}\n");
    if let Some(seed) = seed {
        s.push_str(&format!("# seed: {seed}\n"));
    }
    s.push_str(header);
    s.push('\n');
    for row in rows {
        s.push_str(row);
        s.push('\n');
    }
    s
}

/// Writes to the path when given, otherwise to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| format!("cannot write stdout: {e}")),
    }
}

/// Shortest-roundtrip float formatting; stable across platforms.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}
