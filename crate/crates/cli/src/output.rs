//! Output plumbing: format selection, deterministic table rendering and
//! writing to stdout or a file.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::ValueEnum;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Writes the complete rendered output to `--out FILE` when given, otherwise
/// to stdout.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| Failure::invalid(format!("cannot write stdout: {e}")))
        }
    }
}

/// Renders rows as a left-aligned text table with a header.
pub fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render = |cells: Vec<String>, out: &mut String| {
        let line: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    render(headers.iter().map(|h| h.to_string()).collect(), &mut out);
    for row in rows {
        render(row.clone(), &mut out);
    }
    out
}

/// Renders rows as CSV under the given header. Cells never contain commas or
/// quotes, so no escaping is needed.
pub fn csv_table(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Renders rows as JSON lines, one object per row with the given keys.
pub fn json_lines(keys: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let mut obj = serde_json::Map::new();
        for (k, v) in keys.iter().zip(row) {
            obj.insert(k.to_string(), serde_json::Value::String(v.clone()));
        }
        out.push_str(&serde_json::Value::Object(obj).to_string());
        out.push('\n');
    }
    out
}
