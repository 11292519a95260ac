use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// The JSON wrapper around every payload.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub payload: Value,
    pub warnings: Vec<String>,
}

/// Rows shared by the CSV and table renderings.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines printed under the table format only.
    pub footer: Vec<String>,
}

/// Everything a command produced, ready to render in any format.
pub struct Output {
    pub payload: Value,
    pub warnings: Vec<String>,
    pub table: Table,
    /// Replaces the aligned table in the table format.
    pub plain: Option<String>,
}

pub fn render(out: &Output, format: Format, command: String) -> String {
    match format {
        Format::Json => {
            let env = Envelope {
                tool: "sheaf-census",
                version: env!("CARGO_PKG_VERSION"),
                command,
                payload: out.payload.clone(),
                warnings: out.warnings.clone(),
            };
            let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv(&out.table),
        Format::Table => {
            let mut s = match &out.plain {
                Some(p) => format!("{p}\n"),
                None => aligned(&out.table),
            };
            for line in &out.table.footer {
                let _ = writeln!(s, "{line}");
            }
            for w in &out.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
            s
        }
    }
}

fn csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.headers).expect("in-memory write");
    for row in &t.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn aligned(t: &Table) -> String {
    let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut s = String::new();
    let _ = writeln!(s, "{}", line(t.headers.clone()));
    let _ = writeln!(
        s,
        "{}",
        line(
            widths
                .iter()
                .map(|&w| "-".repeat(w))
                .collect::<Vec<_>>()
                .iter()
                .map(String::as_str)
                .collect()
        )
    );
    for row in &t.rows {
        let _ = writeln!(s, "{}", line(row.iter().map(String::as_str).collect()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table {
            headers: vec!["a", "bb"],
            rows: vec![
                vec!["xyz".into(), "1".into()],
                vec!["q,r".into(), "22".into()],
            ],
            footer: vec!["done".into()],
        }
    }

    #[test]
    fn aligned_columns() {
        let s = aligned(&sample());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "a    bb");
        assert_eq!(lines[1], "---  --");
        assert_eq!(lines[2], "xyz  1");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv(&sample()), "a,bb\nxyz,1\n\"q,r\",22\n");
    }
}
