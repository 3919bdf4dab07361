//! Deterministic output formatting: fixed 12-significant-digit scientific
//! notation so identical configs produce byte-identical files.

/// Formats a value with 12 significant digits; empty string for gaps.
pub fn sig12(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.11e}"),
        None => String::new(),
    }
}

/// Builds a CSV from a header and rows of optional cells.
pub fn csv_table(header: &[&str], rows: &[Vec<Option<f64>>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| sig12(*c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
