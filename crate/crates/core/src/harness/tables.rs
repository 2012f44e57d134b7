use std::fmt::Write as _;
use std::path::Path;

use super::config::{AlgorithmKind, TableFormat};
use super::experiment::{AlgorithmStats, ResultRow};
use crate::error::{Error, Result};

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 11] = [
    "instance",
    "beta",
    "alg",
    "mean",
    "std",
    "p1",
    "p2",
    "p3",
    "max_pop_mean",
    "max_pop_std",
    "infeasible",
];

fn opt(p: Option<f64>) -> String {
    p.map(|v| v.to_string()).unwrap_or_default()
}

/// One line per (row, algorithm); the row's p-values repeat on each line.
pub fn render_csv(rows: &[ResultRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for row in rows {
        for s in &row.stats {
            w.write_record([
                row.instance.clone(),
                row.beta.to_string(),
                s.algorithm.key().to_string(),
                s.mean.to_string(),
                s.std.to_string(),
                opt(row.p1),
                opt(row.p2),
                opt(row.p3),
                s.max_pop_mean.to_string(),
                s.max_pop_std.to_string(),
                s.infeasible.to_string(),
            ])
            .expect("writing to memory");
        }
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV is UTF-8")
}

/// Parses [`render_csv`] output; consecutive lines sharing instance and
/// `β` form one row.
pub fn parse_csv(text: &str, source: &str) -> Result<Vec<ResultRow>> {
    let parse_err = |line: usize, msg: String| Error::Parse {
        path: source.to_string(),
        line,
        msg,
    };
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(parse_err(
            1,
            format!("expected header {}", CSV_HEADER.join(",")),
        ));
    }
    let mut rows: Vec<ResultRow> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != CSV_HEADER.len() {
            return Err(parse_err(line, format!("expected {} fields", CSV_HEADER.len())));
        }
        let num = |i: usize| -> Result<f64> {
            record[i].parse().map_err(|_| {
                parse_err(line, format!("{}: '{}' is not a number", CSV_HEADER[i], &record[i]))
            })
        };
        let opt_num = |i: usize| -> Result<Option<f64>> {
            if record[i].is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        let algorithm: AlgorithmKind = record[2]
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        let infeasible = record[10].parse().map_err(|_| {
            parse_err(line, format!("infeasible: '{}' is not a count", &record[10]))
        })?;
        let stats = AlgorithmStats {
            algorithm,
            mean: num(3)?,
            std: num(4)?,
            max_pop_mean: num(8)?,
            max_pop_std: num(9)?,
            infeasible,
        };
        let instance = &record[0];
        let beta = num(1)?;
        match rows.last_mut() {
            Some(row) if row.instance == instance && row.beta == beta => row.stats.push(stats),
            _ => rows.push(ResultRow {
                instance: instance.to_string(),
                beta,
                stats: vec![stats],
                p1: opt_num(5)?,
                p2: opt_num(6)?,
                p3: opt_num(7)?,
            }),
        }
    }
    Ok(rows)
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<ResultRow>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_csv(&text, &path.display().to_string())
}

fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        "n/a".into()
    } else {
        format!("{v:.2}")
    }
}

fn fmt_p(p: Option<f64>) -> String {
    match p {
        None => "-".into(),
        Some(p) => {
            let s = if p < 1e-3 { format!("{p:.2e}") } else { format!("{p:.3}") };
            if p <= 0.05 {
                format!("**{s}**")
            } else {
                s
            }
        }
    }
}

/// Per-instance blocks: decoded means per `β` with the row minimum in bold
/// and significant p-values in bold, then the population sizes.
pub fn render_markdown(rows: &[ResultRow]) -> String {
    let mut out = String::new();
    let mut start = 0;
    while start < rows.len() {
        let instance = &rows[start].instance;
        let end = rows[start..]
            .iter()
            .position(|r| &r.instance != instance)
            .map_or(rows.len(), |p| start + p);
        let block = &rows[start..end];
        let algorithms: Vec<AlgorithmKind> = block[0].stats.iter().map(|s| s.algorithm).collect();

        let _ = writeln!(out, "### {instance}\n");
        let mut header = String::from("| β |");
        let mut rule = String::from("|---|");
        for a in &algorithms {
            let _ = write!(header, " {} mean | {} std |", a.label(), a.label());
            rule.push_str("---:|---:|");
        }
        header.push_str(" p1 | p2 | p3 |");
        rule.push_str("---:|---:|---:|");
        let _ = writeln!(out, "{header}\n{rule}");

        for row in block {
            let best = row
                .stats
                .iter()
                .map(|s| s.mean)
                .filter(|m| !m.is_nan())
                .fold(f64::INFINITY, f64::min);
            let _ = write!(out, "| {:e} |", row.beta);
            for s in &row.stats {
                let mean = fmt_value(s.mean);
                if s.mean == best {
                    let _ = write!(out, " **{mean}** |");
                } else {
                    let _ = write!(out, " {mean} |");
                }
                let _ = write!(out, " {} |", fmt_value(s.std));
            }
            let _ = writeln!(out, " {} | {} | {} |", fmt_p(row.p1), fmt_p(row.p2), fmt_p(row.p3));
        }

        let _ = writeln!(out, "\n| algorithm | max population mean | max population std |");
        let _ = writeln!(out, "|---|---:|---:|");
        for s in &block[0].stats {
            let _ = writeln!(
                out,
                "| {} | {:.2} | {:.2} |",
                s.algorithm.label(),
                s.max_pop_mean,
                s.max_pop_std
            );
        }
        out.push('\n');
        start = end;
    }
    out
}

pub fn render_table(rows: &[ResultRow], format: TableFormat) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::domain("no result rows to emit"));
    }
    Ok(match format {
        TableFormat::Csv => render_csv(rows),
        TableFormat::Markdown => render_markdown(rows),
    })
}

/// Writes `rows` to `path` in `format`.
pub fn emit_tables(rows: &[ResultRow], format: TableFormat, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = render_table(rows, format)?;
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}
