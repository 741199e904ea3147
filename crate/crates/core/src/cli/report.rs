//! Table, JSON and CSV printers.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use super::engine::ReportRow;
use super::verify::CaseResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format {other:?} (expected table, json or csv)"
            )),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

fn csv_rows<R, I>(out: &mut dyn Write, header: &[&str], rows: I) -> io::Result<()>
where
    R: IntoIterator<Item = String>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

pub fn write_rows(out: &mut dyn Write, rows: &[ReportRow], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for row in rows {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(row).map_err(io::Error::other)?
                )?;
            }
        }
        Format::Csv => {
            let header = ["method", "k", "p", "q", "elapsed_ns", "value"];
            csv_rows(
                out,
                &header,
                rows.iter().map(|r| {
                    let i = &r.inputs;
                    [
                        r.method.to_string(),
                        i.k.to_string(),
                        i.p.to_string(),
                        i.q.to_string(),
                        r.elapsed_ns.to_string(),
                        r.value.clone(),
                    ]
                }),
            )?;
        }
        Format::Table => {
            writeln!(
                out,
                "{:<8} {:<12} {:>8} {:>8} {:>12}  value",
                "method", "cycle", "p", "q", "elapsed_ns"
            )?;
            for r in rows {
                let i = &r.inputs;
                writeln!(
                    out,
                    "{:<8} {:<12} {:>8} {:>8} {:>12}  {}",
                    r.method.name(),
                    i.cycle.to_string(),
                    i.p,
                    i.q,
                    r.elapsed_ns,
                    r.value
                )?;
            }
        }
    }
    Ok(())
}

pub fn write_cases(out: &mut dyn Write, cases: &[CaseResult], format: Format) -> io::Result<()> {
    let failed = cases.iter().filter(|c| !c.passed).count();
    match format {
        Format::Json => {
            for c in cases {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(c).map_err(io::Error::other)?
                )?;
            }
        }
        Format::Csv => {
            let header = ["suite", "case", "passed", "detail"];
            csv_rows(
                out,
                &header,
                cases.iter().map(|c| {
                    let detail = c.detail.clone().unwrap_or_default();
                    [
                        c.suite.to_string(),
                        c.case.clone(),
                        c.passed.to_string(),
                        detail,
                    ]
                }),
            )?;
        }
        Format::Table => {
            for c in cases {
                match &c.detail {
                    None => writeln!(out, "PASS {} {}", c.suite, c.case)?,
                    Some(d) => writeln!(out, "FAIL {} {}: {}", c.suite, c.case, d)?,
                }
            }
            writeln!(
                out,
                "{} cases, {} passed, {} failed",
                cases.len(),
                cases.len() - failed,
                failed
            )?;
        }
    }
    Ok(())
}

pub fn write_text(out: &mut dyn Write, label: &str, text: &str, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let v = serde_json::json!({ "kind": label, "poly": text });
            writeln!(out, "{v}")
        }
        Format::Csv => csv_rows(
            out,
            &["kind", "poly"],
            [[label.to_string(), text.to_string()]],
        ),
        Format::Table => writeln!(out, "{text}"),
    }
}
