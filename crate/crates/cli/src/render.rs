use std::io::{self, Write};

use num_bigint::BigInt;
use serde_json::{json, Value};
use snchar::centralizer::Decomposition;
use snchar::character::CharacterTable;
use snchar::checks::InvariantCheck;
use snchar::closed_forms::Report;
use snchar::Partition;

use crate::{Failure, OutputFormat};

/// Comma-separated parts without parentheses, as accepted on the command line.
fn bare(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut impl Write> {
    csv::Writer::from_writer(out)
}

pub fn partitions(
    out: &mut impl Write,
    format: OutputFormat,
    n: usize,
    all: &[Partition],
) -> Result<(), Failure> {
    match format {
        OutputFormat::Table => {
            for p in all {
                writeln!(out, "{p}")?;
            }
            writeln!(out, "p({n}) = {}", all.len())?;
        }
        OutputFormat::Json => write_json(out, &serde_json::to_value(all).expect("partitions serialize"))?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["partition"])?;
            for p in all {
                w.write_record([bare(p)])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn character_value(
    out: &mut impl Write,
    format: OutputFormat,
    shape: &Partition,
    class: &Partition,
    value: &BigInt,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Table => writeln!(out, "{value}")?,
        OutputFormat::Json => write_json(
            out,
            &json!({"shape": shape, "class": class, "value": value.to_string()}),
        )?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["shape", "class", "value"])?;
            w.write_record([bare(shape), bare(class), value.to_string()])?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn decomposition(
    out: &mut impl Write,
    format: OutputFormat,
    d: &Decomposition,
    show_zeros: bool,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Table => {
            writeln!(out, "n = {}, S_{}, index {}", d.n(), 2 * d.n(), d.index())?;
            let rows: Vec<_> = if show_zeros {
                d.terms().collect()
            } else {
                d.nonzero_terms().collect()
            };
            let width = rows
                .iter()
                .map(|(mu, _)| mu.to_string().len())
                .max()
                .unwrap_or(2)
                .max(2);
            writeln!(out, "{:<width$}  mult", "mu")?;
            for (mu, m) in rows {
                writeln!(out, "{:<width$}  {m}", mu.to_string())?;
            }
        }
        OutputFormat::Json => writeln!(out, "{}", d.to_json())?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["mu", "mult"])?;
            for (mu, m) in d.terms() {
                w.write_record([bare(mu), m.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn verification(
    out: &mut impl Write,
    format: OutputFormat,
    report: &Report,
    invariants: &[InvariantCheck],
    pass: bool,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Table => {
            for check in &report.checks {
                writeln!(out, "{check}")?;
            }
            for check in invariants {
                let status = if check.pass { "PASS" } else { "FAIL" };
                writeln!(out, "[{status}] {}: {}", check.name, check.detail)?;
            }
            let total = report.checks.len() + invariants.len();
            let failed = report.checks.iter().filter(|c| !c.pass).count()
                + invariants.iter().filter(|c| !c.pass).count();
            writeln!(
                out,
                "{}: {} of {total} checks passed",
                if pass { "OK" } else { "FAILED" },
                total - failed
            )?;
        }
        OutputFormat::Json => write_json(
            out,
            &json!({
                "closed_forms": report.checks,
                "invariants": invariants,
                "pass": pass,
            }),
        )?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["check", "pass", "detail"])?;
            for c in &report.checks {
                let name = format!("n={} {} k={}", c.n, c.family, c.k);
                let detail = format!("expected {} got {}", c.expected, c.engine);
                w.write_record([name, c.pass.to_string(), detail])?;
            }
            for c in invariants {
                w.write_record([c.name.clone(), c.pass.to_string(), c.detail.clone()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn table(out: &mut impl Write, format: OutputFormat, table: &CharacterTable) -> Result<(), Failure> {
    match format {
        OutputFormat::Table => {
            let classes: Vec<String> = snchar::enumerate_partitions(table.m())
                .iter()
                .map(|c| c.to_string())
                .collect();
            let cells: Vec<(String, Vec<String>)> = table
                .iter()
                .map(|(shape, chi)| (shape.to_string(), chi.iter().map(|(_, v)| v.to_string()).collect()))
                .collect();
            let label_width = cells.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
            let widths: Vec<usize> = (0..classes.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|(_, vs)| vs[j].len())
                        .chain([classes[j].len()])
                        .max()
                        .unwrap_or(1)
                })
                .collect();
            write!(out, "{:label_width$}", "")?;
            for (c, w) in classes.iter().zip(&widths) {
                write!(out, "  {c:>w$}")?;
            }
            writeln!(out)?;
            for (shape, values) in &cells {
                write!(out, "{shape:<label_width$}")?;
                for (v, w) in values.iter().zip(&widths) {
                    write!(out, "  {v:>w$}")?;
                }
                writeln!(out)?;
            }
        }
        OutputFormat::Json => {
            let characters: Vec<Value> = table
                .iter()
                .map(|(shape, chi)| json!({"shape": shape, "values": chi}))
                .collect();
            write_json(out, &json!({"m": table.m(), "characters": characters}))?;
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["shape", "class", "value"])?;
            for (shape, chi) in table.iter() {
                for (class, v) in chi.iter() {
                    w.write_record([bare(shape), bare(class), v.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}
