//! Output rendering: partition streams, cover tables, and verification
//! reports, each in text, JSON lines, or CSV.

use beckworks::cover::Decomposition;
use beckworks::verify::IdentityReport;
use beckworks::Partition;
use clap::ValueEnum;
use serde::Serialize;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Report files are line records either way; there is no text rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn write_partitions(
    out: &mut dyn Write,
    items: &[Partition],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for p in items {
                writeln!(out, "{p}")?;
            }
        }
        Format::Json => {
            for p in items {
                writeln!(out, "{}", serde_json::json!({ "partition": p.to_string() }))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["partition"])?;
            for p in items {
                w.write_record([p.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// One renderable cover row; `groups` keeps the library's key order.
pub struct TableRow {
    pub base: Partition,
    pub image: Partition,
    pub groups: Vec<(Option<u64>, Vec<Partition>)>,
}

impl TableRow {
    fn first(&self, image_first: bool) -> &Partition {
        if image_first {
            &self.image
        } else {
            &self.base
        }
    }
}

/// Flattens a decomposition for printing. Paper mode drops empty groups and
/// then rows with nothing left, the way the published tables omit
/// zero-difference entries. Rows are ordered by the first printed column,
/// comparing part sequences largest-first.
pub fn table_rows(d: &Decomposition, image_first: bool, paper: bool) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for row in &d.rows {
        let mut groups: Vec<(Option<u64>, Vec<Partition>)> = row
            .groups
            .iter()
            .map(|g| (g.key, g.members.clone()))
            .collect();
        if paper {
            groups.retain(|(_, members)| !members.is_empty());
            if groups.is_empty() {
                continue;
            }
        }
        rows.push(TableRow {
            base: row.base.clone(),
            image: row.image.clone(),
            groups,
        });
    }
    rows.sort_by(|a, b| {
        a.first(image_first)
            .parts()
            .rev()
            .cmp(b.first(image_first).parts().rev())
    });
    rows
}

#[derive(Serialize)]
struct GroupRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    key: Option<u64>,
    members: Vec<String>,
}

#[derive(Serialize)]
struct RowRecord {
    base: String,
    image: String,
    groups: Vec<GroupRecord>,
}

pub fn write_table(
    out: &mut dyn Write,
    rows: &[TableRow],
    image_first: bool,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for row in rows {
                let groups = row
                    .groups
                    .iter()
                    .map(|(_, members)| {
                        let inner = members
                            .iter()
                            .map(Partition::to_string)
                            .collect::<Vec<_>>()
                            .join(",");
                        format!("{{{inner}}}")
                    })
                    .collect::<Vec<_>>()
                    .join(", ");
                let (first, second) = if image_first {
                    (&row.image, &row.base)
                } else {
                    (&row.base, &row.image)
                };
                writeln!(out, "{first}\t{second}\t{groups}")?;
            }
        }
        Format::Json => {
            for row in rows {
                let record = RowRecord {
                    base: row.base.to_string(),
                    image: row.image.to_string(),
                    groups: row
                        .groups
                        .iter()
                        .map(|(key, members)| GroupRecord {
                            key: *key,
                            members: members.iter().map(Partition::to_string).collect(),
                        })
                        .collect(),
                };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["base", "image", "key", "member"])?;
            for row in rows {
                for (key, members) in &row.groups {
                    let key = key.map(|k| k.to_string()).unwrap_or_default();
                    for member in members {
                        w.write_record([
                            row.base.to_string(),
                            row.image.to_string(),
                            key.clone(),
                            member.to_string(),
                        ])?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ReportRecord {
    identity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    n: u64,
    lhs: i64,
    rhs: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs2: Option<i64>,
    pass: bool,
}

impl ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        ReportRecord {
            identity: r.id.name(),
            k: r.id.k(),
            m: r.id.m(),
            n: r.n,
            lhs: r.lhs,
            rhs: r.rhs,
            rhs2: r.rhs2,
            pass: r.pass,
        }
    }
}

pub fn write_reports(
    out: &mut dyn Write,
    reports: &[IdentityReport],
    format: ReportFormat,
) -> io::Result<()> {
    match format {
        ReportFormat::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(&ReportRecord::from(r))?)?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["identity", "k", "m", "n", "lhs", "rhs", "rhs2", "pass"])?;
            for r in reports {
                let rec = ReportRecord::from(r);
                w.write_record([
                    rec.identity.to_string(),
                    rec.k.map(|v| v.to_string()).unwrap_or_default(),
                    rec.m.map(|v| v.to_string()).unwrap_or_default(),
                    rec.n.to_string(),
                    rec.lhs.to_string(),
                    rec.rhs.to_string(),
                    rec.rhs2.map(|v| v.to_string()).unwrap_or_default(),
                    rec.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
