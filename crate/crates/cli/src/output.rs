//! Text, CSV and JSON renderings of a census.

use std::io::{self, Write};

use doodle_core::enumerate::ClassificationTable;
use doodle_core::report::{Sections, TableDocument};
use doodle_core::GaussCode;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// `1 3 2 6 4 5`: the form used inside CSV cells.
pub fn compact(code: &GaussCode) -> String {
    let parts: Vec<String> = code.as_slice().iter().map(u8::to_string).collect();
    parts.join(" ")
}

fn join_codes(codes: &[GaussCode], sep: &str) -> String {
    let parts: Vec<String> = codes.iter().map(compact).collect();
    parts.join(sep)
}

/// `lp` is only read for [`Sections::Lp`].
pub fn write_table(
    out: &mut dyn Write,
    table: &ClassificationTable,
    sections: Sections,
    lp: &[GaussCode],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Text => write_text(out, table, sections, lp),
        Format::Csv => write_csv(out, table, sections, lp),
        Format::Json => {
            let lp = (sections == Sections::Lp).then(|| lp.to_vec());
            let doc = TableDocument::new(table, sections, lp);
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
    }
}

fn write_text(
    out: &mut dyn Write,
    table: &ClassificationTable,
    sections: Sections,
    lp: &[GaussCode],
) -> io::Result<()> {
    use Sections::*;
    writeln!(out, "n = {}", table.n())?;
    writeln!(
        out,
        "counts (lp, minimal, oriented, unoriented) = {}",
        table.counts()
    )?;
    if sections == Lp {
        writeln!(out, "\nleft preferred codes: {}", lp.len())?;
        let width = lp.len().to_string().len();
        for (i, w) in lp.iter().enumerate() {
            writeln!(out, "{:>width$}  {}", i + 1, w)?;
        }
    }
    if matches!(sections, All | Minimal) {
        let codes = table.minimal_codes();
        writeln!(out, "\nminimal codes: {}", codes.len())?;
        let width = codes.len().to_string().len();
        for (i, w) in codes.iter().enumerate() {
            writeln!(out, "{:>width$}  {}", i + 1, w)?;
        }
    }
    if matches!(sections, All | Oriented) {
        let classes = table.oriented();
        writeln!(out, "\noriented classes: {}", classes.len())?;
        let width = name_width(classes.iter().map(|c| c.name.to_string()));
        for c in classes {
            let members: Vec<String> = c.class.members().iter().map(|w| w.to_string()).collect();
            writeln!(
                out,
                "{:<width$}  {}",
                c.name.to_string(),
                members.join("  ")
            )?;
        }
    }
    if matches!(sections, All | Unoriented) {
        let classes = table.unoriented();
        writeln!(out, "\nunoriented classes: {}", classes.len())?;
        let width = name_width(classes.iter().map(|c| c.name.to_string()));
        for u in classes {
            let parts = match u.minus {
                Some(i) => format!(
                    "{} {}",
                    table.oriented()[u.plus].name,
                    table.oriented()[i].name
                ),
                None => format!("{} (reversible)", table.oriented()[u.plus].name),
            };
            writeln!(
                out,
                "{:<width$}  {}  {}",
                u.name.to_string(),
                u.class.canonical(),
                parts
            )?;
        }
    }
    Ok(())
}

fn name_width(names: impl Iterator<Item = String>) -> usize {
    names.map(|s| s.len()).max().unwrap_or(0)
}

#[derive(Serialize)]
struct LpRow {
    index: usize,
    code: String,
}

#[derive(Serialize)]
struct MinimalRow {
    index: usize,
    code: String,
    oriented: String,
    unoriented: String,
}

#[derive(Serialize)]
struct OrientedRow {
    name: String,
    canonical: String,
    orbit_size: usize,
    members: String,
}

#[derive(Serialize)]
struct UnorientedRow {
    name: String,
    canonical: String,
    forward: String,
    backward: String,
    reversible: bool,
}

const LP_HEADER: [&str; 2] = ["index", "code"];
const MINIMAL_HEADER: [&str; 4] = ["index", "code", "oriented", "unoriented"];
const ORIENTED_HEADER: [&str; 4] = ["name", "canonical", "orbit_size", "members"];
const UNORIENTED_HEADER: [&str; 5] = ["name", "canonical", "forward", "backward", "reversible"];

/// One table per file; [`Sections::All`] uses the minimal-code layout.
/// Headers are written even when there are no rows.
fn write_csv(
    out: &mut dyn Write,
    table: &ClassificationTable,
    sections: Sections,
    lp: &[GaussCode],
) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    match sections {
        Sections::Lp => {
            w.write_record(LP_HEADER)?;
            for (i, code) in lp.iter().enumerate() {
                w.serialize(LpRow {
                    index: i + 1,
                    code: compact(code),
                })?;
            }
        }
        Sections::All | Sections::Minimal => {
            w.write_record(MINIMAL_HEADER)?;
            for (i, code) in table.minimal_codes().iter().enumerate() {
                let class = table.lookup(code).expect("minimal codes are classified");
                w.serialize(MinimalRow {
                    index: i + 1,
                    code: compact(code),
                    oriented: class.name.to_string(),
                    unoriented: class.name.unoriented().to_string(),
                })?;
            }
        }
        Sections::Oriented => {
            w.write_record(ORIENTED_HEADER)?;
            for c in table.oriented() {
                w.serialize(OrientedRow {
                    name: c.name.to_string(),
                    canonical: compact(c.class.canonical()),
                    orbit_size: c.class.orbit_size(),
                    members: join_codes(c.class.members(), ";"),
                })?;
            }
        }
        Sections::Unoriented => {
            w.write_record(UNORIENTED_HEADER)?;
            for u in table.unoriented() {
                w.serialize(UnorientedRow {
                    name: u.name.to_string(),
                    canonical: compact(u.class.canonical()),
                    forward: table.oriented()[u.plus].name.to_string(),
                    backward: u
                        .minus
                        .map(|i| table.oriented()[i].name.to_string())
                        .unwrap_or_default(),
                    reversible: u.minus.is_none(),
                })?;
            }
        }
    }
    w.flush()
}
