//! One function per subcommand.

use std::fmt::Write as _;
use std::io::Write;

use doodle_core::arrow::classify_by_arrows;
use doodle_core::enumerate::{classify, enumerate_lp, Counts, Partition};
use doodle_core::normal::{g_unori, proj_lc, proj_lp};
use doodle_core::report::{CodeReport, Sections};
use doodle_core::{ArrowDiagram, GaussCode, SizeLimit, Symmetry};

use crate::output::{write_table, Format};
use crate::{CliError, Result, NAME_TABLE_MAX_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    Lp,
    #[default]
    Lc,
    Unori,
}

pub fn normalize(text: &str, form: Form) -> Result<String> {
    let code = GaussCode::parse(text)?;
    let normal = match form {
        Form::Lp => proj_lp(&code),
        Form::Lc => proj_lc(&code),
        Form::Unori => g_unori(&code),
    };
    Ok(format!("{normal}\n"))
}

pub fn classify_code(text: &str, json: bool) -> Result<String> {
    let code = GaussCode::parse(text)?;
    let table = if code.n() <= NAME_TABLE_MAX_N && doodle_core::reduce::is_minimal(&code) {
        Some(classify(code.n(), SizeLimit::default())?)
    } else {
        None
    };
    let report = CodeReport::new(&code, table.as_ref());
    if json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        return Ok(s);
    }
    let list = |codes: &[GaussCode]| {
        let parts: Vec<String> = codes.iter().map(|w| w.to_string()).collect();
        parts.join("  ")
    };
    let mut s = String::new();
    let _ = writeln!(s, "code: {}", report.code);
    let _ = writeln!(s, "letters: {}", report.letters);
    let _ = writeln!(s, "n: {}", report.n);
    let _ = writeln!(s, "left preference: {:?}", report.left_preference);
    let _ = writeln!(s, "proj_lp: {}", report.proj_lp);
    let _ = writeln!(s, "1-reducible: {}", report.one_reducible);
    let _ = writeln!(s, "2-reducible: {}", report.two_reducible);
    let _ = writeln!(s, "minimal: {}", report.minimal);
    let _ = writeln!(s, "G_ori: {}", report.g_ori);
    let _ = writeln!(s, "G_unori: {}", report.g_unori);
    let _ = writeln!(s, "canonical orientation: {:?}", report.orientation);
    let _ = writeln!(s, "orbit: {}", list(&report.orbit));
    let _ = writeln!(s, "reverse orbit: {}", list(&report.reverse_orbit));
    if let (Some(name), Some(unori)) = (&report.name, &report.unoriented_name) {
        let _ = writeln!(s, "name: {name} (unoriented {unori})");
    }
    Ok(s)
}

pub fn enumerate(
    out: &mut dyn Write,
    n: usize,
    sections: Sections,
    format: Format,
    limit: SizeLimit,
) -> Result<()> {
    limit.check(n)?;
    let table = classify(n, limit)?;
    let lp: Vec<GaussCode> = if sections == Sections::Lp {
        enumerate_lp(n, limit)?.collect()
    } else {
        Vec::new()
    };
    write_table(out, &table, sections, &lp, format).map_err(|e| CliError::io("<output>", e))
}

/// The printed encoding and the diagram it describes.
pub fn arrow(text: &str, canonical: Option<Symmetry>) -> Result<(String, ArrowDiagram)> {
    let code = GaussCode::parse(text)?;
    let mut diagram = ArrowDiagram::from_code(&code);
    if let Some(sym) = canonical {
        diagram = diagram.canonical(sym);
    }
    Ok((format!("{}\n", diagram.encoding()), diagram))
}

pub struct VerifyOutcome {
    pub report: String,
    pub ok: bool,
}

pub fn reference_counts(n: usize) -> Option<Counts> {
    let (lp, minimal, oriented, unoriented) = match n {
        3 => (60, 6, 2, 1),
        4 => (840, 124, 32, 19),
        _ => return None,
    };
    Some(Counts {
        lp,
        minimal,
        oriented,
        unoriented,
    })
}

pub fn verify(n: usize, limit: SizeLimit) -> Result<VerifyOutcome> {
    limit.check(n)?;
    let table = classify(n, limit)?;
    let arrows = classify_by_arrows(n, limit)?;
    let counts = table.counts();
    let mut ok = true;
    let mut s = String::new();
    let _ = writeln!(s, "n = {n}");
    match reference_counts(n) {
        Some(expected) if expected == counts => {
            let _ = writeln!(s, "counts: {counts} (reference {expected}): ok");
        }
        Some(expected) => {
            ok = false;
            let _ = writeln!(s, "counts: {counts} (reference {expected}): MISMATCH");
        }
        None => {
            let _ = writeln!(s, "counts: {counts} (no reference)");
        }
    }
    for (label, ours, theirs) in [
        ("oriented", table.oriented_partition(), arrows.rotation),
        ("unoriented", table.unoriented_partition(), arrows.dihedral),
    ] {
        match first_difference(&ours, &theirs) {
            None => {
                let _ = writeln!(
                    s,
                    "{label} partition: {} classes, arrow route agrees",
                    ours.len()
                );
            }
            Some(diff) => {
                ok = false;
                let _ = writeln!(s, "{label} partition: MISMATCH\n{diff}");
            }
        }
    }
    let _ = writeln!(s, "verify {n}: {}", if ok { "ok" } else { "FAILED" });
    Ok(VerifyOutcome { report: s, ok })
}

fn first_difference(ours: &Partition, theirs: &Partition) -> Option<String> {
    let show = |class: Option<&Vec<GaussCode>>| match class {
        Some(c) => {
            let parts: Vec<String> = c.iter().map(|w| w.to_string()).collect();
            parts.join(" ")
        }
        None => "(none)".to_string(),
    };
    let len = ours.len().max(theirs.len());
    (0..len).find(|&i| ours.get(i) != theirs.get(i)).map(|i| {
        format!(
            "  class {}: codes {}\n  class {}: arrows {}",
            i + 1,
            show(ours.get(i)),
            i + 1,
            show(theirs.get(i))
        )
    })
}
