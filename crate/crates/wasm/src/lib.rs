//! Browser bindings for the demo page in `www/`.
//!
//! Each export is a thin wrapper around a plain function returning
//! `Result<String, String>`, so the logic is testable off the browser.

use doodle_core::enumerate::classify;
use doodle_core::report::CodeReport;
use doodle_core::svg::{render_svg, SvgOptions};
use doodle_core::{ArrowDiagram, Counts, GaussCode, SizeLimit, Symmetry};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `n` the page will classify; keeps the tab responsive.
pub const DEMO_MAX_N: usize = 5;

#[derive(Serialize)]
struct Analysis {
    report: CodeReport,
    arrow: String,
    svg: String,
}

#[derive(Serialize)]
struct GalleryEntry {
    name: String,
    canonical: GaussCode,
    forward: String,
    backward: Option<String>,
    svg: String,
}

#[derive(Serialize)]
struct Census {
    n: usize,
    counts: Counts,
    classes: Vec<GalleryEntry>,
}

fn small_svg() -> SvgOptions {
    SvgOptions {
        size: 140.0,
        head_length: 9.0,
        head_width: 7.0,
        point_radius: 2.5,
        show_indices: false,
        ..SvgOptions::default()
    }
}

fn symmetry(mode: &str) -> Result<Option<Symmetry>, String> {
    match mode {
        "" | "raw" => Ok(None),
        "rot" => Ok(Some(Symmetry::RotationOnly)),
        "dihedral" => Ok(Some(Symmetry::RotationAndReflection)),
        other => Err(format!("unknown mode {other:?}; use raw, rot or dihedral")),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo values serialize")
}

/// Canonical forms, minimality, orbits and class name of one code.
pub fn analyze_code(text: &str) -> Result<String, String> {
    let code = GaussCode::parse(text).map_err(|e| e.to_string())?;
    let report = if code.n() <= DEMO_MAX_N {
        let table = classify(code.n(), SizeLimit::default()).map_err(|e| e.to_string())?;
        CodeReport::new(&code, Some(&table))
    } else {
        CodeReport::new(&code, None)
    };
    let diagram = ArrowDiagram::from_code(&code);
    Ok(to_json(&Analysis {
        report,
        arrow: diagram.encoding(),
        svg: render_svg(&diagram, &SvgOptions::default()),
    }))
}

/// The arrow diagram of a code, optionally replaced by its orbit minimum.
pub fn arrow_svg_of(text: &str, mode: &str) -> Result<String, String> {
    let code = GaussCode::parse(text).map_err(|e| e.to_string())?;
    let mut diagram = ArrowDiagram::from_code(&code);
    if let Some(sym) = symmetry(mode)? {
        diagram = diagram.canonical(sym);
    }
    Ok(render_svg(&diagram, &SvgOptions::default()))
}

/// Counts and one drawing per unoriented class.
pub fn census_of(n: usize) -> Result<String, String> {
    let table = classify(n, SizeLimit::new(DEMO_MAX_N)).map_err(|e| e.to_string())?;
    let opts = small_svg();
    let classes = table
        .unoriented()
        .iter()
        .map(|u| GalleryEntry {
            name: u.name.to_string(),
            canonical: u.class.canonical().clone(),
            forward: table.oriented()[u.plus].name.to_string(),
            backward: u.minus.map(|i| table.oriented()[i].name.to_string()),
            svg: render_svg(&ArrowDiagram::from_code(u.class.canonical()), &opts),
        })
        .collect();
    Ok(to_json(&Census {
        n,
        counts: table.counts(),
        classes,
    }))
}

#[wasm_bindgen]
pub fn analyze(code: &str) -> Result<String, JsValue> {
    analyze_code(code).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = arrowSvg)]
pub fn arrow_svg(code: &str, mode: &str) -> Result<String, JsValue> {
    arrow_svg_of(code, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census(n: usize) -> Result<String, JsValue> {
    census_of(n).map_err(|e| JsValue::from_str(&e))
}
