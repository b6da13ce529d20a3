//! SVG rendering of arrow diagrams.
//!
//! Position `p` is drawn at angle `(p + 1)π/n + π/2n`, counter-clockwise from
//! the positive x-axis. Output is plain SVG 1.1 and byte-for-byte
//! deterministic for a given diagram and options.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::arrow::ArrowDiagram;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Width and height of the square canvas, in px.
    pub size: f64,
    /// Circle radius as a fraction of half the canvas.
    pub radius: f64,
    pub stroke_width: f64,
    pub head_length: f64,
    pub head_width: f64,
    pub point_radius: f64,
    pub circle_color: String,
    pub arrow_color: String,
    /// Label point `p` with `p + 1`.
    pub show_indices: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 240.0,
            radius: 0.8,
            stroke_width: 2.0,
            head_length: 12.0,
            head_width: 9.0,
            point_radius: 3.0,
            circle_color: "#9aa0a6".into(),
            arrow_color: "#1a73e8".into(),
            show_indices: true,
        }
    }
}

fn angle(p: usize, n: usize) -> f64 {
    (p as f64 + 1.0) * PI / n as f64 + PI / (2.0 * n as f64)
}

pub fn render_svg(diagram: &ArrowDiagram, opts: &SvgOptions) -> String {
    let n = diagram.n();
    let c = opts.size / 2.0;
    let r = opts.radius * c;
    let point = |p: usize| {
        let t = angle(p, n);
        (c + r * t.cos(), c - r * t.sin())
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#,
        size = fmt_num(opts.size)
    );
    let _ = writeln!(
        s,
        r#"<circle class="circle" cx="{0}" cy="{0}" r="{1}" fill="none" stroke="{2}" stroke-width="{3}"/>"#,
        fmt_num(c),
        fmt_num(r),
        opts.circle_color,
        fmt_num(opts.stroke_width / 2.0)
    );

    for (tail, head) in diagram.arrows() {
        let (x0, y0) = point(tail);
        let (x1, y1) = point(head);
        let (dx, dy) = (x1 - x0, y1 - y0);
        let len = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = (dx / len, dy / len);
        let head_len = opts.head_length.min(len / 2.0);
        let (bx, by) = (x1 - ux * head_len, y1 - uy * head_len);
        let (px, py) = (-uy * opts.head_width / 2.0, ux * opts.head_width / 2.0);
        let _ = writeln!(
            s,
            r#"<line class="arrow" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
            fmt_num(x0),
            fmt_num(y0),
            fmt_num(bx),
            fmt_num(by),
            opts.arrow_color,
            fmt_num(opts.stroke_width)
        );
        let _ = writeln!(
            s,
            r#"<polygon class="arrowhead" points="{},{} {},{} {},{}" fill="{}"/>"#,
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(bx + px),
            fmt_num(by + py),
            fmt_num(bx - px),
            fmt_num(by - py),
            opts.arrow_color
        );
    }

    for p in 0..2 * n {
        let (x, y) = point(p);
        let _ = writeln!(
            s,
            r#"<circle class="point" cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            fmt_num(x),
            fmt_num(y),
            fmt_num(opts.point_radius),
            opts.circle_color
        );
        if opts.show_indices {
            let t = angle(p, n);
            let lr = r + 4.0 * opts.point_radius;
            let _ = writeln!(
                s,
                r#"<text class="index" x="{}" y="{}" font-family="sans-serif" font-size="{}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
                fmt_num(c + lr * t.cos()),
                fmt_num(c - lr * t.sin()),
                fmt_num(opts.point_radius * 4.0),
                p + 1
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Three decimals, without `-0.000`.
fn fmt_num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}
