//! Arc-diagram rendering of oriented meanders.
//!
//! Vertices sit on a horizontal line. Top edges are upper semicircles and
//! bottom edges lower ones, each with an arrowhead at its apex pointing
//! along the orientation (top right to left, bottom left to right).

use std::fmt::Write;

use seaweed_core::{build_meander, orient, SeaweedSpec};

const SPACING: f64 = 48.0;
const MARGIN: f64 = 32.0;
const ARROW: f64 = 5.0;

fn x_of(v: usize) -> f64 {
    MARGIN + (v - 1) as f64 * SPACING
}

pub fn render_svg(spec: &SeaweedSpec) -> String {
    let m = build_meander(spec);
    let om = orient(&m);
    let n = m.n();
    let span = |edges: &[(usize, usize)]| edges.iter().map(|&(p, q)| q - p).max().unwrap_or(0) as f64;
    let top_h = span(&m.top_edges()) * SPACING / 2.0;
    let bottom_h = span(&m.bottom_edges()) * SPACING / 2.0;
    let width = 2.0 * MARGIN + (n - 1) as f64 * SPACING;
    let height = top_h + bottom_h + 2.0 * MARGIN + 16.0;
    let y = MARGIN + top_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<title>{spec}</title>");
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1.5">"#);
    for &(from, to) in om.directed_edges() {
        let is_top = m.top_partner(from) == Some(to);
        let (x0, x1) = (x_of(from), x_of(to));
        let r = (x1 - x0).abs() / 2.0;
        // Screen y grows downward: right-to-left over the top and
        // left-to-right under the bottom are both counter-clockwise.
        let _ = writeln!(
            out,
            r#"<path class="{}" data-from="{from}" data-to="{to}" d="M {x0} {y} A {r} {r} 0 0 0 {x1} {y}"/>"#,
            if is_top { "top" } else { "bottom" }
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for &(from, to) in om.directed_edges() {
        let is_top = m.top_partner(from) == Some(to);
        let (x0, x1) = (x_of(from), x_of(to));
        let cx = (x0 + x1) / 2.0;
        let cy = if is_top { y - (x1 - x0).abs() / 2.0 } else { y + (x1 - x0).abs() / 2.0 };
        let dir = if x1 > x0 { 1.0 } else { -1.0 };
        let tip = cx + dir * ARROW;
        let back = cx - dir * ARROW;
        let _ = writeln!(
            out,
            r#"<polygon class="arrow" points="{tip},{cy} {back},{} {back},{}"/>"#,
            cy - ARROW,
            cy + ARROW
        );
    }
    for v in 1..=n {
        let x = x_of(v);
        let _ = writeln!(out, r#"<circle class="vertex" cx="{x}" cy="{y}" r="4"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" font-size="12" text-anchor="middle">v{v}</text>"#,
            height - 8.0
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
