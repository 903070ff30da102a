use std::fmt::Write;

use crate::error::{Error, Result};
use crate::model::ColoredTree;

const SIZE: f64 = 400.0;

/// Draws a partition of the square from a tree colored by `{0, 1}`. Color 0 is
/// a horizontal cut with the left subtree below it, color 1 a vertical cut
/// with the left subtree to its left. Each part gets one `<rect>`.
pub fn render_planar(t: &ColoredTree) -> Result<String> {
    if let Some(c) = t.max_color().filter(|&c| c > 1) {
        return Err(Error::Unsupported(format!(
            "planar rendering needs colors 0 and 1, found {c}"
        )));
    }
    let mut rects = Vec::with_capacity(t.size() + 1);
    layout(t, (0.0, 0.0, SIZE, SIZE), &mut rects);

    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    for (x, y, w, h) in rects {
        writeln!(
            svg,
            r##"  <rect x="{x:.3}" y="{y:.3}" width="{w:.3}" height="{h:.3}" fill="#f4f4f4" stroke="#000" stroke-width="1"/>"##
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

type Rect = (f64, f64, f64, f64);

fn layout(t: &ColoredTree, (x, y, w, h): Rect, out: &mut Vec<Rect>) {
    let Some(v) = t.root() else {
        out.push((x, y, w, h));
        return;
    };
    let frac = (v.left().size() + 1) as f64 / (t.size() + 1) as f64;
    if v.color() == 0 {
        let below = h * frac;
        layout(v.left(), (x, y + h - below, w, below), out);
        layout(v.right(), (x, y, w, h - below), out);
    } else {
        let lw = w * frac;
        layout(v.left(), (x, y, lw, h), out);
        layout(v.right(), (x + lw, y, w - lw, h), out);
    }
}
