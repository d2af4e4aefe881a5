//! Deterministic SVG 1.1 drawings of polygons and galleries.
//!
//! Vertex `k` sits at angle `2πk/n`, counterclockwise from east. All
//! coordinates are printed with three decimals, rounded half to even.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::classify::side_period;
use crate::error::Result;
use crate::polygon::SideTuple;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub size_px: u32,
    pub show_labels: bool,
    pub show_axes: bool,
    pub stroke_width: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            size_px: 240,
            show_labels: false,
            show_axes: false,
            stroke_width: 1.5,
        }
    }
}

impl RenderOptions {
    pub const MIN_SIZE: u32 = 64;

    fn size(&self) -> f64 {
        f64::from(self.size_px.max(Self::MIN_SIZE))
    }
}

const CAPTION_HEIGHT: f64 = 24.0;

/// Fixed-precision coordinate: three decimals, ties to even, no `-0.000`.
fn fmt3(x: f64) -> String {
    let milli = (x * 1000.0).round_ties_even() as i64;
    let sign = if milli < 0 { "-" } else { "" };
    let abs = milli.unsigned_abs();
    format!("{sign}{}.{:03}", abs / 1000, abs % 1000)
}

fn header(out: &mut String, width: f64, height: f64) {
    let (w, h) = (fmt3(width), fmt3(height));
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
}

/// Writes the polygon body into a square of side `size` at `(ox, oy)`.
fn polygon_body(out: &mut String, t: &SideTuple, opts: &RenderOptions, ox: f64, oy: f64) -> Result<()> {
    let cycle = t.walk()?;
    let edges = cycle.edge_set();
    let n = t.n();
    let size = opts.size();
    let centre = size / 2.0;
    let radius = size * 0.40;
    let point = |angle: f64, r: f64| (ox + centre + r * angle.cos(), oy + centre - r * angle.sin());
    let vertex = |k: u32| point(2.0 * PI * f64::from(k) / n as f64, radius);
    let stroke = fmt3(opts.stroke_width);

    let _ = writeln!(out, "<g class=\"polygon\" data-n=\"{n}\" data-sides=\"{t}\">");
    if opts.show_axes {
        for &axis in &edges.symmetry_profile().axes {
            let angle = PI * f64::from(axis) / n as f64;
            let (x1, y1) = point(angle, radius * 1.1);
            let (x2, y2) = point(angle + PI, radius * 1.1);
            let _ = writeln!(
                out,
                "<line class=\"axis\" data-axis=\"{axis}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888888\" stroke-width=\"{}\" stroke-dasharray=\"4 3\"/>",
                fmt3(x1), fmt3(y1), fmt3(x2), fmt3(y2), fmt3(opts.stroke_width / 2.0)
            );
        }
    }
    // chords in walk order
    let v = cycle.vertices();
    for i in 0..n {
        let (p, q) = (v[i], v[(i + 1) % n]);
        let (x1, y1) = vertex(p);
        let (x2, y2) = vertex(q);
        let _ = writeln!(
            out,
            "<line class=\"chord\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#1f4e79\" stroke-width=\"{stroke}\"/>",
            fmt3(x1), fmt3(y1), fmt3(x2), fmt3(y2)
        );
    }
    let dot = fmt3((size / 80.0).max(1.5));
    for k in 0..n as u32 {
        let (x, y) = vertex(k);
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"{dot}\" fill=\"#000000\"/>",
            fmt3(x), fmt3(y)
        );
    }
    if opts.show_labels {
        let font = fmt3((size / 20.0).max(8.0));
        for k in 0..n as u32 {
            let (x, y) = point(2.0 * PI * f64::from(k) / n as f64, radius * 1.15);
            let _ = writeln!(
                out,
                "<text class=\"label\" x=\"{}\" y=\"{}\" font-size=\"{font}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{k}</text>",
                fmt3(x), fmt3(y)
            );
        }
    }
    out.push_str("</g>\n");
    Ok(())
}

/// A standalone SVG document of one polygon.
pub fn polygon_svg(t: &SideTuple, opts: &RenderOptions) -> Result<String> {
    let size = opts.size();
    let mut out = String::new();
    header(&mut out, size, size);
    polygon_body(&mut out, t, opts, 0.0, 0.0)?;
    out.push_str("</svg>\n");
    Ok(out)
}

/// Caption built from the period-3 decomposition of the sides.
pub fn caption(t: &SideTuple) -> String {
    let s = t.sides();
    match side_period(t) {
        1 => format!("a={}", s[0]),
        3 if s[0] == s[2] => format!("a={};b={}", s[0], s[1]),
        3 => format!("a={};b={};c={}", s[0], s[1], s[2]),
        _ => t.to_string(),
    }
}

/// A grid of captioned polygons, `columns` cells per row.
pub fn gallery_svg(ts: &[SideTuple], columns: usize, opts: &RenderOptions) -> Result<String> {
    let columns = columns.max(1);
    let size = opts.size();
    let rows = ts.len().div_ceil(columns);
    let cell_h = size + CAPTION_HEIGHT;
    let mut out = String::new();
    header(&mut out, columns as f64 * size, rows as f64 * cell_h);
    for (i, t) in ts.iter().enumerate() {
        let ox = (i % columns) as f64 * size;
        let oy = (i / columns) as f64 * cell_h;
        let _ = writeln!(out, "<g class=\"cell\" data-index=\"{i}\">");
        polygon_body(&mut out, t, opts, ox, oy)?;
        let _ = writeln!(
            out,
            "<text class=\"caption\" x=\"{}\" y=\"{}\" font-size=\"14.000\" text-anchor=\"middle\">{}</text>",
            fmt3(ox + size / 2.0),
            fmt3(oy + size + CAPTION_HEIGHT * 0.6),
            caption(t)
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"{class}\"")).count()
    }

    #[test]
    fn fmt3_rounds_and_normalizes_sign() {
        assert_eq!(fmt3(1.0), "1.000");
        assert_eq!(fmt3(-0.0001), "0.000");
        assert_eq!(fmt3(-2.5), "-2.500");
        assert_eq!(fmt3(0.0005), "0.000");
        assert_eq!(fmt3(0.0015), "0.002");
        assert_eq!(fmt3(123.4564), "123.456");
    }

    #[test]
    fn figure_one_hexagon() {
        let t = SideTuple::new(6, vec![1, 2, 1, 4, 3, 1]).unwrap();
        let opts = RenderOptions {
            show_labels: true,
            ..Default::default()
        };
        let svg = polygon_svg(&t, &opts).unwrap();
        assert_eq!(count(&svg, "vertex"), 6);
        assert_eq!(count(&svg, "chord"), 6);
        assert_eq!(count(&svg, "label"), 6);
        for k in 0..6 {
            assert!(svg.contains(&format!(">{k}</text>")));
        }
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn triangle_vertices_are_equilateral() {
        let t = SideTuple::new(3, vec![1, 1, 1]).unwrap();
        let opts = RenderOptions {
            size_px: 100,
            ..Default::default()
        };
        let svg = polygon_svg(&t, &opts).unwrap();
        assert_eq!(count(&svg, "chord"), 3);
        // vertex 0 due east of the centre
        assert!(svg.contains("cx=\"90.000\" cy=\"50.000\""));
    }

    #[test]
    fn axes_overlay_for_axial_nonagon() {
        let t = SideTuple::periodic(9, &[1, 4, 1]).unwrap();
        let opts = RenderOptions {
            show_axes: true,
            ..Default::default()
        };
        let svg = polygon_svg(&t, &opts).unwrap();
        assert_eq!(count(&svg, "axis"), 3);
        assert_eq!(svg.matches("stroke-dasharray").count(), 3);
        let circular = SideTuple::periodic(9, &[1, 4, 7]).unwrap();
        assert_eq!(count(&polygon_svg(&circular, &opts).unwrap(), "axis"), 0);
    }

    #[test]
    fn invalid_walk_is_rejected() {
        let t = SideTuple::new(6, vec![2; 6]).unwrap();
        assert!(polygon_svg(&t, &RenderOptions::default()).is_err());
        assert!(gallery_svg(&[t], 2, &RenderOptions::default()).is_err());
    }

    #[test]
    fn gallery_layout_and_captions() {
        let ts: Vec<SideTuple> = [[1, 4, 1], [4, 7, 4], [7, 1, 7]]
            .iter()
            .map(|p| SideTuple::periodic(9, p).unwrap())
            .collect();
        let opts = RenderOptions::default();
        let svg = gallery_svg(&ts, 3, &opts).unwrap();
        assert_eq!(count(&svg, "cell"), 3);
        assert!(svg.contains(">a=1;b=4</text>"));
        assert!(svg.contains(">a=7;b=1</text>"));
        assert!(svg.contains("width=\"720.000\" height=\"264.000\""));

        let q = SideTuple::periodic(12, &[1, 4, 10]).unwrap();
        assert!(gallery_svg(&[q], 2, &opts).unwrap().contains(">a=1;b=4;c=10</text>"));
    }

    #[test]
    fn empty_gallery() {
        let svg = gallery_svg(&[], 3, &RenderOptions::default()).unwrap();
        assert_eq!(count(&svg, "cell"), 0);
        assert!(svg.contains("height=\"0.000\""));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
