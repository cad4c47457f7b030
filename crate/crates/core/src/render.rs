//! Arc-diagram rendering of book embeddings as SVG.
//!
//! Vertices sit on a horizontal spine at unit spacing in spine order; each
//! edge is a semicircle, odd pages above the spine and even pages below,
//! one stroke color per page. Geometry is integral and deterministic: the
//! same embedding always renders to the same bytes.

use std::fmt::Write as _;

use crate::graph::{BookEmbedding, Graph};

/// Horizontal distance between adjacent spine positions, in px.
const UNIT: usize = 40;
const MARGIN: usize = 30;
const DOT_RADIUS: usize = 4;

/// Stroke colors, indexed by (page - 1) mod palette size. Pages 13, 25, ...
/// reuse colors; at the parameter ranges this crate targets that is moot.
const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
];

/// Renders an embedding of `g` to an SVG document.
pub fn render_svg(g: &Graph, emb: &BookEmbedding) -> String {
    let n = g.n();
    let spine_len = n.saturating_sub(1) * UNIT;
    // tallest arc spans the whole spine
    let max_rise = spine_len / 2;
    let width = 2 * MARGIN + spine_len;
    let height = 2 * MARGIN + 2 * max_rise;
    let mid = MARGIN + max_rise;

    let x = |pos: usize| MARGIN + pos * UNIT;

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(svg, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();
    if n > 0 {
        writeln!(
            svg,
            "  <line x1=\"{}\" y1=\"{mid}\" x2=\"{}\" y2=\"{mid}\" stroke=\"#333\" stroke-width=\"1\"/>",
            x(0),
            x(n - 1)
        )
        .unwrap();
    }
    // edges first ordered by page then endpoints, so z-order is stable
    let mut edges: Vec<((usize, usize), usize)> = emb.assignment.iter().collect();
    edges.sort_unstable_by_key(|&((u, v), p)| (p, u, v));
    for ((u, v), page) in edges {
        let (a, b) = (emb.order.position(u), emb.order.position(v));
        let (l, r) = (a.min(b), a.max(b));
        let radius = (r - l) * UNIT / 2;
        // sweep=1 bows the arc up (toward smaller y), sweep=0 down
        let sweep = if page % 2 == 1 { 1 } else { 0 };
        let color = PALETTE[(page - 1) % PALETTE.len()];
        writeln!(
            svg,
            "  <path d=\"M {} {mid} A {radius} {radius} 0 0 {sweep} {} {mid}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x(l),
            x(r)
        )
        .unwrap();
    }
    for pos in 0..n {
        let v = emb.order.vertex_at(pos);
        writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{mid}\" r=\"{DOT_RADIUS}\" fill=\"#111\"/>",
            x(pos)
        )
        .unwrap();
        writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111\">{v}</text>",
            x(pos),
            mid + 18
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
