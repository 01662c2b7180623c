//! Rook n-diagrams: two rows of `n` vertices, an edge from top `i` to
//! bottom `j` for every one at `(i, j)`.

use std::fmt::Write as _;

use crate::algebra::multiply;
use crate::element::Element;

pub const DEFAULT_UNIT: u32 = 40;

/// Steepest inclination the character renderer draws as lines.
pub const ASCII_MAX_SLOPE: i64 = 3;

const MARGIN: i64 = 20;
const LABEL_GAP: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramLayout {
    pub n: i64,
    pub unit: u32,
    /// `(top, bottom)` vertex pairs, 1-based, ordered by `top`.
    pub edges: Vec<(i64, i64)>,
}

impl DiagramLayout {
    /// Horizontal position of vertex `i`; rows sit at `y = 0` and `y = unit`.
    pub fn x_of(&self, i: i64) -> i64 {
        (i - 1) * i64::from(self.unit)
    }
}

/// Edges `{(i, i+d) : k <= i <= m}`; none for zero.
pub fn layout(x: Element, n: i64) -> DiagramLayout {
    layout_with_unit(x, n, DEFAULT_UNIT)
}

pub fn layout_with_unit(x: Element, n: i64, unit: u32) -> DiagramLayout {
    let edges = match x {
        Element::Zero => Vec::new(),
        Element::NonZero(t) => (t.k()..=t.m()).map(|i| (i, i + t.d())).collect(),
    };
    DiagramLayout { n, unit, edges }
}

/// Composite edges found by following each edge of `x` through the shared
/// middle row into an edge of `y`. Uses only the two layouts.
pub fn trace_product(x: Element, y: Element, n: i64) -> Vec<(i64, i64)> {
    let top = layout(x, n);
    let bottom = layout(y, n);
    top.edges
        .iter()
        .filter_map(|&(i, mid)| bottom.edges.iter().find(|&&(j, _)| j == mid).map(|&(_, l)| (i, l)))
        .collect()
}

fn label_row(n: i64) -> String {
    let mut s = String::new();
    for i in 1..=n {
        let label = i.to_string();
        s.push_str(&label);
        if i < n {
            s.push_str(&" ".repeat(4usize.saturating_sub(label.len()).max(1)));
        }
    }
    s
}

fn vertex_row(n: i64) -> String {
    vec!["o"; n as usize].join("   ")
}

/// Character drawing with vertices four columns apart and three rows of
/// edge strokes. Inclinations steeper than [`ASCII_MAX_SLOPE`] are listed
/// as text instead.
pub fn render_ascii(x: Element, n: i64) -> String {
    let lay = layout(x, n);
    let slope = x.triplet().map_or(0, |t| t.d());
    let drawable = slope.abs() <= ASCII_MAX_SLOPE;
    let width = (4 * (n - 1) + 1) as usize + 4 * ASCII_MAX_SLOPE as usize;

    let mut out = String::new();
    out.push_str(&label_row(n));
    out.push('\n');
    out.push_str(&vertex_row(n));
    out.push('\n');
    for r in 1..=3i64 {
        let mut row = vec![' '; width];
        if drawable {
            let stroke = match slope.signum() {
                0 => '|',
                1 => '\\',
                _ => '/',
            };
            for &(top, _) in &lay.edges {
                let col = 4 * (top - 1) + slope * r;
                if (0..width as i64).contains(&col) {
                    row[col as usize] = stroke;
                }
            }
        }
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&vertex_row(n));
    out.push('\n');
    out.push_str(&label_row(n));
    out.push('\n');
    if !drawable {
        let list: Vec<String> = lay.edges.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        writeln!(out, "edges: {}", list.join(" ")).expect("writing to a String");
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(n: i64, unit: u32, rows: i64, caption_lines: i64) -> Self {
        let unit = i64::from(unit);
        let width = (n - 1) * unit + 2 * MARGIN;
        let height = (rows - 1) * unit + 2 * MARGIN + 2 * LABEL_GAP + caption_lines * 20;
        let mut body = String::new();
        body.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"{} {} {width} {height}\">",
            -MARGIN,
            -MARGIN - LABEL_GAP
        )
        .expect("writing to a String");
        Svg { body }
    }

    fn lines(&mut self, class: &str, stroke: &str, dashed: bool, segs: &[(i64, i64, i64, i64)]) {
        if segs.is_empty() {
            return;
        }
        let dash = if dashed { " stroke-dasharray=\"6 4\"" } else { "" };
        writeln!(self.body, "<g class=\"{class}\" stroke=\"{stroke}\" stroke-width=\"2\"{dash}>").unwrap();
        for &(x1, y1, x2, y2) in segs {
            writeln!(self.body, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>").unwrap();
        }
        self.body.push_str("</g>\n");
    }

    fn vertices(&mut self, n: i64, unit: i64, row_ys: &[i64]) {
        self.body.push_str("<g class=\"vertices\" fill=\"black\">\n");
        for &y in row_ys {
            for i in 1..=n {
                writeln!(self.body, "<circle cx=\"{}\" cy=\"{y}\" r=\"4\"/>", (i - 1) * unit).unwrap();
            }
        }
        self.body.push_str("</g>\n");
    }

    fn labels(&mut self, n: i64, unit: i64, top_y: i64, bottom_y: i64) {
        self.body
            .push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
        for (y, dy) in [(top_y, -LABEL_GAP), (bottom_y, LABEL_GAP + 10)] {
            for i in 1..=n {
                writeln!(self.body, "<text x=\"{}\" y=\"{}\">{i}</text>", (i - 1) * unit, y + dy).unwrap();
            }
        }
        self.body.push_str("</g>\n");
    }

    fn caption(&mut self, x: i64, y: i64, text: &str) {
        writeln!(
            self.body,
            "<text class=\"caption\" x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">{}</text>",
            escape(text)
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn segments(lay: &DiagramLayout, y_top: i64, y_bottom: i64) -> Vec<(i64, i64, i64, i64)> {
    lay.edges.iter().map(|&(a, b)| (lay.x_of(a), y_top, lay.x_of(b), y_bottom)).collect()
}

/// SVG 1.1 drawing of the diagram of `x`; byte-identical for equal input.
pub fn render_svg(x: Element, n: i64) -> String {
    let lay = layout(x, n);
    let unit = i64::from(lay.unit);
    let mut svg = Svg::new(n, lay.unit, 2, 1);
    svg.lines("edges", "black", false, &segments(&lay, 0, unit));
    svg.vertices(n, unit, &[0, unit]);
    svg.labels(n, unit, 0, unit);
    svg.caption((n - 1) * unit / 2, unit + 2 * LABEL_GAP + 24, &x.to_string());
    svg.finish()
}

/// Stacked diagram of `x` over `y` sharing the middle row, with the traced
/// composite edges of `xy` drawn dashed in red from top to bottom.
pub fn render_product(x: Element, y: Element, n: i64) -> String {
    let top = layout(x, n);
    let bottom = layout(y, n);
    let unit = i64::from(top.unit);
    let composite = DiagramLayout { n, unit: top.unit, edges: trace_product(x, y, n) };
    let mut svg = Svg::new(n, top.unit, 3, 1);
    svg.lines("factor-left", "black", false, &segments(&top, 0, unit));
    svg.lines("factor-right", "black", false, &segments(&bottom, unit, 2 * unit));
    svg.lines("product", "red", true, &segments(&composite, 0, 2 * unit));
    svg.vertices(n, unit, &[0, unit, 2 * unit]);
    svg.labels(n, unit, 0, 2 * unit);
    let caption = format!("{x} {y} = {}", multiply(x, y));
    svg.caption((n - 1) * unit / 2, 2 * unit + 2 * LABEL_GAP + 24, &caption);
    svg.finish()
}
