//! Deterministic SVG pictures of the cut surface and the branched set.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::classification::{classify, validate_alternating_trace};
use crate::diagram::{build_cut_model, coloring, trace_components, Boundary, Color, Side};
use crate::identify::{LinkMode, MontesinosLinkData};
use crate::params::DiagramParams;

/// Fixed palette. The first three are the curve colors, then Blue and Yellow
/// for branched sets, then grays and spares for uncolorable systems.
pub const PALETTE: [&str; 16] = [
    "#d62728", "#2ca02c", "#000000", "#1f77b4", "#e6b800", "#7f7f7f", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#ff7f0e", "#aec7e8", "#98df8a", "#c5b0d5", "#c49c94",
];

const RED: &str = PALETTE[0];
const GREEN: &str = PALETTE[1];
const BLACK: &str = PALETTE[2];
const BLUE: &str = PALETTE[3];
const YELLOW: &str = PALETTE[4];
const GRAY: &str = PALETTE[5];

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Path {
        d: String,
        stroke: &'static str,
        width: f64,
        dashed: bool,
        class: &'static str,
    },
    Circle {
        cx: f64,
        cy: f64,
        r: f64,
        stroke: &'static str,
        fill: &'static str,
    },
    Rect {
        x: f64,
        y: f64,
        w: f64,
        h: f64,
        stroke: &'static str,
    },
    Text {
        x: f64,
        y: f64,
        size: f64,
        content: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgDoc {
    pub width: u32,
    pub height: u32,
    pub elements: Vec<Element>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl SvgDoc {
    fn new(width: u32, height: u32) -> Self {
        SvgDoc {
            width,
            height,
            elements: Vec::new(),
        }
    }

    /// Number of path elements with the given class.
    pub fn count(&self, class: &str) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(e, Element::Path { class: c, .. } if *c == class))
            .count()
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &'static str, class: &'static str) {
        let d = format!("M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1);
        self.elements.push(Element::Path {
            d,
            stroke,
            width: 1.5,
            dashed: false,
            class,
        });
    }

    fn text(&mut self, x: f64, y: f64, size: f64, content: impl Into<String>) {
        self.elements.push(Element::Text {
            x,
            y,
            size,
            content: content.into(),
        });
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
        let _ = writeln!(
            s,
            r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
            self.width, self.height
        );
        for e in &self.elements {
            match e {
                Element::Path {
                    d,
                    stroke,
                    width,
                    dashed,
                    class,
                } => {
                    let dash = if *dashed {
                        r#" stroke-dasharray="4 3""#
                    } else {
                        ""
                    };
                    let _ = writeln!(
                        s,
                        r#"<path class="{class}" d="{d}" stroke="{stroke}" stroke-width="{width:.2}" fill="none"{dash}/>"#
                    );
                }
                Element::Circle {
                    cx,
                    cy,
                    r,
                    stroke,
                    fill,
                } => {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" stroke="{stroke}" fill="{fill}"/>"#
                    );
                }
                Element::Rect { x, y, w, h, stroke } => {
                    let _ = writeln!(
                        s,
                        r#"<rect x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" stroke="{stroke}" fill="none"/>"#
                    );
                }
                Element::Text {
                    x,
                    y,
                    size,
                    content,
                } => {
                    let _ = writeln!(
                        s,
                        r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="{size:.1}">{}</text>"#,
                        escape(content)
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

struct Ring {
    cx: f64,
    cy: f64,
    r: f64,
    slots: usize,
}

impl Ring {
    /// Slot `j`, clockwise from the top (SVG's y axis points down).
    fn point(&self, j: usize) -> (f64, f64) {
        let t = -PI / 2.0 + 2.0 * PI * (j as f64 + 0.5) / self.slots as f64;
        (self.cx + self.r * t.cos(), self.cy + self.r * t.sin())
    }
}

fn ring_for(b: Boundary, n: usize) -> Ring {
    let (cx, cy) = match b.side() {
        Side::Left => (220.0, 240.0),
        Side::Right => (640.0, 240.0),
    };
    let slots = b.slots(n);
    match b {
        Boundary::GammaLeft | Boundary::GammaRight => Ring {
            cx,
            cy,
            r: 180.0,
            slots,
        },
        Boundary::AlphaMinus | Boundary::BetaMinus => Ring {
            cx: cx - 80.0,
            cy,
            r: 50.0,
            slots,
        },
        Boundary::AlphaPlus | Boundary::BetaPlus => Ring {
            cx: cx + 80.0,
            cy,
            r: 50.0,
            slots,
        },
    }
}

fn boundary_name(b: Boundary) -> &'static str {
    match b {
        Boundary::AlphaPlus => "a+",
        Boundary::AlphaMinus => "a-",
        Boundary::GammaLeft => "g_l",
        Boundary::BetaPlus => "b+",
        Boundary::BetaMinus => "b-",
        Boundary::GammaRight => "g_r",
    }
}

/// Both pants with their straightened arcs, colored by traced component.
pub fn render_cut_surface(params: &DiagramParams) -> SvgDoc {
    let mut doc = SvgDoc::new(860, 520);
    doc.text(20.0, 24.0, 14.0, params.to_string());
    let (model, pasting) = match build_cut_model(params) {
        Ok(x) => x,
        Err(e) => {
            doc.text(20.0, 48.0, 12.0, format!("invalid diagram: {e}"));
            return doc;
        }
    };
    let n = model.n();
    let traced = trace_components(&model, &pasting);
    let col = coloring(&traced).ok();
    let legend = match (
        col.is_some() && validate_alternating_trace(params),
        classify(params),
    ) {
        (true, Ok(c)) => format!("alternating, class {c}"),
        _ => format!("not alternating, {} components", traced.components.len()),
    };
    doc.text(20.0, 44.0, 12.0, legend);

    let mut arc_color = std::collections::HashMap::new();
    for (id, comp) in traced.components.iter().enumerate() {
        let stroke = match col {
            Some(c) => match c.color_of(id) {
                Color::Red => RED,
                Color::Green => GREEN,
                Color::Black => BLACK,
            },
            None => PALETTE[5 + id % 11],
        };
        for a in &comp.arcs {
            arc_color.insert(*a, stroke);
        }
    }

    let boundaries = [
        Boundary::GammaLeft,
        Boundary::AlphaMinus,
        Boundary::AlphaPlus,
        Boundary::GammaRight,
        Boundary::BetaMinus,
        Boundary::BetaPlus,
    ];
    for b in boundaries {
        let ring = ring_for(b, n);
        doc.elements.push(Element::Circle {
            cx: ring.cx,
            cy: ring.cy,
            r: ring.r,
            stroke: GRAY,
            fill: "none",
        });
        doc.text(ring.cx - 10.0, ring.cy + 4.0, 11.0, boundary_name(b));
        let outer = if matches!(b, Boundary::GammaLeft | Boundary::GammaRight) {
            12.0
        } else {
            -14.0
        };
        let label = Ring {
            r: ring.r + outer,
            ..ring
        };
        for j in 0..ring.slots {
            let (x, y) = label.point(j);
            doc.text(x - 3.0, y + 3.0, 7.0, j.to_string());
        }
    }
    for side in [Side::Left, Side::Right] {
        for (index, arc) in model.arcs(side).iter().enumerate() {
            let [p, q] = arc.ends;
            let a = ring_for(p.boundary, n).point(p.slot);
            let b = ring_for(q.boundary, n).point(q.slot);
            let stroke = arc_color
                .get(&crate::diagram::ArcRef { side, index })
                .copied()
                .unwrap_or(GRAY);
            doc.line(a, b, stroke, "arc");
        }
    }
    doc
}

fn render_pillowcase(doc: &mut SvgDoc, data: &MontesinosLinkData) {
    let p = &data.pillowcase;
    let (x0, y0, size) = (60.0, 70.0, 320.0);
    doc.elements.push(Element::Rect {
        x: x0,
        y: y0,
        w: size,
        h: size,
        stroke: BLACK,
    });
    doc.text(
        x0,
        y0 - 12.0,
        12.0,
        format!("front slope {}/{}, back slope {}/{}", -p.m, p.n, p.m, p.n),
    );
    let n = p.n.max(1) as f64;
    let unit = size / n;
    // strands y = c + kx with k = -m/n (front) and m/n (back), clipped to the square
    for (dashed, k) in [(false, -(p.m as f64) / n), (true, p.m as f64 / n)] {
        let hi = n - (k * n).min(0.0);
        let mut c = -(k * n).max(0.0) + 0.5;
        while c < hi {
            if let Some((a, b)) = clip((0.0, c), (n, c + k * n), n) {
                let to = |q: (f64, f64)| (x0 + q.0 * unit, y0 + size - q.1 * unit);
                let (a, b) = (to(a), to(b));
                let d = format!("M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1);
                doc.elements.push(Element::Path {
                    d,
                    stroke: BLUE,
                    width: 1.5,
                    dashed,
                    class: "blue",
                });
            }
            c += 1.0;
        }
    }
    // yellow circle sits 2k3 half-steps from the base point along the bottom edge
    let steps = (2 * p.n.max(1)) as f64;
    let off = (p.yellow_offset as f64).rem_euclid(steps);
    let pos = if off <= steps / 2.0 {
        x0 + off * unit
    } else {
        x0 + (steps - off) * unit
    };
    doc.elements.push(Element::Circle {
        cx: pos,
        cy: y0 + size + 22.0,
        r: 14.0,
        stroke: YELLOW,
        fill: "none",
    });
    let walk = match p.walk {
        crate::identify::Walk::Along => "along",
        crate::identify::Walk::Against => "against",
    };
    doc.text(
        x0,
        y0 + size + 56.0,
        11.0,
        format!("yellow offset {} ({walk} c)", p.yellow_offset),
    );
    for (i, b) in p.boxes.iter().enumerate() {
        let bx = x0 + size + 30.0;
        let by = y0 + 40.0 + 70.0 * i as f64;
        doc.elements.push(Element::Rect {
            x: bx,
            y: by,
            w: 50.0,
            h: 40.0,
            stroke: BLACK,
        });
        doc.text(bx + 18.0, by + 24.0, 12.0, b.to_string());
    }
}

/// Clip the segment to `[0,n]²` (Liang–Barsky).
fn clip(a: (f64, f64), b: (f64, f64), n: f64) -> Option<((f64, f64), (f64, f64))> {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for (p, q) in [(-dx, a.0), (dx, n - a.0), (-dy, a.1), (dy, n - a.1)] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let t = q / p;
            if p < 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
        }
    }
    (t0 < t1).then_some((
        (a.0 + t0 * dx, a.1 + t0 * dy),
        (a.0 + t1 * dx, a.1 + t1 * dy),
    ))
}

fn render_tangles(doc: &mut SvgDoc, data: &MontesinosLinkData) {
    let (x0, y0) = (40.0, 90.0);
    let k = data.tangles.len();
    let w = 110.0;
    let total = (k.max(1) as f64) * (w + 20.0);
    doc.elements.push(Element::Rect {
        x: x0 - 10.0,
        y: y0 - 30.0,
        w: total + 20.0,
        h: 200.0,
        stroke: GRAY,
    });
    for (i, &(beta, alpha)) in data.tangles.iter().enumerate() {
        let x = x0 + i as f64 * (w + 20.0);
        doc.elements.push(Element::Rect {
            x,
            y: y0,
            w,
            h: 120.0,
            stroke: BLACK,
        });
        doc.text(x + 30.0, y0 + 64.0, 14.0, format!("{beta}/{alpha}"));
        // strands to the neighbouring tangles
        for (a, b) in [
            ((x, y0 + 20.0), (x - 20.0, y0 + 20.0)),
            ((x, y0 + 100.0), (x - 20.0, y0 + 100.0)),
        ] {
            doc.line(a, b, BLUE, "blue");
        }
    }
    if k > 0 {
        let xe = x0 + k as f64 * (w + 20.0) - 20.0;
        for y in [y0 + 20.0, y0 + 100.0] {
            doc.line((xe, y), (xe + 20.0, y), BLUE, "blue");
        }
    }
}

pub fn render_branch_link(data: &MontesinosLinkData) -> SvgDoc {
    let mut doc = SvgDoc::new(520, 480);
    let title = match data.mode {
        LinkMode::Pillowcase => format!(
            "pillowcase {}x{}, slope {}/{}",
            data.pillowcase.n, data.pillowcase.n, data.pillowcase.m, data.pillowcase.n
        ),
        LinkMode::Tangles => {
            let t: Vec<String> = data
                .tangles
                .iter()
                .map(|(b, a)| format!("({b},{a})"))
                .collect();
            format!("tangles {}", t.join(" "))
        }
    };
    doc.text(20.0, 24.0, 14.0, title);
    match data.mode {
        LinkMode::Pillowcase => render_pillowcase(&mut doc, data),
        LinkMode::Tangles => render_tangles(&mut doc, data),
    }
    for (i, note) in data.notes.iter().enumerate() {
        doc.text(20.0, 440.0 + 14.0 * i as f64, 11.0, note.clone());
    }
    doc
}
