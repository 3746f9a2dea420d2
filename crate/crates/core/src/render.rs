//! SVG pictures of the face decomposition of `R^2_max`.
//!
//! The real window `[-5, 5]^2` is drawn with the first coordinate to the
//! right and the second upward. A gutter strip on the left stands for
//! `x1 = -∞`, one along the bottom for `x2 = -∞`, and the square where they
//! meet for `(-∞, -∞)`. Classification depends only on how the coordinates
//! compare with each other and with 0, so the window splits into six open
//! sectors cut by the lines `x1 = 0`, `x2 = 0`, `x1 = x2`, their six rays, and
//! the origin, each drawn in one color.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::faces::{classify, face_catalog, FaceId, Hyperplane};
use crate::hemispace::Hemispace;
use crate::maxplus::{ExtScalar, Point};

const WINDOW: f64 = 5.0;
const SCALE: f64 = 40.0;
const GUTTER: f64 = 48.0;
const MARGIN: f64 = 16.0;
const LEGEND: f64 = 190.0;

const INSIDE: &str = "#4c78a8";
const OUTSIDE: &str = "#f2cf5b";
const PALETTE: [&str; 10] = [
    "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#eeca3b", "#b279a2", "#ff9da6",
    "#9d755d", "#bab0ac",
];

type Sector = (&'static [(f64, f64)], (i64, i64));

/// Open sectors as (polygon corners, interior point).
const SECTORS: [Sector; 6] = [
    (&[(0.0, 0.0), (5.0, 0.0), (5.0, 5.0)], (2, 1)),
    (&[(0.0, 0.0), (5.0, 5.0), (0.0, 5.0)], (1, 2)),
    (&[(0.0, 0.0), (0.0, 5.0), (-5.0, 5.0), (-5.0, 0.0)], (-2, 2)),
    (&[(0.0, 0.0), (-5.0, 0.0), (-5.0, -5.0)], (-2, -1)),
    (&[(0.0, 0.0), (-5.0, -5.0), (0.0, -5.0)], (-1, -2)),
    (&[(0.0, 0.0), (0.0, -5.0), (5.0, -5.0), (5.0, 0.0)], (2, -2)),
];

/// Rays from the origin as (far end, point on the ray).
const RAYS: [((f64, f64), (i64, i64)); 6] = [
    ((5.0, 0.0), (1, 0)),
    ((5.0, 5.0), (1, 1)),
    ((0.0, 5.0), (0, 1)),
    ((-5.0, 0.0), (-1, 0)),
    ((-5.0, -5.0), (-1, -1)),
    ((0.0, -5.0), (0, -1)),
];

fn point(a: ExtScalar, b: ExtScalar) -> Point {
    Point::new(vec![a, b]).expect("two coordinates")
}

fn real(v: i64) -> ExtScalar {
    ExtScalar::int(v)
}

/// Canvas position of a real window point.
fn to_canvas(x: f64, y: f64) -> (f64, f64) {
    (
        MARGIN + GUTTER + (x + WINDOW) * SCALE,
        MARGIN + (WINDOW - y) * SCALE,
    )
}

struct Painter<'a> {
    hyperplane: &'a Hyperplane,
    hemispace: Option<&'a Hemispace>,
    catalog: Vec<FaceId>,
}

impl Painter<'_> {
    fn color(&self, p: &Point) -> Result<&'static str> {
        Ok(match self.hemispace {
            Some(hm) => {
                if hm.contains(p)? {
                    INSIDE
                } else {
                    OUTSIDE
                }
            }
            None => {
                let face = classify(self.hyperplane, p)?;
                let k = self.catalog.iter().position(|&f| f == face).unwrap_or(0);
                PALETTE[k % PALETTE.len()]
            }
        })
    }
}

/// Renders the decomposition of `R^2_max` by `h`, colored by membership in
/// `hemispace` when given and by face otherwise.
pub fn render_svg(h: &Hyperplane, hemispace: Option<&Hemispace>) -> Result<String> {
    if h.dim() != 2 {
        return Err(Error::RenderDimension(h.dim()));
    }
    if let Some(hm) = hemispace {
        if hm.dim() != 2 {
            return Err(Error::RenderDimension(hm.dim()));
        }
    }
    let painter = Painter {
        hyperplane: h,
        hemispace,
        catalog: face_catalog(h),
    };
    let side = 2.0 * WINDOW * SCALE;
    let width = 2.0 * MARGIN + GUTTER + side + LEGEND;
    let height = 2.0 * MARGIN + side + GUTTER;
    let mut svg = String::new();
    let w = &mut svg;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(w, r#"<title>{h}</title>"#).unwrap();
    writeln!(w, r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##).unwrap();

    for (corners, (a, b)) in SECTORS {
        let fill = painter.color(&point(real(a), real(b)))?;
        let pts: Vec<String> = corners
            .iter()
            .map(|&(x, y)| {
                let (cx, cy) = to_canvas(x, y);
                format!("{cx},{cy}")
            })
            .collect();
        writeln!(w, r#"<polygon points="{}" fill="{fill}" fill-opacity="0.55"/>"#, pts.join(" ")).unwrap();
    }

    // gutters: x1 = -inf on the left, x2 = -inf along the bottom
    let (left, top) = (MARGIN, MARGIN);
    let (x0, _) = to_canvas(-WINDOW, 0.0);
    let (_, y0) = to_canvas(0.0, -WINDOW);
    let bottom = ExtScalar::Bottom;
    let strips = [
        // (x, y, w, h, sample)
        (left, top, GUTTER, side / 2.0, point(bottom, real(1))),
        (left, top + side / 2.0, GUTTER, side / 2.0, point(bottom, real(-1))),
        (x0, y0, side / 2.0, GUTTER, point(real(-1), bottom)),
        (x0 + side / 2.0, y0, side / 2.0, GUTTER, point(real(1), bottom)),
        (left, y0, GUTTER, GUTTER, point(bottom, bottom)),
    ];
    for (x, y, sw, sh, p) in strips {
        let fill = painter.color(&p)?;
        writeln!(
            w,
            r##"<rect x="{x}" y="{y}" width="{sw}" height="{sh}" fill="{fill}" fill-opacity="0.55" stroke="#555555" stroke-width="0.5"/>"##
        )
        .unwrap();
    }
    let (_, oy) = to_canvas(0.0, 0.0);
    let (ox, _) = to_canvas(0.0, 0.0);
    let ticks = [
        (left, oy, left + GUTTER, oy, point(bottom, real(0))),
        (ox, y0, ox, y0 + GUTTER, point(real(0), bottom)),
    ];
    for (ax, ay, bx, by, p) in ticks {
        let stroke = painter.color(&p)?;
        writeln!(w, r#"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{stroke}" stroke-width="4"/>"#).unwrap();
    }
    writeln!(
        w,
        r#"<text x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">x1 = -inf</text>"#,
        left + GUTTER / 2.0 + 4.0,
        top + side / 4.0,
        left + GUTTER / 2.0 + 4.0,
        top + side / 4.0
    )
    .unwrap();
    writeln!(
        w,
        r#"<text x="{}" y="{}" text-anchor="middle">x2 = -inf</text>"#,
        x0 + 3.0 * side / 4.0,
        y0 + GUTTER / 2.0 + 4.0
    )
    .unwrap();

    for ((ex, ey), (a, b)) in RAYS {
        let stroke = painter.color(&point(real(a), real(b)))?;
        let (cx, cy) = to_canvas(ex, ey);
        writeln!(w, r#"<line x1="{ox}" y1="{oy}" x2="{cx}" y2="{cy}" stroke="{stroke}" stroke-width="4"/>"#).unwrap();
    }
    let origin = painter.color(&point(real(0), real(0)))?;
    writeln!(w, r##"<circle cx="{ox}" cy="{oy}" r="6" fill="{origin}" stroke="#222222"/>"##).unwrap();
    writeln!(
        w,
        r##"<rect x="{x0}" y="{top}" width="{side}" height="{side}" fill="none" stroke="#222222"/>"##
    )
    .unwrap();

    let lx = MARGIN + GUTTER + side + 20.0;
    let mut ly = MARGIN + 14.0;
    writeln!(w, r#"<text x="{lx}" y="{ly}" font-weight="bold">{h}</text>"#).unwrap();
    ly += 22.0;
    let entries: Vec<(String, &str)> = match hemispace {
        Some(_) => vec![("in hemispace".into(), INSIDE), ("in complement".into(), OUTSIDE)],
        None => painter
            .catalog
            .iter()
            .enumerate()
            .map(|(k, f)| (f.to_string(), PALETTE[k % PALETTE.len()]))
            .collect(),
    };
    for (label, color) in entries {
        writeln!(
            w,
            r#"<rect x="{lx}" y="{}" width="14" height="14" fill="{color}" fill-opacity="0.55"/><text x="{}" y="{ly}">{label}</text>"#,
            ly - 11.0,
            lx + 20.0
        )
        .unwrap();
        ly += 20.0;
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
