//! Static SVG 1.1 plots.

use std::collections::HashSet;
use std::fmt::Write as _;

use anyhow::{ensure, Result};
use ballcut::geom::{dualize_point, rotate_xy, BallSet, Point};

use crate::report::{PlanarTraceRecord, Report};

const STYLE: &str = "\
.disk{fill:#dde6f0;stroke:#4a6a8a}\
.intersected{fill:#e8885a;stroke:#8a3a1a}\
.separator{stroke:#c0202a}\
.dual{stroke:#9aa6b2;fill:none}\
.slab{fill:none;stroke:#303030}\
.boundary{stroke:#7a7a7a;stroke-dasharray:4 3;fill:none}\
.core{fill:#f4f0c8;stroke:none}\
.trapezoid{fill:#b8d8b0;fill-opacity:0.6;stroke:#3a7a3a}\
.tube{fill:none;stroke:#2a5ab0}\
text{font-family:sans-serif}";

fn header(out: &mut String, view_box: (f64, f64, f64, f64)) {
    let (x, y, w, h) = view_box;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x} {y} {w} {h}">"#
    )
    .unwrap();
    writeln!(out, "<style>{STYLE}</style>").unwrap();
}

/// Disks, the separator from `result` if any, and the halfplane counts.
/// Data coordinates are used directly, with `y` negated.
pub fn primal(balls: &BallSet, result: Option<&Report>) -> Result<String> {
    ensure!(balls.dim() == 2, "primal plots need d = 2");
    let pts: Vec<(f64, f64)> = balls.centers().iter().map(|p| (p.x(), -p.y())).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (-1.0f64, -1.0f64, 1.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x - 1.0, y - 1.0, x + 1.0, y + 1.0);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x - 1.0);
        x1 = x1.max(x + 1.0);
        y0 = y0.min(y - 1.0);
        y1 = y1.max(y + 1.0);
    }
    let (mx, my) = (0.05 * (x1 - x0), 0.05 * (y1 - y0));
    let view = (x0 - mx, y0 - my, x1 - x0 + 2.0 * mx, y1 - y0 + 2.0 * my);
    let font = 0.03 * view.2.max(view.3);

    let mut out = String::new();
    header(&mut out, view);
    let cut: HashSet<usize> = result
        .map(|r| r.intersected_ids.iter().copied().collect())
        .unwrap_or_default();
    for (i, &(x, y)) in pts.iter().enumerate() {
        let class = if cut.contains(&i) { "intersected" } else { "disk" };
        writeln!(
            out,
            r#"<circle class="{class}" cx="{x}" cy="{y}" r="1" vector-effect="non-scaling-stroke"/>"#
        )
        .unwrap();
    }
    if let Some(r) = result {
        ensure!(r.normal.len() == 2, "result is not planar");
        let (nx, ny) = (r.normal[0], r.normal[1]);
        let len = nx.hypot(ny);
        ensure!(len > 0.0, "result normal is zero");
        let (nx, ny, c) = (nx / len, ny / len, r.offset / len);
        // in plot coordinates the normal is (nx, -ny)
        let (cx, cy) = (view.0 + view.2 / 2.0, view.1 + view.3 / 2.0);
        let s = nx * cx - ny * cy - c;
        let (fx, fy) = (cx - s * nx, cy + s * ny);
        let reach = view.2.hypot(view.3);
        let (dx, dy) = (ny * reach, nx * reach);
        writeln!(
            out,
            r#"<line class="separator" x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="2" vector-effect="non-scaling-stroke"/>"#,
            fx - dx,
            fy - dy,
            fx + dx,
            fy + dy
        )
        .unwrap();
        let tx = view.0 + font;
        writeln!(
            out,
            r#"<text x="{tx}" y="{}" font-size="{font}">{} algorithm: left {}, right {}, intersected {}</text>"#,
            view.1 + 1.5 * font,
            r.algorithm,
            r.left_closed,
            r.right_closed,
            r.intersected
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

const CANVAS_W: f64 = 800.0;
const CANVAS_H: f64 = 600.0;
const PAD: f64 = 40.0;

/// One planar iteration in the dual plane: slab, subslab boundaries, chosen
/// core, trapezoid, tube boundaries, and the dual lines.
pub fn dual(balls: &BallSet, record: &PlanarTraceRecord) -> Result<String> {
    ensure!(balls.dim() == 2, "dual plots need d = 2");
    let t = &record.trace;
    let trap = &t.trapezoid;
    let samples = 64;
    let tube: Vec<(f64, f64, f64)> = (0..=samples)
        .map(|j| {
            let x = trap.x_left + (trap.x_right - trap.x_left) * j as f64 / samples as f64;
            (x, trap.tube_lower(x), trap.tube_upper(x))
        })
        .collect();
    let lo = tube.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    let hi = tube.iter().map(|s| s.2).fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.25 * (hi - lo).max(1.0);
    let (ylo, yhi) = (lo - pad, hi + pad);
    let (xlo, xhi) = (t.slab.left, t.slab.right);
    let px = |x: f64| PAD + (x - xlo) / (xhi - xlo) * (CANVAS_W - 2.0 * PAD);
    let py = |y: f64| CANVAS_H - PAD - (y - ylo) / (yhi - ylo) * (CANVAS_H - 2.0 * PAD);

    let mut out = String::new();
    header(&mut out, (0.0, 0.0, CANVAS_W, CANVAS_H));
    let (left, right, top, bottom) = (px(xlo), px(xhi), py(yhi), py(ylo));
    writeln!(
        out,
        r#"<defs><clipPath id="plot"><rect x="{left}" y="{top}" width="{}" height="{}"/></clipPath></defs>"#,
        right - left,
        bottom - top
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect class="core" x="{}" y="{top}" width="{}" height="{}"/>"#,
        px(t.core.left),
        px(t.core.right) - px(t.core.left),
        bottom - top
    )
    .unwrap();

    out.push_str(r#"<g clip-path="url(#plot)">"#);
    out.push('\n');
    for (i, p) in balls.centers().iter().enumerate() {
        let (x, y) = rotate_xy(p.x(), p.y(), record.rotation);
        let g = dualize_point(&Point::xy(x, y)?, i)?;
        writeln!(
            out,
            r#"<path class="dual" d="M{} {} L{} {}"/>"#,
            px(xlo),
            py(g.at(xlo)),
            px(xhi),
            py(g.at(xhi))
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<polygon class="trapezoid" points="{},{} {},{} {},{} {},{}"/>"#,
        px(trap.x_left),
        py(trap.y_lower_left),
        px(trap.x_right),
        py(trap.y_lower_right),
        px(trap.x_right),
        py(trap.y_upper_right),
        px(trap.x_left),
        py(trap.y_upper_left)
    )
    .unwrap();
    for pick in [|s: &(f64, f64, f64)| s.1, |s: &(f64, f64, f64)| s.2] {
        let pts: Vec<String> = tube
            .iter()
            .map(|s| format!("{},{}", px(s.0), py(pick(s))))
            .collect();
        writeln!(out, r#"<polyline class="tube" points="{}"/>"#, pts.join(" ")).unwrap();
    }
    out.push_str("</g>\n");

    for &b in &t.boundaries {
        writeln!(out, r#"<path class="boundary" d="M{} {top} V{bottom}"/>"#, px(b)).unwrap();
    }
    writeln!(
        out,
        r#"<rect class="slab" x="{left}" y="{top}" width="{}" height="{}"/>"#,
        right - left,
        bottom - top
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{PAD}" y="{}" font-size="14">iteration {}: slab [{:.6e}, {:.6e}], {} subslabs, chosen {}, {} of {} lines kept, level {}</text>"#,
        PAD / 2.0,
        t.iteration,
        xlo,
        xhi,
        t.boundaries.len().saturating_sub(1),
        t.chosen,
        t.survivors,
        t.lines_before,
        t.lambda
    )
    .unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}
