//! Static SVG plots, written by hand: Gerschgorin disks and power curves.

use std::fmt::Write;

use dasquare::spectra::Disk;
use dasquare::{Eigenvalue, PowerTrajectory};
use num_traits::ToPrimitive;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="20" text-anchor="middle">{}</text>"#, WIDTH / 2.0, escape(title));
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Linear map from `[lo, hi]` onto `[a, b]`; a degenerate domain maps to the midpoint.
fn scale(v: f64, lo: f64, hi: f64, a: f64, b: f64) -> f64 {
    if hi - lo <= f64::EPSILON {
        return (a + b) / 2.0;
    }
    a + (v - lo) / (hi - lo) * (b - a)
}

/// Disks on the complex plane with equal axis scaling. Exact eigenvalues are
/// filled dots, numerically located ones hollow.
pub fn gerschgorin(title: &str, disks: &[Disk], eigs: &[Eigenvalue]) -> String {
    let as_f = |b: &dasquare::BigInt| b.to_f64().unwrap_or(f64::NAN);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut reach: f64 = 1.0;
    for d in disks {
        let (c, r) = (as_f(&d.center), as_f(&d.radius));
        lo = lo.min(c - r);
        hi = hi.max(c + r);
        reach = reach.max(r);
    }
    for e in eigs {
        lo = lo.min(e.re);
        hi = hi.max(e.re);
        reach = reach.max(e.im.abs());
    }
    if !lo.is_finite() {
        lo = -1.0;
        hi = 1.0;
    }
    let pad = 0.05 * (hi - lo).max(1.0);
    lo -= pad;
    hi += pad;
    reach += pad;
    // One unit is the same length on both axes.
    let unit = ((WIDTH - 2.0 * MARGIN) / (hi - lo)).min((HEIGHT - 2.0 * MARGIN) / (2.0 * reach));
    let x0 = WIDTH / 2.0 - unit * (lo + hi) / 2.0;
    let y0 = HEIGHT / 2.0;
    let px = |x: f64| x0 + unit * x;
    let py = |y: f64| y0 - unit * y;

    let mut out = String::new();
    header(&mut out, title);
    let _ = writeln!(
        out,
        r##"<line x1="{MARGIN}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="#444"/>"##,
        WIDTH - MARGIN
    );
    for d in disks {
        let (c, r) = (as_f(&d.center), as_f(&d.radius));
        let _ = writeln!(
            out,
            r##"<circle cx="{:.2}" cy="{y0:.2}" r="{:.2}" fill="#3b7dd8" fill-opacity="0.12" stroke="#3b7dd8"/>"##,
            px(c),
            unit * r
        );
        let _ = writeln!(
            out,
            r##"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}" stroke="#3b7dd8"/>"##,
            px(c),
            y0 - 4.0,
            y0 + 4.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            px(c),
            y0 + 16.0,
            escape(&d.to_string())
        );
    }
    for e in eigs {
        let fill = if e.exact.is_some() { "#c0392b" } else { "white" };
        let _ = writeln!(
            out,
            r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}" stroke="#c0392b"/>"##,
            px(e.re),
            py(e.im)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Compression (left axis, 0..100) and Spread (right axis) against p.
pub fn power_curves(title: &str, t: &PowerTrajectory) -> String {
    let ps: Vec<f64> = t.steps.iter().map(|s| s.p as f64).collect();
    let (p_lo, p_hi) = (1.0, ps.last().copied().unwrap_or(1.0));
    let spreads: Vec<Option<f64>> = t
        .steps
        .iter()
        .map(|s| s.spread.as_ref().and_then(|q| q.to_f64()))
        .collect();
    let spread_hi = spreads.iter().flatten().fold(0.0f64, |m, &v| m.max(v)).max(1e-12);
    let (left, right) = (MARGIN, WIDTH - MARGIN);
    let (top, bottom) = (MARGIN, HEIGHT - MARGIN);
    let px = |p: f64| scale(p, p_lo, p_hi, left, right);

    let mut out = String::new();
    header(&mut out, title);
    let _ = writeln!(
        out,
        r##"<rect x="{left}" y="{top}" width="{}" height="{}" fill="none" stroke="#444"/>"##,
        right - left,
        bottom - top
    );
    for s in &t.steps {
        let x = px(s.p as f64);
        let _ = writeln!(out, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, bottom + 16.0, s.p);
    }
    let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">100</text>"#, left - 4.0, top + 4.0);
    let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">0</text>"#, left - 4.0, bottom + 4.0);
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
        right + 4.0,
        top + 4.0,
        crate::fmt::sig(spread_hi)
    );

    let series = |values: Vec<Option<f64>>, hi: f64, colour: &str, out: &mut String| {
        let pts: Vec<String> = ps
            .iter()
            .zip(&values)
            .filter_map(|(&p, v)| v.map(|v| format!("{:.2},{:.2}", px(p), scale(v, 0.0, hi, bottom, top))))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
            pts.join(" ")
        );
        for pt in &pts {
            let (x, y) = pt.split_once(',').expect("point");
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="3" fill="{colour}"/>"#);
        }
    };
    series(t.steps.iter().map(|s| s.compression_pct).collect(), 100.0, "#3b7dd8", &mut out);
    series(spreads, spread_hi, "#c0392b", &mut out);
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" fill="#3b7dd8">C%</text><text x="{:.2}" y="{:.2}" fill="#c0392b">Spread</text>"##,
        left + 8.0,
        top + 16.0,
        left + 40.0,
        top + 16.0
    );
    out.push_str("</svg>\n");
    out
}
