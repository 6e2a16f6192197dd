//! Deterministic file emission: CSV tables, JSON, and minimal static SVG
//! diagrams.
//!
//! CSV cells use `.` as the decimal separator, LF line endings, and Rust's
//! shortest round-trip float formatting, so identical inputs produce byte
//! identical files. SVG output embeds no timestamps.

use std::fmt::Write as _;

use crate::state::{CycleReport, ProcessPath};

/// Shortest representation that parses back to the same f64.
pub fn format_float(value: f64) -> String {
    format!("{value}")
}

/// `Q,P,I,E,G` rows for an ideal-income process path.
pub fn path_csv(path: &ProcessPath) -> String {
    let mut out = String::from("Q,P,I,E,G\n");
    for s in path.samples() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            s.volume(),
            s.price(),
            s.stability(),
            s.entropy(),
            s.growth()
        );
    }
    out
}

/// JSON array of the path's extended states.
pub fn path_samples_json(path: &ProcessPath) -> String {
    serde_json::to_string(path.samples()).expect("extended states serialize")
}

/// Combined four-leg trace, `leg,Q,P,I,E,G`, legs numbered 1..=4 in
/// traversal order.
pub fn cycle_trace_csv(report: &CycleReport) -> String {
    let mut out = String::from("leg,Q,P,I,E,G\n");
    for (index, leg) in report.legs().iter().enumerate() {
        for s in leg.samples() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                index + 1,
                s.volume(),
                s.price(),
                s.stability(),
                s.entropy(),
                s.growth()
            );
        }
    }
    out
}

/// `leg,E,I` trace of the same cycle for the entropy-stability rectangle.
pub fn cycle_entropy_csv(report: &CycleReport) -> String {
    let mut out = String::from("leg,E,I\n");
    for (index, leg) in report.legs().iter().enumerate() {
        for s in leg.samples() {
            let _ = writeln!(out, "{},{},{}", index + 1, s.entropy(), s.stability());
        }
    }
    out
}

/// `Q,P,I` rows for a Van der Waals isotherm (no entropy columns; the model
/// defines none).
pub fn vdw_isotherm_csv(path: &ProcessPath) -> String {
    let mut out = String::from("Q,P,I\n");
    for s in path.samples() {
        let _ = writeln!(out, "{},{},{}", s.volume(), s.price(), s.stability());
    }
    out
}

/// `Q,P,I` rows for a surface grid.
pub fn surface_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("Q,P,I\n");
    for (q, p, i) in rows {
        let _ = writeln!(out, "{q},{p},{i}");
    }
    out
}

/// `alpha,beta,roots` rows for the cusp bifurcation set.
pub fn bifurcation_csv(rows: &[(f64, f64, u8)]) -> String {
    let mut out = String::from("alpha,beta,roots\n");
    for (alpha, beta, count) in rows {
        let _ = writeln!(out, "{alpha},{beta},{count}");
    }
    out
}

/// Compact JSON for any serializable value, newline terminated.
pub fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("value serializes");
    s.push('\n');
    s
}

/// Pretty JSON for any serializable value, newline terminated.
pub fn json_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

const SVG_WIDTH: f64 = 640.0;
const SVG_HEIGHT: f64 = 480.0;
const SVG_MARGIN: f64 = 56.0;

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn of(points: impl Iterator<Item = (f64, f64)>) -> Frame {
        let mut frame = Frame {
            x_min: f64::INFINITY,
            x_max: f64::NEG_INFINITY,
            y_min: f64::INFINITY,
            y_max: f64::NEG_INFINITY,
        };
        for (x, y) in points {
            frame.x_min = frame.x_min.min(x);
            frame.x_max = frame.x_max.max(x);
            frame.y_min = frame.y_min.min(y);
            frame.y_max = frame.y_max.max(y);
        }
        // degenerate spans still need a drawable box
        if frame.x_max <= frame.x_min {
            frame.x_max = frame.x_min + 1.0;
        }
        if frame.y_max <= frame.y_min {
            frame.y_max = frame.y_min + 1.0;
        }
        frame
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let sx = (SVG_WIDTH - 2.0 * SVG_MARGIN) / (self.x_max - self.x_min);
        let sy = (SVG_HEIGHT - 2.0 * SVG_MARGIN) / (self.y_max - self.y_min);
        (
            SVG_MARGIN + (x - self.x_min) * sx,
            SVG_HEIGHT - SVG_MARGIN - (y - self.y_min) * sy,
        )
    }
}

/// Static Q-P diagram of the cycle: one polyline per leg, labeled vertices
/// 1..4, and a direction arrow at each leg midpoint.
pub fn cycle_qp_svg(report: &CycleReport) -> String {
    cycle_svg(report, "Q", "P", |s| (s.volume(), s.price()))
}

/// Static E-I diagram of the cycle (the rectangle between reservoirs).
pub fn cycle_ei_svg(report: &CycleReport) -> String {
    cycle_svg(report, "E", "I", |s| (s.entropy(), s.stability()))
}

fn cycle_svg(
    report: &CycleReport,
    x_label: &str,
    y_label: &str,
    axis: impl Fn(&crate::state::ExtendedState) -> (f64, f64),
) -> String {
    let frame = Frame::of(
        report
            .legs()
            .iter()
            .flat_map(|leg| leg.samples().iter().map(&axis)),
    );

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>"#
    );

    // axes
    let x0 = SVG_MARGIN;
    let y0 = SVG_HEIGHT - SVG_MARGIN;
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#,
        SVG_WIDTH - SVG_MARGIN / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{}" stroke="black"/>"#,
        SVG_MARGIN / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="monospace" font-size="14">{x_label}</text>"#,
        SVG_WIDTH - SVG_MARGIN / 2.0 + 6.0,
        y0 + 4.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="monospace" font-size="14">{y_label}</text>"#,
        x0 - 10.0,
        SVG_MARGIN / 2.0 - 6.0
    );

    let colors = ["#c23b22", "#1f6fb2", "#3b8c4e", "#886fb2"];
    for (index, leg) in report.legs().iter().enumerate() {
        let mut points = String::new();
        for s in leg.samples() {
            let (x, y) = axis(s);
            let (px, py) = frame.map(x, y);
            let _ = write!(points, "{px:.2},{py:.2} ");
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            points.trim_end(),
            colors[index % colors.len()]
        );

        // direction marker at the middle of the leg
        let samples = leg.samples();
        let mid = samples.len() / 2;
        if mid + 1 < samples.len() {
            let (ax, ay) = axis(&samples[mid]);
            let (bx, by) = axis(&samples[mid + 1]);
            let (x1, y1) = frame.map(ax, ay);
            let (x2, y2) = frame.map(bx, by);
            let angle = (y2 - y1).atan2(x2 - x1).to_degrees();
            let _ = writeln!(
                svg,
                r#"<polygon points="0,-4 8,0 0,4" fill="{}" transform="translate({x1:.2},{y1:.2}) rotate({angle:.2})"/>"#,
                colors[index % colors.len()]
            );
        }
    }

    for (index, vertex) in report.vertices().iter().enumerate() {
        let (x, y) = axis(vertex);
        let (px, py) = frame.map(x, y);
        let _ = writeln!(
            svg,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="black"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="13">{}</text>"#,
            px + 6.0,
            py - 6.0,
            index + 1
        );
    }

    svg.push_str("</svg>\n");
    svg
}
