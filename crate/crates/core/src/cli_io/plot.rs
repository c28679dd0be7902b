//! SVG figures for two-dimensional acts.
//!
//! Each state's capability set is drawn as a staircase outline of its
//! dominated region, mixed points as circular markers over a shaded union of
//! their dominated boxes. Axes run to 10% beyond the largest coordinate with
//! unit gridlines.

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::geometry::{pareto_frontier, Being};
use crate::mixing::{Act, MixedSet};

const WIDTH: f64 = 520.0;
const HEIGHT: f64 = 520.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"];

/// Outline of the dominated region of `points` in data coordinates:
/// `(0, y_1), (x_1, y_1), (x_1, y_2), .., (x_k, y_k), (x_k, 0)` over the
/// frontier sorted by the first coordinate.
pub fn staircase_vertices(points: &[Being]) -> Result<Vec<(f64, f64)>> {
    if let Some(b) = points.iter().find(|b| b.dimension() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, found: b.dimension() });
    }
    let frontier = pareto_frontier(points)?;
    let mut out = Vec::with_capacity(2 * frontier.len() + 1);
    out.push((0.0, frontier[0].coords()[1]));
    for (k, b) in frontier.iter().enumerate() {
        let (x, y) = (b.coords()[0], b.coords()[1]);
        out.push((x, y));
        let next_y = frontier.get(k + 1).map_or(0.0, |n| n.coords()[1]);
        out.push((x, next_y));
    }
    Ok(out)
}

fn grid_step(extent: f64) -> f64 {
    let mut step = 1.0;
    while extent / step > 40.0 {
        step *= 10.0;
    }
    step
}

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + x / self.x_max * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - y / self.y_max * (HEIGHT - 2.0 * MARGIN)
    }
}

fn f2(x: f64) -> String {
    format!("{x:.2}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders the act's states and one mixed set.
pub fn render_svg(act: &Act, mixed: &MixedSet, title: &str) -> Result<String> {
    if act.dimension() != 2 {
        return Err(Error::Precondition(format!("plots need dimension 2, act has dimension {}", act.dimension())));
    }
    let all = act.sets().iter().flat_map(|s| s.beings().iter()).chain(mixed.points.iter().map(|p| &p.being));
    let (mut x_top, mut y_top) = (0.0f64, 0.0f64);
    for b in all {
        x_top = x_top.max(b.coords()[0]);
        y_top = y_top.max(b.coords()[1]);
    }
    let frame = Frame {
        x_max: if x_top > 0.0 { 1.1 * x_top } else { 1.0 },
        y_max: if y_top > 0.0 { 1.1 * y_top } else { 1.0 },
    };

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" data-x-max=\"{xm}\" data-y-max=\"{ym}\">\n",
        w = WIDTH,
        h = HEIGHT,
        xm = fmt_num(frame.x_max),
        ym = fmt_num(frame.y_max)
    ));
    s.push_str(&format!("<title>{}</title>\n", escape(title)));
    s.push_str("<rect class=\"background\" x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    s.push_str("<g class=\"grid\" stroke=\"#e6e6e6\" stroke-width=\"1\">\n");
    for (extent, vertical) in [(frame.x_max, true), (frame.y_max, false)] {
        let step = grid_step(extent);
        let mut v = step;
        while v <= extent + 1e-9 {
            if vertical {
                let x = f2(frame.px(v));
                s.push_str(&format!(
                    "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\"/>\n",
                    f2(frame.py(0.0)),
                    f2(frame.py(frame.y_max))
                ));
            } else {
                let y = f2(frame.py(v));
                s.push_str(&format!(
                    "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"/>\n",
                    f2(frame.px(0.0)),
                    f2(frame.px(frame.x_max))
                ));
            }
            v += step;
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g class=\"axes\" stroke=\"black\" stroke-width=\"1.5\">\n");
    s.push_str(&format!(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{3}\"/>\n",
        f2(frame.px(0.0)),
        f2(frame.py(0.0)),
        f2(frame.px(frame.x_max)),
        f2(frame.py(frame.y_max))
    ));
    s.push_str("</g>\n");

    let mixed_points = mixed.beings();
    if !mixed_points.is_empty() {
        s.push_str("<g class=\"region mix\" fill=\"#d62728\" fill-opacity=\"0.12\" stroke=\"none\">\n");
        for b in pareto_frontier(&mixed_points)? {
            let (x, y) = (b.coords()[0], b.coords()[1]);
            s.push_str(&format!(
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n",
                f2(frame.px(0.0)),
                f2(frame.py(y)),
                f2(frame.px(x) - frame.px(0.0)),
                f2(frame.py(0.0) - frame.py(y))
            ));
        }
        s.push_str("</g>\n");
    }

    for (l, set) in act.sets().iter().enumerate() {
        let color = COLORS[l % COLORS.len()];
        let name = set.label().map(str::to_string).unwrap_or_else(|| format!("s{}", l + 1));
        let vertices = staircase_vertices(set.beings())?;
        let data: Vec<String> = vertices.iter().map(|(x, y)| format!("{},{}", fmt_num(*x), fmt_num(*y))).collect();
        let pixels: Vec<String> = vertices.iter().map(|(x, y)| format!("{},{}", f2(frame.px(*x)), f2(frame.py(*y)))).collect();
        s.push_str(&format!(
            "<polyline class=\"staircase state\" data-state=\"{}\" data-vertices=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            escape(&name),
            data.join(" "),
            pixels.join(" ")
        ));
        for b in set.beings() {
            s.push_str(&format!(
                "<rect class=\"member\" data-state=\"{}\" x=\"{}\" y=\"{}\" width=\"6\" height=\"6\" fill=\"{color}\"/>\n",
                escape(&name),
                f2(frame.px(b.coords()[0]) - 3.0),
                f2(frame.py(b.coords()[1]) - 3.0)
            ));
        }
    }

    for b in &mixed_points {
        s.push_str(&format!(
            "<circle class=\"marker mixed\" data-point=\"{},{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#d62728\"/>\n",
            fmt_num(b.coords()[0]),
            fmt_num(b.coords()[1]),
            f2(frame.px(b.coords()[0])),
            f2(frame.py(b.coords()[1]))
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}
