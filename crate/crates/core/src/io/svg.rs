//! SVG rendering of planar strip layouts. Layout y points up, SVG y points
//! down, so y is negated on output.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::layout::StripLayout;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub stroke: String,
    pub stroke_width: f64,
    /// Alternate two fills along the path; otherwise a single fill.
    pub parity_fill: bool,
    pub show_strips: bool,
    pub labels: bool,
    /// Facet count written to the left of the drawing.
    pub caption: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            stroke: "#222222".into(),
            stroke_width: 0.01,
            parity_fill: true,
            show_strips: true,
            labels: false,
            caption: true,
        }
    }
}

/// Formats with 9 significant digits and no trailing zeros.
pub(crate) fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (8 - mag).clamp(0, 12) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn write_svg(l: &StripLayout, opts: &SvgOptions) -> Result<String> {
    if l.dim != 2 {
        return Err(Error::Dimension { op: "write_svg", dim: l.dim });
    }
    let pts = l.placements.iter().flat_map(|p| p.coords.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for p in pts {
        x0 = x0.min(p[0]);
        x1 = x1.max(p[0]);
        y0 = y0.min(-p[1]);
        y1 = y1.max(-p[1]);
    }
    let h = (y1 - y0).max(1e-9);
    let margin = 0.05 * h.max(x1 - x0);
    let font = 0.25 * h;
    let left = if opts.caption { x0 - margin - 2.0 * font } else { x0 - margin };
    let (vw, vh) = (x1 + margin - left, h + 2.0 * margin);
    let sw = num(opts.stroke_width);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(left),
        num(y0 - margin),
        num(vw),
        num(vh)
    )
    .unwrap();
    if opts.caption {
        writeln!(
            s,
            r#"<text class="count" x="{}" y="{}" font-size="{}" text-anchor="end">{}</text>"#,
            num(x0 - margin),
            num(y0 + 0.5 * h + 0.35 * font),
            num(font),
            l.placements.len()
        )
        .unwrap();
    }
    if opts.show_strips {
        let mut walls: Vec<f64> = Vec::new();
        for p in &l.placements {
            for x in p.strip {
                if walls.last() != Some(&x) {
                    walls.push(x);
                }
            }
        }
        let dash = num(4.0 * opts.stroke_width);
        writeln!(
            s,
            r##"<g class="strips" stroke="#999999" stroke-width="{}" stroke-dasharray="{dash} {dash}">"##,
            num(0.5 * opts.stroke_width)
        )
        .unwrap();
        for x in walls {
            writeln!(
                s,
                r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                num(x),
                num(y0 - margin),
                num(y1 + margin)
            )
            .unwrap();
        }
        s.push_str("</g>\n");
    }
    writeln!(
        s,
        r#"<g class="facets" stroke="{}" stroke-width="{sw}" stroke-linejoin="round">"#,
        escape(&opts.stroke)
    )
    .unwrap();
    for (i, p) in l.placements.iter().enumerate() {
        let fill = match (opts.parity_fill, i % 2) {
            (true, 1) => "#9ecae1",
            _ => "#fdd49e",
        };
        let points: Vec<String> = p.coords.iter().map(|x| format!("{},{}", num(x[0]), num(-x[1]))).collect();
        writeln!(
            s,
            r#"<polygon data-facet="{}" fill="{fill}" points="{}"/>"#,
            p.facet,
            points.join(" ")
        )
        .unwrap();
    }
    s.push_str("</g>\n");
    if opts.labels {
        writeln!(s, r#"<g class="labels" font-size="{}" text-anchor="middle">"#, num(0.08 * h)).unwrap();
        for p in &l.placements {
            for (x, v) in p.coords.iter().zip(&p.vertices) {
                writeln!(s, r#"<text x="{}" y="{}">{v}</text>"#, num(x[0]), num(-x[1])).unwrap();
            }
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    Ok(s)
}
