//! Standalone SVG figure of a swept region.
//!
//! Output is y-flipped so counterclockwise in the plane is counterclockwise on
//! screen; for the unit circle the view box is `-1.1 -1.1 2.2 2.2`.

use std::fmt::Write;

use crate::fan::ChordFan;
use crate::geom::Vec2;
use crate::sweep::SweptRegion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub labels: bool,
}

const FILL: &str = "#f4a259";
const STROKE: &str = "#222222";

/// Fixed six decimals with trailing zeros trimmed and no negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".to_owned(),
        s => s.to_owned(),
    }
}

fn pt(v: Vec2) -> String {
    format!("{} {}", num(v.x), num(-v.y))
}

fn chord_lines(out: &mut String, fan: &ChordFan, class: &str, dash: Option<&str>) {
    let dash = dash.map(|d| format!(" stroke-dasharray=\"{d}\"")).unwrap_or_default();
    for c in fan.chords() {
        let (a, b) = (pt(c.a), pt(c.b));
        let (ax, ay) = a.split_once(' ').unwrap();
        let (bx, by) = b.split_once(' ').unwrap();
        writeln!(
            out,
            r#"    <line class="{class}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"{dash}/>"#
        )
        .unwrap();
    }
}

/// Circle, center and `P` markers, chords at both ends of the sweep, and one
/// filled path per swept sector. Zero-area sectors are omitted.
pub fn render_svg(region: &SweptRegion, options: RenderOptions) -> String {
    let fan = region.fan();
    let circle = fan.circle();
    let (c, r) = (circle.center(), circle.radius());
    let stroke = num(0.006 * r);
    let marker = num(0.02 * r);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="440" height="440" viewBox="{} {} {} {}">"#,
        num(c.x - 1.1 * r),
        num(-c.y - 1.1 * r),
        num(2.2 * r),
        num(2.2 * r)
    )
    .unwrap();
    writeln!(
        out,
        "  <desc>n={} p=({}, {}) phase={} theta={}</desc>",
        fan.n(),
        num(fan.p().x),
        num(fan.p().y),
        num(fan.phase()),
        num(region.theta())
    )
    .unwrap();

    writeln!(out, r#"  <g class="sectors" fill="{FILL}" stroke="none">"#).unwrap();
    let radius = num(r);
    for s in region.sectors() {
        if s.arc_angle <= 0.0 {
            continue;
        }
        let large = u8::from(s.arc_angle > std::f64::consts::PI);
        writeln!(
            out,
            r#"    <path class="sector" d="M {} L {} A {radius} {radius} 0 {large} 0 {} Z"/>"#,
            pt(s.apex),
            pt(s.start),
            pt(s.end)
        )
        .unwrap();
    }
    out.push_str("  </g>\n");

    writeln!(
        out,
        r#"  <circle class="boundary" cx="{}" cy="{}" r="{radius}" fill="none" stroke="{STROKE}" stroke-width="{stroke}"/>"#,
        num(c.x),
        num(-c.y)
    )
    .unwrap();

    writeln!(out, r#"  <g class="chords" stroke="{STROKE}" stroke-width="{stroke}">"#).unwrap();
    chord_lines(&mut out, fan, "chord-start", None);
    if region.theta() > 0.0 {
        let dash = format!("{} {}", num(0.03 * r), num(0.02 * r));
        chord_lines(
            &mut out,
            &fan.with_phase(fan.phase() + region.theta()),
            "chord-end",
            Some(&dash),
        );
    }
    out.push_str("  </g>\n");

    let p = fan.p();
    writeln!(
        out,
        r#"  <circle class="center" cx="{}" cy="{}" r="{marker}" fill="{STROKE}"/>"#,
        num(c.x),
        num(-c.y)
    )
    .unwrap();
    writeln!(
        out,
        r##"  <circle class="point" cx="{}" cy="{}" r="{marker}" fill="#c0392b"/>"##,
        num(p.x),
        num(-p.y)
    )
    .unwrap();

    if options.labels {
        let size = num(0.08 * r);
        let offset = 0.04 * r;
        for (label, at) in [("C", c), ("P", p)] {
            writeln!(
                out,
                r#"  <text x="{}" y="{}" font-family="serif" font-size="{size}">{label}</text>"#,
                num(at.x + offset),
                num(-at.y - offset)
            )
            .unwrap();
        }
        for (k, chord) in fan.chords().iter().enumerate() {
            for (name, end) in [("A", chord.a), ("B", chord.b)] {
                let outward = c + (end - c) * (1.0 + 0.06);
                writeln!(
                    out,
                    r#"  <text x="{}" y="{}" font-family="serif" font-size="{size}" text-anchor="middle">{name}{}</text>"#,
                    num(outward.x),
                    num(-outward.y),
                    k + 1
                )
                .unwrap();
            }
        }
    }

    out.push_str("</svg>\n");
    out
}
