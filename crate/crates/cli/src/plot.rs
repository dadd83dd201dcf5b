//! Self-contained SVG line chart of a family sweep.
//!
//! Discord is drawn solid, classical correlation dashed and concurrence
//! dash-dotted, all in black on a fixed 800x600 canvas.

use std::fmt::Write;

use xdiscord::families::{Family, SweepRow};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 70.0;

struct Series {
    label: &'static str,
    dash: Option<&'static str>,
    value: fn(&SweepRow) -> f64,
}

const SERIES: [Series; 3] = [
    Series {
        label: "Q (discord)",
        dash: None,
        value: |r| r.quantum_discord,
    },
    Series {
        label: "C (classical)",
        dash: Some("9 6"),
        value: |r| r.classical_correlation,
    },
    Series {
        label: "C' (concurrence)",
        dash: Some("12 5 2 5"),
        value: |r| r.concurrence,
    },
];

fn px(a: f64) -> f64 {
    LEFT + a * (WIDTH - LEFT - RIGHT)
}

fn py(v: f64, y_max: f64) -> f64 {
    HEIGHT - BOTTOM - v / y_max * (HEIGHT - TOP - BOTTOM)
}

fn dash_attr(dash: Option<&str>) -> String {
    dash.map(|d| format!(r#" stroke-dasharray="{d}""#))
        .unwrap_or_default()
}

pub fn sweep_svg(family: Family, rows: &[SweepRow]) -> String {
    // Curves of these families live in [0, 1]; anything larger widens the axis in 0.25 steps.
    let peak = rows
        .iter()
        .flat_map(|r| SERIES.iter().map(move |s| (s.value)(r)))
        .fold(1.0f64, f64::max);
    let y_max = (peak * 4.0 - 1e-9).ceil() / 4.0;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600">"#
    )
    .unwrap();
    svg.push_str(r#"<rect x="0" y="0" width="800" height="600" fill="white"/>"#);
    svg.push('\n');
    writeln!(
        svg,
        r#"<text x="{}" y="30" font-family="serif" font-size="20" text-anchor="middle">{family}</text>"#,
        WIDTH / 2.0
    )
    .unwrap();

    let (x0, x1) = (px(0.0), px(1.0));
    let (y0, y1) = (py(0.0, y_max), py(y_max, y_max));
    writeln!(
        svg,
        r#"<rect x="{x0}" y="{y1}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        x1 - x0,
        y0 - y1
    )
    .unwrap();

    for i in 0..=10 {
        let a = i as f64 / 10.0;
        let x = px(a);
        writeln!(
            svg,
            r#"<line x1="{x}" y1="{y0}" x2="{x}" y2="{}" stroke="black" stroke-width="1"/><text x="{x}" y="{}" font-family="serif" font-size="14" text-anchor="middle">{a:.1}</text>"#,
            y0 - 6.0,
            y0 + 20.0
        )
        .unwrap();
    }
    let y_ticks = (y_max / 0.25).round() as usize;
    for i in 0..=y_ticks {
        let v = i as f64 * 0.25;
        let y = py(v, y_max);
        writeln!(
            svg,
            r#"<line x1="{x0}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="1"/><text x="{}" y="{}" font-family="serif" font-size="14" text-anchor="end">{v:.2}</text>"#,
            x0 + 6.0,
            x0 - 10.0,
            y + 5.0
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="serif" font-size="18" font-style="italic" text-anchor="middle">a</text>"#,
        WIDTH / 2.0,
        HEIGHT - 20.0
    )
    .unwrap();
    writeln!(
        svg,
        r#"<text x="25" y="{}" font-family="serif" font-size="16" text-anchor="middle" transform="rotate(-90 25 {})">correlation (bits)</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    )
    .unwrap();

    for s in &SERIES {
        let points: Vec<String> = rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", px(r.a), py((s.value)(r), y_max)))
            .collect();
        writeln!(
            svg,
            r#"<polyline fill="none" stroke="black" stroke-width="2"{} points="{}"/>"#,
            dash_attr(s.dash),
            points.join(" ")
        )
        .unwrap();
    }

    let (lx, ly) = (x1 - 210.0, y1 + 15.0);
    writeln!(
        svg,
        r#"<rect x="{lx}" y="{ly}" width="195" height="86" fill="white" stroke="black" stroke-width="1"/>"#
    )
    .unwrap();
    for (i, s) in SERIES.iter().enumerate() {
        let y = ly + 22.0 + 24.0 * i as f64;
        writeln!(
            svg,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="2"{}/><text x="{}" y="{}" font-family="serif" font-size="14">{}</text>"#,
            lx + 10.0,
            lx + 60.0,
            dash_attr(s.dash),
            lx + 70.0,
            y + 5.0,
            s.label
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
