//! SVG text for front arrangements and lattice polygons. Every coordinate is
//! an exact rational printed with six decimals, so output is byte-stable.

use exactalg::{int, rat, to_decimal, Polygon, Rat};
use std::fmt::Write;
use zigzag::Geodesic;

fn num(r: &Rat) -> String {
    to_decimal(r, 6)
}

fn header(size: i64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    )
}

/// Fronts in the unit square (y up), one `<g>` per geodesic in input order.
/// Short hairs point along the co-orientation from a few points of each piece.
pub fn fronts_svg(fronts: &[Geodesic], width: i64) -> String {
    let w = int(width);
    let px = |x: &Rat, y: &Rat| (num(&(x * &w)), num(&((int(1) - y) * &w)));
    let mut out = header(width);
    let _ = writeln!(out, "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{width}\" fill=\"none\" stroke=\"black\"/>");
    let colours = ["#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#2c3e50"];
    for f in fronts {
        let colour = colours[f.ray % colours.len()];
        let _ = writeln!(out, "  <g class=\"front\" data-ray=\"{}\" data-n=\"{}\" stroke=\"{colour}\">", f.ray, f.n);
        let (cx, cy) = f.coorientation;
        let scale = rat(1, 30 * (cx.abs() + cy.abs()).max(1));
        let hair = (int(cx) * &scale, int(cy) * &scale);
        for ((x0, y0), (x1, y1)) in f.segments() {
            let (a, b) = (px(&x0, &y0), px(&x1, &y1));
            let _ = writeln!(out, "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", a.0, a.1, b.0, b.1);
            for k in 1..4 {
                let t = rat(k, 4);
                let x = &x0 + (&x1 - &x0) * &t;
                let y = &y0 + (&y1 - &y0) * &t;
                let (p, q) = (px(&x, &y), px(&(&x + &hair.0), &(&y + &hair.1)));
                let _ = writeln!(out, "    <line class=\"hair\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", p.0, p.1, q.0, q.1);
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// The polygon with its lattice points, scaled to fit with a one-unit margin.
pub fn polygon_svg(p: &Polygon, width: i64) -> String {
    let vs = p.vertices();
    let (minx, maxx) = (vs.iter().map(|v| v.0).min().unwrap() - 1, vs.iter().map(|v| v.0).max().unwrap() + 1);
    let (miny, maxy) = (vs.iter().map(|v| v.1).min().unwrap() - 1, vs.iter().map(|v| v.1).max().unwrap() + 1);
    let unit = rat(width, (maxx - minx).max(maxy - miny));
    let px = |x: i64, y: i64| (num(&(int(x - minx) * &unit)), num(&(int(maxy - y) * &unit)));
    let mut out = header(width);
    let pts: Vec<String> = vs.iter().map(|&(x, y)| {
        let (a, b) = px(x, y);
        format!("{a},{b}")
    }).collect();
    let _ = writeln!(out, "  <polygon points=\"{}\" fill=\"#dde8f0\" stroke=\"black\"/>", pts.join(" "));
    for x in minx..=maxx {
        for y in miny..=maxy {
            let kind = match p.locate((x, y)) {
                1 => "interior",
                0 => "boundary",
                _ => continue,
            };
            let (a, b) = px(x, y);
            let _ = writeln!(out, "  <circle class=\"{kind}\" cx=\"{a}\" cy=\"{b}\" r=\"4\"/>");
        }
    }
    out.push_str("</svg>\n");
    out
}
