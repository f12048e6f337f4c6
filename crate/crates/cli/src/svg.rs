//! Dependency-free SVG rendering of the figure data. The CSV is the
//! contract; these drawings are a convenience.

use crate::figures::{region_color, RegionCell};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 50.0;

fn fmt(x: f64) -> String {
    format!("{x:.2}")
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - 2.0 * MARGIN)
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn open_svg(out: &mut String) {
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         fill=\"white\"/>\n"
    ));
}

fn axes(out: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        fmt(MARGIN),
        fmt(MARGIN),
        fmt(WIDTH - 2.0 * MARGIN),
        fmt(HEIGHT - 2.0 * MARGIN)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\">{x_label}</text>\n",
        fmt(WIDTH / 2.0),
        fmt(HEIGHT - 12.0)
    ));
    out.push_str(&format!(
        "<text x=\"14\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" \
         transform=\"rotate(-90 14 {})\">{y_label}</text>\n",
        fmt(HEIGHT / 2.0),
        fmt(HEIGHT / 2.0)
    ));
    for (value, label) in [
        (frame.x_min, fmt(frame.x_min)),
        (frame.x_max, fmt(frame.x_max)),
    ] {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{label}</text>\n",
            fmt(frame.x(value)),
            fmt(HEIGHT - MARGIN + 16.0)
        ));
    }
    for (value, label) in [
        (frame.y_min, fmt(frame.y_min)),
        (frame.y_max, fmt(frame.y_max)),
    ] {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{label}</text>\n",
            fmt(MARGIN - 6.0),
            fmt(frame.y(value) + 4.0)
        ));
    }
}

/// One chart series: label, stroke color, and its points.
pub type Series<'a> = (&'a str, &'a str, Vec<(f64, f64)>);

/// Line chart for one or more series sharing the axes.
pub fn polyline_svg(series: &[Series<'_>], x_label: &str, y_label: &str) -> String {
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for (_, _, points) in series {
        for &(x, y) in points {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    let pad = 0.05 * (y_max - y_min).max(1e-9);
    let frame = Frame {
        x_min,
        x_max,
        y_min: y_min - pad,
        y_max: y_max + pad,
    };

    let mut out = String::new();
    open_svg(&mut out);
    axes(&mut out, &frame, x_label, y_label);
    for (index, (label, color, points)) in series.iter().enumerate() {
        let path: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{},{}", fmt(frame.x(x)), fmt(frame.y(y))))
            .collect();
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            path.join(" ")
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{color}\">{label}</text>\n",
            fmt(WIDTH - MARGIN - 150.0),
            fmt(MARGIN + 16.0 + 16.0 * index as f64)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Region lattice with optional task markers (`reference`, `constructed`).
pub fn lattice_svg(
    cells: &[RegionCell],
    markers: &[(&str, f64, f64)],
) -> String {
    let mut kappa_max = 0.0f64;
    for cell in cells {
        kappa_max = kappa_max.max(cell.kappa);
    }
    let frame = Frame {
        x_min: 0.0,
        x_max: kappa_max,
        y_min: 0.0,
        y_max: 1.0,
    };

    // Cell pitch from the first distinct coordinates.
    let mut kappas: Vec<f64> = cells.iter().map(|c| c.kappa).collect();
    kappas.dedup();
    let mut phis: Vec<f64> = cells.iter().map(|c| c.phi).collect();
    phis.sort_by(|a, b| a.partial_cmp(b).unwrap());
    phis.dedup();
    let cell_w = (WIDTH - 2.0 * MARGIN) / kappas.len().max(1) as f64;
    let cell_h = (HEIGHT - 2.0 * MARGIN) / phis.len().max(1) as f64;

    let mut out = String::new();
    open_svg(&mut out);
    for cell in cells {
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
            fmt(frame.x(cell.kappa) - cell_w),
            fmt(frame.y(cell.phi) - cell_h / 2.0),
            fmt(cell_w + 0.5),
            fmt(cell_h + 0.5),
            region_color(cell.region)
        ));
    }
    axes(&mut out, &frame, "difficulty", "ex ante uncertainty");
    for (label, kappa, phi) in markers {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"3.5\" fill=\"black\"/>\n",
            fmt(frame.x(*kappa)),
            fmt(frame.y(*phi))
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{label}</text>\n",
            fmt(frame.x(*kappa) + 6.0),
            fmt(frame.y(*phi) - 6.0)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyline_svg_is_well_formed() {
        let series = vec![("net payoff", "#cc0000", vec![(0.0, 0.0), (0.5, 0.25), (1.0, 0.0)])];
        let svg = polyline_svg(&series, "q", "value");
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("polyline"));
    }

    #[test]
    fn lattice_svg_draws_cells_and_markers() {
        let cells = vec![
            RegionCell {
                kappa: 1.0,
                phi: 0.0,
                region: "trivial",
            },
            RegionCell {
                kappa: 2.0,
                phi: 1.0,
                region: "more_complex",
            },
        ];
        let svg = lattice_svg(&cells, &[("reference", 2.0, 0.75)]);
        assert!(svg.contains("rect"));
        assert!(svg.contains("circle"));
    }
}
