//! Hand-emitted SVG line charts, no charting dependency.
//!
//! Fixed 800x400 viewport. Every series is drawn as a polyline; the first
//! one additionally gets circle markers (the original points in strategy
//! comparisons).

use fractal_ts::TimeSeries;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 42.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

pub fn line_chart(series: &[(String, &TimeSeries)]) -> String {
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for (_, s) in series {
        for &(x, y) in s.points() {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    if x_max <= x_min {
        x_max = x_min + 1.0;
    }
    if y_max <= y_min {
        y_max = y_min + 1.0;
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (x_max - x_min);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y_max - y_min);
    let px = |x: f64| MARGIN + (x - x_min) * sx;
    let py = |y: f64| HEIGHT - MARGIN - (y - y_min) * sy;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // axes
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"#333\" stroke-width=\"1\"/>\n",
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    ));
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{b}\" stroke=\"#333\" stroke-width=\"1\"/>\n",
        m = MARGIN,
        b = HEIGHT - MARGIN
    ));
    for (text, x, y, anchor) in [
        (format!("{x_min:.2}"), MARGIN, HEIGHT - MARGIN + 16.0, "middle"),
        (format!("{x_max:.2}"), WIDTH - MARGIN, HEIGHT - MARGIN + 16.0, "middle"),
        (format!("{y_min:.2}"), MARGIN - 6.0, HEIGHT - MARGIN, "end"),
        (format!("{y_max:.2}"), MARGIN - 6.0, MARGIN + 4.0, "end"),
    ] {
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"11\" text-anchor=\"{anchor}\" \
             fill=\"#333\">{text}</text>\n"
        ));
    }

    for (idx, (label, s)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let pts: Vec<String> = s
            .points()
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            pts.join(" ")
        ));
        // legend entry
        let ly = MARGIN + 16.0 * idx as f64;
        svg.push_str(&format!(
            "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"10\" height=\"3\" fill=\"{color}\"/>\n",
            x = WIDTH - MARGIN - 150.0,
            y = ly - 3.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{ly:.2}\" font-size=\"11\" fill=\"#333\">{}</text>\n",
            xml_escape(label),
            x = WIDTH - MARGIN - 134.0
        ));
    }

    // markers on the first series
    if let Some((_, first)) = series.first() {
        for &(x, y) in first.points() {
            svg.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"{}\"/>\n",
                px(x),
                py(y),
                PALETTE[0]
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
