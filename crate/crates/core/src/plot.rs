//! Static SVG pictures of a map and the orbits of chosen points.
//!
//! The canvas is always 800×800 and every coordinate is printed with two
//! decimals, so equal inputs give byte-identical files.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::algebra::Elem;
use crate::error::{Error, Result};
use crate::pwl::{orbit, IntervalMap};

pub const CANVAS: f64 = 800.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotStyle {
    /// Graph, diagonal, and the staircase of each orbit.
    Cobweb,
    /// One stem per iterate, step on the horizontal axis.
    OrbitBars,
}

impl FromStr for PlotStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cobweb" => Ok(PlotStyle::Cobweb),
            "orbit-bars" => Ok(PlotStyle::OrbitBars),
            _ => Err(Error::Parse(format!("unknown plot style {s:?}; expected cobweb or orbit-bars"))),
        }
    }
}

/// A starting point and the label used in the legend.
#[derive(Clone, Debug)]
pub struct Series {
    pub label: String,
    pub start: Elem,
}

struct Frame {
    lo: f64,
    hi: f64,
    x0: f64,
    x1: f64,
}

impl Frame {
    fn new(lo: f64, hi: f64) -> Frame {
        Frame { lo, hi, x0: MARGIN, x1: CANVAS - MARGIN }
    }

    fn px(&self, v: f64) -> f64 {
        self.x0 + (v - self.lo) / (self.hi - self.lo) * (self.x1 - self.x0)
    }

    fn py(&self, v: f64) -> f64 {
        self.x1 - (v - self.lo) / (self.hi - self.lo) * (self.x1 - self.x0)
    }
}

fn c(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" { "0.00".into() } else { s }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="800" height="800" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="400.00" y="30.00" font-size="16" text-anchor="middle" font-family="sans-serif">{}</text>"#, escape(title));
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn legend(out: &mut String, series: &[Series]) {
    for (k, s) in series.iter().enumerate() {
        let y = 50.0 + 18.0 * k as f64;
        let col = PALETTE[k % PALETTE.len()];
        let _ = writeln!(out, r#"<line x1="660.00" y1="{}" x2="690.00" y2="{}" stroke="{col}" stroke-width="2"/>"#, c(y), c(y));
        let _ = writeln!(
            out,
            r#"<text x="695.00" y="{}" font-size="12" font-family="sans-serif">{}</text>"#,
            c(y + 4.0),
            escape(&s.label)
        );
    }
}

/// Renders the map and the first `n` iterates of every series.
pub fn plot_svg<M: IntervalMap + ?Sized>(m: &M, series: &[Series], n: usize, style: PlotStyle) -> Result<String> {
    let f = m.field();
    let (lo, hi) = m.domain();
    let frame = Frame::new(f.to_f64(lo), f.to_f64(hi));
    let orbits = series
        .iter()
        .map(|s| orbit(m, &s.start, n).map(|pts| pts.iter().map(|p| f.to_f64(&p.value)).collect::<Vec<f64>>()))
        .collect::<Result<Vec<_>>>()?;
    let title = format!("lambda = {}, n = {n}", f.format(&f.lambda()));
    let mut out = String::new();
    header(&mut out, &title);
    let (a, b) = (c(frame.x0), c(frame.x1));
    let _ = writeln!(out, r#"<rect x="{a}" y="{a}" width="{}" height="{}" fill="none" stroke="black"/>"#, c(frame.x1 - frame.x0), c(frame.x1 - frame.x0));
    match style {
        PlotStyle::Cobweb => {
            let _ = writeln!(out, r##"<line x1="{a}" y1="{b}" x2="{b}" y2="{a}" stroke="#999999" stroke-dasharray="4 4"/>"##);
            let mut knots = vec![lo.clone()];
            knots.extend(m.turning_points().iter().cloned());
            knots.push(hi.clone());
            let pts: Vec<String> = knots
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    let j = k.saturating_sub(1).min(m.turning_count());
                    let y = m.branch(j, x);
                    format!("{},{}", c(frame.px(f.to_f64(x))), c(frame.py(f.to_f64(&y))))
                })
                .collect();
            let _ = writeln!(out, r#"<polyline points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, pts.join(" "));
            for (k, xs) in orbits.iter().enumerate() {
                let col = PALETTE[k % PALETTE.len()];
                let mut path = vec![format!("{},{}", c(frame.px(xs[0])), c(frame.py(xs[0])))];
                for w in xs.windows(2) {
                    path.push(format!("{},{}", c(frame.px(w[0])), c(frame.py(w[1]))));
                    path.push(format!("{},{}", c(frame.px(w[1])), c(frame.py(w[1]))));
                }
                let _ = writeln!(out, r#"<polyline points="{}" fill="none" stroke="{col}" stroke-width="1"/>"#, path.join(" "));
            }
        }
        PlotStyle::OrbitBars => {
            let zero = frame.py(0.0_f64.clamp(frame.lo, frame.hi));
            let _ = writeln!(out, r##"<line x1="{a}" y1="{}" x2="{b}" y2="{}" stroke="#999999"/>"##, c(zero), c(zero));
            let slots = (n + 1) as f64;
            let width = (frame.x1 - frame.x0) / slots;
            let lanes = orbits.len().max(1) as f64;
            for (k, xs) in orbits.iter().enumerate() {
                let col = PALETTE[k % PALETTE.len()];
                for (step, v) in xs.iter().enumerate() {
                    let x = frame.x0 + width * (step as f64 + (k as f64 + 0.5) / lanes);
                    let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{col}" stroke-width="2"/>"#, c(x), c(zero), c(x), c(frame.py(*v)));
                    let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="{col}"/>"#, c(x), c(frame.py(*v)));
                }
            }
        }
    }
    for t in m.turning_points() {
        let x = c(frame.px(f.to_f64(t)));
        let _ = writeln!(out, r##"<line x1="{x}" y1="{a}" x2="{x}" y2="{b}" stroke="#dddddd"/>"##);
    }
    legend(&mut out, series);
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::pwl::BimodalMap;

    fn setup() -> (BimodalMap, Vec<Series>) {
        let m = BimodalMap::rational(rat(5, 2), rat(1, 10)).unwrap();
        let s = vec![
            Series { label: "c1".into(), start: m.c1().clone() },
            Series { label: "c2".into(), start: m.c2().clone() },
        ];
        (m, s)
    }

    #[test]
    fn repeatable_output() {
        let (m, s) = setup();
        for style in [PlotStyle::Cobweb, PlotStyle::OrbitBars] {
            let a = plot_svg(&m, &s, 6, style).unwrap();
            let b = plot_svg(&m, &s, 6, style).unwrap();
            assert_eq!(a, b);
            assert!(a.starts_with(r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800""#));
            assert!(a.ends_with("</svg>\n"));
        }
    }

    #[test]
    fn orbit_bars_draw_each_iterate() {
        let (m, s) = setup();
        let svg = plot_svg(&m, &s, 6, PlotStyle::OrbitBars).unwrap();
        assert_eq!(svg.matches("<circle").count(), 14);
    }

    #[test]
    fn cobweb_graph_passes_corners() {
        let (m, s) = setup();
        let svg = plot_svg(&m, &s, 3, PlotStyle::Cobweb).unwrap();
        // q(-a) = -a and q(a) = a: the graph starts and ends on the diagonal corners
        assert!(svg.contains(r#"<polyline points="60.00,740.00 "#), "{svg}");
        assert!(svg.contains(r#" 740.00,60.00" fill="none" stroke="black""#));
    }

    #[test]
    fn style_names() {
        assert_eq!("orbit-bars".parse::<PlotStyle>().unwrap(), PlotStyle::OrbitBars);
        assert!("bars".parse::<PlotStyle>().is_err());
    }
}
