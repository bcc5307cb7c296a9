//! Writes cobweb and orbit-bar pictures of the turning-point orbits at the
//! exceptional slope for b = 0 and b = 0.05.
//!
//! Usage: `cobweb_plot [OUT_DIR]`

use std::path::PathBuf;

use kneadforge::algebra::{rat, Elem};
use kneadforge::plot::{plot_svg, PlotStyle, Series};
use kneadforge::pwl::BimodalMap;
use kneadforge::reproduce::lambda_e;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for (tag, b) in [("b0", rat(0, 1)), ("b005", rat(1, 20))] {
        let m = BimodalMap::new(lambda_e(), Elem::rational(&b)).unwrap();
        let series = vec![
            Series { label: "c1".into(), start: m.c1().clone() },
            Series { label: "c2".into(), start: m.c2().clone() },
        ];
        for (style, name) in [(PlotStyle::Cobweb, "cobweb"), (PlotStyle::OrbitBars, "bars")] {
            let path = dir.join(format!("{name}_{tag}.svg"));
            std::fs::write(&path, plot_svg(&m, &series, 6, style).unwrap()).unwrap();
            println!("wrote {}", path.display());
        }
    }
}
