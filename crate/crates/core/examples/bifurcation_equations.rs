//! Bifurcation equations of periodic turning points in both charts, and
//! the coefficient laws they obey.

use kneadforge::bifurcation::{coefficient_structure_check, derive_bifurcation_eq, StructureKind};
use kneadforge::itinerary::Itinerary;
use kneadforge::pwl::Chart;

fn main() {
    for text in ["c1 J2 c1", "c1 J2 J2 J2 c1", "c1 J2 J0 J1 c1", "c2 J0 c2"] {
        let it: Itinerary = text.parse().unwrap();
        let eq = derive_bifurcation_eq(Chart::Bimodal, &it).unwrap();
        let kind = StructureKind::infer(&it);
        let laws = kind.map(|k| coefficient_structure_check(&eq, k).passed);
        println!("{text:<18} {eq}");
        println!("{:<18} reduced: {}   laws: {laws:?}", "", eq.reduced());
    }

    let it: Itinerary = "c1 c2".parse().unwrap();
    let eq = derive_bifurcation_eq(Chart::Standard { l: 2, s: 1 }, &it).unwrap();
    println!("standard chart, {it}: Q = {:?}", eq.q().iter().map(|p| p.to_string()).collect::<Vec<_>>());
}
