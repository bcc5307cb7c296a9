mod common;

use common::{elem, harvest, oracle_offset};
use kneadforge::algebra::{rat, Field};
use kneadforge::bifurcation::{coefficient_structure_check, derive_bifurcation_eq, StructureKind};
use kneadforge::itinerary::realization_interval;
use kneadforge::pwl::Chart;

#[test]
fn harvested_maps_satisfy_their_equations() {
    let corpus = harvest(11, 60, 14);
    for h in &corpus {
        let f = Field::rational(h.lambda.clone());
        let eq = derive_bifurcation_eq(Chart::Bimodal, &h.itinerary).unwrap();
        assert!(eq.holds_at(&f, &[elem(&h.b)]), "{} at λ = {}, b = {}", h.itinerary, h.lambda, h.b);
        let iv = realization_interval(&h.itinerary, &f).unwrap().expect("realized");
        assert!(iv.contains(&elem(&h.b)), "{} at λ = {}: {iv} misses {}", h.itinerary, h.lambda, h.b);
    }
}

#[test]
fn solved_offset_matches_the_oracle() {
    for h in harvest(12, 40, 10) {
        let f = Field::rational(h.lambda.clone());
        let eq = derive_bifurcation_eq(Chart::Bimodal, &h.itinerary).unwrap();
        let block: Vec<usize> = h.itinerary.symbols()[1..h.itinerary.len() - 1].iter().map(|s| s.index()).collect();
        let start = h.itinerary.symbols()[0].index();
        let b = oracle_offset(&h.lambda, start, &block).unwrap();
        assert_eq!(eq.solve_bimodal(&f).and_then(|e| e.as_rational()), Some(b));
    }
}

#[test]
fn structure_laws_hold_on_the_corpus() {
    for h in harvest(13, 60, 14) {
        let eq = derive_bifurcation_eq(Chart::Bimodal, &h.itinerary).unwrap();
        let kind = StructureKind::infer(&h.itinerary).unwrap();
        let r = coefficient_structure_check(&eq, kind);
        assert!(r.passed, "{}: {:?}", h.itinerary, r.first_violation);
    }
}

#[test]
fn oracle_agrees_on_the_period_two_curve() {
    // (λ + 1) b = 1 - λ
    for k in 21..60 {
        let l = rat(k, 20);
        let want = (rat(1, 1) - &l) / (&l + rat(1, 1));
        assert_eq!(oracle_offset(&l, 1, &[2]), Some(want));
    }
}
