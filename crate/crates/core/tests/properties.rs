mod common;

use proptest::prelude::*;

use kneadforge::algebra::{parse_rational, rat, Elem, Field};
use kneadforge::bifurcation::derive_bifurcation_eq;
use kneadforge::exceptional::{extract_factor, insert_blocks};
use kneadforge::io::outward_decimal;
use kneadforge::itinerary::{Itinerary, Symbol};
use kneadforge::pwl::{orbit, BimodalMap, Chart};

fn word(start: usize, block: &[usize], end: usize) -> Itinerary {
    let mut s = vec![Symbol::C(start)];
    s.extend(block.iter().map(|&j| Symbol::J(j)));
    s.push(Symbol::C(end));
    Itinerary::finite(s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mirrored_itinerary_negates_the_offset(block in prop::collection::vec(0usize..3, 1..9), end in 1usize..3) {
        let it = word(1, &block, end);
        let a = derive_bifurcation_eq(Chart::Bimodal, &it).unwrap();
        let b = derive_bifurcation_eq(Chart::Bimodal, &it.mirror(2)).unwrap();
        prop_assert_eq!(a.q1(), b.q1());
        prop_assert_eq!(a.q0(), &-b.q0());
    }

    #[test]
    fn inserted_blocks_share_a_factor(block in prop::collection::vec(0usize..3, 1..4), ins in prop::collection::vec(0usize..2, 1..3)) {
        let base = word(1, &block, 1);
        let ext = insert_blocks(&base, &ins).unwrap();
        let f = extract_factor(Chart::Bimodal, &base, &ext).unwrap();
        let eb = derive_bifurcation_eq(Chart::Bimodal, &base).unwrap();
        let ee = derive_bifurcation_eq(Chart::Bimodal, &ext).unwrap();
        // F·Q_base and Q_ext agree up to a constant
        let lhs = &f * eb.q1();
        let (rl, re) = (lhs.leading(), ee.q1().leading());
        prop_assert_eq!(lhs.scale(&re), ee.q1().scale(&rl));
        prop_assert_eq!((&f * eb.q0()).scale(&re), ee.q0().scale(&rl));
    }

    #[test]
    fn itinerary_text_round_trips(block in prop::collection::vec(0usize..4, 0..12), start in 1usize..4, end in 1usize..4) {
        let it = word(start, &block, end);
        prop_assert_eq!(it.to_string().parse::<Itinerary>().unwrap(), it);
    }

    #[test]
    fn orbit_enclosures_hold_the_exact_value(k in 21i64..60, t in -99i64..100, x in -99i64..100, n in 1usize..12) {
        let l = rat(k, 20);
        let b = (rat(3, 1) - &l) / (&l - rat(1, 1)) * rat(t, 100);
        let m = BimodalMap::rational(l.clone(), b).unwrap();
        let a = m.a().as_rational().unwrap();
        let x0 = a * rat(x, 100);
        let f = Field::rational(l);
        for p in orbit(&m, &Elem::rational(&x0), n).unwrap() {
            let v = p.value.as_rational().unwrap();
            prop_assert!(p.enclosure.lo <= v && v <= p.enclosure.hi);
            prop_assert!(parse_rational(&outward_decimal(&p.enclosure.lo, 12, false)).unwrap() <= v);
            prop_assert!(parse_rational(&outward_decimal(&p.enclosure.hi, 12, true)).unwrap() >= v);
            prop_assert!(f.cmp(&p.value, &p.value).is_eq());
        }
    }
}
