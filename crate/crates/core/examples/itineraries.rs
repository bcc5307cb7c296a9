//! Itineraries of turning points and the offsets at which a finite
//! itinerary is realized.

use kneadforge::algebra::{rat, AlgebraicNumber, Elem, Field, IntPoly};
use kneadforge::itinerary::{is_compatible, itinerary_of, realization_interval, Itinerary};
use kneadforge::pwl::BimodalMap;

fn main() {
    let alpha = AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(2, 1)).unwrap();
    let field = Field::new(alpha);
    let m = BimodalMap::new(field.clone(), Elem::zero()).unwrap();
    for (name, c) in [("c1", m.c1()), ("c2", m.c2())] {
        println!("{name}: {}", itinerary_of(&m, c, 14).unwrap());
    }

    let it: Itinerary = "c1 J2 J1 J2 J0 J2 c1".parse().unwrap();
    match realization_interval(&it, &field).unwrap() {
        Some(iv) => println!("{it} is realized for b in {iv}"),
        None => println!("{it} is never realized"),
    }

    // the period-two loop, unrolled, is compatible with the period-six one
    let base: Itinerary = "c1 J2 | period=2".parse().unwrap();
    let longer: Itinerary = "c1 J2 J1 J2 J0 J2 | period=6".parse().unwrap();
    println!("{base} compatible with {longer}: {}", is_compatible(&base, &longer).unwrap());
    let other: Itinerary = "c1 J2 J2 J2 J0 J2 | period=6".parse().unwrap();
    println!("{base} compatible with {other}: {}", is_compatible(&base, &other).unwrap());
}
