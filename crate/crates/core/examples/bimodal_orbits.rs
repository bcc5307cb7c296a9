//! Feasibility of bimodal maps and exact orbits with outward enclosures.

use kneadforge::algebra::{rat, Elem};
use kneadforge::io;
use kneadforge::pwl::{orbit, BimodalMap, IntervalMap};

fn main() {
    let field = kneadforge::algebra::Field::rational(rat(2, 1));
    for b in [rat(0, 1), rat(3, 2)] {
        let v = BimodalMap::violations(&field, &Elem::rational(&b));
        println!("λ = 2, b = {b}: {}", if v.is_empty() { "feasible".to_string() } else { format!("{} violation(s)", v.len()) });
    }

    let m = BimodalMap::rational(rat(5, 2), rat(1, 10)).expect("feasible");
    println!("domain [{}, {}]", m.field().format(m.domain().0), m.field().format(m.domain().1));
    println!("turning points {} and {}", m.field().format(m.c1()), m.field().format(m.c2()));
    let pts = orbit(&m, &Elem::rational(&rat(3, 10)), 8).expect("inside the domain");
    print!("{}", io::orbit_csv(&pts));
}
