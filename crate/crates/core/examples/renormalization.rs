//! Period-two renormalization at the exceptional slope and the resulting
//! constant combinatorics across an interval of offsets.

use kneadforge::exceptional::{nonrigidity_scan, renormalization_check};
use kneadforge::pwl::BimodalMap;
use kneadforge::reproduce::{lambda_e, nonrigidity_grid};
use kneadforge::algebra::Elem;

fn main() {
    let f = lambda_e();
    let m = BimodalMap::new(f.clone(), Elem::zero()).unwrap();
    for c in 1..=2 {
        let r = renormalization_check(&m, c, 2).unwrap();
        println!(
            "R{c} = [{}, {}], q^2(R{c}) = [{}, {}], holds: {}",
            f.format(&r.interval.0),
            f.format(&r.interval.1),
            f.format(&r.image.0),
            f.format(&r.image.1),
            r.holds
        );
    }
    let scan = nonrigidity_scan(&f, &nonrigidity_grid(), 24).unwrap();
    println!("21 offsets in [-0.11, 0.11]: constant = {:?}, distinct pairs = {}", scan.constant, scan.distinct);
    println!("c1: {}", scan.rows[0].itineraries[0]);
    println!("c2: {}", scan.rows[0].itineraries[1]);
}
