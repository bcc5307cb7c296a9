//! Curves of codimension-one maps and the obstruction test.

use kneadforge::algebra::{rat, Elem, Field};
use kneadforge::exceptional::{codim1_analyze, hyperbolic_approx_obstruction, Obstruction};
use kneadforge::pwl::{BimodalMap, Chart};

fn main() {
    let controlled = vec!["c1 J2 c1".parse().unwrap()];
    let r = codim1_analyze(Chart::Bimodal, &controlled, &Field::rational(rat(2, 1))).unwrap();
    println!("det = {}", r.det);
    println!("b(λ) = {}", r.curve[0]);
    println!("valid on {:?}", r.window.as_ref().map(|w| (w.lo.to_string(), w.hi.to_string())));

    for (l, b) in [(rat(2, 1), rat(-1, 3)), (rat(3, 2), rat(-1, 5))] {
        let m = BimodalMap::new(Field::rational(l.clone()), Elem::rational(&b)).unwrap();
        match hyperbolic_approx_obstruction(&m, 200).unwrap() {
            Obstruction::Obstructed { free_turning_point, .. } => {
                println!("λ = {l}, b = {b}: obstructed, c{free_turning_point} free")
            }
            Obstruction::NotDetermined { reason, .. } => println!("λ = {l}, b = {b}: not determined ({reason})"),
        }
    }
}
