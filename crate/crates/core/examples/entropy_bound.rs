//! The invariant region of the w-recursion for bimodal slopes in (2, 3]
//! and the general bound for slopes above 3.

use kneadforge::algebra::{rat, Field};
use kneadforge::bifurcation::{w_bound_check, WBoundMode};

fn main() {
    let seq = [2, 0, 1, 1, 2, 0];
    for l in [rat(5, 2), rat(6, 5)] {
        let r = w_bound_check(&seq, &Field::rational(l.clone()), 100, WBoundMode::Bimodal);
        println!("bimodal, λ = {l}: passed = {}, first failure = {:?}", r.passed, r.first_failure.map(|f| (f.k, f.value)));
    }
    let r = w_bound_check(&[3, 1, 4, 0, 2], &Field::rational(rat(7, 2)), 100, WBoundMode::General { l: 4, s: 1, hat_i: 2 });
    println!("l = 4, λ = 7/2: passed = {} up to k = {}", r.passed, r.checked_up_to);
}
