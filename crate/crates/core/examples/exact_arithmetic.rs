//! Real roots of an integer polynomial, isolated and refined exactly, then
//! used as the slope of a number field.

use kneadforge::algebra::{isolate_real_roots, rat, Field, IntPoly};

fn main() {
    let p = IntPoly::from_i64s(&[-1, 0, -1, 0, 1]);
    let roots = isolate_real_roots(&p, &rat(-3, 1), &rat(3, 1));
    println!("{p} has {} real roots", roots.len());
    for r in &roots {
        let tight = r.refine_bits(40);
        println!("  root in [{}, {}] ~ {:.8}", tight.lo(), tight.hi(), tight.to_f64());
    }

    let positive = roots.into_iter().find(|r| r.to_f64() > 0.0).expect("one positive root");
    let f = Field::new(positive);
    let l = f.lambda();
    let l2 = f.mul(&l, &l);
    // λ⁴ = λ² + 1 holds exactly in the field
    let l4 = f.mul(&l2, &l2);
    let rhs = f.add(&l2, &f.from_rational(&rat(1, 1)));
    println!("λ^4 == λ^2 + 1: {}", f.equal(&l4, &rhs));
    println!("λ^2 = {}", f.format(&l2));
}
