//! Cascade search for exceptional itineraries over a periodic base.
//!
//! Usage: `exceptional_cascade [BASE] [MAX_INSERTIONS]`

use kneadforge::algebra::rat;
use kneadforge::exceptional::{cascade_search, CascadeOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let base = args.next().unwrap_or_else(|| "c1 J2 c1".into());
    let m: usize = args.next().map(|s| s.parse().expect("integer")).unwrap_or(3);
    let out = cascade_search(&base.parse().expect("itinerary"), &CascadeOptions::new(m, (rat(1, 1), rat(3, 1)))).unwrap();
    println!("{} candidates, {} failures", out.records.len(), out.failures.len());
    for rec in out.realized() {
        println!("{}", rec.extended);
        println!("  F = {}", rec.factor);
        for r in &rec.realized {
            println!("  λ ~ {:.6}, b in {}", r.root.to_f64(), r.interval);
        }
    }
}
