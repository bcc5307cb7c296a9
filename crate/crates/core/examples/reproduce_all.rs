use kneadforge::reproduce::{reproduce, IDS};

fn main() {
    for id in IDS {
        let t = std::time::Instant::now();
        let r = reproduce(id).expect("example runs");
        println!("{id}: {} ({:.2?})", if r.passed() { "ok" } else { "MISMATCH" }, t.elapsed());
        for c in r.checks.iter().filter(|c| !c.pass) {
            println!("  {}: expected {}, observed {}", c.name, c.expected, c.observed);
        }
    }
}
