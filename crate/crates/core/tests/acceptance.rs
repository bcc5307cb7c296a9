//! One line per acceptance criterion; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;

use common::{elem, harvest, it, lambda_e, rng, Harvested};
use kneadforge::algebra::{rat, Elem, Field, IntPoly};
use kneadforge::bifurcation::{coefficient_structure_check, derive_bifurcation_eq, w_bound_check, StructureKind, WBoundMode};
use kneadforge::exceptional::{
    cascade_search, extract_factor, hyperbolic_approx_obstruction, nonrigidity_scan, renormalization_check, CascadeOptions,
    Obstruction,
};
use kneadforge::itinerary::realization_interval;
use kneadforge::pwl::{BimodalMap, Chart};
use kneadforge::reproduce::nonrigidity_grid;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e < limit, || format!("took {e:.2?}, limit {limit:?}"))
}

fn equation_fidelity() -> Outcome {
    let t = Instant::now();
    let eq = derive_bifurcation_eq(Chart::Bimodal, &it("c1 J2 c1")).map_err(|e| e.to_string())?;
    ensure(eq.q1() == &p(&[-1, 0, 1]) && eq.q0() == &p(&[-1, 2, -1]), || format!("period two: {eq}"))?;
    for n in 2..=10usize {
        let eq = derive_bifurcation_eq(Chart::Bimodal, &it(&format!("c1 {}c1", "J2 ".repeat(n - 1)))).map_err(|e| e.to_string())?;
        let mut q1 = vec![0; n + 1];
        q1[0] = -1;
        q1[n] = 1;
        let mut q0 = vec![2; n + 1];
        q0[0] = -1;
        q0[n] = -1;
        ensure(eq.q1() == &p(&q1) && eq.q0() == &p(&q0), || format!("n = {n}: {eq}"))?;
    }
    let eq = derive_bifurcation_eq(Chart::Bimodal, &it("c1 J2 J0 J1 c1")).map_err(|e| e.to_string())?;
    let lm1 = p(&[-1, 1]);
    ensure(eq.q1() == &(&lm1 * &p(&[-1, 1, 1, 1])) && eq.q0() == &(&lm1 * &p(&[-1, -1, 1, -1])), || format!("cubic: {eq}"))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("11 equations exact in {:.2?}", t.elapsed()))
}

fn factor_extraction() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("c1 J2 c1", "c1 J2 J0 J2 c1", p(&[1, 0, 1])),
        ("c1 J2 c1", "c1 J2 J1 J2 c1", p(&[-1, 0, 1])),
        ("c1 J2 c1", "c1 J2 J1 J2 J0 J2 c1", p(&[-1, 0, -1, 0, 1])),
        ("c1 J2 J0 J1 c1", "c1 J2 J0 J1 J0 J2 J0 J1 J1 J2 J0 J1 c1", p(&[-1, 0, 0, 0, -1, 0, 0, 0, 1])),
    ];
    for (base, ext, want) in cases {
        let f = extract_factor(Chart::Bimodal, &it(base), &it(ext)).map_err(|e| e.to_string())?;
        ensure(f == want, || format!("{ext}: got {f}, want {want}"))?;
    }
    within(t, Duration::from_secs(1))?;
    Ok(format!("4 factors exact in {:.2?}", t.elapsed()))
}

fn exceptional_certification() -> Outcome {
    let t = Instant::now();
    let mut notes = Vec::new();
    for (base, root, lo, hi) in
        [("c1 J2 c1", 1.27202, -0.119726, 0.346014), ("c1 J2 J0 J1 c1", 1.12784, -0.808065, -0.720696)]
    {
        let out = cascade_search(&it(base), &CascadeOptions::new(3, (rat(1, 1), rat(3, 1)))).map_err(|e| e.to_string())?;
        let hit = out
            .realized()
            .flat_map(|r| r.realized.iter())
            .find(|r| (r.root.to_f64() - root).abs() < 1e-4)
            .ok_or_else(|| format!("{base}: no realized root near {root}"))?;
        let (a, b) = (hit.interval.lo_f64(), hit.interval.hi_f64());
        ensure((a - lo).abs() < 1e-4 && (b - hi).abs() < 1e-4, || format!("{base}: b in [{a}, {b}]"))?;
        notes.push(format!("{:.5} on [{a:.6}, {b:.6}]", hit.root.to_f64()));
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!("{} in {:.2?}", notes.join(", "), t.elapsed()))
}

fn non_existence_bound() -> Outcome {
    let t = Instant::now();
    let mut r = rng(4);
    let lambdas: Vec<Field> = (0..20)
        .map(|_| {
            let q = r.gen_range(1..=40i64);
            let n = r.gen_range(2 * q + 1..=3 * q);
            Field::rational(rat(n, q))
        })
        .collect();
    for s in 0..200 {
        let syms: Vec<usize> = (0..99).map(|_| r.gen_range(0..=2)).collect();
        for f in &lambdas {
            let rep = w_bound_check(&syms, f, 100, WBoundMode::Bimodal);
            ensure(rep.passed && rep.checked_up_to == 100, || format!("bimodal sequence {s}: {rep:?}"))?;
        }
    }
    for s in 0..200 {
        let l = r.gen_range(1..=4usize);
        let sign = if r.gen_bool(0.5) { 1 } else { -1 };
        let hat_i = r.gen_range(0..=l);
        let syms: Vec<usize> = (0..99).map(|_| r.gen_range(0..=l)).collect();
        let q = r.gen_range(1..=40i64);
        let f = Field::rational(rat(r.gen_range(3 * q + 1..=5 * q), q));
        let rep = w_bound_check(&syms, &f, 100, WBoundMode::General { l, s: sign, hat_i });
        ensure(rep.passed && rep.checked_up_to == 100, || format!("general sequence {s}: {rep:?}"))?;
    }
    within(t, Duration::from_secs(10))?;
    Ok(format!("4000 bimodal and 200 general runs to k = 100 in {:.2?}", t.elapsed()))
}

fn oracle_equivalence(corpus: &[Harvested]) -> Outcome {
    let t = Instant::now();
    for h in corpus {
        let f = Field::rational(h.lambda.clone());
        let eq = derive_bifurcation_eq(Chart::Bimodal, &h.itinerary).map_err(|e| e.to_string())?;
        ensure(eq.holds_at(&f, &[elem(&h.b)]), || format!("{} fails at λ = {}, b = {}", h.itinerary, h.lambda, h.b))?;
        let iv = realization_interval(&h.itinerary, &f).map_err(|e| e.to_string())?;
        ensure(iv.is_some_and(|iv| iv.contains(&elem(&h.b))), || format!("{} not realized at b = {}", h.itinerary, h.b))?;
    }
    within(t, Duration::from_secs(30))?;
    let longest = corpus.iter().map(|h| h.itinerary.len() - 1).max().unwrap_or(0);
    Ok(format!("{} itineraries (period up to {longest}) in {:.2?}", corpus.len(), t.elapsed()))
}

fn structure_laws(corpus: &[Harvested]) -> Outcome {
    let t = Instant::now();
    for h in corpus {
        let eq = derive_bifurcation_eq(Chart::Bimodal, &h.itinerary).map_err(|e| e.to_string())?;
        let kind = StructureKind::infer(&h.itinerary).ok_or_else(|| format!("{}: no structure kind", h.itinerary))?;
        let rep = coefficient_structure_check(&eq, kind);
        ensure(rep.passed, || format!("{}: {:?}", h.itinerary, rep.first_violation))?;
    }
    within(t, Duration::from_secs(5))?;
    Ok(format!("{} equations in {:.2?}", corpus.len(), t.elapsed()))
}

fn non_rigidity() -> Outcome {
    let t = Instant::now();
    let grid = nonrigidity_grid();
    let scan = nonrigidity_scan(&lambda_e(), &grid, 24).map_err(|e| e.to_string())?;
    ensure(scan.all_constant(), || format!("λ_e: constant = {:?}", scan.constant))?;
    let [i1, i2] = &scan.rows[0].itineraries;
    ensure(i1.tail().map(|t| t.period) == Some(6) && i2.tail().map(|t| t.period) == Some(6), || "period is not 6".into())?;
    ensure(i1.truncated(7) == it("c1 J2 J1 J2 J0 J2 c1"), || format!("c1: {i1}"))?;
    ensure(i2.truncated(7) == it("c2 J0 J1 J0 J2 J0 c2"), || format!("c2: {i2}"))?;
    let two = nonrigidity_scan(&Field::rational(rat(2, 1)), &grid, 24).map_err(|e| e.to_string())?;
    ensure(two.distinct >= 2, || format!("λ = 2: {} distinct", two.distinct))?;
    within(t, Duration::from_secs(10))?;
    Ok(format!("constant at λ_e, {} distinct pairs at λ = 2, {:.2?}", two.distinct, t.elapsed()))
}

fn renormalization() -> Outcome {
    let t = Instant::now();
    let m = BimodalMap::new(lambda_e(), Elem::zero()).map_err(|e| e.to_string())?;
    for c in 1..=2 {
        let r = renormalization_check(&m, c, 2).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("R{c} fails at λ_e"))?;
    }
    let m2 = BimodalMap::rational(rat(2, 1), rat(0, 1)).map_err(|e| e.to_string())?;
    ensure(!renormalization_check(&m2, 1, 2).map_err(|e| e.to_string())?.holds, || "holds at λ = 2".into())?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("R1, R2 hold at λ_e, fails at λ = 2, {:.2?}", t.elapsed()))
}

fn obstruction() -> Outcome {
    let t = Instant::now();
    let m = BimodalMap::rational(rat(2, 1), rat(-1, 3)).map_err(|e| e.to_string())?;
    match hyperbolic_approx_obstruction(&m, 200).map_err(|e| e.to_string())? {
        Obstruction::Obstructed { .. } => {}
        Obstruction::NotDetermined { reason, classifications } => {
            let its: Vec<String> =
                classifications.iter().map(|c| c.itinerary().map(|i| i.to_string()).unwrap_or_default()).collect();
            return Err(format!("λ = 2, b = -1/3: not determined ({reason}: {})", its.join("; ")));
        }
    }
    let me = BimodalMap::new(lambda_e(), Elem::zero()).map_err(|e| e.to_string())?;
    ensure(!hyperbolic_approx_obstruction(&me, 200).map_err(|e| e.to_string())?.is_obstructed(), || {
        "λ_e, b = 0: obstructed".into()
    })?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("{:.2?}", t.elapsed()))
}

fn main() {
    // cargo passes harness flags such as --nocapture or a name filter; only
    // --list needs a distinct answer
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let t = Instant::now();
    let corpus = harvest(2024, 100, 14);
    let harvest_time = t.elapsed();
    let criteria: Vec<Criterion> = vec![
        ("bifurcation-equation fidelity", Box::new(equation_fidelity)),
        ("factor extraction", Box::new(factor_extraction)),
        ("exceptional certification", Box::new(exceptional_certification)),
        ("non-existence bound", Box::new(non_existence_bound)),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("structure laws", Box::new(|| structure_laws(&corpus))),
        ("non-rigidity", Box::new(non_rigidity)),
        ("renormalization", Box::new(renormalization)),
        ("obstruction predicate", Box::new(obstruction)),
    ];
    println!("corpus of {} harvested itineraries built in {harvest_time:.2?}", corpus.len());
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("criterion {} {name}: PASS ({msg})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({msg})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
