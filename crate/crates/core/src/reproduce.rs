//! Recomputation of the worked bimodal examples, each with its printed
//! values checked against what the library derives.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{rat, AlgebraicNumber, Elem, Field, IntPoly};
use crate::bifurcation::{coefficient_structure_check, derive_bifurcation_eq, StructureKind};
use crate::error::{Error, Result};
use crate::exceptional::{
    cascade_search, classify_turning_point, extract_factor, hyperbolic_approx_obstruction, nonrigidity_scan,
    renormalization_check, CascadeOptions, Classification,
};
use crate::io::{envelope, equation_json, lambda_json, obstruction_json, record_json, renorm_json, scan_json};
use crate::itinerary::{itinerary_of, realization_interval, Itinerary};
use crate::pwl::{BimodalMap, Chart, IntervalMap};

/// Every reproducible example, in reading order.
pub const IDS: &[&str] = &[
    "tent-exceptional",
    "period-two",
    "period-four-factors",
    "lambda-e",
    "lambda-e-mirror",
    "turning-orbits",
    "cubic-base",
    "octic-cascade",
    "j2-family",
    "renormalization",
    "nonrigidity",
    "obstruction",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub id: String,
    pub checks: Vec<Check>,
    pub details: Vec<Value>,
}

impl Reproduction {
    fn new(id: &str) -> Self {
        Reproduction { id: id.into(), checks: Vec::new(), details: Vec::new() }
    }

    fn check(&mut self, name: &str, expected: impl ToString, observed: impl ToString, pass: bool) {
        self.checks.push(Check { name: name.into(), expected: expected.to_string(), observed: observed.to_string(), pass });
    }

    fn same(&mut self, name: &str, expected: impl ToString, observed: impl ToString) {
        let (e, o) = (expected.to_string(), observed.to_string());
        let pass = e == o;
        self.check(name, e, o, pass);
    }

    fn near(&mut self, name: &str, expected: f64, observed: f64, tol: f64) {
        self.check(name, expected, format!("{observed:.6}"), (expected - observed).abs() < tol);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        envelope(
            "reproduction",
            json!({ "id": self.id, "passed": self.passed(), "checks": self.checks, "details": self.details }),
        )
    }
}

fn it(s: &str) -> Itinerary {
    s.parse().expect("literal itinerary")
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn algebraic_field(c: &[i64], lo: i64, hi: i64) -> Result<Field> {
    Ok(Field::new(AlgebraicNumber::unique_root_in(&poly(c), &rat(lo, 1), &rat(hi, 1))?))
}

/// `λ_e`, the positive root of `λ⁴ − λ² − 1`.
pub fn lambda_e() -> Field {
    algebraic_field(&[-1, 0, -1, 0, 1], 1, 2).expect("isolated root")
}

pub fn reproduce(id: &str) -> Result<Reproduction> {
    let mut r = Reproduction::new(id);
    match id {
        "tent-exceptional" => tent_exceptional(&mut r)?,
        "period-two" => period_two(&mut r)?,
        "period-four-factors" => period_four(&mut r)?,
        "lambda-e" => cascade_example(&mut r, "c1 J2 c1", 2, "c1 J2 J1 J2 J0 J2 c1", poly(&[-1, 0, -1, 0, 1]), 1.27202, (-0.119726, 0.346014))?,
        "lambda-e-mirror" => mirror(&mut r)?,
        "turning-orbits" => turning_orbits(&mut r)?,
        "cubic-base" => cubic(&mut r)?,
        "octic-cascade" => cascade_example(
            &mut r,
            "c1 J2 J0 J1 c1",
            2,
            "c1 J2 J0 J1 J0 J2 J0 J1 J1 J2 J0 J1 c1",
            poly(&[-1, 0, 0, 0, -1, 0, 0, 0, 1]),
            1.12784,
            (-0.808065, -0.720696),
        )?,
        "j2-family" => j2_family(&mut r)?,
        "renormalization" => renormalization(&mut r)?,
        "nonrigidity" => nonrigidity(&mut r)?,
        "obstruction" => obstruction(&mut r)?,
        _ => return Err(Error::Parse(format!("unknown example id {id:?}; known ids: {}", IDS.join(", ")))),
    }
    Ok(r)
}

fn tent_exceptional(r: &mut Reproduction) -> Result<()> {
    // golden mean: the unimodal tent map has a period-3 turning point
    let f = algebraic_field(&[-1, -1, 1], 1, 2)?;
    let bound = BimodalMap::b_bound(&f)?;
    let grid: Vec<Elem> = [-1.1, -1.3, -1.6, -2.0, -2.2]
        .iter()
        .map(|v| f.from_rational(&BigRational::from_float(*v).expect("finite")))
        .filter(|b| f.cmp(&f.add(b, &bound), &Elem::zero()) != std::cmp::Ordering::Less)
        .collect();
    let scan = nonrigidity_scan(&f, &grid, 30)?;
    r.same("c1 itinerary constant for b below -1", true, scan.constant[0]);
    r.same("c2 itinerary constant for b below -1", false, scan.constant[1]);
    let m = BimodalMap::new(f.clone(), grid[2].clone())?;
    let c = classify_turning_point(&m, 1, 30)?;
    r.same("c1 classification", "exceptional", kind(&c));
    if let Some(i) = c.itinerary() {
        r.same("c1 itinerary", "c1 J1 J0 c1", i);
    }
    r.details.push(scan_json(&scan));
    Ok(())
}

fn kind(c: &Classification) -> &'static str {
    match c {
        Classification::Ordinary { .. } => "ordinary",
        Classification::Exceptional { .. } => "exceptional",
        Classification::InfeasibleCase3 { .. } => "infeasible_case3",
        Classification::NotControlled { .. } => "not_controlled",
    }
}

fn period_two(r: &mut Reproduction) -> Result<()> {
    let eq = derive_bifurcation_eq(Chart::Bimodal, &it("c1 J2 c1"))?;
    r.same("Q1", poly(&[-1, 0, 1]), eq.q1());
    r.same("Q0", poly(&[-1, 2, -1]), eq.q0());
    let red = eq.reduced();
    r.same("reduced Q1", poly(&[1, 1]), red.q1());
    r.same("reduced Q0", poly(&[1, -1]), red.q0());
    r.same("common factor", poly(&[-1, 1]), eq.common_factor());
    r.details.push(equation_json(&eq));
    Ok(())
}

fn period_four(r: &mut Reproduction) -> Result<()> {
    let base = it("c1 J2 c1");
    for (ext, want) in [("c1 J2 J0 J2 c1", poly(&[1, 0, 1])), ("c1 J2 J1 J2 c1", poly(&[-1, 0, 1]))] {
        let f = extract_factor(Chart::Bimodal, &base, &it(ext))?;
        r.same(&format!("F for {ext}"), &want, &f);
        let roots = crate::algebra::isolate_real_roots(&f, &rat(1, 1), &rat(3, 1));
        r.same(&format!("roots of F in (1,3) for {ext}"), 0, roots.len());
    }
    Ok(())
}

fn cascade_example(
    r: &mut Reproduction,
    base: &str,
    m: usize,
    extended: &str,
    factor: IntPoly,
    root: f64,
    b: (f64, f64),
) -> Result<()> {
    let out = cascade_search(&it(base), &CascadeOptions::new(m, (rat(1, 1), rat(3, 1))))?;
    let hit = out.realized().find(|rec| rec.extended == it(extended));
    r.same("realized extended itinerary", extended, hit.map(|h| h.extended.to_string()).unwrap_or_default());
    let Some(rec) = hit else { return Ok(()) };
    r.details.push(record_json(rec));
    let rr = &rec.realized[0];
    r.near("root", root, rr.root.to_f64(), 1e-5);
    r.near("b lower end", b.0, rr.interval.lo_f64(), 1e-6);
    r.near("b upper end", b.1, rr.interval.hi_f64(), 1e-6);
    r.same("F", factor, &rec.factor);
    r.same("realized itineraries in (1,3)", 1, out.realized().count());
    Ok(())
}

fn mirror(r: &mut Reproduction) -> Result<()> {
    let f = lambda_e();
    let i2 = it("c2 J0 J1 J0 J2 J0 c2");
    let iv = realization_interval(&i2, &f)?;
    r.same("I'' realized at λ_e", true, iv.is_some());
    if let Some(iv) = iv {
        r.near("b lower end", -0.346014, iv.lo_f64(), 1e-6);
        r.near("b upper end", 0.119726, iv.hi_f64(), 1e-6);
    }
    let m = BimodalMap::new(f, Elem::zero())?;
    r.same("c2 itinerary at b = 0", &i2, itinerary_of(&m, m.c2(), 12)?.truncated(7));
    Ok(())
}

fn turning_orbits(r: &mut Reproduction) -> Result<()> {
    let f = lambda_e();
    for b in [rat(0, 1), rat(1, 20)] {
        let m = BimodalMap::new(f.clone(), Elem::rational(&b))?;
        for i in 1..=2 {
            let pts = m.turning_orbit(i, 12)?;
            let it = itinerary_of(&m, &m.turning_points()[i - 1], 12)?;
            r.same(&format!("c{i} period at b = {b}"), 6, it.tail().map(|t| t.period).unwrap_or(0));
            r.details.push(json!({
                "b": b.to_string(),
                "turning_point": i,
                "itinerary": it,
                "orbit": pts.iter().map(|p| crate::algebra::sig_digits(f.to_f64(&p.value), 6)).collect::<Vec<_>>(),
            }));
        }
    }
    Ok(())
}

fn cubic(r: &mut Reproduction) -> Result<()> {
    let eq = derive_bifurcation_eq(Chart::Bimodal, &it("c1 J2 J0 J1 c1"))?;
    let lm1 = poly(&[-1, 1]);
    r.same("Q1", &lm1 * &poly(&[-1, 1, 1, 1]), eq.q1());
    r.same("Q0", &lm1 * &poly(&[-1, -1, 1, -1]), eq.q0());
    let lit = derive_bifurcation_eq(Chart::Bimodal, &it("c1 J1 J0 J2 c1"))?;
    r.check("literal order c1 J1 J0 J2 c1 gives a different equation", "different", lit.to_string(), lit.q() != eq.q());
    let s = coefficient_structure_check(&eq, StructureKind::C1Periodic);
    r.same("structure laws", true, s.passed);
    r.details.push(equation_json(&eq));
    Ok(())
}

fn j2_family(r: &mut Reproduction) -> Result<()> {
    for n in 2..=10usize {
        let text = format!("c1 {}c1", "J2 ".repeat(n - 1));
        let eq = derive_bifurcation_eq(Chart::Bimodal, &it(&text))?;
        let mut q1 = vec![0i64; n + 1];
        q1[0] = -1;
        q1[n] = 1;
        let mut q0 = vec![2i64; n + 1];
        q0[0] = -1;
        q0[n] = -1;
        r.same(&format!("Q1, n = {n}"), poly(&q1), eq.q1());
        r.same(&format!("Q0, n = {n}"), poly(&q0), eq.q0());
    }
    Ok(())
}

fn renormalization(r: &mut Reproduction) -> Result<()> {
    let f = lambda_e();
    let m = BimodalMap::new(f.clone(), Elem::zero())?;
    for c in 1..=2 {
        let rep = renormalization_check(&m, c, 2)?;
        r.same(&format!("R{c} is a period-2 renormalization interval at λ_e"), true, rep.holds);
        r.details.push(renorm_json(&f, &rep));
    }
    let m2 = BimodalMap::rational(rat(2, 1), rat(0, 1))?;
    r.same("fails at λ = 2, b = 0", false, renormalization_check(&m2, 1, 2)?.holds);
    Ok(())
}

/// 21 evenly spaced offsets from -0.11 to 0.11.
pub fn nonrigidity_grid() -> Vec<Elem> {
    (-10..=10).map(|k| Elem::rational(&rat(11 * k, 1000))).collect()
}

fn nonrigidity(r: &mut Reproduction) -> Result<()> {
    let f = lambda_e();
    let scan = nonrigidity_scan(&f, &nonrigidity_grid(), 24)?;
    r.same("both itineraries constant at λ_e", true, scan.all_constant());
    let row = &scan.rows[0];
    r.same("c1 period", 6, row.itineraries[0].tail().map(|t| t.period).unwrap_or(0));
    r.same("c1 block", "c1 J2 J1 J2 J0 J2 c1", row.itineraries[0].truncated(7));
    r.same("c2 block", "c2 J0 J1 J0 J2 J0 c2", row.itineraries[1].truncated(7));
    r.details.push(scan_json(&scan));
    let other = nonrigidity_scan(&Field::rational(rat(2, 1)), &nonrigidity_grid(), 24)?;
    r.check("distinct itinerary pairs at λ = 2", ">= 2", other.distinct, other.distinct >= 2);
    Ok(())
}

fn obstruction(r: &mut Reproduction) -> Result<()> {
    let m = BimodalMap::rational(rat(2, 1), rat(-1, 3))?;
    let o = hyperbolic_approx_obstruction(&m, 200)?;
    r.same("λ = 2, b = -1/3", "obstructed", if o.is_obstructed() { "obstructed" } else { "not_determined" });
    r.details.push(obstruction_json(&o));
    let me = BimodalMap::new(lambda_e(), Elem::zero())?;
    let o = hyperbolic_approx_obstruction(&me, 200)?;
    r.same("λ_e, b = 0", "not_determined", if o.is_obstructed() { "obstructed" } else { "not_determined" });
    r.details.push(obstruction_json(&o));
    let m3 = BimodalMap::rational(rat(3, 2), rat(-1, 5))?;
    let o = hyperbolic_approx_obstruction(&m3, 200)?;
    r.same("λ = 3/2, b = -1/5 (c2 free)", "obstructed", if o.is_obstructed() { "obstructed" } else { "not_determined" });
    r.details.push(json!({ "lambda": lambda_json(m3.field()), "result": obstruction_json(&o) }));
    Ok(())
}
