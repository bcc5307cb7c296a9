use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::classify::{classify_turning_point, Classification};
use crate::algebra::{isolate_real_roots, AlgebraicNumber, Elem, Field, IntPoly, RatFunc, Sign};
use crate::bifurcation::{derive_bifurcation_eq, BifurcationEq};
use crate::error::{Error, Result};
use crate::itinerary::{itinerary_of, Itinerary, Symbol};
use crate::pwl::{BimodalMap, Chart, IntervalMap, PlMap};

/// Slopes around the input at which the curve was checked to realize every
/// controlled itinerary. Only the listed samples are certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityWindow {
    pub lo: BigRational,
    pub hi: BigRational,
    pub samples: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub struct Codim1Report {
    pub chart: Chart,
    pub controlled: Vec<Itinerary>,
    pub equations: Vec<BifurcationEq>,
    /// `matrix[j][i-1] = Q^{I_j}_i`.
    pub matrix: Vec<Vec<IntPoly>>,
    pub det: IntPoly,
    pub det_sign: Sign,
    /// Free offsets `b^i = R_i(λ)` along the curve.
    pub curve: Vec<RatFunc>,
    pub field: Field,
    pub offsets: Vec<Elem>,
    pub realized_at_lambda: bool,
    pub window: Option<ValidityWindow>,
}

fn det(m: &[Vec<IntPoly>]) -> IntPoly {
    match m.len() {
        0 => IntPoly::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(IntPoly::zero(), |acc, col| {
            if m[0][col].is_zero() {
                return acc;
            }
            let minor: Vec<Vec<IntPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = &m[0][col] * &det(&minor);
            if col % 2 == 0 { &acc + &term } else { &acc - &term }
        }),
    }
}

fn build_map(chart: Chart, field: &Field, free: Vec<Elem>) -> Result<Box<dyn IntervalMap>> {
    match chart {
        Chart::Bimodal => {
            let b = free.into_iter().next().ok_or(Error::Arity { expected: 1, got: 0 })?;
            Ok(Box::new(BimodalMap::new(field.clone(), b)?))
        }
        Chart::Standard { l, s } => Ok(Box::new(PlMap::standard(l, s, field, free)?.into_result()?)),
    }
}

fn follows(m: &dyn IntervalMap, it: &Itinerary) -> bool {
    let Symbol::C(i0) = it.symbols()[0] else { return false };
    let c = m.turning_points()[i0 - 1].clone();
    match itinerary_of(m, &c, it.len() - 1) {
        Ok(got) => got.truncated(it.len()) == *it,
        Err(_) => false,
    }
}

fn realizes_at(chart: Chart, curve: &[RatFunc], controlled: &[Itinerary], lambda: &BigRational) -> bool {
    let field = Field::rational(lambda.clone());
    let Ok(free) = curve.iter().map(|r| r.eval(lambda).map(|v| Elem::rational(&v))).collect::<Result<Vec<_>>>() else {
        return false;
    };
    match build_map(chart, &field, free) {
        Ok(m) => controlled.iter().all(|it| follows(m.as_ref(), it)),
        Err(_) => false,
    }
}

/// A rational strictly between two distinct algebraic numbers, next to `a`.
fn rational_next_to(a: &AlgebraicNumber, b: &AlgebraicNumber) -> BigRational {
    let below = a.cmp_value(b) == Ordering::Less;
    let mut bits = 16;
    loop {
        let (ra, rb) = (a.refine_bits(bits), b.refine_bits(bits));
        if below && ra.hi() < rb.lo() {
            return ra.hi().clone();
        }
        if !below && ra.lo() > rb.hi() {
            return ra.lo().clone();
        }
        bits *= 2;
    }
}

const WINDOW_TRIES: usize = 40;

fn validity_window(
    chart: Chart,
    det: &IntPoly,
    curve: &[RatFunc],
    controlled: &[Itinerary],
    lambda: &AlgebraicNumber,
) -> Option<ValidityWindow> {
    let top = BigRational::from_integer(BigInt::from(chart.turning_count() as i64 + 1));
    let one = BigRational::from_integer(BigInt::from(1));
    let roots = if det.is_constant() { Vec::new() } else { isolate_real_roots(det, &one, &top) };
    let mut lo = one.clone();
    let mut hi = top.clone();
    for r in &roots {
        match r.cmp_value(lambda) {
            Ordering::Less => lo = lo.max(rational_next_to(r, lambda)),
            Ordering::Greater => hi = hi.min(rational_next_to(r, lambda)),
            Ordering::Equal => return None,
        }
    }
    let inner = lambda.refine_bits(64);
    let (in_lo, in_hi) = (inner.lo().clone(), inner.hi().clone());
    let mut samples = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..WINDOW_TRIES {
        let s = (&lo + &in_lo) / &two;
        if realizes_at(chart, curve, controlled, &s) {
            samples.push(s);
            break;
        }
        lo = s;
    }
    for _ in 0..WINDOW_TRIES {
        let s = (&in_hi + &hi) / &two;
        if realizes_at(chart, curve, controlled, &s) {
            samples.push(s);
            break;
        }
        hi = s;
    }
    if samples.len() < 2 {
        return None;
    }
    samples.sort();
    Some(ValidityWindow { lo, hi, samples })
}

/// Solves the bifurcation equations of `l - 1` controlled turning points for
/// the free offsets as rational functions of λ, and checks the solution at
/// the slope carried by `field`.
pub fn codim1_analyze(chart: Chart, controlled: &[Itinerary], field: &Field) -> Result<Codim1Report> {
    let l = chart.turning_count();
    if controlled.len() + 1 != l {
        return Err(Error::Arity { expected: l - 1, got: controlled.len() });
    }
    let mut starts: Vec<usize> = Vec::new();
    for it in controlled {
        let (i0, _, _) = it.bifurcation_parts()?;
        if starts.contains(&i0) {
            return Err(Error::BadItinerary(format!("two itineraries start at c{i0}")));
        }
        starts.push(i0);
    }
    let equations = controlled.iter().map(|it| derive_bifurcation_eq(chart, it)).collect::<Result<Vec<_>>>()?;
    let matrix: Vec<Vec<IntPoly>> = equations.iter().map(|e| e.q()[1..].to_vec()).collect();
    let rhs: Vec<IntPoly> = equations.iter().map(|e| e.q0().clone()).collect();
    let d = det(&matrix);
    let det_sign = if d.is_zero() { Sign::Zero } else { crate::algebra::sign_at(&d, field.alpha()) };
    if det_sign == Sign::Zero {
        return Err(Error::SingularAtLambda);
    }
    let curve = (0..l - 1)
        .map(|col| {
            let replaced: Vec<Vec<IntPoly>> = matrix
                .iter()
                .zip(&rhs)
                .map(|(row, r)| {
                    let mut row = row.clone();
                    row[col] = r.clone();
                    row
                })
                .collect();
            RatFunc::new(det(&replaced), d.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let offsets = curve.iter().map(|r| field.eval_ratfunc(r)).collect::<Result<Vec<_>>>()?;
    let realized_at_lambda = match build_map(chart, field, offsets.clone()) {
        Ok(m) => controlled.iter().all(|it| follows(m.as_ref(), it)),
        Err(_) => false,
    };
    let window = if realized_at_lambda { validity_window(chart, &d, &curve, controlled, field.alpha()) } else { None };
    Ok(Codim1Report {
        chart,
        controlled: controlled.to_vec(),
        equations,
        matrix,
        det: d,
        det_sign,
        curve,
        field: field.clone(),
        offsets,
        realized_at_lambda,
        window,
    })
}

/// Outcome of the search for a certificate that a map lies off the closure
/// of hyperbolic maps of its entropy.
#[derive(Clone, Debug)]
pub enum Obstruction {
    Obstructed {
        report: Box<Codim1Report>,
        /// The turning point whose orbit never met a turning point.
        free_turning_point: usize,
        horizon: usize,
    },
    NotDetermined {
        reason: String,
        classifications: Vec<Classification>,
    },
}

impl Obstruction {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Obstruction::Obstructed { .. })
    }
}

/// Certifies an ordinary codimension-one hyperbolic map: exactly `l - 1`
/// turning points controlled, none exceptional, a nonsingular system, and
/// the last turning point missing every turning point for `horizon` steps.
pub fn hyperbolic_approx_obstruction<M: IntervalMap + ?Sized>(m: &M, horizon: usize) -> Result<Obstruction> {
    let l = m.turning_count();
    let classes = (1..=l).map(|i| classify_turning_point(m, i, horizon)).collect::<Result<Vec<_>>>()?;
    let not_determined = |reason: String, classes: Vec<Classification>| Ok(Obstruction::NotDetermined { reason, classifications: classes });
    if let Some(i) = classes.iter().position(|c| matches!(c, Classification::Exceptional { .. })) {
        return not_determined(format!("c{} is exceptional", i + 1), classes);
    }
    if let Some(i) = classes.iter().position(|c| matches!(c, Classification::InfeasibleCase3 { .. })) {
        return not_determined(format!("c{} has an inconsistent bifurcation equation", i + 1), classes);
    }
    let free: Vec<usize> = (0..l).filter(|&i| !classes[i].is_controlled()).collect();
    if free.len() != 1 {
        let reason = if free.is_empty() {
            format!("every turning point hits a turning point within {horizon} steps")
        } else {
            format!("{} turning points are not controlled within {horizon} steps", free.len())
        };
        return not_determined(reason, classes);
    }
    let controlled: Vec<Itinerary> = classes.iter().filter_map(|c| c.itinerary().cloned()).collect();
    match codim1_analyze(m.chart(), &controlled, m.field()) {
        Ok(report) => Ok(Obstruction::Obstructed { report: Box::new(report), free_turning_point: free[0] + 1, horizon }),
        Err(Error::SingularAtLambda) => not_determined("the controlled system is singular at this slope".into(), classes),
        Err(e) => Err(e),
    }
}
