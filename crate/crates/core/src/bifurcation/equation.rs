use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::symbolic_orbit;
use crate::algebra::{sign_at, AlgebraicNumber, DyadicPoly, Elem, Field, IntPoly, Sign};
use crate::error::{Error, Result};
use crate::itinerary::Itinerary;
use crate::pwl::Chart;

/// `Σ_{i=1}^{l-1} Q_i(λ) b^i = Q_0(λ)`: the condition for the turning point
/// at the start of a bifurcation itinerary to land on the turning point at
/// its end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BifurcationEq {
    itinerary: Itinerary,
    chart: Chart,
    q: Vec<IntPoly>,
    reduced: bool,
    cleared_pow2: u32,
}

impl BifurcationEq {
    pub fn itinerary(&self) -> &Itinerary {
        &self.itinerary
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    /// `Q_0, …, Q_{l-1}`.
    pub fn q(&self) -> &[IntPoly] {
        &self.q
    }

    pub fn q0(&self) -> &IntPoly {
        &self.q[0]
    }

    /// `Q_1`, the coefficient of `b` in the bimodal chart.
    pub fn q1(&self) -> &IntPoly {
        &self.q[1]
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Power of two multiplied in to make the coefficients integral.
    pub fn cleared_pow2(&self) -> u32 {
        self.cleared_pow2
    }

    /// Common factor of all `Q_i` over ℚ, with positive leading coefficient.
    pub fn common_factor(&self) -> IntPoly {
        let g = self.q.iter().fold(IntPoly::zero(), |g, p| g.gcd(p));
        if g.is_zero() { IntPoly::one() } else { g }
    }

    /// The equation with the common factor and integer content removed.
    pub fn reduced(&self) -> BifurcationEq {
        let g = self.common_factor();
        // g is primitive, so every quotient is integral
        let quots: Vec<IntPoly> = self
            .q
            .iter()
            .map(|p| p.div_exact_rational(&g).expect("gcd divides").clear_denominators().0)
            .collect();
        let content = quots.iter().fold(BigInt::zero(), |c, p| c.gcd(&p.content()));
        let q = if content.is_zero() || content.is_one() {
            quots
        } else {
            quots.iter().map(|p| IntPoly::new(p.coeffs().iter().map(|c| c / &content).collect())).collect()
        };
        BifurcationEq {
            itinerary: self.itinerary.clone(),
            chart: self.chart,
            q: normalize_sign(q),
            reduced: true,
            cleared_pow2: self.cleared_pow2,
        }
    }

    /// Exact check of the equation at `λ` (the field's generator) and the
    /// free offsets `b^1..b^{l-1}`.
    pub fn holds_at(&self, f: &Field, free: &[Elem]) -> bool {
        let lhs = self.q[1..]
            .iter()
            .zip(free)
            .fold(Elem::zero(), |acc, (q, b)| f.add(&acc, &f.mul(&f.from_poly(q), b)));
        f.equal(&lhs, &f.from_poly(&self.q[0]))
    }

    /// Signs of every `Q_i(λ)`.
    pub fn signs_at(&self, lambda: &AlgebraicNumber) -> Vec<Sign> {
        self.q.iter().map(|p| sign_at(p, lambda)).collect()
    }

    /// The single unknown `b = Q_0/Q_1` of a bimodal equation, if `Q_1(λ) ≠ 0`.
    pub fn solve_bimodal(&self, f: &Field) -> Option<Elem> {
        let q1 = f.from_poly(self.q1());
        if f.sign(&q1).is_zero() {
            return None;
        }
        f.div(&f.from_poly(self.q0()), &q1).ok()
    }

    pub fn summary(&self) -> EquationSummary {
        EquationSummary {
            itinerary: self.itinerary.to_string(),
            chart: self.chart,
            q: self.q.iter().map(|p| p.to_strings()).collect(),
            reduced: self.reduced,
            cleared_pow2: self.cleared_pow2,
            text: self.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquationSummary {
    pub itinerary: String,
    pub chart: Chart,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<String>>,
    pub reduced: bool,
    pub cleared_pow2: u32,
    pub text: String,
}

impl fmt::Display for BifurcationEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.q[1..]
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let var = if self.q.len() == 2 { "b".to_string() } else { format!("b{}", i + 1) };
                format!("({p})·{var}")
            })
            .collect();
        write!(f, "{} = {}", terms.join(" + "), self.q[0])
    }
}

/// Makes the first nonzero `Q_i` (`i ≥ 1`, else `Q_0`) have positive
/// leading coefficient.
fn normalize_sign(q: Vec<IntPoly>) -> Vec<IntPoly> {
    let lead = q[1..].iter().chain(std::iter::once(&q[0])).find(|p| !p.is_zero());
    match lead {
        Some(p) if p.leading().is_negative() => q.into_iter().map(|p| -p).collect(),
        _ => q,
    }
}

fn to_int(p: &DyadicPoly) -> IntPoly {
    p.to_int().expect("bifurcation coefficients are integral after clearing")
}

/// Bifurcation equation of `it = {c^{i0}, J^{i_1}, …, J^{i_{n-1}}, c^{i1}}`
/// in the given chart, before any common factor is removed.
pub fn derive_bifurcation_eq(chart: Chart, it: &Itinerary) -> Result<BifurcationEq> {
    let (_, _, i1) = it.bifurcation_parts()?;
    let l = chart.turning_count();
    if !it.fits(l) {
        return Err(Error::BadItinerary(format!("{it} uses symbols beyond l = {l}")));
    }
    let n = it.len() - 1;
    let orbit = symbolic_orbit(chart, &it.truncated(n))?;
    let w = orbit.weights_at(n);
    // 2λ q^n(c^{i0}) - 2λ c^{i1} = Σ K_i b^i
    let s_end = chart.lap_sign(i1);
    let two_lambda = DyadicPoly::from_int(IntPoly::from_i64s(&[0, 2]));
    let k: Vec<IntPoly> = (0..=l)
        .map(|i| {
            let mut ki = &two_lambda * &w[i];
            let delta = (i + 1 == i1) as i64 - (i == i1) as i64;
            if delta != 0 {
                let term = DyadicPoly::from_int(IntPoly::from_i64s(&[(s_end as i64) * delta]));
                ki = &ki - &term;
            }
            to_int(&ki)
        })
        .collect();
    let (b0, bl) = chart.outer_offsets();
    let mut q = Vec::with_capacity(l);
    q.push(-&(&(&k[0] * &b0) + &(&k[l] * &bl)));
    q.extend(k[1..l].iter().cloned());
    Ok(BifurcationEq { itinerary: it.clone(), chart, q: normalize_sign(q), reduced: false, cleared_pow2: 1 })
}

/// Which coefficient laws to apply to a bimodal equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    /// `c^1` returning to `c^1`.
    C1Periodic,
    /// `c^2` returning to a turning point.
    C2Case,
}

impl StructureKind {
    pub fn infer(it: &Itinerary) -> Option<StructureKind> {
        use crate::itinerary::Symbol::C;
        match (it.symbols().first(), it.symbols().last()) {
            (Some(C(1)), Some(C(1))) => Some(StructureKind::C1Periodic),
            (Some(C(2)), Some(C(_))) => Some(StructureKind::C2Case),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub kind: StructureKind,
    pub passed: bool,
    pub first_violation: Option<String>,
    /// Observations that contradict the joint sign claim for `α_0, β_0`
    /// without failing the check.
    pub notes: Vec<String>,
}

/// Checks the coefficient laws of a raw bimodal equation with `n` steps:
/// with `α_i` the coefficients of `Q_0` and `β_i` those of `Q_1`,
///
/// * leading: `-α_n = β_n = 1` (c1 case) or `α_n = β_n = 1` (c2 case);
/// * constant: `α_0, β_0 ∈ {±1}`, equal in the c1 case;
/// * middle: `α_i, β_i ∈ {-2, 0, 2}` and `|α_i| + |β_i| = 2`.
pub fn coefficient_structure_check(eq: &BifurcationEq, kind: StructureKind) -> StructureReport {
    let mut report = StructureReport { kind, passed: true, first_violation: None, notes: Vec::new() };
    let mut fail = |msg: String| {
        if report.first_violation.is_none() {
            report.first_violation = Some(msg);
        }
    };
    if eq.chart() != Chart::Bimodal || eq.is_reduced() {
        fail("the laws apply to raw bimodal equations only".into());
    } else {
        let n = eq.itinerary().len() - 1;
        let (q0, q1) = (eq.q0(), eq.q1());
        let a = |i: usize| q0.coeff(i);
        let b = |i: usize| q1.coeff(i);
        let one = BigInt::one();
        if q0.degree().unwrap_or(0) > n || q1.degree().unwrap_or(0) > n {
            fail(format!("degree exceeds n = {n}"));
        }
        let lead_a = match kind {
            StructureKind::C1Periodic => -&one,
            StructureKind::C2Case => one.clone(),
        };
        if a(n) != lead_a || b(n) != one {
            fail(format!("leading coefficients α_n = {}, β_n = {}", a(n), b(n)));
        }
        if a(0).abs() != one || b(0).abs() != one {
            fail(format!("constant coefficients α_0 = {}, β_0 = {} are not ±1", a(0), b(0)));
        }
        for i in 1..n {
            let (ai, bi) = (a(i), b(i));
            let ok_vals = [&ai, &bi].iter().all(|c| c.is_zero() || c.abs() == BigInt::from(2));
            if !ok_vals || ai.abs() + bi.abs() != BigInt::from(2) {
                fail(format!("middle coefficients α_{i} = {ai}, β_{i} = {bi}"));
                break;
            }
        }
        if kind == StructureKind::C1Periodic && a(0) != b(0) && a(0).abs() == one && b(0).abs() == one {
            report.notes.push(format!("α_0 = {} differs from β_0 = {}", a(0), b(0)));
        }
    }
    report.passed = report.first_violation.is_none();
    report
}

/// `Q¹_0 Q²_1 - Q¹_1 Q²_0` for two bimodal equations; it vanishes at every
/// slope where both can hold for the same `b`.
pub fn eq11_residual(eq1: &BifurcationEq, eq2: &BifurcationEq) -> Result<IntPoly> {
    for e in [eq1, eq2] {
        if e.q().len() != 2 {
            return Err(Error::BadItinerary(format!("{} is not a single-unknown equation", e.itinerary())));
        }
    }
    Ok(&(eq1.q0() * eq2.q1()) - &(eq1.q1() * eq2.q0()))
}
