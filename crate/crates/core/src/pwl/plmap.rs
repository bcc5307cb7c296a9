use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Chart, CombData, IntervalMap, TurningConvention};
use crate::algebra::{Elem, Field, IntPoly, Sign};
use crate::error::{Error, Result};
use crate::itinerary::Symbol;

/// Which version of the ordering constraints to impose.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Plain `≤` between consecutive breakpoints and turning points;
    /// colliding turning points are allowed.
    #[default]
    NonStrict,
    /// Consecutive points must be at least `ε` apart.
    Separated(BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Constraint {
    Slope,
    Normalization,
    /// Consecutive points of the chain `a_0 ≤ c_1^1 ≤ … ≤ a_N`; `position`
    /// counts from 1 along the chain.
    Ordering { position: usize },
    TurningValue { k: usize, i: usize },
    LeftBoundary { k: usize },
    RightBoundary { k: usize },
    OffsetRange,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Slope => write!(f, "slope λ > 1"),
            Constraint::Normalization => write!(f, "normalization a_0 = 0, a_N = 1"),
            Constraint::Ordering { position } => write!(f, "turning-point ordering at chain position {position}"),
            Constraint::TurningValue { k, i } => write!(f, "turning value q(c_{k}^{i}) in I_sigma({k})"),
            Constraint::LeftBoundary { k } => write!(f, "left boundary value q(a_{}^+)", k - 1),
            Constraint::RightBoundary { k } => write!(f, "right boundary value q(a_{k}^-)"),
            Constraint::OffsetRange => write!(f, "offset range |b| <= (3-λ)/(λ-1)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub constraint: Constraint,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.constraint, self.detail)
    }
}

#[derive(Clone, Debug)]
pub enum Feasibility {
    Feasible(PlMap),
    Infeasible(Vec<Violation>),
}

impl Feasibility {
    pub fn into_result(self) -> Result<PlMap> {
        match self {
            Feasibility::Feasible(m) => Ok(m),
            Feasibility::Infeasible(v) => Err(Error::Infeasible(v.iter().map(|v| v.to_string()).collect())),
        }
    }
}

/// A member of the model space: branches `(-1)^i s(k) λ x + b_k^i` on the
/// laps of `I_k = [a_{k-1}, a_k]`.
#[derive(Clone, Debug)]
pub struct PlMap {
    comb: CombData,
    field: Field,
    breakpoints: Vec<Elem>,
    offsets: Vec<Vec<Elem>>,
    turning: Vec<Vec<Elem>>,
    collided: Vec<(usize, usize)>,
}

/// `(b^0, b^l)` forced by the boundary conditions on a single interval
/// `[0, 1]` mapped onto itself.
pub fn boundary_offsets(l: usize, s: i8) -> (IntPoly, IntPoly) {
    let b0 = if s == 1 { IntPoly::zero() } else { IntPoly::one() };
    let right = if l.is_multiple_of(2) { s } else { -s };
    let bl = if right == 1 { IntPoly::from_i64s(&[1, -1]) } else { IntPoly::lambda() };
    (b0, bl)
}

fn turning_point(f: &Field, sign: i8, prev: &Elem, next: &Elem) -> Elem {
    // c = (-1)^i s (b^{i-1} - b^i) / 2λ
    let d = f.sub(prev, next);
    let d = if sign == 1 { d } else { d.neg() };
    f.div(&d, &f.mul(&Elem::integer(2), &f.lambda())).expect("λ > 0")
}

/// Checks every constraint of the space and builds the map when all hold.
///
/// Malformed input (wrong vector lengths) is an error; violated
/// inequalities are collected in full.
pub fn feasibility(
    comb: &CombData,
    field: &Field,
    breakpoints: Vec<Elem>,
    offsets: Vec<Vec<Elem>>,
    strictness: &Strictness,
) -> Result<Feasibility> {
    super::validate_space(comb)?;
    let n = comb.n;
    if breakpoints.len() != n + 1 {
        return Err(Error::MalformedComb(format!(
            "expected {} breakpoints, got {}",
            n + 1,
            breakpoints.len()
        )));
    }
    if offsets.len() != n {
        return Err(Error::MalformedComb(format!("expected {n} offset lists, got {}", offsets.len())));
    }
    for (k, o) in offsets.iter().enumerate() {
        if o.len() != comb.l[k] + 1 {
            return Err(Error::MalformedComb(format!(
                "interval {} needs {} offsets, got {}",
                k + 1,
                comb.l[k] + 1,
                o.len()
            )));
        }
    }

    let f = field;
    let mut out = Vec::new();
    let fmt = |e: &Elem| f.format(e);
    if f.sign(&f.sub(&f.lambda(), &Elem::one())) != Sign::Positive {
        out.push(Violation { constraint: Constraint::Slope, detail: format!("λ = {}", f.alpha()) });
        return Ok(Feasibility::Infeasible(out));
    }
    if !breakpoints[0].is_trivially_zero() || !f.equal(&breakpoints[n], &Elem::one()) {
        out.push(Violation {
            constraint: Constraint::Normalization,
            detail: format!("a_0 = {}, a_N = {}", fmt(&breakpoints[0]), fmt(&breakpoints[n])),
        });
    }

    let turning: Vec<Vec<Elem>> = (0..n)
        .map(|k| {
            (1..=comb.l[k])
                .map(|i| {
                    let sign = if i % 2 == 0 { comb.s[k] } else { -comb.s[k] };
                    turning_point(f, sign, &offsets[k][i - 1], &offsets[k][i])
                })
                .collect()
        })
        .collect();

    let mut chain: Vec<(&Elem, String)> = vec![(&breakpoints[0], "a_0".into())];
    for k in 0..n {
        for (i, c) in turning[k].iter().enumerate() {
            chain.push((c, format!("c_{}^{}", k + 1, i + 1)));
        }
        chain.push((&breakpoints[k + 1], format!("a_{}", k + 1)));
    }
    let gap = match strictness {
        Strictness::NonStrict => Elem::zero(),
        Strictness::Separated(eps) => Elem::rational(eps),
    };
    for (pos, w) in chain.windows(2).enumerate() {
        let diff = f.sub(w[1].0, w[0].0);
        if f.cmp(&diff, &gap) == Ordering::Less {
            let detail = match strictness {
                Strictness::NonStrict => format!("{} = {} > {} = {}", w[0].1, fmt(w[0].0), w[1].1, fmt(w[1].0)),
                Strictness::Separated(eps) => format!(
                    "{} - {} = {} < ε = {}",
                    w[1].1,
                    w[0].1,
                    fmt(&diff),
                    crate::algebra::format_rational(eps)
                ),
            };
            out.push(Violation { constraint: Constraint::Ordering { position: pos + 1 }, detail });
        }
    }

    let half = Elem::rational(&crate::algebra::rat(1, 2));
    for k in 0..n {
        let target = comb.sigma[k];
        let (lo, hi) = (&breakpoints[target - 1], &breakpoints[target]);
        for i in 1..=comb.l[k] {
            let v = f.mul(&half, &f.add(&offsets[k][i - 1], &offsets[k][i]));
            if f.cmp(&v, lo) == Ordering::Less || f.cmp(&v, hi) == Ordering::Greater {
                out.push(Violation {
                    constraint: Constraint::TurningValue { k: k + 1, i },
                    detail: format!("{} not in [{}, {}]", fmt(&v), fmt(lo), fmt(hi)),
                });
            }
        }
        let lambda = f.lambda();
        let left = f.add(&f.mul(&f.mul(&Elem::integer(comb.s[k] as i64), &lambda), &breakpoints[k]), &offsets[k][0]);
        let want = &breakpoints[comb.sigma_l(k + 1)];
        if !f.equal(&left, want) {
            out.push(Violation {
                constraint: Constraint::LeftBoundary { k: k + 1 },
                detail: format!("{} != a_{} = {}", fmt(&left), comb.sigma_l(k + 1), fmt(want)),
            });
        }
        let rs = Elem::integer(comb.right_orientation(k + 1) as i64);
        let right = f.add(&f.mul(&f.mul(&rs, &lambda), &breakpoints[k + 1]), &offsets[k][comb.l[k]]);
        let want = &breakpoints[comb.sigma_r(k + 1)];
        if !f.equal(&right, want) {
            out.push(Violation {
                constraint: Constraint::RightBoundary { k: k + 1 },
                detail: format!("{} != a_{} = {}", fmt(&right), comb.sigma_r(k + 1), fmt(want)),
            });
        }
    }

    if !out.is_empty() {
        return Ok(Feasibility::Infeasible(out));
    }
    let mut collided = Vec::new();
    for (k, cs) in turning.iter().enumerate() {
        for i in 1..cs.len() {
            if f.equal(&cs[i - 1], &cs[i]) {
                collided.push((k + 1, i));
            }
        }
    }
    Ok(Feasibility::Feasible(PlMap {
        comb: comb.clone(),
        field: field.clone(),
        breakpoints,
        offsets,
        turning,
        collided,
    }))
}

impl PlMap {
    /// Single interval `[0, 1]` with `l` turning points; `interior` holds
    /// `b^1..b^{l-1}` and the outer offsets come from the boundary conditions.
    pub fn standard(l: usize, s: i8, field: &Field, interior: Vec<Elem>) -> Result<Feasibility> {
        if interior.len() + 1 != l {
            return Err(Error::MalformedComb(format!(
                "{l} turning points need {} free offsets, got {}",
                l.saturating_sub(1),
                interior.len()
            )));
        }
        let (b0, bl) = boundary_offsets(l, s);
        let mut offs = vec![field.from_poly(&b0)];
        offs.extend(interior);
        offs.push(field.from_poly(&bl));
        feasibility(&CombData::single(l, s), field, vec![Elem::zero(), Elem::one()], vec![offs], &Strictness::NonStrict)
    }

    pub fn comb(&self) -> &CombData {
        &self.comb
    }

    pub fn breakpoints(&self) -> &[Elem] {
        &self.breakpoints
    }

    /// Offsets `b_k^0..b_k^{l(k)}` of interval `k` (1-based).
    pub fn offsets_on(&self, k: usize) -> &[Elem] {
        &self.offsets[k - 1]
    }

    pub fn turning_points_on(&self, k: usize) -> &[Elem] {
        &self.turning[k - 1]
    }

    pub fn turning_values_on(&self, k: usize) -> Vec<Elem> {
        let f = &self.field;
        let half = Elem::rational(&crate::algebra::rat(1, 2));
        self.offsets[k - 1].windows(2).map(|w| f.mul(&half, &f.add(&w[0], &w[1]))).collect()
    }

    /// Pairs `(k, i)` with `c_k^i = c_k^{i+1}`.
    pub fn collided(&self) -> &[(usize, usize)] {
        &self.collided
    }

    pub fn is_collided(&self) -> bool {
        !self.collided.is_empty()
    }

    /// Interval index and symbol of `x`. A shared breakpoint `a_k` is read
    /// as the right end of `I_k`.
    pub fn locate(&self, x: &Elem) -> Result<(usize, Symbol)> {
        let f = &self.field;
        if f.cmp(x, &self.breakpoints[0]).is_lt() || f.cmp(x, &self.breakpoints[self.comb.n]).is_gt() {
            return Err(Error::OutsideDomain);
        }
        let k = (1..=self.comb.n).find(|&k| f.cmp(x, &self.breakpoints[k]).is_le()).expect("inside [0, 1]");
        for (i, c) in self.turning[k - 1].iter().enumerate() {
            match f.cmp(x, c) {
                Ordering::Less => return Ok((k, Symbol::J(i))),
                Ordering::Equal => return Ok((k, Symbol::C(i + 1))),
                Ordering::Greater => {}
            }
        }
        Ok((k, Symbol::J(self.comb.l[k - 1])))
    }

    pub fn eval(&self, x: &Elem, conv: TurningConvention) -> Result<Elem> {
        let (k, sym) = self.locate(x)?;
        let j = match (sym, conv) {
            (Symbol::C(i), TurningConvention::Reject) => return Err(Error::AmbiguousBranch(i)),
            (Symbol::C(i), TurningConvention::TurningValue) => i - 1,
            (Symbol::J(j), _) => j,
        };
        Ok(self.branch_on(k, j, x))
    }

    fn branch_on(&self, k: usize, j: usize, x: &Elem) -> Elem {
        let f = &self.field;
        let s = if j.is_multiple_of(2) { self.comb.s[k - 1] } else { -self.comb.s[k - 1] };
        let lx = f.mul(&f.lambda(), x);
        let lx = if s == 1 { lx } else { lx.neg() };
        f.add(&lx, &self.offsets[k - 1][j])
    }

    fn single(&self) -> bool {
        self.comb.n == 1 && self.comb.sigma[0] == 1
    }

    /// The map as an [`IntervalMap`]; requires a single interval mapped to
    /// itself.
    pub fn as_interval_map(&self) -> Result<&Self> {
        if self.single() { Ok(self) } else { Err(Error::NotSingleInterval) }
    }
}

impl IntervalMap for PlMap {
    fn field(&self) -> &Field {
        &self.field
    }

    fn chart(&self) -> Chart {
        Chart::Standard { l: self.comb.l[0], s: self.comb.s[0] }
    }

    fn turning_points(&self) -> &[Elem] {
        &self.turning[0]
    }

    fn domain(&self) -> (&Elem, &Elem) {
        (&self.breakpoints[0], &self.breakpoints[1])
    }

    fn branch(&self, j: usize, x: &Elem) -> Elem {
        self.branch_on(1, j, x)
    }

    fn offsets(&self) -> Vec<Elem> {
        self.offsets[0].clone()
    }
}
