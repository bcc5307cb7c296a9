//! Constant-slope piecewise-linear maps: combinatorial data, feasibility,
//! the bimodal normal form, and exact evaluation of orbits.

mod bimodal;
mod comb;
mod plmap;

pub use bimodal::BimodalMap;
pub use comb::{validate_space, CombData, SpaceReport};
pub use plmap::{boundary_offsets, feasibility, Constraint, Feasibility, PlMap, Strictness, Violation};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::{DyadicPoly, Elem, Field, RatInterval};
use crate::error::{Error, Result};
use crate::itinerary::Symbol;

/// Coordinates in which a single-interval map is written. Both use branches
/// `q(x) = (-1)^i s λ x + b^i` on lap `J^i`; they differ in the domain and
/// in the fixed outer offsets `b^0`, `b^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chart {
    /// Domain `[-a, a]`, `a = 1/(λ-1)`, branches `λx+1`, `-λx+b`, `λx-1`.
    Bimodal,
    /// Domain `[0, 1]` with `l` turning points and left orientation `s`.
    Standard { l: usize, s: i8 },
}

impl Chart {
    pub fn turning_count(self) -> usize {
        match self {
            Chart::Bimodal => 2,
            Chart::Standard { l, .. } => l,
        }
    }

    pub fn orientation(self) -> i8 {
        match self {
            Chart::Bimodal => 1,
            Chart::Standard { s, .. } => s,
        }
    }

    /// Sign of the slope on lap `J^j`.
    pub fn lap_sign(self, j: usize) -> i8 {
        if j.is_multiple_of(2) { self.orientation() } else { -self.orientation() }
    }

    /// The fixed outer offsets `(b^0, b^l)` as polynomials in λ.
    pub fn outer_offsets(self) -> (crate::algebra::IntPoly, crate::algebra::IntPoly) {
        use crate::algebra::IntPoly;
        match self {
            Chart::Bimodal => (IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[-1])),
            Chart::Standard { l, s } => boundary_offsets(l, s),
        }
    }
}

/// What [`evaluate`] does when the point is exactly a turning point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TurningConvention {
    /// Report [`Error::AmbiguousBranch`].
    #[default]
    Reject,
    /// Return the turning value; both adjacent branches agree there.
    TurningValue,
}

/// A single-interval constant-slope map whose comparisons are exact.
pub trait IntervalMap {
    fn field(&self) -> &Field;
    fn chart(&self) -> Chart;
    /// Turning points `c^1 ≤ … ≤ c^l`.
    fn turning_points(&self) -> &[Elem];
    fn domain(&self) -> (&Elem, &Elem);
    /// Value of the branch on lap `J^j` at `x` (the linear formula, without
    /// checking that `x` lies on that lap).
    fn branch(&self, j: usize, x: &Elem) -> Elem;
    /// Offsets `b^0..=b^l` of the branch formulas.
    fn offsets(&self) -> Vec<Elem>;

    fn turning_count(&self) -> usize {
        self.turning_points().len()
    }

    /// `ln λ`, the entropy of every member of the space.
    fn entropy(&self) -> f64 {
        self.field().alpha().to_f64().ln()
    }
}

/// Symbol of the lap or turning point holding `x`.
pub fn locate<M: IntervalMap + ?Sized>(m: &M, x: &Elem) -> Result<Symbol> {
    let f = m.field();
    let (lo, hi) = m.domain();
    if f.cmp(x, lo) == Ordering::Less || f.cmp(x, hi) == Ordering::Greater {
        return Err(Error::OutsideDomain);
    }
    for (i, c) in m.turning_points().iter().enumerate() {
        match f.cmp(x, c) {
            Ordering::Less => return Ok(Symbol::J(i)),
            Ordering::Equal => return Ok(Symbol::C(i + 1)),
            Ordering::Greater => {}
        }
    }
    Ok(Symbol::J(m.turning_count()))
}

/// `q(x)` together with the symbol of `x`.
pub fn step<M: IntervalMap + ?Sized>(m: &M, x: &Elem) -> Result<(Symbol, Elem)> {
    let sym = locate(m, x)?;
    let j = match sym {
        Symbol::J(j) => j,
        Symbol::C(i) => i - 1,
    };
    Ok((sym, m.branch(j, x)))
}

pub fn evaluate<M: IntervalMap + ?Sized>(m: &M, x: &Elem, conv: TurningConvention) -> Result<Elem> {
    let (sym, y) = step(m, x)?;
    match (sym, conv) {
        (Symbol::C(i), TurningConvention::Reject) => Err(Error::AmbiguousBranch(i)),
        _ => Ok(y),
    }
}

/// Exact turning values `q(c^i)`.
pub fn turning_values<M: IntervalMap + ?Sized>(m: &M) -> Vec<Elem> {
    m.turning_points().iter().enumerate().map(|(i, c)| m.branch(i, c)).collect()
}

/// First pair of equal consecutive turning points, 1-based.
pub fn collided_pair<M: IntervalMap + ?Sized>(m: &M) -> Option<(usize, usize)> {
    let f = m.field();
    m.turning_points().windows(2).position(|w| f.equal(&w[0], &w[1])).map(|i| (i + 1, i + 2))
}

/// One point of an orbit: exact value, its symbol, and a rational enclosure.
#[derive(Clone, Debug)]
pub struct OrbitPoint {
    pub value: Elem,
    pub symbol: Symbol,
    pub enclosure: RatInterval,
    /// Value as a linear form in the middle offset, when the orbit was
    /// generated symbolically from a turning point.
    pub form: Option<LinearForm>,
}

const ENCLOSURE_BITS: u32 = 64;

/// `x, q(x), …, q^n(x)`, each with its symbol.
pub fn orbit<M: IntervalMap + ?Sized>(m: &M, x: &Elem, n: usize) -> Result<Vec<OrbitPoint>> {
    let f = m.field();
    let mut out = Vec::with_capacity(n + 1);
    let mut cur = x.clone();
    for _ in 0..=n {
        let (symbol, next) = step(m, &cur)?;
        let enclosure = f.enclosure(&cur, ENCLOSURE_BITS);
        let value = std::mem::replace(&mut cur, next);
        out.push(OrbitPoint { value, symbol, enclosure, form: None });
    }
    Ok(out)
}

/// `α(λ)·b + β(λ)` with dyadic polynomial coefficients, where `b` is the
/// middle offset of the bimodal chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeff: DyadicPoly,
    pub constant: DyadicPoly,
}

impl LinearForm {
    /// `q(c^1) = (b+1)/2` or `q(c^2) = (b-1)/2`.
    pub fn bimodal_turning_value(i: usize) -> LinearForm {
        let half = DyadicPoly::half();
        let constant = if i == 1 { half.clone() } else { -&half };
        LinearForm { coeff: half, constant }
    }

    /// Image under the bimodal branch on lap `J^j`.
    pub fn apply_bimodal(&self, j: usize) -> LinearForm {
        let one = DyadicPoly::one();
        let (a, b) = (self.coeff.mul_lambda(), self.constant.mul_lambda());
        match j {
            0 => LinearForm { coeff: a, constant: &b + &one },
            1 => LinearForm { coeff: &one - &a, constant: -&b },
            _ => LinearForm { coeff: a, constant: &b - &one },
        }
    }

    pub fn eval(&self, f: &Field, b: &Elem) -> Elem {
        f.add(&f.mul(&f.from_dyadic(&self.coeff), b), &f.from_dyadic(&self.constant))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, IntPoly};

    #[test]
    fn linear_form_matches_hand_expansion() {
        // q^2(c1) on J2: λ(b+1)/2 - 1
        let f = LinearForm::bimodal_turning_value(1).apply_bimodal(2);
        assert_eq!(f.coeff, DyadicPoly::new(IntPoly::lambda(), 1));
        assert_eq!(f.constant, DyadicPoly::new(IntPoly::from_i64s(&[-2, 1]), 1));
    }

    #[test]
    fn linear_form_evaluates_like_the_map() {
        let field = Field::rational(rat(5, 2));
        let b = Elem::rational(&rat(1, 7));
        let map = BimodalMap::new(field.clone(), b.clone()).unwrap();
        let mut form = LinearForm::bimodal_turning_value(2);
        let mut x = turning_values(&map)[1].clone();
        for j in [0, 1, 2, 1, 0] {
            assert!(field.equal(&form.eval(&field, &b), &x));
            form = form.apply_bimodal(j);
            x = map.branch(j, &x);
        }
    }
}
