use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{Itinerary, Symbol};
use crate::algebra::{AlgebraicNumber, DyadicPoly, Elem, Field, IntPoly, RatInterval, Sign};
use crate::error::{Error, Result};
use crate::pwl::{BimodalMap, LinearForm};

/// The set of middle offsets `b` at a fixed slope for which a turning point
/// of the bimodal map follows a prescribed itinerary. Each endpoint records
/// whether it belongs to the set.
#[derive(Clone, Debug)]
pub struct RealizationInterval {
    field: Field,
    lo: Elem,
    hi: Elem,
    lo_attained: bool,
    hi_attained: bool,
}

impl RealizationInterval {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lambda(&self) -> &AlgebraicNumber {
        self.field.alpha()
    }

    pub fn lo(&self) -> &Elem {
        &self.lo
    }

    pub fn hi(&self) -> &Elem {
        &self.hi
    }

    pub fn lo_attained(&self) -> bool {
        self.lo_attained
    }

    pub fn hi_attained(&self) -> bool {
        self.hi_attained
    }

    pub fn is_point(&self) -> bool {
        self.field.equal(&self.lo, &self.hi)
    }

    pub fn contains(&self, b: &Elem) -> bool {
        let f = &self.field;
        let above = match f.cmp(b, &self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_attained,
            Ordering::Less => false,
        };
        let below = match f.cmp(b, &self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_attained,
            Ordering::Greater => false,
        };
        above && below
    }

    /// A rational point strictly inside, or the single point when degenerate.
    pub fn sample(&self) -> Elem {
        if self.is_point() {
            return self.lo.clone();
        }
        Elem::rational(&self.field.rational_between(&self.lo, &self.hi))
    }

    pub fn lo_f64(&self) -> f64 {
        self.field.to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        self.field.to_f64(&self.hi)
    }

    pub fn enclosures(&self, bits: u32) -> (RatInterval, RatInterval) {
        (self.field.enclosure(&self.lo, bits), self.field.enclosure(&self.hi, bits))
    }

    pub fn summary(&self) -> IntervalSummary {
        let (elo, ehi) = self.enclosures(64);
        IntervalSummary {
            lo: crate::algebra::sig_digits(self.lo_f64(), 6),
            hi: crate::algebra::sig_digits(self.hi_f64(), 6),
            lo_attained: self.lo_attained,
            hi_attained: self.hi_attained,
            lo_enclosure: [elo.lo.to_string(), elo.hi.to_string()],
            hi_enclosure: [ehi.lo.to_string(), ehi.hi.to_string()],
        }
    }
}

/// Printable form of a realization interval.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalSummary {
    pub lo: String,
    pub hi: String,
    pub lo_attained: bool,
    pub hi_attained: bool,
    pub lo_enclosure: [String; 2],
    pub hi_enclosure: [String; 2],
}

impl fmt::Display for RealizationInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_attained { '[' } else { '(' };
        let close = if self.hi_attained { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.field.format(&self.lo), self.field.format(&self.hi))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Positive,
    NonNegative,
    Zero,
}

struct Solver<'a> {
    f: &'a Field,
    lo: Option<(Elem, bool)>,
    hi: Option<(Elem, bool)>,
    point: Option<Elem>,
    empty: bool,
}

impl<'a> Solver<'a> {
    fn new(f: &'a Field) -> Self {
        Solver { f, lo: None, hi: None, point: None, empty: false }
    }

    fn tighten(&mut self, lower: bool, v: Elem, attained: bool) {
        let f = self.f;
        let slot = if lower { &mut self.lo } else { &mut self.hi };
        let replace = match slot {
            None => true,
            Some((cur, cur_att)) => match f.cmp(&v, cur) {
                Ordering::Equal => {
                    *cur_att = *cur_att && attained;
                    false
                }
                Ordering::Greater => lower,
                Ordering::Less => !lower,
            },
        };
        if replace {
            *slot = Some((v, attained));
        }
    }

    /// Imposes `g·b + h  rel  0`.
    fn constrain(&mut self, g: &Elem, h: &Elem, rel: Rel) {
        if self.empty {
            return;
        }
        let f = self.f;
        match f.sign(g) {
            Sign::Zero => {
                let sh = f.sign(h);
                let ok = match rel {
                    Rel::Positive => sh == Sign::Positive,
                    Rel::NonNegative => sh != Sign::Negative,
                    Rel::Zero => sh == Sign::Zero,
                };
                if !ok {
                    self.empty = true;
                }
            }
            sg => {
                let root = f.div(&h.neg(), g).expect("g nonzero");
                match rel {
                    Rel::Zero => match &self.point {
                        Some(p) if !f.equal(p, &root) => self.empty = true,
                        _ => self.point = Some(root),
                    },
                    _ => self.tighten(sg == Sign::Positive, root, rel == Rel::NonNegative),
                }
            }
        }
    }

    fn finish(self) -> Option<RealizationInterval> {
        if self.empty {
            return None;
        }
        let f = self.f;
        let (lo, lo_att) = self.lo.expect("offset range bounds b below");
        let (hi, hi_att) = self.hi.expect("offset range bounds b above");
        let iv = RealizationInterval { field: f.clone(), lo, hi, lo_attained: lo_att, hi_attained: hi_att };
        if let Some(p) = self.point {
            if !iv.contains(&p) {
                return None;
            }
            return Some(RealizationInterval {
                field: f.clone(),
                lo: p.clone(),
                hi: p,
                lo_attained: true,
                hi_attained: true,
            });
        }
        match f.cmp(&iv.lo, &iv.hi) {
            Ordering::Less => Some(iv),
            Ordering::Equal if lo_att && hi_att => Some(iv),
            _ => None,
        }
    }
}

/// All `b` for which the bimodal map at slope `λ` sends the turning point
/// `it[0]` along `it` (for the listed symbols). Each constraint is linear in
/// `b`, so the answer is an interval; `None` when no `b` works.
pub fn realization_interval(it: &Itinerary, field: &Field) -> Result<Option<RealizationInterval>> {
    let syms = it.symbols();
    let Some(&Symbol::C(i0)) = syms.first() else {
        return Err(Error::BadItinerary(format!("{it} must start at a turning point")));
    };
    if !it.fits(2) {
        return Err(Error::BadItinerary(format!("{it} is not a bimodal itinerary")));
    }
    if field.sign(&field.sub(&field.lambda(), &Elem::one())) != Sign::Positive {
        return Err(Error::Infeasible(vec![format!("λ = {} must exceed 1", field.alpha())]));
    }
    let f = field;
    let mut solver = Solver::new(f);
    let bound = BimodalMap::b_bound(f)?;
    solver.constrain(&Elem::one(), &bound, Rel::NonNegative);
    solver.constrain(&Elem::integer(-1), &bound, Rel::NonNegative);

    let two_lambda = DyadicPoly::from_int(IntPoly::from_i64s(&[0, 2]));
    let mut form = LinearForm::bimodal_turning_value(i0);
    for sym in &syms[1..] {
        // 2λ(x - c^1) and 2λ(x - c^2) as g·b + h
        let g = f.from_dyadic(&(&(&two_lambda * &form.coeff) - &DyadicPoly::one()));
        let h = f.from_dyadic(&(&two_lambda * &form.constant));
        let h1 = f.add(&h, &Elem::one());
        let h2 = f.sub(&h, &Elem::one());
        let (gn, h1n, h2n) = (g.neg(), h1.neg(), h2.neg());
        match *sym {
            Symbol::J(0) => solver.constrain(&gn, &h1n, Rel::Positive),
            Symbol::J(1) => {
                solver.constrain(&g, &h1, Rel::Positive);
                solver.constrain(&gn, &h2n, Rel::Positive);
            }
            Symbol::J(_) => solver.constrain(&g, &h2, Rel::Positive),
            Symbol::C(1) => solver.constrain(&g, &h1, Rel::Zero),
            Symbol::C(_) => solver.constrain(&g, &h2, Rel::Zero),
        }
        if solver.empty {
            return Ok(None);
        }
        let j = match *sym {
            Symbol::J(j) => j,
            Symbol::C(i) => i - 1,
        };
        form = form.apply_bimodal(j);
    }
    Ok(solver.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::itinerary::itinerary_of;

    fn root_field(coeffs: &[i64]) -> Field {
        Field::new(AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(coeffs), &rat(1, 1), &rat(2, 1)).unwrap())
    }

    fn it(s: &str) -> Itinerary {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_e_interval() {
        let f = root_field(&[-1, 0, -1, 0, 1]);
        let r = realization_interval(&it("c1 J2 J1 J2 J0 J2 c1"), &f).unwrap().unwrap();
        assert!((r.lo_f64() + 0.119726).abs() < 1e-6, "{}", r.lo_f64());
        assert!((r.hi_f64() - 0.346014).abs() < 1e-6, "{}", r.hi_f64());
        assert!(!r.lo_attained() && !r.hi_attained());
        let m = BimodalMap::new(f.clone(), r.sample()).unwrap();
        assert_eq!(itinerary_of(&m, m.c1(), 6).unwrap().truncated(7), it("c1 J2 J1 J2 J0 J2 c1"));
    }

    #[test]
    fn period_two_point_at_two() {
        let f = Field::rational(rat(2, 1));
        let r = realization_interval(&it("c1 J2 c1"), &f).unwrap().unwrap();
        assert!(r.is_point());
        assert_eq!(r.lo().as_rational(), Some(rat(-1, 3)));
        assert_eq!(r.to_string(), "[-1/3, -1/3]");
    }

    #[test]
    fn octic_interval() {
        let f = root_field(&[-1, 0, 0, 0, -1, 0, 0, 0, 1]);
        let r = realization_interval(&it("c1 J2 J0 J1 J0 J2 J0 J1 J1 J2 J0 J1 c1"), &f).unwrap().unwrap();
        assert!((r.lo_f64() + 0.808065).abs() < 1e-6, "{}", r.lo_f64());
        assert!((r.hi_f64() + 0.720696).abs() < 1e-6, "{}", r.hi_f64());
    }

    #[test]
    fn mirror_negates() {
        let f = root_field(&[-1, 0, -1, 0, 1]);
        let a = realization_interval(&it("c1 J2 J1 J2 J0 J2 c1"), &f).unwrap().unwrap();
        let b = realization_interval(&it("c2 J0 J1 J0 J2 J0 c2"), &f).unwrap().unwrap();
        assert!(f.equal(a.lo(), &b.hi().neg()));
        assert!(f.equal(a.hi(), &b.lo().neg()));
    }

    #[test]
    fn unrealizable_is_none() {
        // c1 never maps straight back to c1 through J0 at slope 2
        let f = Field::rational(rat(2, 1));
        assert!(realization_interval(&it("c1 J0 c1"), &f).unwrap().is_none());
        assert!(realization_interval(&it("J1 c1"), &f).is_err());
    }

    #[test]
    fn prefix_interval_contains_full() {
        let f = Field::rational(rat(3, 2));
        let full = realization_interval(&it("c1 J2 J1 J2 J0"), &f).unwrap();
        let pre = realization_interval(&it("c1 J2 J1"), &f).unwrap().unwrap();
        if let Some(full) = full {
            assert!(f.cmp(pre.lo(), full.lo()).is_le());
            assert!(f.cmp(pre.hi(), full.hi()).is_ge());
        }
    }
}
