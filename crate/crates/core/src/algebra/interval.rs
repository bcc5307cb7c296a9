use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPoly, Sign};

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `Some(sign)` when the whole interval is strictly on one side of zero
    /// or is exactly `{0}`.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn add_scalar(&self, c: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    /// Quotient; `None` when the divisor contains zero.
    pub fn div(&self, o: &RatInterval) -> Option<RatInterval> {
        if o.contains(&BigRational::zero()) {
            return None;
        }
        let inv = RatInterval { lo: o.hi.recip(), hi: o.lo.recip() };
        Some(self.mul(&inv))
    }

    /// Horner enclosure of `p` over this interval.
    pub fn eval(&self, p: &IntPoly) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scalar(&BigRational::from_integer(c.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn enclosure_contains_value() {
        let p = IntPoly::from_i64s(&[-1, 0, -1, 0, 1]);
        let iv = RatInterval::new(rat(127, 100), rat(128, 100));
        let e = iv.eval(&p);
        for x in [rat(127, 100), rat(1275, 1000), rat(128, 100)] {
            assert!(e.contains(&p.eval(&x)));
        }
    }
}
