//! Real algebraic numbers as (square-free defining polynomial, isolating
//! interval) pairs, and exact sign decisions at them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::sturm::SturmChain;
use super::{DyadicPoly, IntPoly, RatInterval, Sign};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicNumber {
    /// Trusted constructor for callers that already certified the interval.
    pub(crate) fn from_parts(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        AlgebraicNumber { poly, lo, hi }
    }

    /// Certifies that the square-free part of `poly` has exactly one real
    /// root in `[lo, hi]`.
    pub fn new(poly: &IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::InvalidAlgebraic("constant defining polynomial".into()));
        }
        if lo > hi {
            return Err(Error::InvalidAlgebraic("empty interval".into()));
        }
        let sqf = poly.square_free();
        let n = SturmChain::new(&sqf).count_closed(&lo, &hi);
        if n != 1 {
            return Err(Error::InvalidAlgebraic(format!(
                "{n} roots of {sqf} in [{lo}, {hi}]"
            )));
        }
        for end in [&lo, &hi] {
            if sqf.sign_at_rational(end).is_zero() {
                return Ok(Self::from_rational_with_poly(sqf, end.clone()));
            }
        }
        Ok(AlgebraicNumber { poly: sqf, lo, hi })
    }

    fn from_rational_with_poly(poly: IntPoly, r: BigRational) -> Self {
        AlgebraicNumber { poly, lo: r.clone(), hi: r }
    }

    /// The unique root of `poly` inside the open window, if there is exactly one.
    pub fn unique_root_in(poly: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<Self> {
        let roots = super::isolate_real_roots(poly, lo, hi);
        match roots.len() {
            1 => Ok(roots.into_iter().next().unwrap()),
            n => Err(Error::InvalidAlgebraic(format!(
                "{poly} has {n} roots in ({lo}, {hi}), expected one"
            ))),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        let poly = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicNumber { poly, lo: r.clone(), hi: r }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.lo == self.hi {
            return Some(self.lo.clone());
        }
        if self.poly.degree() == Some(1) {
            let c = self.poly.coeffs();
            return Some(BigRational::new(-c[0].clone(), c[1].clone()));
        }
        None
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn to_f64(&self) -> f64 {
        super::rational_to_f64(&self.interval().mid())
    }

    /// One bisection step; the result is nested in `self` and at most half
    /// as wide (or degenerate).
    pub fn bisect(&self) -> AlgebraicNumber {
        if let Some(r) = self.as_rational() {
            return Self::from_rational_with_poly(self.poly.clone(), r);
        }
        let m = self.interval().mid();
        let sm = self.poly.sign_at_rational(&m);
        if sm.is_zero() {
            return Self::from_rational_with_poly(self.poly.clone(), m);
        }
        let slo = self.poly.sign_at_rational(&self.lo);
        if sm == slo {
            AlgebraicNumber { poly: self.poly.clone(), lo: m, hi: self.hi.clone() }
        } else {
            AlgebraicNumber { poly: self.poly.clone(), lo: self.lo.clone(), hi: m }
        }
    }

    /// Bisects until the interval is at most `eps` wide.
    pub fn refine(&self, eps: &BigRational) -> AlgebraicNumber {
        let mut a = self.clone();
        while &a.width() > eps {
            a = a.bisect();
        }
        a
    }

    /// Refines to width at most `2^-bits`.
    pub fn refine_bits(&self, bits: u32) -> AlgebraicNumber {
        let eps = BigRational::new(BigInt::one(), BigInt::one() << bits);
        self.refine(&eps)
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(r);
        }
        let shifted = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        sign_at(&shifted, self).to_ordering()
    }

    /// Total order on values; equal numbers compare `Equal` even when their
    /// defining polynomials differ.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> Ordering {
        if let Some(q) = other.as_rational() {
            return self.cmp_rational(&q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rational(&q).reverse();
        }
        let g = self.poly.gcd(&other.poly);
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if !g.is_constant() {
                let lo = a.lo.clone().min(b.lo.clone());
                let hi = a.hi.clone().max(b.hi.clone());
                let chain = SturmChain::new(&g);
                if chain.count_closed(&a.lo, &a.hi) == 1
                    && chain.count_closed(&b.lo, &b.hi) == 1
                    && chain.count_closed(&lo, &hi) == 1
                {
                    return Ordering::Equal;
                }
            }
            a = a.bisect();
            b = b.bisect();
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in [{}, {}]", self.poly, self.lo, self.hi)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", super::format_rational(&r)),
            None => write!(
                f,
                "root of {} ≈ {}",
                self.poly,
                super::sig_digits(self.refine_bits(40).to_f64(), 6)
            ),
        }
    }
}

/// Exact sign of `p(α)`. Zero is decided algebraically: `p(α) = 0` iff the
/// gcd of `p` with the defining polynomial vanishes inside the isolating
/// interval. Nonzero signs come from interval evaluation on a refined
/// enclosure, never from a numeric threshold.
pub fn sign_at(p: &IntPoly, a: &AlgebraicNumber) -> Sign {
    if p.is_zero() {
        return Sign::Zero;
    }
    if let Some(r) = a.as_rational() {
        return p.sign_at_rational(&r);
    }
    if let Some(s) = a.interval().eval(p).sign() {
        return s;
    }
    let g = p.gcd(&a.poly);
    if !g.is_constant() {
        // roots of g are simple roots of the defining polynomial, and α is
        // the only one of those in [lo, hi]
        let (slo, shi) = (g.sign_at_rational(&a.lo), g.sign_at_rational(&a.hi));
        if slo * shi == Sign::Negative {
            return Sign::Zero;
        }
    }
    let mut b = a.bisect();
    loop {
        if let Some(r) = b.as_rational() {
            return p.sign_at_rational(&r);
        }
        if let Some(s) = b.interval().eval(p).sign() {
            return s;
        }
        b = b.bisect();
    }
}

pub fn sign_at_dyadic(p: &DyadicPoly, a: &AlgebraicNumber) -> Sign {
    sign_at(p.numerator(), a)
}

impl AlgebraicNumber {
    /// True when `p(α) = 0`.
    pub fn is_root_of(&self, p: &IntPoly) -> bool {
        sign_at(p, self).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn lambda_e() -> AlgebraicNumber {
        AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(3, 1))
            .unwrap()
    }

    #[test]
    fn signs_at_lambda_e() {
        let a = lambda_e();
        assert_eq!(sign_at(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &a), Sign::Zero);
        assert_eq!(sign_at(&IntPoly::from_i64s(&[-2, 1]), &a), Sign::Negative);
        assert_eq!(sign_at(&IntPoly::from_i64s(&[-1, 1]), &a), Sign::Positive);
        // a multiple of the defining polynomial
        let m = &IntPoly::from_i64s(&[-1, 0, -1, 0, 1]) * &IntPoly::from_i64s(&[3, 1, 7]);
        assert_eq!(sign_at(&m, &a), Sign::Zero);
        // λ^2 = φ, so λ^2 - φ-ish rational approximations are nonzero
        assert_eq!(sign_at(&IntPoly::from_i64s(&[-1618034, 0, 1000000]), &a), Sign::Negative);
    }

    #[test]
    fn refine_contract() {
        let a = lambda_e();
        let b = a.bisect();
        assert!(b.width() * rat(2, 1) <= a.width());
        assert!(b.lo() >= a.lo() && b.hi() <= a.hi());
        let r = a.refine(&rat(1, 10_000_000_000));
        assert!(r.width() <= rat(1, 10_000_000_000));
        assert!(r.lo() >= a.lo() && r.hi() <= a.hi());
    }

    #[test]
    fn rational_root_is_degenerate() {
        let two = AlgebraicNumber::new(&IntPoly::from_i64s(&[-2, 1]), rat(1, 1), rat(3, 1)).unwrap();
        assert_eq!(two.refine(&rat(1, 100)).as_rational(), Some(rat(2, 1)));
        let two = AlgebraicNumber::new(&IntPoly::from_i64s(&[-4, 0, 1]), rat(2, 1), rat(3, 1)).unwrap();
        assert_eq!(two.lo(), two.hi());
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = IntPoly::from_i64s(&[-6, 11, -6, 1]);
        assert!(AlgebraicNumber::new(&p, rat(0, 1), rat(4, 1)).is_err());
        assert!(AlgebraicNumber::new(&p, rat(3, 2), rat(5, 2)).is_ok());
    }

    #[test]
    fn compares_values() {
        let a = lambda_e();
        let sqrt_phi_other = AlgebraicNumber::unique_root_in(
            &(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]) * &IntPoly::from_i64s(&[-5, 1])),
            &rat(1, 1),
            &rat(2, 1),
        )
        .unwrap();
        assert_eq!(a.cmp_value(&sqrt_phi_other), Ordering::Equal);
        assert_eq!(a.cmp_rational(&rat(127, 100)), Ordering::Greater);
        assert_eq!(a.cmp_rational(&rat(128, 100)), Ordering::Less);
    }
}
