//! Arithmetic in ℚ(λ) for one fixed real algebraic (or rational) slope λ.
//!
//! Elements are quotients of integer polynomials evaluated at λ, kept reduced
//! modulo λ's defining polynomial. All comparisons are exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{sign_at, AlgebraicNumber, DyadicPoly, IntPoly, RatFunc, RatInterval, Sign};
use crate::error::{Error, Result};

/// Value `num(λ) / den(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem {
    num: IntPoly,
    den: IntPoly,
}

impl Elem {
    pub fn rational(r: &BigRational) -> Elem {
        Elem {
            num: IntPoly::constant(r.numer().clone()),
            den: IntPoly::constant(r.denom().clone()),
        }
    }

    pub fn integer(n: i64) -> Elem {
        Elem { num: IntPoly::constant(BigInt::from(n)), den: IntPoly::one() }
    }

    pub fn zero() -> Elem {
        Elem::integer(0)
    }

    pub fn one() -> Elem {
        Elem::integer(1)
    }

    pub fn poly(p: IntPoly) -> Elem {
        Elem { num: p, den: IntPoly::one() }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// The rational value when both parts are constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Elem {
        Elem { num: -&self.num, den: self.den.clone() }
    }

    /// Structural zero test (exact when reduced by a [`Field`]).
    pub fn is_trivially_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct Field {
    alpha: AlgebraicNumber,
    modulus: IntPoly,
}

const WORKING_BITS: u32 = 96;

impl Field {
    pub fn new(alpha: AlgebraicNumber) -> Field {
        let alpha = if alpha.is_rational() { alpha } else { alpha.refine_bits(WORKING_BITS) };
        let modulus = match alpha.as_rational() {
            Some(r) => IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]),
            None => alpha.poly().clone(),
        };
        Field { alpha, modulus }
    }

    pub fn rational(r: BigRational) -> Field {
        Field::new(AlgebraicNumber::from_rational(r))
    }

    pub fn alpha(&self) -> &AlgebraicNumber {
        &self.alpha
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.alpha.as_rational()
    }

    /// λ itself.
    pub fn lambda(&self) -> Elem {
        self.reduce(Elem::poly(IntPoly::lambda()))
    }

    pub fn from_poly(&self, p: &IntPoly) -> Elem {
        self.reduce(Elem::poly(p.clone()))
    }

    pub fn from_rational(&self, r: &BigRational) -> Elem {
        Elem::rational(r)
    }

    pub fn from_dyadic(&self, p: &DyadicPoly) -> Elem {
        let den = IntPoly::constant(BigInt::one() << p.shift());
        self.reduce(Elem { num: p.numerator().clone(), den })
    }

    pub fn eval_ratfunc(&self, f: &RatFunc) -> Result<Elem> {
        let den = self.from_poly(f.den());
        if self.sign(&den).is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.from_poly(f.num());
        self.div(&num, &den)
    }

    /// Reduces modulo the defining polynomial and strips common content.
    pub fn reduce(&self, e: Elem) -> Elem {
        let deg_m = self.modulus.degree().unwrap_or(0);
        let Elem { mut num, mut den } = e;
        let nd = num.degree().unwrap_or(0);
        let dd = den.degree().unwrap_or(0);
        if nd >= deg_m || dd >= deg_m {
            let (rn, cn) = num.rem_scaled(&self.modulus);
            let (rd, cd) = den.rem_scaled(&self.modulus);
            num = rn.scale(&cd);
            den = rd.scale(&cn);
        }
        let g = num.content().gcd(&den.content());
        if !g.is_zero() && !g.is_one() {
            num = IntPoly::new(num.coeffs().iter().map(|c| c / &g).collect());
            den = IntPoly::new(den.coeffs().iter().map(|c| c / &g).collect());
        }
        if num.is_zero() {
            return Elem::zero();
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        Elem { num, den }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        if a.den == b.den {
            return self.reduce(Elem { num: &a.num + &b.num, den: a.den.clone() });
        }
        self.reduce(Elem {
            num: &(&a.num * &b.den) + &(&b.num * &a.den),
            den: &a.den * &b.den,
        })
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &b.neg())
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(Elem { num: &a.num * &b.num, den: &a.den * &b.den })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if self.sign(b).is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(Elem { num: &a.num * &b.den, den: &a.den * &b.num }))
    }

    pub fn scale(&self, a: &Elem, r: &BigRational) -> Elem {
        self.mul(a, &Elem::rational(r))
    }

    pub fn sign(&self, a: &Elem) -> Sign {
        if a.num.is_zero() {
            return Sign::Zero;
        }
        sign_at(&a.num, &self.alpha) * sign_at(&a.den, &self.alpha)
    }

    pub fn cmp(&self, a: &Elem, b: &Elem) -> Ordering {
        self.sign(&self.sub(a, b)).to_ordering()
    }

    pub fn equal(&self, a: &Elem, b: &Elem) -> bool {
        self.cmp(a, b) == Ordering::Equal
    }

    pub fn min(&self, a: &Elem, b: &Elem) -> Elem {
        if self.cmp(a, b) == Ordering::Greater { b.clone() } else { a.clone() }
    }

    pub fn max(&self, a: &Elem, b: &Elem) -> Elem {
        if self.cmp(a, b) == Ordering::Less { b.clone() } else { a.clone() }
    }

    /// Rational enclosure of `a`, computed from λ refined to `2^-bits`.
    pub fn enclosure(&self, a: &Elem, bits: u32) -> RatInterval {
        if let Some(r) = self.alpha.as_rational() {
            let v = a.num.eval(&r) / a.den.eval(&r);
            return RatInterval::point(v);
        }
        let mut alpha = self.alpha.refine_bits(bits);
        loop {
            let iv = alpha.interval();
            if let Some(q) = iv.eval(&a.num).div(&iv.eval(&a.den)) {
                return q;
            }
            alpha = alpha.bisect();
        }
    }

    pub fn to_f64(&self, a: &Elem) -> f64 {
        super::rational_to_f64(&self.enclosure(a, 64).mid())
    }

    /// Exact rational text when `a` is rational, else 6 significant digits.
    pub fn format(&self, a: &Elem) -> String {
        match a.as_rational() {
            Some(r) => super::format_rational(&r),
            None => super::sig_digits(self.to_f64(a), 6),
        }
    }

    /// A rational strictly between `a < b`.
    pub fn rational_between(&self, a: &Elem, b: &Elem) -> BigRational {
        debug_assert_eq!(self.cmp(a, b), Ordering::Less);
        let mut bits = 16;
        loop {
            let ea = self.enclosure(a, bits);
            let eb = self.enclosure(b, bits);
            if ea.hi < eb.lo {
                let m = (&ea.hi + &eb.lo) / BigRational::from_integer(2.into());
                return simplest_between(&ea.hi, &eb.lo).unwrap_or(m);
            }
            bits += 16;
        }
    }
}

/// Shortest dyadic strictly inside `(lo, hi)`, if one is found in a bounded search.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    for k in 0..200u32 {
        let scale = BigInt::one() << k;
        let s = BigRational::from_integer(scale.clone());
        let cand = (lo * &s).floor() + BigRational::one();
        let v = cand / s;
        if &v > lo && &v < hi {
            return Some(v);
        }
    }
    None
}
