use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{IntPoly, RatPoly};

/// Polynomial with dyadic-rational coefficients, stored as `numerator / 2^shift`.
///
/// Canonical: when `shift > 0` the numerator's content is odd, so equal
/// values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DyadicPoly {
    numerator: IntPoly,
    shift: u32,
}

impl DyadicPoly {
    pub fn new(numerator: IntPoly, shift: u32) -> Self {
        let mut p = DyadicPoly { numerator, shift };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.shift = 0;
            return;
        }
        let two = BigInt::from(2);
        while self.shift > 0 && self.numerator.coeffs().iter().all(|c| c.is_even()) {
            self.numerator = IntPoly::new(self.numerator.coeffs().iter().map(|c| c / &two).collect());
            self.shift -= 1;
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(IntPoly::one())
    }

    pub fn half() -> Self {
        Self::new(IntPoly::one(), 1)
    }

    pub fn from_int(p: IntPoly) -> Self {
        DyadicPoly { numerator: p, shift: 0 }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numerator.degree()
    }

    /// Multiplies by `λ`.
    pub fn mul_lambda(&self) -> Self {
        DyadicPoly { numerator: self.numerator.shift(1), shift: self.shift }
    }

    /// Multiplies by `2^k`, i.e. clears up to `k` powers of two.
    pub fn mul_pow2(&self, k: u32) -> Self {
        if k >= self.shift {
            let factor = BigInt::one() << (k - self.shift);
            DyadicPoly { numerator: self.numerator.scale(&factor), shift: 0 }
        } else {
            DyadicPoly { numerator: self.numerator.clone(), shift: self.shift - k }
        }
    }

    /// Integer polynomial, if the denominator is 1.
    pub fn to_int(&self) -> Option<IntPoly> {
        (self.shift == 0).then(|| self.numerator.clone())
    }

    pub fn to_rat(&self) -> RatPoly {
        let d = BigRational::from_integer(BigInt::one() << self.shift);
        RatPoly::new(
            self.numerator
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()) / &d)
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.numerator.eval(x) / BigRational::from_integer(BigInt::one() << self.shift)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.numerator.eval_f64(x) / 2f64.powi(self.shift as i32)
    }

    fn aligned(a: &DyadicPoly, b: &DyadicPoly) -> (IntPoly, IntPoly, u32) {
        let k = a.shift.max(b.shift);
        let sa = a.numerator.scale(&(BigInt::one() << (k - a.shift)));
        let sb = b.numerator.scale(&(BigInt::one() << (k - b.shift)));
        (sa, sb, k)
    }
}

impl fmt::Display for DyadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, BigInt::one() << self.shift)
        }
    }
}

impl fmt::Debug for DyadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyadicPoly({self})")
    }
}

impl Add for &DyadicPoly {
    type Output = DyadicPoly;
    fn add(self, rhs: &DyadicPoly) -> DyadicPoly {
        let (a, b, k) = DyadicPoly::aligned(self, rhs);
        DyadicPoly::new(&a + &b, k)
    }
}

impl Sub for &DyadicPoly {
    type Output = DyadicPoly;
    fn sub(self, rhs: &DyadicPoly) -> DyadicPoly {
        let (a, b, k) = DyadicPoly::aligned(self, rhs);
        DyadicPoly::new(&a - &b, k)
    }
}

impl Mul for &DyadicPoly {
    type Output = DyadicPoly;
    fn mul(self, rhs: &DyadicPoly) -> DyadicPoly {
        DyadicPoly::new(&self.numerator * &rhs.numerator, self.shift + rhs.shift)
    }
}

impl Neg for &DyadicPoly {
    type Output = DyadicPoly;
    fn neg(self) -> DyadicPoly {
        DyadicPoly { numerator: -&self.numerator, shift: self.shift }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = DyadicPoly::new(IntPoly::from_i64s(&[2, 4]), 2);
        assert_eq!(a, DyadicPoly::new(IntPoly::from_i64s(&[1, 2]), 1));
        let h = DyadicPoly::half();
        assert_eq!(&h + &h, DyadicPoly::one());
        assert!((&h - &h).is_zero());
        assert_eq!((&h - &h).shift(), 0);
    }

    #[test]
    fn arithmetic() {
        let h = DyadicPoly::half();
        let l = DyadicPoly::from_int(IntPoly::lambda());
        let p = &(&h * &l) - &DyadicPoly::one(); // λ/2 - 1
        assert_eq!(p.mul_pow2(1).to_int().unwrap(), IntPoly::from_i64s(&[-2, 1]));
        assert_eq!(p.mul_lambda().numerator(), &IntPoly::from_i64s(&[0, -2, 1]));
        assert_eq!(p.eval(&BigRational::from_integer(4.into())), BigRational::one());
    }
}
