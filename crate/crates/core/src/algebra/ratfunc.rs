use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::IntPoly;
use crate::error::{Error, Result};

/// Rational function `num / den` in λ, reduced so that the gcd of numerator
/// and denominator is constant and the denominator has positive leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: IntPoly::one() });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.divide_exact(&g)?, den.divide_exact(&g)?)
        };
        // strip the common integer content too
        let c = num_integer::Integer::gcd(&num.content(), &den.content());
        if c > num_bigint::BigInt::from(1) {
            num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d == BigRational::from_integer(0.into()) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
            .expect("nonzero denominators")
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
            .expect("nonzero denominators")
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn mul_poly(&self, p: &IntPoly) -> RatFunc {
        RatFunc::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn reduces_common_factor() {
        // (1 - λ)(λ - 1) / ((λ + 1)(λ - 1)) = (1 - λ) / (λ + 1)
        let num = &IntPoly::from_i64s(&[1, -1]) * &IntPoly::from_i64s(&[-1, 1]);
        let den = IntPoly::from_i64s(&[-1, 0, 1]);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.den(), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(r.num(), &IntPoly::from_i64s(&[1, -1]));
        assert_eq!(r.eval(&rat(2, 1)).unwrap(), rat(-1, 3));
    }

    #[test]
    fn arithmetic_identity() {
        let a = RatFunc::new(IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[0, 1])).unwrap();
        let b = RatFunc::new(IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[1, 1])).unwrap();
        // 1/λ - 1/(λ+1) = 1/(λ(λ+1))
        let d = a.sub(&b);
        assert_eq!(d, RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[0, 1, 1])).unwrap());
        assert!(d.sub(&d).is_zero());
    }
}
