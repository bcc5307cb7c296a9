//! Dense univariate polynomials in the slope variable λ.
//!
//! [`IntPoly`] is the public currency: integer coefficients, lowest degree
//! first, trailing zeros trimmed. [`RatPoly`] carries rational coefficients
//! and is used wherever Euclidean division over ℚ is needed (gcd, remainders,
//! Sturm chains).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Sign;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `λ`.
    pub fn lambda() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let (n, d) = (x.numer(), x.denom());
        let Some(deg) = self.degree() else {
            return BigRational::zero();
        };
        BigRational::new(self.eval_homogeneous(n, d), num_traits::pow(d.clone(), deg))
    }

    /// `d^deg · p(n/d)`, all in integers.
    fn eval_homogeneous(&self, n: &BigInt, d: &BigInt) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[deg].clone();
        let mut dpow = d.clone();
        for c in self.coeffs[..deg].iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }

    /// Exact sign of `p(x)` at a rational point.
    pub fn sign_at_rational(&self, x: &BigRational) -> Sign {
        // x.denom() is positive, so scaling by d^deg keeps the sign
        Sign::of(&self.eval_homogeneous(x.numer(), x.denom()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `p(-λ)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `λ^deg · p(1/λ)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Exact quotient over ℚ, cleared to integer coefficients and
    /// content-normalized (the sign of the rational quotient is kept).
    pub fn divide_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let q = self.div_exact_rational(den)?;
        Ok(q.clear_denominators().0.primitive_part())
    }

    /// Exact quotient over ℚ without normalization.
    pub fn div_exact_rational(&self, den: &IntPoly) -> Result<RatPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.to_rat().div_rem(&den.to_rat());
        if !r.is_zero() {
            return Err(Error::NotDivisible {
                num: self.to_string(),
                den: den.to_string(),
            });
        }
        Ok(q)
    }

    /// Remainder modulo `m` over ℚ, returned as `(r, c)` with `r = c · (self mod m)`
    /// and `c` a positive integer.
    pub fn rem_scaled(&self, m: &IntPoly) -> (IntPoly, BigInt) {
        if self.degree() < m.degree() {
            return (self.clone(), BigInt::one());
        }
        let (_, r) = self.to_rat().div_rem(&m.to_rat());
        r.clear_denominators()
    }

    /// Gcd over ℚ as a primitive integer polynomial with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        self.to_rat().gcd(&other.to_rat()).clear_denominators().0.normalized()
    }

    /// Square-free part, normalized.
    pub fn square_free(&self) -> IntPoly {
        if self.is_constant() {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.divide_exact(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` pairs with
    /// square-free, pairwise coprime factors of positive degree.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.to_rat();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clear_denominators().0.normalized(), i));
            }
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer coefficient {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().map(|c| c.to_string()).collect(), "λ")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: Vec<String>, var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let show_mag = i == 0 || mag != "1";
        if show_mag {
            f.write_str(mag)?;
        }
        match i {
            0 => {}
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{i}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

/// Polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_rat(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading_rat().recip();
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (RatPoly::zero(), RatPoly::zero());
        };
        if nd < dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_rat().recip())
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(p, c)` with `p = c · self` integral and `c > 0` minimal.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let p = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        );
        (p, l)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().map(|c| c.to_string()).collect(), "λ")
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Mul<&BigRational> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &BigRational) -> RatPoly {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[-1, 0, 1]) + &p(&[1, 0, 1]), p(&[0, 0, 2]));
        assert_eq!(p(&[-1, 0, 1]).eval_int(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(
            p(&[-1, 0, 1]).eval(&BigRational::new(1.into(), 2.into())),
            BigRational::new((-3).into(), 4.into())
        );
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        let f = p(&[-1, 0, -1, 0, 1]);
        let g = p(&[-1, 0, 1]);
        assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
        assert!(matches!(
            p(&[1, 0, 1]).divide_exact(&p(&[-1, 1])),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn gcd_and_square_free() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let sq = &p(&[-1, 1]).pow(3) * &p(&[1, 1]);
        assert_eq!(sq.square_free(), p(&[-1, 0, 1]));
    }

    #[test]
    fn yun_decomposition() {
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[1, 1])) * &p(&[1, 0, 1]).pow(2);
        let mut dec = f.square_free_decomposition();
        dec.sort_by_key(|(_, m)| *m);
        assert_eq!(dec, vec![(p(&[1, 1]), 1), (p(&[1, 0, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, -1, 0, 1]).to_string(), "λ^4 - λ^2 - 1");
        assert_eq!(p(&[1, -2]).to_string(), "-2λ + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
