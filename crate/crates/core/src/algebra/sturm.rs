//! Sturm chains and certified real-root isolation by rational bisection.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{AlgebraicNumber, IntPoly, Sign};

/// Sturm chain of a square-free polynomial; every member is rescaled by a
/// positive factor, which leaves sign sequences unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.primitive_part()];
        if p.is_constant() {
            return SturmChain { chain };
        }
        chain.push(p.derivative().primitive_part());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].to_rat().div_rem(&chain[n - 1].to_rat());
            if r.is_zero() {
                break;
            }
            let (ri, _) = r.clear_denominators();
            chain.push((-ri).primitive_part());
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for p in &self.chain {
            let s = p.sign_at_rational(x);
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let c = self.count_half_open(a, b);
        if self.chain[0].sign_at_rational(b).is_zero() {
            c - 1
        } else {
            c
        }
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        let c = self.count_half_open(a, b);
        if self.chain[0].sign_at_rational(a).is_zero() {
            c + 1
        } else {
            c
        }
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Certified isolating intervals for the distinct real roots of `p` strictly
/// inside `(lo, hi)`, sorted by value. Each root's defining polynomial is the
/// square-free part of `p`. Rational roots met during bisection come back as
/// degenerate intervals.
pub fn isolate_real_roots(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Vec<AlgebraicNumber> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    if p.is_constant() || lo >= hi {
        return Vec::new();
    }
    let sqf = p.square_free();
    let sturm = SturmChain::new(&sqf);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), sturm.count_open(lo, hi))];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(tighten(&sqf, &sturm, a, b)),
            _ => {
                let m = (&a + &b) * half();
                let left = sturm.count_open(&a, &m);
                let right = sturm.count_open(&m, &b);
                if sqf.sign_at_rational(&m).is_zero() {
                    out.push(AlgebraicNumber::from_parts(sqf.clone(), m.clone(), m.clone()));
                }
                stack.push((a, m.clone(), left));
                stack.push((m, b, right));
            }
        }
    }
    out.sort_by(|x, y| x.cmp_value(y));
    out
}

/// Shrinks `(a, b)` holding exactly one root until neither endpoint is a root.
fn tighten(sqf: &IntPoly, sturm: &SturmChain, mut a: BigRational, mut b: BigRational) -> AlgebraicNumber {
    loop {
        let a_root = sqf.sign_at_rational(&a).is_zero();
        let b_root = sqf.sign_at_rational(&b).is_zero();
        if !a_root && !b_root {
            return AlgebraicNumber::from_parts(sqf.clone(), a, b);
        }
        let m = (&a + &b) * half();
        if sqf.sign_at_rational(&m).is_zero() {
            return AlgebraicNumber::from_parts(sqf.clone(), m.clone(), m);
        }
        if sturm.count_open(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
}

/// Like [`isolate_real_roots`] but each root carries its multiplicity in `p`
/// and the square-free factor of `p` that vanishes there.
pub fn isolate_real_roots_with_multiplicity(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Vec<(AlgebraicNumber, usize)> {
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        for r in isolate_real_roots(&factor, lo, hi) {
            out.push((r, mult));
        }
    }
    out.sort_by(|x, y| x.0.cmp_value(&y.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x-3)
        let f = p(&[-6, 11, -6, 1]);
        let s = SturmChain::new(&f);
        assert_eq!(s.count_open(&rat(0, 1), &rat(4, 1)), 3);
        assert_eq!(s.count_open(&rat(1, 1), &rat(3, 1)), 1);
        assert_eq!(s.count_half_open(&rat(1, 1), &rat(3, 1)), 2);
        assert_eq!(s.count_closed(&rat(1, 1), &rat(3, 1)), 3);
    }

    #[test]
    fn isolates_golden_quartic() {
        let roots = isolate_real_roots(&p(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(3, 1));
        assert_eq!(roots.len(), 1);
        let r = roots[0].refine(&rat(1, 1_000_000));
        assert!((r.to_f64() - 1.27202).abs() < 1e-5);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1]), &rat(1, 1), &rat(3, 1)).is_empty());
    }

    #[test]
    fn octic_root() {
        let roots = isolate_real_roots(&p(&[-1, 0, 0, 0, -1, 0, 0, 0, 1]), &rat(1, 1), &rat(3, 1));
        assert_eq!(roots.len(), 1);
        assert!((roots[0].refine(&rat(1, 1_000_000)).to_f64() - 1.12784).abs() < 1e-5);
    }

    #[test]
    fn rational_roots_and_window_endpoints() {
        // roots 1, 3/2, 2: window (1, 2) keeps only 3/2 which bisection hits exactly
        let f = &(&p(&[-1, 1]) * &p(&[-3, 2])) * &p(&[-2, 1]);
        let roots = isolate_real_roots(&f, &rat(1, 1), &rat(2, 1));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].as_rational(), Some(rat(3, 2)));
        let all = isolate_real_roots(&f, &rat(0, 1), &rat(4, 1));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn multiplicities() {
        let f = &p(&[-5, 4]).pow(2) * &p(&[-2, 0, 1]);
        let r = isolate_real_roots_with_multiplicity(&f, &rat(1, 1), &rat(3, 1));
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].1, 2);
        assert_eq!(r[1].1, 1);
    }
}
