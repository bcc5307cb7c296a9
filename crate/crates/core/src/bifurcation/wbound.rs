use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{Elem, Field, Sign};

/// Which weight to follow and which region it must stay in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WBoundMode {
    /// `|w^î_k| > ½` for `k ≥ 2` in a general single-interval chart.
    General { l: usize, s: i8, hat_i: usize },
    /// The middle weight of the bimodal chart stays in `(-∞, 0) ∪ (½, ∞)`
    /// for `k ≥ 2`.
    Bimodal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WBoundFailure {
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WBoundReport {
    pub passed: bool,
    pub checked_up_to: usize,
    pub first_failure: Option<WBoundFailure>,
}

trait Scalar: Clone {
    fn step(&self, negate: bool, bump: bool) -> Self;
    fn cmp_half(&self) -> Ordering;
    fn cmp_neg_half(&self) -> Ordering;
    fn sign(&self) -> Sign;
    fn show(&self) -> String;
}

/// `w = num/den` at a rational slope `n/q`, kept unreduced: `den` is
/// `2 q^{k-1}`, so each step is two integer products and no gcd.
struct RatW<'a> {
    n: &'a BigInt,
    q: &'a BigInt,
    num: BigInt,
    den: BigInt,
}

impl Clone for RatW<'_> {
    fn clone(&self) -> Self {
        RatW { n: self.n, q: self.q, num: self.num.clone(), den: self.den.clone() }
    }
}

impl Scalar for RatW<'_> {
    fn step(&self, negate: bool, bump: bool) -> Self {
        let mut num = self.n * &self.num;
        if negate {
            num = -num;
        }
        if bump {
            num += self.q * &self.den;
        }
        RatW { n: self.n, q: self.q, num, den: self.q * &self.den }
    }
    fn cmp_half(&self) -> Ordering {
        (&self.num << 1usize).cmp(&self.den)
    }
    fn cmp_neg_half(&self) -> Ordering {
        (&self.num << 1usize).cmp(&-&self.den)
    }
    fn sign(&self) -> Sign {
        Sign::of(&self.num)
    }
    fn show(&self) -> String {
        crate::algebra::format_rational(&BigRational::new(self.num.clone(), self.den.clone()))
    }
}

struct FieldW<'a> {
    f: &'a Field,
    lambda: &'a Elem,
    v: Elem,
}

impl Clone for FieldW<'_> {
    fn clone(&self) -> Self {
        FieldW { f: self.f, lambda: self.lambda, v: self.v.clone() }
    }
}

impl Scalar for FieldW<'_> {
    fn step(&self, negate: bool, bump: bool) -> Self {
        let f = self.f;
        let mut v = f.mul(&self.v, self.lambda);
        if negate {
            v = v.neg();
        }
        if bump {
            v = f.add(&v, &Elem::one());
        }
        FieldW { f, lambda: self.lambda, v }
    }
    fn cmp_half(&self) -> Ordering {
        self.f.cmp(&self.v, &Elem::rational(&BigRational::new(1.into(), 2.into())))
    }
    fn cmp_neg_half(&self) -> Ordering {
        self.f.cmp(&self.v, &Elem::rational(&BigRational::new((-1).into(), 2.into())))
    }
    fn sign(&self) -> Sign {
        self.f.sign(&self.v)
    }
    fn show(&self) -> String {
        self.f.format(&self.v)
    }
}

fn run<S: Scalar>(start: S, symbols: &[usize], k_max: usize, mode: WBoundMode) -> WBoundReport {
    let (s, tracked) = match mode {
        WBoundMode::General { s, hat_i, .. } => (s, hat_i),
        WBoundMode::Bimodal => (1, 1),
    };
    let mut w = start;
    let mut report = WBoundReport { passed: true, checked_up_to: 1, first_failure: None };
    for k in 2..=k_max {
        let j = symbols[(k - 2) % symbols.len()];
        let negate = (j % 2 == 1) != (s < 0);
        w = w.step(negate, j == tracked);
        let ok = match mode {
            WBoundMode::General { .. } => w.cmp_half() == Ordering::Greater || w.cmp_neg_half() == Ordering::Less,
            WBoundMode::Bimodal => w.sign() == Sign::Negative || w.cmp_half() == Ordering::Greater,
        };
        if !ok {
            report.passed = false;
            report.first_failure = Some(WBoundFailure { k, value: w.show() });
            return report;
        }
        report.checked_up_to = k;
    }
    report
}

/// Follows `w_{k+1} = (-1)^{i_k} s λ w_k + δ_{i_k}` from `w_1 = ½` along
/// the lap indices `symbols` (repeated cyclically) and checks the invariant
/// region of `mode` for `2 ≤ k ≤ k_max`.
pub fn w_bound_check(symbols: &[usize], field: &Field, k_max: usize, mode: WBoundMode) -> WBoundReport {
    if symbols.is_empty() || k_max < 2 {
        return WBoundReport { passed: true, checked_up_to: 1, first_failure: None };
    }
    let half = BigRational::new(1.into(), 2.into());
    match field.as_rational() {
        Some(lambda) => {
            let w = RatW { n: lambda.numer(), q: lambda.denom(), num: BigInt::one(), den: BigInt::from(2) };
            run(w, symbols, k_max, mode)
        }
        None => {
            let lambda = field.lambda();
            run(FieldW { f: field, lambda: &lambda, v: Elem::rational(&half) }, symbols, k_max, mode)
        }
    }
}
