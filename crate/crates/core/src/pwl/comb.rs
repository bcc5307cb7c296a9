use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Combinatorial signature of a multi-interval multimodal map space: the
/// number of intervals `n`, the interval map `sigma` (1-based values), the
/// turning-point count `l[k]` on each interval and the orientation `s[k]` at
/// each interval's left end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombData {
    #[serde(rename = "N")]
    pub n: usize,
    pub sigma: Vec<usize>,
    pub l: Vec<usize>,
    pub s: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub valid: bool,
    pub essential: bool,
    pub cyclic: bool,
    pub primitive: bool,
    pub total_turning: usize,
}

impl CombData {
    pub fn new(n: usize, sigma: Vec<usize>, l: Vec<usize>, s: Vec<i8>) -> Result<Self> {
        let c = CombData { n, sigma, l, s };
        c.check()?;
        Ok(c)
    }

    /// The bimodal space `{1, id, (2), (+1)}`.
    pub fn bimodal() -> Self {
        CombData { n: 1, sigma: vec![1], l: vec![2], s: vec![1] }
    }

    /// One interval mapped to itself with `l` turning points.
    pub fn single(l: usize, s: i8) -> Self {
        CombData { n: 1, sigma: vec![1], l: vec![l], s: vec![s] }
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::MalformedComb("N must be positive".into()));
        }
        if self.sigma.len() != self.n || self.l.len() != self.n || self.s.len() != self.n {
            return Err(Error::MalformedComb(format!(
                "sigma, l and s must all have length N = {}",
                self.n
            )));
        }
        for (k, &t) in self.sigma.iter().enumerate() {
            if t == 0 || t > self.n {
                return Err(Error::MalformedSigma { from: k + 1, to: t, n: self.n });
            }
        }
        if let Some(bad) = self.s.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::MalformedComb(format!("orientation {bad} is not ±1")));
        }
        Ok(())
    }

    pub fn total_turning(&self) -> usize {
        self.l.iter().sum()
    }

    /// Index of the breakpoint hit by the left end of interval `k` (1-based).
    pub fn sigma_l(&self, k: usize) -> usize {
        let t = self.sigma[k - 1];
        if self.s[k - 1] == 1 { t - 1 } else { t }
    }

    /// Index of the breakpoint hit by the right end of interval `k` (1-based).
    pub fn sigma_r(&self, k: usize) -> usize {
        let t = self.sigma[k - 1];
        if self.right_orientation(k) == 1 { t } else { t - 1 }
    }

    /// Orientation of the last branch on interval `k`: `(-1)^l(k) s(k)`.
    pub fn right_orientation(&self, k: usize) -> i8 {
        if self.l[k - 1].is_multiple_of(2) { self.s[k - 1] } else { -self.s[k - 1] }
    }

    fn step(&self, k: usize) -> usize {
        self.sigma[k - 1]
    }

    fn is_cyclic(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut k = 1;
        for _ in 0..self.n {
            if seen[k] {
                return false;
            }
            seen[k] = true;
            k = self.step(k);
        }
        k == 1
    }

    fn is_primitive(&self) -> bool {
        // some periodic k0 must be reachable from every interval
        (1..=self.n).any(|k0| {
            (1..=self.n).all(|start| {
                let mut k = start;
                (0..self.n).any(|_| {
                    k = self.step(k);
                    k == k0
                })
            })
        })
    }

    fn is_essential(&self) -> bool {
        (1..=self.n).all(|k| self.sigma.contains(&k) || self.l[k - 1] > 0)
    }
}

/// Validates the signature and classifies the space.
pub fn validate_space(comb: &CombData) -> Result<SpaceReport> {
    comb.check()?;
    Ok(SpaceReport {
        valid: true,
        essential: comb.is_essential(),
        cyclic: comb.is_cyclic(),
        primitive: comb.is_primitive(),
        total_turning: comb.total_turning(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bimodal_space() {
        let r = validate_space(&CombData::bimodal()).unwrap();
        assert!(r.valid && r.essential && r.cyclic && r.primitive);
        assert_eq!(r.total_turning, 2);
    }

    #[test]
    fn two_cycle_space() {
        let c = CombData::new(2, vec![2, 1], vec![1, 1], vec![-1, -1]).unwrap();
        let r = validate_space(&c).unwrap();
        assert!(r.valid && r.cyclic && r.essential && r.primitive);
    }

    #[test]
    fn not_essential() {
        let c = CombData::new(2, vec![1, 1], vec![1, 0], vec![1, 1]).unwrap();
        let r = validate_space(&c).unwrap();
        assert!(r.valid);
        assert!(!r.essential);
        assert!(!r.cyclic);
        assert!(r.primitive);
    }

    #[test]
    fn malformed_sigma() {
        let c = CombData { n: 2, sigma: vec![1, 3], l: vec![1, 1], s: vec![1, 1] };
        assert!(matches!(validate_space(&c), Err(Error::MalformedSigma { from: 2, to: 3, n: 2 })));
    }

    #[test]
    fn non_primitive_product() {
        // two fixed intervals: two separate cycles
        let c = CombData::new(2, vec![1, 2], vec![1, 1], vec![1, 1]).unwrap();
        let r = validate_space(&c).unwrap();
        assert!(!r.primitive && !r.cyclic);
    }

    #[test]
    fn boundary_targets() {
        let c = CombData::single(2, 1);
        assert_eq!((c.sigma_l(1), c.sigma_r(1)), (0, 1));
        let c = CombData::single(3, 1);
        assert_eq!((c.sigma_l(1), c.sigma_r(1)), (0, 0));
        let c = CombData::single(2, -1);
        assert_eq!((c.sigma_l(1), c.sigma_r(1)), (1, 0));
    }
}
