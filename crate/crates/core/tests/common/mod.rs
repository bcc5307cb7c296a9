#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kneadforge::algebra::{rat, AlgebraicNumber, Elem, Field, IntPoly};
use kneadforge::itinerary::{itinerary_of, Itinerary, Symbol};
use kneadforge::pwl::BimodalMap;

pub fn lambda_e() -> Field {
    Field::new(AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(2, 1)).unwrap())
}

pub fn it(s: &str) -> Itinerary {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Offset at which `c^{start}` of the bimodal map with rational slope
/// follows `block` and lands on `c^{start}` again, by iterating the branch
/// formulas on `x = αb + β`. `None` when the return does not pin down `b`.
pub fn oracle_offset(lambda: &BigRational, start: usize, block: &[usize]) -> Option<BigRational> {
    let half = rat(1, 2);
    let sign = if start == 1 { BigRational::one() } else { -BigRational::one() };
    let (mut a, mut c) = (half.clone(), &half * &sign);
    for &j in block {
        let (na, nc) = match j {
            0 => (lambda * &a, lambda * &c + BigRational::one()),
            1 => (BigRational::one() - lambda * &a, -(lambda * &c)),
            _ => (lambda * &a, lambda * &c - BigRational::one()),
        };
        a = na;
        c = nc;
    }
    // c^1 = (b - 1)/(2λ), c^2 = (b + 1)/(2λ)
    let inv = (lambda * BigRational::from_integer(BigInt::from(2))).recip();
    let coeff = &a - &inv;
    if coeff.is_zero() {
        return None;
    }
    Some((-(&sign * &inv) - c) / coeff)
}

#[derive(Clone, Debug)]
pub struct Harvested {
    pub lambda: BigRational,
    pub b: BigRational,
    pub itinerary: Itinerary,
}

fn bound(lambda: &BigRational) -> BigRational {
    (rat(3, 1) - lambda) / (lambda - rat(1, 1))
}

/// Periodic turning-point itineraries of length at most `horizon`, each
/// with a rational map realizing it. Random maps supply the lap words; the
/// oracle supplies the offset; the exact orbit at that offset confirms it.
pub fn harvest(seed: u64, count: usize, horizon: usize) -> Vec<Harvested> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 200 * count, "harvest stalled at {} of {count}", out.len());
        let lambda = rat(r.gen_range(21..=60), 20);
        let bnd = bound(&lambda);
        let t = rat(r.gen_range(-999..=999), 1000);
        let b0 = &bnd * t;
        let Ok(m) = BimodalMap::rational(lambda.clone(), b0) else { continue };
        let start = r.gen_range(1..=2usize);
        let n = r.gen_range(2..=horizon);
        let c = if start == 1 { m.c1().clone() } else { m.c2().clone() };
        let Ok(walk) = itinerary_of(&m, &c, n) else { continue };
        let block: Option<Vec<usize>> = walk.symbols()[1..n]
            .iter()
            .map(|s| match s {
                Symbol::J(j) => Some(*j),
                Symbol::C(_) => None,
            })
            .collect();
        let Some(block) = block else { continue };
        let Some(b) = oracle_offset(&lambda, start, &block) else { continue };
        if b.abs() > bnd {
            continue;
        }
        let Ok(mb) = BimodalMap::rational(lambda.clone(), b.clone()) else { continue };
        let cb = if start == 1 { mb.c1().clone() } else { mb.c2().clone() };
        let Ok(got) = itinerary_of(&mb, &cb, n) else { continue };
        let mut want: Vec<Symbol> = vec![Symbol::C(start)];
        want.extend(block.iter().map(|&j| Symbol::J(j)));
        want.push(Symbol::C(start));
        if got.symbols().len() < want.len() || got.symbols()[..want.len()] != want[..] {
            continue;
        }
        out.push(Harvested { lambda, b, itinerary: Itinerary::finite(want) });
    }
    out
}

pub fn elem(r: &BigRational) -> Elem {
    Elem::rational(r)
}
