use super::{Itinerary, PeriodicTail, Symbol};
use crate::algebra::{Elem, RatInterval};
use crate::error::{Error, Result};
use crate::pwl::{collided_pair, step, IntervalMap};

fn overlaps(a: &RatInterval, b: &RatInterval) -> bool {
    a.lo <= b.hi && b.lo <= a.hi
}

/// The `n`-itinerary of `x`: symbols of `x, q(x), …, q^n(x)`.
///
/// When the orbit revisits an earlier point exactly, the result carries the
/// periodic tail and the remaining symbols are filled in from it.
pub fn itinerary_of<M: IntervalMap + ?Sized>(m: &M, x: &Elem, n: usize) -> Result<Itinerary> {
    if let Some((i, j)) = collided_pair(m) {
        return Err(Error::CollidedTurningPoints(i, j));
    }
    let f = m.field();
    let mut symbols: Vec<Symbol> = Vec::with_capacity(n + 1);
    let mut seen: Vec<(Elem, RatInterval)> = Vec::new();
    let mut cur = x.clone();
    let mut tail = None;
    for k in 0..=n {
        let (sym, next) = step(m, &cur)?;
        let enc = f.enclosure(&cur, 64);
        let hit = seen
            .iter()
            .enumerate()
            .find(|(j, (v, e))| symbols[*j] == sym && overlaps(e, &enc) && f.equal(v, &cur))
            .map(|(j, _)| j);
        if let Some(j) = hit {
            tail = Some(PeriodicTail { start: j, period: k - j });
            break;
        }
        symbols.push(sym);
        seen.push((cur, enc));
        cur = next;
    }
    if let Some(t) = tail {
        while symbols.len() <= n {
            symbols.push(symbols[symbols.len() - t.period]);
        }
    }
    Itinerary::new(symbols, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, AlgebraicNumber, Field, IntPoly};
    use crate::pwl::BimodalMap;

    fn lambda_e_map(b: Elem) -> BimodalMap {
        let f = Field::new(
            AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(2, 1))
                .unwrap(),
        );
        BimodalMap::new(f, b).unwrap()
    }

    #[test]
    fn period_six_at_lambda_e() {
        let m = lambda_e_map(Elem::zero());
        let i1 = itinerary_of(&m, m.c1(), 6).unwrap();
        assert_eq!(i1.to_string(), "c1 J2 J1 J2 J0 J2 c1 | period=6");
        let i2 = itinerary_of(&m, m.c2(), 6).unwrap();
        assert_eq!(i2.to_string(), "c2 J0 J1 J0 J2 J0 c2 | period=6");
        assert_eq!(i2, i1.mirror(2));
    }

    #[test]
    fn fixed_boundary_point() {
        let m = BimodalMap::rational(rat(5, 2), rat(1, 10)).unwrap();
        let it = itinerary_of(&m, m.a(), 5).unwrap();
        assert_eq!(it.to_string(), "J2 J2 J2 J2 J2 J2 | period=1");
    }

    #[test]
    fn eventually_periodic_point() {
        // 3/10 -> -2/5 -> 1/5 -> -2/5 at λ = 2, b = 0
        let m = BimodalMap::rational(rat(2, 1), rat(0, 1)).unwrap();
        let it = itinerary_of(&m, &Elem::rational(&rat(3, 10)), 3).unwrap();
        assert_eq!(it.to_string(), "J2 J0 J1 J0 | period=2 start=1");
        assert_eq!(it.symbol_at(10), Some(Symbol::J(1)));
    }
}
