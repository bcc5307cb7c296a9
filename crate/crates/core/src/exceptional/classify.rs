use serde::Serialize;

use crate::algebra::Sign;
use crate::bifurcation::derive_bifurcation_eq;
use crate::error::Result;
use crate::itinerary::{itinerary_of, Itinerary};
use crate::pwl::IntervalMap;

/// How a turning point sits on the isentrope through its map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// Some `Q_i`, `i ≥ 1`, is nonzero at the slope.
    Ordinary { itinerary: Itinerary },
    /// Every `Q_i` vanishes at the slope.
    Exceptional { itinerary: Itinerary },
    /// All `Q_i`, `i ≥ 1`, vanish but `Q_0` does not, so the return cannot
    /// happen; seeing it means the orbit data is inconsistent.
    InfeasibleCase3 { itinerary: Itinerary },
    /// No return to a turning point within the horizon.
    NotControlled { horizon: usize },
}

impl Classification {
    pub fn is_controlled(&self) -> bool {
        !matches!(self, Classification::NotControlled { .. })
    }

    pub fn itinerary(&self) -> Option<&Itinerary> {
        match self {
            Classification::Ordinary { itinerary }
            | Classification::Exceptional { itinerary }
            | Classification::InfeasibleCase3 { itinerary } => Some(itinerary),
            Classification::NotControlled { .. } => None,
        }
    }
}

/// The bifurcation itinerary from turning point `c^i` to the first turning
/// point its orbit hits within `horizon` steps.
pub fn controlling_itinerary<M: IntervalMap + ?Sized>(m: &M, i: usize, horizon: usize) -> Result<Option<Itinerary>> {
    let c = m.turning_points()[i - 1].clone();
    let it = itinerary_of(m, &c, horizon)?;
    let hit = it.symbols()[1..].iter().position(|s| s.is_turning());
    Ok(hit.map(|k| it.truncated(k + 2)))
}

pub fn classify_turning_point<M: IntervalMap + ?Sized>(m: &M, i: usize, horizon: usize) -> Result<Classification> {
    let Some(itinerary) = controlling_itinerary(m, i, horizon)? else {
        return Ok(Classification::NotControlled { horizon });
    };
    let eq = derive_bifurcation_eq(m.chart(), &itinerary)?;
    let signs = eq.signs_at(m.field().alpha());
    Ok(if signs[1..].iter().any(|s| *s != Sign::Zero) {
        Classification::Ordinary { itinerary }
    } else if signs[0] != Sign::Zero {
        Classification::InfeasibleCase3 { itinerary }
    } else {
        Classification::Exceptional { itinerary }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, AlgebraicNumber, Elem, Field, IntPoly};
    use crate::pwl::{BimodalMap, PlMap};

    fn lambda_e() -> Field {
        Field::new(AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(2, 1)).unwrap())
    }

    #[test]
    fn exceptional_at_lambda_e() {
        let m = BimodalMap::new(lambda_e(), Elem::zero()).unwrap();
        let c = classify_turning_point(&m, 1, 20).unwrap();
        assert_eq!(c, Classification::Exceptional { itinerary: "c1 J2 J1 J2 J0 J2 c1".parse().unwrap() });
        let c2 = classify_turning_point(&m, 2, 20).unwrap();
        assert!(matches!(c2, Classification::Exceptional { .. }));
    }

    #[test]
    fn ordinary_period_two() {
        let m = BimodalMap::rational(rat(2, 1), rat(-1, 3)).unwrap();
        let c = classify_turning_point(&m, 1, 20).unwrap();
        assert_eq!(c, Classification::Ordinary { itinerary: "c1 J2 c1".parse().unwrap() });
        // c2 lands on c1 after two steps
        let c2 = classify_turning_point(&m, 2, 20).unwrap();
        assert_eq!(c2.itinerary().unwrap().to_string(), "c2 J0 c1");
    }

    #[test]
    fn generic_orbit_not_controlled() {
        let m = BimodalMap::rational(rat(2, 1), rat(0, 1)).unwrap();
        // c1 = -1/4 -> 1/2 -> 0 -> 0 -> ...
        assert_eq!(classify_turning_point(&m, 1, 100).unwrap(), Classification::NotControlled { horizon: 100 });
    }

    #[test]
    fn standard_chart_turning_point() {
        // λ = 2, l = 2, s = 1 on [0,1] with b^1 = 1: c1 = 1/4 maps onto c2 = 1/2
        let f = Field::rational(rat(2, 1));
        let m = PlMap::standard(2, 1, &f, vec![Elem::one()]).unwrap().into_result().unwrap();
        let c = classify_turning_point(&m, 1, 30).unwrap();
        assert_eq!(c, Classification::Ordinary { itinerary: "c1 c2".parse().unwrap() });
        let eq = derive_bifurcation_eq(m.chart(), c.itinerary().unwrap()).unwrap();
        assert!(eq.holds_at(&f, &[Elem::one()]));
        assert_eq!(classify_turning_point(&m, 2, 30).unwrap(), Classification::NotControlled { horizon: 30 });
    }
}
