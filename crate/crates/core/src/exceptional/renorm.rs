use std::cmp::Ordering;

use crate::algebra::{Elem, Field};
use crate::error::Result;
use crate::itinerary::{itinerary_of, Itinerary};
use crate::pwl::{step, BimodalMap, IntervalMap};

/// Exact image of `[lo, hi]` under the map.
pub fn image_of<M: IntervalMap + ?Sized>(m: &M, lo: &Elem, hi: &Elem) -> Result<(Elem, Elem)> {
    let f = m.field();
    let mut pts = vec![lo.clone(), hi.clone()];
    pts.extend(
        m.turning_points()
            .iter()
            .filter(|c| f.cmp(c, lo) == Ordering::Greater && f.cmp(c, hi) == Ordering::Less)
            .cloned(),
    );
    let mut vals = pts.iter().map(|x| step(m, x).map(|(_, y)| y));
    let first = vals.next().expect("two endpoints")?;
    let (mut a, mut b) = (first.clone(), first);
    for v in vals {
        let v = v?;
        a = f.min(&a, &v);
        b = f.max(&b, &v);
    }
    Ok((a, b))
}

#[derive(Clone, Debug)]
pub struct RenormReport {
    pub center: usize,
    pub period: usize,
    /// Hull of `q^p(c)` and `q^{2p}(c)`.
    pub interval: (Elem, Elem),
    pub center_inside: bool,
    /// `q^p` of the interval.
    pub image: (Elem, Elem),
    pub holds: bool,
}

/// Builds `R = hull(q^p(c), q^{2p}(c))` around turning point `c = c^center`
/// and checks that `c ∈ R` and `q^p(R) ⊆ R`.
pub fn renormalization_check<M: IntervalMap + ?Sized>(m: &M, center: usize, period: usize) -> Result<RenormReport> {
    let f = m.field();
    let c = m.turning_points()[center - 1].clone();
    let mut orbit = vec![c.clone()];
    for _ in 0..2 * period {
        let (_, y) = step(m, orbit.last().expect("nonempty"))?;
        orbit.push(y);
    }
    let (u, v) = (&orbit[period], &orbit[2 * period]);
    let (lo, hi) = (f.min(u, v), f.max(u, v));
    let center_inside = f.cmp(&lo, &c) != Ordering::Greater && f.cmp(&c, &hi) != Ordering::Greater;
    let mut image = (lo.clone(), hi.clone());
    for _ in 0..period {
        image = image_of(m, &image.0, &image.1)?;
    }
    let inside = f.cmp(&lo, &image.0) != Ordering::Greater && f.cmp(&image.1, &hi) != Ordering::Greater;
    Ok(RenormReport { center, period, interval: (lo, hi), center_inside, image, holds: center_inside && inside })
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub b: Elem,
    pub itineraries: [Itinerary; 2],
}

#[derive(Clone, Debug)]
pub struct NonrigidityReport {
    pub field: Field,
    pub horizon: usize,
    pub rows: Vec<ScanRow>,
    /// Whether each turning point keeps one itinerary across the grid.
    pub constant: [bool; 2],
    /// Number of distinct itinerary pairs.
    pub distinct: usize,
}

impl NonrigidityReport {
    pub fn all_constant(&self) -> bool {
        self.constant[0] && self.constant[1]
    }
}

/// Itineraries of both turning points of the bimodal map at a fixed slope
/// across a grid of offsets.
pub fn nonrigidity_scan(field: &Field, grid: &[Elem], horizon: usize) -> Result<NonrigidityReport> {
    let mut rows = Vec::with_capacity(grid.len());
    for b in grid {
        let m = BimodalMap::new(field.clone(), b.clone())?;
        let i1 = itinerary_of(&m, m.c1(), horizon)?;
        let i2 = itinerary_of(&m, m.c2(), horizon)?;
        rows.push(ScanRow { b: b.clone(), itineraries: [i1, i2] });
    }
    let constant = [0, 1].map(|k| rows.windows(2).all(|w| w[0].itineraries[k] == w[1].itineraries[k]));
    let mut pairs: Vec<&[Itinerary; 2]> = Vec::new();
    for r in &rows {
        if !pairs.contains(&&r.itineraries) {
            pairs.push(&r.itineraries);
        }
    }
    let distinct = pairs.len();
    Ok(NonrigidityReport { field: field.clone(), horizon, rows, constant, distinct })
}
