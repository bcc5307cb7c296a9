use crate::algebra::{DyadicPoly, Elem, Field};
use crate::error::{Error, Result};
use crate::itinerary::{Itinerary, Symbol};
use crate::pwl::Chart;

/// Iterates of a turning point as linear combinations of the offsets:
/// `q^k(c^{i0}) = Σ_i w^i_k b^i`, for `k = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormOrbit {
    chart: Chart,
    start: usize,
    /// `weights[k-1][i] = w^i_k`.
    weights: Vec<Vec<DyadicPoly>>,
}

impl LinearFormOrbit {
    pub fn chart(&self) -> Chart {
        self.chart
    }

    /// Index `i0` of the starting turning point.
    pub fn start(&self) -> usize {
        self.start
    }

    /// Number of iterates held.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `w^i_k` for `k ≥ 1`.
    pub fn weight(&self, k: usize, i: usize) -> &DyadicPoly {
        &self.weights[k - 1][i]
    }

    pub fn weights_at(&self, k: usize) -> &[DyadicPoly] {
        &self.weights[k - 1]
    }

    /// In the bimodal chart: `(coefficient of b, constant)` of `q^k(c^{i0})`,
    /// folding in `b^0 = 1`, `b^2 = -1`.
    pub fn bimodal_form(&self, k: usize) -> (DyadicPoly, DyadicPoly) {
        let w = self.weights_at(k);
        (w[1].clone(), &w[0] - &w[2])
    }

    /// Value of `q^k(c^{i0})` once the offsets are known.
    pub fn eval(&self, f: &Field, k: usize, offsets: &[Elem]) -> Elem {
        self.weights_at(k)
            .iter()
            .zip(offsets)
            .fold(Elem::zero(), |acc, (w, b)| f.add(&acc, &f.mul(&f.from_dyadic(w), b)))
    }
}

/// Builds the weights along `prefix = {c^{i0}, J^{i_1}, …, J^{i_{n-1}}}`,
/// returning `n` iterates.
pub fn symbolic_orbit(chart: Chart, prefix: &Itinerary) -> Result<LinearFormOrbit> {
    let syms = prefix.symbols();
    let l = chart.turning_count();
    let Some(&Symbol::C(i0)) = syms.first() else {
        return Err(Error::BadItinerary(format!("{prefix} must start at a turning point")));
    };
    if !prefix.fits(l) {
        return Err(Error::BadItinerary(format!("{prefix} uses symbols beyond l = {l}")));
    }
    let mut w = vec![DyadicPoly::zero(); l + 1];
    w[i0 - 1] = DyadicPoly::half();
    w[i0] = DyadicPoly::half();
    let mut weights = vec![w];
    for sym in &syms[1..] {
        let Symbol::J(j) = *sym else {
            return Err(Error::BadItinerary(format!(
                "{prefix} reaches a turning point before its end; split it into bifurcation itineraries"
            )));
        };
        let sign = chart.lap_sign(j);
        let prev = weights.last().expect("nonempty");
        let next: Vec<DyadicPoly> = prev
            .iter()
            .enumerate()
            .map(|(i, wi)| {
                let lw = wi.mul_lambda();
                let lw = if sign == 1 { lw } else { -&lw };
                if i == j { &lw + &DyadicPoly::one() } else { lw }
            })
            .collect();
        weights.push(next);
    }
    Ok(LinearFormOrbit { chart, start: i0, weights })
}

/// Weights of `q^k(c^{i0})` computed by composing the branch formulas as
/// affine maps in `x`, a second route to the same coefficients.
#[cfg(test)]
fn weights_by_composition(chart: Chart, prefix: &Itinerary) -> Vec<Vec<DyadicPoly>> {
    let l = chart.turning_count();
    let syms = prefix.symbols();
    let i0 = syms[0].index();
    // x_1 = (b^{i0-1} + b^{i0}) / 2 written as an affine map of the offsets
    let mut x: Vec<DyadicPoly> = (0..=l)
        .map(|i| if i + 1 == i0 || i == i0 { DyadicPoly::half() } else { DyadicPoly::zero() })
        .collect();
    let mut out = vec![x.clone()];
    for sym in &syms[1..] {
        let j = sym.index();
        let slope = DyadicPoly::from_int(crate::algebra::IntPoly::from_i64s(&[0, chart.lap_sign(j) as i64]));
        x = x.iter().map(|c| &slope * c).collect();
        x[j] = &x[j] + &DyadicPoly::one();
        out.push(x.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, IntPoly};

    fn it(s: &str) -> Itinerary {
        s.parse().unwrap()
    }

    #[test]
    fn first_iterate_is_the_turning_value() {
        // w^{i0-1}_1 = w^{i0}_1 = 1/2 for every start
        for l in 1..5 {
            for i0 in 1..=l {
                let o = symbolic_orbit(Chart::Standard { l, s: 1 }, &Itinerary::finite(vec![Symbol::C(i0)])).unwrap();
                for i in 0..=l {
                    let want = if i + 1 == i0 || i == i0 { DyadicPoly::half() } else { DyadicPoly::zero() };
                    assert_eq!(o.weight(1, i), &want);
                }
            }
        }
    }

    #[test]
    fn bimodal_first_steps() {
        let o = symbolic_orbit(Chart::Bimodal, &it("c1 J2")).unwrap();
        let (a1, b1) = o.bimodal_form(1);
        assert_eq!((a1, b1), (DyadicPoly::half(), DyadicPoly::half()));
        let (a2, _) = o.bimodal_form(2);
        assert_eq!(a2, DyadicPoly::new(IntPoly::lambda(), 1));
    }

    #[test]
    fn two_routes_agree() {
        for (chart, s) in [
            (Chart::Bimodal, "c2 J0 J1 J0 J2 J0 J1 J1"),
            (Chart::Standard { l: 3, s: -1 }, "c3 J0 J3 J1 J2 J2 J0"),
            (Chart::Standard { l: 4, s: 1 }, "c1 J4 J2 J3 J1"),
        ] {
            let o = symbolic_orbit(chart, &it(s)).unwrap();
            let w = weights_by_composition(chart, &it(s));
            for k in 1..=o.len() {
                assert_eq!(o.weights_at(k), &w[k - 1][..], "{s} step {k}");
            }
        }
    }

    #[test]
    fn rejects_interior_turning_points() {
        assert!(symbolic_orbit(Chart::Bimodal, &it("c1 J2 c1 J2")).is_err());
        assert!(symbolic_orbit(Chart::Bimodal, &it("J1 J2")).is_err());
    }

    #[test]
    fn weights_reproduce_the_orbit() {
        let f = Field::rational(rat(9, 4));
        let b = Elem::rational(&rat(-1, 5));
        let m = crate::pwl::BimodalMap::new(f.clone(), b.clone()).unwrap();
        let pts = m.turning_orbit(1, 8).unwrap();
        let mut prefix = vec![Symbol::C(1)];
        prefix.extend(pts[1..8].iter().map(|p| p.symbol));
        assert!(prefix[1..].iter().all(|s| !s.is_turning()));
        let o = symbolic_orbit(Chart::Bimodal, &Itinerary::finite(prefix)).unwrap();
        let offs = vec![Elem::one(), b, Elem::integer(-1)];
        for k in 1..=8 {
            assert!(f.equal(&o.eval(&f, k, &offs), &pts[k].value));
        }
    }
}
