use num_rational::BigRational;

use super::{Chart, Constraint, IntervalMap, LinearForm, OrbitPoint, Violation};
use crate::algebra::{Elem, Field, Sign};
use crate::error::{Error, Result};
use crate::itinerary::Symbol;

/// The normalized bimodal map on `[-a, a]`, `a = 1/(λ-1)`:
/// `λx+1` on `J^0`, `-λx+b` on `J^1`, `λx-1` on `J^2`.
#[derive(Clone, Debug)]
pub struct BimodalMap {
    field: Field,
    b: Elem,
    domain: [Elem; 2],
    turning: [Elem; 2],
}

impl BimodalMap {
    pub fn new(field: Field, b: Elem) -> Result<Self> {
        let violations = Self::violations(&field, &b);
        if !violations.is_empty() {
            return Err(Error::Infeasible(violations.iter().map(|v| v.to_string()).collect()));
        }
        let lambda = field.lambda();
        let a = field.div(&Elem::one(), &field.sub(&lambda, &Elem::one()))?;
        let two_l = field.mul(&Elem::integer(2), &lambda);
        let c1 = field.div(&field.sub(&b, &Elem::one()), &two_l)?;
        let c2 = field.div(&field.add(&b, &Elem::one()), &two_l)?;
        Ok(BimodalMap { domain: [a.neg(), a], turning: [c1, c2], field, b })
    }

    pub fn rational(lambda: BigRational, b: BigRational) -> Result<Self> {
        BimodalMap::new(Field::rational(lambda), Elem::rational(&b))
    }

    /// The bound `(3-λ)/(λ-1)` on `|b|`.
    pub fn b_bound(field: &Field) -> Result<Elem> {
        let lambda = field.lambda();
        field.div(&field.sub(&Elem::integer(3), &lambda), &field.sub(&lambda, &Elem::one()))
    }

    /// Every violated constraint; empty when the map exists.
    pub fn violations(field: &Field, b: &Elem) -> Vec<Violation> {
        let mut out = Vec::new();
        let lambda = field.lambda();
        if field.sign(&field.sub(&lambda, &Elem::one())) != Sign::Positive {
            out.push(Violation {
                constraint: Constraint::Slope,
                detail: format!("λ = {} must exceed 1", field.alpha()),
            });
            return out;
        }
        let bound = Self::b_bound(field).expect("λ > 1");
        if field.cmp(&field.sub(&bound, b), &Elem::zero()).is_lt()
            || field.cmp(&field.add(&bound, b), &Elem::zero()).is_lt()
        {
            out.push(Violation {
                constraint: Constraint::OffsetRange,
                detail: format!(
                    "b = {} outside [{}, {}] = ±(3-λ)/(λ-1)",
                    field.format(b),
                    field.format(&bound.neg()),
                    field.format(&bound),
                ),
            });
        }
        out
    }

    pub fn b(&self) -> &Elem {
        &self.b
    }

    /// The fixed point `a`.
    pub fn a(&self) -> &Elem {
        &self.domain[1]
    }

    pub fn c1(&self) -> &Elem {
        &self.turning[0]
    }

    pub fn c2(&self) -> &Elem {
        &self.turning[1]
    }

    /// The same map with `b` replaced.
    pub fn with_b(&self, b: Elem) -> Result<BimodalMap> {
        BimodalMap::new(self.field.clone(), b)
    }

    /// Offsets `(b^0, b^1, b^2)` of the conjugate map on `[0, 1]` in the
    /// standard chart with `l = 2`, `s = +1`.
    pub fn to_standard_offsets(&self) -> [Elem; 3] {
        let f = &self.field;
        let lambda = f.lambda();
        // b^1 = (λ + 1 + b(λ - 1)) / 2
        let lm1 = f.sub(&lambda, &Elem::one());
        let mid = f.add(&f.add(&lambda, &Elem::one()), &f.mul(&self.b, &lm1));
        let mid = f.div(&mid, &Elem::integer(2)).expect("nonzero");
        [Elem::zero(), mid, f.sub(&Elem::one(), &lambda)]
    }

    /// `x ↦ (x + a) / 2a`, the affine change to `[0, 1]`.
    pub fn to_unit(&self, x: &Elem) -> Elem {
        let f = &self.field;
        let two_a = f.mul(&Elem::integer(2), self.a());
        f.div(&f.add(x, self.a()), &two_a).expect("a > 0")
    }

    pub fn from_unit(&self, y: &Elem) -> Elem {
        let f = &self.field;
        let two_a = f.mul(&Elem::integer(2), self.a());
        f.sub(&f.mul(y, &two_a), self.a())
    }

    /// Orbit of `c^i` for `n` steps, carrying the symbolic linear form in `b`
    /// from the first iterate on.
    pub fn turning_orbit(&self, i: usize, n: usize) -> Result<Vec<OrbitPoint>> {
        let mut pts = super::orbit(self, &self.turning[i - 1], n)?;
        let mut form = LinearForm::bimodal_turning_value(i);
        for k in 1..pts.len() {
            pts[k].form = Some(form.clone());
            let j = match pts[k].symbol {
                Symbol::J(j) => j,
                Symbol::C(c) => c - 1,
            };
            form = form.apply_bimodal(j);
        }
        Ok(pts)
    }
}

impl IntervalMap for BimodalMap {
    fn field(&self) -> &Field {
        &self.field
    }

    fn chart(&self) -> Chart {
        Chart::Bimodal
    }

    fn turning_points(&self) -> &[Elem] {
        &self.turning
    }

    fn domain(&self) -> (&Elem, &Elem) {
        (&self.domain[0], &self.domain[1])
    }

    fn branch(&self, j: usize, x: &Elem) -> Elem {
        let f = &self.field;
        let lx = f.mul(&f.lambda(), x);
        match j {
            0 => f.add(&lx, &Elem::one()),
            1 => f.sub(&self.b, &lx),
            _ => f.sub(&lx, &Elem::one()),
        }
    }

    fn offsets(&self) -> Vec<Elem> {
        vec![Elem::one(), self.b.clone(), Elem::integer(-1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, AlgebraicNumber, IntPoly};
    use crate::pwl::{evaluate, orbit, turning_values, TurningConvention};

    fn lambda_e() -> Field {
        Field::new(
            AlgebraicNumber::unique_root_in(&IntPoly::from_i64s(&[-1, 0, -1, 0, 1]), &rat(1, 1), &rat(2, 1))
                .unwrap(),
        )
    }

    #[test]
    fn turning_points_at_two() {
        let m = BimodalMap::rational(rat(2, 1), rat(0, 1)).unwrap();
        assert_eq!(m.c1().as_rational(), Some(rat(-1, 4)));
        assert_eq!(m.c2().as_rational(), Some(rat(1, 4)));
        assert_eq!(m.a().as_rational(), Some(rat(1, 1)));
    }

    #[test]
    fn fixed_ends_and_turning_values() {
        let m = BimodalMap::rational(rat(5, 2), rat(1, 5)).unwrap();
        let f = m.field();
        let a = m.a().clone();
        assert!(f.equal(&evaluate(&m, &a, TurningConvention::Reject).unwrap(), &a));
        assert!(f.equal(&evaluate(&m, &a.neg(), TurningConvention::Reject).unwrap(), &a.neg()));
        assert!(matches!(evaluate(&m, m.c1(), TurningConvention::Reject), Err(Error::AmbiguousBranch(1))));
        let tv = turning_values(&m);
        assert_eq!(tv[0].as_rational(), Some(rat(3, 5)));
        assert_eq!(tv[1].as_rational(), Some(rat(-2, 5)));
        // both branches agree at the turning points
        assert!(f.equal(&m.branch(0, m.c1()), &m.branch(1, m.c1())));
        assert!(f.equal(&m.branch(1, m.c2()), &m.branch(2, m.c2())));
    }

    #[test]
    fn infeasible_offset() {
        let err = BimodalMap::rational(rat(2, 1), rat(3, 2)).unwrap_err();
        match err {
            Error::Infeasible(v) => assert!(v[0].contains("b = 3/2 outside [-1, 1]"), "{v:?}"),
            e => panic!("{e}"),
        }
        assert!(BimodalMap::rational(rat(1, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn lambda_e_period_six() {
        let f = lambda_e();
        let m = BimodalMap::new(f.clone(), Elem::zero()).unwrap();
        assert!((f.to_f64(m.c1()) + 0.3931).abs() < 1e-4);
        let pts = orbit(&m, m.c1(), 6).unwrap();
        let syms: Vec<String> = pts.iter().map(|p| p.symbol.to_string()).collect();
        assert_eq!(syms.join(" "), "c1 J2 J1 J2 J0 J2 c1");
        assert!(f.equal(&pts[6].value, m.c1()));
    }

    #[test]
    fn turning_orbit_forms_agree() {
        let f = lambda_e();
        let b = Elem::rational(&rat(1, 20));
        let m = BimodalMap::new(f.clone(), b.clone()).unwrap();
        for p in m.turning_orbit(2, 8).unwrap().iter().skip(1) {
            assert!(f.equal(&p.form.as_ref().unwrap().eval(&f, &b), &p.value));
            assert!(p.enclosure.contains(&p.enclosure.mid()));
        }
    }

    #[test]
    fn unit_chart_conjugacy() {
        let m = BimodalMap::rational(rat(9, 4), rat(-1, 3)).unwrap();
        let f = m.field();
        let offs = m.to_standard_offsets();
        for x in [rat(-1, 2), rat(0, 1), rat(1, 3), rat(7, 10)] {
            let x = Elem::rational(&x);
            let (sym, y) = crate::pwl::step(&m, &x).unwrap();
            let j = sym.index();
            let u = m.to_unit(&x);
            let sign = if j % 2 == 0 { Elem::one() } else { Elem::integer(-1) };
            let qu = f.add(&f.mul(&f.mul(&sign, &f.lambda()), &u), &offs[j]);
            assert!(f.equal(&qu, &m.to_unit(&y)));
            assert!(f.equal(&m.from_unit(&u), &x));
        }
    }
}
