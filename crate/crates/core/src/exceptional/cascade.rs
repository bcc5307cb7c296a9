use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{isolate_real_roots, AlgebraicNumber, Field, IntPoly, RatPoly};
use crate::bifurcation::derive_bifurcation_eq;
use crate::error::{Error, Result};
use crate::itinerary::{realization_interval, Itinerary, RealizationInterval, Symbol};
use crate::pwl::Chart;

/// The common factor `F` with `Q^{extended}_j = F · Q^{base}_j` for every
/// `j`, normalized to a primitive polynomial with positive leading
/// coefficient.
pub fn extract_factor(chart: Chart, base: &Itinerary, extended: &Itinerary) -> Result<IntPoly> {
    let eb = derive_bifurcation_eq(chart, base)?;
    let ee = derive_bifurcation_eq(chart, extended)?;
    let mut quotient: Option<RatPoly> = None;
    for (qb, qe) in eb.q().iter().zip(ee.q()) {
        if qb.is_zero() {
            if !qe.is_zero() {
                return Err(Error::NotDivisible { num: qe.to_string(), den: "0".into() });
            }
            continue;
        }
        let q = qe.div_exact_rational(qb)?;
        match &quotient {
            None => quotient = Some(q),
            Some(prev) if *prev != q => return Err(Error::FactorMismatch(prev.to_string(), q.to_string())),
            Some(_) => {}
        }
    }
    let q = quotient.ok_or_else(|| Error::BadItinerary(format!("{base} has an identically zero equation")))?;
    Ok(q.clear_denominators().0.normalized())
}

/// A factor root together with the offsets at which the turning point
/// follows the extended itinerary there.
#[derive(Clone, Debug)]
pub struct RealizedRoot {
    pub root: AlgebraicNumber,
    pub interval: RealizationInterval,
}

#[derive(Clone, Debug)]
pub struct ExceptionalRecord {
    pub base: Itinerary,
    pub extended: Itinerary,
    /// Lap indices inserted between repetitions of the base block.
    pub insertions: Vec<usize>,
    pub factor: IntPoly,
    pub realized: Vec<RealizedRoot>,
    pub unrealized: Vec<AlgebraicNumber>,
}

impl ExceptionalRecord {
    pub fn is_realized(&self) -> bool {
        !self.realized.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CascadeFailure {
    pub extended: Itinerary,
    pub error: Error,
}

#[derive(Clone, Debug)]
pub struct CascadeOutcome {
    pub records: Vec<ExceptionalRecord>,
    pub failures: Vec<CascadeFailure>,
}

impl CascadeOutcome {
    pub fn realized(&self) -> impl Iterator<Item = &ExceptionalRecord> {
        self.records.iter().filter(|r| r.is_realized())
    }
}

#[derive(Clone, Debug)]
pub struct CascadeOptions {
    /// Largest number of inserted symbols.
    pub max_insertions: usize,
    /// Open slope window in which factor roots are kept.
    pub window: (BigRational, BigRational),
    /// Lap indices that may be inserted. Defaults to the two laps adjacent
    /// to `c^1`.
    pub alphabet: Vec<usize>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl CascadeOptions {
    pub fn new(max_insertions: usize, window: (BigRational, BigRational)) -> Self {
        CascadeOptions { max_insertions, window, alphabet: vec![0, 1], jobs: None }
    }
}

/// `{c, B, J^{j_1}, B, …, J^{j_k}, B, c}` for the base `{c, B, c}`.
pub fn insert_blocks(base: &Itinerary, insertions: &[usize]) -> Result<Itinerary> {
    let syms = base.symbols();
    let (i0, block, i1) = base.bifurcation_parts()?;
    if i0 != i1 {
        return Err(Error::BadItinerary(format!("{base} does not return to its starting turning point")));
    }
    let mut out = vec![syms[0]];
    out.extend_from_slice(block);
    for &j in insertions {
        out.push(Symbol::J(j));
        out.extend_from_slice(block);
    }
    out.push(syms[0]);
    Ok(Itinerary::finite(out))
}

fn patterns(alphabet: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|p| {
                alphabet.iter().map(move |&j| {
                    let mut q = p.clone();
                    q.push(j);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn examine(base: &Itinerary, insertions: Vec<usize>, window: &(BigRational, BigRational)) -> Result<ExceptionalRecord> {
    let extended = insert_blocks(base, &insertions)?;
    let factor = extract_factor(Chart::Bimodal, base, &extended)?;
    let roots = if factor.is_constant() { Vec::new() } else { isolate_real_roots(&factor, &window.0, &window.1) };
    let mut realized = Vec::new();
    let mut unrealized = Vec::new();
    for root in roots {
        let root = root.refine_bits(64);
        let field = Field::new(root.clone());
        match realization_interval(&extended, &field)? {
            Some(interval) => realized.push(RealizedRoot { root, interval }),
            None => unrealized.push(root),
        }
    }
    Ok(ExceptionalRecord { base: base.clone(), extended, insertions, factor, realized, unrealized })
}

/// Inserts up to `max_insertions` single-lap blocks between copies of the
/// base loop, extracts each common factor, and tests every factor root in
/// the window for realizability. Records come back ordered by extended
/// length and then by insertion word, whatever the number of workers.
pub fn cascade_search(base: &Itinerary, opts: &CascadeOptions) -> Result<CascadeOutcome> {
    if !base.fits(2) {
        return Err(Error::BadItinerary(format!("{base} is not a bimodal itinerary")));
    }
    insert_blocks(base, &[])?;
    let work = patterns(&opts.alphabet, opts.max_insertions);
    let run = || -> Vec<(Vec<usize>, Result<ExceptionalRecord>)> {
        work.into_par_iter().map(|p| (p.clone(), examine(base, p, &opts.window))).collect()
    };
    let results = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::BadItinerary(e.to_string()))?
            .install(run),
        None => run(),
    };
    let mut outcome = CascadeOutcome { records: Vec::new(), failures: Vec::new() };
    for (p, r) in results {
        match r {
            Ok(rec) => outcome.records.push(rec),
            Err(error) => outcome.failures.push(CascadeFailure { extended: insert_blocks(base, &p)?, error }),
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn it(s: &str) -> Itinerary {
        s.parse().unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn period_two_factors() {
        let base = it("c1 J2 c1");
        assert_eq!(extract_factor(Chart::Bimodal, &base, &it("c1 J2 J0 J2 c1")).unwrap(), p(&[1, 0, 1]));
        assert_eq!(extract_factor(Chart::Bimodal, &base, &it("c1 J2 J1 J2 c1")).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(extract_factor(Chart::Bimodal, &base, &it("c1 J2 J1 J2 J0 J2 c1")).unwrap(), p(&[-1, 0, -1, 0, 1]));
    }

    #[test]
    fn octic_factor() {
        let f = extract_factor(Chart::Bimodal, &it("c1 J2 J0 J1 c1"), &it("c1 J2 J0 J1 J0 J2 J0 J1 J1 J2 J0 J1 c1")).unwrap();
        assert_eq!(f, p(&[-1, 0, 0, 0, -1, 0, 0, 0, 1]));
    }

    #[test]
    fn printed_order_gives_reciprocal() {
        let f = extract_factor(Chart::Bimodal, &it("c1 J1 J0 J2 c1"), &it("c1 J1 J0 J2 J1 J1 J0 J2 J0 J1 J0 J2 c1")).unwrap();
        assert_eq!(f, p(&[-1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(f, p(&[-1, 0, 0, 0, -1, 0, 0, 0, 1]).reciprocal().normalized());
    }

    #[test]
    fn unrelated_itineraries_do_not_factor() {
        let r = extract_factor(Chart::Bimodal, &it("c1 J2 c1"), &it("c1 J2 J2 J1 c1"));
        assert!(matches!(r, Err(Error::NotDivisible { .. }) | Err(Error::FactorMismatch(..))), "{r:?}");
    }

    #[test]
    fn insertion_words() {
        assert_eq!(insert_blocks(&it("c1 J2 c1"), &[1, 0]).unwrap(), it("c1 J2 J1 J2 J0 J2 c1"));
        assert!(insert_blocks(&it("c1 J2 c2"), &[1]).is_err());
        let ps = patterns(&[0, 1], 2);
        assert_eq!(ps, vec![vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn cascade_finds_lambda_e() {
        let out = cascade_search(&it("c1 J2 c1"), &CascadeOptions::new(2, (rat(1, 1), rat(2, 1)))).unwrap();
        let hits: Vec<_> = out.realized().collect();
        assert_eq!(hits.len(), 1, "{:?}", hits.iter().map(|r| r.extended.to_string()).collect::<Vec<_>>());
        let rec = hits[0];
        assert_eq!(rec.extended, it("c1 J2 J1 J2 J0 J2 c1"));
        let r = &rec.realized[0];
        assert!((r.root.to_f64() - 1.27202).abs() < 1e-4);
        assert!((r.interval.lo_f64() + 0.119726).abs() < 1e-6);
        assert!((r.interval.hi_f64() - 0.346014).abs() < 1e-6);
    }

    #[test]
    fn job_count_does_not_change_order() {
        let base = it("c1 J2 c1");
        let mut a = CascadeOptions::new(3, (rat(1, 1), rat(3, 1)));
        a.jobs = Some(1);
        let mut b = a.clone();
        b.jobs = Some(4);
        let ra = cascade_search(&base, &a).unwrap();
        let rb = cascade_search(&base, &b).unwrap();
        let key = |o: &CascadeOutcome| o.records.iter().map(|r| (r.extended.to_string(), r.factor.clone())).collect::<Vec<_>>();
        assert_eq!(key(&ra), key(&rb));
        assert_eq!(ra.records.len() + ra.failures.len(), 14);
    }

    #[test]
    fn nothing_realized_above_two() {
        let out = cascade_search(&it("c1 J2 c1"), &CascadeOptions::new(3, (rat(2, 1), rat(3, 1)))).unwrap();
        assert_eq!(out.realized().count(), 0);
    }
}
