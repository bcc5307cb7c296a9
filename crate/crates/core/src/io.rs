//! JSON and CSV forms of maps, orbits, equations and search results.
//!
//! Every JSON document carries `"schema": "kneadforge/1"` and a `"kind"`.
//! Polynomials are arrays of decimal-string coefficients, lowest degree
//! first; rationals are `"p/q"` strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, parse_rational, sig_digits, AlgebraicNumber, Elem, Field, IntPoly, RatFunc};
use crate::bifurcation::BifurcationEq;
use crate::error::{Error, Result};
use crate::exceptional::{
    CascadeOutcome, Classification, Codim1Report, ExceptionalRecord, NonrigidityReport, Obstruction, RenormReport,
};
use crate::pwl::{feasibility, BimodalMap, Chart, CombData, Feasibility, IntervalMap, OrbitPoint, PlMap, Strictness};

pub const SCHEMA: &str = "kneadforge/1";

/// Wraps `body` (an object) with the schema tag and its kind.
pub fn envelope(kind: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    out.insert("kind".into(), json!(kind));
    match body {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("data".into(), other);
        }
    }
    Value::Object(out)
}

pub fn error_json(e: &Error) -> Value {
    envelope("error", json!({ "error": e.to_string() }))
}

/// Slope given as a rational or as the unique root of a polynomial in a
/// rational interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    Rational(String),
    Algebraic { poly: Vec<String>, lo: String, hi: String },
}

impl LambdaSpec {
    pub fn field(&self) -> Result<Field> {
        match self {
            LambdaSpec::Rational(s) => Ok(Field::rational(parse_rational(s)?)),
            LambdaSpec::Algebraic { poly, lo, hi } => {
                let p = IntPoly::from_strings(poly)?;
                Ok(Field::new(AlgebraicNumber::new(&p, parse_rational(lo)?, parse_rational(hi)?)?))
            }
        }
    }
}

/// `"5/2"`, or `"c0,c1,…,cn@lo:hi"` for the root of `Σ c_i λ^i` in `[lo, hi]`.
pub fn parse_lambda(s: &str) -> Result<LambdaSpec> {
    match s.split_once('@') {
        None => {
            parse_rational(s)?;
            Ok(LambdaSpec::Rational(s.trim().to_string()))
        }
        Some((coeffs, range)) => {
            let (lo, hi) = range
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected lo:hi after '@' in {s:?}")))?;
            let poly: Vec<String> = coeffs.split(',').map(|c| c.trim().to_string()).collect();
            let spec = LambdaSpec::Algebraic { poly, lo: lo.trim().into(), hi: hi.trim().into() };
            spec.field()?;
            Ok(spec)
        }
    }
}

/// `"bimodal"` or `"standard:l:s"` with `s` one of `1`, `-1`.
pub fn parse_chart(s: &str) -> Result<Chart> {
    let bad = || Error::Parse(format!("chart must be bimodal or standard:l:s, got {s:?}"));
    match s.trim() {
        "bimodal" => Ok(Chart::Bimodal),
        other => {
            let mut parts = other.split(':');
            if parts.next() != Some("standard") {
                return Err(bad());
            }
            let l: usize = parts.next().and_then(|v| v.parse().ok()).filter(|&l| l >= 1).ok_or_else(bad)?;
            let s: i8 = parts.next().and_then(|v| v.parse().ok()).filter(|s: &i8| s.abs() == 1).ok_or_else(bad)?;
            if parts.next().is_some() {
                return Err(bad());
            }
            Ok(Chart::Standard { l, s })
        }
    }
}

pub fn algebraic_json(a: &AlgebraicNumber) -> Value {
    json!({
        "poly": a.poly().to_strings(),
        "lo": format_rational(a.lo()),
        "hi": format_rational(a.hi()),
        "value": sig_digits(a.to_f64(), 6),
    })
}

/// `{poly, lo, hi}` form of λ as held by the field.
pub fn lambda_json(f: &Field) -> Value {
    match f.as_rational() {
        Some(r) => json!(format_rational(&r)),
        None => algebraic_json(&f.alpha().refine_bits(64)),
    }
}

/// Rounds outward to `digits` decimals so the printed pair still encloses.
pub fn outward_decimal(r: &BigRational, digits: usize, up: bool) -> String {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
    let scaled = r * &scale;
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 { format!("{sign}{int}") } else { format!("{sign}{int}.{frac}") }
}

pub fn elem_json(f: &Field, e: &Elem) -> Value {
    let enc = f.enclosure(e, 64);
    let mut v = json!({
        "value": f.format(e),
        "enclosure": [outward_decimal(&enc.lo, 12, false), outward_decimal(&enc.hi, 12, true)],
    });
    if let Some(r) = e.as_rational() {
        v["exact"] = json!(format_rational(&r));
    }
    v
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({ "num": r.num().to_strings(), "den": r.den().to_strings(), "text": r.to_string() })
}

/// Map input: the bimodal shorthand `{lambda, b}` or a general descriptor.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapDescriptor {
    General { comb: CombData, lambda: LambdaSpec, breakpoints: Vec<String>, offsets: Vec<Vec<String>> },
    Bimodal { lambda: LambdaSpec, b: String },
}

#[derive(Clone, Debug)]
pub enum LoadedMap {
    Bimodal(BimodalMap),
    General(PlMap),
}

impl LoadedMap {
    pub fn field(&self) -> &Field {
        match self {
            LoadedMap::Bimodal(m) => m.field(),
            LoadedMap::General(m) => m.field(),
        }
    }

    /// The single-interval view used by orbit and itinerary operations.
    pub fn interval_map(&self) -> Result<&dyn IntervalMap> {
        match self {
            LoadedMap::Bimodal(m) => Ok(m),
            LoadedMap::General(m) => Ok(m.as_interval_map()?),
        }
    }
}

impl MapDescriptor {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("map descriptor: {e}")))
    }

    pub fn feasibility(&self) -> Result<Result<LoadedMap, Vec<crate::pwl::Violation>>> {
        match self {
            MapDescriptor::Bimodal { lambda, b } => {
                let field = lambda.field()?;
                let b = Elem::rational(&parse_rational(b)?);
                let v = BimodalMap::violations(&field, &b);
                if !v.is_empty() {
                    return Ok(Err(v));
                }
                Ok(Ok(LoadedMap::Bimodal(BimodalMap::new(field, b)?)))
            }
            MapDescriptor::General { comb, lambda, breakpoints, offsets } => {
                let field = lambda.field()?;
                let rat = |s: &String| parse_rational(s).map(|r| Elem::rational(&r));
                let bps = breakpoints.iter().map(rat).collect::<Result<Vec<_>>>()?;
                let offs = offsets.iter().map(|row| row.iter().map(rat).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                Ok(match feasibility(comb, &field, bps, offs, &Strictness::NonStrict)? {
                    Feasibility::Feasible(m) => Ok(LoadedMap::General(m)),
                    Feasibility::Infeasible(v) => Err(v),
                })
            }
        }
    }

    pub fn load(&self) -> Result<LoadedMap> {
        self.feasibility()?.map_err(|v| Error::Infeasible(v.iter().map(|v| v.to_string()).collect()))
    }
}

pub fn orbit_json(f: &Field, points: &[OrbitPoint]) -> Value {
    let rows: Vec<Value> = points
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mut v = elem_json(f, &p.value);
            v["step"] = json!(k);
            v["symbol"] = json!(p.symbol.to_string());
            v
        })
        .collect();
    envelope("orbit", json!({ "lambda": lambda_json(f), "points": rows }))
}

/// `step,enc_lo,enc_hi,symbol`, one row per point.
pub fn orbit_csv(points: &[OrbitPoint]) -> String {
    let mut out = String::from("step,enc_lo,enc_hi,symbol\n");
    for (k, p) in points.iter().enumerate() {
        let _ = writeln!(
            out,
            "{k},{},{},{}",
            outward_decimal(&p.enclosure.lo, 12, false),
            outward_decimal(&p.enclosure.hi, 12, true),
            p.symbol
        );
    }
    out
}

pub fn equation_json(eq: &BifurcationEq) -> Value {
    let mut body = serde_json::to_value(eq.summary()).expect("plain data");
    body["common_factor"] = json!(eq.common_factor().to_strings());
    envelope("bifurcation_equation", body)
}

fn record_value(rec: &ExceptionalRecord) -> Value {
    let realized: Vec<Value> = rec
        .realized
        .iter()
        .map(|r| json!({ "root": algebraic_json(&r.root), "b_interval": r.interval.summary(), "b_text": r.interval.to_string() }))
        .collect();
    let unrealized: Vec<Value> = rec.unrealized.iter().map(algebraic_json).collect();
    json!({
        "base": rec.base,
        "extended": rec.extended,
        "insertions": rec.insertions,
        "factor": rec.factor.to_strings(),
        "factor_text": rec.factor.to_string(),
        "factor_degree": rec.factor.degree().unwrap_or(0),
        "realized": realized,
        "unrealized": unrealized,
    })
}

pub fn record_json(rec: &ExceptionalRecord) -> Value {
    envelope("exceptional_record", record_value(rec))
}

pub fn cascade_json(out: &CascadeOutcome) -> Value {
    let failures: Vec<Value> =
        out.failures.iter().map(|f| json!({ "extended": f.extended, "error": f.error.to_string() })).collect();
    envelope(
        "cascade",
        json!({
            "records": out.records.iter().map(record_value).collect::<Vec<_>>(),
            "failures": failures,
            "realized_count": out.realized().count(),
        }),
    )
}

/// `extended,factor_degree,root_lo,root_hi,root,b_lo,b_hi,realized`, one row
/// per root in the window (records without roots get one row with blanks).
pub fn cascade_csv(out: &CascadeOutcome) -> String {
    let mut s = String::from("extended,factor_degree,root_lo,root_hi,root,b_lo,b_hi,realized\n");
    for rec in &out.records {
        let deg = rec.factor.degree().unwrap_or(0);
        let it = rec.extended.to_string();
        let root_cols = |a: &AlgebraicNumber| {
            format!(
                "{},{},{}",
                outward_decimal(a.lo(), 12, false),
                outward_decimal(a.hi(), 12, true),
                sig_digits(a.to_f64(), 6)
            )
        };
        for r in &rec.realized {
            let _ = writeln!(
                s,
                "{it},{deg},{},{},{},true",
                root_cols(&r.root),
                sig_digits(r.interval.lo_f64(), 6),
                sig_digits(r.interval.hi_f64(), 6)
            );
        }
        for a in &rec.unrealized {
            let _ = writeln!(s, "{it},{deg},{},,,false", root_cols(a));
        }
        if rec.realized.is_empty() && rec.unrealized.is_empty() {
            let _ = writeln!(s, "{it},{deg},,,,,,false");
        }
    }
    s
}

fn codim1_value(r: &Codim1Report) -> Value {
    let f = &r.field;
    json!({
        "chart": r.chart,
        "lambda": lambda_json(f),
        "controlled": r.controlled,
        "matrix": r.matrix.iter().map(|row| row.iter().map(|p| p.to_strings()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "det": r.det.to_strings(),
        "det_text": r.det.to_string(),
        "det_sign": r.det_sign.as_i8(),
        "curve": r.curve.iter().map(ratfunc_json).collect::<Vec<_>>(),
        "offsets": r.offsets.iter().map(|e| elem_json(f, e)).collect::<Vec<_>>(),
        "realized_at_lambda": r.realized_at_lambda,
        "window": r.window.as_ref().map(|w| json!({
            "lo": format_rational(&w.lo),
            "hi": format_rational(&w.hi),
            "samples": w.samples.iter().map(format_rational).collect::<Vec<_>>(),
        })),
    })
}

pub fn codim1_json(r: &Codim1Report) -> Value {
    envelope("codim1", codim1_value(r))
}

pub fn classification_json(c: &Classification) -> Value {
    serde_json::to_value(c).expect("plain data")
}

pub fn obstruction_json(o: &Obstruction) -> Value {
    match o {
        Obstruction::Obstructed { report, free_turning_point, horizon } => envelope(
            "obstruction",
            json!({
                "result": "obstructed",
                "free_turning_point": free_turning_point,
                "horizon": horizon,
                "codim1": codim1_value(report),
            }),
        ),
        Obstruction::NotDetermined { reason, classifications } => envelope(
            "obstruction",
            json!({
                "result": "not_determined",
                "reason": reason,
                "classifications": classifications.iter().map(classification_json).collect::<Vec<_>>(),
            }),
        ),
    }
}

pub fn renorm_json(f: &Field, r: &RenormReport) -> Value {
    envelope(
        "renormalization",
        json!({
            "lambda": lambda_json(f),
            "center": r.center,
            "period": r.period,
            "interval": [elem_json(f, &r.interval.0), elem_json(f, &r.interval.1)],
            "image": [elem_json(f, &r.image.0), elem_json(f, &r.image.1)],
            "center_inside": r.center_inside,
            "holds": r.holds,
        }),
    )
}

pub fn scan_json(r: &NonrigidityReport) -> Value {
    let f = &r.field;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| json!({ "b": f.format(&row.b), "c1": row.itineraries[0], "c2": row.itineraries[1] }))
        .collect();
    envelope(
        "nonrigidity_scan",
        json!({
            "lambda": lambda_json(f),
            "horizon": r.horizon,
            "rows": rows,
            "constant": r.constant,
            "distinct": r.distinct,
        }),
    )
}
