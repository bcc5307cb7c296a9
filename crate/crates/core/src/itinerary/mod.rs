//! Turning-point itineraries: symbolic sequences, the compatibility
//! relation, and the parameter sets realizing a given itinerary.

mod compute;
mod realize;
mod symbol;

pub use compute::itinerary_of;
pub use realize::{realization_interval, RealizationInterval};
pub use symbol::Symbol;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Marks symbols from `start` on as repeating with the given period.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicTail {
    pub start: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Itinerary {
    symbols: Vec<Symbol>,
    tail: Option<PeriodicTail>,
}

impl Itinerary {
    pub fn new(symbols: Vec<Symbol>, tail: Option<PeriodicTail>) -> Result<Self> {
        if let Some(t) = tail {
            if t.period == 0 {
                return Err(Error::BadItinerary("period must be positive".into()));
            }
            if t.start >= symbols.len().max(1) {
                return Err(Error::BadItinerary(format!(
                    "periodic tail starts at {} but only {} symbols are given",
                    t.start,
                    symbols.len()
                )));
            }
            for k in t.start..symbols.len().saturating_sub(t.period) {
                if symbols[k] != symbols[k + t.period] {
                    return Err(Error::BadItinerary(format!(
                        "symbols {k} and {} differ inside the periodic tail",
                        k + t.period
                    )));
                }
            }
        }
        Ok(Itinerary { symbols, tail })
    }

    pub fn finite(symbols: Vec<Symbol>) -> Self {
        Itinerary { symbols, tail: None }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn tail(&self) -> Option<PeriodicTail> {
        self.tail
    }

    /// Number of explicit symbols.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at position `k`, following the periodic tail past the
    /// explicit symbols.
    pub fn symbol_at(&self, k: usize) -> Option<Symbol> {
        if let Some(s) = self.symbols.get(k) {
            return Some(*s);
        }
        let t = self.tail?;
        let k = t.start + (k - t.start) % t.period;
        self.symbols.get(k).copied()
    }

    /// The first `n` symbols, extended by the periodic tail when needed.
    pub fn window(&self, n: usize) -> Option<Vec<Symbol>> {
        (0..n).map(|k| self.symbol_at(k)).collect()
    }

    /// Drops the periodic tail and keeps the first `n` symbols.
    pub fn truncated(&self, n: usize) -> Itinerary {
        Itinerary::finite(self.symbols[..n.min(self.len())].to_vec())
    }

    /// Largest turning-point count `l` needed to hold every symbol.
    pub fn min_turning_count(&self) -> usize {
        self.symbols
            .iter()
            .map(|s| match *s {
                Symbol::C(i) => i,
                Symbol::J(j) => j,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn fits(&self, l: usize) -> bool {
        self.symbols.iter().all(|s| s.fits(l))
    }

    pub fn mirror(&self, l: usize) -> Itinerary {
        Itinerary { symbols: self.symbols.iter().map(|s| s.mirror(l)).collect(), tail: self.tail }
    }

    /// Starts and ends at a turning point with only laps in between.
    pub fn is_bifurcation(&self) -> bool {
        let n = self.symbols.len();
        n >= 2
            && self.symbols[0].is_turning()
            && self.symbols[n - 1].is_turning()
            && self.symbols[1..n - 1].iter().all(|s| !s.is_turning())
    }

    /// Checks the bifurcation shape and returns `(i0, laps, i1)`.
    pub fn bifurcation_parts(&self) -> Result<(usize, &[Symbol], usize)> {
        if !self.is_bifurcation() {
            return Err(Error::BadItinerary(format!(
                "{self} must start and end at a turning point with only laps in between"
            )));
        }
        let n = self.symbols.len();
        Ok((self.symbols[0].index(), &self.symbols[1..n - 1], self.symbols[n - 1].index()))
    }

    fn tokens(&self) -> Vec<String> {
        let mut out: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        if let Some(t) = self.tail {
            out.push("|".into());
            out.push(format!("period={}", t.period));
            if t.start != 0 {
                out.push(format!("start={}", t.start));
            }
        }
        out
    }

    fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut it = tokens.iter().map(|t| t.as_ref());
        let mut period = None;
        let mut start = 0;
        for tok in it.by_ref() {
            if tok == "|" {
                break;
            }
            symbols.push(tok.parse()?);
        }
        for tok in it {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value after '|', got {tok:?}")))?;
            let val: usize = val.parse().map_err(|_| Error::Parse(format!("bad number in {tok:?}")))?;
            match key {
                "period" => period = Some(val),
                "start" => start = val,
                _ => return Err(Error::Parse(format!("unknown itinerary option {key:?}"))),
            }
        }
        let tail = period.map(|period| PeriodicTail { start, period });
        Itinerary::new(symbols, tail)
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tokens().join(" "))
    }
}

impl FromStr for Itinerary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spaced = s.replace('|', " | ").replace([',', '{', '}'], " ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        Itinerary::from_tokens(&tokens)
    }
}

impl Serialize for Itinerary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.tokens().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Itinerary {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let tokens = Vec::<String>::deserialize(d)?;
        Itinerary::from_tokens(&tokens).map_err(serde::de::Error::custom)
    }
}

/// Whether `tilde` is compatible with `it`: every lap symbol of `tilde`
/// appears unchanged in `it`, and every turning symbol `c^i` of `tilde` is
/// matched by `c^i`, `J^{i-1}` or `J^i`.
///
/// Finite itineraries of different lengths cannot be compared; a periodic
/// tail extends its itinerary as far as needed.
pub fn is_compatible(tilde: &Itinerary, it: &Itinerary) -> Result<bool> {
    let n = match (tilde.tail, it.tail) {
        (None, None) if tilde.len() != it.len() => return Err(Error::LengthMismatch),
        (None, None) => tilde.len(),
        (Some(_), None) => it.len(),
        (None, Some(_)) => tilde.len(),
        (Some(a), Some(b)) => {
            let span = a.start.max(b.start) + a.period.lcm(&b.period);
            span.max(tilde.len()).max(it.len())
        }
    };
    let (Some(x), Some(y)) = (tilde.window(n), it.window(n)) else {
        return Err(Error::LengthMismatch);
    };
    Ok(x.iter().zip(&y).all(|(a, b)| a.admits(*b)))
}
