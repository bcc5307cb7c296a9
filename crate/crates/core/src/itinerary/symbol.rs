use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One itinerary symbol: a turning point `c^i` (1-based) or an open lap
/// `J^j` (0-based, `J^j` lies between `c^j` and `c^{j+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    C(usize),
    J(usize),
}

impl Symbol {
    pub fn is_turning(self) -> bool {
        matches!(self, Symbol::C(_))
    }

    pub fn index(self) -> usize {
        match self {
            Symbol::C(i) | Symbol::J(i) => i,
        }
    }

    /// Image under the orientation-reversing relabelling of a map with `l`
    /// turning points: `c^i ↔ c^{l+1-i}`, `J^j ↔ J^{l-j}`.
    pub fn mirror(self, l: usize) -> Symbol {
        match self {
            Symbol::C(i) => Symbol::C(l + 1 - i),
            Symbol::J(j) => Symbol::J(l - j),
        }
    }

    /// True when the symbol is valid for a map with `l` turning points.
    pub fn fits(self, l: usize) -> bool {
        match self {
            Symbol::C(i) => (1..=l).contains(&i),
            Symbol::J(j) => j <= l,
        }
    }

    /// Whether `other` is allowed where `self` stands in a compatible
    /// itinerary: a turning point admits itself and both adjacent laps.
    pub fn admits(self, other: Symbol) -> bool {
        match self {
            Symbol::J(_) => self == other,
            Symbol::C(i) => other == self || other == Symbol::J(i - 1) || other == Symbol::J(i),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::C(i) => write!(f, "c{i}"),
            Symbol::J(j) => write!(f, "J{j}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let bad = || Error::Parse(format!("bad symbol {s:?}, expected c<i> or J<j>"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let idx: usize = chars.as_str().parse().map_err(|_| bad())?;
        match head {
            'c' | 'C' if idx >= 1 => Ok(Symbol::C(idx)),
            'J' | 'j' => Ok(Symbol::J(idx)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
