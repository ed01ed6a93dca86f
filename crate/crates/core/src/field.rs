use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti number computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    #[default]
    Gf2,
    Rational,
    /// `GF(p)` for an odd prime `p`; build with [`FieldTag::prime`].
    Prime(u32),
}

/// Largest characteristic accepted for `GF(p)`; keeps products in `u64`.
pub const MAX_CHARACTERISTIC: u32 = 1 << 31;

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64)
            .all(|d| p % d != 0)
}

impl FieldTag {
    /// `GF(p)`; `p = 2` gives [`FieldTag::Gf2`].
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) || p > MAX_CHARACTERISTIC {
            return Err(Error::Parameter(format!("{p} is not a supported prime")));
        }
        Ok(if p == 2 {
            FieldTag::Gf2
        } else {
            FieldTag::Prime(p)
        })
    }

    /// `0` for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldTag::Gf2 => 2,
            FieldTag::Rational => 0,
            FieldTag::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Gf2 => f.write_str("GF(2)"),
            FieldTag::Rational => f.write_str("QQ"),
            FieldTag::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    /// Accepts `gf2`, `rational` / `qq` / `q`, and `gfP` or `GF(P)` for a prime `P`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "rational" | "rationals" | "qq" | "q" => return Ok(FieldTag::Rational),
            _ => {}
        }
        let digits = lower
            .strip_prefix("gf")
            .map(|rest| rest.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::Parameter(format!("unknown field '{s}'")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::Parameter(format!("unknown field '{s}'")))?;
        FieldTag::prime(p)
    }
}

impl Serialize for FieldTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
