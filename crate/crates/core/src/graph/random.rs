//! Seeded Erdős–Rényi graphs.
//!
//! The generator is ChaCha8 (`rand_chacha`) seeded with `seed_from_u64`.
//! Candidate edges `(i, j)`, `i < j`, are visited in lexicographic order and
//! each consumes one draw `r` uniform in `0..den`; the edge is kept when
//! `r < num`. Everything is integer arithmetic, so a given `(n, p, seed)`
//! gives the same graph on every platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// An edge probability `num / den` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeProbability {
    num: u64,
    den: u64,
}

impl EdgeProbability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::Parameter(format!(
                "probability {num}/{den} not in [0, 1]"
            )));
        }
        Ok(EdgeProbability { num, den })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for EdgeProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for EdgeProbability {
    type Err = Error;

    /// Accepts `a/b`, an integer `0` or `1`, or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parameter(format!("cannot parse probability '{s}'"));
        if let Some((a, b)) = s.split_once('/') {
            let num = a.trim().parse().map_err(|_| bad())?;
            let den = b.trim().parse().map_err(|_| bad())?;
            return EdgeProbability::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: u64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            let num = int
                .checked_mul(den)
                .and_then(|x| x.checked_add(frac))
                .ok_or_else(bad)?;
            return EdgeProbability::new(num, den);
        }
        EdgeProbability::new(s.parse().map_err(|_| bad())?, 1)
    }
}

pub fn random_graph(n: usize, p: EdgeProbability, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..p.den) < p.num {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}
