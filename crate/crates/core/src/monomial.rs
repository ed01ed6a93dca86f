use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x^a` over a fixed number of variables, with its total degree
/// cached.
///
/// Monomials order by total degree first and then lexicographically with
/// larger leading exponents first, so `x1^2 < x1 x2 < x2^2 < x1^3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
            degree: 0,
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Monomial {
            exponents,
            degree: 1,
        }
    }

    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        let degree = exponents
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exponents, degree })
    }

    /// Product of the listed variables, each to the first power.
    pub fn squarefree<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Self {
        let mut exponents = vec![0; n];
        for v in vars {
            exponents[v] = 1;
        }
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        Monomial::new(exponents)
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        Monomial::new(exponents)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// `self / other`, when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.colon(other))
    }

    /// Drops variable `v`, shifting later variables down by one.
    pub fn without_variable(&self, v: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        let e = exponents.remove(v);
        Monomial {
            exponents,
            degree: self.degree - e,
        }
    }

    /// Moves exponent `i` to position `map[i]` in a ring of `n` variables.
    pub fn remap(&self, map: &[usize], n: usize) -> Monomial {
        let mut exponents = vec![0; n];
        for (i, &e) in self.exponents.iter().enumerate() {
            exponents[map[i]] += e;
        }
        Monomial {
            exponents,
            degree: self.degree,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x1 x3^2`, or `1` for the constant monomial. Variables are 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses one generator line (`x1 x2^3`, or `1`) in a ring of `n` variables.
pub fn parse_monomial(text: &str, n: usize) -> std::result::Result<Monomial, String> {
    let text = text.trim();
    let mut exponents = vec![0u32; n];
    if text == "1" {
        return Ok(Monomial::one(n));
    }
    if text.is_empty() {
        return Err("empty monomial".into());
    }
    for factor in text.split_whitespace() {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (
                v,
                e.parse::<u32>()
                    .map_err(|_| format!("bad exponent in '{factor}'"))?,
            ),
            None => (factor, 1),
        };
        let index: usize = var
            .strip_prefix('x')
            .and_then(|i| i.parse().ok())
            .ok_or_else(|| format!("bad variable '{var}'"))?;
        if index == 0 || index > n {
            return Err(format!("variable '{var}' outside x1..x{n}"));
        }
        exponents[index - 1] = exponents[index - 1]
            .checked_add(exp)
            .ok_or_else(|| "exponent overflow".to_string())?;
    }
    Monomial::new(exponents).map_err(|e| e.to_string())
}
