//! Exact matrix rank over GF(2), GF(p), and the rationals.
//!
//! Matrices arrive as sparse integer columns `(row, value)`. GF(2) packs
//! each column into `u64` words and reduces against a pivot table keyed by
//! leading bit; GF(p) does the same with dense residues. Over the rationals
//! columns are reduced as sparse integer vectors, cross-multiplying and then
//! dividing out the content, first in `i128` with overflow checks and then,
//! if that overflows, in big integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::field::FieldTag;

/// A sparse column: `(row index, integer entry)` pairs.
pub type SparseColumn = Vec<(usize, i64)>;

pub fn rank(rows: usize, columns: &[SparseColumn], field: FieldTag) -> usize {
    if rows == 0 || columns.is_empty() {
        return 0;
    }
    match field {
        FieldTag::Gf2 => rank_gf2(rows, columns),
        FieldTag::Prime(p) => rank_mod_p(rows, columns, p as u64),
        FieldTag::Rational => sparse_integer_rank::<i128>(rows, columns)
            .or_else(|| sparse_integer_rank::<BigInt>(rows, columns))
            .expect("big integers do not overflow"),
    }
}

fn rank_gf2(rows: usize, columns: &[SparseColumn]) -> usize {
    let words = rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(lead) = leading_bit(&v) {
            match &pivots[lead] {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(rows: usize, columns: &[SparseColumn], p: u64) -> usize {
    // pivots[r] holds a vector whose first nonzero entry is a 1 at row r
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; rows];
        for &(r, x) in col {
            v[r] = (v[r] + x.rem_euclid(p as i64) as u64) % p;
        }
        let mut start = 0;
        while let Some(lead) = (start..rows).find(|&i| v[i] != 0) {
            match &pivots[lead] {
                Some(piv) => {
                    let c = v[lead];
                    for i in lead..rows {
                        v[i] = (v[i] + p - c * piv[i] % p) % p;
                    }
                    start = lead + 1;
                }
                None => {
                    let inv = inverse_mod(v[lead], p);
                    v.iter_mut().for_each(|x| *x = *x * inv % p);
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
fn dense_rows(rows: usize, columns: &[SparseColumn], zero: i128) -> Vec<Vec<i128>> {
    let mut m = vec![vec![zero; columns.len()]; rows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, x) in col {
            m[r][c] += x as i128;
        }
    }
    m
}

/// Integer arithmetic needed by exact elimination.
trait ExactInt: Clone + PartialEq {
    fn one() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*b - c*d`, `None` on overflow.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    /// Nonnegative gcd.
    fn gcd(a: &Self, b: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    /// `(a*b - c*d) / e`, where the division is known to be exact.
    #[cfg(test)]
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some(Self::cross(a, b, c, d)?.div_exact(e))
    }
}

impl ExactInt for i128 {
    fn one() -> Self {
        1
    }

    fn from_i64(x: i64) -> Self {
        x as i128
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }

    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl ExactInt for BigInt {
    fn one() -> Self {
        BigInt::from(1)
    }

    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.magnitude().clone(), b.magnitude().clone());
        while b != num_bigint::BigUint::from(0u8) {
            let r = &a % &b;
            a = b;
            b = r;
        }
        BigInt::from(a)
    }

    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }

    fn is_zero(&self) -> bool {
        self.sign() == num_bigint::Sign::NoSign
    }
}

/// A sparse integer vector sorted by row, with no zero entries.
type SparseVec<T> = Vec<(usize, T)>;

/// Rank over the rationals by reducing each column against pivots keyed by
/// leading (largest) row. `None` if `T` overflows.
fn sparse_integer_rank<T: ExactInt>(rows: usize, columns: &[SparseColumn]) -> Option<usize> {
    let mut pivots: Vec<Option<SparseVec<T>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
        for &(r, x) in col {
            *merged.entry(r).or_insert(0) += x;
        }
        let mut v: SparseVec<T> = merged
            .into_iter()
            .filter(|&(_, x)| x != 0)
            .map(|(r, x)| (r, T::from_i64(x)))
            .collect();
        while let Some((lead, _)) = v.last() {
            let lead = *lead;
            match &pivots[lead] {
                Some(p) => v = eliminate(&v, p)?,
                None => {
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `p_lead * v - v_lead * p` (which clears the shared leading row), divided
/// by its content.
fn eliminate<T: ExactInt>(v: &SparseVec<T>, p: &SparseVec<T>) -> Option<SparseVec<T>> {
    let a = &p.last().unwrap().1;
    let b = &v.last().unwrap().1;
    let zero = T::from_i64(0);
    let mut out: SparseVec<T> = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() - 1 || j < p.len() - 1 {
        let vi = (i < v.len() - 1).then(|| v[i].0);
        let pj = (j < p.len() - 1).then(|| p[j].0);
        let (row, x) = match (vi, pj) {
            (Some(r), Some(s)) if r == s => {
                i += 1;
                j += 1;
                (r, T::cross(a, &v[i - 1].1, b, &p[j - 1].1)?)
            }
            (Some(r), Some(s)) if r < s => {
                i += 1;
                (r, T::cross(a, &v[i - 1].1, b, &zero)?)
            }
            (Some(r), None) => {
                i += 1;
                (r, T::cross(a, &v[i - 1].1, b, &zero)?)
            }
            (_, Some(s)) => {
                j += 1;
                (s, T::cross(a, &zero, b, &p[j - 1].1)?)
            }
            (None, None) => unreachable!(),
        };
        if !x.is_zero() {
            out.push((row, x));
        }
    }
    let content = out.iter().fold(T::from_i64(0), |g, (_, x)| T::gcd(&g, x));
    if !content.is_zero() && content != T::one() {
        out.iter_mut().for_each(|(_, x)| *x = x.div_exact(&content));
    }
    Some(out)
}

#[cfg(test)]
fn bareiss_rank<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                row[j] = T::cross_div(&pivot_row[c], &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[c] = T::cross_div(&pivot_row[c], &lead, &lead, &pivot_row[c], &prev)?;
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Some(r)
}
