//! Multigraded Betti numbers and regularity of monomial ideals.
//!
//! Two independent engines compute the same table:
//!
//! - [`betti_numbers`] uses upper Koszul complexes:
//!   `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))`, where `K^a(I)` is the complex of
//!   squarefree `W ⊆ supp(a)` with `x^a / x^W ∈ I`.
//! - [`betti_via_lcm_order_complex`] uses the lcm lattice `L`:
//!   `β_{i,a}(I) = dim H̃_{i-1}(Δ(1, a)_L)`, the order complex of the
//!   elements of `L` strictly below `a` (with `1` as the bottom).
//!
//! Both scan only multidegrees in the lcm lattice, which is where every
//! nonzero Betti number lives.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::homology::{
    reduced_homology_of_faces, reduced_homology_ranks, SimplicialComplexView, MAX_GROUND_SET,
};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal("zero"));
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal("unit"));
    }
    Ok(())
}

/// Closure of the generators under lcm, in canonical monomial order.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    check_proper(ideal)?;
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let l = x.lcm(g);
                if !seen.contains(&l) {
                    if seen.len() >= cap {
                        return Err(Error::LatticeCap { cap });
                    }
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `K^a(I)` on the support of `a`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplexView> {
    if a.n() != ideal.n() {
        return Err(Error::AmbientMismatch {
            left: ideal.n(),
            right: a.n(),
        });
    }
    let ground: Vec<usize> = a.support().collect();
    if ground.len() > MAX_GROUND_SET {
        return Err(Error::GroundSetCap {
            size: ground.len(),
            cap: MAX_GROUND_SET,
        });
    }
    let mut exps = a.exponents().to_vec();
    let faces = (0..1u32 << ground.len()).filter(|&w| {
        for (pos, &v) in ground.iter().enumerate() {
            exps[v] = a.exponent(v) - (w >> pos & 1);
        }
        ideal.contains(&Monomial::new(exps.clone()).expect("degree fits"))
    });
    let faces: Vec<u32> = faces.collect();
    SimplicialComplexView::new(ground, faces)
}

/// Multigraded Betti numbers `β_{i,a}` of an ideal over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldTag,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    fn from_ranks(
        n: usize,
        field: FieldTag,
        per_degree: Vec<(Monomial, Vec<(isize, usize)>)>,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for (a, ranks) in per_degree {
            for (d, rank) in ranks {
                if rank > 0 {
                    entries.insert(((d + 1) as usize, a.clone()), rank);
                }
            }
        }
        BettiTable { n, field, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `(i, a, β_{i,a})` in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, a), &r)| (*i, a, r))
    }

    /// Graded Betti numbers `β_{i,j} = Σ_{|a| = j} β_{i,a}`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), r) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += r;
        }
        out
    }

    /// `max { |a| - i : β_{i,a} ≠ 0 }`.
    pub fn regularity(&self) -> Option<u32> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() as i64 - *i as i64)
            .max()
            .map(|r| r.max(0) as u32)
    }

    /// Entries the two tables disagree on, formatted one per line.
    pub fn diff(&self, other: &BettiTable) -> Vec<String> {
        let keys: std::collections::BTreeSet<&(usize, Monomial)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|k| {
                let (l, r) = (
                    self.entries.get(k).copied().unwrap_or(0),
                    other.entries.get(k).copied().unwrap_or(0),
                );
                (l != r).then(|| format!("beta_{},{} = {} vs {}", k.0, k.1, l, r))
            })
            .collect()
    }

    /// Parses the text form written by `Display`.
    pub fn parse(text: &str, n: usize, field: FieldTag) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (line_no, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let parts: Vec<&str> = line.split('|').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(bad(format!("expected 'i | a | rank', found '{line}'")));
            }
            let i: usize = parts[0]
                .parse()
                .map_err(|_| bad("bad homological index".into()))?;
            let exps = parts[1]
                .split_whitespace()
                .map(|e| e.parse::<u32>())
                .collect::<std::result::Result<Vec<u32>, _>>()
                .map_err(|_| bad("bad multidegree".into()))?;
            if exps.len() != n {
                return Err(bad(format!(
                    "multidegree has {} entries, expected {n}",
                    exps.len()
                )));
            }
            let rank: usize = parts[2].parse().map_err(|_| bad("bad rank".into()))?;
            if rank > 0 {
                entries.insert((i, Monomial::new(exps)?), rank);
            }
        }
        Ok(BettiTable { n, field, entries })
    }
}

impl fmt::Display for BettiTable {
    /// One line `i | a_1 ... a_n | rank` per nonzero entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, a), r) in &self.entries {
            let exps: Vec<String> = a.exponents().iter().map(u32::to_string).collect();
            writeln!(f, "{i} | {} | {r}", exps.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable over {}:\n{self}", self.field)
    }
}

/// Betti numbers from upper Koszul complexes at each lattice multidegree.
pub fn betti_numbers(ideal: &MonomialIdeal, field: FieldTag, caps: &Caps) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, caps.lattice)?;
    let per_degree = lattice
        .into_par_iter()
        .map(|a| {
            let complex = upper_koszul_complex(ideal, &a)?;
            Ok((a, reduced_homology_ranks(&complex, field)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable::from_ranks(ideal.n(), field, per_degree))
}

/// Betti numbers from order complexes of lower intervals in the lcm lattice.
///
/// Independent of [`betti_numbers`]; used as a cross-check. Each interval's
/// order complex may have at most `caps.lattice` chains.
pub fn betti_via_lcm_order_complex(
    ideal: &MonomialIdeal,
    field: FieldTag,
    caps: &Caps,
) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, caps.lattice)?;
    let per_degree = lattice
        .par_iter()
        .map(|a| {
            // lattice is sorted by degree, so chains are increasing index lists
            let below: Vec<&Monomial> =
                lattice.iter().filter(|b| *b != a && b.divides(a)).collect();
            let faces = order_complex(&below, caps.lattice)?;
            Ok((a.clone(), reduced_homology_of_faces(&faces, field)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable::from_ranks(ideal.n(), field, per_degree))
}

/// All chains (including the empty one) of the poset `elements` under
/// divisibility. `elements` must be sorted by degree.
fn order_complex(elements: &[&Monomial], cap: usize) -> Result<Vec<Vec<u32>>> {
    let up: Vec<Vec<u32>> = (0..elements.len())
        .map(|i| {
            (i + 1..elements.len())
                .filter(|&j| elements[i].divides(elements[j]) && elements[i] != elements[j])
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
    let mut stack: Vec<Vec<u32>> = (0..elements.len() as u32).rev().map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        if faces.len() >= cap {
            return Err(Error::LatticeCap { cap });
        }
        let last = *chain.last().unwrap() as usize;
        for &next in up[last].iter().rev() {
            let mut longer = chain.clone();
            longer.push(next);
            stack.push(longer);
        }
        faces.push(chain);
    }
    Ok(faces)
}

/// `reg(I)`. The unit ideal has regularity 0 by convention.
pub fn regularity(ideal: &MonomialIdeal, field: FieldTag, caps: &Caps) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(0);
    }
    Ok(betti_numbers(ideal, field, caps)?
        .regularity()
        .expect("a proper ideal has generators"))
}
