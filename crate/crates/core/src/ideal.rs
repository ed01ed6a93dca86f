//! Monomial ideals stored by their minimal generators.

use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::{parse_monomial, Monomial};

/// A monomial ideal in `n` variables, kept as its minimal generating set in
/// canonical [`Monomial`] order. The zero ideal has no generators; the unit
/// ideal has the single generator `1`. Two ideals are equal exactly when
/// their generator sequences are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

/// Bitmask of variables with a positive exponent, used to skip divisibility
/// checks that cannot succeed. Variables past 63 share the top bit.
fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | 1 << i.min(63))
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.n() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            all.push(g);
        }
        Ok(MonomialIdeal {
            n,
            generators: minimal_elements(all),
        })
    }

    /// The ideal generated by the variables in `vars`.
    pub fn variables<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Self {
        let gens: Vec<Monomial> = vars.into_iter().map(|v| Monomial::var(n, v)).collect();
        MonomialIdeal {
            n,
            generators: minimal_elements(gens),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Largest degree of a minimal generator; `0` for the unit ideal.
    pub fn degree(&self) -> Result<u32> {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn check_cap(count: usize, cap: usize) -> Result<()> {
        if count > cap {
            return Err(Error::GeneratorCap { count, cap });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_capped(other, Caps::default().generators)
    }

    /// Intersection via pairwise lcms of generators. Fails when the number
    /// of pairs exceeds `cap`.
    pub fn intersect_capped(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        Self::check_cap(self.len() * other.len(), cap)?;
        let lcms = self
            .generators
            .iter()
            .flat_map(|u| other.generators.iter().map(move |v| u.lcm(v)));
        Ok(MonomialIdeal {
            n: self.n,
            generators: minimal_elements(lcms.collect()),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.product_capped(other, Caps::default().generators)
    }

    pub fn product_capped(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        Self::check_cap(self.len() * other.len(), cap)?;
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for u in &self.generators {
            for v in &other.generators {
                prods.push(u.mul(v)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            generators: minimal_elements(prods),
        })
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        self.power_capped(k, Caps::default().generators)
    }

    /// `k`-fold product; the zeroth power is the unit ideal.
    pub fn power_capped(&self, k: u32, cap: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product_capped(self, cap)?;
        }
        Ok(acc)
    }

    /// `(self : m)`, generated by `u / gcd(u, m)` over the generators `u`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.n(),
            });
        }
        let gens = self.generators.iter().map(|u| u.colon(m)).collect();
        Ok(MonomialIdeal {
            n: self.n,
            generators: minimal_elements(gens),
        })
    }

    /// `self ∩ K[x_j : j ≠ v]`, re-indexed to `n - 1` variables.
    ///
    /// A monomial free of `v` lies in the ideal exactly when a `v`-free
    /// generator divides it, so this just filters generators.
    pub fn restrict_away(&self, v: usize) -> Result<MonomialIdeal> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        let gens: Vec<Monomial> = self
            .generators
            .iter()
            .filter(|g| g.exponent(v) == 0)
            .map(|g| g.without_variable(v))
            .collect();
        // filtering keeps the set minimal and sorted
        Ok(MonomialIdeal {
            n: self.n - 1,
            generators: gens,
        })
    }

    /// Extends the ideal to a ring of `n` variables, sending variable `i`
    /// to `map[i]`. `map` must be injective.
    pub fn embed(&self, map: &[usize], n: usize) -> Result<MonomialIdeal> {
        if map.len() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: map.len(),
            });
        }
        let mut seen = vec![false; n];
        for &t in map {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::Parameter(
                    "variable map must be injective into the target ring".into(),
                ));
            }
        }
        let gens = self.generators.iter().map(|g| g.remap(map, n)).collect();
        Ok(MonomialIdeal {
            n,
            generators: minimal_elements(gens),
        })
    }

    /// `m · self`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.n(),
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.mul(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            n: self.n,
            generators: gens,
        }
        .resorted())
    }

    fn resorted(mut self) -> Self {
        self.generators.sort();
        self
    }

    /// Generators of `self` missing from `other` and vice versa, one per
    /// line, prefixed with `-` and `+`.
    pub fn diff(&self, other: &MonomialIdeal) -> String {
        let mut out = Vec::new();
        for g in &self.generators {
            if !other.generators.contains(g) {
                out.push(format!("-{g}"));
            }
        }
        for g in &other.generators {
            if !self.generators.contains(g) {
                out.push(format!("+{g}"));
            }
        }
        out.join("; ")
    }
}

/// Divisibility-minimal elements of `gens`, deduplicated and sorted.
pub(crate) fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    for g in gens {
        let mask = support_mask(&g);
        let divisible = kept
            .iter()
            .zip(&masks)
            .any(|(k, &km)| km & !mask == 0 && k.divides(&g));
        if !divisible {
            kept.push(g);
            masks.push(mask);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    /// `ring n` followed by one generator per line in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.n)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing 'ring n' header".into(),
        })?;
        let n: usize = header
            .strip_prefix("ring")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or(Error::Parse {
                line,
                message: format!("expected 'ring n', found '{header}'"),
            })?;
        let mut gens = Vec::new();
        for (line, text) in lines {
            gens.push(parse_monomial(text, n).map_err(|message| Error::Parse { line, message })?);
        }
        MonomialIdeal::minimalize(n, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]), ideal(2, &[&[1, 0]]));
        let big = ideal(
            3,
            &[
                &[0, 2, 0],
                &[1, 2, 0],
                &[0, 2, 1],
                &[1, 1, 1],
                &[2, 1, 1],
                &[1, 1, 2],
                &[2, 0, 2],
                &[2, 2, 0],
                &[0, 2, 2],
            ],
        );
        assert_eq!(
            big.generators(),
            &[m(&[0, 2, 0]), m(&[1, 1, 1]), m(&[2, 0, 2])]
        );
        assert!(MonomialIdeal::minimalize(3, []).unwrap().is_zero());
        assert!(MonomialIdeal::minimalize(3, [m(&[1, 0])]).is_err());
    }

    #[test]
    fn intersection_examples() {
        let a = MonomialIdeal::variables(3, [0, 1]);
        let b = MonomialIdeal::variables(3, [1, 2]);
        assert_eq!(
            a.intersect(&b).unwrap(),
            ideal(3, &[&[0, 1, 0], &[1, 0, 1]])
        );
        assert_eq!(a.intersect(&MonomialIdeal::unit(3)).unwrap(), a);
        let a2 = a.power(2).unwrap();
        let b2 = b.power(2).unwrap();
        assert_eq!(
            a2.intersect(&b2).unwrap(),
            ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]])
        );
    }

    #[test]
    fn power_examples() {
        let a = MonomialIdeal::variables(2, [0, 1]);
        assert_eq!(a.power(2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(a.power(1).unwrap(), a);
        assert!(a.power(0).unwrap().is_unit());

        let j_k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = j_k3.power(2).unwrap();
        assert_eq!(
            sq.generators(),
            &[
                m(&[2, 2, 0]),
                m(&[2, 1, 1]),
                m(&[2, 0, 2]),
                m(&[1, 2, 1]),
                m(&[1, 1, 2]),
                m(&[0, 2, 2])
            ]
        );
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(
            i.colon(&m(&[1, 0])).unwrap(),
            MonomialIdeal::variables(2, [0, 1])
        );
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
    }

    #[test]
    fn restrict_away_examples() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(i.restrict_away(0).unwrap(), ideal(2, &[&[1, 1]]));
        assert!(MonomialIdeal::unit(3).restrict_away(1).unwrap().is_unit());
        let j_p3 = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(j_p3.restrict_away(2).unwrap(), ideal(2, &[&[0, 1]]));
    }

    #[test]
    fn degrees() {
        assert_eq!(MonomialIdeal::unit(3).degree().unwrap(), 0);
        assert_eq!(MonomialIdeal::zero(3).degree(), Err(Error::ZeroIdeal));
        assert_eq!(ideal(3, &[&[0, 1, 0], &[1, 0, 1]]).degree().unwrap(), 2);
    }

    #[test]
    fn caps_abort() {
        let a = MonomialIdeal::variables(4, 0..4);
        assert!(matches!(
            a.intersect_capped(&a, 15),
            Err(Error::GeneratorCap { count: 16, cap: 15 })
        ));
        assert!(a.power_capped(3, 10).is_err());
    }

    #[test]
    fn equality_is_canonical() {
        let a = MonomialIdeal::variables(2, [0, 1]);
        let b = ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(a, b);
    }

    #[test]
    fn serialization_round_trip() {
        let i = ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]]);
        let text = i.to_string();
        assert_eq!(text, "ring 3\nx2^2\nx1 x2 x3\nx1^2 x3^2\n");
        assert_eq!(text.parse::<MonomialIdeal>().unwrap(), i);
        assert_eq!(MonomialIdeal::unit(2).to_string(), "ring 2\n1\n");
        assert!("ring 2\n1\n".parse::<MonomialIdeal>().unwrap().is_unit());
        assert!("ring 2\n".parse::<MonomialIdeal>().unwrap().is_zero());
        assert!(matches!(
            "ring 2\nx3\n".parse::<MonomialIdeal>(),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn embed_and_scale() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let e = i.embed(&[0, 2], 3).unwrap();
        assert_eq!(e, ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert!(i.embed(&[1, 1], 3).is_err());
        let s = e.scale(&m(&[0, 1, 0])).unwrap();
        assert_eq!(s, ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
    }
}
