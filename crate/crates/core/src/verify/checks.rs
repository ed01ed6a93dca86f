use crate::betti::regularity;
use crate::caps::Caps;
use crate::cover::{cover_ideal, edge_symbolic_power, symbolic_power};
use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{BoundsReport, Identity, IdentityReport};

fn require_k(k: u32, min: u32) -> Result<()> {
    if k < min {
        return Err(Error::Precondition(format!(
            "k must be at least {min}, got {k}"
        )));
    }
    Ok(())
}

/// `deg I^(k) ≥ k · deg I`, and `u^k` is a minimal generator of `I^(k)` for
/// every minimal generator `u` of `I`.
pub fn check_degree_lemma(
    ideal: &MonomialIdeal,
    k: u32,
    caps: &Caps,
    label: &str,
) -> Result<IdentityReport> {
    require_k(k, 1)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let sym = symbolic_power(ideal, k, caps)?;
    let (deg, sym_deg) = (ideal.degree()?, sym.degree()?);
    let mut problems = Vec::new();
    if sym_deg < k * deg {
        problems.push(format!("deg I^(k) = {sym_deg} < {}", k * deg));
    }
    for u in ideal.generators() {
        let uk = u.pow(k)?;
        if !sym.generators().contains(&uk) {
            problems.push(format!("({u})^{k} is not a minimal generator"));
        }
    }
    let witness = (!problems.is_empty()).then(|| problems.join("; "));
    let params = format!("deg={deg},deg_sym={sym_deg}");
    Ok(IdentityReport::new(
        Identity::DegreeLemma,
        label,
        Some(k),
        params,
        witness,
    ))
}

/// Both regularity bounds for `J(G)^(k)`. Isolated vertices are dropped
/// first, so `n` counts only the remaining vertices.
pub fn check_bounds(g: &Graph, k: u32, field: FieldTag, caps: &Caps) -> Result<BoundsReport> {
    require_k(k, 1)?;
    let h = g.without_isolated_vertices();
    if h.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let deg = cover_ideal(&h).degree()?;
    let reg = regularity(&edge_symbolic_power(&h, k, caps)?, field, caps)?;
    let n = h.n() as u32;
    let (lower, upper) = (k * deg, (k - 1) * deg + n - 1);
    Ok(BoundsReport {
        graph_id: g.id(),
        n: h.n(),
        k,
        bipartite: h.is_bipartite(),
        unmixed: h.is_unmixed(),
        claw_free: h.is_claw_free(),
        deg,
        reg,
        lower,
        upper,
        field,
        holds: lower <= reg && reg <= upper,
        lower_tight: reg == lower,
        upper_tight: reg == upper,
    })
}

/// `J(G) ∩ S_v = u · J(G ∖ N[v]) · S_v`, where `S_v` drops `x_v` and `u` is
/// the product of the neighbors of `v`. Variables are matched by label.
pub fn check_restriction_identity(g: &Graph, v: usize) -> Result<IdentityReport> {
    let n = g.n();
    let neighbors = g.neighbors(v)?;
    let lhs = cover_ideal(g).restrict_away(v)?;

    // position of each surviving label in the ring without x_v
    let index_without_v = |label: &str| {
        let w = g
            .vertex_by_label(label)
            .expect("labels survive vertex deletion");
        if w < v {
            w
        } else {
            w - 1
        }
    };
    let rest = g.delete_vertices(&g.closed_neighborhood(v)?)?;
    let map: Vec<usize> = rest.labels().iter().map(|l| index_without_v(l)).collect();
    let u = Monomial::squarefree(
        n - 1,
        neighbors.iter().map(|w| if w < v { w } else { w - 1 }),
    );
    let rhs = cover_ideal(&rest).embed(&map, n - 1)?.scale(&u)?;

    let witness = (lhs != rhs).then(|| lhs.diff(&rhs));
    Ok(IdentityReport::new(
        Identity::RestrictionIdentity,
        g.id(),
        None,
        format!("v={}", g.label(v)),
        witness,
    ))
}

/// `(J(G)^(k) : x_1 ⋯ x_n) = J(G)^(k-2)`.
pub fn check_colon_identity(g: &Graph, k: u32, caps: &Caps) -> Result<IdentityReport> {
    require_k(k, 2)?;
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let all = Monomial::squarefree(g.n(), 0..g.n());
    let lhs = edge_symbolic_power(g, k, caps)?.colon(&all)?;
    let rhs = edge_symbolic_power(g, k - 2, caps)?;
    let witness = (lhs != rhs).then(|| lhs.diff(&rhs));
    Ok(IdentityReport::new(
        Identity::ColonIdentity,
        g.id(),
        Some(k),
        "",
        witness,
    ))
}

/// `J(G)^k = J(G)^(k)` for bipartite `G`.
pub fn check_bipartite_power_equality(g: &Graph, k: u32, caps: &Caps) -> Result<IdentityReport> {
    require_k(k, 1)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let j = cover_ideal(g);
    let ordinary = j.power_capped(k, caps.generators)?;
    let symbolic = symbolic_power(&j, k, caps)?;
    let witness = (ordinary != symbolic).then(|| ordinary.diff(&symbolic));
    Ok(IdentityReport::new(
        Identity::BipartitePowerEquality,
        g.id(),
        Some(k),
        "",
        witness,
    ))
}

/// A minimal generator of `J(G)^(k)` outside `J(G)^k`, if any.
pub fn symbolic_excess(g: &Graph, k: u32, caps: &Caps) -> Result<Option<Monomial>> {
    require_k(k, 1)?;
    let j = cover_ideal(g);
    let ordinary = j.power_capped(k, caps.generators)?;
    let symbolic = symbolic_power(&j, k, caps)?;
    Ok(symbolic
        .generators()
        .iter()
        .find(|m| !ordinary.contains(m))
        .cloned())
}

/// Some minimal vertex cover has at least `|V| / 2` vertices.
///
/// The claim is binding for bipartite, unmixed and claw-free graphs; for
/// other graphs a failure is recorded as an observation.
pub fn check_half_cover_condition(g: &Graph) -> Result<IdentityReport> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    let (largest, n) = (g.max_minimal_cover_size(), g.n());
    let witness =
        (2 * largest < n).then(|| format!("largest minimal cover has {largest} of {n} vertices"));
    let mut report = IdentityReport::new(
        Identity::HalfCoverCondition,
        g.id(),
        None,
        format!("max_cover={largest},n={n}"),
        witness,
    );
    report.binding = g.is_bipartite() || g.is_unmixed() || g.is_claw_free();
    Ok(report)
}

/// Families on which the bounds are attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SharpnessKind {
    /// `K_{1,n}`, using ordinary powers.
    Star(usize),
    /// `K_n`.
    Complete(usize),
    /// The cone over a graph with independence number at most 2.
    Cone(Graph),
}

impl SharpnessKind {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            SharpnessKind::Star(n) => Graph::star(*n),
            SharpnessKind::Complete(n) if *n >= 2 => Graph::complete(*n),
            SharpnessKind::Complete(n) => Err(Error::Precondition(format!("K{n} has no edges"))),
            SharpnessKind::Cone(h) => {
                if h.n() == 0 {
                    return Err(Error::Precondition("cone base must have a vertex".into()));
                }
                if h.independence_number() > 2 {
                    return Err(Error::Precondition(format!(
                        "cone base {} has independence number {} > 2",
                        h.id(),
                        h.independence_number()
                    )));
                }
                Graph::cone(h)
            }
        }
    }
}

/// `reg = k · deg = (k - 1) · deg + |V| - 1` on a sharpness family. For
/// cones also `deg = |V| - 1`.
pub fn check_sharpness(
    kind: &SharpnessKind,
    k: u32,
    field: FieldTag,
    caps: &Caps,
) -> Result<IdentityReport> {
    require_k(k, 1)?;
    let g = kind.graph()?;
    let j = cover_ideal(&g);
    let deg = j.degree()?;
    let power = match kind {
        SharpnessKind::Star(_) => j.power_capped(k, caps.generators)?,
        _ => edge_symbolic_power(&g, k, caps)?,
    };
    let reg = regularity(&power, field, caps)?;
    let n = g.n() as u32;
    let (lower, upper) = (k * deg, (k - 1) * deg + n - 1);
    let mut problems = Vec::new();
    if reg != lower || reg != upper {
        problems.push(format!("reg {reg}, k*deg {lower}, (k-1)*deg+n-1 {upper}"));
    }
    if matches!(kind, SharpnessKind::Cone(_)) && deg + 1 != n {
        problems.push(format!("deg {deg} != |V|-1 = {}", n - 1));
    }
    let witness = (!problems.is_empty()).then(|| problems.join("; "));
    let params = format!("deg={deg},reg={reg},field={field}");
    Ok(IdentityReport::new(
        Identity::Sharpness,
        g.id(),
        Some(k),
        params,
        witness,
    ))
}

/// `(k - 1) · deg + n - 1 ≤ k · deg + reg J(G) - 1` for bipartite `G`
/// without isolated vertices.
pub fn check_bound_comparison(
    g: &Graph,
    k: u32,
    field: FieldTag,
    caps: &Caps,
) -> Result<IdentityReport> {
    require_k(k, 1)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let j = cover_ideal(g);
    let (deg, reg1) = (j.degree()?, regularity(&j, field, caps)?);
    let n = g.n() as u32;
    let (new, old) = ((k - 1) * deg + n - 1, k * deg + reg1 - 1);
    let witness = (new > old).then(|| format!("{new} > {old}"));
    let params = format!("new={new},old={old},reg1={reg1}");
    Ok(IdentityReport::new(
        Identity::BoundComparison,
        g.id(),
        Some(k),
        params,
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAPS: Caps = Caps {
        generators: 200_000,
        lattice: 100_000,
    };

    fn named(s: &str) -> Graph {
        Graph::named(s).unwrap()
    }

    #[test]
    fn degree_lemma_examples() {
        let j_p3 = cover_ideal(&named("P3"));
        let r = check_degree_lemma(&j_p3, 2, &CAPS, "P3").unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.parameters, "deg=2,deg_sym=4");
        assert!(check_degree_lemma(&j_p3, 1, &CAPS, "P3").unwrap().pass);
        let r = check_degree_lemma(&cover_ideal(&named("K3")), 3, &CAPS, "K3").unwrap();
        assert!(r.pass);
        assert_eq!(r.parameters, "deg=2,deg_sym=6");
    }

    #[test]
    fn bounds_examples() {
        let r = check_bounds(&named("S3"), 2, FieldTag::Gf2, &CAPS).unwrap();
        assert_eq!((r.deg, r.reg, r.lower, r.upper), (3, 6, 6, 6));
        assert!(r.holds && r.lower_tight && r.upper_tight);

        let r = check_bounds(&named("K4"), 2, FieldTag::Gf2, &CAPS).unwrap();
        assert_eq!((r.deg, r.reg, r.lower, r.upper), (3, 6, 6, 6));
        assert!(r.holds && r.lower_tight && r.upper_tight);

        let r = check_bounds(&named("P3"), 3, FieldTag::Rational, &CAPS).unwrap();
        assert_eq!((r.deg, r.reg, r.lower, r.upper), (2, 6, 6, 6));
        assert!(r.lower_tight && r.upper_tight);
        assert_eq!(r.defect(), 0);
    }

    #[test]
    fn bounds_drop_isolated_vertices() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = check_bounds(&g, 1, FieldTag::Gf2, &CAPS).unwrap();
        assert_eq!((r.n, r.deg, r.reg, r.upper), (3, 2, 2, 2));
        assert!(check_bounds(&Graph::edgeless(3).unwrap(), 1, FieldTag::Gf2, &CAPS).is_err());
    }

    #[test]
    fn restriction_identity_examples() {
        let p3 = named("P3");
        assert!(check_restriction_identity(&p3, 1).unwrap().pass);
        let k2 = named("K2");
        assert!(check_restriction_identity(&k2, 0).unwrap().pass);
        assert!(check_restriction_identity(&k2, 1).unwrap().pass);
        assert!(check_restriction_identity(&k2, 2).is_err());
    }

    #[test]
    fn colon_identity_examples() {
        assert!(check_colon_identity(&named("P3"), 2, &CAPS).unwrap().pass);
        assert!(check_colon_identity(&named("K3"), 3, &CAPS).unwrap().pass);
        assert!(check_colon_identity(&named("C5"), 4, &CAPS).unwrap().pass);
        assert!(check_colon_identity(&named("P3"), 1, &CAPS).is_err());
    }

    #[test]
    fn bipartite_power_equality_examples() {
        assert!(
            check_bipartite_power_equality(&named("P3"), 2, &CAPS)
                .unwrap()
                .pass
        );
        assert!(
            check_bipartite_power_equality(&named("C4"), 3, &CAPS)
                .unwrap()
                .pass
        );
        assert_eq!(
            check_bipartite_power_equality(&named("K3"), 2, &CAPS),
            Err(Error::NotBipartite)
        );
        let w = symbolic_excess(&named("K3"), 2, &CAPS).unwrap().unwrap();
        assert_eq!(w.to_string(), "x1 x2 x3");
        assert_eq!(symbolic_excess(&named("P3"), 2, &CAPS).unwrap(), None);
    }

    #[test]
    fn half_cover_examples() {
        let r = check_half_cover_condition(&named("G3,3")).unwrap();
        assert!(!r.pass && !r.binding);
        assert_eq!(r.parameters, "max_cover=5,n=12");
        assert!(r.witness.is_some());
        let r = check_half_cover_condition(&named("C5")).unwrap();
        assert!(r.pass && r.binding);
        assert!(check_half_cover_condition(&named("K2,3")).unwrap().pass);
        assert_eq!(
            check_half_cover_condition(&named("E4")),
            Err(Error::IsolatedVertices)
        );
    }

    #[test]
    fn sharpness_examples() {
        assert!(
            check_sharpness(&SharpnessKind::Star(3), 2, FieldTag::Gf2, &CAPS)
                .unwrap()
                .pass
        );
        assert!(
            check_sharpness(&SharpnessKind::Complete(4), 2, FieldTag::Gf2, &CAPS)
                .unwrap()
                .pass
        );
        let r =
            check_sharpness(&SharpnessKind::Cone(named("C5")), 1, FieldTag::Gf2, &CAPS).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.parameters, "deg=5,reg=5,field=GF(2)");
        let wide = SharpnessKind::Cone(named("E3"));
        assert!(check_sharpness(&wide, 1, FieldTag::Gf2, &CAPS).is_err());
    }

    #[test]
    fn bound_comparison_examples() {
        for k in 1..=3 {
            let r = check_bound_comparison(&named("P3"), k, FieldTag::Gf2, &CAPS).unwrap();
            assert!(r.pass);
            assert_eq!(
                r.parameters,
                format!("new={},old={},reg1=2", 2 * k, 2 * k + 1)
            );
        }
        assert!(
            check_bound_comparison(&named("C4"), 2, FieldTag::Gf2, &CAPS)
                .unwrap()
                .pass
        );
        assert!(
            check_bound_comparison(&named("K3,3"), 2, FieldTag::Gf2, &CAPS)
                .unwrap()
                .pass
        );
        assert_eq!(
            check_bound_comparison(&named("K3"), 1, FieldTag::Gf2, &CAPS),
            Err(Error::NotBipartite)
        );
    }
}
