//! Cover ideals of graphs, symbolic powers of squarefree monomial ideals,
//! and exact Castelnuovo–Mumford regularity via multigraded Betti numbers.
//!
//! The [`verify`] module turns the regularity bounds
//! `k·deg J(G) ≤ reg J(G)^(k) ≤ (k-1)·deg J(G) + |V(G)| - 1`
//! and the identities behind them into checks that run over graph families.

pub mod betti;
pub mod caps;
pub mod cover;
pub mod error;
pub mod field;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod verify;

pub use betti::{
    betti_numbers, betti_via_lcm_order_complex, lcm_lattice, regularity, upper_koszul_complex,
    BettiTable,
};
pub use caps::Caps;
pub use cover::{cover_ideal, edge_symbolic_power, minimal_primes, prime_power, symbolic_power};
pub use error::{Error, Result};
pub use field::FieldTag;
pub use graph::{
    enumerate_graphs, parse_edge_list, random_graph, write_edge_list, EdgeProbability, Graph,
    VertexSet,
};
pub use homology::{reduced_homology_ranks, SimplicialComplexView};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
