//! Executable checks of the regularity bounds and the identities behind
//! them, with flat JSON/CSV reports.
//!
//! Every check returns a report rather than panicking on a failed claim.
//! A failure is *binding* when the claim is a theorem for the input at hand
//! (for example the upper bound on a bipartite graph) and an *observation*
//! otherwise. [`sweep`] runs the checks over graph families and turns
//! binding failures into exit status 1.

mod checks;
mod report;
mod sweep;

use serde::Serialize;

use crate::field::FieldTag;

pub use checks::{
    check_bipartite_power_equality, check_bound_comparison, check_bounds, check_colon_identity,
    check_degree_lemma, check_half_cover_condition, check_restriction_identity, check_sharpness,
    symbolic_excess, SharpnessKind,
};
pub use report::{write_csv, write_json, write_text, Record, SCHEMA_VERSION};
pub use sweep::{sweep, CheckKind, FamilySpec, SweepConfig, SweepItem, SweepOutcome, SweepSummary};

/// Result of evaluating the regularity bounds on one `(graph, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub graph_id: String,
    /// Vertex count after dropping isolated vertices.
    pub n: usize,
    pub k: u32,
    pub bipartite: bool,
    pub unmixed: bool,
    pub claw_free: bool,
    /// `deg J(G)`, the size of a largest minimal vertex cover.
    pub deg: u32,
    /// `reg J(G)^(k)`.
    pub reg: u32,
    /// `k · deg`.
    pub lower: u32,
    /// `(k - 1) · deg + n - 1`.
    pub upper: u32,
    pub field: FieldTag,
    pub holds: bool,
    pub lower_tight: bool,
    pub upper_tight: bool,
}

impl BoundsReport {
    /// Whether the graph lies in one of the classes where both bounds are
    /// theorems.
    pub fn in_class(&self) -> bool {
        self.bipartite || self.unmixed || self.claw_free
    }

    /// `reg - k · deg`.
    pub fn defect(&self) -> i64 {
        self.reg as i64 - self.lower as i64
    }

    /// A failure that contradicts a theorem: the lower bound anywhere, or
    /// either bound inside the classes.
    pub fn is_violation(&self) -> bool {
        self.reg < self.lower || (!self.holds && self.in_class())
    }
}

/// Names of the identity checks, as written in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    DegreeLemma,
    RestrictionIdentity,
    ColonIdentity,
    BipartitePowerEquality,
    HalfCoverCondition,
    Sharpness,
    BoundComparison,
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::DegreeLemma => "degree_lemma",
            Identity::RestrictionIdentity => "restriction_identity",
            Identity::ColonIdentity => "colon_identity",
            Identity::BipartitePowerEquality => "bipartite_power_equality",
            Identity::HalfCoverCondition => "half_cover_condition",
            Identity::Sharpness => "sharpness",
            Identity::BoundComparison => "bound_comparison",
        }
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one identity or inequality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub graph_id: String,
    /// Exponent, when the check has one; used for ordering.
    pub k: Option<u32>,
    /// Remaining parameters as `key=value` pairs.
    pub parameters: String,
    pub pass: bool,
    /// Generator-level evidence; present exactly when `pass` is false.
    pub witness: Option<String>,
    /// Whether a failure here contradicts a theorem.
    pub binding: bool,
}

impl IdentityReport {
    pub(crate) fn new(
        identity: Identity,
        graph_id: impl Into<String>,
        k: Option<u32>,
        parameters: impl Into<String>,
        witness: Option<String>,
    ) -> Self {
        IdentityReport {
            identity,
            graph_id: graph_id.into(),
            k,
            parameters: parameters.into(),
            pass: witness.is_none(),
            witness,
            binding: true,
        }
    }

    pub fn is_violation(&self) -> bool {
        !self.pass && self.binding
    }
}

/// A check that could not run, for example because a cap was hit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub graph_id: String,
    pub k: Option<u32>,
    /// Name of the check that failed to run.
    pub check: &'static str,
    pub message: String,
}
