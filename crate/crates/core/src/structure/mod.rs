//! Constructive structure results, each producing a certificate that an
//! independent verifier can check.
//!
//! Builders classify vertices through [`crate::classify`]. Verifiers never
//! do: they recompute everything from nullities of subgraphs, using
//! `A(v) = 1 − ν(G − v)` on always-solvable `G`.

mod chain;
mod decompose;
mod join;
mod pass;

pub use chain::{build_chain, verify_chain, ChainCertificate};
pub use decompose::{decompose_tree, verify_decomposition, DecompositionCertificate};
pub use join::{
    canonical_type, join_report, predicted_delta_nu, predicted_post_activation, run_table_check,
    star_join_check, table_row, JoinReport, RowStats, StarJoin, TableCheckSummary, TableRow,
    TableViolation, TABLE,
};
pub use pass::{min_pass_tree, pi_exact, verify_pass, PassCertificate, PI_EXACT_MAX_N};

use serde::{Deserialize, Serialize};

/// Outcome of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(r) => Some(r),
        }
    }
}

impl From<Result<(), String>> for Verdict {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Verdict::Valid,
            Err(reason) => Verdict::Invalid(reason),
        }
    }
}

/// Any of the three certificate kinds, distinguished by JSON shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Chain(ChainCertificate),
    Pass(PassCertificate),
    Decomposition(DecompositionCertificate),
}
