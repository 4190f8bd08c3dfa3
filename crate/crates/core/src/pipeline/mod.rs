//! The elimination cascade, the DS verdict, the exhaustive small-order
//! oracle and the eigenstructure checks.

mod attachment;
mod eigen;
mod exhaustive;
mod filter;
mod verify;

pub use attachment::{check_attachment_limit, AttachmentReport, CliqueAttachment};
pub use eigen::{check_eigen_structure, EigenReport, EigenvectorCheck, PathValueCheck};
pub use exhaustive::{exhaustive_search, MAX_EXHAUSTIVE_ORDER};
pub use filter::{filter_candidate, FilterKind, FilterOutcome, NRange, PerNRecord, Scope};
pub use verify::{verify_ds, ComboOutcome, DsReport, Verdict, MAX_CERTIFIED_ELL, MAX_N};

use thiserror::Error;

use crate::candidates::CandidateError;
use crate::graph::GraphError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid n range [{min}, {max}]: {reason}")]
    InvalidRange {
        min: usize,
        max: usize,
        reason: String,
    },
    #[error("exhaustive search supports n <= {max}, got {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Candidate(#[from] CandidateError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn ser_graph6<S: serde::Serializer>(g: &crate::graph::Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::graph::graph6_encode(g))
}
