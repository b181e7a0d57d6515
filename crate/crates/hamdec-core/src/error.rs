//! Crate-wide error type.
//!
//! Domain errors mean the caller violated a documented precondition.
//! [`Error::InvariantViolation`] means an algorithm failed although its
//! preconditions held; that is a bug in this crate, never expected.

use alloc::boxed::Box;
use alloc::string::String;

use crate::digraph::{Edge, VertexId};
use crate::partition::PlanReport;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on the inputs was violated.
    Domain(String),
    /// A vertex id does not fit the graph it was used with.
    InvalidVertex {
        vertex: VertexId,
        n_a: usize,
        n_b: usize,
    },
    /// Strict edge removal saw an edge that is not present. Surfacing this
    /// early is how double-use of an edge across cycles gets caught.
    MissingEdge(Edge),
    /// Edge inserted twice; edge sets are strict about duplicates.
    DuplicateEdge(Edge),
    /// Both endpoints of an edge lie in the same vertex class.
    SameSideEdge { from: VertexId, to: VertexId },
    /// The operation needs equal class sizes.
    Unbalanced { n_a: usize, n_b: usize },
    /// The operation needs a regular input; names the first offender.
    NotRegular {
        vertex: VertexId,
        out_degree: usize,
        in_degree: usize,
        expected: usize,
    },
    /// Degree-window precondition of matching extraction, naming the
    /// offending vertex.
    DegreeWindow {
        vertex: VertexId,
        degree: usize,
        low: usize,
        high: usize,
    },
    /// Joint resampling of removed edges could not meet the endpoint
    /// multiplicity bound within the retry budget.
    EndpointBoundExhausted {
        budget: usize,
        bound: usize,
        achieved: usize,
    },
    /// A verify-and-retry loop ran out of attempts in strict mode.
    RetryExhausted {
        stage: &'static str,
        attempts: usize,
        worst: String,
    },
    /// Strict-mode guarantee missed; reports the achieved quantity.
    Shortfall {
        stage: &'static str,
        achieved: f64,
        required: f64,
    },
    /// Strict-mode partition construction failed; carries the full
    /// property report of the best attempt.
    PartitionFailed(Box<PlanReport>),
    /// Greedy connector selection found no usable reservoir vertex for
    /// this path endpoint.
    ConnectorStuck { endpoint: VertexId, need_out: bool },
    /// An exhaustive oracle was called above its hard size cap.
    OracleCapExceeded { vertices: usize, cap: usize },
    /// A bounded retry over admissible choices ran dry; not expected when
    /// the preconditions hold.
    SearchExhausted(String),
    /// The impossible happened; indicates a bug in this crate.
    InvariantViolation(String),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidVertex { vertex, n_a, n_b } => {
                write!(f, "vertex {vertex} outside graph with sides {n_a}/{n_b}")
            }
            Error::MissingEdge(e) => write!(f, "edge {e} is not present"),
            Error::DuplicateEdge(e) => write!(f, "edge {e} already present"),
            Error::SameSideEdge { from, to } => {
                write!(f, "edge {from}->{to} does not cross the bipartition")
            }
            Error::Unbalanced { n_a, n_b } => {
                write!(f, "graph must be balanced, sides have sizes {n_a} and {n_b}")
            }
            Error::NotRegular {
                vertex,
                out_degree,
                in_degree,
                expected,
            } => write!(
                f,
                "graph must be {expected}-regular; {vertex} has out-degree {out_degree}, in-degree {in_degree}"
            ),
            Error::DegreeWindow {
                vertex,
                degree,
                low,
                high,
            } => write!(
                f,
                "degree window violated: {vertex} has degree {degree}, required range [{low}, {high}]"
            ),
            Error::EndpointBoundExhausted {
                budget,
                bound,
                achieved,
            } => write!(
                f,
                "endpoint multiplicity bound {bound} not met after {budget} resamples (best achieved {achieved})"
            ),
            Error::RetryExhausted {
                stage,
                attempts,
                worst,
            } => write!(f, "{stage}: retry budget ({attempts}) exhausted; worst offender: {worst}"),
            Error::Shortfall {
                stage,
                achieved,
                required,
            } => write!(f, "{stage}: achieved {achieved}, required {required}"),
            Error::PartitionFailed(report) => write!(
                f,
                "partition failed after {} attempts ({} of {} checks passing)",
                report.attempts,
                report.checks.iter().filter(|c| c.pass).count(),
                report.checks.len()
            ),
            Error::ConnectorStuck { endpoint, need_out } => write!(
                f,
                "no reservoir connector with an edge {} path endpoint {endpoint}",
                if *need_out { "from" } else { "into" }
            ),
            Error::OracleCapExceeded { vertices, cap } => {
                write!(f, "exhaustive oracle cap is {cap} vertices, graph has {vertices}")
            }
            Error::SearchExhausted(msg) => write!(f, "search exhausted: {msg}"),
            Error::InvariantViolation(msg) => {
                write!(f, "invariant violation (bug): {msg}")
            }
        }
    }
}

impl core::error::Error for Error {}
