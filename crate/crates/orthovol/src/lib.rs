//! Combinatorial models, realizability tests, volumes and volume bounds of
//! right-angled hyperbolic 3-polyhedra.
//!
//! A finite-volume polyhedron in hyperbolic 3-space with all dihedral angles
//! equal to π/2 is determined, up to isometry, by its combinatorial type.
//! This crate works purely with the combinatorics:
//!
//! * [`polytope`] — the combinatorial model (faces as vertex cycles) and the
//!   exact counting invariants: incidence profiles, quasi-adjacency,
//!   quasi-incidence and face-neighbour counts.
//! * [`andreev`] — realizability of a combinatorial type as a right-angled
//!   polyhedron, with explicit witnesses for the forbidden configurations.
//! * [`mod@lobachevsky`] — rigorous evaluation of the Lobachevsky function and
//!   the octahedron/tetrahedron volume constants.
//! * [`volumes`] — closed-form volumes of the antiprism and Loebell families.
//! * [`bounds`] — every vertex-count volume bound as an evaluable formula,
//!   plus per-polytope bound reports.
//! * [`surgery`] — combinatorial face-doubling and iterated doubling chains.
//! * [`harness`] — machine verification of the combinatorial existence lemmas
//!   and bound-consistency properties over generated catalogs.
//! * [`catalog`] — generators for the standard families and the default
//!   verification catalog.
//! * [`mod@format`] / [`report`] — the text file format and the CSV report.

pub mod andreev;
pub mod bounds;
pub mod catalog;
pub mod format;
pub mod harness;
pub mod lobachevsky;
pub mod polytope;
pub mod report;
pub mod surgery;
pub mod volumes;

pub use andreev::{classify, AndreevWitness, RealizabilityClass};
pub use bounds::{bound_report, BoundId, BoundReport};
pub use lobachevsky::{lobachevsky, v3, v8, Angle, ErrBoundedValue};
pub use polytope::{CombinatorialPolytope, IncidenceProfile, Polytope, VertexKind};
pub use surgery::{double_along_face, double_chain, FaceSelector};

use thiserror::Error;

/// Vertex identifier: an index into `0..V`.
pub type VertexId = usize;
/// Face identifier: an index into the face list.
pub type FaceId = usize;

/// An undirected edge, stored with its endpoints sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    /// Whether the two edges share an endpoint.
    pub fn touches(&self, other: &Edge) -> bool {
        self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Errors shared by the combinatorial and numerical operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polytope failed validation: {0}")]
    InvalidPolytope(polytope::ValidationReport),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("unknown face id {0}")]
    UnknownFace(FaceId),
    #[error("no edge {0} in polytope")]
    UnknownEdge(Edge),
    #[error("formula requires all-ideal polytope")]
    RequiresAllIdeal,
    #[error("edge quasi-incidence defined for compact polytopes (endpoint of {0} is not trivalent)")]
    RequiresTrivalentEndpoints(Edge),
    #[error("overfull vertex {0} present (valence >= 5)")]
    OverfullVertexPresent(VertexId),
    #[error("{what} out of range: got {got}, need {requirement}")]
    ParameterOutOfRange {
        what: &'static str,
        got: i64,
        requirement: &'static str,
    },
    #[error("polytope is not realizable as a right-angled polyhedron: {0}")]
    NotRealizable(andreev::AndreevWitness),
    #[error("non-finite angle")]
    NonFiniteAngle,
    #[error("angle {0} outside [0, pi/2]")]
    AngleOutOfRange(f64),
    #[error("doubling produced an invalid polytope: {0}")]
    DoublingDefect(polytope::ValidationReport),
    #[error("doubling broke the vertex-count contract: {0}")]
    DoublingContract(String),
    #[error("face {face} shares {count} edges with the doubling face; exactly one is required")]
    DoublingMultiSharedEdges { face: FaceId, count: usize },
    #[error("face selector produced no usable face at stage {stage}")]
    NoFaceSelected { stage: usize },
}

/// Exact rational used by all averaging identities.
pub type Rational = num_rational::Ratio<i64>;
