//! Deterministic builders for regular `F`-free graphs.
//!
//! Every builder starts from a complete multipartite graph or a cycle blow-up whose
//! classes occupy consecutive index blocks, then deletes edges according to an ordered
//! [`ConstructionPlan`]. The plan is the auditable record: each step names the vertex
//! sets it acts on and carries the exact edges it removes.

mod blowup;
pub mod factors;
mod route;
mod turan;

use std::fmt;

use thiserror::Error;

use crate::graph::{blocks, Edge, Graph, GraphError, Vertex};

pub use blowup::{c5_blowup_extremal, c7_blowup_extremal, odd_girth_blowup, odd_girth_parameters};
pub use route::{construct_for, RouteError};
pub use turan::{balanced_bipartite, k4_extremal, regularized_turan, turan_graph, turan_sizes};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no {what} exists on parts of sizes {sizes:?}")]
    NoFactor { what: String, sizes: Vec<usize> },
    #[error("deletion step {step} is invalid: {source}")]
    BadStep { step: usize, source: GraphError },
    #[error("construction produced degrees {degrees:?} instead of {expected}-regular")]
    NotRegular { expected: usize, degrees: Vec<usize> },
    #[error("construction produced {found} edges instead of {expected}")]
    WrongEdgeCount { expected: usize, found: usize },
}

/// What a deletion step removes, named by the structure it forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    /// Perfect matching between two equal sets.
    PerfectMatching,
    /// Matching of the given size between two sets.
    Matching(usize),
    HamiltonianCycle,
    /// 1-factor on the (multipartite) union of the named sets.
    OneFactor,
    /// 2-factor on the union of the named sets.
    TwoFactor,
    /// Bipartite graph with the left side of fixed degree and right-side degrees as even
    /// as possible.
    Biregular { left_degree: usize },
    /// Regular bipartite graph of the given degree.
    RegularBipartite(usize),
    ExplicitEdges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionStep {
    pub kind: StepKind,
    /// Human-readable name of the vertex sets involved, e.g. `A1 | A2`.
    pub scope: String,
    pub edges: Vec<Edge>,
}

impl DeletionStep {
    fn new(kind: StepKind, scope: impl Into<String>, edges: Vec<Edge>) -> Self {
        DeletionStep {
            kind,
            scope: scope.into(),
            edges,
        }
    }
}

/// How the host graph joins its classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HostKind {
    CompleteMultipartite,
    CycleBlowup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPlan {
    /// Short family name, e.g. `c5-blowup`.
    pub family: String,
    pub host: HostKind,
    pub class_sizes: Vec<usize>,
    pub deletions: Vec<DeletionStep>,
    pub target_degree: usize,
    /// Set when the construction is a lower bound only, not a proven optimum.
    pub lower_bound_only: bool,
}

impl ConstructionPlan {
    pub fn order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// Vertex lists of the classes, in order.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        blocks(&self.class_sizes).into_iter().map(|r| r.collect()).collect()
    }

    pub fn host_graph(&self) -> Graph {
        match self.host {
            HostKind::CompleteMultipartite => Graph::complete_multipartite(&self.class_sizes),
            HostKind::CycleBlowup => Graph::cycle_blowup(&self.class_sizes),
        }
    }

    /// Builds the host and applies the deletions in order. A step that names an absent
    /// or repeated edge is rejected.
    pub fn apply(&self) -> Result<Graph, ConstructionError> {
        let mut g = self.host_graph();
        for (i, step) in self.deletions.iter().enumerate() {
            g = g
                .delete_edges(&step.edges)
                .map_err(|source| ConstructionError::BadStep { step: i + 1, source })?;
        }
        Ok(g)
    }

    pub fn deleted_edge_count(&self) -> usize {
        self.deletions.iter().map(|s| s.edges.len()).sum()
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::PerfectMatching => write!(f, "perfect-matching"),
            StepKind::Matching(k) => write!(f, "matching({k})"),
            StepKind::HamiltonianCycle => write!(f, "hamiltonian-cycle"),
            StepKind::OneFactor => write!(f, "1-factor"),
            StepKind::TwoFactor => write!(f, "2-factor"),
            StepKind::Biregular { left_degree } => write!(f, "biregular(left-degree {left_degree})"),
            StepKind::RegularBipartite(d) => write!(f, "regular-bipartite({d})"),
            StepKind::ExplicitEdges => write!(f, "edges"),
        }
    }
}

/// One `#`-prefixed line per item, suitable for embedding above a graph6 line.
impl fmt::Display for ConstructionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let host = match self.host {
            HostKind::CompleteMultipartite => "complete-multipartite",
            HostKind::CycleBlowup => "cycle-blowup",
        };
        writeln!(f, "# family: {}", self.family)?;
        writeln!(f, "# order: {}", self.order())?;
        writeln!(f, "# degree: {}", self.target_degree)?;
        writeln!(f, "# bound: {}", if self.lower_bound_only { "lower" } else { "extremal" })?;
        write!(f, "# host: {host}")?;
        for (i, s) in self.class_sizes.iter().enumerate() {
            write!(f, " A{}={s}", i + 1)?;
        }
        writeln!(f)?;
        for (i, step) in self.deletions.iter().enumerate() {
            write!(f, "# step {}: {} on {} [", i + 1, step.kind, step.scope)?;
            for (j, (u, v)) in step.edges.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{u}-{v}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A verified regular graph together with the plan that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub plan: ConstructionPlan,
    pub claimed_degree: usize,
    pub claimed_edges: usize,
}

impl ConstructionResult {
    /// Applies `plan` and checks the outcome is `target_degree`-regular with the matching
    /// edge count.
    pub fn from_plan(plan: ConstructionPlan) -> Result<Self, ConstructionError> {
        let graph = plan.apply()?;
        let d = plan.target_degree;
        let n = graph.order();
        if n > 0 && graph.is_regular() != Some(d) {
            return Err(ConstructionError::NotRegular {
                expected: d,
                degrees: graph.degree_sequence(),
            });
        }
        let expected = d * n / 2;
        if graph.edge_count() != expected {
            return Err(ConstructionError::WrongEdgeCount {
                expected,
                found: graph.edge_count(),
            });
        }
        Ok(ConstructionResult {
            graph,
            claimed_degree: d,
            claimed_edges: expected,
            plan,
        })
    }
}

/// The edgeless graph on `n` vertices as a (trivial) construction.
pub fn edgeless(n: usize) -> ConstructionResult {
    let plan = ConstructionPlan {
        family: "edgeless".into(),
        host: HostKind::CompleteMultipartite,
        class_sizes: if n == 0 { vec![] } else { vec![n] },
        deletions: vec![],
        target_degree: 0,
        lower_bound_only: true,
    };
    ConstructionResult::from_plan(plan).expect("edgeless graph is 0-regular")
}

/// `K_n`, each vertex its own class.
pub fn complete(n: usize) -> ConstructionResult {
    let plan = ConstructionPlan {
        family: "complete".into(),
        host: HostKind::CompleteMultipartite,
        class_sizes: vec![1; n],
        deletions: vec![],
        target_degree: n.saturating_sub(1),
        lower_bound_only: false,
    };
    ConstructionResult::from_plan(plan).expect("complete graph is regular")
}
