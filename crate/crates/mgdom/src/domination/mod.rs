//! Verifiers and exact minimizers for total domination (γ_t) and total
//! outer-connected domination (γ_tc).
//!
//! A set D is total dominating when every vertex of the graph, including the
//! members of D, has a neighbor in D. It is total outer-connected dominating
//! (TOCD) when additionally the subgraph induced on V∖D is connected, where
//! subgraphs on at most one vertex count as connected.

mod solver;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::middle::{MiddleGraph, MiddleLabel};

pub use solver::{gamma_t_exact, gamma_tc_exact};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    /// γ_t and γ_tc are undefined on graphs with an isolated vertex.
    #[error("vertex {0} is isolated; the parameter is undefined")]
    IsolatedVertex(usize),
    #[error("search budget exhausted after {nodes} candidate sets")]
    BudgetExhausted { nodes: u64 },
    #[error("graph has {n} vertices; the Hamiltonian path check supports at most {max}")]
    TooLarge { n: usize, max: usize },
}

/// Which domination parameter a solve targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    GammaT,
    GammaTc,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::GammaT => write!(f, "gamma_t"),
            Parameter::GammaTc => write!(f, "gamma_tc"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Iterative deepening that switches to complement enumeration once the
    /// target cardinality exceeds half the order.
    Auto,
    IterativeDeepening,
    ComplementSearch,
    /// Plain lexicographic subset enumeration without any pruning; the oracle
    /// the other methods are tested against.
    BruteForce,
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolveMethod::Auto => "auto",
            SolveMethod::IterativeDeepening => "iterative-deepening",
            SolveMethod::ComplementSearch => "complement-search",
            SolveMethod::BruteForce => "brute-force",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct SolverOptions {
    pub method: SolveMethod,
    /// Maximum number of candidate sets tested before the solve errors out.
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Return the lexicographically smallest minimum set.
    pub canonical_witness: bool,
    pub parallel: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            method: SolveMethod::Auto,
            node_budget: 100_000_000,
            time_budget: None,
            canonical_witness: true,
            parallel: false,
        }
    }
}

impl SolverOptions {
    pub fn with_method(method: SolveMethod) -> Self {
        SolverOptions {
            method,
            ..Default::default()
        }
    }
}

/// Outcome of an exact solve. `proven_optimal` is always true: a solve that
/// cannot finish within budget errors instead of returning a bound.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method_used: SolveMethod,
    pub proven_optimal: bool,
}

/// Per-condition breakdown of a TOCD check.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub total_dominating: bool,
    /// Vertices with no neighbor in D; empty iff `total_dominating`.
    pub undominated: VertexSet,
    pub outer_connected: bool,
    /// Connected components of the subgraph induced on V∖D.
    pub outside_component_count: usize,
    pub valid_tocd: bool,
}

/// True iff every vertex of `g` has a neighbor in `d`.
pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.vertices().all(|v| g.neighbors(v).intersects(d))
}

/// Vertices of `g` without a neighbor in `d`.
pub fn undominated_set(g: &Graph, d: &VertexSet) -> VertexSet {
    VertexSet::from_iter(
        g.order(),
        g.vertices().filter(|&v| !g.neighbors(v).intersects(d)),
    )
}

/// True iff the subgraph induced on V∖d is connected (≤ 1 vertex counts).
pub fn is_outer_connected(g: &Graph, d: &VertexSet) -> bool {
    let mut outside = VertexSet::full(g.order());
    outside.difference_with(d);
    g.is_connected_within(&outside)
}

/// Checks both TOCD conditions and reports the failure details.
pub fn verify_tocd(g: &Graph, d: &VertexSet) -> VerificationReport {
    let undominated = undominated_set(g, d);
    let total_dominating = undominated.is_empty();
    let mut outside = VertexSet::full(g.order());
    outside.difference_with(d);
    let outside_component_count = g.components_within(&outside);
    let outer_connected = outside_component_count <= 1;
    VerificationReport {
        total_dominating,
        undominated,
        outer_connected,
        outside_component_count,
        valid_tocd: total_dominating && outer_connected,
    }
}

const HAMILTONIAN_MAX: usize = 24;

/// Spanning-path test via dynamic programming over vertex subsets.
///
/// Supports n ≤ 24; the table holds one endpoint bitmask per subset.
pub fn has_hamiltonian_path(g: &Graph) -> Result<bool, DominationError> {
    let n = g.order();
    if n > HAMILTONIAN_MAX {
        return Err(DominationError::TooLarge {
            n,
            max: HAMILTONIAN_MAX,
        });
    }
    if n <= 1 {
        return Ok(true);
    }
    let adj: Vec<u32> = (1..=n)
        .map(|v| {
            let mut mask = 0u32;
            for u in g.neighbors(v).iter() {
                mask |= 1 << (u - 1);
            }
            mask
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // ends[mask] = endpoints v such that some simple path visits exactly
    // `mask` and stops at v.
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        if mask == full {
            return Ok(true);
        }
        let mut rest = full & !mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & e != 0 {
                ends[(mask | (1 << v)) as usize] |= 1 << v;
            }
        }
    }
    Ok(ends[full as usize] != 0)
}

/// Vertices of M(G) that every dominating set of the relevant kind must
/// contain.
///
/// The edge-vertex of each leaf edge is the leaf's only neighbor in M(G), so
/// it is forced into every total dominating set. When the outside is known to
/// keep at least two vertices (`complement_at_least_2`), the leaf itself is
/// forced as well: left outside, it would be an isolated outside vertex.
pub fn forced_members(mg: &MiddleGraph, complement_at_least_2: bool) -> VertexSet {
    let base = mg.base();
    let mut out = VertexSet::empty(mg.order());
    for leaf in base.leaves().iter() {
        let support = base
            .neighbors(leaf)
            .first()
            .expect("a leaf has exactly one neighbor");
        let ev = mg
            .resolve(MiddleLabel::edge(leaf, support))
            .expect("leaf edge exists in the base graph");
        out.insert(ev);
        if complement_at_least_2 {
            out.insert(leaf);
        }
    }
    out
}
