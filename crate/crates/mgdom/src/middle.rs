//! Construction of the middle graph M(G).
//!
//! M(G) has one vertex per vertex of G ("originals") and one per edge of G
//! ("edge-vertices"). An original is adjacent to the edge-vertices of its
//! incident edges, and two edge-vertices are adjacent when their edges share
//! an endpoint. Originals are pairwise non-adjacent.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MiddleError {
    #[error("label {0} does not exist in this middle graph")]
    UnknownLabel(MiddleLabel),
}

/// Identity of a middle-graph vertex in terms of the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MiddleLabel {
    Original(usize),
    /// Edge-vertex of base edge `{i, j}` with `i < j`.
    EdgeVertex(usize, usize),
}

impl MiddleLabel {
    /// Edge-vertex label with endpoints put in canonical order.
    pub fn edge(i: usize, j: usize) -> MiddleLabel {
        if i < j {
            MiddleLabel::EdgeVertex(i, j)
        } else {
            MiddleLabel::EdgeVertex(j, i)
        }
    }
}

impl fmt::Display for MiddleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiddleLabel::Original(i) => write!(f, "v{i}"),
            MiddleLabel::EdgeVertex(i, j) => write!(f, "m{i}_{j}"),
        }
    }
}

/// A materialized middle graph together with its labeling.
///
/// Vertex ids `1..=n` of the realized graph carry `Original(i) = i`; ids
/// `n+1..=n+m` carry the edge-vertices in lexicographic order of their base
/// edges, which fixes canonical witness output.
#[derive(Clone)]
pub struct MiddleGraph {
    base: Graph,
    graph: Graph,
    labels: Vec<MiddleLabel>,
}

impl MiddleGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The ordinary graph realizing M(G).
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Label carried by middle-graph vertex `id`.
    pub fn label_of(&self, id: usize) -> Option<MiddleLabel> {
        self.labels.get(id.checked_sub(1)?).copied()
    }

    /// Vertex id for a label; inverse of [`MiddleGraph::label_of`].
    pub fn resolve(&self, label: MiddleLabel) -> Result<usize, MiddleError> {
        let n = self.base.order();
        match label {
            MiddleLabel::Original(i) if i >= 1 && i <= n => Ok(i),
            MiddleLabel::EdgeVertex(i, j) if i < j => {
                match self.base.edges().binary_search(&(i, j)) {
                    Ok(rank) => Ok(n + 1 + rank),
                    Err(_) => Err(MiddleError::UnknownLabel(label)),
                }
            }
            _ => Err(MiddleError::UnknownLabel(label)),
        }
    }

    /// Resolves a whole label list into a vertex set over M(G).
    pub fn resolve_set<I>(&self, labels: I) -> Result<VertexSet, MiddleError>
    where
        I: IntoIterator<Item = MiddleLabel>,
    {
        let mut set = VertexSet::empty(self.order());
        for label in labels {
            set.insert(self.resolve(label)?);
        }
        Ok(set)
    }

    /// Renders a vertex set of M(G) as sorted labels.
    pub fn labels_of_set(&self, set: &VertexSet) -> Vec<MiddleLabel> {
        set.iter().filter_map(|id| self.label_of(id)).collect()
    }
}

/// Builds M(G) with the canonical labeling.
pub fn middle_graph(g: &Graph) -> MiddleGraph {
    let n = g.order();
    let m = g.size();
    let mut labels: Vec<MiddleLabel> = (1..=n).map(MiddleLabel::Original).collect();
    labels.extend(
        g.edges()
            .iter()
            .map(|&(i, j)| MiddleLabel::EdgeVertex(i, j)),
    );

    let mut edges = Vec::with_capacity(2 * m);
    // Incidence edges.
    for (rank, &(i, j)) in g.edges().iter().enumerate() {
        let ev = n + 1 + rank;
        edges.push((i, ev));
        edges.push((j, ev));
    }
    // Line-graph edges: two base edges sharing an endpoint. Every such pair
    // shares exactly one endpoint in a simple graph, so no pair is emitted
    // twice.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (rank, &(i, j)) in g.edges().iter().enumerate() {
        let ev = n + 1 + rank;
        incident[i].push(ev);
        incident[j].push(ev);
    }
    for v in 1..=n {
        let evs = &incident[v];
        for a in 0..evs.len() {
            for b in (a + 1)..evs.len() {
                edges.push((evs[a], evs[b]));
            }
        }
    }

    let graph = Graph::build(n + m, &edges).expect("middle graph edges are valid");
    MiddleGraph {
        base: g.clone(),
        graph,
        labels,
    }
}
