//! Simple undirected graphs with 1-based vertex ids and bitset adjacency.
//!
//! Vertices are `1..=n`; bit `v` of a [`VertexSet`] word block corresponds to
//! vertex `v` (bit 0 is never set). Graphs are immutable once built and all
//! operations are pure, so values can be shared freely across threads.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Errors from graph construction and vertex-indexed operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("graph order must be at least 1")]
    ZeroOrder,
}

/// A subset of the vertices `1..=capacity`, stored as a fixed-width bit vector.
///
/// Insert, remove and membership are O(1); union, intersection and difference
/// run over `capacity/64` words. Sets are ordered lexicographically by their
/// sorted vertex lists, which is the tie-break order used for canonical
/// solver witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

#[inline]
fn word_count(capacity: usize) -> usize {
    capacity / 64 + 1
}

impl VertexSet {
    /// Empty set over `1..=capacity`.
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; word_count(capacity)],
            capacity,
        }
    }

    /// Full set `{1, …, capacity}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for v in 1..=capacity {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::empty(capacity);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Inserts `v`. Panics if `v` is 0 or exceeds the capacity.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v >= 1 && v <= self.capacity, "vertex {v} out of range");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v <= self.capacity {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.capacity && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `{1..=capacity} \ self`.
    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.capacity);
        out.difference_with(self);
        out
    }

    /// True when the two sets share at least one member.
    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
            && self.words[other.words.len()..].iter().all(|&w| w == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the sorted vertex lists: `{1,4} < {2,3}` and
    /// `{1} < {1,2}`.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite simple undirected graph.
///
/// No loops, no parallel edges; adjacency is symmetric and `size()` equals
/// half the degree sum. The edge list is kept sorted lexicographically with
/// `i < j`, which fixes the canonical order used for edge-vertex labeling and
/// file output.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an explicit edge list over vertices `1..=n`.
    ///
    /// Duplicate edges are rejected rather than merged so that file
    /// round-trips stay bit-exact.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut adj: Vec<VertexSet> = (0..=n).map(|_| VertexSet::empty(n)).collect();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i == j {
                return Err(GraphError::LoopEdge(i));
            }
            for v in [i, j] {
                if v < 1 || v > n {
                    return Err(GraphError::IndexOutOfRange { index: v, n });
                }
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if adj[a].contains(b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a].insert(b);
            adj[b].insert(a);
            normalized.push((a, b));
        }
        normalized.sort_unstable();
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each as `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.n && self.adj[i].contains(j)
    }

    /// Open neighborhood N(v) as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (1..=self.n).filter(|&v| self.degree(v) == 1))
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 1..self.n {
            for j in (i + 1)..=self.n {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(self.n, &edges).expect("complement edges are valid")
    }

    /// True when every vertex is reachable from vertex 1.
    ///
    /// Graphs with at most one vertex are connected by convention, which keeps
    /// "the outside is connected" well-defined when a dominating set misses at
    /// most one vertex.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = VertexSet::full(self.n);
        self.is_connected_within(&full)
    }

    /// Connectivity of the subgraph induced on `s` (≤ 1 vertex counts as connected).
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        let total = s.len();
        if total <= 1 {
            return true;
        }
        self.reachable_within(s, s.first().unwrap()).len() == total
    }

    /// Number of connected components of the subgraph induced on `s`.
    pub fn components_within(&self, s: &VertexSet) -> usize {
        let mut remaining = s.clone();
        let mut count = 0;
        while let Some(start) = remaining.first() {
            let comp = self.reachable_within(&remaining, start);
            remaining.difference_with(&comp);
            count += 1;
        }
        count
    }

    fn reachable_within(&self, s: &VertexSet, start: usize) -> VertexSet {
        let mut visited = VertexSet::empty(self.n);
        visited.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut next = self.adj[v].clone();
            next.intersect_with(s);
            next.difference_with(&visited);
            for u in next.iter() {
                visited.insert(u);
                stack.push(u);
            }
        }
        visited
    }

    /// Subgraph induced on `s`, re-indexed to `1..=|s|`.
    ///
    /// The returned map sends new index `k` (1-based) to `map[k-1]`, its
    /// original vertex id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        for v in s.iter() {
            if v > self.n {
                return Err(GraphError::IndexOutOfRange { index: v, n: self.n });
            }
        }
        let map: Vec<usize> = s.iter().collect();
        let mut back = vec![0usize; self.n + 1];
        for (k, &old) in map.iter().enumerate() {
            back[old] = k + 1;
        }
        let mut edges = Vec::new();
        for &(i, j) in &self.edges {
            if s.contains(i) && s.contains(j) {
                edges.push((back[i], back[j]));
            }
        }
        let g = if map.is_empty() {
            Graph {
                n: 0,
                edges: Vec::new(),
                adj: vec![VertexSet::empty(0)],
            }
        } else {
            Graph::build(map.len(), &edges)?
        };
        Ok((g, map))
    }

    /// Max shortest-path length over all vertex pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.n <= 1 {
            return Some(0);
        }
        let mut best = 0;
        for start in 1..=self.n {
            let ecc = self.eccentricity(start)?;
            best = best.max(ecc);
        }
        Some(best)
    }

    pub(crate) fn eccentricity(&self, start: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n + 1];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut seen = 1;
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            for u in self.adj[v].iter() {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    ecc = ecc.max(dist[u]);
                    seen += 1;
                    queue.push_back(u);
                }
            }
        }
        if seen == self.n {
            Some(ecc)
        } else {
            None
        }
    }

    /// Connected with exactly n-1 edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.size(), self.edges)
    }
}
