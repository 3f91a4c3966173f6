//! Exact search for minimum total (outer-connected) dominating sets.
//!
//! The default strategy is iterative deepening on the set cardinality k,
//! starting from a cheap lower bound. Each level is exhausted before moving
//! on, so a returned value is always proven optimal. Two enumeration routes
//! exist per level:
//!
//! * direct: lexicographic DFS over k-subsets with forced vertices
//!   preselected (leaf supports always, leaves when the outside keeps ≥ 2
//!   vertices) and a disjoint-neighborhood packing bound for pruning;
//! * complement: enumerate candidate outsides C = V∖D of size n−k instead —
//!   connected induced subsets for γ_tc, arbitrary subsets for γ_t — and test
//!   total domination of V∖C. This is what makes star-like instances with
//!   answers near n cheap.
//!
//! The brute-force method enumerates plain lexicographic combinations with no
//! pruning at all and serves as the oracle for the others.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};

use super::{
    is_total_dominating, DominationError, Parameter, SolveMethod, SolveReport, SolverOptions,
};

/// Minimum cardinality of a total dominating set, with witness.
pub fn gamma_t_exact(g: &Graph, opts: &SolverOptions) -> Result<SolveReport, DominationError> {
    solve(g, Parameter::GammaT, opts)
}

/// Minimum cardinality of a total outer-connected dominating set, with witness.
pub fn gamma_tc_exact(g: &Graph, opts: &SolverOptions) -> Result<SolveReport, DominationError> {
    solve(g, Parameter::GammaTc, opts)
}

fn solve(g: &Graph, param: Parameter, opts: &SolverOptions) -> Result<SolveReport, DominationError> {
    for v in g.vertices() {
        if g.degree(v) == 0 {
            return Err(DominationError::IsolatedVertex(v));
        }
    }
    let search = Search::new(g, param, opts);
    let (value, witness) = match opts.method {
        SolveMethod::BruteForce => search.run_brute()?,
        _ => search.run_levels()?,
    };
    debug_assert_eq!(witness.len(), value);
    debug_assert!(is_total_dominating(g, &witness));
    Ok(SolveReport {
        parameter: param,
        value,
        witness,
        nodes_explored: search.nodes.load(AtomicOrdering::Relaxed),
        method_used: opts.method,
        proven_optimal: true,
    })
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    param: Parameter,
    method: SolveMethod,
    parallel: bool,
    max_degree: usize,
    /// Vertices in ascending (degree, id) order; greedy packing scans this.
    packing_order: Vec<usize>,
    nodes: AtomicU64,
    node_budget: u64,
    deadline: Option<Instant>,
    aborted: AtomicBool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, param: Parameter, opts: &SolverOptions) -> Self {
        let n = g.order();
        let mut packing_order: Vec<usize> = (1..=n).collect();
        packing_order.sort_by_key(|&v| (g.degree(v), v));
        Search {
            g,
            n,
            param,
            method: opts.method,
            parallel: opts.parallel,
            max_degree: g.max_degree(),
            packing_order,
            nodes: AtomicU64::new(0),
            node_budget: opts.node_budget.max(1),
            deadline: opts.time_budget.map(|d| Instant::now() + d),
            aborted: AtomicBool::new(false),
        }
    }

    /// Counts one candidate-set test against the budget.
    fn count_node(&self) -> Result<(), DominationError> {
        let c = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if c > self.node_budget || self.aborted.load(AtomicOrdering::Relaxed) {
            self.aborted.store(true, AtomicOrdering::Relaxed);
            return Err(DominationError::BudgetExhausted { nodes: c });
        }
        if c % 4096 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.aborted.store(true, AtomicOrdering::Relaxed);
                    return Err(DominationError::BudgetExhausted { nodes: c });
                }
            }
        }
        Ok(())
    }

    /// Full validity test for a candidate set.
    fn test_set(&self, d: &VertexSet) -> Result<bool, DominationError> {
        self.count_node()?;
        if !is_total_dominating(self.g, d) {
            return Ok(false);
        }
        Ok(self.outer_ok(d))
    }

    /// Leaf test when total domination is already known from the tracked
    /// dominated set.
    fn test_leaf(&self, d: &VertexSet, fully_dominated: bool) -> Result<bool, DominationError> {
        self.count_node()?;
        debug_assert_eq!(fully_dominated, is_total_dominating(self.g, d));
        if !fully_dominated {
            return Ok(false);
        }
        Ok(self.outer_ok(d))
    }

    fn outer_ok(&self, d: &VertexSet) -> bool {
        match self.param {
            Parameter::GammaT => true,
            Parameter::GammaTc => {
                let outside = d.complement();
                self.g.is_connected_within(&outside)
            }
        }
    }

    // ----- iterative deepening -------------------------------------------

    fn run_levels(&self) -> Result<(usize, VertexSet), DominationError> {
        let lb = self.lower_bound();
        for k in lb..=self.n {
            let use_complement = match self.method {
                SolveMethod::ComplementSearch => true,
                SolveMethod::IterativeDeepening => false,
                // Direct enumeration degrades once k passes n/2; for γ_tc the
                // complement side is also much smaller because outsides must
                // be connected.
                SolveMethod::Auto => self.param == Parameter::GammaTc && 2 * k > self.n,
                SolveMethod::BruteForce => unreachable!(),
            };
            let found = if use_complement {
                self.level_complement(k)?
            } else {
                self.level_direct(k)?
            };
            if let Some(witness) = found {
                debug_assert!(self.forced_for_level(k).is_subset_of(&witness));
                return Ok((k, witness));
            }
        }
        // D = V is total dominating (no isolated vertices) with empty outside.
        unreachable!("the full vertex set is always feasible")
    }

    /// Vertices every valid set of cardinality k must contain: the support of
    /// each leaf always; for γ_tc also the leaf itself while k ≤ n−2, since an
    /// outside with ≥ 2 vertices cannot hold a leaf whose only neighbor is in D.
    fn forced_for_level(&self, k: usize) -> VertexSet {
        let mut forced = VertexSet::empty(self.n);
        for leaf in self.g.leaves().iter() {
            let support = self
                .g
                .neighbors(leaf)
                .first()
                .expect("leaf has a neighbor");
            forced.insert(support);
            if self.param == Parameter::GammaTc && k + 2 <= self.n {
                forced.insert(leaf);
            }
        }
        forced
    }

    fn lower_bound(&self) -> usize {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        // Any total dominating set has ≥ 2 vertices: a member needs a
        // neighbor inside the set.
        let mut lb = 2.min(n);
        // Each chosen vertex dominates at most Δ vertices.
        lb = lb.max(n.div_ceil(self.max_degree.max(1)));
        let packing = self.packing_bound(&VertexSet::empty(n), &VertexSet::full(n));
        if packing != usize::MAX {
            lb = lb.max(packing);
        }
        if self.param == Parameter::GammaTc {
            // Leaves and supports are all forced unless the outside shrinks
            // to a single vertex, in which case |D| = n−1 anyway.
            let leaves = self.g.leaves();
            if !leaves.is_empty() {
                let mut ls = leaves.clone();
                for l in leaves.iter() {
                    ls.insert(self.g.neighbors(l).first().unwrap());
                }
                lb = lb.max(ls.len().min(n - 1));
            }
        }
        lb
    }

    /// Greedy family of undominated vertices whose candidate dominator sets
    /// (open neighborhood ∩ available picks) are pairwise disjoint. Any valid
    /// completion needs at least one pick per family member. Returns
    /// `usize::MAX` when some undominated vertex has no candidate dominator
    /// left at all.
    fn packing_bound(&self, dominated: &VertexSet, available: &VertexSet) -> usize {
        let mut used = VertexSet::empty(self.n);
        let mut count = 0usize;
        for &w in &self.packing_order {
            if dominated.contains(w) {
                continue;
            }
            let mut options = self.g.neighbors(w).clone();
            options.intersect_with(available);
            if options.is_empty() {
                return usize::MAX;
            }
            if !options.intersects(&used) {
                count += 1;
                used.union_with(&options);
            }
        }
        count
    }

    // ----- direct route ----------------------------------------------------

    fn level_direct(&self, k: usize) -> Result<Option<VertexSet>, DominationError> {
        let forced = self.forced_for_level(k);
        if forced.len() > k {
            return Ok(None);
        }
        let need = k - forced.len();
        let candidates: Vec<usize> = (1..=self.n).filter(|&v| !forced.contains(v)).collect();
        if need > candidates.len() {
            return Ok(None);
        }
        let mut dominated = VertexSet::empty(self.n);
        for f in forced.iter() {
            dominated.union_with(self.g.neighbors(f));
        }
        if need == 0 {
            let ok = self.test_leaf(&forced, dominated.len() == self.n)?;
            return Ok(ok.then(|| forced.clone()));
        }
        // suffix[i] = set of candidates[i..]; the pool future picks come from.
        let mut suffix = vec![VertexSet::empty(self.n); candidates.len() + 1];
        for i in (0..candidates.len()).rev() {
            suffix[i] = suffix[i + 1].clone();
            suffix[i].insert(candidates[i]);
        }

        let last_first = candidates.len() - need;
        if self.parallel && need >= 2 && last_first >= 1 {
            // Fan out over the first pick. Branch b explores exactly the
            // k-subsets whose smallest free vertex is candidates[b], so the
            // first b with a witness holds the lexicographic minimum.
            let results: Vec<Result<Option<VertexSet>, DominationError>> = (0..=last_first)
                .into_par_iter()
                .map(|b| {
                    let v = candidates[b];
                    let mut chosen = forced.clone();
                    chosen.insert(v);
                    let mut dom = dominated.clone();
                    dom.union_with(self.g.neighbors(v));
                    self.dfs(&candidates, &suffix, b + 1, &mut chosen, need - 1, &dom)
                })
                .collect();
            for r in results {
                if let Some(w) = r? {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        } else {
            let mut chosen = forced.clone();
            self.dfs(&candidates, &suffix, 0, &mut chosen, need, &dominated)
        }
    }

    fn dfs(
        &self,
        candidates: &[usize],
        suffix: &[VertexSet],
        idx: usize,
        chosen: &mut VertexSet,
        remaining: usize,
        dominated: &VertexSet,
    ) -> Result<Option<VertexSet>, DominationError> {
        if remaining == 0 {
            let ok = self.test_leaf(chosen, dominated.len() == self.n)?;
            return Ok(ok.then(|| chosen.clone()));
        }
        if idx + remaining > candidates.len() {
            return Ok(None);
        }
        let undominated = self.n - dominated.len();
        if undominated > remaining * self.max_degree {
            return Ok(None);
        }
        let bound = self.packing_bound(dominated, &suffix[idx]);
        if bound > remaining {
            return Ok(None);
        }
        for i in idx..=(candidates.len() - remaining) {
            if self.aborted.load(AtomicOrdering::Relaxed) {
                return Err(DominationError::BudgetExhausted {
                    nodes: self.nodes.load(AtomicOrdering::Relaxed),
                });
            }
            let v = candidates[i];
            chosen.insert(v);
            let mut dom = dominated.clone();
            dom.union_with(self.g.neighbors(v));
            let found = self.dfs(candidates, suffix, i + 1, chosen, remaining - 1, &dom)?;
            chosen.remove(v);
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    // ----- complement route ------------------------------------------------

    fn level_complement(&self, k: usize) -> Result<Option<VertexSet>, DominationError> {
        let forced = self.forced_for_level(k);
        if forced.len() > k {
            return Ok(None);
        }
        let outside_size = self.n - k;
        if outside_size == 0 {
            let d = VertexSet::full(self.n);
            let ok = self.test_set(&d)?;
            return Ok(ok.then_some(d));
        }
        // The outside cannot touch vertices forced into D.
        let allowed = forced.complement();
        match self.param {
            Parameter::GammaTc => self.connected_outsides(outside_size, &allowed),
            Parameter::GammaT => self.all_outsides(outside_size, &allowed),
        }
    }

    /// Enumerates connected induced subsets of the allowed vertices (each
    /// exactly once, rooted at its minimum vertex) and keeps the best
    /// resulting D = V∖C.
    fn connected_outsides(
        &self,
        size: usize,
        allowed: &VertexSet,
    ) -> Result<Option<VertexSet>, DominationError> {
        let roots: Vec<usize> = allowed.iter().collect();
        let run_root = |root: usize| -> Result<Option<VertexSet>, DominationError> {
            let mut best = None;
            let mut gt_root = allowed.clone();
            for v in 1..=root {
                gt_root.remove(v);
            }
            let mut part = VertexSet::empty(self.n);
            part.insert(root);
            if size == 1 {
                self.consider_outside(&part, &mut best)?;
                return Ok(best);
            }
            let mut frontier = self.g.neighbors(root).clone();
            frontier.intersect_with(&gt_root);
            let mut closed = self.g.neighbors(root).clone();
            closed.insert(root);
            self.extend_connected(size, &mut part, frontier, &closed, &gt_root, &mut best)?;
            Ok(best)
        };

        if self.parallel && roots.len() > 1 {
            let results: Vec<Result<Option<VertexSet>, DominationError>> =
                roots.par_iter().map(|&r| run_root(r)).collect();
            let mut best: Option<VertexSet> = None;
            for r in results {
                if let Some(d) = r? {
                    if best.as_ref().is_none_or(|b| d < *b) {
                        best = Some(d);
                    }
                }
            }
            Ok(best)
        } else {
            let mut best: Option<VertexSet> = None;
            for root in roots {
                if let Some(d) = run_root(root)? {
                    if best.as_ref().is_none_or(|b| d < *b) {
                        best = Some(d);
                    }
                }
            }
            Ok(best)
        }
    }

    /// Standard connected-subgraph extension: grow `part` by frontier
    /// vertices, where `closed` is part ∪ N(part) and newly reachable
    /// vertices enter the frontier of deeper calls only.
    fn extend_connected(
        &self,
        size: usize,
        part: &mut VertexSet,
        frontier: VertexSet,
        closed: &VertexSet,
        gt_root: &VertexSet,
        best: &mut Option<VertexSet>,
    ) -> Result<(), DominationError> {
        let mut frontier = frontier;
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let mut newly = self.g.neighbors(u).clone();
            newly.intersect_with(gt_root);
            newly.difference_with(closed);
            let mut next_frontier = frontier.clone();
            next_frontier.union_with(&newly);
            part.insert(u);
            if part.len() == size {
                self.consider_outside(part, best)?;
            } else {
                let mut next_closed = closed.clone();
                next_closed.union_with(self.g.neighbors(u));
                next_closed.insert(u);
                self.extend_connected(size, part, next_frontier, &next_closed, gt_root, best)?;
            }
            part.remove(u);
        }
        Ok(())
    }

    fn consider_outside(
        &self,
        outside: &VertexSet,
        best: &mut Option<VertexSet>,
    ) -> Result<(), DominationError> {
        self.count_node()?;
        let d = outside.complement();
        debug_assert!(self.param == Parameter::GammaT || self.g.is_connected_within(outside));
        if is_total_dominating(self.g, &d) && best.as_ref().is_none_or(|b| d < *b) {
            *best = Some(d);
        }
        Ok(())
    }

    /// γ_t has no outside-connectivity requirement, so the complement route
    /// enumerates arbitrary subsets of the allowed vertices.
    fn all_outsides(
        &self,
        size: usize,
        allowed: &VertexSet,
    ) -> Result<Option<VertexSet>, DominationError> {
        let pool: Vec<usize> = allowed.iter().collect();
        if size > pool.len() {
            return Ok(None);
        }
        let mut best = None;
        let mut outside = VertexSet::empty(self.n);
        self.all_outsides_rec(&pool, 0, size, &mut outside, &mut best)?;
        Ok(best)
    }

    fn all_outsides_rec(
        &self,
        pool: &[usize],
        idx: usize,
        remaining: usize,
        outside: &mut VertexSet,
        best: &mut Option<VertexSet>,
    ) -> Result<(), DominationError> {
        if remaining == 0 {
            self.consider_outside(outside, best)?;
            return Ok(());
        }
        for i in idx..=(pool.len() - remaining) {
            outside.insert(pool[i]);
            self.all_outsides_rec(pool, i + 1, remaining - 1, outside, best)?;
            outside.remove(pool[i]);
        }
        Ok(())
    }

    // ----- brute force -------------------------------------------------------

    fn run_brute(&self) -> Result<(usize, VertexSet), DominationError> {
        for k in 1..=self.n {
            let mut chosen = VertexSet::empty(self.n);
            if let Some(w) = self.brute_rec(1, k, &mut chosen)? {
                return Ok((k, w));
            }
        }
        unreachable!("the full vertex set is always feasible")
    }

    fn brute_rec(
        &self,
        from: usize,
        remaining: usize,
        chosen: &mut VertexSet,
    ) -> Result<Option<VertexSet>, DominationError> {
        if remaining == 0 {
            let ok = self.test_set(chosen)?;
            return Ok(ok.then(|| chosen.clone()));
        }
        if from + remaining > self.n + 1 {
            return Ok(None);
        }
        for v in from..=(self.n + 1 - remaining) {
            chosen.insert(v);
            let found = self.brute_rec(v + 1, remaining - 1, chosen)?;
            chosen.remove(v);
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}
