//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use mgdom::{Graph, SolveMethod, SolverOptions};

/// Independent exhaustive oracle over u32 subset masks with union-find
/// connectivity. Deliberately shares no code with the solver path: adjacency
/// is re-derived per vertex pair and connectivity uses union-find rather
/// than BFS.
pub fn mask_oracle(g: &Graph, outer_connected: bool) -> usize {
    let n = g.order();
    assert!(n <= 20, "mask oracle supports n <= 20");
    let adj: Vec<u32> = (1..=n)
        .map(|v| {
            let mut m = 0u32;
            for u in 1..=n {
                if g.has_edge(v, u) {
                    m |= 1 << (u - 1);
                }
            }
            m
        })
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = usize::MAX;
    for mask in 0u32..=full {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if (0..n).any(|v| adj[v] & mask == 0) {
            continue;
        }
        if outer_connected && !mask_connected(&adj, full & !mask) {
            continue;
        }
        best = size;
    }
    best
}

fn mask_connected(adj: &[u32], subset: u32) -> bool {
    let verts: Vec<usize> = (0..adj.len()).filter(|v| subset >> v & 1 == 1).collect();
    if verts.len() <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while p[root] != root {
            root = p[root];
        }
        let mut cur = x;
        while p[cur] != root {
            let next = p[cur];
            p[cur] = root;
            cur = next;
        }
        root
    }
    for (ai, &a) in verts.iter().enumerate() {
        for (bi, &b) in verts.iter().enumerate().skip(ai + 1) {
            if adj[a] >> b & 1 == 1 {
                let (ra, rb) = (find(&mut parent, ai), find(&mut parent, bi));
                parent[ra] = rb;
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..verts.len()).all(|i| find(&mut parent, i) == root)
}

pub fn brute_opts() -> SolverOptions {
    SolverOptions::with_method(SolveMethod::BruteForce)
}
