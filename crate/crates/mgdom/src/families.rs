//! Deterministic generators for the named graph families and the corona
//! transforms, with fixed labeling conventions so that constructive
//! certificates can reference vertices by index.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameter for {family}: {detail}")]
    BadParameter { family: &'static str, detail: String },
    #[error("infeasible random graph request: {detail}")]
    Infeasible { detail: String },
}

fn bad(family: &'static str, detail: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        detail: detail.into(),
    }
}

/// A tagged description of a graph family instance.
///
/// Labeling conventions (all ids 1-based):
/// * `Wheel` has order `n`: hub stored as vertex 1, rim as `2..=n`.
/// * `CompleteBipartite` stores the first part as `1..=n1`, the second as
///   `n1+1..=n1+n2`.
/// * `DoubleStar` has order `p+q+2`; the two adjacent centers are the last
///   two indices, with leaves `1..=p` on the first and `p+1..=p+q` on the
///   second.
/// * `Diam4Tree` is the path 1-2-3-4-5 plus `n-5` extra leaves on vertex 3.
/// * `Spider` (order `2n+1`) stores the center as 1, the middle vertices as
///   `2..=n+1` and the tips as `n+2..=2n+1`.
/// * `Friendship` (order `2n+1`) stores the shared vertex as 1.
///
/// Random instances are reproducible: both generators draw from
/// `ChaCha8Rng::seed_from_u64(seed)`, so the same spec always yields the same
/// labeled graph within a build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Wheel { n: usize },
    CompleteBipartite { n1: usize, n2: usize },
    Star { n: usize },
    DoubleStar { p: usize, q: usize },
    Diam4Tree { n: usize },
    Spider { n: usize },
    Friendship { n: usize },
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, m: usize, seed: u64 },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::Star { .. } => "star",
            FamilySpec::DoubleStar { .. } => "double-star",
            FamilySpec::Diam4Tree { .. } => "diam4-tree",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::RandomTree { .. } => "random-tree",
            FamilySpec::RandomConnected { .. } => "random-connected",
        }
    }

    /// Compact parameter rendering; semicolon-separated so it can sit in a
    /// CSV field unquoted.
    pub fn param_string(&self) -> String {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Star { n }
            | FamilySpec::Diam4Tree { n }
            | FamilySpec::Spider { n }
            | FamilySpec::Friendship { n } => format!("n={n}"),
            FamilySpec::CompleteBipartite { n1, n2 } => format!("n1={n1};n2={n2}"),
            FamilySpec::DoubleStar { p, q } => format!("p={p};q={q}"),
            FamilySpec::RandomTree { n, seed } => format!("n={n};seed={seed}"),
            FamilySpec::RandomConnected { n, m, seed } => format!("n={n};m={m};seed={seed}"),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::Path { n } if n >= 1 => Ok(()),
            FamilySpec::Path { n } => Err(bad("path", format!("n={n}, need n>=1"))),
            FamilySpec::Cycle { n } if n >= 3 => Ok(()),
            FamilySpec::Cycle { n } => Err(bad("cycle", format!("n={n}, need n>=3"))),
            FamilySpec::Complete { n } if n >= 1 => Ok(()),
            FamilySpec::Complete { n } => Err(bad("complete", format!("n={n}, need n>=1"))),
            FamilySpec::Wheel { n } if n >= 4 => Ok(()),
            FamilySpec::Wheel { n } => Err(bad("wheel", format!("n={n}, need n>=4"))),
            FamilySpec::CompleteBipartite { n1, n2 } if n1 >= 1 && n2 >= 1 => Ok(()),
            FamilySpec::CompleteBipartite { n1, n2 } => Err(bad(
                "complete-bipartite",
                format!("(n1,n2)=({n1},{n2}), need both >=1"),
            )),
            FamilySpec::Star { n } if n >= 2 => Ok(()),
            FamilySpec::Star { n } => Err(bad("star", format!("n={n}, need n>=2"))),
            FamilySpec::DoubleStar { p, q } if p >= 1 && q >= 1 => Ok(()),
            FamilySpec::DoubleStar { p, q } => {
                Err(bad("double-star", format!("(p,q)=({p},{q}), need both >=1")))
            }
            FamilySpec::Diam4Tree { n } if n >= 6 => Ok(()),
            FamilySpec::Diam4Tree { n } => Err(bad("diam4-tree", format!("n={n}, need n>=6"))),
            FamilySpec::Spider { n } if n >= 1 => Ok(()),
            FamilySpec::Spider { n } => Err(bad("spider", format!("n={n}, need n>=1"))),
            FamilySpec::Friendship { n } if n >= 1 => Ok(()),
            FamilySpec::Friendship { n } => Err(bad("friendship", format!("n={n}, need n>=1"))),
            FamilySpec::RandomTree { n, .. } if n >= 1 => Ok(()),
            FamilySpec::RandomTree { n, .. } => {
                Err(bad("random-tree", format!("n={n}, need n>=1")))
            }
            FamilySpec::RandomConnected { n, m, .. } => {
                if n < 1 {
                    return Err(bad("random-connected", format!("n={n}, need n>=1")));
                }
                let max = n * (n - 1) / 2;
                if m + 1 < n || m > max {
                    return Err(FamilyError::Infeasible {
                        detail: format!("no connected graph with n={n}, m={m}"),
                    });
                }
                Ok(())
            }
        }
    }

    /// Builds the labeled graph for this spec.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Path { n } => build(n, (1..n).map(|i| (i, i + 1)).collect()),
            FamilySpec::Cycle { n } => {
                let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                e.push((1, n));
                build(n, e)
            }
            FamilySpec::Complete { n } => {
                let mut e = Vec::new();
                for i in 1..n {
                    for j in (i + 1)..=n {
                        e.push((i, j));
                    }
                }
                build(n, e)
            }
            FamilySpec::Wheel { n } => {
                let mut e: Vec<_> = (2..=n).map(|j| (1, j)).collect();
                e.extend((2..n).map(|j| (j, j + 1)));
                e.push((2, n));
                build(n, e)
            }
            FamilySpec::CompleteBipartite { n1, n2 } => {
                let mut e = Vec::new();
                for i in 1..=n1 {
                    for j in 1..=n2 {
                        e.push((i, n1 + j));
                    }
                }
                build(n1 + n2, e)
            }
            FamilySpec::Star { n } => build(n, (2..=n).map(|j| (1, j)).collect()),
            FamilySpec::DoubleStar { p, q } => {
                let n = p + q + 2;
                let mut e: Vec<_> = (1..=p).map(|i| (i, n - 1)).collect();
                e.extend((p + 1..=p + q).map(|i| (i, n)));
                e.push((n - 1, n));
                build(n, e)
            }
            FamilySpec::Diam4Tree { n } => {
                let mut e = vec![(1, 2), (2, 3), (3, 4), (4, 5)];
                e.extend((1..=n - 5).map(|i| (3, 5 + i)));
                build(n, e)
            }
            FamilySpec::Spider { n } => {
                let mut e = Vec::new();
                for i in 1..=n {
                    e.push((1, 1 + i));
                    e.push((1 + i, 1 + n + i));
                }
                build(2 * n + 1, e)
            }
            FamilySpec::Friendship { n } => {
                let mut e: Vec<_> = (1..=2 * n).map(|i| (1, 1 + i)).collect();
                e.extend((1..=n).map(|i| (2 * i, 2 * i + 1)));
                build(2 * n + 1, e)
            }
            FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
            FamilySpec::RandomConnected { n, m, seed } => random_connected(n, m, seed)?,
        };
        Ok(g)
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::build(n, &edges).expect("family edges are valid by construction")
}

/// Uniform random labeled tree via Prüfer decoding.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return build(1, Vec::new());
    }
    if n == 2 {
        return build(2, vec![(1, 2)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    build(n, prufer_decode(n, &seq))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut degree = vec![1usize; n + 1];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(leaf) = leaves.pop().expect("tree decoding always has a leaf");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    edges
}

/// Uniform edge set of the requested size, rejection-sampled until connected.
fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in (i + 1)..=n {
            pairs.push((i, j));
        }
    }
    const MAX_ATTEMPTS: usize = 1_000_000;
    for _ in 0..MAX_ATTEMPTS {
        // Partial Fisher-Yates: the first m entries are a uniform m-subset.
        for k in 0..m {
            let pick = rng.gen_range(k..pairs.len());
            pairs.swap(k, pick);
        }
        let g = build(n, pairs[..m].to_vec());
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::Infeasible {
        detail: format!("rejection sampling budget exhausted for n={n}, m={m}"),
    })
}

/// Corona G∘K₁: one pendant vertex attached to each vertex of `g`.
///
/// Vertex `n+i` is the pendant of vertex `i`; original edges keep their ids.
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges().to_vec();
    edges.extend((1..=n).map(|i| (i, n + i)));
    Graph::build(2 * n, &edges).expect("corona edges are valid")
}

/// 2-corona G∘P₂: a disjoint 2-edge path `i — n+i — 2n+i` attached at each
/// vertex of `g`.
pub fn corona_p2(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges().to_vec();
    for i in 1..=n {
        edges.push((i, n + i));
        edges.push((n + i, 2 * n + i));
    }
    Graph::build(3 * n, &edges).expect("corona edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    /// Brute-force labeled-graph isomorphism for orders up to ~9.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() || a.size() != b.size() {
            return false;
        }
        let n = a.order();
        let mut da: Vec<usize> = (1..=n).map(|v| a.degree(v)).collect();
        let mut db: Vec<usize> = (1..=n).map(|v| b.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut map = vec![0usize; n + 1];
        let mut used = vec![false; n + 1];
        fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            let n = a.order();
            if v > n {
                return true;
            }
            for w in 1..=n {
                if used[w] || a.degree(v) != b.degree(w) {
                    continue;
                }
                let ok = (1..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
                if ok {
                    map[v] = w;
                    used[w] = true;
                    if extend(a, b, v + 1, map, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        extend(a, b, 1, &mut map, &mut used)
    }

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn family_counts_follow_conventions() {
        let w5 = gen(FamilySpec::Wheel { n: 5 });
        assert_eq!((w5.order(), w5.size()), (5, 8));
        assert_eq!(w5.degree(1), 4); // hub

        let s3 = gen(FamilySpec::Spider { n: 3 });
        assert_eq!((s3.order(), s3.size()), (7, 6));
        assert_eq!(s3.leaves().len(), 3);

        let f2 = gen(FamilySpec::Friendship { n: 2 });
        assert_eq!((f2.order(), f2.size()), (5, 6));

        let t6 = gen(FamilySpec::Diam4Tree { n: 6 });
        assert!(t6.is_tree());
        assert_eq!(t6.diameter(), Some(4));
        assert_eq!(t6.leaves().to_vec(), vec![1, 5, 6]);
        assert_eq!(t6.degree(3), 3); // n - 3

        let ds = gen(FamilySpec::DoubleStar { p: 2, q: 2 });
        assert_eq!(ds.diameter(), Some(3));
        assert_eq!(ds.leaves().to_vec(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(matches!(
            FamilySpec::Cycle { n: 2 }.generate(),
            Err(FamilyError::BadParameter { .. })
        ));
        assert!(matches!(
            FamilySpec::Wheel { n: 3 }.generate(),
            Err(FamilyError::BadParameter { .. })
        ));
        assert!(matches!(
            FamilySpec::Diam4Tree { n: 5 }.generate(),
            Err(FamilyError::BadParameter { .. })
        ));
        assert!(matches!(
            FamilySpec::RandomConnected { n: 4, m: 2, seed: 1 }.generate(),
            Err(FamilyError::Infeasible { .. })
        ));
        assert!(matches!(
            FamilySpec::RandomConnected { n: 4, m: 7, seed: 1 }.generate(),
            Err(FamilyError::Infeasible { .. })
        ));
    }

    #[test]
    fn small_case_identifications() {
        assert!(isomorphic(
            &gen(FamilySpec::Wheel { n: 4 }),
            &gen(FamilySpec::Complete { n: 4 })
        ));
        assert!(isomorphic(
            &gen(FamilySpec::CompleteBipartite { n1: 2, n2: 2 }),
            &gen(FamilySpec::Cycle { n: 4 })
        ));
        assert!(isomorphic(
            &gen(FamilySpec::Spider { n: 1 }),
            &gen(FamilySpec::Star { n: 3 })
        ));
        assert!(isomorphic(
            &gen(FamilySpec::Spider { n: 2 }),
            &gen(FamilySpec::Path { n: 5 })
        ));
        assert!(!isomorphic(
            &gen(FamilySpec::Path { n: 4 }),
            &gen(FamilySpec::Star { n: 4 })
        ));
    }

    #[test]
    fn star_equals_bipartite_one_side() {
        let a = gen(FamilySpec::Star { n: 6 });
        let b = gen(FamilySpec::CompleteBipartite { n1: 1, n2: 5 });
        assert_eq!(a, b);
    }

    #[test]
    fn corona_examples() {
        let p2 = gen(FamilySpec::Path { n: 2 });
        let c = corona_k1(&p2);
        assert_eq!(c.edges(), &[(1, 2), (1, 3), (2, 4)]);

        let c3 = gen(FamilySpec::Cycle { n: 3 });
        let ck = corona_k1(&c3);
        assert_eq!((ck.order(), ck.size()), (6, 6));
        assert_eq!(ck.leaves().len(), 3);

        let k4 = gen(FamilySpec::Complete { n: 4 });
        assert_eq!(corona_k1(&k4).order(), 8);

        let p6ish = corona_p2(&p2);
        assert!(isomorphic(&p6ish, &gen(FamilySpec::Path { n: 6 })));

        let k3 = gen(FamilySpec::Complete { n: 3 });
        assert_eq!(corona_p2(&k3).order(), 9);

        let cp = corona_p2(&c3);
        assert_eq!(cp.leaves().to_vec(), vec![7, 8, 9]);
    }

    #[test]
    fn random_generators_are_deterministic() {
        let a = gen(FamilySpec::RandomTree { n: 7, seed: 42 });
        let b = gen(FamilySpec::RandomTree { n: 7, seed: 42 });
        assert_eq!(a, b);
        let c = gen(FamilySpec::RandomTree { n: 7, seed: 43 });
        assert_ne!(a, c);

        let g = gen(FamilySpec::RandomConnected { n: 6, m: 7, seed: 9 });
        let h = gen(FamilySpec::RandomConnected { n: 6, m: 7, seed: 9 });
        assert_eq!(g, h);
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20 {
            let t = gen(FamilySpec::RandomTree { n: 8, seed });
            assert!(t.is_tree());
        }
    }

    #[test]
    fn random_connected_matches_request() {
        for seed in 0..10 {
            let g = gen(FamilySpec::RandomConnected { n: 6, m: 8, seed });
            assert_eq!((g.order(), g.size()), (6, 8));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn generated_families_are_connected() {
        let specs = [
            FamilySpec::Path { n: 1 },
            FamilySpec::Path { n: 6 },
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Complete { n: 5 },
            FamilySpec::Wheel { n: 6 },
            FamilySpec::CompleteBipartite { n1: 2, n2: 4 },
            FamilySpec::Star { n: 7 },
            FamilySpec::DoubleStar { p: 2, q: 3 },
            FamilySpec::Diam4Tree { n: 8 },
            FamilySpec::Spider { n: 4 },
            FamilySpec::Friendship { n: 3 },
            FamilySpec::RandomTree { n: 9, seed: 5 },
        ];
        for spec in specs {
            let g = gen(spec);
            assert!(g.is_connected(), "{spec:?} should be connected");
        }
    }

    #[test]
    fn prufer_decode_known_sequence() {
        // Sequence (4,4) on 4 vertices is the star centered at 4.
        let edges = prufer_decode(4, &[4, 4]);
        let g = Graph::build(4, &edges).unwrap();
        assert_eq!(g.leaves(), VertexSet::from_iter(4, [1, 2, 3]));
        assert_eq!(g.degree(4), 3);
    }
}
