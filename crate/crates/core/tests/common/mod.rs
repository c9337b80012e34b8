//! Helpers shared by the integration suites: an exhaustive domination
//! oracle and seeded random graph sources.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tupledom::{Graph, Variant};

/// Minimum k-tuple (total) dominating set size by enumerating all 2^n
/// subsets with bitmask neighborhoods; `None` when infeasible. n <= 20.
pub fn exhaustive_gamma(g: &Graph, k: usize, variant: Variant) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20, "exhaustive oracle is for n <= 20");
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            let open = g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w);
            match variant {
                Variant::Total => open,
                Variant::Closed => open | 1 << v,
            }
        })
        .collect();
    (0u32..1 << n)
        .filter(|&s| masks.iter().all(|&m| (s & m).count_ones() as usize >= k))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Erdős–Rényi G(n, p) with a seeded source.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Disjoint union, relabeling the second graph after the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    Graph::from_edges(
        a.n() + b.n(),
        a.edges()
            .chain(b.edges().map(|(u, v)| (u + shift, v + shift))),
    )
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
