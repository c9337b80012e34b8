//! Auxiliary graphs whose proper colorings separate neighborhoods.
//!
//! A proper coloring of the common-neighbor graph gives every open
//! neighborhood `N(v)` pairwise distinct colors; a proper coloring of the
//! square gives every closed neighborhood `N[v]` pairwise distinct colors.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

/// `G'`: same vertex set, `uv` an edge iff `u != v` and `N(u) ∩ N(v)` is
/// nonempty in `g`. Isolated vertices are kept.
pub fn common_neighbor_graph(g: &Graph) -> Graph {
    let mut pairs: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for w in 0..g.n() {
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                pairs.insert((u, v));
            }
        }
    }
    from_pairs(g.n(), pairs)
}

/// `G''`: the union of `g` and its common-neighbor graph, i.e. the square of `g`.
pub fn closed_square_graph(g: &Graph) -> Graph {
    let mut pairs: BTreeSet<(Vertex, Vertex)> = g.edges().collect();
    for w in 0..g.n() {
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                pairs.insert((u, v));
            }
        }
    }
    from_pairs(g.n(), pairs)
}

fn from_pairs(n: usize, pairs: BTreeSet<(Vertex, Vertex)>) -> Graph {
    let mut adjacency = vec![Vec::new(); n];
    for (u, v) in pairs {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Graph::from_sorted_adjacency(adjacency)
}
