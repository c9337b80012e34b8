//! Proper vertex colorings: a greedy baseline and a constructive Brooks
//! coloring that uses at most Δ colors on every connected component that is
//! neither complete nor an odd cycle.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A proper coloring with colors `0..num_colors`, every color class nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    classes: Vec<VertexSet>,
}

impl Coloring {
    /// Builds a coloring from raw color indices. Unused indices are squeezed
    /// out while keeping the relative order of the ones that are used.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let n = assignment.len();
        let top = assignment.iter().copied().max().map_or(0, |c| c + 1);
        let mut used = vec![false; top];
        for &c in &assignment {
            used[c] = true;
        }
        let mut rank = vec![usize::MAX; top];
        let mut next = 0;
        for c in 0..top {
            if used[c] {
                rank[c] = next;
                next += 1;
            }
        }
        let assignment: Vec<usize> = assignment.into_iter().map(|c| rank[c]).collect();
        let mut classes = vec![VertexSet::new(n); next];
        for (v, &c) in assignment.iter().enumerate() {
            classes[c].insert(v);
        }
        Coloring {
            assignment,
            classes,
        }
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// True iff no edge of `g` joins two vertices of the same color.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        g.n() == self.assignment.len()
            && g.edges()
                .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// Colors vertices in `order`, each with the smallest color not already used
/// by one of its colored neighbors.
pub fn greedy_coloring(g: &Graph, order: &[Vertex]) -> Result<Coloring> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::invalid(format!(
            "order has {} entries, expected a permutation of 0..{n}",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::invalid(format!(
                "order is not a permutation of 0..{n} (offending entry {v})"
            )));
        }
    }
    let mut colors = vec![None; n];
    assign_greedy(g, order, &mut colors);
    Ok(Coloring::from_assignment(
        colors.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

/// Connected components of `g` that induce a complete graph on exactly
/// `size` vertices.
pub fn find_complete_components(g: &Graph, size: usize) -> Vec<VertexSet> {
    g.components()
        .into_iter()
        .filter(|c| c.len() == size && c.iter().all(|&v| g.neighbors(v).len() == size - 1))
        .map(|c| VertexSet::from_vertices(g.n(), c).expect("component vertices are in range"))
        .collect()
}

/// Colors each connected component separately. A component that is
/// neither complete nor an odd cycle gets at most Δ(component) colors,
/// complete components `K_m` get `m`, odd cycles get 3. Deterministic.
pub fn brooks_coloring(g: &Graph) -> Coloring {
    let mut assignment = vec![0; g.n()];
    for component in g.components() {
        let local = color_component(&g.induced(&component));
        for (i, &v) in component.iter().enumerate() {
            assignment[v] = local[i];
        }
    }
    Coloring::from_assignment(assignment)
}

fn color_component(h: &Graph) -> Vec<usize> {
    let m = h.n();
    let delta = h.max_degree();
    if h.degrees().all(|d| d + 1 == m) {
        return (0..m).collect();
    }
    if delta == 2 && h.regularity() == Some(2) {
        return match h.bipartition() {
            Some((left, _)) => (0..m).map(|v| usize::from(!left.contains(v))).collect(),
            None => finish(h, &(0..m).collect::<Vec<_>>(), vec![None; m]),
        };
    }
    if let Some(root) = (0..m).find(|&v| h.neighbors(v).len() < delta) {
        let order = reverse_bfs_order(h, root, &[]);
        return finish(h, &order, vec![None; m]);
    }
    if let Some(cut) = find_cut_vertex(h) {
        return color_around_cut_vertex(h, cut);
    }
    match find_brooks_triple(h) {
        Some((v, x, y)) => {
            let mut colors = vec![None; m];
            colors[x] = Some(0);
            colors[y] = Some(0);
            let order = reverse_bfs_order(h, v, &[x, y]);
            finish(h, &order, colors)
        }
        None => {
            // Unreachable for Δ ≥ 3 regular 2-connected non-complete graphs.
            debug_assert!(
                false,
                "no Brooks triple in a component that should have one"
            );
            finish(h, &(0..m).collect::<Vec<_>>(), vec![None; m])
        }
    }
}

/// Δ-regular component with cut vertex `cut`: every piece (a component of
/// `h - cut` together with `cut`) sees `cut` with degree below Δ, so each
/// piece colors greedily from `cut` with Δ colors. Pieces are then relabeled
/// so that `cut` has color 0 everywhere.
fn color_around_cut_vertex(h: &Graph, cut: Vertex) -> Vec<usize> {
    let m = h.n();
    let mut colors = vec![0; m];
    let mut seen = vec![false; m];
    seen[cut] = true;
    for &start in h.neighbors(cut) {
        if seen[start] {
            continue;
        }
        let mut piece = vec![cut];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            piece.push(u);
            for &w in h.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        piece.sort_unstable();
        let sub = h.induced(&piece);
        let sub_cut = piece
            .binary_search(&cut)
            .expect("cut vertex is in every piece");
        let order = reverse_bfs_order(&sub, sub_cut, &[]);
        let mut local = finish(&sub, &order, vec![None; piece.len()]);
        let pivot = local[sub_cut];
        for c in &mut local {
            if *c == pivot {
                *c = 0;
            } else if *c == 0 {
                *c = pivot;
            }
        }
        for (i, &v) in piece.iter().enumerate() {
            if v != cut {
                colors[v] = local[i];
            }
        }
    }
    colors
}

/// BFS from `root` avoiding `removed`, returned in reverse so that `root`
/// comes last and every other vertex precedes its BFS parent.
fn reverse_bfs_order(h: &Graph, root: Vertex, removed: &[Vertex]) -> Vec<Vertex> {
    let mut seen = vec![false; h.n()];
    for &x in removed {
        seen[x] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order.reverse();
    order
}

fn assign_greedy(h: &Graph, order: &[Vertex], colors: &mut [Option<usize>]) {
    let mut taken = vec![false; h.max_degree() + 2];
    for &v in order {
        for &w in h.neighbors(v) {
            if let Some(c) = colors[w] {
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        let c = taken
            .iter()
            .position(|&t| !t)
            .expect("a free color always exists");
        colors[v] = Some(c);
        taken.fill(false);
    }
}

fn finish(h: &Graph, order: &[Vertex], mut colors: Vec<Option<usize>>) -> Vec<usize> {
    assign_greedy(h, order, &mut colors);
    colors
        .into_iter()
        .map(|c| c.expect("every vertex is reached"))
        .collect()
}

fn connected_without(h: &Graph, removed: &[Vertex]) -> bool {
    let Some(root) = (0..h.n()).find(|v| !removed.contains(v)) else {
        return true;
    };
    reverse_bfs_order(h, root, removed).len() + removed.len() == h.n()
}

/// Lowest-id vertex whose removal disconnects `h`.
fn find_cut_vertex(h: &Graph) -> Option<Vertex> {
    (0..h.n()).find(|&v| !connected_without(h, &[v]))
}

/// First `(v, x, y)` in id order with `x, y` non-adjacent neighbors of `v`
/// and `h - {x, y}` connected.
fn find_brooks_triple(h: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    for v in 0..h.n() {
        let nbrs = h.neighbors(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !h.has_edge(x, y) && connected_without(h, &[x, y]) {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}
