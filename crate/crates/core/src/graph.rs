//! Immutable simple undirected graphs and vertex subsets.
//!
//! Vertices are dense ids `0..n`. Neighbor lists are kept sorted so that
//! adjacency tests are a binary search and neighborhood intersections are a
//! linear merge.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A path length or cycle length that may be unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    /// Builds a graph from edges between arbitrary labels. Labels are mapped
    /// to dense ids in order of first appearance; the returned vector maps
    /// each id back to its label.
    pub fn from_labeled_edges<L, I>(edges: I) -> Result<(Self, Vec<L>)>
    where
        L: Eq + Hash + Clone,
        I: IntoIterator<Item = (L, L)>,
    {
        let mut index: HashMap<L, Vertex> = HashMap::new();
        let mut labels = Vec::new();
        let mut dense = Vec::new();
        let mut id_of = |label: L, labels: &mut Vec<L>| {
            *index.entry(label.clone()).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        for (a, b) in edges {
            let u = id_of(a, &mut labels);
            let v = id_of(b, &mut labels);
            dense.push((u, v));
        }
        let g = Graph::from_edges(labels.len(), dense)?;
        Ok((g, labels))
    }

    /// Takes ownership of adjacency lists that are already sorted, symmetric
    /// and free of loops and duplicates.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && adjacency[v].binary_search(&u).is_ok())
        }));
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted open neighborhood of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let mut degrees = self.degrees();
        let r = degrees.next()?;
        degrees.all(|d| d == r).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut members = Vec::new();
            while let Some(u) = stack.pop() {
                members.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Two-coloring of the vertex set, or `None` if the graph has an odd
    /// cycle. Each component's lowest vertex goes into the first part.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::new(n);
        let mut right = VertexSet::new(n);
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Some((left, right))
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    /// Length of a shortest cycle. A BFS from every root; every non-tree edge
    /// `uw` closes a walk of length `dist(u) + dist(w) + 1`, and the minimum
    /// over all roots is exact.
    pub fn girth(&self) -> Distance {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Distance::Infinite
        } else {
            Distance::Finite(best)
        }
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!(
                "common neighbors need two distinct vertices, got {u} twice"
            )));
        }
        let mut set = VertexSet::new(self.n());
        merge_intersect(&self.adjacency[u], &self.adjacency[v], |w| {
            set.insert(w);
        });
        Ok(set)
    }

    /// The subgraph induced by `vertices` (sorted, distinct), relabeled to
    /// `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (position[w] != usize::MAX).then_some(position[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }
}

pub(crate) fn merge_intersect(a: &[Vertex], b: &[Vertex], mut hit: impl FnMut(Vertex)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                hit(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// A subset of the vertex set `0..n` backed by a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = VertexSet::new(n);
        for v in 0..n {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = VertexSet::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// The vertex count of the ambient graph.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns true if `v` was not already present. Panics if `v >= n`.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(
            v < self.n,
            "vertex {v} out of range for universe {}",
            self.n
        );
        let fresh = !self.contains(v);
        self.words[v / 64] |= 1 << (v % 64);
        self.len += usize::from(fresh);
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let present = self.contains(v);
        if present {
            self.words[v / 64] &= !(1 << (v % 64));
            self.len -= 1;
        }
        present
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet {
            n: self.n,
            words,
            len,
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of members among `vertices`.
    pub fn count_in(&self, vertices: &[Vertex]) -> usize {
        vertices.iter().filter(|&&v| self.contains(v)).count()
    }

    /// `0..n` minus this set.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for v in self.iter() {
            out.remove(v);
        }
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
