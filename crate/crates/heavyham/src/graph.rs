//! Immutable simple graphs with bit-row adjacency.
//!
//! Vertices are `0..n`. Adjacency is stored as one bit row per vertex so
//! neighborhood intersections, independence tests and subset iteration are
//! word-parallel; the survey harness touches millions of graphs, so the
//! representation stays flat and allocation-light. Graphs are immutable
//! after construction and freely shareable across threads.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("induced subgraph of an empty vertex set")]
    EmptyVertexSet,
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// Iterate the set bit positions of a word slice, ascending.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

pub(crate) fn count_bits(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// A subset of the vertices of a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    pub fn full(n: usize) -> Self {
        VertexSet::from_iter(n, 0..n)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.n,
            "vertex {v} out of range for universe {}",
            self.n
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        count_bits(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits(&self.words)
    }
}

/// An immutable simple graph: no loops, no multi-edges, symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an unordered edge list. Duplicate edges are
    /// merged; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn empty(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        let w = self.words_per_row;
        self.bits[u * w + v / 64] |= 1 << (v % 64);
        self.bits[v * w + u / 64] |= 1 << (u % 64);
    }

    /// All labeled graphs on `n` vertices are indexed by an edge bitmask in
    /// column-major upper-triangle order: bit for (u,v), u < v, is
    /// `v*(v-1)/2 + u`. This matches the bit order of the graph6 format.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> k & 1 == 1 {
                    g.add_edge_unchecked(u, v);
                }
                k += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range");
        count_bits(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Some(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words_per_row];
        seen[0] = 1;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for (wi, &w) in self.row(x).iter().enumerate() {
                let mut fresh = w & !seen[wi];
                seen[wi] |= w;
                while fresh != 0 {
                    let y = wi * 64 + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// `true` iff the graph has at least 3 vertices, is connected, and has
    /// no articulation vertex (iterative lowpoint computation).
    pub fn is_two_connected(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut timer = 0;
        let mut root_children = 0;
        let mut visited_count = 0;

        // stack of (vertex, neighbor iterator cursor)
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        visited_count += 1;

        while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
            // scan neighbors of v starting at *cursor
            let mut advanced = false;
            let mut next = *cursor;
            while next < n {
                let u = next;
                next += 1;
                if !self.adjacent(v, u) {
                    continue;
                }
                if disc[u] == usize::MAX {
                    *cursor = next;
                    parent[u] = v;
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    visited_count += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((u, 0));
                    advanced = true;
                    break;
                } else if u != parent[v] {
                    low[v] = low[v].min(disc[u]);
                }
            }
            if !advanced {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    // non-root articulation test
                    if p != 0 && low[v] >= disc[p] {
                        return false;
                    }
                }
            } else {
                continue;
            }
        }
        visited_count == n && root_children <= 1
    }

    /// Membership in the closure relation: `uv` is an edge or
    /// `d(u) + d(v) >= n`. Panics when `u == v`.
    pub fn in_closure(&self, u: usize, v: usize) -> bool {
        assert!(
            u != v,
            "closure relation is only defined for distinct vertices"
        );
        self.adjacent(u, v) || self.degree(u) + self.degree(v) >= self.n
    }

    /// The subgraph induced by `set`, relabeled to `0..set.len()`, together
    /// with the map from new index to original vertex id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let map: Vec<usize> = set.iter().collect();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Parses the edge-list interchange format: first non-comment line
    /// `n m`, then `m` lines `u v` (0-based). Lines starting with `#` are
    /// comments.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| GraphError::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list_string(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Convenience constructors used all over the test suites.
impl Graph {
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge_unchecked(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.adjacent(0, 2));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn dedupes_parallel_edges() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::complete(4).degree(2), 3);
        assert_eq!(Graph::cycle(5).degree(0), 2);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn degree_rejects_out_of_range() {
        Graph::cycle(5).degree(5);
    }

    #[test]
    fn distances() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.distance(0, 2), Some(2));
        assert_eq!(c5.distance(3, 3), Some(0));
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.distance(0, 2), None);
    }

    #[test]
    fn two_connectivity() {
        assert!(Graph::cycle(3).is_two_connected());
        assert!(!Graph::path(3).is_two_connected());
        assert!(!Graph::new(2, &[(0, 1)]).unwrap().is_two_connected());
        // bowtie: two triangles sharing vertex 2
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!bowtie.is_two_connected());
        assert!(Graph::complete(4).is_two_connected());
    }

    #[test]
    fn closure_relation() {
        let k13 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(k13.in_closure(0, 1)); // edge
        assert!(!k13.in_closure(1, 2)); // leaves: 1 + 1 < 4
        let c4 = Graph::cycle(4);
        assert!(c4.in_closure(0, 2)); // 2 + 2 >= 4
        assert!(c4.in_closure(2, 0)); // symmetric
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn closure_rejects_equal_vertices() {
        Graph::cycle(4).in_closure(1, 1);
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let (t, map) = k4
            .induced_subgraph(&VertexSet::from_iter(4, [0, 2, 3]))
            .unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.edge_count(), 3);
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = Graph::cycle(5);
        let (p, _) = c5
            .induced_subgraph(&VertexSet::from_iter(5, [0, 1, 2]))
            .unwrap();
        assert_eq!(p.edge_count(), 2); // path on 3 vertices

        let (iso, _) = c5
            .induced_subgraph(&VertexSet::from_iter(5, [0, 2]))
            .unwrap();
        assert_eq!(iso.edge_count(), 0);

        assert_eq!(
            c5.induced_subgraph(&VertexSet::new(5)),
            Err(GraphError::EmptyVertexSet)
        );
    }

    #[test]
    fn induced_on_full_set_is_identity() {
        let g = Graph::new(6, &[(0, 3), (1, 4), (2, 5), (0, 5), (1, 2)]).unwrap();
        let (h, map) = g.induced_subgraph(&VertexSet::full(6)).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn handshake_sum() {
        for mask in 0..64u64 {
            let g = Graph::from_edge_mask(4, mask);
            let total: usize = (0..4).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let text = g.to_edge_list_string();
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_accepts_comments() {
        let g = Graph::parse_edge_list("# a triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(Graph::parse_edge_list("3 two\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("2 1\n0 0\n").is_err());
    }
}
