//! Simple undirected graphs on a dense vertex range `0..n`.
//!
//! Adjacency is one bit row per vertex, which makes closed-neighborhood
//! parity queries and GF(2) row operations cheap. Vertices may carry
//! optional string labels so constructed families can mark structural roles
//! ("v", "w", leaves, copy centers) for later lookup.

use std::collections::VecDeque;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::set::VertexSet;

/// Fixed default seed for every randomized harness in this crate.
pub const DEFAULT_SEED: u64 = 0x0DD5EED;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },
    #[error("biconnectivity requires at least 3 vertices, got {n}")]
    TooSmallForBiconnectivity { n: usize },
    #[error("labels must cover exactly the vertex range: got {got} labels for {n} vertices")]
    LabelCountMismatch { got: usize, n: usize },
}

/// Girth as an explicit sentinel type; forests are `Infinite`, never a
/// stand-in large number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn as_finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

/// Simple undirected graph with bit-row adjacency and optional vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list.
    ///
    /// Out-of-range endpoints and self-loops are rejected with an error
    /// naming the offending pair; repeated edges are deduplicated (the bit
    /// rows make that automatic).
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    /// Edge list in canonical order: pairs `(u, v)` with `u < v`,
    /// lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bit row.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    // ----- labels ----------------------------------------------------------

    /// Attach one label per vertex. Labels, when present, must cover exactly
    /// the vertex range.
    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                got: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Lowest-index vertex carrying exactly this label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        labels.iter().position(|l| l == label)
    }

    /// All vertices whose label satisfies the predicate, ascending.
    pub fn vertices_where_label<F: Fn(&str) -> bool>(&self, pred: F) -> Vec<usize> {
        match &self.labels {
            None => Vec::new(),
            Some(labels) => (0..self.n).filter(|&v| pred(&labels[v])).collect(),
        }
    }

    // ----- structure -------------------------------------------------------

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            comp.insert(root);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                // No candidate through u can beat `best` once 2·dist[u] ≥ best.
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        continue;
                    }
                }
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        // Non-tree edge: closed walk through the root of
                        // length dist[u] + dist[v] + 1 contains a cycle no
                        // longer than that, and the minimum over all roots
                        // is exact.
                        let cand = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// Two-coloring when one exists. Deterministic: components are scanned by
    /// smallest vertex, and each component's smallest vertex lands in the
    /// first part.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n;
        let mut side = vec![u8::MAX; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let part_a = VertexSet::from_indices(n, (0..n).filter(|&v| side[v] == 0));
        let part_b = part_a.complement();
        Some((part_a, part_b))
    }

    /// Whether the graph is 2-connected: connected with no cut vertex.
    ///
    /// Defined only for `n ≥ 3`; smaller graphs are rejected.
    pub fn is_biconnected(&self) -> Result<bool, GraphError> {
        let n = self.n;
        if n < 3 {
            return Err(GraphError::TooSmallForBiconnectivity { n });
        }
        let adj_lists: Vec<Vec<usize>> = (0..n).map(|v| self.adj[v].to_indices()).collect();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut timer = 0usize;
        // Iterative DFS; frames are (vertex, parent, next unexplored slot).
        let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push((0, usize::MAX, 0));
        let mut root_children = 0usize;
        while let Some(&(v, p, idx)) = stack.last() {
            if idx < adj_lists[v].len() {
                stack.last_mut().unwrap().2 += 1;
                let w = adj_lists[v][idx];
                if disc[w] == usize::MAX {
                    if v == 0 {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != p {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(pv, _, _)) = stack.last() {
                    low[pv] = low[pv].min(low[v]);
                    if pv != 0 && low[v] >= disc[pv] {
                        return Ok(false); // pv is a cut vertex
                    }
                }
            }
        }
        if timer < n {
            return Ok(false); // disconnected
        }
        Ok(root_children < 2)
    }

    /// Necessary edge-count conditions for planarity: `m ≤ 3n − 6`, and when
    /// the girth `γ` is finite, `m(γ − 2) ≤ γ(n − 2)`. Vacuously true for
    /// forests and for fewer than 3 vertices. A pass is *not* a planarity
    /// certificate; a failure refutes planarity.
    pub fn planarity_necessary(&self) -> bool {
        if self.n < 3 {
            return true;
        }
        let n = self.n;
        let m = self.m();
        match self.girth() {
            Girth::Infinite => true,
            Girth::Finite(g) => m + 6 <= 3 * n && m * (g - 2) <= g * (n - 2),
        }
    }

    /// Induced subgraph on `keep`, plus the map from new indices back to the
    /// original vertices (ascending). Labels of kept vertices survive.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(keep.len(), self.n, "vertex set universe mismatch");
        let back: Vec<usize> = keep.to_indices();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let k = back.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (new, &old) in back.iter().enumerate() {
            let mut row = self.adj[old].clone();
            row.and_with(keep);
            for w in row.iter() {
                adj[new].insert(fwd[w]);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| back.iter().map(|&old| l[old].clone()).collect());
        (Graph { n: k, adj, labels }, back)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m())
    }
}

// ----- stock constructions and sampling -------------------------------------

/// Complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("complete graph edges are valid")
}

/// Cycle `C_n`, `n ≥ 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges).expect("cycle edges are valid")
}

/// Path on `n` vertices (`n − 1` edges).
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).expect("path edges are valid")
}

/// Deterministic RNG for the given seed; the single RNG used by every
/// randomized harness in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) sample: each pair becomes an edge independently with
/// probability `edge_prob`.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("sampled edges are valid")
}

/// All graphs on `n` labeled vertices, as edge-subset masks in numeric order.
/// Intended for exhaustive small-graph corpora (`n ≤ 6` keeps this tiny).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::build(n, &edges).expect("enumerated edges are valid")
    })
}
