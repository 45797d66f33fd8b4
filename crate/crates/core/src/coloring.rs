//! Exact chromatic number.
//!
//! The main solver is a DSATUR-style branch and bound: vertices are chosen
//! by maximum saturation (lowest index on ties), a fresh color may only be
//! the next unused index, and a greedy clique seeds the lower bound. Work is
//! metered by a node budget so pathological inputs abort with a resource
//! error instead of hanging. [`brute_force_chromatic`] is an independent
//! oracle — plain index-order k-colorability search — kept deliberately free
//! of the DSATUR machinery so the two can check each other.

use thiserror::Error;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("chromatic search exceeded the node budget of {budget}")]
    NodeBudgetExceeded { budget: u64 },
    #[error("brute force is limited to {max} vertices, got {n}")]
    BruteForceTooLarge { n: usize, max: usize },
}

/// A proper coloring using colors exactly `{1, .., k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    colors: Vec<usize>,
    k: usize,
}

impl ProperColoring {
    /// 1-based color per vertex.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors; the chromatic number when produced by the solver.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Check properness and that the palette is exactly `{1, .., k}`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        if self.colors.iter().any(|&c| c == 0 || c > self.k) {
            return false;
        }
        let mut seen = vec![false; self.k + 1];
        for &c in &self.colors {
            seen[c] = true;
        }
        if !seen[1..].iter().all(|&s| s) {
            return false;
        }
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Exact chromatic number with witness, default node budget.
pub fn chromatic_number(g: &Graph) -> Result<ProperColoring, ColoringError> {
    chromatic_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Exact chromatic number with witness under an explicit node budget.
///
/// Components are solved independently (their optima combine as a maximum),
/// with the budget shared across them.
pub fn chromatic_number_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<ProperColoring, ColoringError> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut k = 0usize;
    let mut nodes_used = 0u64;
    for comp in g.components() {
        let (sub, back) = g.induced_subgraph(&comp);
        let sol = solve_connected(&sub, budget, &mut nodes_used)?;
        for (i, &orig) in back.iter().enumerate() {
            colors[orig] = sol.colors[i];
        }
        k = k.max(sol.k);
    }
    let out = ProperColoring { colors, k };
    debug_assert!(out.is_valid_for(g));
    Ok(out)
}

/// Chromatic number of the subgraph induced by `keep`.
pub fn chromatic_number_induced(g: &Graph, keep: &VertexSet) -> Result<usize, ColoringError> {
    let (sub, _) = g.induced_subgraph(keep);
    Ok(chromatic_number(&sub)?.k())
}

fn solve_connected(
    g: &Graph,
    budget: u64,
    nodes_used: &mut u64,
) -> Result<ProperColoring, ColoringError> {
    let n = g.n();
    debug_assert!(n >= 1, "components are nonempty");
    if g.m() == 0 {
        return Ok(ProperColoring {
            colors: vec![1; n],
            k: 1,
        });
    }
    let lb = greedy_clique(g).len().max(2);
    let greedy = dsatur_greedy(g);
    if greedy.k == lb {
        return Ok(greedy);
    }
    let mut search = Search {
        g,
        n,
        colors: vec![0; n],
        neighbor_color_count: vec![vec![0u32; n + 2]; n],
        saturation: vec![0u32; n],
        uncolored: n,
        used: 0,
        lb,
        best: greedy,
        done: false,
        budget,
        nodes: nodes_used,
    };
    search.dfs()?;
    Ok(search.best)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    colors: Vec<usize>,
    /// `neighbor_color_count[v][c]`: how many colored neighbors of `v` have
    /// color `c`; zero means `c` is feasible at `v`.
    neighbor_color_count: Vec<Vec<u32>>,
    saturation: Vec<u32>,
    uncolored: usize,
    used: usize,
    lb: usize,
    best: ProperColoring,
    done: bool,
    budget: u64,
    nodes: &'a mut u64,
}

impl Search<'_> {
    fn dfs(&mut self) -> Result<(), ColoringError> {
        if self.done || self.used >= self.best.k {
            return Ok(());
        }
        if self.uncolored == 0 {
            self.best = ProperColoring {
                colors: self.colors.clone(),
                k: self.used,
            };
            if self.best.k == self.lb {
                self.done = true;
            }
            return Ok(());
        }
        // Maximum saturation, lowest index on ties.
        let mut v = usize::MAX;
        let mut best_sat = 0u32;
        for u in 0..self.n {
            if self.colors[u] == 0 && (v == usize::MAX || self.saturation[u] > best_sat) {
                v = u;
                best_sat = self.saturation[u];
            }
        }
        let cmax = (self.used + 1).min(self.best.k - 1);
        for c in 1..=cmax {
            if self.neighbor_color_count[v][c] != 0 {
                continue;
            }
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(ColoringError::NodeBudgetExceeded {
                    budget: self.budget,
                });
            }
            let fresh = c == self.used + 1;
            self.assign(v, c, fresh);
            self.dfs()?;
            self.unassign(v, c, fresh);
            if self.done {
                return Ok(());
            }
        }
        Ok(())
    }

    fn assign(&mut self, v: usize, c: usize, fresh: bool) {
        self.colors[v] = c;
        self.uncolored -= 1;
        if fresh {
            self.used += 1;
        }
        for w in self.g.neighbors(v).iter() {
            let cnt = &mut self.neighbor_color_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize, fresh: bool) {
        self.colors[v] = 0;
        self.uncolored += 1;
        if fresh {
            self.used -= 1;
        }
        for w in self.g.neighbors(v).iter() {
            let cnt = &mut self.neighbor_color_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

/// Greedy clique: seeded at every vertex, extended by the highest-degree
/// compatible vertex. A lower-bound heuristic, not a maximum clique.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for seed in 0..n {
        let mut clique = vec![seed];
        let mut cand = g.neighbors(seed).clone();
        loop {
            let mut pick = usize::MAX;
            let mut pick_deg = 0usize;
            for u in cand.iter() {
                let d = g.degree(u);
                if pick == usize::MAX || d > pick_deg {
                    pick = u;
                    pick_deg = d;
                }
            }
            if pick == usize::MAX {
                break;
            }
            clique.push(pick);
            cand.and_with(g.neighbors(pick));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

fn dsatur_greedy(g: &Graph) -> ProperColoring {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut saturation = vec![0u32; n];
    let mut neighbor_colors: Vec<VertexSet> = vec![VertexSet::new(n + 2); n];
    let mut k = 0usize;
    for _ in 0..n {
        let mut v = usize::MAX;
        let mut best_sat = 0u32;
        for u in 0..n {
            if colors[u] == 0 && (v == usize::MAX || saturation[u] > best_sat) {
                v = u;
                best_sat = saturation[u];
            }
        }
        let mut c = 1usize;
        while neighbor_colors[v].contains(c) {
            c += 1;
        }
        colors[v] = c;
        k = k.max(c);
        for w in g.neighbors(v).iter() {
            if !neighbor_colors[w].contains(c) {
                neighbor_colors[w].insert(c);
                saturation[w] += 1;
            }
        }
    }
    ProperColoring { colors, k }
}

/// Exhaustive chromatic number for `n ≤ 12`: iterative deepening over `k`
/// with index-order backtracking; the only symmetry rule is that a new color
/// must be the next unused index.
pub fn brute_force_chromatic(g: &Graph) -> Result<usize, ColoringError> {
    const MAX: usize = 12;
    let n = g.n();
    if n > MAX {
        return Err(ColoringError::BruteForceTooLarge { n, max: MAX });
    }
    for k in 0..=n {
        if colorable_with(g, k) {
            return Ok(k);
        }
    }
    unreachable!("every graph is n-colorable")
}

fn colorable_with(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, colors: &mut Vec<usize>, i: usize, used: usize) -> bool {
        if i == g.n() {
            return true;
        }
        let cmax = k.min(used + 1);
        'colors: for c in 1..=cmax {
            for (j, &assigned) in colors.iter().enumerate().take(i) {
                if assigned == c && g.adjacent(i, j) {
                    continue 'colors;
                }
            }
            colors[i] = c;
            if rec(g, k, colors, i + 1, used.max(c)) {
                return true;
            }
            colors[i] = 0;
        }
        false
    }
    rec(g, k, &mut vec![0; g.n()], 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, random_graph, seeded_rng, Graph};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    #[test]
    fn frozen_small_values() {
        assert_eq!(chromatic_number(&complete_graph(4)).unwrap().k(), 4);
        assert_eq!(chromatic_number(&cycle_graph(5)).unwrap().k(), 3);
        assert_eq!(chromatic_number(&cycle_graph(6)).unwrap().k(), 2);
        assert_eq!(chromatic_number(&path_graph(4)).unwrap().k(), 2);
        assert_eq!(chromatic_number(&petersen()).unwrap().k(), 3);
        assert_eq!(chromatic_number(&Graph::build(3, &[]).unwrap()).unwrap().k(), 1);
        assert_eq!(chromatic_number(&Graph::build(0, &[]).unwrap()).unwrap().k(), 0);
    }

    #[test]
    fn oracle_agrees_with_solver_on_random_graphs() {
        let mut rng = seeded_rng(23);
        for trial in 0..200 {
            let n = 1 + trial % 9;
            let g = random_graph(n, 0.5, &mut rng);
            let exact = chromatic_number(&g).unwrap();
            let brute = brute_force_chromatic(&g).unwrap();
            assert_eq!(exact.k(), brute, "n={n} trial={trial}");
            assert!(exact.is_valid_for(&g));
        }
    }

    #[test]
    fn witness_palette_is_contiguous_even_across_components() {
        let mut edges = vec![(0, 1), (1, 2), (2, 0)]; // triangle
        edges.push((3, 4)); // edge
        let g = Graph::build(6, &edges).unwrap(); // plus isolated vertex 5
        let sol = chromatic_number(&g).unwrap();
        assert_eq!(sol.k(), 3);
        assert!(sol.is_valid_for(&g));
    }

    #[test]
    fn bounds_recomputed_independently() {
        // Test-local greedy coloring and clique check, free of solver code.
        fn naive_greedy_k(g: &Graph) -> usize {
            let mut colors = vec![0usize; g.n()];
            let mut k = 0;
            for v in 0..g.n() {
                let mut c = 1;
                while g.neighbors(v).iter().any(|w| colors[w] == c) {
                    c += 1;
                }
                colors[v] = c;
                k = k.max(c);
            }
            k
        }
        fn is_clique(g: &Graph, vs: &[usize]) -> bool {
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.adjacent(u, v)))
        }
        let mut rng = seeded_rng(29);
        for _ in 0..100 {
            let g = random_graph(10, 0.5, &mut rng);
            let clique = greedy_clique(&g);
            assert!(is_clique(&g, &clique));
            let k = chromatic_number(&g).unwrap().k();
            assert!(clique.len() <= k);
            assert!(k <= naive_greedy_k(&g).max(1));
        }
    }

    #[test]
    fn node_budget_aborts() {
        // C5 has clique bound 2 but needs 3 colors, so the search must
        // branch; a zero budget therefore trips immediately.
        let err = chromatic_number_with_budget(&cycle_graph(5), 0).unwrap_err();
        assert_eq!(err, ColoringError::NodeBudgetExceeded { budget: 0 });
    }

    #[test]
    fn deterministic_witness() {
        let g = petersen();
        let a = chromatic_number(&g).unwrap();
        let b = chromatic_number(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn induced_subgraph_chromatic() {
        let g = complete_graph(5);
        let k = chromatic_number_induced(&g, &VertexSet::from_indices(5, [0, 2, 4])).unwrap();
        assert_eq!(k, 3);
        let empty = chromatic_number_induced(&g, &VertexSet::new(5)).unwrap();
        assert_eq!(empty, 0);
    }

    #[test]
    fn brute_force_guard() {
        let g = Graph::build(13, &[]).unwrap();
        assert_eq!(
            brute_force_chromatic(&g).unwrap_err(),
            ColoringError::BruteForceTooLarge { n: 13, max: 12 }
        );
    }
}
