//! Parametric graph constructions with controlled degree, girth, and
//! odd-domination structure.
//!
//! The builders here produce the witness graphs used throughout the test
//! suite: generalized theta gadgets whose interior parity constraints have
//! unique solutions, leaf-cycle assemblies with prescribed maximum degree and
//! girth whose odd-sum chromatic number is 6, a bipartite high-girth family
//! hitting the bipartite bound 4, a 36-vertex maximum-degree-5 graph hitting
//! the planar bound 8, bowtie attachments that multiply the number of
//! odd-dominating sets by exactly 4, and Cartesian products. Every layout is
//! deterministic and labeled by role.

use thiserror::Error;

use crate::coloring::chromatic_number;
use crate::graph::Graph;
use crate::odd_domination::solve_odd_domination;
use crate::set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("path counts a, b and segment parameter k must all be at least 1 (got a={a}, b={b}, k={k})")]
    ThetaParams { a: usize, b: usize, k: usize },
    #[error("path length residue must be 1 or 2 mod 3, got {len_mod3}")]
    BadResidue { len_mod3: usize },
    #[error("length {length} is not congruent to {len_mod3} mod 3")]
    ResidueMismatch { length: usize, len_mod3: usize },
    #[error("path length must be at least 4, got {length}")]
    PathTooShort { length: usize },
    #[error("maximum degree must be even and at least 4, got {delta}")]
    DeltaNotEven { delta: usize },
    #[error("maximum degree must be odd and at least 5, got {delta}")]
    DeltaNotOdd { delta: usize },
    #[error("replication parameter k must be at least 1")]
    KTooSmall,
    #[error("parallel path count must be even, got {count}")]
    OddPathCount { count: usize },
    #[error("endpoints {v} and {w} must be distinct vertices below {n}")]
    BadEndpoints { v: usize, w: usize, n: usize },
    #[error("girth target must be at least 1")]
    GirthTooSmall,
}

/// Incremental builder for labeled graphs assembled vertex by vertex.
struct Assembly {
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Assembly {
    fn new() -> Self {
        Assembly { edges: Vec::new(), labels: Vec::new() }
    }

    fn vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Lay a `from`,`to`-path with `length` edges, appending `length - 1`
    /// interior vertices labeled `{prefix}.1`, `{prefix}.2`, ….
    fn path(&mut self, from: usize, to: usize, length: usize, prefix: &str) -> Vec<usize> {
        assert!(length >= 2, "paths of length < 2 would duplicate edges");
        let mut interior = Vec::with_capacity(length - 1);
        let mut prev = from;
        for j in 1..length {
            let x = self.vertex(format!("{prefix}.{j}"));
            self.edge(prev, x);
            interior.push(x);
            prev = x;
        }
        self.edge(prev, to);
        interior
    }

    fn build(self) -> Graph {
        let mut g = Graph::build(self.labels.len(), &self.edges)
            .expect("assembled layouts are always simple");
        g.set_labels(self.labels).expect("one label per vertex by construction");
        g
    }
}

/// Generalized theta graph on hubs `v`, `w`: `a` internally disjoint
/// `v`,`w`-paths of length `3k+1` followed by `b` paths of length `3k+2`.
///
/// Layout: vertex 0 is `v`, vertex 1 is `w`, the shorter paths come first,
/// and each path's interior vertices are consecutive in path order.
pub fn build_generalized_theta(a: usize, b: usize, k: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 || k < 1 {
        return Err(FamilyError::ThetaParams { a, b, k });
    }
    let mut asm = Assembly::new();
    let v = asm.vertex("v".into());
    let w = asm.vertex("w".into());
    for i in 1..=a {
        asm.path(v, w, 3 * k + 1, &format!("a{i}"));
    }
    for i in 1..=b {
        asm.path(v, w, 3 * k + 2, &format!("b{i}"));
    }
    let g = asm.build();
    debug_assert_eq!(g.n(), 2 + a * 3 * k + b * (3 * k + 1));
    Ok(g)
}

/// Interior membership pattern forced along a path by the odd
/// closed-neighborhood condition.
///
/// For a `v`,`w`-path with `length` edges whose interior vertices sit at
/// positions `1..length`, the parity condition at every interior vertex
/// (membership of `x` plus both path neighbors must be odd) propagates as a
/// second-order recurrence from the endpoint memberships. When `length` is
/// not divisible by 3 the interior pattern is uniquely determined; this
/// returns the positions that must be inside. Both endpoints in forces every
/// interior vertex in; with neither endpoint in, the pattern starts at the
/// second interior vertex (`length ≡ 1 mod 3`) or the first (`length ≡ 2`)
/// and repeats every third vertex.
pub fn path_gadget_extension(
    len_mod3: usize,
    v_in: bool,
    w_in: bool,
    length: usize,
) -> Result<Vec<usize>, FamilyError> {
    if len_mod3 != 1 && len_mod3 != 2 {
        return Err(FamilyError::BadResidue { len_mod3 });
    }
    if length % 3 != len_mod3 {
        return Err(FamilyError::ResidueMismatch { length, len_mod3 });
    }
    if length < 4 {
        return Err(FamilyError::PathTooShort { length });
    }
    let propagate = |first_interior: bool| -> Vec<bool> {
        let mut x = Vec::with_capacity(length + 1);
        x.push(v_in);
        x.push(first_interior);
        for i in 1..length {
            // Parity at interior position i: x[i-1] + x[i] + x[i+1] ≡ 1.
            let next = !(x[i - 1] ^ x[i]);
            x.push(next);
        }
        x
    };
    let matching: Vec<Vec<bool>> = [false, true]
        .into_iter()
        .map(propagate)
        .filter(|x| x[length] == w_in)
        .collect();
    assert_eq!(
        matching.len(),
        1,
        "a path of length not divisible by 3 admits exactly one interior extension"
    );
    Ok((1..length).filter(|&p| matching[0][p]).collect())
}

/// Leaf-cycle family with even maximum degree `delta` and girth `4k+1` whose
/// odd-sum chromatic number is 6.
///
/// Each of the `4k+1` copies glues two theta gadgets (path counts `(1,1)`
/// and `(1, delta-3)`) at a shared hub `v`, then hangs a left leaf on the
/// first gadget's `w` and a right leaf on the second gadget's `w` (the hub
/// of no smaller degree; ties resolve to the second gadget). The left
/// leaves are joined into one cycle through the copies in order, the right
/// leaves into another.
pub fn build_even_delta_family(delta: usize, k: usize) -> Result<Graph, FamilyError> {
    if !delta.is_multiple_of(2) || delta < 4 {
        return Err(FamilyError::DeltaNotEven { delta });
    }
    if k < 1 {
        return Err(FamilyError::KTooSmall);
    }
    let copies = 4 * k + 1;
    let mut asm = Assembly::new();
    let mut left_leaves = Vec::with_capacity(copies);
    let mut right_leaves = Vec::with_capacity(copies);
    for c in 0..copies {
        let v = asm.vertex(format!("c{c}.v"));
        let w1 = asm.vertex(format!("c{c}.w1"));
        asm.path(v, w1, 3 * k + 1, &format!("c{c}.g1a1"));
        asm.path(v, w1, 3 * k + 2, &format!("c{c}.g1b1"));
        let w2 = asm.vertex(format!("c{c}.w2"));
        asm.path(v, w2, 3 * k + 1, &format!("c{c}.g2a1"));
        for i in 1..=(delta - 3) {
            asm.path(v, w2, 3 * k + 2, &format!("c{c}.g2b{i}"));
        }
        let left = asm.vertex(format!("c{c}.left-leaf"));
        asm.edge(left, w1);
        let right = asm.vertex(format!("c{c}.right-leaf"));
        asm.edge(right, w2);
        left_leaves.push(left);
        right_leaves.push(right);
    }
    for c in 0..copies {
        asm.edge(left_leaves[c], left_leaves[(c + 1) % copies]);
        asm.edge(right_leaves[c], right_leaves[(c + 1) % copies]);
    }
    Ok(asm.build())
}

/// Odd-maximum-degree variant of the leaf-cycle family: one theta gadget per
/// copy with path counts `(1, delta-2)` (both odd), a left leaf adjacent to
/// `v` and a right leaf adjacent to `w`, leaves cycled as in the even case.
pub fn build_odd_delta_family(delta: usize, k: usize) -> Result<Graph, FamilyError> {
    if delta.is_multiple_of(2) || delta < 5 {
        return Err(FamilyError::DeltaNotOdd { delta });
    }
    if k < 1 {
        return Err(FamilyError::KTooSmall);
    }
    let copies = 4 * k + 1;
    let b = delta - 2;
    let mut asm = Assembly::new();
    let mut left_leaves = Vec::with_capacity(copies);
    let mut right_leaves = Vec::with_capacity(copies);
    for c in 0..copies {
        let v = asm.vertex(format!("c{c}.v"));
        let w = asm.vertex(format!("c{c}.w"));
        asm.path(v, w, 3 * k + 1, &format!("c{c}.a1"));
        for i in 1..=b {
            asm.path(v, w, 3 * k + 2, &format!("c{c}.b{i}"));
        }
        let left = asm.vertex(format!("c{c}.left-leaf"));
        asm.edge(left, v);
        let right = asm.vertex(format!("c{c}.right-leaf"));
        asm.edge(right, w);
        left_leaves.push(left);
        right_leaves.push(right);
    }
    for c in 0..copies {
        asm.edge(left_leaves[c], left_leaves[(c + 1) % copies]);
        asm.edge(right_leaves[c], right_leaves[(c + 1) % copies]);
    }
    Ok(asm.build())
}

/// Append `count` internally disjoint `v`,`w`-paths of the given length.
/// The count must be even and the length must avoid multiples of 3, which
/// together leave the odd-dominating structure of the host untouched.
pub fn add_parallel_paths(
    g: &Graph,
    v: usize,
    w: usize,
    count: usize,
    length: usize,
) -> Result<Graph, FamilyError> {
    let n = g.n();
    if v >= n || w >= n || v == w {
        return Err(FamilyError::BadEndpoints { v, w, n });
    }
    if !count.is_multiple_of(2) {
        return Err(FamilyError::OddPathCount { count });
    }
    if length.is_multiple_of(3) {
        return Err(FamilyError::BadResidue { len_mod3: 0 });
    }
    if length < 4 {
        return Err(FamilyError::PathTooShort { length });
    }
    let mut edges = g.edges();
    let mut labels = g.labels().map(<[String]>::to_vec);
    let mut next = n;
    for i in 1..=count {
        let mut prev = v;
        for j in 1..length {
            if let Some(l) = labels.as_mut() {
                l.push(format!("extra{i}.{j}"));
            }
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, w));
    }
    let mut out = Graph::build(next, &edges).expect("appending fresh paths keeps the graph simple");
    if let Some(l) = labels {
        out.set_labels(l).expect("one label per vertex");
    }
    Ok(out)
}

/// Replace every edge by a path with `times` new interior vertices.
/// Original vertices keep their indices; interior vertices are appended in
/// canonical edge order. `times = 0` returns an identical copy.
pub fn subdivide_edges(g: &Graph, times: usize) -> Graph {
    let mut edges = Vec::with_capacity(g.m() * (times + 1));
    let mut labels = g.labels().map(<[String]>::to_vec);
    let mut next = g.n();
    for (u, v) in g.edges() {
        let mut prev = u;
        for j in 1..=times {
            if let Some(l) = labels.as_mut() {
                l.push(format!("s{u}.{v}.{j}"));
            }
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    let mut out = Graph::build(next, &edges).expect("subdividing keeps the graph simple");
    if let Some(l) = labels {
        out.set_labels(l).expect("one label per vertex");
    }
    out
}

/// Bipartite family with maximum degree `delta` and girth at least `girth`
/// whose odd-sum chromatic number is 4.
///
/// Starts from the even-degree leaf-cycle family at `(4, 1)`, raises the
/// degree of one copy hub `r` to `delta` by adding parallel length-4 paths
/// to a degree-2 neighbor `r'`, then subdivides every edge `6s+3` times with
/// `s` minimal such that `5(6s+4) ≥ girth`. Subdividing each edge a multiple
/// of 3 times preserves the odd-domination structure, and the even edge
/// count per subdivided path makes every cycle even.
pub fn build_bipartite_family(delta: usize, girth: usize) -> Result<Graph, FamilyError> {
    if !delta.is_multiple_of(2) || delta < 4 {
        return Err(FamilyError::DeltaNotEven { delta });
    }
    if girth < 1 {
        return Err(FamilyError::GirthTooSmall);
    }
    let base = build_even_delta_family(4, 1)?;
    let r = 0;
    debug_assert_eq!(base.label(r), Some("c0.v"));
    debug_assert_eq!(base.degree(r), base.max_degree());
    let rp = base
        .neighbors(r)
        .iter()
        .find(|&u| base.degree(u) == 2)
        .expect("every hub neighbor starts a path");
    let widened = add_parallel_paths(&base, r, rp, delta - 4, 4)?;
    let s = girth.saturating_sub(20).div_ceil(30);
    Ok(subdivide_edges(&widened, 6 * s + 3))
}

/// Two triangles sharing a vertex. The shared vertex (index 0, degree 4) is
/// the center.
pub fn bowtie() -> Graph {
    let mut asm = Assembly::new();
    let c = asm.vertex("center".into());
    let x1 = asm.vertex("x1".into());
    let x2 = asm.vertex("x2".into());
    let y1 = asm.vertex("y1".into());
    let y2 = asm.vertex("y2".into());
    for (u, v) in [(c, x1), (c, x2), (x1, x2), (c, y1), (c, y2), (y1, y2)] {
        asm.edge(u, v);
    }
    asm.build()
}

/// Bowtie plus one pendant leaf on a former degree-2 vertex of each
/// triangle: 7 vertices, two leaves of degree 1.
pub fn extended_bowtie() -> Graph {
    let mut asm = Assembly::new();
    let c = asm.vertex("center".into());
    let a1 = asm.vertex("attach1".into());
    let o1 = asm.vertex("other1".into());
    let a2 = asm.vertex("attach2".into());
    let o2 = asm.vertex("other2".into());
    let l1 = asm.vertex("leaf1".into());
    let l2 = asm.vertex("leaf2".into());
    for (u, v) in [
        (c, a1),
        (c, o1),
        (a1, o1),
        (c, a2),
        (c, o2),
        (a2, o2),
        (a1, l1),
        (a2, l2),
    ] {
        asm.edge(u, v);
    }
    asm.build()
}

/// Glue a fresh bowtie onto `g` by identifying its center with `v`: four new
/// vertices forming two triangles through `v`. This multiplies the number of
/// odd-dominating sets by exactly 4 and never decreases the odd-sum
/// chromatic number.
pub fn attach_bowtie(g: &Graph, v: usize) -> Graph {
    assert!(v < g.n(), "attachment vertex {v} out of range for {} vertices", g.n());
    let n = g.n();
    let mut edges = g.edges();
    edges.extend_from_slice(&[
        (v, n),
        (v, n + 1),
        (n, n + 1),
        (v, n + 2),
        (v, n + 3),
        (n + 2, n + 3),
    ]);
    let mut out = Graph::build(n + 4, &edges).expect("fresh triangles keep the graph simple");
    if let Some(labels) = g.labels() {
        let mut labels = labels.to_vec();
        for suffix in ["x1", "x2", "y1", "y2"] {
            labels.push(format!("bw{n}.{suffix}"));
        }
        out.set_labels(labels).expect("one label per vertex");
    }
    out
}

/// The 36-vertex graph with maximum degree 5 whose odd-sum chromatic number
/// is 8: a K4 core `v1..v4` with attachments `w12, w34, x1, x3`, plus four
/// extended bowties whose leaves are wired back (the four `z` leaves induce
/// a K4; `l1` meets `x1`, `l3` meets `x3`, `l2` meets `l4`).
///
/// The construction self-checks its defining properties — 36 vertices,
/// maximum degree 5, 2-connectedness, the edge-count planarity bounds, a
/// unique odd-dominating set `D` excluding exactly the `x`, `l`, `z`
/// vertices, and chromatic number 4 on both sides of the partition — and
/// panics if any fails.
pub fn build_tight_example() -> Graph {
    let mut asm = Assembly::new();
    let v: Vec<usize> = (1..=4).map(|i| asm.vertex(format!("v{i}"))).collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            asm.edge(v[i], v[j]);
        }
    }
    let w12 = asm.vertex("w12".into());
    asm.edge(v[0], w12);
    asm.edge(v[1], w12);
    let w34 = asm.vertex("w34".into());
    asm.edge(v[2], w34);
    asm.edge(v[3], w34);
    let x1 = asm.vertex("x1".into());
    asm.edge(v[0], x1);
    let x3 = asm.vertex("x3".into());
    asm.edge(v[2], x3);
    let mut l = Vec::with_capacity(4);
    let mut z = Vec::with_capacity(4);
    for i in 1..=4 {
        let c = asm.vertex(format!("b{i}.center"));
        let a1 = asm.vertex(format!("b{i}.attach1"));
        let o1 = asm.vertex(format!("b{i}.other1"));
        let a2 = asm.vertex(format!("b{i}.attach2"));
        let o2 = asm.vertex(format!("b{i}.other2"));
        for (s, t) in [(c, a1), (c, o1), (a1, o1), (c, a2), (c, o2), (a2, o2)] {
            asm.edge(s, t);
        }
        let li = asm.vertex(format!("b{i}.l"));
        asm.edge(a1, li);
        let zi = asm.vertex(format!("b{i}.z"));
        asm.edge(a2, zi);
        l.push(li);
        z.push(zi);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            asm.edge(z[i], z[j]);
        }
    }
    asm.edge(l[0], x1);
    asm.edge(l[2], x3);
    asm.edge(l[1], l[3]);
    let g = asm.build();
    tight_example_self_check(&g);
    g
}

/// Loud construction-time audit of the defining properties of
/// [`build_tight_example`]. Failure means the layout drifted.
fn tight_example_self_check(g: &Graph) {
    assert_eq!(g.n(), 36, "tight example must have 36 vertices");
    assert_eq!(g.m(), 53, "tight example must have 53 edges");
    assert_eq!(g.max_degree(), 5, "tight example must have maximum degree 5");
    assert!(
        g.is_biconnected().expect("graph is large enough"),
        "tight example must be 2-connected"
    );
    assert!(
        g.planarity_necessary(),
        "tight example must satisfy the edge-count planarity bounds"
    );
    let system = solve_odd_domination(g);
    assert_eq!(system.nullity(), 0, "tight example must have a unique odd-dominating set");
    let excluded_list = g.vertices_where_label(|l| {
        l == "x1" || l == "x3" || l.ends_with(".l") || l.ends_with(".z")
    });
    assert_eq!(excluded_list.len(), 10, "ten excluded vertices expected");
    let excluded = VertexSet::from_indices(g.n(), excluded_list.iter().copied());
    let expected_d = excluded.complement();
    assert_eq!(
        system.particular(),
        &expected_d,
        "the unique odd-dominating set must exclude exactly the x, l, z vertices"
    );
    for (side, name) in [(&expected_d, "inside"), (&excluded, "complement")] {
        let (sub, _) = g.induced_subgraph(side);
        let chi = chromatic_number(&sub)
            .expect("tight-example sides are small")
            .k();
        assert_eq!(chi, 4, "chromatic number of the {name} part must be 4");
    }
}

/// `t` successive bowtie attachments on [`build_tight_example`], keeping the
/// odd-sum chromatic number at 8 while multiplying the count of
/// odd-dominating sets to `4^t`.
///
/// Each attachment site is the lowest-indexed vertex lying in **every**
/// odd-dominating set of the current graph (the affine solution core) whose
/// degree after attachment stays within `degree_budget` (`None` = no limit).
pub fn build_tight_example_with_budget(t: usize, degree_budget: Option<usize>) -> Graph {
    let mut g = build_tight_example();
    for _ in 0..t {
        let core = solve_odd_domination(&g).solution_core();
        let site = core
            .iter()
            .find(|&c| degree_budget.is_none_or(|b| g.degree(c) + 4 <= b))
            .expect("some core vertex must fit the degree budget");
        g = attach_bowtie(&g, site);
    }
    g
}

/// [`build_tight_example_with_budget`] with no degree budget.
pub fn build_tight_example_with_bowties(t: usize) -> Graph {
    build_tight_example_with_budget(t, None)
}

/// Cartesian product: `(u, a)` is adjacent to `(v, b)` iff `u = v` and
/// `a ~ b`, or `a = b` and `u ~ v`. Vertex `(u, a)` gets index `u·n2 + a`
/// (row-major). Labels combine componentwise when both factors are labeled.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges = Vec::with_capacity(g1.m() * n2 + g2.m() * n1);
    for (u, v) in g1.edges() {
        for a in 0..n2 {
            edges.push((u * n2 + a, v * n2 + a));
        }
    }
    for (a, b) in g2.edges() {
        for u in 0..n1 {
            edges.push((u * n2 + a, u * n2 + b));
        }
    }
    let mut out = Graph::build(n1 * n2, &edges).expect("products of simple graphs are simple");
    if let (Some(l1), Some(l2)) = (g1.labels(), g2.labels()) {
        let labels = (0..n1 * n2)
            .map(|i| format!("{},{}", l1[i / n2], l2[i % n2]))
            .collect();
        out.set_labels(labels).expect("one label per vertex");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, random_graph, seeded_rng, Girth};
    use crate::odd_domination::{
        brute_force_odd_dominating_sets, count_odd_dominating_sets, forced_excluded_vertices,
        is_odd_dominating,
    };
    use crate::odd_sum::odd_sum_chromatic;
    use num_bigint::BigUint;

    fn set_mask(s: &VertexSet) -> u32 {
        s.iter().fold(0u32, |m, v| m | 1 << v)
    }

    #[test]
    fn theta_1_1_1_layout_is_frozen() {
        let g = build_generalized_theta(1, 1, 1).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.m(), 9);
        assert_eq!(g.girth(), Girth::Finite(9));
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.label(0), Some("v"));
        assert_eq!(g.find_label("w"), Some(1));
        assert_eq!(
            g.edges(),
            vec![
                (0, 2),
                (0, 5),
                (1, 4),
                (1, 8),
                (2, 3),
                (3, 4),
                (5, 6),
                (6, 7),
                (7, 8)
            ]
        );
        assert_eq!(odd_sum_chromatic(&g).unwrap().chios(), 3);
    }

    #[test]
    fn theta_1_3_1_matches_the_published_shape() {
        let g = build_generalized_theta(1, 3, 1).unwrap();
        assert_eq!(g.n(), 2 + 3 + 3 * 4);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.girth(), Girth::Finite(9));
    }

    #[test]
    fn theta_rejects_zero_parameters() {
        assert_eq!(
            build_generalized_theta(0, 1, 1).unwrap_err(),
            FamilyError::ThetaParams { a: 0, b: 1, k: 1 }
        );
        assert!(build_generalized_theta(1, 1, 0).is_err());
    }

    #[test]
    fn gadget_patterns_are_exact() {
        let cases: [(usize, bool, bool, usize, &[usize]); 6] = [
            (1, false, false, 7, &[2, 5]),
            (1, true, false, 7, &[3, 6]),
            (1, true, true, 7, &[1, 2, 3, 4, 5, 6]),
            (2, false, false, 8, &[1, 4, 7]),
            (2, true, false, 8, &[3, 6]),
            (2, true, true, 8, &[1, 2, 3, 4, 5, 6, 7]),
        ];
        for (m, vi, wi, len, want) in cases {
            assert_eq!(
                path_gadget_extension(m, vi, wi, len).unwrap(),
                want,
                "pattern ({m},{vi},{wi},{len})"
            );
        }
    }

    #[test]
    fn subdivision_row_patterns_are_exact() {
        assert_eq!(path_gadget_extension(1, false, false, 4).unwrap(), vec![2]);
        assert_eq!(path_gadget_extension(1, true, false, 4).unwrap(), vec![3]);
        assert_eq!(path_gadget_extension(1, true, true, 4).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn gadget_extension_rejects_bad_parameters() {
        assert_eq!(
            path_gadget_extension(0, false, false, 6).unwrap_err(),
            FamilyError::BadResidue { len_mod3: 0 }
        );
        assert_eq!(
            path_gadget_extension(1, false, false, 8).unwrap_err(),
            FamilyError::ResidueMismatch { length: 8, len_mod3: 1 }
        );
        assert!(path_gadget_extension(1, false, false, 1).is_err());
    }

    #[test]
    fn gadget_extension_agrees_with_exhaustive_interior_search() {
        for (len_mod3, length) in [(1, 4), (2, 5), (1, 7), (2, 8)] {
            for (v_in, w_in) in [(false, false), (true, false), (false, true), (true, true)] {
                let claimed = path_gadget_extension(len_mod3, v_in, w_in, length).unwrap();
                let mut survivors = Vec::new();
                for mask in 0u32..1 << (length - 1) {
                    let member = |p: usize| -> bool {
                        if p == 0 {
                            v_in
                        } else if p == length {
                            w_in
                        } else {
                            mask >> (p - 1) & 1 == 1
                        }
                    };
                    let ok = (1..length).all(|p| {
                        (member(p - 1) as usize + member(p) as usize + member(p + 1) as usize) % 2
                            == 1
                    });
                    if ok {
                        survivors.push((1..length).filter(|&p| member(p)).collect::<Vec<_>>());
                    }
                }
                assert_eq!(survivors, vec![claimed], "({len_mod3},{v_in},{w_in},{length})");
            }
        }
    }

    #[test]
    fn even_family_4_1_has_the_frozen_shape() {
        let g = build_even_delta_family(4, 1).unwrap();
        assert_eq!(g.n(), 95);
        assert_eq!(g.m(), 110);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.girth(), Girth::Finite(5));
        assert!(g.is_connected());
        let leaves = g.vertices_where_label(|l| l.contains("leaf"));
        assert_eq!(leaves.len(), 10);
        for &leaf in &leaves {
            assert_eq!(g.degree(leaf), 3);
        }
    }

    #[test]
    fn even_family_6_1_has_the_frozen_shape() {
        let g = build_even_delta_family(6, 1).unwrap();
        assert_eq!(g.n(), 135);
        assert_eq!(g.max_degree(), 6);
        assert_eq!(g.girth(), Girth::Finite(5));
    }

    #[test]
    fn odd_family_5_1_has_the_frozen_shape() {
        let g = build_odd_delta_family(5, 1).unwrap();
        assert_eq!(g.n(), 95);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.girth(), Girth::Finite(5));
        assert!(g.is_connected());
    }

    #[test]
    fn family_parameter_validation() {
        assert_eq!(
            build_even_delta_family(5, 1).unwrap_err(),
            FamilyError::DeltaNotEven { delta: 5 }
        );
        assert_eq!(build_even_delta_family(4, 0).unwrap_err(), FamilyError::KTooSmall);
        assert_eq!(
            build_odd_delta_family(4, 1).unwrap_err(),
            FamilyError::DeltaNotOdd { delta: 4 }
        );
        assert_eq!(build_odd_delta_family(3, 1).unwrap_err(), FamilyError::DeltaNotOdd { delta: 3 });
    }

    #[test]
    fn parallel_paths_extend_k2_to_a_theta() {
        let g = complete_graph(2);
        let out = add_parallel_paths(&g, 0, 1, 2, 4).unwrap();
        assert_eq!(out.n(), 8);
        assert_eq!(out.m(), 9);
        assert_eq!(out.girth(), Girth::Finite(5));
        assert_eq!(out.degree(0), 3);
        assert_eq!(out.degree(1), 3);
        assert_eq!(
            add_parallel_paths(&g, 0, 1, 1, 4).unwrap_err(),
            FamilyError::OddPathCount { count: 1 }
        );
        assert_eq!(
            add_parallel_paths(&g, 0, 1, 2, 6).unwrap_err(),
            FamilyError::BadResidue { len_mod3: 0 }
        );
        assert_eq!(
            add_parallel_paths(&g, 0, 5, 2, 4).unwrap_err(),
            FamilyError::BadEndpoints { v: 0, w: 5, n: 2 }
        );
    }

    #[test]
    fn subdividing_a_triangle_three_times_gives_c12() {
        let g = subdivide_edges(&cycle_graph(3), 3);
        assert_eq!(g.n(), 12);
        assert_eq!(g.m(), 12);
        assert_eq!(g.girth(), Girth::Finite(12));
        assert!((0..12).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn zero_subdivision_is_identity() {
        let g = build_generalized_theta(1, 1, 1).unwrap();
        let same = subdivide_edges(&g, 0);
        assert_eq!(same.n(), g.n());
        assert_eq!(same.edges(), g.edges());
        assert_eq!(same.labels(), g.labels());
    }

    /// The unique interior extension along each subdivided edge maps every
    /// odd-dominating set of `g` to one of `subdivide_edges(g, 3)`; the map
    /// preserves counts and keeps non-independence of both sides.
    #[test]
    fn triple_subdivision_preserves_odd_domination_structure() {
        let mut rng = seeded_rng(53);
        let mut tested = 0;
        while tested < 30 {
            let g = random_graph(6, 0.35, &mut rng);
            if g.n() + 3 * g.m() > 24 {
                continue;
            }
            tested += 1;
            let gg = subdivide_edges(&g, 3);
            let before = brute_force_odd_dominating_sets(&g).unwrap();
            let after = brute_force_odd_dominating_sets(&gg).unwrap();
            assert_eq!(before.len(), after.len(), "counts must match");
            for d in &before {
                let mut dd = VertexSet::new(gg.n());
                for v in d.iter() {
                    dd.insert(v);
                }
                let mut next = g.n();
                for (u, v) in g.edges() {
                    let pattern =
                        path_gadget_extension(1, d.contains(u), d.contains(v), 4).unwrap();
                    for p in pattern {
                        dd.insert(next + p - 1);
                    }
                    next += 3;
                }
                assert!(is_odd_dominating(&gg, &dd), "extension must stay odd-dominating");
                let has_edge = |graph: &Graph, side: &VertexSet| {
                    graph.edges().iter().any(|&(u, v)| side.contains(u) && side.contains(v))
                };
                if has_edge(&g, d) {
                    assert!(has_edge(&gg, &dd));
                }
                if has_edge(&g, &d.complement()) {
                    assert!(has_edge(&gg, &dd.complement()));
                }
            }
        }
    }

    /// For theta graphs with odd path counts on both lengths, parity at the
    /// interior vertices alone forces parity at the hubs: the subsets
    /// satisfying the interior constraints are exactly the odd-dominating
    /// sets.
    #[test]
    fn theta_interior_constraints_force_the_hubs() {
        for (a, b) in [(1, 1), (3, 1), (1, 3), (3, 3)] {
            let g = build_generalized_theta(a, b, 1).unwrap();
            let n = g.n();
            assert!(n <= 24);
            let closed: Vec<u32> = (0..n).map(|x| set_mask(&g.closed_neighborhood(x))).collect();
            let interior_valid: Vec<u32> = (0u32..1 << n)
                .filter(|&mask| {
                    (2..n).all(|x| (closed[x] & mask).count_ones() % 2 == 1)
                })
                .collect();
            let mut full: Vec<u32> = brute_force_odd_dominating_sets(&g)
                .unwrap()
                .iter()
                .map(set_mask)
                .collect();
            full.sort_unstable();
            assert_eq!(interior_valid, full, "theta({a},{b},1)");
            assert_eq!(interior_valid.len(), 4);
        }
    }

    /// The four hub-membership choices plus per-path unique extensions
    /// reconstruct the full solution list of a theta graph.
    #[test]
    fn theta_solutions_decompose_along_paths() {
        let (a, b, k) = (3, 3, 1);
        let g = build_generalized_theta(a, b, k).unwrap();
        let mut constructed = Vec::new();
        for (v_in, w_in) in [(false, false), (true, false), (false, true), (true, true)] {
            let mut d = VertexSet::new(g.n());
            d.set(0, v_in);
            d.set(1, w_in);
            let mut base = 2;
            for _ in 0..a {
                for p in path_gadget_extension(1, v_in, w_in, 3 * k + 1).unwrap() {
                    d.insert(base + p - 1);
                }
                base += 3 * k;
            }
            for _ in 0..b {
                for p in path_gadget_extension(2, v_in, w_in, 3 * k + 2).unwrap() {
                    d.insert(base + p - 1);
                }
                base += 3 * k + 1;
            }
            constructed.push(set_mask(&d));
        }
        constructed.sort_unstable();
        let mut brute: Vec<u32> = brute_force_odd_dominating_sets(&g)
            .unwrap()
            .iter()
            .map(set_mask)
            .collect();
        brute.sort_unstable();
        assert_eq!(constructed, brute);
    }

    #[test]
    fn bipartite_family_4_6_has_the_frozen_shape() {
        let g = build_bipartite_family(4, 6).unwrap();
        assert_eq!(g.n(), 425);
        assert!(g.is_bipartite().is_some());
        assert_eq!(g.girth(), Girth::Finite(20));
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn bipartite_family_6_6_reaches_degree_six() {
        let g = build_bipartite_family(6, 6).unwrap();
        assert_eq!(g.max_degree(), 6);
        assert!(g.is_bipartite().is_some());
        assert_eq!(g.girth(), Girth::Finite(20));
    }

    #[test]
    fn bowtie_shapes() {
        let b = bowtie();
        assert_eq!(b.n(), 5);
        assert_eq!(b.m(), 6);
        assert_eq!(b.degree(0), 4);
        assert_eq!(b.label(0), Some("center"));
        assert_eq!(count_odd_dominating_sets(&b), BigUint::from(4u8));

        let e = extended_bowtie();
        assert_eq!(e.n(), 7);
        assert_eq!(e.m(), 8);
        assert_eq!(e.degree(5), 1);
        assert_eq!(e.degree(6), 1);
        let forced = forced_excluded_vertices(&e);
        assert!(forced.contains(5) && forced.contains(6), "leaves are forced out");
    }

    #[test]
    fn attaching_a_bowtie_to_k1_gives_the_bowtie() {
        let g = attach_bowtie(&Graph::build(1, &[]).unwrap(), 0);
        assert_eq!(g.edges(), bowtie().edges());
        assert_eq!(brute_force_odd_dominating_sets(&g).unwrap().len(), 4);
    }

    #[test]
    fn bowtie_attachment_quadruples_solution_counts() {
        let mut rng = seeded_rng(59);
        for _ in 0..20 {
            let g = random_graph(6, 0.4, &mut rng);
            let v = 0;
            let attached = attach_bowtie(&g, v);
            assert_eq!(
                count_odd_dominating_sets(&attached),
                count_odd_dominating_sets(&g) * 4u8
            );
        }
    }

    #[test]
    fn tight_example_passes_its_self_check_and_is_frozen() {
        let g = build_tight_example();
        assert_eq!(g.n(), 36);
        assert_eq!(g.m(), 53);
        assert_eq!(g.find_label("v1"), Some(0));
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.find_label("b1.center"), Some(8));
        assert_eq!(count_odd_dominating_sets(&g), BigUint::from(1u8));
    }

    #[test]
    fn bowtie_extensions_multiply_the_solution_space() {
        let g0 = build_tight_example_with_bowties(0);
        assert_eq!(g0.edges(), build_tight_example().edges());
        let g1 = build_tight_example_with_bowties(1);
        assert_eq!(g1.n(), 40);
        assert_eq!(count_odd_dominating_sets(&g1), BigUint::from(4u8));
        // Unbudgeted attachments pile onto vertex 0, which sits in every
        // odd-dominating set throughout.
        assert_eq!(g1.degree(0), 9);
    }

    #[test]
    fn degree_budget_moves_the_attachment_site() {
        let g = build_tight_example_with_budget(2, Some(9));
        assert_eq!(g.n(), 44);
        assert_eq!(g.degree(0), 9, "first attachment fits at vertex 0");
        assert_eq!(g.degree(1), 8, "second attachment overflows to vertex 1");
        assert_eq!(count_odd_dominating_sets(&g), BigUint::from(16u8));
    }

    #[test]
    fn product_of_two_edges_is_a_four_cycle() {
        let g = cartesian_product(&complete_graph(2), &complete_graph(2));
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.girth(), Girth::Finite(4));
    }

    #[test]
    fn prism_product_layout_is_row_major() {
        let g = cartesian_product(&complete_graph(2), &complete_graph(3));
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 9);
        assert_eq!(g.girth(), Girth::Finite(3));
        // Row u=0 is {0,1,2}; the cross edges pair (0,a) with (1,a).
        assert!(g.adjacent(0, 3) && g.adjacent(1, 4) && g.adjacent(2, 5));
        assert!(g.adjacent(0, 1) && g.adjacent(3, 4));
        assert!(!g.adjacent(0, 4));
        assert_eq!(odd_sum_chromatic(&g).unwrap().chios(), 6);
    }
}
