//! Odd-sum chromatic number, exactly.
//!
//! An odd-sum coloring assigns positive integers so that adjacent vertices
//! differ and every closed neighborhood sums to an odd number; the odd-sum
//! chromatic number is the least possible number of distinct values. The
//! parity pattern of any such coloring is exactly an odd-dominating set (the
//! odd-colored vertices), and conversely any odd-dominating set `D` yields a
//! coloring with `χ(G[D])` odd values on `D` and `χ(G[V∖D])` even values off
//! it. The solver therefore minimizes `χ(G[D]) + χ(G[V∖D])` over the
//! GF(2)-enumerated solution space, while [`oracle_odd_sum_chromatic`]
//! searches colorings directly from the definition so the two routes can
//! check each other.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    chromatic_number, chromatic_number_with_budget, ColoringError, DEFAULT_NODE_BUDGET,
};
use crate::graph::Graph;
use crate::odd_domination::{
    enumeration_cap_from_env, odd_domination_violations, solve_odd_domination, OdsError,
};
use crate::set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OddSumError {
    #[error(transparent)]
    Ods(#[from] OdsError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("set is not odd-dominating; even closed neighborhoods at {violators:?}")]
    NotOddDominating { violators: Vec<usize> },
    #[error("not an odd-sum coloring: {0}")]
    InvalidColoring(OddSumValidation),
    #[error("the definition-level oracle is limited to {max} vertices, got {n}")]
    OracleTooLarge { n: usize, max: usize },
}

/// Minimum odd-sum coloring together with the structures that certify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSumCertificate {
    chios: usize,
    dominating_set: VertexSet,
    coloring: Vec<usize>,
}

impl OddSumCertificate {
    /// The odd-sum chromatic number.
    pub fn chios(&self) -> usize {
        self.chios
    }

    /// The odd-dominating set realizing the minimum; exactly the vertices
    /// with odd colors.
    pub fn dominating_set(&self) -> &VertexSet {
        &self.dominating_set
    }

    /// The witness coloring (1-based, `chios` distinct values).
    pub fn coloring(&self) -> &[usize] {
        &self.coloring
    }

    /// (odd-colored vertices, even-colored vertices).
    pub fn parity_partition(&self) -> (VertexSet, VertexSet) {
        (self.dominating_set.clone(), self.dominating_set.complement())
    }

    /// JSON form `{"chios": …, "D": […], "colors": {"0": …}}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct CertificateJson {
            chios: usize,
            #[serde(rename = "D")]
            d: Vec<usize>,
            colors: BTreeMap<usize, usize>,
        }
        let doc = CertificateJson {
            chios: self.chios,
            d: self.dominating_set.to_indices(),
            colors: self.coloring.iter().copied().enumerate().collect(),
        };
        serde_json::to_string(&doc).expect("certificate serialization cannot fail")
    }
}

/// Odd-sum chromatic number with certificate, using the environment-sized
/// enumeration cap (`ODDSUM_CAP`, default 2^20) and the default node budget.
pub fn odd_sum_chromatic(g: &Graph) -> Result<OddSumCertificate, OddSumError> {
    odd_sum_chromatic_capped(g, enumeration_cap_from_env(), DEFAULT_NODE_BUDGET)
}

/// Odd-sum chromatic number with explicit resource limits.
///
/// Requires `2^nullity ≤ cap` or fails up front with the nullity. Ties are
/// broken toward the first optimal set in Gray-code enumeration order. For
/// each candidate `D`, `χ(G[D])` is computed first and the complement is
/// skipped when `χ(G[D]) + 1` can no longer beat the incumbent.
pub fn odd_sum_chromatic_capped(
    g: &Graph,
    cap: u64,
    node_budget: u64,
) -> Result<OddSumCertificate, OddSumError> {
    let n = g.n();
    if n == 0 {
        return Ok(OddSumCertificate {
            chios: 0,
            dominating_set: VertexSet::new(0),
            coloring: Vec::new(),
        });
    }
    let system = solve_odd_domination(g);
    let mut best: Option<OddSumCertificate> = None;
    for d in system.solutions(cap)? {
        let (sub_d, back_d) = g.induced_subgraph(&d);
        let col_d = chromatic_number_with_budget(&sub_d, node_budget)?;
        let complement = d.complement();
        let mut coloring = vec![0usize; n];
        for (i, &orig) in back_d.iter().enumerate() {
            coloring[orig] = 2 * col_d.colors()[i] - 1;
        }
        let total = if complement.is_empty() {
            col_d.k()
        } else {
            if let Some(b) = &best {
                if col_d.k() + 1 >= b.chios {
                    continue;
                }
            }
            let (sub_c, back_c) = g.induced_subgraph(&complement);
            let col_c = chromatic_number_with_budget(&sub_c, node_budget)?;
            for (i, &orig) in back_c.iter().enumerate() {
                coloring[orig] = 2 * col_c.colors()[i];
            }
            col_d.k() + col_c.k()
        };
        if best.as_ref().is_none_or(|b| total < b.chios) {
            best = Some(OddSumCertificate {
                chios: total,
                dominating_set: d,
                coloring,
            });
        }
    }
    let cert = best.expect("every graph has at least one odd-dominating set");
    debug_assert!(validate_odd_sum_coloring(g, &cert.coloring).is_valid());
    debug_assert_eq!(
        cert.coloring.iter().collect::<std::collections::BTreeSet<_>>().len(),
        cert.chios
    );
    Ok(cert)
}

/// Everything wrong with a purported odd-sum coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OddSumValidation {
    /// Vertices whose color is not a positive integer.
    pub bad_color_vertices: Vec<usize>,
    /// Edges whose endpoints share a color.
    pub properness_violations: Vec<(usize, usize)>,
    /// Vertices whose closed neighborhood sums to an even number.
    pub parity_violations: Vec<usize>,
}

impl OddSumValidation {
    pub fn is_valid(&self) -> bool {
        self.bad_color_vertices.is_empty()
            && self.properness_violations.is_empty()
            && self.parity_violations.is_empty()
    }
}

impl std::fmt::Display for OddSumValidation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "bad colors at {:?}, equal-color edges {:?}, even closed sums at {:?}",
            self.bad_color_vertices, self.properness_violations, self.parity_violations
        )
    }
}

/// Check a coloring against the odd-sum definition, listing every failing
/// edge and vertex.
///
/// # Panics
/// Panics if `colors` does not cover exactly the vertex range.
pub fn validate_odd_sum_coloring(g: &Graph, colors: &[usize]) -> OddSumValidation {
    assert_eq!(colors.len(), g.n(), "one color per vertex required");
    let mut v = OddSumValidation::default();
    for (vertex, &c) in colors.iter().enumerate() {
        if c == 0 {
            v.bad_color_vertices.push(vertex);
        }
    }
    for (a, b) in g.edges() {
        if colors[a] == colors[b] {
            v.properness_violations.push((a, b));
        }
    }
    for x in 0..g.n() {
        let sum: usize = g.closed_neighborhood(x).iter().map(|u| colors[u]).sum();
        if sum.is_multiple_of(2) {
            v.parity_violations.push(x);
        }
    }
    v
}

/// Color `G[d]` with odd values `1, 3, …` and the complement with even
/// values `2, 4, …`, each side exactly. Fails if `d` is not odd-dominating.
/// Returns the coloring and its number of distinct values.
pub fn coloring_from_partition(
    g: &Graph,
    d: &VertexSet,
) -> Result<(Vec<usize>, usize), OddSumError> {
    let violators = odd_domination_violations(g, d);
    if !violators.is_empty() {
        return Err(OddSumError::NotOddDominating { violators });
    }
    let mut coloring = vec![0usize; g.n()];
    let (sub_d, back_d) = g.induced_subgraph(d);
    let col_d = chromatic_number(&sub_d)?;
    for (i, &orig) in back_d.iter().enumerate() {
        coloring[orig] = 2 * col_d.colors()[i] - 1;
    }
    let complement = d.complement();
    let (sub_c, back_c) = g.induced_subgraph(&complement);
    let col_c = chromatic_number(&sub_c)?;
    for (i, &orig) in back_c.iter().enumerate() {
        coloring[orig] = 2 * col_c.colors()[i];
    }
    let range = col_d.k() + col_c.k();
    debug_assert!(validate_odd_sum_coloring(g, &coloring).is_valid());
    Ok((coloring, range))
}

/// Parity-preserving, order-preserving renumbering: the distinct odd values
/// become `1, 3, …` and the distinct even values `2, 4, …`. Validity and
/// range size are preserved; the map is idempotent. Fails if the input is
/// not an odd-sum coloring of `g`.
pub fn normalize_coloring(g: &Graph, colors: &[usize]) -> Result<Vec<usize>, OddSumError> {
    let validation = validate_odd_sum_coloring(g, colors);
    if !validation.is_valid() {
        return Err(OddSumError::InvalidColoring(validation));
    }
    let mut odds: Vec<usize> = colors.iter().copied().filter(|c| c % 2 == 1).collect();
    let mut evens: Vec<usize> = colors.iter().copied().filter(|c| c % 2 == 0).collect();
    odds.sort_unstable();
    odds.dedup();
    evens.sort_unstable();
    evens.dedup();
    let remap = |c: usize| -> usize {
        if c % 2 == 1 {
            2 * odds.binary_search(&c).expect("color present") + 1
        } else {
            2 * (evens.binary_search(&c).expect("color present") + 1)
        }
    };
    let out: Vec<usize> = colors.iter().map(|&c| remap(c)).collect();
    debug_assert!(validate_odd_sum_coloring(g, &out).is_valid());
    Ok(out)
}

/// Definition-level odd-sum chromatic number for `n ≤ 8`.
///
/// Exhaustive search over canonical colorings: within each parity class,
/// values are numbered in order of first appearance, which loses no range
/// sizes because any odd-sum coloring can be renumbered that way parity- and
/// properness-preservingly. Prunes on incumbent range size and on closed
/// neighborhoods as they complete. Shares nothing with the GF(2) route.
pub fn oracle_odd_sum_chromatic(g: &Graph) -> Result<usize, OddSumError> {
    const MAX: usize = 8;
    let n = g.n();
    if n > MAX {
        return Err(OddSumError::OracleTooLarge { n, max: MAX });
    }
    if n == 0 {
        return Ok(0);
    }
    // earlier_neighbors[i]: neighbors already colored when i is reached.
    let earlier_neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| g.neighbors(i).iter().filter(|&j| j < i).collect())
        .collect();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v).to_indices()).collect();
    // completes_at[i]: vertices whose closed neighborhood is fully colored
    // exactly once i receives a color.
    let mut completes_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, closed_v) in closed.iter().enumerate() {
        let owner = *closed_v.last().expect("closed neighborhoods are nonempty");
        completes_at[owner].push(v);
    }
    struct Ctx<'a> {
        earlier_neighbors: &'a [Vec<usize>],
        closed: &'a [Vec<usize>],
        completes_at: &'a [Vec<usize>],
        colors: Vec<usize>,
        best: usize,
        n: usize,
    }
    fn dfs(ctx: &mut Ctx, i: usize, odd_used: usize, even_used: usize) {
        let used = odd_used + even_used;
        if used >= ctx.best {
            return;
        }
        if i == ctx.n {
            ctx.best = used;
            return;
        }
        let limit = (2 * odd_used + 1).max(2 * even_used + 2);
        'candidates: for c in 1..=limit {
            let (fresh, next_odd, next_even) = if c % 2 == 1 {
                if c == 2 * odd_used + 1 {
                    (true, odd_used + 1, even_used)
                } else if c < 2 * odd_used + 1 {
                    (false, odd_used, even_used)
                } else {
                    continue;
                }
            } else if c == 2 * even_used + 2 {
                (true, odd_used, even_used + 1)
            } else if c < 2 * even_used + 2 {
                (false, odd_used, even_used)
            } else {
                continue;
            };
            if fresh && used + 1 >= ctx.best {
                continue;
            }
            for &j in &ctx.earlier_neighbors[i] {
                if ctx.colors[j] == c {
                    continue 'candidates;
                }
            }
            ctx.colors[i] = c;
            for &v in &ctx.completes_at[i] {
                let parity = ctx.closed[v].iter().fold(0usize, |p, &u| p ^ ctx.colors[u]);
                if parity % 2 == 0 {
                    ctx.colors[i] = 0;
                    continue 'candidates;
                }
            }
            dfs(ctx, i + 1, next_odd, next_even);
            ctx.colors[i] = 0;
        }
    }
    let mut ctx = Ctx {
        earlier_neighbors: &earlier_neighbors,
        closed: &closed,
        completes_at: &completes_at,
        colors: vec![0; n],
        best: usize::MAX,
        n,
    };
    dfs(&mut ctx, 0, 0, 0);
    debug_assert_ne!(ctx.best, usize::MAX, "odd-sum colorings always exist");
    Ok(ctx.best)
}
