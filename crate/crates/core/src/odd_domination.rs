//! Odd-dominating sets via bit-packed GF(2) linear algebra.
//!
//! A set `D` is odd-dominating when every closed neighborhood meets it an odd
//! number of times: `|N[x] ∩ D|` odd for all `x`. Equivalently, its indicator
//! vector solves `(A + I)·x = 1` over GF(2). Every graph has at least one
//! solution, and the full solution space is an affine subspace of dimension
//! equal to the system's nullity, so there are exactly `2^nullity` sets.
//!
//! Elimination is Gauss–Jordan on bit rows with word-level XOR; pivots are
//! chosen lowest-index-first, making the particular solution (free variables
//! zero) and the nullspace basis (increasing free-variable order) fully
//! deterministic. Enumeration walks the affine space in Gray-code order so
//! each step is a single basis XOR.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Default ceiling on how many solutions [`solutions`](GF2System::solutions)
/// may enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_CAP`].
pub const ENUMERATION_CAP_ENV: &str = "ODDSUM_CAP";

/// The enumeration cap: `ODDSUM_CAP` from the environment when set and
/// parseable, otherwise the default.
pub fn enumeration_cap_from_env() -> u64 {
    std::env::var(ENUMERATION_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OdsError {
    #[error("solution space has 2^{nullity} sets, over the enumeration cap {cap}")]
    SpaceTooLarge { nullity: usize, cap: u64 },
    #[error("brute force is limited to {max} vertices, got {n}")]
    BruteForceTooLarge { n: usize, max: usize },
}

/// Solved odd-domination system for one graph.
///
/// Holds the original closed-neighborhood matrix `A + I`, one particular
/// solution (free variables zero), and a nullspace basis in increasing
/// free-variable order.
pub struct GF2System {
    n: usize,
    matrix: Vec<VertexSet>,
    particular: VertexSet,
    basis: Vec<VertexSet>,
}

/// Set up and eliminate the GF(2) system `(A + I)·x = 1` for `g`.
///
/// # Panics
/// Panics if elimination finds the system inconsistent. That cannot happen
/// for a closed-neighborhood matrix — the all-ones vector always lies in its
/// column space — so a panic here means the solver itself is broken.
pub fn solve_odd_domination(g: &Graph) -> GF2System {
    let n = g.n();
    let matrix: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut rows = matrix.clone();
    // rhs bit per row; starts as the all-ones target.
    let mut rhs = VertexSet::full(n);
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..n {
        let rank = pivots.len();
        let Some(r) = (rank..n).find(|&r| rows[r].contains(col)) else {
            continue;
        };
        rows.swap(rank, r);
        let (a, b) = (rhs.contains(rank), rhs.contains(r));
        rhs.set(rank, b);
        rhs.set(r, a);
        let pivot_row = rows[rank].clone();
        let pivot_rhs = rhs.contains(rank);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.contains(col) {
                row.xor_with(&pivot_row);
                if pivot_rhs {
                    let flipped = !rhs.contains(i);
                    rhs.set(i, flipped);
                }
            }
        }
        pivots.push(col);
    }
    let rank = pivots.len();
    for (r, row) in rows.iter().enumerate().skip(rank) {
        debug_assert!(row.is_empty());
        if rhs.contains(r) {
            panic!(
                "odd-domination system inconsistent at reduced row {r}; \
                 the closed-neighborhood matrix always admits a solution, \
                 so this indicates a solver defect"
            );
        }
    }
    let mut particular = VertexSet::new(n);
    for (t, &col) in pivots.iter().enumerate() {
        if rhs.contains(t) {
            particular.insert(col);
        }
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(n - rank);
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut b = VertexSet::new(n);
        b.insert(f);
        for (t, &col) in pivots.iter().enumerate() {
            if rows[t].contains(f) {
                b.insert(col);
            }
        }
        basis.push(b);
    }
    let system = GF2System {
        n,
        matrix,
        particular,
        basis,
    };
    debug_assert!(system.is_solution(&system.particular));
    debug_assert!(system.basis.iter().all(|b| {
        (0..n).all(|v| !system.matrix[v].odd_intersection(b))
    }));
    system
}

impl GF2System {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row `v` of the closed-neighborhood matrix, i.e. `N[v]`.
    pub fn matrix_row(&self, v: usize) -> &VertexSet {
        &self.matrix[v]
    }

    /// The particular solution with all free variables zero.
    pub fn particular(&self) -> &VertexSet {
        &self.particular
    }

    /// Nullspace basis vectors, in increasing free-variable order.
    pub fn basis(&self) -> &[VertexSet] {
        &self.basis
    }

    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    /// Number of odd-dominating sets, exactly `2^nullity`.
    pub fn count(&self) -> BigUint {
        BigUint::from(1u8) << self.nullity()
    }

    fn is_solution(&self, x: &VertexSet) -> bool {
        (0..self.n).all(|v| self.matrix[v].odd_intersection(x))
    }

    /// Vertices contained in *every* odd-dominating set: members of the
    /// particular solution untouched by any basis vector.
    pub fn solution_core(&self) -> VertexSet {
        let mut varying = VertexSet::new(self.n);
        for b in &self.basis {
            varying.or_with(b);
        }
        let mut core = self.particular.clone();
        core.and_with(&varying.complement());
        core
    }

    /// Stream all solutions in Gray-code order starting from the particular
    /// solution, so consecutive sets differ by one basis vector.
    ///
    /// Fails up front when `2^nullity > cap`; the error carries the nullity.
    pub fn solutions(&self, cap: u64) -> Result<SolutionIter, OdsError> {
        let nullity = self.nullity();
        if nullity >= 64 || 1u64 << nullity > cap {
            return Err(OdsError::SpaceTooLarge { nullity, cap });
        }
        Ok(SolutionIter {
            current: self.particular.clone(),
            basis: self.basis.clone(),
            emitted: 0,
            total: 1u64 << nullity,
        })
    }
}

/// Gray-code walk over the affine solution space.
#[derive(Debug)]
pub struct SolutionIter {
    current: VertexSet,
    basis: Vec<VertexSet>,
    emitted: u64,
    total: u64,
}

impl Iterator for SolutionIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.emitted == self.total {
            return None;
        }
        if self.emitted > 0 {
            let flip = self.emitted.trailing_zeros() as usize;
            self.current.xor_with(&self.basis[flip]);
        }
        self.emitted += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.emitted) as usize;
        (left, Some(left))
    }
}

/// Exact number of odd-dominating sets of `g`.
pub fn count_odd_dominating_sets(g: &Graph) -> BigUint {
    solve_odd_domination(g).count()
}

/// All odd-dominating sets in Gray-code order, capped.
pub fn enumerate_odd_dominating_sets(g: &Graph, cap: u64) -> Result<SolutionIter, OdsError> {
    solve_odd_domination(g).solutions(cap)
}

/// Vertices whose closed neighborhood meets `d` an even number of times.
/// Empty exactly when `d` is odd-dominating.
pub fn odd_domination_violations(g: &Graph, d: &VertexSet) -> Vec<usize> {
    assert_eq!(d.len(), g.n(), "vertex set universe mismatch");
    (0..g.n())
        .filter(|&v| !g.closed_neighborhood(v).odd_intersection(d))
        .collect()
}

/// Definition-level check that `d` is odd-dominating.
pub fn is_odd_dominating(g: &Graph, d: &VertexSet) -> bool {
    odd_domination_violations(g, d).is_empty()
}

/// Vertices that can belong to no odd-dominating set because some pair
/// `v, w` has `N[w] = N[v] ∪ {x}` with `x ∉ N[v]`: oddness at `v` and `w`
/// would then disagree about `x`.
pub fn forced_excluded_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    let rows: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut excluded = VertexSet::new(n);
    for v in 0..n {
        for w in v + 1..n {
            let mut diff = rows[v].clone();
            diff.xor_with(&rows[w]);
            if diff.count() == 1 {
                excluded.insert(diff.first().expect("one-element set"));
            }
        }
    }
    excluded
}

/// Exhaustive check of every subset, in numeric bit-pattern order (vertex
/// `i` is bit `i`). Independent of the elimination path; the two must agree.
pub fn brute_force_odd_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, OdsError> {
    const MAX: usize = 24;
    let n = g.n();
    if n > MAX {
        return Err(OdsError::BruteForceTooLarge { n, max: MAX });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            g.closed_neighborhood(v)
                .iter()
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let mut out = Vec::new();
    for s in 0..1u64 << n {
        let s = s as u32;
        if masks.iter().all(|&m| (m & s).count_ones() % 2 == 1) {
            out.push(VertexSet::from_indices(
                n,
                (0..n).filter(|&i| s >> i & 1 == 1),
            ));
        }
    }
    Ok(out)
}
