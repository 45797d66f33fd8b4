//! Closed-form surface invariants: the Heawood number, the genus of complete
//! graphs, cycle-rank bookkeeping for complete bipartite graphs, a genus
//! bound for products with an edge, and the resulting lower bound on the
//! odd-sum chromatic number over all graphs embeddable in the genus-`g`
//! surface. All integer formulas use exact integer arithmetic; floating
//! point appears only in the final real-valued bound.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("the lower bound needs genus at least 3, got {genus}")]
    GenusBelowDomain { genus: u64 },
    #[error("the divergence table needs g_max at least 30, got {g_max}")]
    TableTooSmall { g_max: u64 },
}

/// Heawood number ⌊(7 + √(1 + 48g)) / 2⌋, the chromatic upper bound for the
/// genus-`g` surface.
pub fn heawood_number(genus: u64) -> u64 {
    (7 + (1 + 48 * genus).isqrt()) / 2
}

/// Orientable genus of the complete graph: ⌈(n−3)(n−4)/12⌉, zero through
/// `n = 4`.
pub fn genus_complete(n: u64) -> u64 {
    if n <= 4 {
        0
    } else {
        ((n - 3) * (n - 4)).div_ceil(12)
    }
}

/// Cycle rank (first Betti number) of the complete bipartite graph:
/// `mn − (m + n) + 1` for `m, n ≥ 1`.
pub fn betti_complete_bipartite(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1, "both parts must be nonempty");
    m * n + 1 - m - n
}

/// Genus upper bound for the product of an edge with the complete graph on
/// `n` vertices: `2·γ(K_n) + n·γ(K_2) + 𝓑(K_{2,n}) = 2·γ(K_n) + (n − 1)`.
pub fn product_genus_bound(n: u64) -> u64 {
    assert!(n >= 1, "the complete factor must be nonempty");
    2 * genus_complete(n) + (n - 1)
}

/// Lower bound on the odd-sum chromatic number achievable on the genus-`g`
/// surface, with the odd `n` witnessing it via an embedded product graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceBound {
    pub bound: f64,
    pub witness_n: u64,
}

/// The bound `−3 + √(24g − 67)` together with its witness: the largest odd
/// `n` whose product graph is certified embeddable by
/// [`product_genus_bound`]. Requires `g ≥ 3`; the witness always satisfies
/// `2·witness_n ≥ bound`, which is what makes the bound attained by an
/// embedded graph.
pub fn chios_surface_lower_bound(genus: u64) -> Result<SurfaceBound, SurfaceError> {
    if genus < 3 {
        return Err(SurfaceError::GenusBelowDomain { genus });
    }
    let radicand = 24 * genus - 67;
    let bound = -3.0 + (radicand as f64).sqrt();
    let mut witness_n = 3;
    while product_genus_bound(witness_n + 2) <= genus {
        witness_n += 2;
    }
    // Closed-form candidate ⌊(1 + √(24g − 67)) / 2⌋ rounded down to odd
    // (clamped to the domain floor 3): always embeddable, hence never above
    // the true witness, and already large enough to cover the bound.
    let closed = radicand.isqrt().div_ceil(2);
    let candidate = if closed % 2 == 1 { closed } else { closed - 1 }.max(3);
    debug_assert!(product_genus_bound(candidate) <= genus);
    debug_assert!(witness_n >= candidate);
    assert!(
        2.0 * witness_n as f64 >= bound,
        "the embedded witness must reach the analytic bound (g={genus})"
    );
    Ok(SurfaceBound { bound, witness_n })
}

/// Everything this module can say about one surface.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceFigures {
    pub genus: u64,
    pub heawood: u64,
    /// `None` below the bound's domain (`genus < 3`).
    pub chios_lower: Option<f64>,
    /// Largest odd `n` with an embeddable product witness, when defined.
    pub max_product_n: Option<u64>,
}

pub fn surface_figures(genus: u64) -> SurfaceFigures {
    let bound = chios_surface_lower_bound(genus).ok();
    SurfaceFigures {
        genus,
        heawood: heawood_number(genus),
        chios_lower: bound.as_ref().map(|b| b.bound),
        max_product_n: bound.map(|b| b.witness_n),
    }
}

/// One sampled genus in the divergence table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapRow {
    pub g: u64,
    pub heawood: u64,
    pub lower_bound: f64,
    pub gap: f64,
}

/// Sample the gap between the odd-sum lower bound and the Heawood number at
/// `g = 30, 60, 120, …` up to `g_max`, doubling each step. The gap is
/// positive throughout and grows without bound.
pub fn gap_divergence_table(g_max: u64) -> Result<Vec<GapRow>, SurfaceError> {
    if g_max < 30 {
        return Err(SurfaceError::TableTooSmall { g_max });
    }
    let mut rows = Vec::new();
    let mut g = 30;
    while g <= g_max {
        let heawood = heawood_number(g);
        let lower_bound = chios_surface_lower_bound(g)
            .expect("sampled genera start at 30")
            .bound;
        rows.push(GapRow { g, heawood, lower_bound, gap: lower_bound - heawood as f64 });
        g *= 2;
    }
    Ok(rows)
}

/// CSV rendering of the divergence table, six decimal places.
pub fn gap_table_csv(rows: &[GapRow]) -> String {
    let mut out = String::from("g,heawood,lower_bound,gap\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.6},{:.6}\n",
            row.g, row.heawood, row.lower_bound, row.gap
        ));
    }
    out
}
