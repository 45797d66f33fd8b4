//! The named, re-checkable claims behind `oddsum verify`.
//!
//! Each target rebuilds the relevant structures from scratch, measures the
//! advertised quantities with the exact solvers, and, where the claim is
//! statistical, cross-checks against the definition-level brute-force
//! references on seeded random corpora.

use oddsum::coloring::chromatic_number_induced;
use oddsum::families::{
    attach_bowtie, build_bipartite_family, build_even_delta_family, build_odd_delta_family,
    build_tight_example, build_tight_example_with_bowties, cartesian_product,
    extended_bowtie, path_gadget_extension, subdivide_edges,
};
use oddsum::graph::{all_graphs, complete_graph, random_graph, seeded_rng, Graph};
use oddsum::odd_domination::{
    brute_force_odd_dominating_sets, count_odd_dominating_sets, enumerate_odd_dominating_sets,
    enumeration_cap_from_env, forced_excluded_vertices, solve_odd_domination,
};
use oddsum::odd_sum::{odd_sum_chromatic, oracle_odd_sum_chromatic};
use oddsum::rand::Rng;
use oddsum::surfaces::{chios_surface_lower_bound, gap_divergence_table, heawood_number};
use oddsum::{BigUint, VertexSet};

use crate::report::TheoremReport;
use crate::{CliError, VerifyArgs};

pub fn run(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let start = std::time::Instant::now();
    let mut report = match args.id.as_str() {
        "propA" => oracle_equality(args),
        "lemma2" => gadget_patterns(args),
        "thm1" => delta_family(args),
        "thm3" => bipartite_family(args),
        "obs5" => forced_exclusions(args),
        "thm4" => tight_example(args),
        "lemma6" => bowtie_quadrupling(args),
        "thm7" => bowtie_scaling(args),
        "thm8" => surface_gap(args),
        "k2kn" => product_chromatic(args),
        other => Err(CliError::Invalid(format!(
            "unknown verify id '{other}' (expected propA, lemma2, thm1, thm3, obs5, thm4, \
             lemma6, thm7, thm8, or k2kn)"
        ))),
    }?;
    report.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

fn require_max_n(max_n: usize) -> Result<(), CliError> {
    if max_n == 0 {
        return Err(CliError::Invalid("--max-n must be at least 1".into()));
    }
    Ok(())
}

/// propA: the decomposition solver agrees with the definition-level oracle.
fn oracle_equality(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("propA");
    let max_n = args.max_n.unwrap_or(7);
    let samples = args.samples.unwrap_or(200);
    require_max_n(max_n)?;
    report.param("max-n", max_n);
    report.param("samples", samples);
    report.param("seed", args.seed);

    // Every connected graph on up to min(max-n, 5) vertices.
    let catalog_limit = max_n.min(5);
    let mut checked = 0usize;
    let mut agreed = 0usize;
    for n in 1..=catalog_limit {
        for g in all_graphs(n).filter(|g| g.is_connected()) {
            let solved = odd_sum_chromatic(&g)?.chios();
            let oracle = oracle_odd_sum_chromatic(&g)?;
            checked += 1;
            if solved == oracle {
                agreed += 1;
            }
        }
    }
    report.check(
        &format!("solver equals oracle on all connected graphs up to {catalog_limit} vertices"),
        format!("{checked}/{checked}"),
        format!("{agreed}/{checked}"),
        agreed == checked,
    );

    // Seeded random graphs with up to max-n vertices.
    let mut rng = seeded_rng(args.seed);
    let lo = max_n.min(6);
    let mut r_checked = 0usize;
    let mut r_agreed = 0usize;
    for _ in 0..samples {
        let n = rng.random_range(lo..=max_n);
        let g = random_graph(n, 0.5, &mut rng);
        let solved = odd_sum_chromatic(&g)?.chios();
        let oracle = oracle_odd_sum_chromatic(&g)?;
        r_checked += 1;
        if solved == oracle {
            r_agreed += 1;
        }
    }
    report.check(
        &format!("solver equals oracle on random graphs with {lo}..={max_n} vertices"),
        format!("{r_checked}/{r_checked}"),
        format!("{r_agreed}/{r_checked}"),
        r_agreed == r_checked,
    );
    Ok(report)
}

/// lemma2: interior extensions of path gadgets are forced, and triple edge
/// subdivision leaves the number of odd-dominating sets unchanged.
fn gadget_patterns(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("lemma2");
    let samples = args.samples.unwrap_or(100);
    report.param("samples", samples);
    report.param("seed", args.seed);

    fn side(membership: bool) -> &'static str {
        if membership {
            "in"
        } else {
            "out"
        }
    }

    let cases: &[(usize, bool, bool, usize, &[usize])] = &[
        (1, false, false, 7, &[2, 5]),
        (2, false, false, 8, &[1, 4, 7]),
        (1, true, false, 7, &[3, 6]),
        (2, true, false, 8, &[3, 6]),
        (1, true, true, 7, &[1, 2, 3, 4, 5, 6]),
        (2, true, true, 8, &[1, 2, 3, 4, 5, 6, 7]),
        (1, false, false, 4, &[2]),
        (1, true, false, 4, &[3]),
        (1, true, true, 4, &[1, 2, 3]),
    ];
    for &(residue, v_in, w_in, length, expected) in cases {
        let got = path_gadget_extension(residue, v_in, w_in, length)?;
        report.check(
            &format!(
                "interior members, residue {residue}, ends {}/{}, length {length}",
                side(v_in),
                side(w_in)
            ),
            format!("{expected:?}"),
            format!("{got:?}"),
            got.as_slice() == expected,
        );
    }

    // Triple subdivision: brute-force the solution lists on both sides.
    let mut rng = seeded_rng(args.seed);
    let mut preserved = 0usize;
    let mut done = 0usize;
    while done < samples {
        let n = rng.random_range(3..=6);
        let g = random_graph(n, 0.35, &mut rng);
        if g.n() + 3 * g.m() > 24 {
            continue;
        }
        done += 1;
        let before = brute_force_odd_dominating_sets(&g)?.len();
        let after = brute_force_odd_dominating_sets(&subdivide_edges(&g, 3))?.len();
        if before == after {
            preserved += 1;
        }
    }
    report.check(
        "triple subdivision preserves the solution count (brute force on both sides)",
        format!("{samples}/{samples}"),
        format!("{preserved}/{samples}"),
        preserved == samples,
    );
    Ok(report)
}

/// thm1: the replicated two-gadget families have girth 4k+1, the stated
/// maximum degree, a unique odd-dominating set (all non-leaf vertices), and
/// odd-sum chromatic number 6.
fn delta_family(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("thm1");
    let delta = args.delta.unwrap_or(4);
    let k = args.k.unwrap_or(1);
    report.param("delta", delta);
    report.param("k", k);

    let g = if delta.is_multiple_of(2) {
        build_even_delta_family(delta, k)?
    } else {
        build_odd_delta_family(delta, k)?
    };
    report.check_eq("maximum degree", delta, g.max_degree());
    let girth = g.girth();
    report.check("girth", 4 * k + 1, girth, girth.as_finite() == Some(4 * k + 1));

    let system = solve_odd_domination(&g);
    report.check(
        "unique odd-dominating set",
        "nullity 0",
        format!("nullity {}", system.nullity()),
        system.nullity() == 0,
    );
    let leaves = g.vertices_where_label(|l| l.ends_with(".left-leaf") || l.ends_with(".right-leaf"));
    let expected_d = VertexSet::from_indices(g.n(), leaves.iter().copied()).complement();
    let matches = *system.particular() == expected_d;
    report.check(
        "the unique set is exactly the non-leaf vertices",
        format!("{} vertices", expected_d.count()),
        format!(
            "{} vertices{}",
            system.particular().count(),
            if matches { "" } else { " (different set)" }
        ),
        matches,
    );
    report.check_eq("odd-sum chromatic number", 6, odd_sum_chromatic(&g)?.chios());
    Ok(report)
}

/// thm3: the bipartite family meets its degree and girth targets and has
/// odd-sum chromatic number exactly 4.
fn bipartite_family(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("thm3");
    let delta = args.delta.unwrap_or(4);
    let girth_target = args.girth.unwrap_or(6);
    report.param("delta", delta);
    report.param("girth", girth_target);

    let g = build_bipartite_family(delta, girth_target)?;
    report.check(
        "bipartite",
        "yes",
        if g.is_bipartite().is_some() { "yes" } else { "no" },
        g.is_bipartite().is_some(),
    );
    let girth = g.girth();
    report.check(
        "girth at least the target",
        format!(">= {girth_target}"),
        girth,
        girth.as_finite().is_none_or(|og| og >= girth_target),
    );
    report.check_eq("maximum degree", delta, g.max_degree());
    report.check_eq("odd-sum chromatic number", 4, odd_sum_chromatic(&g)?.chios());
    Ok(report)
}

/// obs5: vertices whose closed neighborhoods force exclusion genuinely avoid
/// every odd-dominating set; the extended bowtie's leaves are such vertices.
fn forced_exclusions(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("obs5");
    let samples = args.samples.unwrap_or(100);
    let max_n = args.max_n.unwrap_or(8);
    require_max_n(max_n)?;
    report.param("samples", samples);
    report.param("max-n", max_n);
    report.param("seed", args.seed);

    let xb = extended_bowtie();
    let forced = forced_excluded_vertices(&xb);
    let leaves: Vec<usize> = (0..xb.n()).filter(|&v| xb.degree(v) == 1).collect();
    let covered = leaves.iter().filter(|&&v| forced.contains(v)).count();
    report.check(
        "extended-bowtie leaves are forced out of every solution",
        format!("{}/{}", leaves.len(), leaves.len()),
        format!("{covered}/{}", leaves.len()),
        covered == leaves.len(),
    );

    fn forced_avoid_all_solutions(g: &Graph) -> Result<bool, CliError> {
        let forced = forced_excluded_vertices(g);
        for d in enumerate_odd_dominating_sets(g, enumeration_cap_from_env())? {
            if !forced.is_disjoint_from(&d) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let mut checked = 0usize;
    let mut consistent = 0usize;
    for n in 1..=max_n.min(5) {
        for g in all_graphs(n).filter(|g| g.is_connected()) {
            checked += 1;
            if forced_avoid_all_solutions(&g)? {
                consistent += 1;
            }
        }
    }
    let mut rng = seeded_rng(args.seed);
    let lo = max_n.min(6);
    for _ in 0..samples {
        let n = rng.random_range(lo..=max_n);
        let g = random_graph(n, 0.4, &mut rng);
        checked += 1;
        if forced_avoid_all_solutions(&g)? {
            consistent += 1;
        }
    }
    report.check(
        "forced vertices appear in no enumerated odd-dominating set",
        format!("{checked}/{checked}"),
        format!("{consistent}/{checked}"),
        consistent == checked,
    );
    Ok(report)
}

/// thm4: the 36-vertex example is 2-connected with maximum degree 5, passes
/// the planarity counting tests, has a unique odd-dominating set needing 4
/// colors on each side, and has odd-sum chromatic number 8.
fn tight_example(_args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("thm4");
    let g = build_tight_example();
    report.check_eq("vertices", 36, g.n());
    report.check_eq("edges", 53, g.m());
    report.check_eq("maximum degree", 5, g.max_degree());
    let biconnected = g.is_biconnected()?;
    report.check("2-connected", "yes", if biconnected { "yes" } else { "no" }, biconnected);
    report.check(
        "degree and girth counting bounds for planarity",
        "pass",
        if g.planarity_necessary() { "pass" } else { "fail" },
        g.planarity_necessary(),
    );

    let system = solve_odd_domination(&g);
    report.check(
        "unique odd-dominating set",
        "nullity 0",
        format!("nullity {}", system.nullity()),
        system.nullity() == 0,
    );
    let excluded = g.vertices_where_label(|l| {
        l == "x1" || l == "x3" || l.ends_with(".l") || l.ends_with(".z")
    });
    let expected_d = VertexSet::from_indices(g.n(), excluded.iter().copied()).complement();
    report.check(
        "the unique set omits exactly the ten stitching vertices",
        format!("{} vertices", expected_d.count()),
        format!("{} vertices", system.particular().count()),
        *system.particular() == expected_d,
    );

    let d = system.particular().clone();
    report.check_eq("chromatic number inside the set", 4, chromatic_number_induced(&g, &d)?);
    report.check_eq(
        "chromatic number outside the set",
        4,
        chromatic_number_induced(&g, &d.complement())?,
    );
    report.check_eq("odd-sum chromatic number", 8, odd_sum_chromatic(&g)?.chios());
    Ok(report)
}

/// lemma6: gluing a bowtie onto any vertex multiplies the number of
/// odd-dominating sets by exactly 4 and never lowers the odd-sum chromatic
/// number.
fn bowtie_quadrupling(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("lemma6");
    let samples = args.samples.unwrap_or(100);
    report.param("samples", samples);
    report.param("seed", args.seed);

    let mut rng = seeded_rng(args.seed);
    let mut quadrupled = 0usize;
    for _ in 0..samples {
        let n = rng.random_range(1..=8);
        let g = random_graph(n, 0.4, &mut rng);
        let v = rng.random_range(0..g.n());
        let attached = attach_bowtie(&g, v);
        let before = brute_force_odd_dominating_sets(&g)?.len();
        let after = brute_force_odd_dominating_sets(&attached)?.len();
        let solver_agrees = count_odd_dominating_sets(&attached) == BigUint::from(after);
        if after == 4 * before && solver_agrees {
            quadrupled += 1;
        }
    }
    report.check(
        "attachment multiplies the brute-forced solution count by exactly 4",
        format!("{samples}/{samples}"),
        format!("{quadrupled}/{samples}"),
        quadrupled == samples,
    );

    let mono_samples = (samples / 4).max(10);
    let mut monotone = 0usize;
    for _ in 0..mono_samples {
        let n = rng.random_range(1..=4);
        let g = random_graph(n, 0.5, &mut rng);
        let v = rng.random_range(0..g.n());
        let before = oracle_odd_sum_chromatic(&g)?;
        let after = oracle_odd_sum_chromatic(&attach_bowtie(&g, v))?;
        if after >= before {
            monotone += 1;
        }
    }
    report.check(
        "odd-sum chromatic number never decreases (oracle on both sides)",
        format!("{mono_samples}/{mono_samples}"),
        format!("{monotone}/{mono_samples}"),
        monotone == mono_samples,
    );
    Ok(report)
}

/// thm7: t attached bowties scale the solution count to exactly 4^t while
/// the odd-sum chromatic number stays 8.
fn bowtie_scaling(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("thm7");
    let t_max = args.t_max.unwrap_or(3);
    report.param("t-max", t_max);

    for t in 0..=t_max {
        let g = build_tight_example_with_bowties(t);
        let count = count_odd_dominating_sets(&g);
        let expected = BigUint::from(4u32).pow(t as u32);
        report.check(
            &format!("odd-dominating sets with {t} bowties"),
            &expected,
            &count,
            count == expected,
        );
    }
    for t in 0..=t_max.min(2) {
        let g = build_tight_example_with_bowties(t);
        report.check_eq(
            &format!("odd-sum chromatic number with {t} bowties"),
            8,
            odd_sum_chromatic(&g)?.chios(),
        );
    }
    Ok(report)
}

/// thm8: from genus 30 on, the odd-sum lower bound exceeds the Heawood
/// number, its witness is an embeddable product, and the gap diverges along
/// the doubling schedule.
fn surface_gap(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("thm8");
    let genus = args.g.unwrap_or(30);
    report.param("g", genus);
    if genus < 30 {
        return Err(CliError::Invalid(format!(
            "the bound overtakes the Heawood number from genus 30 on; got --g {genus}"
        )));
    }

    let heawood = heawood_number(genus);
    if genus == 30 {
        report.check_eq("Heawood number at genus 30", 22, heawood as usize);
    }
    let bound = chios_surface_lower_bound(genus)?;
    report.check(
        "lower bound exceeds the Heawood number",
        format!("> {heawood}"),
        format!("{:.6}", bound.bound),
        bound.bound > heawood as f64,
    );
    report.check(
        "witness product graph attains the bound",
        format!("2n >= {:.6}", bound.bound),
        format!("2n = {}", 2 * bound.witness_n),
        2.0 * bound.witness_n as f64 >= bound.bound,
    );

    let rows = gap_divergence_table(genus.max(240))?;
    let increasing = rows.windows(2).all(|w| w[1].gap > w[0].gap);
    report.check(
        &format!(
            "gap grows along g = 30, 60, ..., {}",
            rows.last().map_or(0, |r| r.g)
        ),
        "strictly increasing",
        if increasing { "strictly increasing" } else { "not monotone" },
        increasing,
    );
    Ok(report)
}

/// k2kn: the product of an edge with an odd clique Kn has exactly two
/// odd-dominating sets and odd-sum chromatic number 2n.
fn product_chromatic(args: &VerifyArgs) -> Result<TheoremReport, CliError> {
    let mut report = TheoremReport::new("k2kn");
    report.param("long", args.long);

    let c4 = cartesian_product(&complete_graph(2), &complete_graph(2));
    let is_c4 = c4.n() == 4 && c4.m() == 4 && c4.girth().as_finite() == Some(4);
    report.check(
        "the product of two edges is the 4-cycle",
        "4 vertices, 4 edges, girth 4",
        format!("{} vertices, {} edges, girth {}", c4.n(), c4.m(), c4.girth()),
        is_c4,
    );

    let mut sizes = vec![3usize, 5];
    if args.long {
        sizes.push(7);
    }
    for n in sizes {
        let g = cartesian_product(&complete_graph(2), &complete_graph(n));
        let count = count_odd_dominating_sets(&g);
        report.check(
            &format!("odd-dominating sets of the product with K{n}"),
            "2",
            &count,
            count == BigUint::from(2u32),
        );
        report.check_eq(
            &format!("odd-sum chromatic number of the product with K{n}"),
            2 * n,
            odd_sum_chromatic(&g)?.chios(),
        );
    }
    Ok(report)
}
