//! Welfare-based fairness predicates: group independence, equal opportunity,
//! envy freeness (interim, ex-ante, group-level), prejudice freeness, and
//! equal consequences.
//!
//! "For all types" quantifiers are checked on a finite probe set (quantiles
//! of every group's distribution plus all best-response thresholds); for
//! separable preferences the envy-freeness and equal-opportunity checks are
//! additionally resolved exactly through the closed-form value function,
//! which is piecewise linear with a single breakpoint.

use alloc::format;
use alloc::vec::Vec;

use crate::equilibrium::{
    best_response, eu_affine, quantile_grid, threshold, value, Threshold, ThresholdResult,
};
use crate::model::{PreferenceModel, Scenario};
use crate::report::{group_pairs, PredicateReport, ReportBuilder, Verdict};
use crate::stats::posterior;

/// Offset added on each side of a threshold when building probe points.
const PROBE_EPS: f64 = 1e-6;

/// Finite witness set for the "for all t" quantifiers: fixed quantiles of
/// every group's type distribution, every best-response threshold, and the
/// thresholds nudged by `PROBE_EPS` on each side.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeProbe {
    pub points: Vec<f64>,
}

/// Quantile levels included in every probe: 0.01, 0.05..0.95 (step 0.05), 0.99.
fn probe_levels() -> Vec<f64> {
    let mut levels = alloc::vec![0.01];
    for i in 1..=19 {
        levels.push(i as f64 * 0.05);
    }
    levels.push(0.99);
    levels
}

pub fn type_probe(scenario: &Scenario) -> TypeProbe {
    let mut points = Vec::new();
    for group in &scenario.groups {
        for p in probe_levels() {
            points.push(group.distribution.quantile(p));
        }
    }
    for g in 0..scenario.groups.len() {
        if let ThresholdResult::Threshold(Threshold::Interior { value, .. }) = threshold(scenario, g)
        {
            points.push(value - PROBE_EPS);
            points.push(value);
            points.push(value + PROBE_EPS);
        }
    }
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points.dedup_by(|a, b| libm::fabs(*a - *b) <= 1e-12);
    TypeProbe { points }
}

/// Group independence: the payoff u(beta, d, t, g) does not depend on g.
///
/// Affine payoffs agree on all of `R` exactly when their coefficients agree,
/// so the residual is the worst coefficient gap `|dc| + |dm|` over cells and
/// group pairs. Separable preferences are group-free by construction.
pub fn check_group_independence(scenario: &Scenario, tolerance: f64) -> PredicateReport {
    let mut b = ReportBuilder::new("group_independence", tolerance);
    let n = scenario.groups.len();
    if let PreferenceModel::Separable { .. } = scenario.preferences {
        b.note("separable preferences are group-independent by construction");
        if n >= 2 {
            let (x, y) = (&scenario.groups[0].id, &scenario.groups[1].id);
            b.compare(x, y, "structural", 0.0, 0.0);
        }
        return b.finish();
    }
    for (gi, gj) in group_pairs(n) {
        let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for beta in 0..scenario.k {
            for d in 0..scenario.k {
                let a = scenario.preferences.affine(gi, beta, d);
                let z = scenario.preferences.affine(gj, beta, d);
                let dev = libm::fabs(a.base - z.base) + libm::fabs(a.slope - z.slope);
                b.observe(
                    x,
                    y,
                    format!("u(beta={beta}, d={d})"),
                    a.base,
                    z.base,
                    dev,
                );
            }
        }
    }
    b.finish()
}

/// The margin by which the behaviors in the symmetric difference of two
/// argmax sets are suboptimal in the group missing them. Zero when the sets
/// agree.
fn set_disagreement_margin(
    scenario: &Scenario,
    gi: usize,
    gj: usize,
    t: f64,
) -> (f64, bool) {
    let bi = best_response(scenario, gi, t);
    let bj = best_response(scenario, gj, t);
    let max_i = bi.expected_utilities[bi.selected];
    let max_j = bj.expected_utilities[bj.selected];
    let mut margin: f64 = 0.0;
    for &beta in &bi.optimal {
        if !bj.optimal.contains(&beta) {
            margin = margin.max(max_j - bj.expected_utilities[beta]);
        }
    }
    for &beta in &bj.optimal {
        if !bi.optimal.contains(&beta) {
            margin = margin.max(max_i - bi.expected_utilities[beta]);
        }
    }
    let intersects = bi.optimal.iter().any(|b| bj.optimal.contains(b));
    (margin, intersects)
}

/// Equal opportunity: same-type individuals have the same optimal behavior
/// set in every group.
///
/// The primary verdict uses set equality; the nonempty-intersection reading
/// is computed alongside and reported as an extra verdict. For separable
/// preferences the thresholds are also compared analytically, making the
/// probe a redundancy check.
pub fn check_equal_opportunity(
    scenario: &Scenario,
    probe: &TypeProbe,
    tolerance: f64,
) -> PredicateReport {
    let mut b = ReportBuilder::new("equal_opportunity", tolerance);
    let mut intersection_ok = true;
    let mut any_compared = false;
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for &t in &probe.points {
            let (margin, intersects) = set_disagreement_margin(scenario, gi, gj, t);
            any_compared = true;
            b.observe(x, y, format!("argmax sets at t={t}"), 0.0, margin, margin);
            if !intersects {
                intersection_ok = false;
            }
        }
        if let (
            ThresholdResult::Threshold(Threshold::Interior { value: ti, .. }),
            ThresholdResult::Threshold(Threshold::Interior { value: tj, .. }),
        ) = (threshold(scenario, gi), threshold(scenario, gj))
        {
            if matches!(scenario.preferences, PreferenceModel::Separable { .. }) {
                b.compare(x, y, "best-response threshold", ti, tj);
            }
        }
    }
    if any_compared {
        b.extra_verdict(
            "nonempty_intersection",
            if intersection_ok {
                Verdict::Satisfied
            } else {
                Verdict::Violated
            },
        );
    }
    b.finish()
}

/// Envy freeness (interim): no individual, knowing their type, prefers the
/// package (signal accuracy, algorithm, payoffs) of another group.
///
/// Because the definition quantifies over every group for every individual,
/// satisfaction across all groups forces pointwise equality of the value
/// functions, so the residual is the worst `|V*(t, g) - V*(t, g')|` over
/// probes and pairs. A group switch adopts the target group's signal model,
/// algorithm, and payoff row while keeping the individual's realized type.
pub fn check_envy_free(scenario: &Scenario, probe: &TypeProbe, tolerance: f64) -> PredicateReport {
    let mut b = ReportBuilder::new("envy_freeness", tolerance);
    b.note("group switch inherits the target group's signal accuracy and algorithm; the realized type is kept");
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for &t in &probe.points {
            b.compare(
                x,
                y,
                format!("V*(t={t})"),
                value(scenario, gi, t),
                value(scenario, gj, t),
            );
        }
        if matches!(scenario.preferences, PreferenceModel::Separable { .. }) {
            // Exact resolution: V*(t) = max(EU(0), EU(1, t)) where EU(0) is
            // constant in t and EU(1, t) has slope -1, so the value functions
            // coincide on all of R exactly when both lines match.
            for beta in 0..2 {
                let ai = eu_affine(scenario, gi, beta);
                let aj = eu_affine(scenario, gj, beta);
                b.compare(x, y, format!("EU(beta={beta}) intercept"), ai.base, aj.base);
            }
        }
    }
    b.finish()
}

/// Expectation of `f(t)` under group `g`'s type distribution, by the same
/// quantile-grid trapezoid rule the equilibrium fallback uses.
pub fn expect_over_types(scenario: &Scenario, g: usize, f: impl Fn(f64) -> f64) -> f64 {
    let ps = quantile_grid();
    let dist = &scenario.groups[g].distribution;
    let values: Vec<f64> = ps.iter().map(|&p| f(dist.quantile(p))).collect();
    let mut total = values[0] * ps[0] + values[values.len() - 1] * (1.0 - ps[ps.len() - 1]);
    for i in 0..ps.len() - 1 {
        total += 0.5 * (values[i] + values[i + 1]) * (ps[i + 1] - ps[i]);
    }
    total
}

fn expected_value_check(
    scenario: &Scenario,
    tolerance: f64,
    name: &str,
    note: &str,
) -> PredicateReport {
    let mut b = ReportBuilder::new(name, tolerance);
    b.note(note);
    let n = scenario.groups.len();
    for gi in 0..n {
        let own = expect_over_types(scenario, gi, |t| value(scenario, gi, t));
        for gj in 0..n {
            if gi == gj {
                continue;
            }
            let other = expect_over_types(scenario, gi, |t| value(scenario, gj, t));
            let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
            b.require_at_least(x, y, format!("E[V*] under F_{x}"), own, other);
        }
    }
    b.finish()
}

/// Ex-ante envy freeness: expected equilibrium payoffs (integrated before the
/// type realizes) must not be improved by switching groups. The integrals are
/// taken under the evaluating individual's own type distribution.
pub fn check_envy_free_ex_ante(scenario: &Scenario, tolerance: f64) -> PredicateReport {
    expected_value_check(
        scenario,
        tolerance,
        "envy_freeness_ex_ante",
        "both integrals taken under the evaluator's own type distribution",
    )
}

/// Group-level envy freeness: the group-averaged equilibrium payoff, with the
/// average always taken under the individual's true group distribution.
pub fn check_envy_free_group_level(scenario: &Scenario, tolerance: f64) -> PredicateReport {
    expected_value_check(
        scenario,
        tolerance,
        "envy_freeness_group_level",
        "group averages taken under the true group's type distribution",
    )
}

/// Prejudice freeness: the posterior-weighted ex-post values
/// `v(d, g) = sum_beta Pr[beta | d, g] w_g(d, beta)` agree across groups at
/// every decision reachable in both. With scalar weights this reduces to
/// `v(d, g) = Pr[beta = 1 | d, g] * w_g`.
pub fn check_prejudice_free(
    scenario: &Scenario,
    prevalences: &[Vec<f64>],
    tolerance: f64,
) -> PredicateReport {
    let mut b = ReportBuilder::new("prejudice_freeness", tolerance);
    let k = scenario.k;
    let posts: Vec<_> = (0..scenario.groups.len())
        .map(|g| posterior(scenario, g, &prevalences[g]))
        .collect();
    let ex_post = |g: usize, d: usize| -> f64 {
        (0..k)
            .map(|beta| posts[g].prob(d, beta) * scenario.ex_post_weight(g, d, beta))
            .sum()
    };
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for d in 0..k {
            if !posts[gi].reachable(d) || !posts[gj].reachable(d) {
                b.skip(
                    format!("d={d} ({x} vs {y})"),
                    "decision unreachable in at least one group",
                );
                continue;
            }
            b.compare(x, y, format!("v(d={d})"), ex_post(gi, d), ex_post(gj, d));
        }
    }
    b.finish()
}

/// Equal consequences on the ex-post weights: `w_g = w_g'` for all group
/// pairs (table-wise when full weight tables are supplied).
pub fn check_equal_consequences_weights(scenario: &Scenario, tolerance: f64) -> PredicateReport {
    let mut b = ReportBuilder::new("equal_consequences_weights", tolerance);
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (x, y) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        match &scenario.ex_post_weight_tables {
            Some(_) => {
                for d in 0..scenario.k {
                    for beta in 0..scenario.k {
                        b.compare(
                            x,
                            y,
                            format!("w(d={d}, beta={beta})"),
                            scenario.ex_post_weight(gi, d, beta),
                            scenario.ex_post_weight(gj, d, beta),
                        );
                    }
                }
            }
            None => {
                b.compare(
                    x,
                    y,
                    "w",
                    scenario.groups[gi].ex_post_weight,
                    scenario.groups[gj].ex_post_weight,
                );
            }
        }
    }
    b.finish()
}
