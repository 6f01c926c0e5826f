//! Statistical fairness predicates: error rate balance, accuracy balance,
//! and predictive parity.
//!
//! Every check takes the behavior prevalences explicitly so it can run both
//! at exogenous prevalences and at equilibrium prevalences; reports label
//! nothing themselves — the caller notes which source was used.

use alloc::format;
use alloc::vec::Vec;

use crate::model::Scenario;
use crate::report::{group_pairs, PredicateReport, ReportBuilder};
use crate::stats::posterior;
use crate::REACH_EPS;

/// Error rate balance: the behavior-conditional decision distributions
/// `Pr[d | beta, g]` agree across groups, for every behavior and decision.
///
/// A behavior with prevalence below the reachability threshold in either
/// group of a pair is skipped (the conditional is undefined there) and
/// recorded.
pub fn check_erb(scenario: &Scenario, prevalences: &[Vec<f64>], tolerance: f64) -> PredicateReport {
    conditional_rate_check(scenario, prevalences, tolerance, "error_rate_balance", false)
}

/// Accuracy balance: only the correct-decision probabilities
/// `Pr[d = beta | beta, g]` must agree across groups. Equivalent to ERB when
/// k = 2, strictly weaker otherwise.
pub fn check_ab(scenario: &Scenario, prevalences: &[Vec<f64>], tolerance: f64) -> PredicateReport {
    conditional_rate_check(scenario, prevalences, tolerance, "accuracy_balance", true)
}

fn conditional_rate_check(
    scenario: &Scenario,
    prevalences: &[Vec<f64>],
    tolerance: f64,
    name: &str,
    diagonal_only: bool,
) -> PredicateReport {
    let mut b = ReportBuilder::new(name, tolerance);
    let k = scenario.k;
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (a, z) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for beta in 0..k {
            if prevalences[gi][beta] < REACH_EPS || prevalences[gj][beta] < REACH_EPS {
                b.skip(
                    format!("beta={beta} ({a} vs {z})"),
                    "behavior has no mass in at least one group",
                );
                continue;
            }
            for d in 0..k {
                if diagonal_only && d != beta {
                    continue;
                }
                b.compare(
                    a,
                    z,
                    format!("Pr[d={d} | beta={beta}]"),
                    scenario.decision_given_behavior(gi, beta, d),
                    scenario.decision_given_behavior(gj, beta, d),
                );
            }
        }
    }
    b.finish()
}

/// Predictive parity: the decision-conditional posterior distributions over
/// behaviors agree across groups at every decision reachable in both groups.
/// Decisions unreachable in either group are skipped and recorded.
pub fn check_pp(scenario: &Scenario, prevalences: &[Vec<f64>], tolerance: f64) -> PredicateReport {
    let mut b = ReportBuilder::new("predictive_parity", tolerance);
    let k = scenario.k;
    let posts: Vec<_> = (0..scenario.groups.len())
        .map(|g| posterior(scenario, g, &prevalences[g]))
        .collect();
    for (gi, gj) in group_pairs(scenario.groups.len()) {
        let (a, z) = (&scenario.groups[gi].id, &scenario.groups[gj].id);
        for d in 0..k {
            match (posts[gi].reachable(d), posts[gj].reachable(d)) {
                (true, true) => {
                    for beta in 0..k {
                        b.compare(
                            a,
                            z,
                            format!("Pr[beta={beta} | d={d}]"),
                            posts[gi].prob(d, beta),
                            posts[gj].prob(d, beta),
                        );
                    }
                }
                (ra, rz) => {
                    let who = match (ra, rz) {
                        (false, false) => "both groups",
                        (false, true) => "the first group",
                        _ => "the second group",
                    };
                    b.skip(
                        format!("d={d} ({a} vs {z})"),
                        format!("decision unreachable in {who}"),
                    );
                }
            }
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{two_group_binary, ErrorPayoffs, PreferenceModel, PrevalenceMode, TypeDistribution};

    fn exo(pi_x: f64, pi_y: f64, phi: (f64, f64), dx: (f64, f64), dy: (f64, f64)) -> Scenario {
        two_group_binary(
            phi,
            (dx, dy),
            (
                PrevalenceMode::exogenous_binary(pi_x),
                PrevalenceMode::exogenous_binary(pi_y),
            ),
            (
                TypeDistribution::Logistic { location: 0.0, scale: 1.0 },
                TypeDistribution::Logistic { location: 0.0, scale: 1.0 },
            ),
            PreferenceModel::NormalizedError {
                per_group: alloc::vec![
                    ErrorPayoffs { false_negative: 0.0, false_positive: 0.0 };
                    2
                ],
            },
            (1.0, 1.0),
        )
    }

    fn prevs(s: &Scenario) -> Vec<Vec<f64>> {
        s.groups
            .iter()
            .map(|g| match &g.prevalence {
                PrevalenceMode::Exogenous(d) => d.clone(),
                _ => panic!(),
            })
            .collect()
    }

    #[test]
    fn identical_groups_satisfy_everything() {
        let s = exo(0.4, 0.4, (0.8, 0.8), (0.7, 0.6), (0.7, 0.6));
        let p = prevs(&s);
        assert!(check_erb(&s, &p, 1e-9).satisfied());
        assert!(check_ab(&s, &p, 1e-9).satisfied());
        assert!(check_pp(&s, &p, 1e-9).satisfied());
    }

    #[test]
    fn identity_algorithm_with_unequal_phi_breaks_erb() {
        let s = exo(0.4, 0.4, (0.9, 0.6), (1.0, 1.0), (1.0, 1.0));
        let p = prevs(&s);
        let report = check_erb(&s, &p, 1e-9);
        assert!(report.violated());
        assert!((report.residual - 0.3).abs() < 1e-12);
    }

    #[test]
    fn binary_ab_verdict_equals_erb_verdict() {
        for (phi, dx, dy) in [
            ((0.9, 0.6), (1.0, 1.0), (1.0, 1.0)),
            ((0.8, 0.8), (0.7, 0.6), (0.7, 0.6)),
            ((0.7, 0.8), (0.55, 0.9), (0.4, 0.85)),
        ] {
            let s = exo(0.3, 0.6, phi, dx, dy);
            let p = prevs(&s);
            assert_eq!(
                check_erb(&s, &p, 1e-9).verdict,
                check_ab(&s, &p, 1e-9).verdict
            );
        }
    }

    #[test]
    fn always_one_algorithm_pp_residual_is_prevalence_gap() {
        // delta = (0, 1) awards decision 1 regardless of the signal.
        let s = exo(0.3, 0.6, (0.8, 0.8), (0.0, 1.0), (0.0, 1.0));
        let p = prevs(&s);
        let report = check_pp(&s, &p, 1e-9);
        assert!(report.violated());
        assert!((report.residual - 0.3).abs() < 1e-12);
        assert_eq!(report.skipped.len(), 1, "d=0 skipped as unreachable");
    }
}
