//! Confusion statistics, error rates, Bayesian posteriors, and the
//! accuracy/welfare classification for exogenous prevalences.

use alloc::vec::Vec;

use crate::model::Scenario;
use crate::REACH_EPS;

/// Joint outcome probabilities for a binary problem.
///
/// Cells are indexed by behavior: `w1` is the true-positive mass
/// (behavior 1, decision 1), `l1` the false-negative mass (behavior 1,
/// decision 0), `l0` the false-positive mass (behavior 0, decision 1), and
/// `w0` the true-negative mass.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConfusionTable {
    pub w1: f64,
    pub l1: f64,
    pub l0: f64,
    pub w0: f64,
}

impl ConfusionTable {
    pub fn total(&self) -> f64 {
        self.w1 + self.l1 + self.l0 + self.w0
    }

    pub fn accuracy(&self) -> f64 {
        self.w1 + self.w0
    }

    /// Marginal probability of decision 1.
    pub fn decision_one(&self) -> f64 {
        self.w1 + self.l0
    }
}

/// Behavior-conditional rates plus accuracy.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RateBundle {
    pub tpr: f64,
    pub tnr: f64,
    pub fpr: f64,
    pub fnr: f64,
    pub accuracy: f64,
}

/// Joint decision/behavior probabilities for a binary problem under a
/// symmetric binary signal.
///
/// `confusion(1, 1, 0.5, 1)` is diagonal with mass 0.5 on each correct cell;
/// a fully randomizing algorithm (`delta0 = delta1 = 1/2`) splits each
/// behavior's mass evenly regardless of `phi`.
pub fn confusion(delta0: f64, delta1: f64, pi: f64, phi: f64) -> ConfusionTable {
    ConfusionTable {
        w1: pi * (phi * delta1 + (1.0 - phi) * (1.0 - delta0)),
        l1: pi * (phi * (1.0 - delta1) + (1.0 - phi) * delta0),
        l0: (1.0 - pi) * (phi * (1.0 - delta0) + (1.0 - phi) * delta1),
        w0: (1.0 - pi) * (phi * delta0 + (1.0 - phi) * (1.0 - delta1)),
    }
}

/// Behavior-conditional error rates under a symmetric binary signal:
/// `fnr = phi + delta0 - phi (delta0 + delta1)` and symmetrically for `fpr`.
///
/// The formulas land in [0, 1] for arguments in [0, 1]; this is asserted
/// rather than clamped.
pub fn error_rates(delta0: f64, delta1: f64, phi: f64) -> (f64, f64) {
    let fnr = phi + delta0 - phi * (delta0 + delta1);
    let fpr = phi + delta1 - phi * (delta0 + delta1);
    debug_assert!((-1e-12..=1.0 + 1e-12).contains(&fnr), "fnr = {fnr}");
    debug_assert!((-1e-12..=1.0 + 1e-12).contains(&fpr), "fpr = {fpr}");
    (fnr, fpr)
}

/// Rates derived from a binary `(delta0, delta1, phi)` triple.
pub fn rate_bundle(delta0: f64, delta1: f64, pi: f64, phi: f64) -> RateBundle {
    let (fnr, fpr) = error_rates(delta0, delta1, phi);
    let table = confusion(delta0, delta1, pi, phi);
    RateBundle {
        tpr: 1.0 - fnr,
        tnr: 1.0 - fpr,
        fpr,
        fnr,
        accuracy: table.accuracy(),
    }
}

/// Normalized ex-ante expected payoff:
/// `pi * lambda * fnr + (1 - pi) * gamma * fpr`.
///
/// The composition order matches this exact expression so the identity with
/// [`error_rates`] holds bitwise.
pub fn normalized_eu(delta0: f64, delta1: f64, pi: f64, phi: f64, lambda: f64, gamma: f64) -> f64 {
    let (fnr, fpr) = error_rates(delta0, delta1, phi);
    pi * lambda * fnr + (1.0 - pi) * gamma * fpr
}

/// How expected welfare moves with algorithmic accuracy when the error
/// payoffs have equal magnitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WelfareDirection {
    IncreasingInAccuracy,
    DecreasingInAccuracy,
    NotMeasurableByAccuracy,
    /// `|lambda| != |gamma|` or both zero: outside the classification's
    /// hypothesis.
    Degenerate,
}

/// Classify the welfare/accuracy relationship from the error payoffs
/// `(lambda, gamma)`.
pub fn accuracy_welfare_direction(lambda: f64, gamma: f64) -> WelfareDirection {
    if lambda == 0.0 && gamma == 0.0 {
        return WelfareDirection::Degenerate;
    }
    if lambda == gamma {
        return if lambda < 0.0 {
            WelfareDirection::IncreasingInAccuracy
        } else {
            WelfareDirection::DecreasingInAccuracy
        };
    }
    if lambda == -gamma {
        return WelfareDirection::NotMeasurableByAccuracy;
    }
    WelfareDirection::Degenerate
}

/// Joint table Pr[behavior, decision] for one group of a general scenario,
/// marginalizing the signal: `prevalence(beta) * sum_s Phi[beta][s] D[s][d]`.
///
/// `prevalence` must sum to 1.
pub fn general_confusion(scenario: &Scenario, g: usize, prevalence: &[f64]) -> Vec<Vec<f64>> {
    let k = scenario.k;
    debug_assert_eq!(prevalence.len(), k);
    let mut out = Vec::with_capacity(k);
    for beta in 0..k {
        let mut row = Vec::with_capacity(k);
        for d in 0..k {
            row.push(prevalence[beta] * scenario.decision_given_behavior(g, beta, d));
        }
        out.push(row);
    }
    out
}

/// Posterior over behaviors per decision for one group.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Posterior {
    /// Marginal decision probabilities Pr[d].
    pub decision_marginals: Vec<f64>,
    /// `rows[d]` is Some(distribution over behaviors) when Pr[d] exceeds the
    /// reachability threshold, None otherwise.
    pub rows: Vec<Option<Vec<f64>>>,
}

impl Posterior {
    pub fn reachable(&self, d: usize) -> bool {
        self.rows[d].is_some()
    }

    /// Posterior probability of `beta` given decision `d`; panics on an
    /// unreachable decision.
    pub fn prob(&self, d: usize, beta: usize) -> f64 {
        self.rows[d].as_ref().expect("reachable decision")[beta]
    }
}

/// Bayesian posterior over behaviors for each decision, computed from the
/// joint table of [`general_confusion`]. Decisions with marginal probability
/// below [`REACH_EPS`] carry no distribution.
pub fn posterior(scenario: &Scenario, g: usize, prevalence: &[f64]) -> Posterior {
    let k = scenario.k;
    let joint = general_confusion(scenario, g, prevalence);
    let mut marginals = alloc::vec![0.0; k];
    for beta in 0..k {
        for (d, m) in marginals.iter_mut().enumerate() {
            *m += joint[beta][d];
        }
    }
    let rows = (0..k)
        .map(|d| {
            if marginals[d] < REACH_EPS {
                None
            } else {
                Some((0..k).map(|beta| joint[beta][d] / marginals[d]).collect())
            }
        })
        .collect();
    Posterior {
        decision_marginals: marginals,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{canonical_binary, PrevalenceMode, SignalModel, StochasticAlgorithm};

    #[test]
    fn perfect_signal_identity_algorithm_is_diagonal() {
        let t = confusion(1.0, 1.0, 0.5, 1.0);
        assert_eq!((t.w1, t.l1, t.l0, t.w0), (0.5, 0.0, 0.0, 0.5));
    }

    #[test]
    fn reference_confusion_values() {
        let t = confusion(0.8, 0.7, 0.6, 0.9);
        assert!((t.w1 - 0.39).abs() < 1e-12);
        assert!((t.l1 - 0.21).abs() < 1e-12);
        assert!((t.l0 - 0.10).abs() < 1e-12);
        assert!((t.w0 - 0.30).abs() < 1e-12);
        assert!((t.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn randomizing_algorithm_splits_mass() {
        for (pi, phi) in [(0.3, 0.6), (0.9, 0.95), (0.5, 0.5)] {
            let t = confusion(0.5, 0.5, pi, phi);
            assert!((t.w1 - pi / 2.0).abs() < 1e-12);
            assert!((t.l1 - pi / 2.0).abs() < 1e-12);
            assert!((t.l0 - (1.0 - pi) / 2.0).abs() < 1e-12);
            assert!((t.w0 - (1.0 - pi) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn error_rate_values() {
        let (fnr, fpr) = error_rates(0.8, 0.7, 0.9);
        assert!((fnr - 0.35).abs() < 1e-12);
        assert!((fpr - 0.25).abs() < 1e-12);
        // Consistency with the joint table: fnr = l1 / pi, fpr = l0 / (1 - pi).
        let t = confusion(0.8, 0.7, 0.6, 0.9);
        assert!((fnr - t.l1 / 0.6).abs() < 1e-12);
        assert!((fpr - t.l0 / 0.4).abs() < 1e-12);

        let (fnr, fpr) = error_rates(1.0, 1.0, 0.85);
        assert!((fnr - 0.15).abs() < 1e-12);
        assert!((fpr - 0.15).abs() < 1e-12);
        assert_eq!(error_rates(1.0, 1.0, 1.0), (0.0, 0.0));
    }

    #[test]
    fn normalized_eu_values() {
        assert_eq!(normalized_eu(0.3, 0.8, 0.4, 0.7, 0.0, 0.0), 0.0);
        let v = normalized_eu(1.0, 1.0, 0.5, 0.9, -1.0, -1.0);
        assert!((v + 0.1).abs() < 1e-12);
        let v = normalized_eu(0.8, 0.7, 0.6, 0.9, 1.0, -1.0);
        assert!((v - 0.11).abs() < 1e-12);
    }

    #[test]
    fn welfare_direction_classification() {
        use WelfareDirection::*;
        assert_eq!(accuracy_welfare_direction(-1.0, -1.0), IncreasingInAccuracy);
        assert_eq!(accuracy_welfare_direction(2.0, 2.0), DecreasingInAccuracy);
        assert_eq!(accuracy_welfare_direction(1.0, -1.0), NotMeasurableByAccuracy);
        assert_eq!(accuracy_welfare_direction(1.0, 2.0), Degenerate);
        assert_eq!(accuracy_welfare_direction(0.0, 0.0), Degenerate);
    }

    #[test]
    fn general_confusion_specializes_to_binary() {
        let s = canonical_binary(0.6, 0.9, 0.8, 0.7).unwrap();
        let joint = general_confusion(&s, 0, &[0.4, 0.6]);
        let t = confusion(0.8, 0.7, 0.6, 0.9);
        assert!((joint[1][1] - t.w1).abs() < 1e-15);
        assert!((joint[1][0] - t.l1).abs() < 1e-15);
        assert!((joint[0][1] - t.l0).abs() < 1e-15);
        assert!((joint[0][0] - t.w0).abs() < 1e-15);
    }

    #[test]
    fn identity_chain_yields_diagonal_prevalence() {
        let mut s = canonical_binary(0.25, 1.0, 1.0, 1.0).unwrap();
        s.k = 3;
        s.groups[0].signal = SignalModel::General {
            rows: alloc::vec![
                alloc::vec![1.0, 0.0, 0.0],
                alloc::vec![0.0, 1.0, 0.0],
                alloc::vec![0.0, 0.0, 1.0],
            ],
        };
        s.groups[0].prevalence = PrevalenceMode::Exogenous(alloc::vec![0.2, 0.3, 0.5]);
        let id = s.groups[0].id.clone();
        s.algorithm = StochasticAlgorithm::new(alloc::vec![(
            id,
            alloc::vec![
                alloc::vec![1.0, 0.0, 0.0],
                alloc::vec![0.0, 1.0, 0.0],
                alloc::vec![0.0, 0.0, 1.0],
            ],
        )]);
        s.preferences = crate::model::PreferenceModel::AffineTable {
            per_group: alloc::vec![alloc::vec![
                alloc::vec![crate::model::AffinePayoff::ZERO; 3];
                3
            ]],
        };
        let joint = general_confusion(&s, 0, &[0.2, 0.3, 0.5]);
        for b in 0..3 {
            for d in 0..3 {
                let expect = if b == d { [0.2, 0.3, 0.5][b] } else { 0.0 };
                assert!((joint[b][d] - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn posterior_matches_hand_computation() {
        let s = canonical_binary(0.6, 0.9, 0.8, 0.7).unwrap();
        let post = posterior(&s, 0, &[0.4, 0.6]);
        // Pr[beta=1 | d=1] = w1 / (w1 + l0) = 0.39 / 0.49.
        assert!((post.prob(1, 1) - 0.39 / 0.49).abs() < 1e-12);
        assert!((post.prob(1, 0) - 0.10 / 0.49).abs() < 1e-12);
        assert!((post.decision_marginals[1] - 0.49).abs() < 1e-12);
    }

    #[test]
    fn uninformative_signal_returns_prevalence() {
        let s = canonical_binary(0.37, 0.5, 0.8, 0.7).unwrap();
        let post = posterior(&s, 0, &[0.63, 0.37]);
        for d in 0..2 {
            assert!((post.prob(d, 1) - 0.37).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_algorithm_marks_unreachable() {
        // Always decision 1: delta0 = 0, delta1 = 1.
        let s = canonical_binary(0.6, 0.9, 0.0, 1.0).unwrap();
        let post = posterior(&s, 0, &[0.4, 0.6]);
        assert!(!post.reachable(0));
        assert!((post.prob(1, 1) - 0.6).abs() < 1e-12);
    }

    #[test]
    fn bayes_consistency() {
        let s = canonical_binary(0.6, 0.9, 0.8, 0.7).unwrap();
        let prevalence = [0.4, 0.6];
        let post = posterior(&s, 0, &prevalence);
        for beta in 0..2 {
            let total: f64 = (0..2)
                .filter(|&d| post.reachable(d))
                .map(|d| post.decision_marginals[d] * post.prob(d, beta))
                .sum();
            assert!((total - prevalence[beta]).abs() < 1e-9);
        }
    }
}
