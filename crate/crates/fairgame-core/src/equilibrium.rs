//! Individual best responses, threshold characterizations, endogenous
//! prevalences, and equilibrium confusion statistics.
//!
//! Payoffs are independent across individuals, so the population equilibrium
//! is a direct computation: each type optimizes against the algorithm and the
//! prevalence is the induced mass over behaviors. No fixed-point iteration is
//! involved.

use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{
    AffinePayoff, GroupId, PreferenceModel, PrevalenceMode, Scenario, SignalModel,
};
use crate::stats::general_confusion;

/// Number of quantile nodes for the grid fallback (endogenous k > 2).
const GRID_POINTS: usize = 2001;
/// Quantile range covered by the grid; the residual tail mass is assigned to
/// the best response at the end nodes.
const GRID_P_LO: f64 = 1e-4;

/// Expected utilities per behavior at a type, with the argmax set.
#[derive(Clone, Debug, PartialEq)]
pub struct BestResponseSet {
    /// Expected utility of each behavior.
    pub expected_utilities: Vec<f64>,
    /// Behaviors within the tie tolerance of the maximum.
    pub optimal: Vec<usize>,
    /// Deterministic selection: the smallest index in `optimal`.
    pub selected: usize,
}

/// Threshold characterization of a binary best response.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Threshold {
    /// Behavior 1 is optimal on one side of `value`: below it when
    /// `one_below` (the separable orientation, where choosing 1 costs t),
    /// above it otherwise.
    Interior { value: f64, one_below: bool },
    /// Behavior 1 dominates at every type (threshold +inf in the separable
    /// orientation).
    AllPreferOne,
    /// Behavior 0 dominates at every type (threshold -inf).
    AllPreferZero,
    /// The two behaviors are indifferent at every type.
    AllIndifferent,
}

impl Threshold {
    /// The spec-style signed value: finite crossing, or +/- infinity for a
    /// dominant behavior (in the `one_below` orientation).
    pub fn signed_value(&self) -> f64 {
        match self {
            Threshold::Interior { value, .. } => *value,
            Threshold::AllPreferOne => f64::INFINITY,
            Threshold::AllPreferZero => f64::NEG_INFINITY,
            Threshold::AllIndifferent => 0.0,
        }
    }

    /// Mass of types choosing behavior 1 under distribution cdf `f`.
    pub fn mass_choosing_one(&self, cdf_at: impl Fn(f64) -> f64) -> f64 {
        match self {
            Threshold::Interior { value, one_below } => {
                let below = cdf_at(*value);
                if *one_below {
                    below
                } else {
                    1.0 - below
                }
            }
            Threshold::AllPreferOne => 1.0,
            Threshold::AllPreferZero => 0.0,
            // Ties select the smallest behavior index.
            Threshold::AllIndifferent => 0.0,
        }
    }
}

/// Result of [`threshold`]: binary scenarios are threshold-representable,
/// larger ones fall back to pointwise best responses.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ThresholdResult {
    Threshold(Threshold),
    NotThresholdRepresentable,
}

/// Equilibrium summary for one group.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupEquilibrium {
    pub group: GroupId,
    pub endogenous: bool,
    pub threshold: Option<Threshold>,
    /// Behavior distribution: the equilibrium mass per behavior for
    /// endogenous groups, the exogenous distribution otherwise.
    pub prevalence: Vec<f64>,
    /// `(delta0 + delta1 - 1)` times the signal informativeness, i.e. the
    /// gap Pr[d=1 | beta=1] - Pr[d=1 | beta=0]. Binary only.
    pub responsiveness: Option<f64>,
    /// Joint Pr[behavior, decision] at the equilibrium prevalence.
    pub confusion: Vec<Vec<f64>>,
    /// Pr[d = 1] at equilibrium (binary only).
    pub reward_prob: Option<f64>,
    /// Pr[d = 0] at equilibrium (binary only).
    pub punish_prob: Option<f64>,
    /// True when the prevalence came from the quantile-grid fallback rather
    /// than a closed form.
    pub grid_approximated: bool,
}

/// Equilibrium profile across all groups of a scenario.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EquilibriumProfile {
    pub groups: Vec<GroupEquilibrium>,
}

impl EquilibriumProfile {
    pub fn prevalences(&self) -> Vec<Vec<f64>> {
        self.groups.iter().map(|g| g.prevalence.clone()).collect()
    }
}

/// Expected payoff of behavior `beta` for a type-`t` member of group `g`:
/// the signal- and decision-marginalized payoff
/// `sum_s Phi_g(s | beta) sum_d D_g[s][d] u(beta, d, t, g)`.
pub fn expected_utility(scenario: &Scenario, g: usize, t: f64, beta: usize) -> f64 {
    let a = eu_affine(scenario, g, beta);
    a.eval(t)
}

/// Affine coefficients of the expected utility of `beta` as a function of t.
pub fn eu_affine(scenario: &Scenario, g: usize, beta: usize) -> AffinePayoff {
    let k = scenario.k;
    let signal = &scenario.groups[g].signal;
    let mat = scenario.decision_matrix(g);
    let mut base = 0.0;
    let mut slope = 0.0;
    for s in 0..k {
        let ps = signal.prob(beta, s);
        if ps == 0.0 {
            continue;
        }
        for d in 0..k {
            let pd = mat[s][d];
            if pd == 0.0 {
                continue;
            }
            let u = scenario.preferences.affine(g, beta, d);
            base += ps * pd * u.base;
            slope += ps * pd * u.slope;
        }
    }
    AffinePayoff { base, slope }
}

/// Exact argmax over behaviors at type `t`, with ties resolved within the
/// scenario's tie tolerance toward the smallest behavior index.
pub fn best_response(scenario: &Scenario, g: usize, t: f64) -> BestResponseSet {
    let eus: Vec<f64> = (0..scenario.k)
        .map(|beta| expected_utility(scenario, g, t, beta))
        .collect();
    let max = eus.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let optimal: Vec<usize> = eus
        .iter()
        .enumerate()
        .filter(|(_, &eu)| eu >= max - scenario.tie_epsilon)
        .map(|(i, _)| i)
        .collect();
    let selected = optimal[0];
    BestResponseSet {
        expected_utilities: eus,
        optimal,
        selected,
    }
}

/// Equilibrium expected payoff: the expected utility of the selected best
/// response at type `t`.
pub fn value(scenario: &Scenario, g: usize, t: f64) -> f64 {
    let br = best_response(scenario, g, t);
    br.expected_utilities[br.selected]
}

/// Sign classes of algorithmic responsiveness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ResponsivenessClass {
    PositivelyResponsive,
    NegativelyResponsive,
    Null,
}

/// Responsiveness of a binary algorithm under a symmetric signal:
/// `(delta0 + delta1 - 1) * (2 phi - 1)`.
pub fn responsiveness(delta0: f64, delta1: f64, phi: f64) -> f64 {
    (delta0 + delta1 - 1.0) * (2.0 * phi - 1.0)
}

/// Responsiveness under an asymmetric binary signal:
/// `(delta0 + delta1 - 1) * (phi0 + phi1 - 1)`.
pub fn responsiveness_asymmetric(delta0: f64, delta1: f64, phi0: f64, phi1: f64) -> f64 {
    (delta0 + delta1 - 1.0) * (phi0 + phi1 - 1.0)
}

pub fn classify_responsiveness(rho: f64) -> ResponsivenessClass {
    if rho > 0.0 {
        ResponsivenessClass::PositivelyResponsive
    } else if rho < 0.0 {
        ResponsivenessClass::NegativelyResponsive
    } else {
        ResponsivenessClass::Null
    }
}

/// Pr[d=1 | beta=1] - Pr[d=1 | beta=0] for a binary group of any signal
/// kind; coincides with [`responsiveness`] in the symmetric case.
pub fn group_responsiveness(scenario: &Scenario, g: usize) -> Option<f64> {
    if scenario.k != 2 {
        return None;
    }
    Some(
        scenario.decision_given_behavior(g, 1, 1) - scenario.decision_given_behavior(g, 0, 1),
    )
}

/// Threshold characterization of the best response for group `g`.
///
/// Separable preferences over binary signals use the closed-form products;
/// any other binary preference solves the single linear equation
/// `EU(1, t) = EU(0, t)`. Scenarios with k > 2 are not threshold
/// representable and must use [`best_response`] pointwise.
pub fn threshold(scenario: &Scenario, g: usize) -> ThresholdResult {
    if scenario.k != 2 {
        return ThresholdResult::NotThresholdRepresentable;
    }
    if let PreferenceModel::Separable { reward } = &scenario.preferences {
        let (d0, d1) = scenario.binary_deltas(g);
        let rho = match &scenario.groups[g].signal {
            SignalModel::SymmetricBinary { phi } => Some(responsiveness(d0, d1, *phi)),
            SignalModel::AsymmetricBinary { phi0, phi1 } => {
                Some(responsiveness_asymmetric(d0, d1, *phi0, *phi1))
            }
            SignalModel::General { .. } => None,
        };
        if let Some(rho) = rho {
            return ThresholdResult::Threshold(Threshold::Interior {
                value: reward * rho,
                one_below: true,
            });
        }
    }

    let a1 = eu_affine(scenario, g, 1);
    let a0 = eu_affine(scenario, g, 0);
    let dc = a1.base - a0.base;
    let dm = a1.slope - a0.slope;
    if dm == 0.0 {
        let t = if dc > scenario.tie_epsilon {
            Threshold::AllPreferOne
        } else if dc < -scenario.tie_epsilon {
            Threshold::AllPreferZero
        } else {
            Threshold::AllIndifferent
        };
        return ThresholdResult::Threshold(t);
    }
    ThresholdResult::Threshold(Threshold::Interior {
        value: -dc / dm,
        one_below: dm < 0.0,
    })
}

/// Quantile grid used for integrations and the k > 2 prevalence fallback:
/// `GRID_POINTS` nodes equally spaced in probability over
/// `[GRID_P_LO, 1 - GRID_P_LO]`.
pub(crate) fn quantile_grid() -> Vec<f64> {
    let n = GRID_POINTS;
    (0..n)
        .map(|i| GRID_P_LO + (1.0 - 2.0 * GRID_P_LO) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Grid-approximated equilibrium prevalence for group `g`: the mass each
/// behavior attracts under the pointwise best response, trapezoid-weighted by
/// cdf increments, with tail mass assigned to the end nodes.
fn grid_prevalence(scenario: &Scenario, g: usize) -> Vec<f64> {
    let ps = quantile_grid();
    let dist = &scenario.groups[g].distribution;
    let picks: Vec<usize> = ps
        .iter()
        .map(|&p| best_response(scenario, g, dist.quantile(p)).selected)
        .collect();
    let mut mass = alloc::vec![0.0; scenario.k];
    mass[picks[0]] += ps[0];
    mass[*picks.last().unwrap()] += 1.0 - ps[ps.len() - 1];
    for i in 0..ps.len() - 1 {
        let w = ps[i + 1] - ps[i];
        mass[picks[i]] += 0.5 * w;
        mass[picks[i + 1]] += 0.5 * w;
    }
    mass
}

/// Equilibrium profile of the whole scenario.
///
/// Endogenous binary groups resolve through the threshold: the equilibrium
/// prevalence of behavior 1 is the type mass on the optimal side. Exogenous
/// groups pass their stated distribution through. Endogenous groups with
/// k > 2 use the quantile-grid fallback and are flagged as approximated.
pub fn equilibrium_profile(scenario: &Scenario) -> EquilibriumProfile {
    let groups = (0..scenario.groups.len())
        .map(|g| group_equilibrium(scenario, g))
        .collect();
    EquilibriumProfile { groups }
}

fn group_equilibrium(scenario: &Scenario, g: usize) -> GroupEquilibrium {
    let spec = &scenario.groups[g];
    let endogenous = matches!(spec.prevalence, PrevalenceMode::Endogenous);
    let mut grid_approximated = false;

    let thr = match threshold(scenario, g) {
        ThresholdResult::Threshold(t) => Some(t),
        ThresholdResult::NotThresholdRepresentable => None,
    };

    let prevalence: Vec<f64> = match &spec.prevalence {
        PrevalenceMode::Exogenous(dist) => dist.clone(),
        PrevalenceMode::Endogenous => match thr {
            Some(t) => {
                let p1 = t.mass_choosing_one(|x| spec.distribution.cdf(x));
                alloc::vec![1.0 - p1, p1]
            }
            None => {
                grid_approximated = true;
                grid_prevalence(scenario, g)
            }
        },
    };

    let confusion = general_confusion(scenario, g, &prevalence);
    let (responsiveness, reward_prob, punish_prob) = if scenario.k == 2 {
        let reward: f64 = confusion[0][1] + confusion[1][1];
        (group_responsiveness(scenario, g), Some(reward), Some(1.0 - reward))
    } else {
        (None, None, None)
    };

    GroupEquilibrium {
        group: spec.id.clone(),
        endogenous,
        threshold: thr,
        prevalence,
        responsiveness,
        confusion,
        reward_prob,
        punish_prob,
        grid_approximated,
    }
}

/// Flags for the paper-level behavioral regularity assumptions, reported per
/// group rather than enforced.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AssumptionFlag {
    pub group: GroupId,
    pub message: String,
}

/// Check that optimal behavior is generically unique and that every behavior
/// is optimal on a positive-measure type set.
pub fn assumption_flags(scenario: &Scenario) -> Vec<AssumptionFlag> {
    use alloc::format;
    let mut out = Vec::new();
    for (g, spec) in scenario.groups.iter().enumerate() {
        if scenario.k == 2 {
            match threshold(scenario, g) {
                ThresholdResult::Threshold(Threshold::AllIndifferent) => {
                    out.push(AssumptionFlag {
                        group: spec.id.clone(),
                        message: "optimal behavior is not generically unique: all types are indifferent".into(),
                    });
                }
                ThresholdResult::Threshold(Threshold::AllPreferOne) => {
                    out.push(AssumptionFlag {
                        group: spec.id.clone(),
                        message: "behavior 0 is never optimal".into(),
                    });
                }
                ThresholdResult::Threshold(Threshold::AllPreferZero) => {
                    out.push(AssumptionFlag {
                        group: spec.id.clone(),
                        message: "behavior 1 is never optimal".into(),
                    });
                }
                ThresholdResult::Threshold(Threshold::Interior { value, .. }) => {
                    let mass = spec.distribution.cdf(value);
                    if mass <= 0.0 || mass >= 1.0 {
                        out.push(AssumptionFlag {
                            group: spec.id.clone(),
                            message: format!(
                                "a behavior has zero mass: threshold {value} lies outside the type support"
                            ),
                        });
                    }
                }
                ThresholdResult::NotThresholdRepresentable => {}
            }
        } else {
            let mut seen = alloc::vec![false; scenario.k];
            for &p in quantile_grid().iter() {
                let t = spec.distribution.quantile(p);
                for &b in &best_response(scenario, g, t).optimal {
                    seen[b] = true;
                }
            }
            for (b, ok) in seen.iter().enumerate() {
                if !ok {
                    out.push(AssumptionFlag {
                        group: spec.id.clone(),
                        message: format!("behavior {b} is never optimal on the probe grid"),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{two_group_binary, PreferenceModel, PrevalenceMode, TypeDistribution};

    fn separable_scenario(
        phi: f64,
        d0: f64,
        d1: f64,
        r: f64,
        dist: TypeDistribution,
    ) -> Scenario {
        two_group_binary(
            (phi, phi),
            ((d0, d1), (d0, d1)),
            (PrevalenceMode::Endogenous, PrevalenceMode::Endogenous),
            (dist.clone(), dist),
            PreferenceModel::Separable { reward: r },
            (1.0, 1.0),
        )
    }

    #[test]
    fn separable_eu_matches_expansion() {
        let s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        let (d0, d1, phi, r, t) = (0.8, 0.7, 0.9, 1.0, 0.37);
        let eu0 = expected_utility(&s, 0, t, 0);
        let eu1 = expected_utility(&s, 0, t, 1);
        assert!((eu0 - r * ((1.0 - phi) * d1 + phi * (1.0 - d0))).abs() < 1e-15);
        assert!((eu1 - (r * (phi * d1 + (1.0 - phi) * (1.0 - d0)) - t)).abs() < 1e-15);
    }

    #[test]
    fn zero_payoffs_give_zero_everywhere() {
        let mut s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        s.preferences = PreferenceModel::Separable { reward: 0.0 };
        // reward 0 still leaves the -t beta term; zero out via affine table instead
        s.preferences = PreferenceModel::AffineTable {
            per_group: alloc::vec![
                alloc::vec![alloc::vec![crate::model::AffinePayoff::ZERO; 2]; 2];
                2
            ],
        };
        for beta in 0..2 {
            assert_eq!(expected_utility(&s, 0, 0.4, beta), 0.0);
            assert_eq!(expected_utility(&s, 1, -2.0, beta), 0.0);
        }
        assert_eq!(value(&s, 0, 0.12), 0.0);
    }

    #[test]
    fn responsiveness_values() {
        assert!((responsiveness(1.0, 1.0, 1.0) - 1.0).abs() < 1e-15);
        assert!((responsiveness(0.8, 0.7, 0.9) - 0.4).abs() < 1e-15);
        assert_eq!(responsiveness(0.3, 0.7, 0.8), 0.0);
        assert_eq!(
            classify_responsiveness(responsiveness(0.3, 0.7, 0.8)),
            ResponsivenessClass::Null
        );
    }

    #[test]
    fn threshold_separable() {
        let s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        match threshold(&s, 0) {
            ThresholdResult::Threshold(Threshold::Interior { value, one_below }) => {
                assert!((value - 0.4).abs() < 1e-15);
                assert!(one_below);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn threshold_null_algorithm() {
        let s = separable_scenario(0.9, 0.3, 0.7, 1.5, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        match threshold(&s, 0) {
            ThresholdResult::Threshold(Threshold::Interior { value, .. }) => {
                assert_eq!(value, 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
        // All t < 0 choose 1, all t > 0 choose 0.
        assert_eq!(best_response(&s, 0, -0.5).selected, 1);
        assert_eq!(best_response(&s, 0, 0.5).selected, 0);
    }

    #[test]
    fn boundary_type_is_indifferent() {
        let s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        let br = best_response(&s, 0, 0.4);
        assert_eq!(br.optimal, alloc::vec![0, 1]);
        assert_eq!(br.selected, 0);
        // Low types choose 1 when responsiveness is positive.
        let low = s.groups[0].distribution.quantile(1e-6);
        assert_eq!(best_response(&s, 0, low).selected, 1);
    }

    #[test]
    fn equilibrium_reference_values() {
        let s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        let prof = equilibrium_profile(&s);
        let g = &prof.groups[0];
        assert!((g.threshold.unwrap().signed_value() - 0.4).abs() < 1e-15);
        assert!((g.prevalence[1] - 0.7).abs() < 1e-12);
        // Joint cells at pi* = 0.7.
        let t = crate::stats::confusion(0.8, 0.7, 0.7, 0.9);
        assert!((g.confusion[1][1] - t.w1).abs() < 1e-12);
        assert!((g.confusion[1][0] - t.l1).abs() < 1e-12);
        assert!((g.confusion[0][1] - t.l0).abs() < 1e-12);
        assert!((g.confusion[0][0] - t.w0).abs() < 1e-12);
        let reward = g.reward_prob.unwrap();
        let punish = g.punish_prob.unwrap();
        assert!((reward + punish - 1.0).abs() < 1e-12);
        assert!((reward - (t.w1 + t.l0)).abs() < 1e-12);
    }

    #[test]
    fn null_algorithm_equilibrium_is_cdf_at_zero() {
        let dist = TypeDistribution::Normal { mean: 0.3, std_dev: 1.0 };
        let s = separable_scenario(0.77, 0.25, 0.75, 1.0, dist.clone());
        let prof = equilibrium_profile(&s);
        assert!((prof.groups[0].prevalence[1] - dist.cdf(0.0)).abs() < 1e-12);
    }

    #[test]
    fn exogenous_groups_pass_through() {
        let mut s = separable_scenario(0.9, 0.8, 0.7, 1.0, TypeDistribution::Uniform { lo: -1.0, hi: 1.0 });
        s.groups[0].prevalence = PrevalenceMode::exogenous_binary(0.42);
        let prof = equilibrium_profile(&s);
        assert!((prof.groups[0].prevalence[1] - 0.42).abs() < 1e-15);
        assert!((prof.groups[1].prevalence[1] - 0.7).abs() < 1e-12);
    }

    #[test]
    fn assumption_flags_for_constant_dominance() {
        // Identity algorithm with phi = 1 and error payoffs zero: everyone
        // indifferent.
        let s = two_group_binary(
            (1.0, 1.0),
            ((1.0, 1.0), (1.0, 1.0)),
            (
                PrevalenceMode::exogenous_binary(0.5),
                PrevalenceMode::exogenous_binary(0.5),
            ),
            (
                TypeDistribution::Uniform { lo: 0.0, hi: 1.0 },
                TypeDistribution::Uniform { lo: 0.0, hi: 1.0 },
            ),
            PreferenceModel::NormalizedError {
                per_group: alloc::vec![
                    crate::model::ErrorPayoffs { false_negative: 0.0, false_positive: 0.0 };
                    2
                ],
            },
            (1.0, 1.0),
        );
        let flags = assumption_flags(&s);
        assert!(!flags.is_empty());
    }
}
