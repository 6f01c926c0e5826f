//! Domain types: groups, signal models, stochastic algorithms, type
//! distributions, preference models, and complete scenarios.
//!
//! Construction never fails; [`Scenario::validate`] collects every invariant
//! violation as data. Operations in the other modules assume a scenario that
//! validated cleanly.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::{STRUCT_TOL, TIE_EPS};

/// Opaque group label, unique within a scenario.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupId(pub String);

impl GroupId {
    pub fn new(label: impl Into<String>) -> Self {
        GroupId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl core::fmt::Display for GroupId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Conditional signal distribution Pr[s | beta] for one group.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SignalModel {
    /// Binary signal matching the behavior with probability `phi in [1/2, 1]`.
    SymmetricBinary { phi: f64 },
    /// Binary signal with behavior-dependent match probabilities.
    AsymmetricBinary { phi0: f64, phi1: f64 },
    /// Full k x k row-stochastic matrix; `rows[beta][s] = Pr[s | beta]`.
    General { rows: Vec<Vec<f64>> },
}

impl SignalModel {
    /// Signal-space cardinality implied by the model.
    pub fn k(&self) -> usize {
        match self {
            SignalModel::SymmetricBinary { .. } | SignalModel::AsymmetricBinary { .. } => 2,
            SignalModel::General { rows } => rows.len(),
        }
    }

    /// Pr[s | beta]. Indices must be below `k()`.
    pub fn prob(&self, beta: usize, s: usize) -> f64 {
        match self {
            SignalModel::SymmetricBinary { phi } => {
                if s == beta {
                    *phi
                } else {
                    1.0 - *phi
                }
            }
            SignalModel::AsymmetricBinary { phi0, phi1 } => {
                let matching = if beta == 0 { *phi0 } else { *phi1 };
                if s == beta {
                    matching
                } else {
                    1.0 - matching
                }
            }
            SignalModel::General { rows } => rows[beta][s],
        }
    }

    /// Row `beta` as an owned distribution over signals.
    pub fn row(&self, beta: usize) -> Vec<f64> {
        (0..self.k()).map(|s| self.prob(beta, s)).collect()
    }
}

/// Per-group stochastic map from signals to decisions.
///
/// `matrix(g)[s][d] = Pr[d | s, g]`. For binary problems the convenience
/// accessor [`StochasticAlgorithm::binary_deltas`] exposes the match
/// probabilities `(delta0, delta1)` with `delta_s = Pr[d = s | s]`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StochasticAlgorithm {
    entries: Vec<(GroupId, Vec<Vec<f64>>)>,
}

impl StochasticAlgorithm {
    pub fn new(entries: Vec<(GroupId, Vec<Vec<f64>>)>) -> Self {
        StochasticAlgorithm { entries }
    }

    /// Binary algorithm from per-group `(delta0, delta1)` match probabilities.
    pub fn from_binary_deltas(deltas: &[(GroupId, f64, f64)]) -> Self {
        let entries = deltas
            .iter()
            .map(|(g, d0, d1)| {
                (
                    g.clone(),
                    vec![vec![*d0, 1.0 - *d0], vec![1.0 - *d1, *d1]],
                )
            })
            .collect();
        StochasticAlgorithm { entries }
    }

    pub fn groups(&self) -> impl Iterator<Item = &GroupId> {
        self.entries.iter().map(|(g, _)| g)
    }

    pub fn matrix(&self, g: &GroupId) -> Option<&Vec<Vec<f64>>> {
        self.entries.iter().find(|(id, _)| id == g).map(|(_, m)| m)
    }

    /// `(delta0, delta1)` for a binary group: the diagonal of its matrix.
    pub fn binary_deltas(&self, g: &GroupId) -> Option<(f64, f64)> {
        let m = self.matrix(g)?;
        if m.len() != 2 || m[0].len() != 2 || m[1].len() != 2 {
            return None;
        }
        Some((m[0][0], m[1][1]))
    }

    /// Replace the matrix for `g`, returning a new algorithm.
    pub fn with_matrix(&self, g: &GroupId, matrix: Vec<Vec<f64>>) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(id, m)| {
                if id == g {
                    (id.clone(), matrix.clone())
                } else {
                    (id.clone(), m.clone())
                }
            })
            .collect();
        StochasticAlgorithm { entries }
    }

    pub fn entries(&self) -> &[(GroupId, Vec<Vec<f64>>)] {
        &self.entries
    }
}

/// Type distribution F_g over the real line.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TypeDistribution {
    /// Uniform on `[lo, hi]`. Lacks full support; audits flag it.
    Uniform { lo: f64, hi: f64 },
    Logistic { location: f64, scale: f64 },
    Normal { mean: f64, std_dev: f64 },
}

impl TypeDistribution {
    pub fn cdf(&self, t: f64) -> f64 {
        match self {
            TypeDistribution::Uniform { lo, hi } => {
                if t <= *lo {
                    0.0
                } else if t >= *hi {
                    1.0
                } else {
                    (t - lo) / (hi - lo)
                }
            }
            TypeDistribution::Logistic { location, scale } => {
                math::logistic_cdf(t, *location, *scale)
            }
            TypeDistribution::Normal { mean, std_dev } => {
                math::normal_cdf((t - mean) / std_dev)
            }
        }
    }

    pub fn quantile(&self, p: f64) -> f64 {
        match self {
            TypeDistribution::Uniform { lo, hi } => lo + p * (hi - lo),
            TypeDistribution::Logistic { location, scale } => {
                math::logistic_quantile(p, *location, *scale)
            }
            TypeDistribution::Normal { mean, std_dev } => {
                mean + std_dev * math::normal_quantile(p)
            }
        }
    }

    /// Whether the distribution has full support on the real line.
    pub fn full_support(&self) -> bool {
        !matches!(self, TypeDistribution::Uniform { .. })
    }
}

/// Affine-in-type payoff `base + slope * t`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AffinePayoff {
    pub base: f64,
    pub slope: f64,
}

impl AffinePayoff {
    pub const ZERO: AffinePayoff = AffinePayoff { base: 0.0, slope: 0.0 };

    pub fn constant(c: f64) -> Self {
        AffinePayoff { base: c, slope: 0.0 }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.base + self.slope * t
    }
}

/// Error payoffs for the normalized binary family: `false_negative` is the
/// payoff when the behavior is 1 but the decision is 0, `false_positive` the
/// payoff when the behavior is 0 but the decision is 1. Correct outcomes pay
/// zero.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErrorPayoffs {
    pub false_negative: f64,
    pub false_positive: f64,
}

/// Payoff u(beta, d, t, g), restricted to tables affine in the type t.
///
/// Per-group vectors align with `Scenario::groups` order.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PreferenceModel {
    /// Binary error payoffs, possibly group-dependent.
    NormalizedError { per_group: Vec<ErrorPayoffs> },
    /// `u(beta, d, t) = reward * d - t * beta`; binary, group-independent.
    Separable { reward: f64 },
    /// Full affine table `per_group[g][beta][d]`.
    AffineTable { per_group: Vec<Vec<Vec<AffinePayoff>>> },
}

impl PreferenceModel {
    /// The affine coefficients of u(beta, d, ., g).
    pub fn affine(&self, g: usize, beta: usize, d: usize) -> AffinePayoff {
        match self {
            PreferenceModel::NormalizedError { per_group } => {
                let e = per_group[g];
                match (beta, d) {
                    (1, 0) => AffinePayoff::constant(e.false_negative),
                    (0, 1) => AffinePayoff::constant(e.false_positive),
                    _ => AffinePayoff::ZERO,
                }
            }
            PreferenceModel::Separable { reward } => AffinePayoff {
                base: reward * d as f64,
                slope: -(beta as f64),
            },
            PreferenceModel::AffineTable { per_group } => per_group[g][beta][d],
        }
    }

    pub fn payoff(&self, g: usize, beta: usize, d: usize, t: f64) -> f64 {
        self.affine(g, beta, d).eval(t)
    }

    /// Whether a well-defined type-dependent best response exists, as
    /// required for endogenous prevalence.
    pub fn supports_endogenous(&self) -> bool {
        matches!(
            self,
            PreferenceModel::Separable { .. } | PreferenceModel::AffineTable { .. }
        )
    }
}

/// How a group's behavior distribution is determined.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PrevalenceMode {
    /// Fixed distribution over behaviors (length k, sums to 1).
    Exogenous(Vec<f64>),
    /// Behavior distribution is the population best response to the algorithm.
    Endogenous,
}

impl PrevalenceMode {
    /// Binary shorthand: `pi = Pr[beta = 1]`.
    pub fn exogenous_binary(pi: f64) -> Self {
        PrevalenceMode::Exogenous(vec![1.0 - pi, pi])
    }
}

/// One group of a scenario.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupSpec {
    pub id: GroupId,
    pub distribution: TypeDistribution,
    pub signal: SignalModel,
    pub prevalence: PrevalenceMode,
    /// Ex-post weight w_g > 0 used by prejudice freeness.
    pub ex_post_weight: f64,
}

/// Complete problem instance.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Scenario {
    /// Common cardinality of behaviors, signals, and decisions.
    pub k: usize,
    pub groups: Vec<GroupSpec>,
    pub preferences: PreferenceModel,
    pub algorithm: StochasticAlgorithm,
    /// Optional per-group ex-post weight tables `w_g(d, beta)` (rows d,
    /// columns beta). When absent, prejudice freeness uses the scalar
    /// `ex_post_weight` on the behavior with index 1.
    pub ex_post_weight_tables: Option<Vec<Vec<Vec<f64>>>>,
    /// Indifference tolerance for argmax sets.
    pub tie_epsilon: f64,
}

/// A single invariant violation, with a path to the offending field.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Violation {
    pub path: String,
    pub message: String,
}

/// Rejected input for constructor-style operations.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("{name} = {value} outside domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("unknown group {0}")]
    UnknownGroup(String),
}

fn in_unit(x: f64) -> bool {
    x.is_finite() && (0.0..=1.0).contains(&x)
}

fn check_row_stochastic(rows: &[Vec<f64>], k: usize, path: &str, out: &mut Vec<Violation>) {
    if rows.len() != k {
        out.push(Violation {
            path: path.to_string(),
            message: format!("expected {k} rows, found {}", rows.len()),
        });
        return;
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != k {
            out.push(Violation {
                path: format!("{path}[{i}]"),
                message: format!("expected {k} entries, found {}", row.len()),
            });
            continue;
        }
        let mut sum = 0.0;
        for (j, &v) in row.iter().enumerate() {
            if !in_unit(v) {
                out.push(Violation {
                    path: format!("{path}[{i}][{j}]"),
                    message: format!("entry {v} not a probability"),
                });
            }
            sum += v;
        }
        if libm::fabs(sum - 1.0) > STRUCT_TOL {
            out.push(Violation {
                path: format!("{path}[{i}]"),
                message: format!("row not stochastic: sums to {sum}"),
            });
        }
    }
}

impl Scenario {
    /// Index of a group by id.
    pub fn group_index(&self, id: &GroupId) -> Option<usize> {
        self.groups.iter().position(|g| &g.id == id)
    }

    pub fn group(&self, g: usize) -> &GroupSpec {
        &self.groups[g]
    }

    /// Decision matrix for group index `g` (assumes a validated scenario).
    pub fn decision_matrix(&self, g: usize) -> &Vec<Vec<f64>> {
        self.algorithm
            .matrix(&self.groups[g].id)
            .expect("algorithm entry for every scenario group")
    }

    /// Binary `(delta0, delta1)` for group index `g`.
    pub fn binary_deltas(&self, g: usize) -> (f64, f64) {
        self.algorithm
            .binary_deltas(&self.groups[g].id)
            .expect("binary algorithm entry")
    }

    /// Pr[d | beta, g]: the signal-marginalized decision distribution.
    pub fn decision_given_behavior(&self, g: usize, beta: usize, d: usize) -> f64 {
        let mat = self.decision_matrix(g);
        let signal = &self.groups[g].signal;
        (0..self.k).map(|s| signal.prob(beta, s) * mat[s][d]).sum()
    }

    /// Ex-post weight table entry w_g(d, beta), applying the scalar default.
    pub fn ex_post_weight(&self, g: usize, d: usize, beta: usize) -> f64 {
        match &self.ex_post_weight_tables {
            Some(tables) => tables[g][d][beta],
            None => {
                if beta == 1 {
                    self.groups[g].ex_post_weight
                } else {
                    0.0
                }
            }
        }
    }

    /// Collect every invariant violation. An empty result means the scenario
    /// is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.k;

        if k < 2 {
            out.push(Violation {
                path: "k".to_string(),
                message: format!("k = {k} but at least 2 is required"),
            });
        }
        if self.groups.is_empty() {
            out.push(Violation {
                path: "groups".to_string(),
                message: "at least one group is required".to_string(),
            });
        }
        if !(self.tie_epsilon.is_finite() && self.tie_epsilon > 0.0) {
            out.push(Violation {
                path: "tie_epsilon".to_string(),
                message: format!("tie epsilon {} must be positive", self.tie_epsilon),
            });
        }

        for (i, g) in self.groups.iter().enumerate() {
            let path = format!("groups[{i}]({})", g.id);
            if self.groups.iter().filter(|h| h.id == g.id).count() > 1 {
                out.push(Violation {
                    path: format!("{path}.id"),
                    message: "duplicate group label".to_string(),
                });
            }

            match &g.signal {
                SignalModel::SymmetricBinary { phi } => {
                    if k != 2 {
                        out.push(Violation {
                            path: format!("{path}.signal"),
                            message: "symmetric binary signal requires k = 2".to_string(),
                        });
                    }
                    if !(phi.is_finite() && (0.5..=1.0).contains(phi)) {
                        out.push(Violation {
                            path: format!("{path}.signal.phi"),
                            message: format!("phi = {phi} below 1/2 or above 1"),
                        });
                    }
                }
                SignalModel::AsymmetricBinary { phi0, phi1 } => {
                    if k != 2 {
                        out.push(Violation {
                            path: format!("{path}.signal"),
                            message: "asymmetric binary signal requires k = 2".to_string(),
                        });
                    }
                    for (name, v) in [("phi0", phi0), ("phi1", phi1)] {
                        if !in_unit(*v) {
                            out.push(Violation {
                                path: format!("{path}.signal.{name}"),
                                message: format!("{name} = {v} not a probability"),
                            });
                        }
                    }
                }
                SignalModel::General { rows } => {
                    check_row_stochastic(rows, k, &format!("{path}.signal"), &mut out);
                }
            }

            match &g.prevalence {
                PrevalenceMode::Exogenous(dist) => {
                    if dist.len() != k {
                        out.push(Violation {
                            path: format!("{path}.prevalence"),
                            message: format!(
                                "distribution over {} behaviors, expected {k}",
                                dist.len()
                            ),
                        });
                    } else {
                        let sum: f64 = dist.iter().sum();
                        if dist.iter().any(|v| !in_unit(*v)) || libm::fabs(sum - 1.0) > STRUCT_TOL
                        {
                            out.push(Violation {
                                path: format!("{path}.prevalence"),
                                message: format!("not a distribution (sum {sum})"),
                            });
                        }
                    }
                }
                PrevalenceMode::Endogenous => {
                    if !self.preferences.supports_endogenous() {
                        out.push(Violation {
                            path: format!("{path}.prevalence"),
                            message:
                                "endogenous prevalence requires separable or affine-table preferences"
                                    .to_string(),
                        });
                    }
                }
            }

            if !(g.ex_post_weight.is_finite() && g.ex_post_weight > 0.0) {
                out.push(Violation {
                    path: format!("{path}.ex_post_weight"),
                    message: format!("weight {} must be positive", g.ex_post_weight),
                });
            }

            match &g.distribution {
                TypeDistribution::Uniform { lo, hi } => {
                    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                        out.push(Violation {
                            path: format!("{path}.distribution"),
                            message: format!("uniform bounds [{lo}, {hi}] invalid"),
                        });
                    }
                }
                TypeDistribution::Logistic { scale, .. } => {
                    if !(scale.is_finite() && *scale > 0.0) {
                        out.push(Violation {
                            path: format!("{path}.distribution.scale"),
                            message: format!("scale {scale} must be positive"),
                        });
                    }
                }
                TypeDistribution::Normal { std_dev, .. } => {
                    if !(std_dev.is_finite() && *std_dev > 0.0) {
                        out.push(Violation {
                            path: format!("{path}.distribution.std_dev"),
                            message: format!("std_dev {std_dev} must be positive"),
                        });
                    }
                }
            }
        }

        // Algorithm: one matrix per scenario group, each row-stochastic.
        for g in &self.groups {
            match self.algorithm.matrix(&g.id) {
                Some(m) => {
                    check_row_stochastic(m, k, &format!("algorithm({})", g.id), &mut out)
                }
                None => out.push(Violation {
                    path: format!("algorithm({})", g.id),
                    message: "algorithm row not defined for this group".to_string(),
                }),
            }
        }
        for id in self.algorithm.groups() {
            if self.group_index(id).is_none() {
                out.push(Violation {
                    path: format!("algorithm({id})"),
                    message: "algorithm entry for a group not in the scenario".to_string(),
                });
            }
        }

        match &self.preferences {
            PreferenceModel::NormalizedError { per_group } => {
                if k != 2 {
                    out.push(Violation {
                        path: "preferences".to_string(),
                        message: "normalized error payoffs require k = 2".to_string(),
                    });
                }
                if per_group.len() != self.groups.len() {
                    out.push(Violation {
                        path: "preferences.per_group".to_string(),
                        message: format!(
                            "{} payoff entries for {} groups",
                            per_group.len(),
                            self.groups.len()
                        ),
                    });
                }
                for (i, e) in per_group.iter().enumerate() {
                    if !e.false_negative.is_finite() || !e.false_positive.is_finite() {
                        out.push(Violation {
                            path: format!("preferences.per_group[{i}]"),
                            message: "payoff not finite".to_string(),
                        });
                    }
                }
            }
            PreferenceModel::Separable { reward } => {
                if k != 2 {
                    out.push(Violation {
                        path: "preferences".to_string(),
                        message: "separable preferences require k = 2".to_string(),
                    });
                }
                if !reward.is_finite() {
                    out.push(Violation {
                        path: "preferences.reward".to_string(),
                        message: "reward not finite".to_string(),
                    });
                }
            }
            PreferenceModel::AffineTable { per_group } => {
                if per_group.len() != self.groups.len() {
                    out.push(Violation {
                        path: "preferences.per_group".to_string(),
                        message: format!(
                            "{} tables for {} groups",
                            per_group.len(),
                            self.groups.len()
                        ),
                    });
                }
                for (gi, table) in per_group.iter().enumerate() {
                    if table.len() != k || table.iter().any(|row| row.len() != k) {
                        out.push(Violation {
                            path: format!("preferences.per_group[{gi}]"),
                            message: format!("table is not {k} x {k}"),
                        });
                        continue;
                    }
                    for row in table {
                        for cell in row {
                            if !cell.base.is_finite() || !cell.slope.is_finite() {
                                out.push(Violation {
                                    path: format!("preferences.per_group[{gi}]"),
                                    message: "payoff coefficients not finite".to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }

        if let Some(tables) = &self.ex_post_weight_tables {
            if tables.len() != self.groups.len() {
                out.push(Violation {
                    path: "ex_post_weight_tables".to_string(),
                    message: format!(
                        "{} tables for {} groups",
                        tables.len(),
                        self.groups.len()
                    ),
                });
            }
            for (gi, table) in tables.iter().enumerate() {
                if table.len() != k || table.iter().any(|row| row.len() != k) {
                    out.push(Violation {
                        path: format!("ex_post_weight_tables[{gi}]"),
                        message: format!("table is not {k} x {k}"),
                    });
                } else if table.iter().flatten().any(|v| !v.is_finite()) {
                    out.push(Violation {
                        path: format!("ex_post_weight_tables[{gi}]"),
                        message: "weight not finite".to_string(),
                    });
                }
            }
        }

        out
    }

    /// Groups whose type distribution lacks full support.
    pub fn groups_without_full_support(&self) -> Vec<GroupId> {
        self.groups
            .iter()
            .filter(|g| !g.distribution.full_support())
            .map(|g| g.id.clone())
            .collect()
    }
}

/// One-group binary scenario with the stated prevalence, signal accuracy, and
/// algorithm match probabilities. Preferences are a zero placeholder.
pub fn canonical_binary(pi: f64, phi: f64, delta0: f64, delta1: f64) -> Result<Scenario, ModelError> {
    for (name, v, lo) in [
        ("pi", pi, 0.0),
        ("phi", phi, 0.5),
        ("delta0", delta0, 0.0),
        ("delta1", delta1, 0.0),
    ] {
        if !(v.is_finite() && v >= lo && v <= 1.0) {
            return Err(ModelError::OutOfDomain {
                name,
                value: v,
                domain: if lo == 0.5 { "[1/2, 1]" } else { "[0, 1]" },
            });
        }
    }
    let id = GroupId::new("G");
    Ok(Scenario {
        k: 2,
        groups: vec![GroupSpec {
            id: id.clone(),
            distribution: TypeDistribution::Logistic { location: 0.0, scale: 1.0 },
            signal: SignalModel::SymmetricBinary { phi },
            prevalence: PrevalenceMode::exogenous_binary(pi),
            ex_post_weight: 1.0,
        }],
        preferences: PreferenceModel::NormalizedError {
            per_group: vec![ErrorPayoffs { false_negative: 0.0, false_positive: 0.0 }],
        },
        algorithm: StochasticAlgorithm::from_binary_deltas(&[(id, delta0, delta1)]),
        ex_post_weight_tables: None,
        tie_epsilon: TIE_EPS,
    })
}

/// Convenience constructor for two-group binary scenarios, used heavily by
/// the verification suites and tests.
#[allow(clippy::too_many_arguments)]
pub fn two_group_binary(
    phi: (f64, f64),
    deltas: ((f64, f64), (f64, f64)),
    prevalence: (PrevalenceMode, PrevalenceMode),
    distributions: (TypeDistribution, TypeDistribution),
    preferences: PreferenceModel,
    weights: (f64, f64),
) -> Scenario {
    let x = GroupId::new("X");
    let y = GroupId::new("Y");
    Scenario {
        k: 2,
        groups: vec![
            GroupSpec {
                id: x.clone(),
                distribution: distributions.0,
                signal: SignalModel::SymmetricBinary { phi: phi.0 },
                prevalence: prevalence.0,
                ex_post_weight: weights.0,
            },
            GroupSpec {
                id: y.clone(),
                distribution: distributions.1,
                signal: SignalModel::SymmetricBinary { phi: phi.1 },
                prevalence: prevalence.1,
                ex_post_weight: weights.1,
            },
        ],
        preferences,
        algorithm: StochasticAlgorithm::from_binary_deltas(&[
            (x, deltas.0 .0, deltas.0 .1),
            (y, deltas.1 .0, deltas.1 .1),
        ]),
        ex_post_weight_tables: None,
        tie_epsilon: TIE_EPS,
    }
}
