//! Shared predicate-report machinery: every fairness check returns a verdict,
//! a worst-case residual, the witness achieving it, and a record of skipped
//! comparisons.

use alloc::string::String;
use alloc::vec::Vec;

use crate::model::GroupId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    Satisfied,
    Violated,
    /// Every comparison was skipped (unreachable decisions, single group).
    Vacuous,
}

impl Verdict {
    /// Whether the predicate does not fail: satisfied or vacuous.
    pub fn passes(&self) -> bool {
        !matches!(self, Verdict::Violated)
    }
}

/// The comparison achieving the worst residual.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub group_a: GroupId,
    pub group_b: GroupId,
    /// Where the gap occurs: behavior/decision cell, probe type, weight, ...
    pub location: String,
    pub value_a: f64,
    pub value_b: f64,
}

/// A comparison that could not be made and why.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Skip {
    pub location: String,
    pub reason: String,
}

/// Verdict + residual + witness for one fairness predicate.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PredicateReport {
    pub predicate: String,
    pub verdict: Verdict,
    /// Worst absolute deviation across all quantified comparisons.
    pub residual: f64,
    pub tolerance: f64,
    pub witness: Option<Witness>,
    pub skipped: Vec<Skip>,
    /// Alternative readings computed alongside the primary one.
    pub extra_verdicts: Vec<(String, Verdict)>,
    /// Free-form qualifications (prevalence source, convention choices).
    pub notes: Vec<String>,
}

impl PredicateReport {
    pub fn satisfied(&self) -> bool {
        self.verdict == Verdict::Satisfied
    }

    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// Accumulates pairwise comparisons into a report.
pub struct ReportBuilder {
    predicate: String,
    tolerance: f64,
    residual: f64,
    witness: Option<Witness>,
    skipped: Vec<Skip>,
    compared: usize,
    extra_verdicts: Vec<(String, Verdict)>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(predicate: impl Into<String>, tolerance: f64) -> Self {
        ReportBuilder {
            predicate: predicate.into(),
            tolerance,
            residual: 0.0,
            witness: None,
            skipped: Vec::new(),
            compared: 0,
            extra_verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Record a two-sided comparison; the deviation is `|a - b|`.
    pub fn compare(
        &mut self,
        group_a: &GroupId,
        group_b: &GroupId,
        location: impl Into<String>,
        value_a: f64,
        value_b: f64,
    ) {
        self.observe(group_a, group_b, location, value_a, value_b, libm::fabs(value_a - value_b));
    }

    /// Record a one-sided comparison; the deviation is the shortfall
    /// `max(0, b - a)` of `a` below `b`.
    pub fn require_at_least(
        &mut self,
        group_a: &GroupId,
        group_b: &GroupId,
        location: impl Into<String>,
        value_a: f64,
        value_b: f64,
    ) {
        self.observe(group_a, group_b, location, value_a, value_b, (value_b - value_a).max(0.0));
    }

    /// Record a raw deviation with its witness values.
    pub fn observe(
        &mut self,
        group_a: &GroupId,
        group_b: &GroupId,
        location: impl Into<String>,
        value_a: f64,
        value_b: f64,
        deviation: f64,
    ) {
        self.compared += 1;
        if deviation > self.residual {
            self.residual = deviation;
            self.witness = Some(Witness {
                group_a: group_a.clone(),
                group_b: group_b.clone(),
                location: location.into(),
                value_a,
                value_b,
            });
        }
    }

    pub fn skip(&mut self, location: impl Into<String>, reason: impl Into<String>) {
        self.skipped.push(Skip {
            location: location.into(),
            reason: reason.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extra_verdict(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.extra_verdicts.push((name.into(), verdict));
    }

    pub fn compared(&self) -> usize {
        self.compared
    }

    pub fn current_residual(&self) -> f64 {
        self.residual
    }

    pub fn finish(self) -> PredicateReport {
        let verdict = if self.compared == 0 {
            Verdict::Vacuous
        } else if self.residual <= self.tolerance {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        };
        PredicateReport {
            predicate: self.predicate,
            verdict,
            residual: self.residual,
            tolerance: self.tolerance,
            witness: self.witness,
            skipped: self.skipped,
            extra_verdicts: self.extra_verdicts,
            notes: self.notes,
        }
    }
}

/// Ordered pairs (i, j) with i < j over `n` groups.
pub(crate) fn group_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}
