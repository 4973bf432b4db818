//! Multi-criteria scoring, payoff and regret tables, expected value, and
//! diagnostics for probability and possibility distributions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::matrix::Matrix;
use crate::relation::{nary_combine, FuzzySoftSet};
use crate::set::FuzzySet;
use crate::tnorm::TNorm;

/// Tolerance on the total mass of a probability distribution.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-6;

/// One parameter of one named fuzzy soft set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Criterion {
    pub set: String,
    pub parameter: String,
}

impl Criterion {
    pub fn new(set: impl Into<String>, parameter: impl Into<String>) -> Self {
        Criterion {
            set: set.into(),
            parameter: parameter.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionQuery {
    pub criteria: Vec<Criterion>,
    pub combiner: TNorm,
}

impl DecisionQuery {
    pub fn new(criteria: Vec<Criterion>, combiner: TNorm) -> Result<Self> {
        if criteria.is_empty() {
            return Err(Error::Empty("criteria"));
        }
        Ok(DecisionQuery { criteria, combiner })
    }

    fn resolve<'a>(&self, sets: &'a [FuzzySoftSet]) -> Result<Vec<&'a FuzzySet>> {
        self.criteria
            .iter()
            .map(|c| {
                sets.iter()
                    .find(|s| s.name() == c.set)
                    .ok_or_else(|| Error::UnknownSet(c.set.clone()))?
                    .get(&c.parameter)
            })
            .collect()
    }
}

/// Resolves every criterion and combines the resulting fuzzy sets with the
/// query's t-norm.
pub fn score_alternatives(sets: &[FuzzySoftSet], query: &DecisionQuery) -> Result<FuzzySet> {
    let members = query.resolve(sets)?;
    nary_combine(&members, query.combiner)
}

/// Labels in non-increasing score order; equal scores keep universe order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    entries: Vec<(String, Grade)>,
}

impl Ranking {
    pub fn entries(&self) -> &[(String, Grade)] {
        &self.entries
    }

    pub fn winner(&self) -> (&str, Grade) {
        let (label, grade) = &self.entries[0];
        (label, *grade)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn rank(scores: &FuzzySet) -> Result<Ranking> {
    if scores.is_empty() {
        return Err(Error::Empty("universe"));
    }
    let mut entries: Vec<(String, Grade)> =
        scores.iter().map(|(l, g)| (l.to_string(), g)).collect();
    // Stable sort, so ties stay in universe order.
    entries.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("grades are never NaN"));
    Ok(Ranking { entries })
}

/// The highest-scoring label, the earliest one on ties.
pub fn select_best(scores: &FuzzySet) -> Result<(String, Grade)> {
    let mut best: Option<(&str, Grade)> = None;
    for (label, grade) in scores.iter() {
        if best.is_none_or(|(_, g)| grade > g) {
            best = Some((label, grade));
        }
    }
    best.map(|(l, g)| (l.to_string(), g))
        .ok_or(Error::Empty("universe"))
}

/// Outcomes `p_ij` of action `j` in state `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffTable {
    states: Vec<String>,
    actions: Vec<String>,
    payoffs: Matrix<f64>,
}

impl PayoffTable {
    pub fn new(states: Vec<String>, actions: Vec<String>, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        if payoffs.len() != states.len() {
            return Err(Error::LengthMismatch {
                expected: states.len(),
                found: payoffs.len(),
            });
        }
        if let Some(row) = payoffs.iter().find(|r| r.len() != actions.len()) {
            return Err(Error::LengthMismatch {
                expected: actions.len(),
                found: row.len(),
            });
        }
        let payoffs = if states.is_empty() {
            Matrix::filled(0, actions.len(), 0.0)
        } else {
            Matrix::from_rows(payoffs)?
        };
        Ok(PayoffTable {
            states,
            actions,
            payoffs,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn payoffs(&self) -> &Matrix<f64> {
        &self.payoffs
    }

    pub fn get(&self, state: usize, action: usize) -> f64 {
        self.payoffs.get(state, action)
    }
}

/// Opportunity loss: each entry subtracted from its row maximum.
pub fn regret_table(p: &PayoffTable) -> PayoffTable {
    let regrets = Matrix::from_fn(p.payoffs.rows(), p.payoffs.cols(), |i, j| {
        let best = p
            .payoffs
            .row(i)
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        best - p.payoffs.get(i, j)
    });
    PayoffTable {
        states: p.states.clone(),
        actions: p.actions.clone(),
        payoffs: regrets,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedValues {
    pub values: Vec<f64>,
    /// Index of the largest value, the earliest on ties.
    pub winner: usize,
}

/// `probability × value` per option.
pub fn expected_value(options: &[(f64, f64)]) -> Result<ExpectedValues> {
    if options.is_empty() {
        return Err(Error::Empty("option list"));
    }
    let values = options
        .iter()
        .map(|&(p, v)| {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::ProbabilityOutOfRange(p));
            }
            Ok(p * v)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut winner = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[winner] {
            winner = i;
        }
    }
    Ok(ExpectedValues { values, winner })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProbabilityViolation {
    OutOfRange { index: usize, value: f64 },
    Sum { total: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVerdict {
    pub total: f64,
    pub violations: Vec<ProbabilityViolation>,
}

impl ProbabilityVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every entry must lie in `[0, 1]` and the entries must sum to 1 within
/// [`PROBABILITY_SUM_TOLERANCE`].
pub fn validate_probability(d: &[f64]) -> ProbabilityVerdict {
    let mut violations: Vec<ProbabilityViolation> = d
        .iter()
        .enumerate()
        .filter(|(_, v)| !(0.0..=1.0).contains(*v))
        .map(|(index, &value)| ProbabilityViolation::OutOfRange { index, value })
        .collect();
    let total: f64 = d.iter().sum();
    // Written so a NaN total counts as a violation.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !((total - 1.0).abs() <= PROBABILITY_SUM_TOLERANCE) {
        violations.push(ProbabilityViolation::Sum { total });
    }
    ProbabilityVerdict { total, violations }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceViolation {
    pub index: usize,
    pub probability: f64,
    pub possibility: Grade,
}

/// Indices where the possibility falls below the probability.
pub fn possibility_dominance(prob: &[f64], poss: &[Grade]) -> Result<Vec<DominanceViolation>> {
    if prob.len() != poss.len() {
        return Err(Error::LengthMismatch {
            expected: prob.len(),
            found: poss.len(),
        });
    }
    Ok(prob
        .iter()
        .zip(poss)
        .enumerate()
        .filter(|(_, (&p, g))| g.value() < p)
        .map(|(index, (&probability, &possibility))| DominanceViolation {
            index,
            probability,
            possibility,
        })
        .collect())
}
