//! Binary polarity evaluation: confusion matrix, accuracy and macro-averaged
//! precision, recall and F1.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scorer::Polarity;

/// Counts laid out as rows = predicted, columns = gold, with `Positive`
/// as the positive class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    /// predicted Positive, gold Positive
    pub true_pos: u64,
    /// predicted Positive, gold Negative
    pub false_pos: u64,
    /// predicted Negative, gold Positive
    pub false_neg: u64,
    /// predicted Negative, gold Negative
    pub true_neg: u64,
}

impl ConfusionMatrix {
    /// Builds a matrix from cells in table order: (pred+/gold+, pred+/gold-,
    /// pred-/gold+, pred-/gold-).
    pub fn from_cells(pp_tp: u64, pp_tn: u64, pn_tp: u64, pn_tn: u64) -> Self {
        ConfusionMatrix {
            true_pos: pp_tp,
            false_pos: pp_tn,
            false_neg: pn_tp,
            true_neg: pn_tn,
        }
    }

    pub fn total(&self) -> u64 {
        self.true_pos + self.false_pos + self.false_neg + self.true_neg
    }

    pub fn record(&mut self, predicted: Polarity, gold: Polarity) {
        match (predicted, gold) {
            (Polarity::Positive, Polarity::Positive) => self.true_pos += 1,
            (Polarity::Positive, Polarity::Negative) => self.false_pos += 1,
            (Polarity::Negative, Polarity::Positive) => self.false_neg += 1,
            (Polarity::Negative, Polarity::Negative) => self.true_neg += 1,
        }
    }

    /// The same matrix with the roles of the two classes exchanged.
    pub fn swapped(&self) -> Self {
        ConfusionMatrix {
            true_pos: self.true_neg,
            false_pos: self.false_neg,
            false_neg: self.false_pos,
            true_neg: self.true_pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

impl ClassMetrics {
    fn new(hits: u64, predicted: u64, actual: u64) -> Self {
        let precision = ratio(hits, predicted);
        let recall = ratio(hits, actual);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        ClassMetrics {
            precision,
            recall,
            f1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub matrix: ConfusionMatrix,
    pub accuracy: f64,
    pub macro_f1: f64,
    pub macro_precision: f64,
    pub macro_recall: f64,
    pub positive: ClassMetrics,
    pub negative: ClassMetrics,
}

impl EvalReport {
    pub fn from_matrix(matrix: ConfusionMatrix) -> Result<Self> {
        let total = matrix.total();
        if total == 0 {
            return Err(Error::EmptyMatrix);
        }
        let m = &matrix;
        let positive = ClassMetrics::new(m.true_pos, m.true_pos + m.false_pos, m.true_pos + m.false_neg);
        let negative = ClassMetrics::new(m.true_neg, m.false_neg + m.true_neg, m.false_pos + m.true_neg);
        Ok(EvalReport {
            matrix,
            accuracy: ratio(m.true_pos + m.true_neg, total),
            macro_f1: (positive.f1 + negative.f1) / 2.0,
            macro_precision: (positive.precision + negative.precision) / 2.0,
            macro_recall: (positive.recall + negative.recall) / 2.0,
            positive,
            negative,
        })
    }

    pub fn headline(&self) -> Headline {
        Headline {
            accuracy: self.accuracy,
            macro_f1: self.macro_f1,
        }
    }
}

/// Accuracy and macro F1 as fractions in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Headline {
    pub accuracy: f64,
    pub macro_f1: f64,
}

/// Candidate minus baseline, in percentage points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Deltas {
    pub accuracy: f64,
    pub macro_f1: f64,
}

pub fn compare_headlines(candidate: Headline, baseline: Headline) -> Deltas {
    Deltas {
        accuracy: 100.0 * (candidate.accuracy - baseline.accuracy),
        macro_f1: 100.0 * (candidate.macro_f1 - baseline.macro_f1),
    }
}

pub fn compare_reports(candidate: &EvalReport, baseline: &EvalReport) -> Deltas {
    compare_headlines(candidate.headline(), baseline.headline())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledExample {
    pub id: String,
    pub text: String,
    pub gold: Polarity,
}

/// Joins predictions to gold labels by id. Prediction ids must be a
/// permutation of the gold ids.
pub fn evaluate_run(predictions: &[(String, Polarity)], gold: &[LabeledExample]) -> Result<EvalReport> {
    let gold_by_id: HashMap<&str, Polarity> = gold.iter().map(|g| (g.id.as_str(), g.gold)).collect();

    let mut seen = HashSet::new();
    let mut extra = Vec::new();
    let mut matrix = ConfusionMatrix::default();
    for (id, predicted) in predictions {
        match gold_by_id.get(id.as_str()) {
            Some(g) if seen.insert(id.as_str()) => matrix.record(*predicted, *g),
            _ => extra.push(id.clone()),
        }
    }
    let missing: Vec<String> = gold
        .iter()
        .filter(|g| !seen.contains(g.id.as_str()))
        .map(|g| g.id.clone())
        .collect();
    if !missing.is_empty() || !extra.is_empty() || gold_by_id.len() != gold.len() {
        return Err(Error::IdMismatch { missing, extra });
    }
    EvalReport::from_matrix(matrix)
}
