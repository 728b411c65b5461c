//! Coefficient normalization: scale every nesting level to 100 and multiply
//! down the tree, so a parsed expression becomes a percentage map.

use std::collections::BTreeMap;

use thiserror::Error;

use super::expr::ExprError;
use super::grammar::{CompositionNode, ParsedComposition};
use crate::table::Unit;

#[derive(Debug, Error, PartialEq)]
pub enum NormalizeError {
    #[error("negative coefficient {0}")]
    NegativeCoefficient(f64),
    #[error("coefficients sum to zero")]
    ZeroTotal,
    #[error("coefficient is not finite")]
    NonFinite,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Percentages per constituent, summing to 100. `raw_sum` keeps the
/// top-level coefficient sum before scaling (e.g. 104.5 for a dopant
/// expression); the unit defaults to mole percent until resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedComposition {
    pub percentages: BTreeMap<String, f64>,
    pub raw_sum: f64,
    pub unit: Unit,
}

impl NormalizedComposition {
    pub fn with_unit(mut self, unit: Unit) -> Self {
        self.unit = unit;
        self
    }
}

/// Evaluates coefficients under `assignment`, scales each group level to
/// sum 100 independently and multiplies down the tree. Constituents that
/// repeat across branches are summed; zero-coefficient branches are
/// dropped (percentages must stay positive).
pub fn normalize(
    parsed: &ParsedComposition,
    assignment: &BTreeMap<char, f64>,
) -> Result<NormalizedComposition, NormalizeError> {
    let mut percentages = BTreeMap::new();
    let raw_sum = distribute(&parsed.children, assignment, 1.0, &mut percentages)?;
    Ok(NormalizedComposition {
        percentages,
        raw_sum,
        unit: Unit::MolePercent,
    })
}

/// Distributes `scale` (a fraction of the whole) over `nodes` proportionally
/// to their coefficients. Returns the unscaled coefficient sum of this level.
fn distribute(
    nodes: &[CompositionNode],
    assignment: &BTreeMap<char, f64>,
    scale: f64,
    out: &mut BTreeMap<String, f64>,
) -> Result<f64, NormalizeError> {
    let mut values = Vec::with_capacity(nodes.len());
    for node in nodes {
        let v = node.coefficient().eval(assignment)?;
        if !v.is_finite() {
            return Err(NormalizeError::NonFinite);
        }
        if v < 0.0 {
            return Err(NormalizeError::NegativeCoefficient(v));
        }
        values.push(v);
    }
    let total: f64 = values.iter().sum();
    if total <= 0.0 {
        return Err(NormalizeError::ZeroTotal);
    }
    for (node, &v) in nodes.iter().zip(&values) {
        if v == 0.0 {
            continue;
        }
        let share = scale * (v / total);
        match node {
            CompositionNode::Leaf { compound, .. } => {
                *out.entry(compound.clone()).or_insert(0.0) += share * 100.0;
            }
            CompositionNode::Group { children, .. } => {
                distribute(children, assignment, share, out)?;
            }
        }
    }
    Ok(total)
}
