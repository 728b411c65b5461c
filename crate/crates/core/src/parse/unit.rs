//! Unit resolution: search for unit keywords in expanding Chebyshev rings
//! around a cell, then the caption, then the footer. Mole percent is the
//! default.

use std::sync::LazyLock;

use regex::Regex;

use crate::table::{Coord, Table, Unit};

static WEIGHT_RE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\bwt\.?\s*%?|\bweight\b|\bmass\b").unwrap());
static MOLE_RE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\bmol(?:e|ar)?\b|\bat\.?\s*%").unwrap());
static FRACTION_RE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?i)\bfraction\b").unwrap());

/// Unit plus a hint that the source spoke of fractions, in which case
/// numbers summing to about 1 are to be read as fractions of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitResolution {
    pub unit: Unit,
    pub fraction: bool,
}

impl Default for UnitResolution {
    fn default() -> Self {
        UnitResolution {
            unit: Unit::MolePercent,
            fraction: false,
        }
    }
}

/// Earliest unit keyword in `text`, if any.
fn unit_keyword(text: &str) -> Option<Unit> {
    let weight = WEIGHT_RE.find(text).map(|m| m.start());
    let mole = MOLE_RE.find(text).map(|m| m.start());
    match (weight, mole) {
        (Some(w), Some(m)) => Some(if w <= m { Unit::WeightPercent } else { Unit::MolePercent }),
        (Some(_), None) => Some(Unit::WeightPercent),
        (None, Some(_)) => Some(Unit::MolePercent),
        (None, None) => None,
    }
}

/// Resolves the unit for the composition in `cell`. Sources are scanned in
/// order: the cell's own text, rings of increasing Chebyshev distance
/// (row-major within a ring), the caption, the footer. The first source
/// with a unit keyword decides; the fraction flag is sticky across all
/// sources scanned up to that point.
pub fn resolve_unit(table: &Table, cell: Coord) -> UnitResolution {
    let (ci, cj) = cell;
    let (rows, cols) = (table.rows(), table.cols());
    assert!(ci < rows && cj < cols, "cell outside grid");

    let mut fraction = false;
    let mut scan = |text: &str| -> Option<Unit> {
        if FRACTION_RE.is_match(text) {
            fraction = true;
        }
        unit_keyword(text)
    };

    let max_d = [ci, rows - 1 - ci, cj, cols - 1 - cj]
        .into_iter()
        .max()
        .unwrap();
    for d in 0..=max_d {
        let i_lo = ci.saturating_sub(d);
        let i_hi = (ci + d).min(rows - 1);
        let j_lo = cj.saturating_sub(d);
        let j_hi = (cj + d).min(cols - 1);
        for i in i_lo..=i_hi {
            for j in j_lo..=j_hi {
                let dist = (ci.abs_diff(i)).max(cj.abs_diff(j));
                if dist != d {
                    continue;
                }
                if let Some(unit) = scan(table.cell(i, j)) {
                    return UnitResolution { unit, fraction };
                }
            }
        }
    }
    if let Some(unit) = scan(table.caption()) {
        return UnitResolution { unit, fraction };
    }
    if let Some(unit) = scan(table.footer()) {
        return UnitResolution { unit, fraction };
    }
    UnitResolution {
        unit: Unit::MolePercent,
        fraction,
    }
}
