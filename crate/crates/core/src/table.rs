//! Core data types for tables, labels and extraction outputs, plus the
//! line-delimited JSON dataset format.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance used when checking that a material's percentages sum to 100.
pub const SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table {id}: empty grid")]
    EmptyGrid { id: String },
    #[error("table {id}: ragged grid (row {row} has {got} cells, expected {expected})")]
    RaggedGrid {
        id: String,
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("table {id}: row_labels length {got} does not match {expected} rows")]
    RowLabelMismatch {
        id: String,
        got: usize,
        expected: usize,
    },
    #[error("table {id}: col_labels length {got} does not match {expected} columns")]
    ColLabelMismatch {
        id: String,
        got: usize,
        expected: usize,
    },
    #[error("table {id}: edge link endpoint ({row},{col}) outside the grid")]
    EdgeOutOfBounds { id: String, row: usize, col: usize },
    #[error("{path}:{line}: {source}")]
    Record {
        path: String,
        line: usize,
        #[source]
        source: Box<TableError>,
    },
    #[error("{path}:{line}: malformed record: {message}")]
    Malformed {
        path: String,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Four-way label for a row or column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum RowColLabel {
    Other = 0,
    Composition = 1,
    Constituent = 2,
    Id = 3,
}

impl RowColLabel {
    pub const ALL: [RowColLabel; 4] = [
        RowColLabel::Other,
        RowColLabel::Composition,
        RowColLabel::Constituent,
        RowColLabel::Id,
    ];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(RowColLabel::Other),
            1 => Some(RowColLabel::Composition),
            2 => Some(RowColLabel::Constituent),
            3 => Some(RowColLabel::Id),
            _ => None,
        }
    }
}

impl Serialize for RowColLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.code())
    }
}

impl<'de> Deserialize<'de> for RowColLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let code = u8::deserialize(d)?;
        RowColLabel::from_code(code)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid row/col label code {code}")))
    }
}

/// The four table styles the pipeline distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableType {
    /// Non-composition table.
    NC,
    /// Single-cell composition: one expression per cell.
    SCC,
    /// Multi-cell composition, complete information in the table.
    #[serde(rename = "MCC_CI")]
    MccCi,
    /// Multi-cell composition, partial information (caption/text needed).
    #[serde(rename = "MCC_PI")]
    MccPi,
}

impl fmt::Display for TableType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableType::NC => "NC",
            TableType::SCC => "SCC",
            TableType::MccCi => "MCC_CI",
            TableType::MccPi => "MCC_PI",
        };
        f.write_str(s)
    }
}

/// Percentage unit. Fractions are normalized to percent before storage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    MolePercent,
    WeightPercent,
}

impl Unit {
    pub fn as_str(self) -> &'static str {
        match self {
            Unit::MolePercent => "mol%",
            Unit::WeightPercent => "wt%",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Unit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Unit {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "mol%" => Ok(Unit::MolePercent),
            "wt%" => Ok(Unit::WeightPercent),
            other => Err(serde::de::Error::custom(format!("unknown unit {other:?}"))),
        }
    }
}

/// One extracted record: (material id, constituent, percentage, unit).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositionTuple {
    pub material_id: String,
    pub constituent: String,
    pub percentage: f64,
    pub unit: Unit,
}

impl CompositionTuple {
    pub fn new(
        material_id: impl Into<String>,
        constituent: impl Into<String>,
        percentage: f64,
        unit: Unit,
    ) -> Self {
        Self {
            material_id: material_id.into(),
            constituent: constituent.into(),
            percentage,
            unit,
        }
    }
}

/// Cell coordinate, `(row, col)`, zero-based.
pub type Coord = (usize, usize);

/// Gold annotation attached to a table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableAnnotation {
    pub table_type: TableType,
    pub row_labels: Vec<RowColLabel>,
    pub col_labels: Vec<RowColLabel>,
    /// Maps a percentage cell to the constituent/variable cell it refers to.
    #[serde(with = "edge_links_serde", default)]
    pub edge_links: BTreeMap<Coord, Coord>,
    pub gold_tuples: Vec<CompositionTuple>,
}

mod edge_links_serde {
    use super::Coord;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Coord, Coord>, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[[usize; 2]; 2]> = m
            .iter()
            .map(|(&(a, b), &(c, d))| [[a, b], [c, d]])
            .collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Coord, Coord>, D::Error> {
        let pairs = Vec::<[[usize; 2]; 2]>::deserialize(d)?;
        Ok(pairs
            .into_iter()
            .map(|[[a, b], [c, d]]| ((a, b), (c, d)))
            .collect())
    }
}

/// An R x C grid of cell texts with caption, footer and nearby paper text.
///
/// Cell texts are stored verbatim; whitespace trimming happens only in
/// content comparisons (e.g. the max-frequency feature).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct Table {
    id: String,
    cells: Vec<Vec<String>>,
    caption: String,
    footer: String,
    paper_text: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    id: String,
    cells: Vec<Vec<String>>,
    #[serde(default)]
    caption: String,
    #[serde(default)]
    footer: String,
    #[serde(default)]
    paper_text: Vec<String>,
}

impl TryFrom<RawTable> for Table {
    type Error = TableError;
    fn try_from(raw: RawTable) -> Result<Self, TableError> {
        Table::new(raw.id, raw.cells, raw.caption, raw.footer, raw.paper_text)
    }
}

impl From<Table> for RawTable {
    fn from(t: Table) -> Self {
        RawTable {
            id: t.id,
            cells: t.cells,
            caption: t.caption,
            footer: t.footer,
            paper_text: t.paper_text,
        }
    }
}

impl Table {
    pub fn new(
        id: impl Into<String>,
        cells: Vec<Vec<String>>,
        caption: impl Into<String>,
        footer: impl Into<String>,
        paper_text: Vec<String>,
    ) -> Result<Self, TableError> {
        let id = id.into();
        if cells.is_empty() || cells[0].is_empty() {
            return Err(TableError::EmptyGrid { id });
        }
        let expected = cells[0].len();
        for (row, r) in cells.iter().enumerate() {
            if r.len() != expected {
                return Err(TableError::RaggedGrid {
                    id,
                    row,
                    got: r.len(),
                    expected,
                });
            }
        }
        Ok(Self {
            id,
            cells,
            caption: caption.into(),
            footer: footer.into(),
            paper_text,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells[0].len()
    }

    pub fn cell(&self, i: usize, j: usize) -> &str {
        &self.cells[i][j]
    }

    pub fn cells(&self) -> &[Vec<String>] {
        &self.cells
    }

    pub fn caption(&self) -> &str {
        &self.caption
    }

    pub fn footer(&self) -> &str {
        &self.footer
    }

    pub fn paper_text(&self) -> &[String] {
        &self.paper_text
    }

    /// Swaps rows and columns. Transposing twice is the identity.
    pub fn transposed(&self) -> Table {
        let (r, c) = (self.rows(), self.cols());
        let mut cells = vec![vec![String::new(); r]; c];
        for i in 0..r {
            for j in 0..c {
                cells[j][i] = self.cells[i][j].clone();
            }
        }
        Table {
            id: self.id.clone(),
            cells,
            caption: self.caption.clone(),
            footer: self.footer.clone(),
            paper_text: self.paper_text.clone(),
        }
    }
}

impl TableAnnotation {
    pub fn validate_against(&self, table: &Table) -> Result<(), TableError> {
        if self.row_labels.len() != table.rows() {
            return Err(TableError::RowLabelMismatch {
                id: table.id().to_string(),
                got: self.row_labels.len(),
                expected: table.rows(),
            });
        }
        if self.col_labels.len() != table.cols() {
            return Err(TableError::ColLabelMismatch {
                id: table.id().to_string(),
                got: self.col_labels.len(),
                expected: table.cols(),
            });
        }
        for (&(si, sj), &(ti, tj)) in &self.edge_links {
            for &(i, j) in &[(si, sj), (ti, tj)] {
                if i >= table.rows() || j >= table.cols() {
                    return Err(TableError::EdgeOutOfBounds {
                        id: table.id().to_string(),
                        row: i,
                        col: j,
                    });
                }
            }
        }
        Ok(())
    }

    /// Transposes the annotation: swaps row and column labels and flips
    /// every edge coordinate.
    pub fn transposed(&self) -> TableAnnotation {
        TableAnnotation {
            table_type: self.table_type,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            edge_links: self
                .edge_links
                .iter()
                .map(|(&(a, b), &(c, d))| ((b, a), (d, c)))
                .collect(),
            gold_tuples: self.gold_tuples.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DatasetRecord {
    #[serde(flatten)]
    table: Table,
    #[serde(skip_serializing_if = "Option::is_none")]
    annotation: Option<TableAnnotation>,
}

/// Loads a line-delimited dataset. Each line is a JSON object
/// `{id, cells, caption, footer, paper_text, annotation?}`.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Vec<(Table, Option<TableAnnotation>)>, TableError> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    let display = path.display().to_string();
    let mut out = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: DatasetRecord =
            serde_json::from_str(&line).map_err(|e| TableError::Malformed {
                path: display.clone(),
                line: idx + 1,
                message: e.to_string(),
            })?;
        if let Some(ann) = &record.annotation {
            ann.validate_against(&record.table)
                .map_err(|e| TableError::Record {
                    path: display.clone(),
                    line: idx + 1,
                    source: Box::new(e),
                })?;
        }
        out.push((record.table, record.annotation));
    }
    Ok(out)
}

/// Writes a dataset in the same line-delimited format `load_dataset` reads.
pub fn save_dataset(
    path: impl AsRef<Path>,
    records: &[(Table, Option<TableAnnotation>)],
) -> Result<(), TableError> {
    let mut file = std::fs::File::create(path)?;
    for (table, annotation) in records {
        let record = DatasetRecord {
            table: table.clone(),
            annotation: annotation.clone(),
        };
        serde_json::to_writer(&mut file, &record).map_err(std::io::Error::from)?;
        file.write_all(b"\n")?;
    }
    Ok(())
}

/// One extraction result line: `{table_id, table_type, tuples, row_labels?, col_labels?}`.
///
/// The optional label fields let the evaluator count constraint violations
/// on the predicted labeling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtractionRecord {
    pub table_id: String,
    pub table_type: TableType,
    pub tuples: Vec<CompositionTuple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_labels: Option<Vec<RowColLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_labels: Option<Vec<RowColLabel>>,
}

pub fn load_extractions(path: impl AsRef<Path>) -> Result<Vec<ExtractionRecord>, TableError> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    let display = path.display().to_string();
    let mut out = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: ExtractionRecord =
            serde_json::from_str(&line).map_err(|e| TableError::Malformed {
                path: display.clone(),
                line: idx + 1,
                message: e.to_string(),
            })?;
        out.push(record);
    }
    Ok(out)
}

pub fn save_extractions(
    path: impl AsRef<Path>,
    records: &[ExtractionRecord],
) -> Result<(), TableError> {
    let mut file = std::fs::File::create(path)?;
    for record in records {
        serde_json::to_writer(&mut file, record).map_err(std::io::Error::from)?;
        file.write_all(b"\n")?;
    }
    Ok(())
}

/// Per-material issue found by `validate_tuples`.
#[derive(Debug, Clone, PartialEq)]
pub enum TupleIssue {
    SumDeviation { material_id: String, sum: f64 },
    DuplicateConstituent { material_id: String, constituent: String },
    NonPositivePercentage { material_id: String, constituent: String, percentage: f64 },
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub issues: Vec<TupleIssue>,
    /// Material id -> sum of its percentages.
    pub sums: BTreeMap<String, f64>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks the output contract: positive percentages, distinct constituents
/// per material, per-material sums of 100 within `SUM_TOLERANCE`.
pub fn validate_tuples(tuples: &[CompositionTuple]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for t in tuples {
        *report.sums.entry(t.material_id.clone()).or_insert(0.0) += t.percentage;
        if t.percentage <= 0.0 {
            report.issues.push(TupleIssue::NonPositivePercentage {
                material_id: t.material_id.clone(),
                constituent: t.constituent.clone(),
                percentage: t.percentage,
            });
        }
        let entry = seen.entry(&t.material_id).or_default();
        if entry.contains(&t.constituent.as_str()) {
            report.issues.push(TupleIssue::DuplicateConstituent {
                material_id: t.material_id.clone(),
                constituent: t.constituent.clone(),
            });
        } else {
            entry.push(&t.constituent);
        }
    }
    for (id, &sum) in &report.sums {
        if (sum - 100.0).abs() > SUM_TOLERANCE {
            report.issues.push(TupleIssue::SumDeviation {
                material_id: id.clone(),
                sum,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn rejects_ragged_grid() {
        let err = Table::new(
            "t",
            vec![
                vec!["a".into(), "b".into(), "c".into(), "d".into()],
                vec!["e".into(), "f".into(), "g".into()],
            ],
            "",
            "",
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, TableError::RaggedGrid { row: 1, got: 3, expected: 4, .. }));
    }

    #[test]
    fn rejects_empty_grid() {
        assert!(Table::new("t", vec![], "", "", vec![]).is_err());
        assert!(Table::new("t", vec![vec![]], "", "", vec![]).is_err());
    }

    #[test]
    fn transpose_is_involution_and_swaps_labels() {
        let t = Table::new("t", grid(&[&["a", "b", "c"], &["d", "e", "f"]]), "cap", "", vec![]).unwrap();
        assert_eq!(t.transposed().transposed(), t);
        assert_eq!(t.transposed().cell(2, 1), "f");

        let ann = TableAnnotation {
            table_type: TableType::MccCi,
            row_labels: vec![RowColLabel::Other, RowColLabel::Composition],
            col_labels: vec![RowColLabel::Id, RowColLabel::Constituent, RowColLabel::Constituent],
            edge_links: [((1, 1), (0, 1))].into_iter().collect(),
            gold_tuples: vec![],
        };
        let tr = ann.transposed();
        assert_eq!(tr.row_labels, ann.col_labels);
        assert_eq!(tr.col_labels, ann.row_labels);
        assert_eq!(tr.edge_links.get(&(1, 1)), Some(&(1, 0)));
        assert_eq!(tr.transposed(), ann);
    }

    #[test]
    fn dataset_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.jsonl");
        let t = Table::new(
            "t1",
            grid(&[&["Sample", "SiO2"], &["A1", "100"]]),
            "Compositions (mol%)",
            "",
            vec!["body sentence".into()],
        )
        .unwrap();
        let ann = TableAnnotation {
            table_type: TableType::MccCi,
            row_labels: vec![RowColLabel::Other, RowColLabel::Composition],
            col_labels: vec![RowColLabel::Id, RowColLabel::Constituent],
            edge_links: [((1, 1), (0, 1))].into_iter().collect(),
            gold_tuples: vec![CompositionTuple::new("A1", "SiO2", 100.0, Unit::MolePercent)],
        };
        let records = vec![(t.clone(), Some(ann)), (t, None)];
        save_dataset(&path, &records).unwrap();
        let loaded = load_dataset(&path).unwrap();
        assert_eq!(loaded, records);
    }

    #[test]
    fn minimal_unannotated_record() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("one.jsonl");
        std::fs::write(
            &path,
            "{\"id\":\"t\",\"cells\":[[\"a\",\"b\"],[\"c\",\"d\"]],\"caption\":\"\",\"footer\":\"\",\"paper_text\":[]}\n",
        )
        .unwrap();
        let loaded = load_dataset(&path).unwrap();
        assert_eq!(loaded.len(), 1);
        assert!(loaded[0].1.is_none());
        assert_eq!(loaded[0].0.rows(), 2);
    }

    #[test]
    fn ragged_record_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(
            &path,
            "{\"id\":\"t\",\"cells\":[[\"a\",\"b\",\"c\",\"d\"],[\"e\",\"f\",\"g\"]]}\n",
        )
        .unwrap();
        let err = load_dataset(&path).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(":1"), "missing line number: {msg}");
        assert!(msg.to_lowercase().contains("ragged"), "unexpected: {msg}");
    }

    #[test]
    fn annotation_length_mismatch_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad_ann.jsonl");
        std::fs::write(
            &path,
            "{\"id\":\"t\",\"cells\":[[\"a\",\"b\"],[\"c\",\"d\"]],\"annotation\":{\"table_type\":\"NC\",\"row_labels\":[0],\"col_labels\":[0,0],\"edge_links\":[],\"gold_tuples\":[]}}\n",
        )
        .unwrap();
        let err = load_dataset(&path).unwrap_err();
        assert!(err.to_string().contains("row_labels"));
    }

    #[test]
    fn validate_tuples_clean_material() {
        let tuples = vec![
            CompositionTuple::new("A1", "MoO3", 5.0, Unit::MolePercent),
            CompositionTuple::new("A1", "Fe2O3", 38.0, Unit::MolePercent),
            CompositionTuple::new("A1", "P2O5", 57.0, Unit::MolePercent),
        ];
        assert!(validate_tuples(&tuples).is_clean());
    }

    #[test]
    fn validate_tuples_single_constituent() {
        let tuples = vec![CompositionTuple::new("X", "SiO2", 100.0, Unit::MolePercent)];
        assert!(validate_tuples(&tuples).is_clean());
    }

    #[test]
    fn validate_tuples_flags_duplicates() {
        let tuples = vec![
            CompositionTuple::new("X", "SiO2", 60.0, Unit::MolePercent),
            CompositionTuple::new("X", "SiO2", 40.0, Unit::MolePercent),
        ];
        let report = validate_tuples(&tuples);
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, TupleIssue::DuplicateConstituent { .. })));
    }

    #[test]
    fn validate_tuples_flags_bad_sum_and_sign() {
        let tuples = vec![
            CompositionTuple::new("X", "SiO2", 90.0, Unit::MolePercent),
            CompositionTuple::new("Y", "B2O3", -1.0, Unit::WeightPercent),
        ];
        let report = validate_tuples(&tuples);
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, TupleIssue::SumDeviation { .. })));
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, TupleIssue::NonPositivePercentage { .. })));
    }
}
