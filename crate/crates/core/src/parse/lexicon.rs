//! Compound lexicon used to pre-label chemical formulas in cell text.

use std::collections::BTreeSet;
use std::io::{BufRead, BufReader};
use std::path::Path;

/// The 118 element symbols.
pub const ELEMENT_SYMBOLS: [&str; 118] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn",
    "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
];

/// Compounds commonly found in glass and alloy composition tables. Used as
/// the default lexicon when none is supplied.
const DEFAULT_COMPOUNDS: &[&str] = &[
    "SiO2", "B2O3", "P2O5", "Al2O3", "GeO2", "TeO2", "As2O3", "Sb2O3", "Bi2O3", "V2O5", "Nb2O5",
    "Ta2O5", "MoO3", "WO3", "TiO2", "ZrO2", "HfO2", "SnO", "SnO2", "PbO", "PbO2", "ZnO", "CdO",
    "CuO", "Cu2O", "NiO", "CoO", "Co3O4", "MnO", "MnO2", "Cr2O3", "Fe2O3", "FeO", "Fe3O4",
    "Li2O", "Na2O", "K2O", "Rb2O", "Cs2O", "Ag2O", "Tl2O", "BeO", "MgO", "CaO", "SrO", "BaO",
    "Y2O3", "La2O3", "CeO2", "Ce2O3", "Pr2O3", "Nd2O3", "Sm2O3", "Eu2O3", "Gd2O3", "Tb2O3",
    "Dy2O3", "Ho2O3", "Er2O3", "Tm2O3", "Yb2O3", "Lu2O3", "Sc2O3", "Ga2O3", "In2O3", "GeS2",
    "Ga2S3", "As2S3", "Sb2S3", "La2S3", "GeSe2", "As2Se3", "Sb2Se3", "ZnS", "ZnSe", "CdS",
    "CdSe", "AgI", "AgCl", "AgBr", "CuI", "CuCl", "TlCl", "NaCl", "KCl", "NaF", "LiF", "KF",
    "CsBr", "CsCl", "CsI", "RbBr", "CaF2", "MgF2", "BaF2", "SrF2", "PbF2", "AlF3", "ZrF4",
    "LaF3", "YF3", "NaBr", "KBr", "LiCl", "Li2SO4", "Na2SO4", "K2SO4", "Li3PO4", "Na3PO4",
    "AgPO3", "NaPO3", "Ca3(PO4)2", "Na2CO3", "Li2CO3", "K2CO3", "CaCO3",
];

/// Set of canonical compound formulas with longest-match-first lookup, plus
/// the element symbol alphabet.
#[derive(Debug, Clone)]
pub struct CompoundLexicon {
    /// Sorted longest-first, ties alphabetical, no duplicates.
    entries: Vec<String>,
    entry_set: BTreeSet<String>,
    elements: BTreeSet<&'static str>,
}

impl CompoundLexicon {
    pub fn new(entries: impl IntoIterator<Item = String>) -> Self {
        let entry_set: BTreeSet<String> = entries
            .into_iter()
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let mut entries: Vec<String> = entry_set.iter().cloned().collect();
        entries.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Self {
            entries,
            entry_set,
            elements: ELEMENT_SYMBOLS.iter().copied().collect(),
        }
    }

    /// Built-in glass-chemistry lexicon.
    pub fn default_lexicon() -> Self {
        Self::new(DEFAULT_COMPOUNDS.iter().map(|s| s.to_string()))
    }

    /// Reads a newline-delimited formula list. Blank lines and `#` comments
    /// are skipped.
    pub fn from_file(path: impl AsRef<Path>) -> std::io::Result<Self> {
        let file = std::fs::File::open(path)?;
        let mut entries = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            entries.push(trimmed.to_string());
        }
        Ok(Self::new(entries))
    }

    /// Restricts the lexicon to the given formulas (used by the distant
    /// labeler, which only trusts compounds known for the paper at hand).
    pub fn restricted_to<'a>(&self, formulas: impl IntoIterator<Item = &'a str>) -> Self {
        let wanted: BTreeSet<&str> = formulas.into_iter().collect();
        Self::new(
            self.entries
                .iter()
                .filter(|e| wanted.contains(e.as_str()))
                .cloned(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|s| s.as_str())
    }

    pub fn contains(&self, formula: &str) -> bool {
        self.entry_set.contains(formula)
    }

    pub fn is_element(&self, symbol: &str) -> bool {
        self.elements.contains(symbol)
    }

    /// Longest lexicon entry starting exactly at `text[pos..]`.
    pub fn longest_match_at<'t>(&self, text: &'t str, pos: usize) -> Option<&'t str> {
        let rest = &text[pos..];
        self.entries
            .iter()
            .find(|e| rest.starts_with(e.as_str()))
            .map(|e| &text[pos..pos + e.len()])
    }
}

/// Scans `text` left to right reporting non-overlapping compound matches,
/// longest match first at each position. Spans are byte ranges.
pub fn lex_compounds<'t>(
    text: &'t str,
    lexicon: &CompoundLexicon,
) -> Vec<(std::ops::Range<usize>, &'t str)> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        if !text.is_char_boundary(pos) {
            pos += 1;
            continue;
        }
        if let Some(m) = lexicon.longest_match_at(text, pos) {
            out.push((pos..pos + m.len(), m));
            pos += m.len();
        } else {
            pos += text[pos..].chars().next().map_or(1, |c| c.len_utf8());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_spec_expression() {
        let lexicon = CompoundLexicon::default_lexicon();
        let matches = lex_compounds("40Bi2O3 * 60B2O3", &lexicon);
        assert_eq!(matches, vec![(2..7, "Bi2O3"), (12..16, "B2O3")]);
    }

    #[test]
    fn no_compound_no_match() {
        let lexicon = CompoundLexicon::default_lexicon();
        assert!(lex_compounds("hardness (GPa)", &lexicon).is_empty());
    }

    #[test]
    fn adjacent_matches() {
        let lexicon = CompoundLexicon::new(["SiO2".to_string()]);
        let matches = lex_compounds("SiO2SiO2", &lexicon);
        assert_eq!(matches, vec![(0..4, "SiO2"), (4..8, "SiO2")]);
    }

    #[test]
    fn longest_match_wins() {
        let lexicon = CompoundLexicon::new(["SnO".to_string(), "SnO2".to_string()]);
        let matches = lex_compounds("SnO2", &lexicon);
        assert_eq!(matches, vec![(0..4, "SnO2")]);
    }

    #[test]
    fn element_symbols_present() {
        let lexicon = CompoundLexicon::default_lexicon();
        assert!(lexicon.is_element("Mo"));
        assert!(lexicon.is_element("Og"));
        assert!(!lexicon.is_element("Xx"));
    }

    #[test]
    fn restriction_filters() {
        let lexicon = CompoundLexicon::default_lexicon();
        let restricted = lexicon.restricted_to(["SiO2", "B2O3"]);
        assert_eq!(restricted.len(), 2);
        assert!(restricted.contains("SiO2"));
        assert!(!restricted.contains("P2O5"));
    }
}
